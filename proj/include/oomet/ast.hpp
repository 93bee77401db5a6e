#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace oomet {

struct SourceFile {
    std::string path;
    std::string content;  // UTF-8
};

// Closed set of syntactic constructs that add a decision point. `else`,
// `default:` and `finally` are deliberately not in it.
enum class DecisionKind {
    kIf,
    kLoop,     // for / while / do-while
    kCase,     // each case label
    kCatch,    // each catch clause
    kTernary,
    kAnd,      // &&
    kOr,       // ||
};

inline constexpr std::size_t kDecisionKindCount = 7;

inline constexpr std::array<DecisionKind, kDecisionKindCount> all_decision_kinds = {
    DecisionKind::kIf,     DecisionKind::kLoop, DecisionKind::kCase, DecisionKind::kCatch,
    DecisionKind::kTernary, DecisionKind::kAnd,  DecisionKind::kOr,
};

std::string_view decision_kind_name(DecisionKind k);
std::optional<DecisionKind> decision_kind_from_name(std::string_view name);

struct DecisionCounts {
    std::array<int, kDecisionKindCount> counts{};

    int& operator[](DecisionKind k) { return counts[static_cast<std::size_t>(k)]; }
    int operator[](DecisionKind k) const { return counts[static_cast<std::size_t>(k)]; }

    int total() const {
        int t = 0;
        for (int c : counts) t += c;
        return t;
    }

    bool operator==(const DecisionCounts&) const = default;
};

struct MethodDecl {
    std::string name;
    DecisionCounts decision_points;
    // Field names this method reads or writes: bare identifiers matching a
    // declared field (unless shadowed by a parameter/local), plus anything
    // reached through `this.x` / `super.x`, resolvable or not.
    std::set<std::string> accessed_fields;

    bool operator==(const MethodDecl&) const = default;
};

struct ClassDecl {
    std::string name;
    std::string qualified_name;  // package-qualified when a package header exists
    std::optional<std::string> parent_name;  // absent = root class
    std::vector<std::string> fields;         // declaration order
    std::vector<MethodDecl> methods;         // declaration order, constructors included
    std::string source_path;

    bool operator==(const ClassDecl&) const = default;
};

using Corpus = std::vector<ClassDecl>;  // sorted by qualified_name once assembled

nlohmann::json corpus_to_json(const Corpus& corpus);
Corpus corpus_from_json(const nlohmann::json& j);

}  // namespace oomet
