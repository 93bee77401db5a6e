#include "oomet/ast.hpp"

#include "oomet/errors.hpp"

namespace oomet {

namespace {

constexpr std::array<std::string_view, kDecisionKindCount> kKindNames = {
    "if", "loop", "case", "catch", "ternary", "and", "or",
};

}  // namespace

std::string_view decision_kind_name(DecisionKind k) {
    return kKindNames[static_cast<std::size_t>(k)];
}

std::optional<DecisionKind> decision_kind_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i)
        if (kKindNames[i] == name) return static_cast<DecisionKind>(i);
    return std::nullopt;
}

nlohmann::json corpus_to_json(const Corpus& corpus) {
    nlohmann::json out = nlohmann::json::array();
    for (const ClassDecl& cls : corpus) {
        nlohmann::json methods = nlohmann::json::array();
        for (const MethodDecl& m : cls.methods) {
            nlohmann::json points = nlohmann::json::object();
            for (DecisionKind k : all_decision_kinds)
                if (m.decision_points[k] > 0)
                    points[std::string(decision_kind_name(k))] = m.decision_points[k];
            methods.push_back({
                {"name", m.name},
                {"decision_points", points},
                {"accessed_fields", m.accessed_fields},
            });
        }
        nlohmann::json entry = {
            {"qualified_name", cls.qualified_name},
            {"parent_name", cls.parent_name ? nlohmann::json(*cls.parent_name)
                                            : nlohmann::json(nullptr)},
            {"fields", cls.fields},
            {"methods", methods},
            {"source_path", cls.source_path},
        };
        out.push_back(std::move(entry));
    }
    return out;
}

Corpus corpus_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw UsageError("corpus JSON: expected a top-level array");
    Corpus corpus;
    for (const auto& entry : j) {
        ClassDecl cls;
        cls.qualified_name = entry.at("qualified_name").get<std::string>();
        const auto dot = cls.qualified_name.rfind('.');
        cls.name = dot == std::string::npos ? cls.qualified_name
                                            : cls.qualified_name.substr(dot + 1);
        if (!entry.at("parent_name").is_null())
            cls.parent_name = entry.at("parent_name").get<std::string>();
        cls.fields = entry.at("fields").get<std::vector<std::string>>();
        if (entry.contains("source_path"))
            cls.source_path = entry.at("source_path").get<std::string>();
        for (const auto& jm : entry.at("methods")) {
            MethodDecl m;
            m.name = jm.at("name").get<std::string>();
            for (const auto& [key, value] : jm.at("decision_points").items()) {
                const auto kind = decision_kind_from_name(key);
                if (!kind) throw UsageError("corpus JSON: unknown decision kind '" + key + "'");
                m.decision_points[*kind] = value.get<int>();
            }
            m.accessed_fields = jm.at("accessed_fields").get<std::set<std::string>>();
            cls.methods.push_back(std::move(m));
        }
        corpus.push_back(std::move(cls));
    }
    return corpus;
}

}  // namespace oomet
