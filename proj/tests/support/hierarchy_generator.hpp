#pragma once

// Random corpus-model generator plus naive metric oracles. The oracles
// walk the declared structures directly (exact-name parent lookup, plain
// nested loops) and never touch InheritanceGraph or the metrics module.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "oomet/ast.hpp"

namespace oomet::testsupport {

// Classes C0..C{n-1}; parents point at earlier classes only, so the result
// is acyclic by construction. Some classes get external parents.
inline Corpus random_corpus(std::mt19937& rng, int class_count, int max_depth) {
    Corpus corpus;
    std::vector<int> depth(class_count, 1);
    auto pick = [&](std::size_t bound) { return bound == 0 ? 0 : rng() % bound; };

    for (int i = 0; i < class_count; ++i) {
        ClassDecl cls;
        cls.name = "C" + std::to_string(i);
        cls.qualified_name = cls.name;
        cls.source_path = "generated";

        const std::size_t roll = pick(10);
        if (i > 0 && roll < 6) {
            // try to attach to an earlier class below the depth cap
            const int parent = static_cast<int>(pick(static_cast<std::size_t>(i)));
            if (depth[parent] < max_depth) {
                cls.parent_name = "C" + std::to_string(parent);
                depth[i] = depth[parent] + 1;
            }
        } else if (roll == 6) {
            cls.parent_name = "External" + std::to_string(pick(3));
        }

        const int field_count = static_cast<int>(pick(5));
        for (int f = 0; f < field_count; ++f)
            cls.fields.push_back("field" + std::to_string(f));

        const int method_count = static_cast<int>(pick(6));
        for (int m = 0; m < method_count; ++m) {
            MethodDecl method;
            method.name = "m" + std::to_string(m);
            for (DecisionKind kind : all_decision_kinds)
                method.decision_points[kind] = static_cast<int>(pick(4));
            for (int f = 0; f < field_count; ++f)
                if (pick(2) == 0) method.accessed_fields.insert("field" + std::to_string(f));
            if (pick(4) == 0) method.accessed_fields.insert("inheritedOrUnknown");
            cls.methods.push_back(std::move(method));
        }
        corpus.push_back(std::move(cls));
    }
    return corpus;
}

// --- naive oracles -------------------------------------------------------

inline int oracle_cc(const MethodDecl& m) {
    int decisions = 0;
    for (int c : m.decision_points.counts) decisions += c;
    return 1 + decisions;
}

inline int oracle_wmc(const ClassDecl& cls) {
    int total = 0;
    for (const MethodDecl& m : cls.methods) total += oracle_cc(m);
    return total;
}

// Ancestor chain by repeated exact-name parent lookup.
inline std::vector<const ClassDecl*> oracle_ancestors(const Corpus& corpus,
                                                      const ClassDecl& cls) {
    std::map<std::string, const ClassDecl*> by_name;
    for (const ClassDecl& c : corpus) by_name[c.qualified_name] = &c;
    std::vector<const ClassDecl*> chain;
    const ClassDecl* current = &cls;
    while (current->parent_name) {
        const auto it = by_name.find(*current->parent_name);
        if (it == by_name.end()) break;
        current = it->second;
        chain.push_back(current);
        if (chain.size() > corpus.size()) break;  // cycle guard; tests use acyclic corpora
    }
    return chain;
}

inline int oracle_iwmc(const Corpus& corpus, const ClassDecl& cls) {
    int total = 0;
    for (const ClassDecl* ancestor : oracle_ancestors(corpus, cls))
        total += oracle_wmc(*ancestor);
    return total;
}

inline int oracle_dit(const Corpus& corpus, const ClassDecl& cls) {
    return 1 + static_cast<int>(oracle_ancestors(corpus, cls).size());
}

// Incidence-matrix evaluation of the Henderson-Sellers form.
inline double oracle_lcom(const ClassDecl& cls) {
    const int m = static_cast<int>(cls.methods.size());
    const int a = static_cast<int>(cls.fields.size());
    if (m <= 1 || a == 0) return 1.0;
    std::vector<std::vector<int>> incidence(m, std::vector<int>(a, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < a; ++j)
            incidence[i][j] = cls.methods[i].accessed_fields.count(cls.fields[j]) ? 1 : 0;
    double mu_sum = 0.0;
    for (int j = 0; j < a; ++j) {
        int mu = 0;
        for (int i = 0; i < m; ++i) mu += incidence[i][j];
        mu_sum += mu;
    }
    return (mu_sum / a - m) / (1.0 - m);
}

}  // namespace oomet::testsupport
