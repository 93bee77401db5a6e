#include "oomet/inheritance.hpp"

#include "oomet/errors.hpp"

namespace oomet {

namespace {

std::string package_of(const std::string& qualified_name) {
    const auto dot = qualified_name.rfind('.');
    return dot == std::string::npos ? std::string() : qualified_name.substr(0, dot);
}

std::string simple_name_of(const std::string& qualified_name) {
    const auto dot = qualified_name.rfind('.');
    return dot == std::string::npos ? qualified_name : qualified_name.substr(dot + 1);
}

}  // namespace

InheritanceGraph InheritanceGraph::build(const Corpus& corpus) {
    InheritanceGraph graph;
    std::map<std::string, std::vector<std::string>> by_simple_name;
    for (const ClassDecl& cls : corpus) {
        graph.nodes.insert(cls.qualified_name);
        by_simple_name[cls.name].push_back(cls.qualified_name);
    }

    for (const ClassDecl& cls : corpus) {
        if (!cls.parent_name) continue;
        const std::string& declared = *cls.parent_name;

        // Exact qualified match, then same package, then a corpus-wide
        // unique simple name. Ambiguous or absent -> external parent.
        std::string resolved;
        if (graph.nodes.count(declared)) {
            resolved = declared;
        } else if (declared.find('.') == std::string::npos) {
            const std::string pkg = package_of(cls.qualified_name);
            const std::string in_package = pkg.empty() ? declared : pkg + "." + declared;
            if (graph.nodes.count(in_package)) {
                resolved = in_package;
            } else if (auto it = by_simple_name.find(declared);
                       it != by_simple_name.end() && it->second.size() == 1) {
                resolved = it->second.front();
            }
        }

        if (resolved.empty())
            graph.external_parents.insert(declared);
        else if (resolved != cls.qualified_name)
            graph.parent_of[cls.qualified_name] = resolved;
        else
            graph.external_parents.insert(declared);  // self-extends: treat as unresolvable
    }
    return graph;
}

std::vector<std::string> InheritanceGraph::ancestors(const std::string& qualified_name) const {
    std::vector<std::string> chain;
    std::set<std::string> seen{qualified_name};
    std::string current = qualified_name;
    while (true) {
        const auto it = parent_of.find(current);
        if (it == parent_of.end()) break;
        current = it->second;
        if (!seen.insert(current).second) {
            std::string msg = "inheritance cycle: " + qualified_name;
            for (const std::string& link : chain) msg += " -> " + link;
            msg += " -> " + current;
            throw CycleError(msg);
        }
        chain.push_back(current);
    }
    return chain;
}

}  // namespace oomet
