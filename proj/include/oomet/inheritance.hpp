#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "oomet/ast.hpp"

namespace oomet {

// Parent/child relations resolved over a corpus. Parents declared but not
// present in the corpus land in external_parents and do not extend chains.
struct InheritanceGraph {
    std::set<std::string> nodes;                    // qualified names
    std::map<std::string, std::string> parent_of;   // child -> resolved parent
    std::set<std::string> external_parents;         // declared, unresolvable

    static InheritanceGraph build(const Corpus& corpus);

    // Corpus-resolvable ancestors, nearest parent first.
    // Throws CycleError when the parent chain revisits a node.
    std::vector<std::string> ancestors(const std::string& qualified_name) const;
};

}  // namespace oomet
