#pragma once

#include <vector>

#include "oomet/ast.hpp"

namespace oomet {

// Parses one source file of the Java-like subset into its class
// declarations, with decision-point counts and accessed-field sets
// populated per method. Pure and deterministic; throws SyntaxError /
// EncodingError on bad input.
std::vector<ClassDecl> parse_file(const SourceFile& file);

// Sorts by qualified name and rejects duplicates across files.
Corpus merge_classes(std::vector<ClassDecl> classes);

// parse_file over every input, then merge_classes.
Corpus build_corpus(const std::vector<SourceFile>& files);

}  // namespace oomet
