#pragma once

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "oomet/ast.hpp"
#include "oomet/inheritance.hpp"

namespace oomet {

struct MetricsRecord {
    std::string qualified_name;
    int wmc = 0;
    int iwmc = 0;
    int hcc = 0;   // always wmc + iwmc
    int dit = 1;
    double lcom = 1.0;
    int method_count = 0;

    bool operator==(const MetricsRecord&) const = default;
};

// Lookup of classes by qualified name over an assembled corpus.
class CorpusIndex {
  public:
    explicit CorpusIndex(const Corpus& corpus);
    const ClassDecl* find(const std::string& qualified_name) const;

  private:
    std::map<std::string, const ClassDecl*> by_name_;
};

// 1 + total decision points.
int cyclomatic_complexity(const MethodDecl& method);

// Sum of CC over the class's own declared methods, constructors included.
int wmc(const ClassDecl& cls);

// 1 + number of corpus-resolvable ancestors.
int dit(const std::string& qualified_name, const InheritanceGraph& graph);

// Sum of wmc over all transitive corpus-resolvable ancestors.
int iwmc(const std::string& qualified_name, const InheritanceGraph& graph,
         const CorpusIndex& index);

int hcc(const std::string& qualified_name, const InheritanceGraph& graph,
        const CorpusIndex& index);

// Henderson-Sellers cohesion deficit. 1.0 for the degenerate cases
// (fewer than two methods, or no fields).
double lcom(const ClassDecl& cls);

// One record per class, sorted by qualified name.
std::vector<MetricsRecord> compute_all(const Corpus& corpus);

// Header `name,wmc,dit,lcom,iwmc,hcc`; lcom with 4 decimals.
void write_metrics_csv(std::ostream& out, std::span<const MetricsRecord> records);

}  // namespace oomet
