#include "oomet/metrics.hpp"

#include <algorithm>

#include "oomet/errors.hpp"
#include "oomet/util.hpp"

namespace oomet {

CorpusIndex::CorpusIndex(const Corpus& corpus) {
    for (const ClassDecl& cls : corpus) by_name_[cls.qualified_name] = &cls;
}

const ClassDecl* CorpusIndex::find(const std::string& qualified_name) const {
    const auto it = by_name_.find(qualified_name);
    return it == by_name_.end() ? nullptr : it->second;
}

int cyclomatic_complexity(const MethodDecl& method) {
    return 1 + method.decision_points.total();
}

int wmc(const ClassDecl& cls) {
    int total = 0;
    for (const MethodDecl& m : cls.methods) total += cyclomatic_complexity(m);
    return total;
}

int dit(const std::string& qualified_name, const InheritanceGraph& graph) {
    return 1 + static_cast<int>(graph.ancestors(qualified_name).size());
}

int iwmc(const std::string& qualified_name, const InheritanceGraph& graph,
         const CorpusIndex& index) {
    int total = 0;
    for (const std::string& ancestor : graph.ancestors(qualified_name)) {
        const ClassDecl* cls = index.find(ancestor);
        if (cls) total += wmc(*cls);
    }
    return total;
}

int hcc(const std::string& qualified_name, const InheritanceGraph& graph,
        const CorpusIndex& index) {
    const ClassDecl* cls = index.find(qualified_name);
    const int own = cls ? wmc(*cls) : 0;
    return own + iwmc(qualified_name, graph, index);
}

double lcom(const ClassDecl& cls) {
    const int m = static_cast<int>(cls.methods.size());
    const int a = static_cast<int>(cls.fields.size());
    if (m <= 1 || a == 0) return 1.0;

    // mu_j = number of methods touching the class's own field j; inherited
    // and unresolvable accesses do not participate.
    int mu_total = 0;
    for (const std::string& field : cls.fields) {
        for (const MethodDecl& method : cls.methods)
            if (method.accessed_fields.count(field)) ++mu_total;
    }
    const double avg_mu = static_cast<double>(mu_total) / a;
    return (avg_mu - m) / (1.0 - m);
}

std::vector<MetricsRecord> compute_all(const Corpus& corpus) {
    const InheritanceGraph graph = InheritanceGraph::build(corpus);
    const CorpusIndex index(corpus);

    std::vector<MetricsRecord> records;
    records.reserve(corpus.size());
    for (const ClassDecl& cls : corpus) {
        MetricsRecord rec;
        rec.qualified_name = cls.qualified_name;
        rec.wmc = wmc(cls);
        rec.iwmc = iwmc(cls.qualified_name, graph, index);
        rec.hcc = rec.wmc + rec.iwmc;
        rec.dit = dit(cls.qualified_name, graph);
        rec.lcom = lcom(cls);
        rec.method_count = static_cast<int>(cls.methods.size());
        records.push_back(std::move(rec));
    }
    std::sort(records.begin(), records.end(),
              [](const MetricsRecord& a, const MetricsRecord& b) {
                  return a.qualified_name < b.qualified_name;
              });
    return records;
}

void write_metrics_csv(std::ostream& out, std::span<const MetricsRecord> records) {
    out << "name,wmc,dit,lcom,iwmc,hcc\n";
    for (const MetricsRecord& r : records) {
        out << r.qualified_name << ',' << r.wmc << ',' << r.dit << ','
            << format_fixed(r.lcom, 4) << ',' << r.iwmc << ',' << r.hcc << '\n';
    }
}

}  // namespace oomet
