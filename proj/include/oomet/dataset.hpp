#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oomet {

// Canonical feature order used everywhere downstream.
inline constexpr std::array<std::string_view, 5> kFeatureNames = {"wmc", "iwmc", "hcc",
                                                                  "lcom", "dit"};

// canonical column name -> name of the column in the CSV header.
struct ColumnMapping {
    std::map<std::string, std::string> names;

    static ColumnMapping defaults();
    const std::string& column_for(const std::string& canonical) const;
    // Applies `--map key=value` style overrides.
    void apply_overrides(const std::map<std::string, std::string>& overrides);
};

struct RawRow {
    std::string name;
    int wmc = 0;
    int dit = 0;
    double lcom = 0.0;
    std::optional<int> iwmc;
    std::optional<int> hcc;
    std::optional<int> bug;
    std::string source;  // provenance tag (dataset stem)

    bool operator==(const RawRow&) const = default;
};

struct IngestResult {
    std::vector<RawRow> rows;
    // One line per rejected row (HCC identity violations and the like).
    std::vector<std::string> diagnostics;
};

// Reads and types a Promise-style metrics CSV. Rows where the declared
// iwmc/hcc pair contradicts hcc = wmc + iwmc are rejected into diagnostics;
// the missing one of the pair is derived when only one is present.
IngestResult read_dataset(const std::filesystem::path& path, const ColumnMapping& mapping);

// Concatenation, provenance preserved, no dedup.
std::vector<RawRow> merge_datasets(std::span<const RawRow> a, std::span<const RawRow> b);

struct LabeledSample {
    std::string name;
    double wmc = 0.0;
    double iwmc = 0.0;
    double hcc = 0.0;
    double lcom = 0.0;
    double dit = 0.0;
    int label = 0;  // 0 = non-faulty, 1 = faulty

    bool operator==(const LabeledSample&) const = default;
};

double feature_value(const LabeledSample& sample, std::string_view feature);

struct StageCounts {
    std::size_t removed_no_inheritance = 0;
    std::size_t removed_unlabeled = 0;
    std::size_t remaining = 0;
};

struct PreprocessResult {
    std::vector<LabeledSample> samples;
    StageCounts stages;
};

// The paper's three-stage flow, in order: drop rows with hcc == wmc, drop
// unlabeled rows, binarize the bug count. Throws EmptyDatasetError when
// nothing survives.
PreprocessResult preprocess(std::span<const RawRow> rows);

struct DatasetSummary {
    std::size_t total = 0;
    std::size_t faulty = 0;
    std::size_t non_faulty = 0;
    double faulty_pct = 0.0;      // rounded to 2 decimals
    double non_faulty_pct = 0.0;  // rounded to 2 decimals
};

DatasetSummary summarize(std::span<const LabeledSample> samples);

// Header `name,wmc,iwmc,hcc,lcom,dit,bug`.
void write_samples_csv(std::ostream& out, std::span<const LabeledSample> samples);

}  // namespace oomet
