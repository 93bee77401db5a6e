#include "oomet/dataset.hpp"

#include <algorithm>
#include <charconv>

#include "oomet/csv.hpp"
#include "oomet/errors.hpp"
#include "oomet/util.hpp"

namespace oomet {

namespace {

std::string trimmed(std::string_view s) {
    const auto from = s.find_first_not_of(" \t");
    if (from == std::string_view::npos) return {};
    const auto to = s.find_last_not_of(" \t");
    return std::string(s.substr(from, to - from + 1));
}

int parse_int_cell(const std::string& cell, const char* column, std::size_t row_index,
                   const std::string& origin) {
    const std::string v = trimmed(cell);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw CellTypeError(origin + ": row " + std::to_string(row_index) + ": column '" +
                            column + "': '" + cell + "' is not an integer");
    return value;
}

double parse_real_cell(const std::string& cell, const char* column, std::size_t row_index,
                       const std::string& origin) {
    const std::string v = trimmed(cell);
    try {
        std::size_t used = 0;
        const double value = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return value;
    } catch (const std::exception&) {
        throw CellTypeError(origin + ": row " + std::to_string(row_index) + ": column '" +
                            column + "': '" + cell + "' is not a number");
    }
}

}  // namespace

ColumnMapping ColumnMapping::defaults() {
    ColumnMapping mapping;
    for (const char* c : {"name", "wmc", "dit", "lcom", "iwmc", "hcc", "bug"})
        mapping.names[c] = c;
    return mapping;
}

const std::string& ColumnMapping::column_for(const std::string& canonical) const {
    return names.at(canonical);
}

void ColumnMapping::apply_overrides(const std::map<std::string, std::string>& overrides) {
    for (const auto& [canonical, actual] : overrides) {
        if (!names.count(canonical))
            throw UsageError("unknown column key '" + canonical +
                             "' in mapping (expected one of name,wmc,dit,lcom,iwmc,hcc,bug)");
        names[canonical] = actual;
    }
}

IngestResult read_dataset(const std::filesystem::path& path, const ColumnMapping& mapping) {
    const CsvTable table = read_csv(path);
    const std::string origin = path.string();
    const std::string source = path.stem().string();

    auto required = [&](const std::string& canonical) {
        const int idx = table.column(mapping.column_for(canonical));
        if (idx < 0)
            throw MissingColumnError(origin + ": required column '" +
                                     mapping.column_for(canonical) + "' (" + canonical +
                                     ") not found in header");
        return idx;
    };
    const int col_name = required("name");
    const int col_wmc = required("wmc");
    const int col_dit = required("dit");
    const int col_lcom = required("lcom");
    const int col_iwmc = table.column(mapping.column_for("iwmc"));
    const int col_hcc = table.column(mapping.column_for("hcc"));
    const int col_bug = table.column(mapping.column_for("bug"));
    if (col_iwmc < 0 && col_hcc < 0)
        throw MissingColumnError(origin + ": need at least one of columns '" +
                                 mapping.column_for("iwmc") + "' (iwmc) or '" +
                                 mapping.column_for("hcc") + "' (hcc)");

    IngestResult result;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& cells = table.rows[r];
        const std::size_t row_index = r + 1;  // 1-based, header excluded
        auto cell = [&](int idx) -> std::string {
            return idx >= 0 && idx < static_cast<int>(cells.size()) ? cells[idx]
                                                                    : std::string();
        };

        RawRow row;
        row.source = source;
        row.name = cell(col_name);
        row.wmc = parse_int_cell(cell(col_wmc), "wmc", row_index, origin);
        row.dit = parse_int_cell(cell(col_dit), "dit", row_index, origin);
        row.lcom = parse_real_cell(cell(col_lcom), "lcom", row_index, origin);

        const std::string iwmc_text = trimmed(cell(col_iwmc));
        const std::string hcc_text = trimmed(cell(col_hcc));
        if (!iwmc_text.empty())
            row.iwmc = parse_int_cell(iwmc_text, "iwmc", row_index, origin);
        if (!hcc_text.empty())
            row.hcc = parse_int_cell(hcc_text, "hcc", row_index, origin);

        const std::string bug_text = trimmed(cell(col_bug));
        if (!bug_text.empty()) {
            const int bug = parse_int_cell(bug_text, "bug", row_index, origin);
            if (bug < 0)
                throw CellTypeError(origin + ": row " + std::to_string(row_index) +
                                    ": bug count must be non-negative, got " + bug_text);
            row.bug = bug;
        }

        // hcc = wmc + iwmc: derive the missing side, reject contradictions.
        if (row.iwmc && row.hcc) {
            if (*row.hcc != row.wmc + *row.iwmc) {
                result.diagnostics.push_back(
                    origin + ": row " + std::to_string(row_index) + " ('" + row.name +
                    "'): hcc=" + std::to_string(*row.hcc) + " != wmc+iwmc=" +
                    std::to_string(row.wmc + *row.iwmc) + "; row rejected");
                continue;
            }
        } else if (row.iwmc) {
            row.hcc = row.wmc + *row.iwmc;
        } else if (row.hcc) {
            row.iwmc = *row.hcc - row.wmc;
        } else {
            result.diagnostics.push_back(origin + ": row " + std::to_string(row_index) +
                                         " ('" + row.name +
                                         "'): both iwmc and hcc empty; row rejected");
            continue;
        }
        if (*row.iwmc < 0) {
            result.diagnostics.push_back(origin + ": row " + std::to_string(row_index) +
                                         " ('" + row.name +
                                         "'): negative inherited complexity (iwmc=" +
                                         std::to_string(*row.iwmc) + "); row rejected");
            continue;
        }

        result.rows.push_back(std::move(row));
    }
    return result;
}

std::vector<RawRow> merge_datasets(std::span<const RawRow> a, std::span<const RawRow> b) {
    std::vector<RawRow> merged;
    merged.reserve(a.size() + b.size());
    merged.insert(merged.end(), a.begin(), a.end());
    merged.insert(merged.end(), b.begin(), b.end());
    return merged;
}

double feature_value(const LabeledSample& sample, std::string_view feature) {
    if (feature == "wmc") return sample.wmc;
    if (feature == "iwmc") return sample.iwmc;
    if (feature == "hcc") return sample.hcc;
    if (feature == "lcom") return sample.lcom;
    if (feature == "dit") return sample.dit;
    throw Error("unknown feature '" + std::string(feature) + "'");
}

PreprocessResult preprocess(std::span<const RawRow> rows) {
    PreprocessResult result;
    for (const RawRow& row : rows) {
        // Stage 1: no inherited complexity.
        if (row.hcc && *row.hcc == row.wmc) {
            ++result.stages.removed_no_inheritance;
            continue;
        }
        // Stage 2: no bug information.
        if (!row.bug) {
            ++result.stages.removed_unlabeled;
            continue;
        }
        // Stage 3: binarize.
        LabeledSample sample;
        sample.name = row.name;
        sample.wmc = row.wmc;
        sample.iwmc = row.iwmc.value_or(0);
        sample.hcc = row.hcc.value_or(row.wmc);
        sample.lcom = row.lcom;
        sample.dit = row.dit;
        sample.label = *row.bug >= 1 ? 1 : 0;
        result.samples.push_back(std::move(sample));
    }
    result.stages.remaining = result.samples.size();
    if (result.samples.empty())
        throw EmptyDatasetError("no rows survive preprocessing");
    return result;
}

DatasetSummary summarize(std::span<const LabeledSample> samples) {
    if (samples.empty()) throw EmptyDatasetError("cannot summarize an empty sample set");
    DatasetSummary s;
    s.total = samples.size();
    for (const LabeledSample& sample : samples)
        sample.label == 1 ? ++s.faulty : ++s.non_faulty;
    s.faulty_pct = round_fixed(100.0 * static_cast<double>(s.faulty) / s.total, 2);
    s.non_faulty_pct = round_fixed(100.0 * static_cast<double>(s.non_faulty) / s.total, 2);
    return s;
}

void write_samples_csv(std::ostream& out, std::span<const LabeledSample> samples) {
    auto num = [](double v) {
        if (v == std::floor(v) && std::abs(v) < 1e15)
            return std::to_string(static_cast<long long>(v));
        return format_fixed(v, 4);
    };
    out << "name,wmc,iwmc,hcc,lcom,dit,bug\n";
    for (const LabeledSample& s : samples) {
        out << csv_field(s.name) << ',' << num(s.wmc) << ',' << num(s.iwmc) << ','
            << num(s.hcc) << ',' << format_fixed(s.lcom, 4) << ',' << num(s.dit) << ','
            << s.label << '\n';
    }
}

}  // namespace oomet
