#include "oomet/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "oomet/csv.hpp"
#include "oomet/dataset.hpp"
#include "oomet/errors.hpp"
#include "oomet/metrics.hpp"
#include "oomet/parser.hpp"
#include "oomet/stats.hpp"
#include "oomet/util.hpp"

namespace oomet {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    write_text(path, j.dump(2) + "\n");
}

nlohmann::json opt_number(const std::optional<double>& v) {
    return v ? nlohmann::json(round_fixed(*v, 4)) : nlohmann::json(nullptr);
}

std::string opt_cell(const std::optional<double>& v) {
    return v ? format_fixed(*v, 4) : "n/a";
}

// Sorted .java files under a directory tree.
std::vector<std::filesystem::path> collect_sources(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".java")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

SourceFile read_source(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return SourceFile{path.string(), buf.str()};
}

// Per-file parses are pure, so they fan out across a small thread pool;
// results land in per-file slots and the merge stays deterministic.
std::vector<std::vector<ClassDecl>> parse_all(const std::vector<SourceFile>& files,
                                              std::vector<std::string>& errors) {
    std::vector<std::vector<ClassDecl>> results(files.size());
    errors.assign(files.size(), {});
    const std::size_t worker_count =
        std::min<std::size_t>(files.size(),
                              std::max(1u, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
            try {
                results[i] = parse_file(files[i]);
            } catch (const Error& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t + 1 < worker_count; ++t) workers.emplace_back(work);
    work();
    for (std::thread& t : workers) t.join();
    return results;
}

struct IngestedDataset {
    std::string name;
    std::vector<RawRow> rows;
};

IngestedDataset ingest_one(const std::filesystem::path& path, const RunConfig& config) {
    ColumnMapping mapping = ColumnMapping::defaults();
    mapping.apply_overrides(config.column_overrides);
    IngestResult result = read_dataset(path, mapping);
    for (const std::string& diag : result.diagnostics) std::cerr << diag << '\n';
    return IngestedDataset{path.stem().string(), std::move(result.rows)};
}

nlohmann::json stages_json(const StageCounts& stages) {
    return nlohmann::json{
        {"removed_no_inheritance", stages.removed_no_inheritance},
        {"removed_unlabeled", stages.removed_unlabeled},
        {"remaining", stages.remaining},
    };
}

nlohmann::json summary_json(const DatasetSummary& s) {
    return nlohmann::json{
        {"total", s.total},
        {"faulty", s.faulty},
        {"non_faulty", s.non_faulty},
        {"faulty_pct", s.faulty_pct},
        {"non_faulty_pct", s.non_faulty_pct},
    };
}

// Writes one dataset's full study into `dir` and returns its manifest entry.
nlohmann::json run_study(const std::filesystem::path& dir, const std::string& name,
                         const std::vector<LabeledSample>& samples, const StageCounts& stages,
                         const RunConfig& config) {
    std::filesystem::create_directories(dir);

    std::ostringstream samples_csv;
    write_samples_csv(samples_csv, samples);
    write_text(dir / "samples.csv", samples_csv.str());
    write_json(dir / "stages.json", stages_json(stages));

    const DatasetSummary summary = summarize(samples);
    write_json(dir / "summary.json", summary_json(summary));

    const std::vector<std::string> features(kFeatureNames.begin(), kFeatureNames.end());
    const CorrelationMatrix matrix = correlation_matrix(samples, features);
    std::ostringstream corr;
    write_correlation_csv(corr, matrix);
    write_text(dir / "correlation.csv", corr.str());

    nlohmann::json skipped = nlohmann::json::object();
    for (const std::string& feature : features) {
        try {
            auto curves = density_by_label(samples, feature);
            std::ostringstream raw;
            write_density_csv(raw, curves.first, curves.second);
            write_text(dir / ("density_" + feature + "_raw.csv"), raw.str());

            auto scaled = scale_by_share(std::move(curves), summary.faulty, summary.non_faulty);
            std::ostringstream shared;
            write_density_csv(shared, scaled.first, scaled.second);
            write_text(dir / ("density_" + feature + ".csv"), shared.str());
            write_text(dir / ("density_" + feature + ".svg"),
                       density_svg(scaled.first, scaled.second,
                                   name + ": " + feature + " density by label"));
        } catch (const DegenerateColumnError& e) {
            skipped[feature] = e.what();
        }
    }

    const ComparisonReport comparison = compare_representations(samples, config.study());
    write_json(dir / "model_R1.json", model_to_json(comparison.r1.model));
    write_json(dir / "model_R2.json", model_to_json(comparison.r2.model));
    write_json(dir / "evaluation.json", comparison_to_json(comparison));
    write_text(dir / "evaluation.md", comparison_markdown(comparison, name));

    return nlohmann::json{
        {"name", name},
        {"summary", summary_json(summary)},
        {"stages", stages_json(stages)},
        {"skipped_densities", skipped},
        {"accuracy_r1", round_fixed(comparison.r1.report.accuracy, 4)},
        {"accuracy_r2", round_fixed(comparison.r2.report.accuracy, 4)},
    };
}

}  // namespace

nlohmann::json comparison_to_json(const ComparisonReport& report) {
    auto one = [](const EvaluationReport& r) {
        return nlohmann::json{
            {"accuracy", round_fixed(r.accuracy, 4)},
            {"faulty", {{"precision", opt_number(r.precision_faulty)},
                        {"recall", opt_number(r.recall_faulty)}}},
            {"non_faulty", {{"precision", opt_number(r.precision_non_faulty)},
                            {"recall", opt_number(r.recall_non_faulty)}}},
            {"confusion", {{"tp", r.tp}, {"fp", r.fp}, {"fn", r.fn}, {"tn", r.tn}}},
        };
    };
    return nlohmann::json{
        {"r1", one(report.r1.report)},
        {"r2", one(report.r2.report)},
        {"accuracy_delta", round_fixed(report.accuracy_delta, 4)},
        {"train_size", report.train_size},
        {"test_size", report.test_size},
    };
}

std::string comparison_markdown(const ComparisonReport& report, std::string_view dataset_name) {
    const EvaluationReport& a = report.r1.report;
    const EvaluationReport& b = report.r2.report;
    std::ostringstream md;
    md << "# Defect prediction scores: " << dataset_name << "\n\n";
    md << "Train/test sizes: " << report.train_size << "/" << report.test_size << "\n\n";
    md << "| Evaluation criteria | R1 (hcc-lcom-dit) faulty | R1 non-faulty | "
          "R2 (wmc-iwmc-lcom-dit) faulty | R2 non-faulty |\n";
    md << "| --- | --- | --- | --- | --- |\n";
    md << "| Precision | " << opt_cell(a.precision_faulty) << " | "
       << opt_cell(a.precision_non_faulty) << " | " << opt_cell(b.precision_faulty) << " | "
       << opt_cell(b.precision_non_faulty) << " |\n";
    md << "| Recall | " << opt_cell(a.recall_faulty) << " | " << opt_cell(a.recall_non_faulty)
       << " | " << opt_cell(b.recall_faulty) << " | " << opt_cell(b.recall_non_faulty) << " |\n";
    md << "| Accuracy | " << format_fixed(a.accuracy, 4) << " | | "
       << format_fixed(b.accuracy, 4) << " | |\n";
    return md.str();
}

int cmd_analyze(const std::filesystem::path& source_dir, const RunConfig& config) {
    try {
        if (!std::filesystem::is_directory(source_dir)) {
            std::cerr << "error: " << source_dir.string() << " is not a directory\n";
            return kExitUsage;
        }
        const std::vector<std::filesystem::path> paths = collect_sources(source_dir);
        std::filesystem::create_directories(config.out_dir);

        std::vector<SourceFile> files;
        files.reserve(paths.size());
        for (const auto& p : paths) files.push_back(read_source(p));
        if (files.empty())
            std::cerr << "warning: no .java files under " << source_dir.string() << '\n';

        std::vector<std::string> errors;
        std::vector<std::vector<ClassDecl>> parsed = parse_all(files, errors);
        bool failed = false;
        for (const std::string& err : errors) {
            if (err.empty()) continue;
            std::cerr << "error: " << err << '\n';
            failed = true;
        }
        if (failed) return kExitUsage;

        std::vector<ClassDecl> all;
        for (auto& classes : parsed)
            all.insert(all.end(), std::make_move_iterator(classes.begin()),
                       std::make_move_iterator(classes.end()));
        const Corpus corpus = merge_classes(std::move(all));
        const std::vector<MetricsRecord> records = compute_all(corpus);

        std::ostringstream csv;
        write_metrics_csv(csv, records);
        write_text(config.out_dir / "metrics.csv", csv.str());
        write_json(config.out_dir / "corpus.json", corpus_to_json(corpus));
        std::cout << "analyzed " << corpus.size() << " classes from " << files.size()
                  << " files -> " << (config.out_dir / "metrics.csv").string() << '\n';
        return kExitOk;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

int cmd_ingest(const std::filesystem::path& dataset, const RunConfig& config) {
    try {
        const IngestedDataset ingested = ingest_one(dataset, config);
        const PreprocessResult processed = preprocess(ingested.rows);
        std::filesystem::create_directories(config.out_dir);
        std::ostringstream csv;
        write_samples_csv(csv, processed.samples);
        write_text(config.out_dir / "samples.csv", csv.str());
        write_json(config.out_dir / "stages.json", stages_json(processed.stages));
        std::cout << "ingested " << ingested.rows.size() << " rows -> "
                  << processed.samples.size() << " samples ("
                  << processed.stages.removed_no_inheritance << " without inherited complexity, "
                  << processed.stages.removed_unlabeled << " unlabeled removed)\n";
        return kExitOk;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

int cmd_study(const std::vector<std::filesystem::path>& datasets, const RunConfig& config) {
    try {
        if (datasets.empty()) {
            std::cerr << "error: study needs at least one dataset CSV\n";
            return kExitUsage;
        }
        std::filesystem::create_directories(config.out_dir);

        std::vector<IngestedDataset> ingested;
        std::set<std::string> used_names;
        for (const auto& path : datasets) {
            IngestedDataset d = ingest_one(path, config);
            std::string name = d.name;
            for (int k = 2; used_names.count(name); ++k)
                name = d.name + "_" + std::to_string(k);
            used_names.insert(name);
            d.name = name;
            ingested.push_back(std::move(d));
        }

        nlohmann::json manifest;
        manifest["config"] = {
            {"seed", config.seed},
            {"train_fraction", round_fixed(config.train_fraction, 4)},
            {"c", round_fixed(config.c, 4)},
            {"balance", config.balance},
            {"svm_iterations", config.svm_iterations},
            {"representations", {"R1", "R2"}},
        };
        manifest["studies"] = nlohmann::json::array();

        for (const IngestedDataset& d : ingested) {
            const PreprocessResult processed = preprocess(d.rows);
            manifest["studies"].push_back(run_study(config.out_dir / d.name, d.name,
                                                    processed.samples, processed.stages,
                                                    config));
        }

        if (ingested.size() > 1) {
            std::vector<RawRow> merged = ingested.front().rows;
            for (std::size_t i = 1; i < ingested.size(); ++i)
                merged = merge_datasets(merged, ingested[i].rows);
            const PreprocessResult processed = preprocess(merged);
            manifest["studies"].push_back(run_study(config.out_dir / "unified", "unified",
                                                    processed.samples, processed.stages,
                                                    config));
        }

        write_json(config.out_dir / "study.json", manifest);
        std::cout << "study bundle written to " << config.out_dir.string() << '\n';
        return kExitOk;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

int cmd_predict(const std::filesystem::path& model_path,
                const std::filesystem::path& metrics_csv, const RunConfig& config) {
    try {
        std::ifstream model_in(model_path);
        if (!model_in) {
            std::cerr << "error: cannot open model " << model_path.string() << '\n';
            return kExitUsage;
        }
        nlohmann::json model_json;
        try {
            model_in >> model_json;
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "error: invalid model JSON: " << e.what() << '\n';
            return kExitUsage;
        }
        const LinearSvmModel model = model_from_json(model_json);

        const CsvTable table = read_csv(metrics_csv);
        const int name_col = table.column("name");
        if (name_col < 0)
            throw RepresentationMismatchError(metrics_csv.string() +
                                              ": missing 'name' column");
        std::vector<int> feature_cols;
        for (const std::string& feature : model.representation.feature_names) {
            const int idx = table.column(feature);
            if (idx < 0)
                throw RepresentationMismatchError(
                    metrics_csv.string() + ": missing feature column '" + feature +
                    "' required by representation " + model.representation.name);
            feature_cols.push_back(idx);
        }

        FeatureMatrix matrix;
        matrix.rows = table.rows.size();
        matrix.columns.assign(feature_cols.size(), {});
        std::vector<std::string> names;
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            const auto& row = table.rows[r];
            names.push_back(name_col < static_cast<int>(row.size()) ? row[name_col] : "");
            for (std::size_t k = 0; k < feature_cols.size(); ++k) {
                const int idx = feature_cols[k];
                if (idx >= static_cast<int>(row.size()))
                    throw CellTypeError(metrics_csv.string() + ": row " +
                                        std::to_string(r + 1) + " is short");
                try {
                    matrix.columns[k].push_back(std::stod(row[idx]));
                } catch (const std::exception&) {
                    throw CellTypeError(metrics_csv.string() + ": row " +
                                        std::to_string(r + 1) + ": '" + row[idx] +
                                        "' is not a number");
                }
            }
        }

        apply_scaler(model.scaler, matrix);
        std::ostringstream out;
        out << "name,prediction,decision_value\n";
        if (matrix.rows > 0) {
            const std::vector<double> decisions = decision_values(model, matrix);
            for (std::size_t i = 0; i < decisions.size(); ++i)
                out << csv_field(names[i]) << ',' << predict_label(decisions[i]) << ','
                    << format_fixed(decisions[i], 4) << '\n';
        }
        std::filesystem::create_directories(config.out_dir);
        write_text(config.out_dir / "predictions.csv", out.str());
        std::cout << "predictions written to "
                  << (config.out_dir / "predictions.csv").string() << '\n';
        return kExitOk;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

}  // namespace oomet
