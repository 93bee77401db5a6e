#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oomet/cli.hpp"
#include "oomet/kernels.hpp"

namespace {

// "--map bug=defects,name=file" -> overrides map
std::map<std::string, std::string> parse_map(const std::string& spec) {
    std::map<std::string, std::string> overrides;
    std::size_t start = 0;
    while (start < spec.size()) {
        std::size_t end = spec.find(',', start);
        if (end == std::string::npos) end = spec.size();
        const std::string pair = spec.substr(start, end - start);
        const std::size_t eq = pair.find('=');
        if (eq == std::string::npos || eq == 0 || eq == pair.size() - 1)
            throw CLI::ValidationError("--map expects col=name pairs, got '" + pair + "'");
        overrides[pair.substr(0, eq)] = pair.substr(eq + 1);
        start = end + 1;
    }
    return overrides;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Object-oriented complexity metrics and defect prediction study runner"};
    app.require_subcommand(1);

    oomet::RunConfig config;
    std::string out_dir = "out";
    std::string map_spec;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
    };
    auto add_study_flags = [&](CLI::App* cmd) {
        cmd->add_option("--seed", config.seed, "Random seed")->capture_default_str();
        cmd->add_option("--train-fraction", config.train_fraction,
                        "Training split fraction")->capture_default_str();
        cmd->add_option("--c", config.c, "Soft-margin C parameter")->capture_default_str();
        cmd->add_flag("--balance", config.balance,
                      "Downsample the majority class to 50/50 before splitting");
        cmd->add_option("--iterations", config.svm_iterations,
                        "SVM subgradient iteration cap")->capture_default_str();
    };

    std::string source_dir;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Compute class metrics from a directory of source files");
    analyze->add_option("source_dir", source_dir, "Directory of .java files")->required();
    add_common(analyze);

    std::string dataset;
    CLI::App* ingest = app.add_subcommand(
        "ingest", "Preprocess a labeled metrics CSV into ML-ready samples");
    ingest->add_option("dataset", dataset, "Dataset CSV path")->required();
    ingest->add_option("--map", map_spec, "Column mapping, e.g. bug=defects,name=file");
    add_common(ingest);

    std::vector<std::string> study_datasets;
    CLI::App* study = app.add_subcommand(
        "study", "Run the full study (stats + R1 vs R2 prediction) per dataset");
    study->add_option("datasets", study_datasets, "Dataset CSV paths")->required();
    study->add_option("--map", map_spec, "Column mapping, e.g. bug=defects,name=file");
    add_study_flags(study);
    add_common(study);

    std::string model_path, metrics_csv;
    CLI::App* predict = app.add_subcommand(
        "predict", "Apply a trained model JSON to a metrics CSV");
    predict->add_option("model", model_path, "Model JSON path")->required();
    predict->add_option("metrics", metrics_csv, "Metrics CSV path")->required();
    add_common(predict);

    CLI::App* backend = app.add_subcommand("backend", "Print the active kernel backend");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!map_spec.empty()) config.column_overrides = parse_map(map_spec);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    config.out_dir = out_dir;

    if (analyze->parsed()) return oomet::cmd_analyze(source_dir, config);
    if (ingest->parsed()) return oomet::cmd_ingest(dataset, config);
    if (study->parsed()) {
        std::vector<std::filesystem::path> paths(study_datasets.begin(), study_datasets.end());
        return oomet::cmd_study(paths, config);
    }
    if (predict->parsed()) return oomet::cmd_predict(model_path, metrics_csv, config);
    if (backend->parsed()) {
        std::cout << oomet::kernels::backend_name(oomet::kernels::active_backend()) << '\n';
        return 0;
    }
    return 2;
}
