#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "oomet/svm.hpp"

namespace oomet {

// Defaults reproduce the study protocol: seed 1, 70/30 split, C = 1.0.
struct RunConfig {
    std::uint32_t seed = 1;
    double train_fraction = 0.7;
    double c = 1.0;
    bool balance = false;
    std::map<std::string, std::string> column_overrides;
    std::filesystem::path out_dir = "out";
    int svm_iterations = 5000;

    StudyConfig study() const {
        return StudyConfig{train_fraction, c, seed, balance, svm_iterations};
    }
};

// Exit codes: 0 success, 1 runtime/data error, 2 input/usage error.
int cmd_analyze(const std::filesystem::path& source_dir, const RunConfig& config);
int cmd_ingest(const std::filesystem::path& dataset, const RunConfig& config);
int cmd_study(const std::vector<std::filesystem::path>& datasets, const RunConfig& config);
int cmd_predict(const std::filesystem::path& model_path,
                const std::filesystem::path& metrics_csv, const RunConfig& config);

// Report shapes shared with the tests.
nlohmann::json comparison_to_json(const ComparisonReport& report);
std::string comparison_markdown(const ComparisonReport& report, std::string_view dataset_name);

}  // namespace oomet
