#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "oomet/dataset.hpp"

namespace oomet {

struct Representation {
    std::string name;
    std::vector<std::string> feature_names;

    static Representation r1();  // hcc, lcom, dit
    static Representation r2();  // wmc, iwmc, lcom, dit

    bool operator==(const Representation&) const = default;
};

struct SplitResult {
    std::vector<LabeledSample> train;
    std::vector<LabeledSample> test;
};

// Seeded stratified partition: each label group is shuffled and split at
// the fraction independently (rounded half-up). Original sample order is
// preserved within each side.
SplitResult stratified_split(std::span<const LabeledSample> samples, double train_fraction,
                             std::uint32_t seed);

// Downsamples the majority label to the minority's size (seeded).
std::vector<LabeledSample> downsample_to_balance(std::span<const LabeledSample> samples,
                                                 std::uint32_t seed);

// Feature-major layout; the unit the kernels operate on.
struct FeatureMatrix {
    std::size_t rows = 0;
    std::vector<std::vector<double>> columns;
    std::vector<int> labels;        // 0 / 1
    std::vector<double> labels_pm;  // -1.0 / +1.0
};

FeatureMatrix to_matrix(std::span<const LabeledSample> samples, const Representation& rep);

struct ScalerParams {
    std::vector<double> means;
    std::vector<double> stds;  // population; 0 marks a zero-variance feature
    std::vector<std::string> zero_variance;
};

// Statistics from the training split only.
ScalerParams fit_scaler(const FeatureMatrix& train, const Representation& rep);

// Z-normalizes in place; zero-variance features map to all zeros.
void apply_scaler(const ScalerParams& params, FeatureMatrix& matrix);

struct TrainingMeta {
    std::uint32_t seed = 0;
    int iterations = 0;
    double objective = 0.0;
};

struct LinearSvmModel {
    Representation representation;
    std::vector<double> weights;
    double bias = 0.0;
    double c = 1.0;
    ScalerParams scaler;
    TrainingMeta meta;
};

// J(w, b) = 0.5*||w||^2 + (C/n) * sum_i max(0, 1 - y_i*(w.x_i + b))
double svm_objective(const FeatureMatrix& scaled, std::span<const double> weights, double bias,
                     double c);

// Subgradient of J at (w, b); at kinks the hinge-inactive side is taken.
void svm_subgradient(const FeatureMatrix& scaled, std::span<const double> weights, double bias,
                     double c, std::span<double> grad_w, double& grad_b);

// Deterministic full-batch subgradient descent with a 1/(1+t) step
// schedule, returning the best-objective iterate. The seed is carried in
// the metadata; the descent itself is seed-free.
LinearSvmModel train_svm(const FeatureMatrix& scaled_train, const Representation& rep, double c,
                         std::uint32_t seed, int max_iterations = 5000);

// w.x + b per row of a scaled matrix.
std::vector<double> decision_values(const LinearSvmModel& model, const FeatureMatrix& scaled);

// faulty iff decision > 0 (ties go to non-faulty).
inline int predict_label(double decision) { return decision > 0.0 ? 1 : 0; }

std::vector<int> predict_labels(const LinearSvmModel& model, const FeatureMatrix& scaled);

struct EvaluationReport {
    long tp = 0, fp = 0, fn = 0, tn = 0;
    std::optional<double> precision_faulty;
    std::optional<double> recall_faulty;
    std::optional<double> precision_non_faulty;
    std::optional<double> recall_non_faulty;
    double accuracy = 0.0;
};

EvaluationReport report_from_counts(long tp, long fp, long fn, long tn);
EvaluationReport evaluate(const LinearSvmModel& model, const FeatureMatrix& scaled_test);

struct StudyConfig {
    double train_fraction = 0.7;
    double c = 1.0;
    std::uint32_t seed = 1;
    bool balance = false;
    int max_iterations = 5000;
};

struct RepresentationOutcome {
    LinearSvmModel model;
    EvaluationReport report;
};

struct ComparisonReport {
    RepresentationOutcome r1;
    RepresentationOutcome r2;
    std::size_t train_size = 0;
    std::size_t test_size = 0;
    double accuracy_delta = 0.0;  // r2 - r1
};

// Same split, same seed, both representations.
ComparisonReport compare_representations(std::span<const LabeledSample> samples,
                                         const StudyConfig& config);

nlohmann::json model_to_json(const LinearSvmModel& model);
LinearSvmModel model_from_json(const nlohmann::json& j);

}  // namespace oomet
