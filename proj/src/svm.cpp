#include "oomet/svm.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "oomet/errors.hpp"
#include "oomet/kernels.hpp"

namespace oomet {

namespace {

// Hand-rolled Fisher-Yates: std::shuffle's output is implementation
// defined, and splits must be identical on every platform.
void seeded_shuffle(std::vector<std::size_t>& v, std::mt19937& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = rng() % i;
        std::swap(v[i - 1], v[j]);
    }
}

std::vector<LabeledSample> gather(std::span<const LabeledSample> samples,
                                  std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    std::vector<LabeledSample> out;
    out.reserve(indices.size());
    for (const std::size_t i : indices) out.push_back(samples[i]);
    return out;
}

void fill_decisions(const FeatureMatrix& m, std::span<const double> w, double b,
                    std::vector<double>& decisions) {
    decisions.assign(m.rows, b);
    for (std::size_t k = 0; k < m.columns.size(); ++k)
        kernels::axpy(w[k], m.columns[k], decisions);
}

}  // namespace

Representation Representation::r1() { return {"R1", {"hcc", "lcom", "dit"}}; }

Representation Representation::r2() { return {"R2", {"wmc", "iwmc", "lcom", "dit"}}; }

SplitResult stratified_split(std::span<const LabeledSample> samples, double train_fraction,
                             std::uint32_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw UsageError("train fraction must be strictly between 0 and 1");

    std::vector<std::size_t> faulty, non_faulty;
    for (std::size_t i = 0; i < samples.size(); ++i)
        (samples[i].label == 1 ? faulty : non_faulty).push_back(i);
    if (faulty.size() < 2 || non_faulty.size() < 2)
        throw InsufficientDataError("need at least two samples per label to split, got " +
                                    std::to_string(faulty.size()) + " faulty / " +
                                    std::to_string(non_faulty.size()) + " non-faulty");

    std::mt19937 rng(seed);
    seeded_shuffle(faulty, rng);
    seeded_shuffle(non_faulty, rng);

    SplitResult result;
    std::vector<std::size_t> train_idx, test_idx;
    for (auto* group : {&faulty, &non_faulty}) {
        const std::size_t size = group->size();
        const auto take = static_cast<std::size_t>(
            std::floor(static_cast<double>(size) * train_fraction + 0.5));
        if (take == 0 || take == size)
            throw InsufficientDataError("a label group would yield an empty split side");
        train_idx.insert(train_idx.end(), group->begin(), group->begin() + take);
        test_idx.insert(test_idx.end(), group->begin() + take, group->end());
    }
    result.train = gather(samples, std::move(train_idx));
    result.test = gather(samples, std::move(test_idx));
    return result;
}

std::vector<LabeledSample> downsample_to_balance(std::span<const LabeledSample> samples,
                                                 std::uint32_t seed) {
    std::vector<std::size_t> faulty, non_faulty;
    for (std::size_t i = 0; i < samples.size(); ++i)
        (samples[i].label == 1 ? faulty : non_faulty).push_back(i);
    if (faulty.empty() || non_faulty.empty())
        throw SingleClassError("balancing needs both labels present");

    auto& majority = faulty.size() > non_faulty.size() ? faulty : non_faulty;
    const std::size_t target = std::min(faulty.size(), non_faulty.size());

    std::mt19937 rng(seed);
    seeded_shuffle(majority, rng);
    majority.resize(target);

    std::vector<std::size_t> keep;
    keep.insert(keep.end(), faulty.begin(), faulty.end());
    keep.insert(keep.end(), non_faulty.begin(), non_faulty.end());
    return gather(samples, std::move(keep));
}

FeatureMatrix to_matrix(std::span<const LabeledSample> samples, const Representation& rep) {
    FeatureMatrix m;
    m.rows = samples.size();
    for (const std::string& feature : rep.feature_names) {
        std::vector<double> col;
        col.reserve(samples.size());
        for (const LabeledSample& s : samples) col.push_back(feature_value(s, feature));
        m.columns.push_back(std::move(col));
    }
    m.labels.reserve(samples.size());
    m.labels_pm.reserve(samples.size());
    for (const LabeledSample& s : samples) {
        m.labels.push_back(s.label);
        m.labels_pm.push_back(s.label == 1 ? 1.0 : -1.0);
    }
    return m;
}

ScalerParams fit_scaler(const FeatureMatrix& train, const Representation& rep) {
    if (train.rows == 0) throw EmptyDatasetError("cannot fit a scaler on an empty split");
    ScalerParams params;
    const double n = static_cast<double>(train.rows);
    for (std::size_t k = 0; k < train.columns.size(); ++k) {
        const double mean = kernels::sum(train.columns[k]) / n;
        const double variance = kernels::sum_sq_dev(train.columns[k], mean) / n;
        const double std_dev = std::sqrt(variance);
        params.means.push_back(mean);
        params.stds.push_back(std_dev);
        if (std_dev == 0.0) params.zero_variance.push_back(rep.feature_names[k]);
    }
    return params;
}

void apply_scaler(const ScalerParams& params, FeatureMatrix& matrix) {
    if (params.means.size() != matrix.columns.size())
        throw DimensionMismatchError("scaler has " + std::to_string(params.means.size()) +
                                     " features, matrix has " +
                                     std::to_string(matrix.columns.size()));
    for (std::size_t k = 0; k < matrix.columns.size(); ++k) {
        auto& col = matrix.columns[k];
        if (params.stds[k] == 0.0) {
            std::fill(col.begin(), col.end(), 0.0);
            continue;
        }
        kernels::standardize(col, params.means[k], 1.0 / params.stds[k], col);
    }
}

double svm_objective(const FeatureMatrix& scaled, std::span<const double> weights, double bias,
                     double c) {
    std::vector<double> decisions;
    fill_decisions(scaled, weights, bias, decisions);
    std::vector<double> margins(scaled.rows);
    kernels::mul(decisions, scaled.labels_pm, margins);
    const double n = static_cast<double>(scaled.rows);
    return 0.5 * kernels::dot(weights, weights) + (c / n) * kernels::hinge_sum(margins);
}

void svm_subgradient(const FeatureMatrix& scaled, std::span<const double> weights, double bias,
                     double c, std::span<double> grad_w, double& grad_b) {
    std::vector<double> decisions;
    fill_decisions(scaled, weights, bias, decisions);
    std::vector<double> margins(scaled.rows);
    kernels::mul(decisions, scaled.labels_pm, margins);
    const double scale = c / static_cast<double>(scaled.rows);
    for (std::size_t k = 0; k < scaled.columns.size(); ++k)
        grad_w[k] = weights[k] -
                    scale * kernels::hinge_masked_dot(margins, scaled.labels_pm,
                                                      scaled.columns[k]);
    grad_b = -scale * kernels::hinge_masked_sum(margins, scaled.labels_pm);
}

LinearSvmModel train_svm(const FeatureMatrix& scaled_train, const Representation& rep, double c,
                         std::uint32_t seed, int max_iterations) {
    if (scaled_train.rows == 0) throw EmptyDatasetError("cannot train on an empty split");
    const bool has_pos = std::find(scaled_train.labels.begin(), scaled_train.labels.end(), 1) !=
                         scaled_train.labels.end();
    const bool has_neg = std::find(scaled_train.labels.begin(), scaled_train.labels.end(), 0) !=
                         scaled_train.labels.end();
    if (!has_pos || !has_neg)
        throw SingleClassError("training split contains a single label only");

    const std::size_t d = scaled_train.columns.size();
    std::vector<double> w(d, 0.0);
    double b = 0.0;

    std::vector<double> best_w = w;
    double best_b = b;
    double best_objective = svm_objective(scaled_train, w, b, c);

    std::vector<double> grad_w(d, 0.0);
    for (int t = 0; t < max_iterations; ++t) {
        double grad_b = 0.0;
        svm_subgradient(scaled_train, w, b, c, grad_w, grad_b);
        const double step = 1.0 / (1.0 + static_cast<double>(t));
        for (std::size_t k = 0; k < d; ++k) w[k] -= step * grad_w[k];
        b -= step * grad_b;

        const double objective = svm_objective(scaled_train, w, b, c);
        if (!std::isfinite(objective))
            throw NonFiniteError("SVM objective diverged at iteration " + std::to_string(t));
        if (objective < best_objective) {
            best_objective = objective;
            best_w = w;
            best_b = b;
        }
    }

    LinearSvmModel model;
    model.representation = rep;
    model.weights = std::move(best_w);
    model.bias = best_b;
    model.c = c;
    model.meta.seed = seed;
    model.meta.iterations = max_iterations;
    model.meta.objective = best_objective;
    return model;
}

std::vector<double> decision_values(const LinearSvmModel& model, const FeatureMatrix& scaled) {
    if (model.weights.size() != scaled.columns.size())
        throw DimensionMismatchError("model expects " + std::to_string(model.weights.size()) +
                                     " features, matrix has " +
                                     std::to_string(scaled.columns.size()));
    std::vector<double> decisions;
    fill_decisions(scaled, model.weights, model.bias, decisions);
    return decisions;
}

std::vector<int> predict_labels(const LinearSvmModel& model, const FeatureMatrix& scaled) {
    const std::vector<double> decisions = decision_values(model, scaled);
    std::vector<int> labels;
    labels.reserve(decisions.size());
    for (const double v : decisions) labels.push_back(predict_label(v));
    return labels;
}

EvaluationReport report_from_counts(long tp, long fp, long fn, long tn) {
    EvaluationReport r;
    r.tp = tp;
    r.fp = fp;
    r.fn = fn;
    r.tn = tn;
    const long total = tp + fp + fn + tn;
    r.accuracy = total > 0 ? static_cast<double>(tp + tn) / static_cast<double>(total) : 0.0;
    if (tp + fp > 0) r.precision_faulty = static_cast<double>(tp) / static_cast<double>(tp + fp);
    if (tp + fn > 0) r.recall_faulty = static_cast<double>(tp) / static_cast<double>(tp + fn);
    if (tn + fn > 0)
        r.precision_non_faulty = static_cast<double>(tn) / static_cast<double>(tn + fn);
    if (tn + fp > 0) r.recall_non_faulty = static_cast<double>(tn) / static_cast<double>(tn + fp);
    return r;
}

EvaluationReport evaluate(const LinearSvmModel& model, const FeatureMatrix& scaled_test) {
    if (scaled_test.rows == 0) throw EmptyDatasetError("cannot evaluate on an empty split");
    const std::vector<int> predicted = predict_labels(model, scaled_test);
    long tp = 0, fp = 0, fn = 0, tn = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const int actual = scaled_test.labels[i];
        if (predicted[i] == 1)
            actual == 1 ? ++tp : ++fp;
        else
            actual == 1 ? ++fn : ++tn;
    }
    return report_from_counts(tp, fp, fn, tn);
}

ComparisonReport compare_representations(std::span<const LabeledSample> samples,
                                         const StudyConfig& config) {
    std::vector<LabeledSample> working;
    if (config.balance) {
        working = downsample_to_balance(samples, config.seed);
        samples = working;
    }
    const SplitResult split = stratified_split(samples, config.train_fraction, config.seed);

    ComparisonReport report;
    report.train_size = split.train.size();
    report.test_size = split.test.size();

    auto run = [&](const Representation& rep) {
        FeatureMatrix train = to_matrix(split.train, rep);
        FeatureMatrix test = to_matrix(split.test, rep);
        const ScalerParams scaler = fit_scaler(train, rep);
        apply_scaler(scaler, train);
        apply_scaler(scaler, test);
        RepresentationOutcome outcome;
        outcome.model = train_svm(train, rep, config.c, config.seed, config.max_iterations);
        outcome.model.scaler = scaler;
        outcome.report = evaluate(outcome.model, test);
        return outcome;
    };
    report.r1 = run(Representation::r1());
    report.r2 = run(Representation::r2());
    report.accuracy_delta = report.r2.report.accuracy - report.r1.report.accuracy;
    return report;
}

nlohmann::json model_to_json(const LinearSvmModel& model) {
    return nlohmann::json{
        {"representation", model.representation.name},
        {"features", model.representation.feature_names},
        {"weights", model.weights},
        {"bias", model.bias},
        {"c", model.c},
        {"seed", model.meta.seed},
        {"iterations", model.meta.iterations},
        {"objective", model.meta.objective},
        {"scaler",
         {{"means", model.scaler.means}, {"stds", model.scaler.stds}}},
    };
}

LinearSvmModel model_from_json(const nlohmann::json& j) {
    LinearSvmModel model;
    model.representation.name = j.at("representation").get<std::string>();
    model.representation.feature_names = j.at("features").get<std::vector<std::string>>();
    model.weights = j.at("weights").get<std::vector<double>>();
    model.bias = j.at("bias").get<double>();
    model.c = j.at("c").get<double>();
    model.meta.seed = j.at("seed").get<std::uint32_t>();
    if (j.contains("iterations")) model.meta.iterations = j.at("iterations").get<int>();
    if (j.contains("objective")) model.meta.objective = j.at("objective").get<double>();
    model.scaler.means = j.at("scaler").at("means").get<std::vector<double>>();
    model.scaler.stds = j.at("scaler").at("stds").get<std::vector<double>>();
    if (model.weights.size() != model.representation.feature_names.size() ||
        model.scaler.means.size() != model.weights.size() ||
        model.scaler.stds.size() != model.weights.size())
        throw RepresentationMismatchError("model JSON: weights/features/scaler sizes disagree");
    return model;
}

}  // namespace oomet
