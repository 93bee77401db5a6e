#pragma once

// Synthetic dataset generators for the predictor tests, plus a logistic
// regression oracle used to confirm the generators carry the signal they
// are supposed to (independent of the SVM under test).
//
// Box-Muller on raw mt19937 draws instead of <random> distributions, so the
// generated data is identical on every platform.

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oomet/dataset.hpp"
#include "oomet/svm.hpp"

namespace oomet::testsupport {

inline double uniform01(std::mt19937& rng) {
    return (static_cast<double>(rng()) + 0.5) / 4294967296.0;
}

inline double normal(std::mt19937& rng) {
    const double u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

inline int uniform_int(std::mt19937& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1));
}

// Label depends on wmc and iwmc with opposite signs; hcc = wmc + iwmc is
// (near) orthogonal to the signal, so R2 should beat R1.
inline std::vector<LabeledSample> opposite_sign_samples(int n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<LabeledSample> samples;
    for (int i = 0; i < n; ++i) {
        LabeledSample s;
        s.name = "cls" + std::to_string(i);
        s.wmc = uniform_int(rng, 1, 30);
        s.iwmc = uniform_int(rng, 1, 30);
        s.hcc = s.wmc + s.iwmc;
        s.lcom = uniform01(rng) * 2.0;
        s.dit = uniform_int(rng, 1, 8);
        const double score = 0.3 * (s.wmc - s.iwmc) + normal(rng);
        s.label = score > 0.0 ? 1 : 0;
        samples.push_back(std::move(s));
    }
    return samples;
}

// Label depends only on lcom, which both representations carry.
inline std::vector<LabeledSample> lcom_only_samples(int n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<LabeledSample> samples;
    for (int i = 0; i < n; ++i) {
        LabeledSample s;
        s.name = "cls" + std::to_string(i);
        s.wmc = uniform_int(rng, 1, 30);
        s.iwmc = uniform_int(rng, 1, 30);
        s.hcc = s.wmc + s.iwmc;
        s.lcom = uniform01(rng) * 2.0;
        s.dit = uniform_int(rng, 1, 8);
        const double score = 4.0 * (s.lcom - 1.0) + 0.5 * normal(rng);
        s.label = score > 0.0 ? 1 : 0;
        samples.push_back(std::move(s));
    }
    return samples;
}

// Serializes samples as an ingestable dataset CSV. The bug column carries
// counts (not just 0/1) so binarization is exercised; hcc is omitted so
// ingestion derives it from the identity.
inline std::string samples_to_dataset_csv(const std::vector<LabeledSample>& samples) {
    std::ostringstream csv;
    csv << "name,wmc,dit,lcom,iwmc,bug\n";
    int counter = 0;
    for (const LabeledSample& s : samples) {
        const int bug = s.label == 1 ? 1 + (counter++ % 3) : 0;
        char lcom_buf[32];
        std::snprintf(lcom_buf, sizeof(lcom_buf), "%.6f", s.lcom);
        csv << s.name << ',' << static_cast<long long>(s.wmc) << ','
            << static_cast<long long>(s.dit) << ',' << lcom_buf << ','
            << static_cast<long long>(s.iwmc) << ',' << bug << '\n';
    }
    return csv.str();
}

// Plain logistic regression (full-batch GD on standardized features).
// Returns training accuracy; used to check which feature set carries the
// generator's signal.
inline double logistic_fit_accuracy(const std::vector<LabeledSample>& samples,
                                    const Representation& rep) {
    FeatureMatrix m = to_matrix(samples, rep);
    const ScalerParams scaler = fit_scaler(m, rep);
    apply_scaler(scaler, m);

    const std::size_t n = m.rows;
    const std::size_t d = m.columns.size();
    std::vector<double> w(d, 0.0);
    double b = 0.0;
    for (int iter = 0; iter < 400; ++iter) {
        std::vector<double> grad(d, 0.0);
        double grad_b = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double z = b;
            for (std::size_t k = 0; k < d; ++k) z += w[k] * m.columns[k][i];
            const double p = 1.0 / (1.0 + std::exp(-z));
            const double err = p - m.labels[i];
            for (std::size_t k = 0; k < d; ++k) grad[k] += err * m.columns[k][i];
            grad_b += err;
        }
        for (std::size_t k = 0; k < d; ++k) w[k] -= 0.5 * grad[k] / n;
        b -= 0.5 * grad_b / n;
    }

    std::size_t correct = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double z = b;
        for (std::size_t k = 0; k < d; ++k) z += w[k] * m.columns[k][i];
        if ((z > 0.0 ? 1 : 0) == m.labels[i]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(n);
}

}  // namespace oomet::testsupport
