// Scalar reference backend.
//
// Reductions run four interleaved accumulators over the 4-aligned prefix,
// combine them as (s0+s2) + (s1+s3), then fold the tail in sequentially.
// That is exactly the lane order of the AVX2 backend's horizontal reduce,
// which is what makes the two backends bit-identical. Keep the two files
// in lockstep when touching either.

#include "oomet/kernels.hpp"

#include <cassert>

namespace oomet::kernels::scalar {

namespace {

// Folds the stripe accumulators in AVX2 extract/add order.
inline double combine(const double acc[4]) {
    return (acc[0] + acc[2]) + (acc[1] + acc[3]);
}

}  // namespace

double sum(std::span<const double> x) {
    const std::size_t n = x.size();
    const std::size_t main = n - n % 4;
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < main; i += 4) {
        acc[0] += x[i];
        acc[1] += x[i + 1];
        acc[2] += x[i + 2];
        acc[3] += x[i + 3];
    }
    double total = combine(acc);
    for (std::size_t i = main; i < n; ++i) total += x[i];
    return total;
}

double dot(std::span<const double> x, std::span<const double> y) {
    assert(x.size() == y.size());
    const std::size_t n = x.size();
    const std::size_t main = n - n % 4;
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < main; i += 4) {
        acc[0] += x[i] * y[i];
        acc[1] += x[i + 1] * y[i + 1];
        acc[2] += x[i + 2] * y[i + 2];
        acc[3] += x[i + 3] * y[i + 3];
    }
    double total = combine(acc);
    for (std::size_t i = main; i < n; ++i) total += x[i] * y[i];
    return total;
}

double sum_sq_dev(std::span<const double> x, double mean) {
    const std::size_t n = x.size();
    const std::size_t main = n - n % 4;
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < main; i += 4) {
        const double d0 = x[i] - mean;
        const double d1 = x[i + 1] - mean;
        const double d2 = x[i + 2] - mean;
        const double d3 = x[i + 3] - mean;
        acc[0] += d0 * d0;
        acc[1] += d1 * d1;
        acc[2] += d2 * d2;
        acc[3] += d3 * d3;
    }
    double total = combine(acc);
    for (std::size_t i = main; i < n; ++i) {
        const double d = x[i] - mean;
        total += d * d;
    }
    return total;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    assert(x.size() == y.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = y[i] + a * x[i];
}

void standardize(std::span<const double> x, double mean, double inv_std,
                 std::span<double> out) {
    assert(x.size() == out.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - mean) * inv_std;
}

void mul(std::span<const double> x, std::span<const double> y, std::span<double> out) {
    assert(x.size() == y.size() && x.size() == out.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * y[i];
}

double hinge_sum(std::span<const double> margins) {
    const std::size_t n = margins.size();
    const std::size_t main = n - n % 4;
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < main; i += 4) {
        // (t > 0 ? t : 0) mirrors maxpd(t, 0): -0, NaN -> +0.
        for (std::size_t j = 0; j < 4; ++j) {
            const double t = 1.0 - margins[i + j];
            acc[j] += (t > 0.0) ? t : 0.0;
        }
    }
    double total = combine(acc);
    for (std::size_t i = main; i < n; ++i) {
        const double t = 1.0 - margins[i];
        total += (t > 0.0) ? t : 0.0;
    }
    return total;
}

double hinge_masked_sum(std::span<const double> margins, std::span<const double> v) {
    assert(margins.size() == v.size());
    const std::size_t n = margins.size();
    const std::size_t main = n - n % 4;
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < main; i += 4) {
        for (std::size_t j = 0; j < 4; ++j)
            acc[j] += (margins[i + j] < 1.0) ? v[i + j] : 0.0;
    }
    double total = combine(acc);
    for (std::size_t i = main; i < n; ++i)
        total += (margins[i] < 1.0) ? v[i] : 0.0;
    return total;
}

double hinge_masked_dot(std::span<const double> margins, std::span<const double> a,
                        std::span<const double> b) {
    assert(margins.size() == a.size() && margins.size() == b.size());
    const std::size_t n = margins.size();
    const std::size_t main = n - n % 4;
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < main; i += 4) {
        for (std::size_t j = 0; j < 4; ++j)
            acc[j] += (margins[i + j] < 1.0) ? a[i + j] * b[i + j] : 0.0;
    }
    double total = combine(acc);
    for (std::size_t i = main; i < n; ++i)
        total += (margins[i] < 1.0) ? a[i] * b[i] : 0.0;
    return total;
}

}  // namespace oomet::kernels::scalar
