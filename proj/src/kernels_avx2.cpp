// AVX2 backend. Compiled with -mavx2 -ffp-contract=off; only reached when
// the running CPU reports AVX2. Must stay bit-identical to the scalar
// reference in kernels_scalar.cpp: same stripe order, mul+add (never FMA),
// tail folded after the horizontal reduce.

#include "oomet/kernels.hpp"

#if OOMET_HAVE_AVX2_BACKEND

#include <immintrin.h>

#include <cassert>

namespace oomet::kernels::avx2 {

namespace {

// lanes [l0,l1,l2,l3] -> (l0+l2) + (l1+l3)
inline double reduce(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);             // [l0+l2, l1+l3]
    const __m128d swapped = _mm_unpackhi_pd(pair, pair); // [l1+l3, l1+l3]
    return _mm_cvtsd_f64(_mm_add_sd(pair, swapped));
}

}  // namespace

bool supported() {
    return __builtin_cpu_supports("avx2") != 0;
}

double sum(std::span<const double> x) {
    const std::size_t n = x.size();
    const std::size_t main = n - n % 4;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < main; i += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x.data() + i));
    double total = reduce(acc);
    for (std::size_t i = main; i < n; ++i) total += x[i];
    return total;
}

double dot(std::span<const double> x, std::span<const double> y) {
    assert(x.size() == y.size());
    const std::size_t n = x.size();
    const std::size_t main = n - n % 4;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < main; i += 4) {
        const __m256d p = _mm256_mul_pd(_mm256_loadu_pd(x.data() + i),
                                        _mm256_loadu_pd(y.data() + i));
        acc = _mm256_add_pd(acc, p);
    }
    double total = reduce(acc);
    for (std::size_t i = main; i < n; ++i) total += x[i] * y[i];
    return total;
}

double sum_sq_dev(std::span<const double> x, double mean) {
    const std::size_t n = x.size();
    const std::size_t main = n - n % 4;
    const __m256d mu = _mm256_set1_pd(mean);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < main; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x.data() + i), mu);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    double total = reduce(acc);
    for (std::size_t i = main; i < n; ++i) {
        const double d = x[i] - mean;
        total += d * d;
    }
    return total;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    assert(x.size() == y.size());
    const std::size_t n = x.size();
    const std::size_t main = n - n % 4;
    const __m256d va = _mm256_set1_pd(a);
    for (std::size_t i = 0; i < main; i += 4) {
        const __m256d p = _mm256_mul_pd(va, _mm256_loadu_pd(x.data() + i));
        _mm256_storeu_pd(y.data() + i, _mm256_add_pd(_mm256_loadu_pd(y.data() + i), p));
    }
    for (std::size_t i = main; i < n; ++i) y[i] = y[i] + a * x[i];
}

void standardize(std::span<const double> x, double mean, double inv_std,
                 std::span<double> out) {
    assert(x.size() == out.size());
    const std::size_t n = x.size();
    const std::size_t main = n - n % 4;
    const __m256d mu = _mm256_set1_pd(mean);
    const __m256d s = _mm256_set1_pd(inv_std);
    for (std::size_t i = 0; i < main; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x.data() + i), mu);
        _mm256_storeu_pd(out.data() + i, _mm256_mul_pd(d, s));
    }
    for (std::size_t i = main; i < n; ++i) out[i] = (x[i] - mean) * inv_std;
}

void mul(std::span<const double> x, std::span<const double> y, std::span<double> out) {
    assert(x.size() == y.size() && x.size() == out.size());
    const std::size_t n = x.size();
    const std::size_t main = n - n % 4;
    for (std::size_t i = 0; i < main; i += 4)
        _mm256_storeu_pd(out.data() + i, _mm256_mul_pd(_mm256_loadu_pd(x.data() + i),
                                                       _mm256_loadu_pd(y.data() + i)));
    for (std::size_t i = main; i < n; ++i) out[i] = x[i] * y[i];
}

double hinge_sum(std::span<const double> margins) {
    const std::size_t n = margins.size();
    const std::size_t main = n - n % 4;
    const __m256d ones = _mm256_set1_pd(1.0);
    const __m256d zeros = _mm256_setzero_pd();
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < main; i += 4) {
        const __m256d t = _mm256_sub_pd(ones, _mm256_loadu_pd(margins.data() + i));
        acc = _mm256_add_pd(acc, _mm256_max_pd(t, zeros));
    }
    double total = reduce(acc);
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
    const __m256d ones = _mm256_set1_pd(1.0);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < main; i += 4) {
        const __m256d mask = _mm256_cmp_pd(_mm256_loadu_pd(margins.data() + i), ones, _CMP_LT_OQ);
        acc = _mm256_add_pd(acc, _mm256_and_pd(mask, _mm256_loadu_pd(v.data() + i)));
    }
    double total = reduce(acc);
    for (std::size_t i = main; i < n; ++i)
        total += (margins[i] < 1.0) ? v[i] : 0.0;
    return total;
}

double hinge_masked_dot(std::span<const double> margins, std::span<const double> a,
                        std::span<const double> b) {
    assert(margins.size() == a.size() && margins.size() == b.size());
    const std::size_t n = margins.size();
    const std::size_t main = n - n % 4;
    const __m256d ones = _mm256_set1_pd(1.0);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < main; i += 4) {
        const __m256d mask = _mm256_cmp_pd(_mm256_loadu_pd(margins.data() + i), ones, _CMP_LT_OQ);
        const __m256d p = _mm256_mul_pd(_mm256_loadu_pd(a.data() + i),
                                        _mm256_loadu_pd(b.data() + i));
        acc = _mm256_add_pd(acc, _mm256_and_pd(mask, p));
    }
    double total = reduce(acc);
    for (std::size_t i = main; i < n; ++i)
        total += (margins[i] < 1.0) ? a[i] * b[i] : 0.0;
    return total;
}

}  // namespace oomet::kernels::avx2

#endif  // OOMET_HAVE_AVX2_BACKEND
