#pragma once

// Vector arithmetic primitives behind the statistics and SVM code paths.
//
// Two backends: a scalar reference and an AVX2 variant, selected once at
// startup (cpuid, overridable via OOMET_KERNELS=scalar|avx2). The scalar
// reference accumulates reductions in four stripes and combines them in
// the same order as the AVX2 horizontal reduce, and neither backend uses
// FMA, so both produce bit-identical results. Everything downstream
// (model weights, report bundles) is therefore independent of the
// dispatch decision.

#include <cstddef>
#include <span>
#include <string_view>

namespace oomet::kernels {

enum class Backend { scalar, avx2 };

// Backend chosen at startup; stable for the process lifetime.
Backend active_backend();
std::string_view backend_name(Backend b);

double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
// Sum of squared deviations from `mean`.
double sum_sq_dev(std::span<const double> x, double mean);
// y[i] += a * x[i]
void axpy(double a, std::span<const double> x, std::span<double> y);
// out[i] = (x[i] - mean) * inv_std
void standardize(std::span<const double> x, double mean, double inv_std, std::span<double> out);
// out[i] = x[i] * y[i]
void mul(std::span<const double> x, std::span<const double> y, std::span<double> out);
// Sum of max(0, 1 - m[i]).
double hinge_sum(std::span<const double> margins);
// Sum of v[i] over i with margins[i] < 1.
double hinge_masked_sum(std::span<const double> margins, std::span<const double> v);
// Sum of a[i] * b[i] over i with margins[i] < 1.
double hinge_masked_dot(std::span<const double> margins, std::span<const double> a,
                        std::span<const double> b);

namespace scalar {
double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double sum_sq_dev(std::span<const double> x, double mean);
void axpy(double a, std::span<const double> x, std::span<double> y);
void standardize(std::span<const double> x, double mean, double inv_std, std::span<double> out);
void mul(std::span<const double> x, std::span<const double> y, std::span<double> out);
double hinge_sum(std::span<const double> margins);
double hinge_masked_sum(std::span<const double> margins, std::span<const double> v);
double hinge_masked_dot(std::span<const double> margins, std::span<const double> a,
                        std::span<const double> b);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define OOMET_HAVE_AVX2_BACKEND 1
namespace avx2 {
// True when the running CPU exposes AVX2.
bool supported();
double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double sum_sq_dev(std::span<const double> x, double mean);
void axpy(double a, std::span<const double> x, std::span<double> y);
void standardize(std::span<const double> x, double mean, double inv_std, std::span<double> out);
void mul(std::span<const double> x, std::span<const double> y, std::span<double> out);
double hinge_sum(std::span<const double> margins);
double hinge_masked_sum(std::span<const double> margins, std::span<const double> v);
double hinge_masked_dot(std::span<const double> margins, std::span<const double> a,
                        std::span<const double> b);
}  // namespace avx2
#else
#define OOMET_HAVE_AVX2_BACKEND 0
#endif

}  // namespace oomet::kernels
