#include "oomet/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace oomet::kernels {

namespace {

Backend pick_backend() {
#if OOMET_HAVE_AVX2_BACKEND
    Backend chosen = avx2::supported() ? Backend::avx2 : Backend::scalar;
#else
    Backend chosen = Backend::scalar;
#endif
    if (const char* env = std::getenv("OOMET_KERNELS")) {
        const std::string_view want{env};
        if (want == "scalar") chosen = Backend::scalar;
#if OOMET_HAVE_AVX2_BACKEND
        if (want == "avx2" && avx2::supported()) chosen = Backend::avx2;
#endif
    }
    return chosen;
}

}  // namespace

Backend active_backend() {
    static const Backend b = pick_backend();
    return b;
}

std::string_view backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

#if OOMET_HAVE_AVX2_BACKEND
#define OOMET_DISPATCH(fn, ...) \
    return active_backend() == Backend::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__)
#define OOMET_DISPATCH_VOID(fn, ...)                    \
    if (active_backend() == Backend::avx2)              \
        avx2::fn(__VA_ARGS__);                          \
    else                                                \
        scalar::fn(__VA_ARGS__)
#else
#define OOMET_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#define OOMET_DISPATCH_VOID(fn, ...) scalar::fn(__VA_ARGS__)
#endif

double sum(std::span<const double> x) { OOMET_DISPATCH(sum, x); }

double dot(std::span<const double> x, std::span<const double> y) { OOMET_DISPATCH(dot, x, y); }

double sum_sq_dev(std::span<const double> x, double mean) { OOMET_DISPATCH(sum_sq_dev, x, mean); }

void axpy(double a, std::span<const double> x, std::span<double> y) {
    OOMET_DISPATCH_VOID(axpy, a, x, y);
}

void standardize(std::span<const double> x, double mean, double inv_std, std::span<double> out) {
    OOMET_DISPATCH_VOID(standardize, x, mean, inv_std, out);
}

void mul(std::span<const double> x, std::span<const double> y, std::span<double> out) {
    OOMET_DISPATCH_VOID(mul, x, y, out);
}

double hinge_sum(std::span<const double> margins) { OOMET_DISPATCH(hinge_sum, margins); }

double hinge_masked_sum(std::span<const double> margins, std::span<const double> v) {
    OOMET_DISPATCH(hinge_masked_sum, margins, v);
}

double hinge_masked_dot(std::span<const double> margins, std::span<const double> a,
                        std::span<const double> b) {
    OOMET_DISPATCH(hinge_masked_dot, margins, a, b);
}

#undef OOMET_DISPATCH
#undef OOMET_DISPATCH_VOID

}  // namespace oomet::kernels
