#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oomet/dataset.hpp"

namespace oomet {

// Product-moment correlation. Throws LengthMismatchError (unequal or < 2)
// and DegenerateColumnError (zero variance).
double pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationMatrix {
    std::vector<std::string> feature_names;
    // values[i][j]; nullopt marks a cell touching a degenerate column.
    std::vector<std::vector<std::optional<double>>> values;
    std::vector<std::string> degenerate_features;
};

CorrelationMatrix correlation_matrix(std::span<const LabeledSample> samples,
                                     std::span<const std::string> feature_names);

// Header/first column are feature names; 2-decimal cells, blank when
// unavailable.
void write_correlation_csv(std::ostream& out, const CorrelationMatrix& matrix);

struct DensityCurve {
    std::vector<double> grid;
    std::vector<double> density;
    double bandwidth = 0.0;
    std::string group_label;
};

// Gaussian KDE with Scott's-rule bandwidth on a uniform grid spanning
// [min - 4h, max + 4h].
DensityCurve kde(std::span<const double> values, std::size_t grid_size);

// One curve per label group on a shared grid: {faulty, non_faulty}.
std::pair<DensityCurve, DensityCurve> density_by_label(std::span<const LabeledSample> samples,
                                                       std::string_view feature,
                                                       std::size_t grid_size = 256);

// Multiplies densities by each group's sample share so peak heights are
// comparable across imbalanced groups.
std::pair<DensityCurve, DensityCurve> scale_by_share(std::pair<DensityCurve, DensityCurve> curves,
                                                     std::size_t faulty_count,
                                                     std::size_t non_faulty_count);

// `grid,density,label` rows for both curves.
void write_density_csv(std::ostream& out, const DensityCurve& faulty,
                       const DensityCurve& non_faulty);

// Two-polyline SVG chart for eyeballing the curves.
std::string density_svg(const DensityCurve& faulty, const DensityCurve& non_faulty,
                        std::string_view title);

double trapezoid_integral(std::span<const double> grid, std::span<const double> density);

}  // namespace oomet
