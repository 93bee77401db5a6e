#include "oomet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oomet/errors.hpp"
#include "oomet/kernels.hpp"
#include "oomet/util.hpp"

namespace oomet {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014327;

struct ColumnStats {
    double mean = 0.0;
    double ssd = 0.0;  // sum of squared deviations
};

ColumnStats column_stats(std::span<const double> x) {
    ColumnStats s;
    s.mean = kernels::sum(x) / static_cast<double>(x.size());
    s.ssd = kernels::sum_sq_dev(x, s.mean);
    return s;
}

// Evaluates a Gaussian KDE with bandwidth h on an explicit grid.
std::vector<double> kde_on_grid(std::span<const double> values, double h,
                                std::span<const double> grid) {
    const double n = static_cast<double>(values.size());
    const double norm = kInvSqrt2Pi / (n * h);
    std::vector<double> density(grid.size(), 0.0);
    for (std::size_t g = 0; g < grid.size(); ++g) {
        double acc = 0.0;
        for (const double v : values) {
            const double z = (grid[g] - v) / h;
            acc += std::exp(-0.5 * z * z);
        }
        density[g] = acc * norm;
    }
    return density;
}

// Scott's rule with the sample standard deviation.
double scott_bandwidth(std::span<const double> values) {
    if (values.size() < 2)
        throw DegenerateColumnError("KDE needs at least two values");
    const ColumnStats s = column_stats(values);
    const double n = static_cast<double>(values.size());
    const double sigma = std::sqrt(s.ssd / (n - 1.0));
    if (sigma <= 0.0)
        throw DegenerateColumnError("KDE input has zero variance");
    return sigma * std::pow(n, -0.2);
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t grid_size) {
    std::vector<double> grid(grid_size);
    const double step = (hi - lo) / static_cast<double>(grid_size - 1);
    for (std::size_t i = 0; i < grid_size; ++i)
        grid[i] = lo + step * static_cast<double>(i);
    grid.back() = hi;
    return grid;
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw LengthMismatchError("pearson: input lengths differ (" +
                                  std::to_string(x.size()) + " vs " +
                                  std::to_string(y.size()) + ")");
    if (x.size() < 2)
        throw LengthMismatchError("pearson: need at least two observations");

    const ColumnStats sx = column_stats(x);
    const ColumnStats sy = column_stats(y);
    if (sx.ssd == 0.0 || sy.ssd == 0.0)
        throw DegenerateColumnError("pearson: constant input column");

    std::vector<double> dx(x.size()), dy(y.size());
    kernels::standardize(x, sx.mean, 1.0, dx);
    kernels::standardize(y, sy.mean, 1.0, dy);
    return kernels::dot(dx, dy) / std::sqrt(sx.ssd * sy.ssd);
}

CorrelationMatrix correlation_matrix(std::span<const LabeledSample> samples,
                                     std::span<const std::string> feature_names) {
    if (samples.size() < 2)
        throw LengthMismatchError("correlation matrix needs at least two samples");

    CorrelationMatrix matrix;
    matrix.feature_names.assign(feature_names.begin(), feature_names.end());

    std::vector<std::vector<double>> columns;
    for (const std::string& name : matrix.feature_names) {
        std::vector<double> col;
        col.reserve(samples.size());
        for (const LabeledSample& s : samples) col.push_back(feature_value(s, name));
        columns.push_back(std::move(col));
    }

    std::vector<bool> degenerate(columns.size(), false);
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (column_stats(columns[i]).ssd == 0.0) {
            degenerate[i] = true;
            matrix.degenerate_features.push_back(matrix.feature_names[i]);
        }
    }

    const std::size_t k = columns.size();
    matrix.values.assign(k, std::vector<std::optional<double>>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            if (degenerate[i] || degenerate[j]) continue;  // cells stay unavailable
            const double r = pearson(columns[i], columns[j]);
            matrix.values[i][j] = r;
            matrix.values[j][i] = r;
        }
    }
    return matrix;
}

void write_correlation_csv(std::ostream& out, const CorrelationMatrix& matrix) {
    out << "feature";
    for (const std::string& name : matrix.feature_names) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < matrix.feature_names.size(); ++i) {
        out << matrix.feature_names[i];
        for (std::size_t j = 0; j < matrix.feature_names.size(); ++j) {
            out << ',';
            if (matrix.values[i][j]) out << format_fixed(*matrix.values[i][j], 2);
        }
        out << '\n';
    }
}

DensityCurve kde(std::span<const double> values, std::size_t grid_size) {
    if (grid_size < 2) throw Error("KDE grid needs at least two points");
    const double h = scott_bandwidth(values);
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    DensityCurve curve;
    curve.bandwidth = h;
    curve.grid = uniform_grid(*lo_it - 4.0 * h, *hi_it + 4.0 * h, grid_size);
    curve.density = kde_on_grid(values, h, curve.grid);
    return curve;
}

std::pair<DensityCurve, DensityCurve> density_by_label(std::span<const LabeledSample> samples,
                                                       std::string_view feature,
                                                       std::size_t grid_size) {
    std::vector<double> faulty, non_faulty;
    for (const LabeledSample& s : samples)
        (s.label == 1 ? faulty : non_faulty).push_back(feature_value(s, feature));
    if (faulty.empty()) throw EmptyGroupError("no faulty samples in the dataset");
    if (non_faulty.empty()) throw EmptyGroupError("no non-faulty samples in the dataset");

    const double h_faulty = scott_bandwidth(faulty);
    const double h_non_faulty = scott_bandwidth(non_faulty);
    const double h_max = std::max(h_faulty, h_non_faulty);

    double lo = faulty.front(), hi = faulty.front();
    for (const double v : faulty) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    for (const double v : non_faulty) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    const std::vector<double> grid = uniform_grid(lo - 4.0 * h_max, hi + 4.0 * h_max,
                                                  grid_size < 2 ? 2 : grid_size);

    DensityCurve fc;
    fc.grid = grid;
    fc.bandwidth = h_faulty;
    fc.group_label = "faulty";
    fc.density = kde_on_grid(faulty, h_faulty, grid);

    DensityCurve nc;
    nc.grid = grid;
    nc.bandwidth = h_non_faulty;
    nc.group_label = "non_faulty";
    nc.density = kde_on_grid(non_faulty, h_non_faulty, grid);

    return {std::move(fc), std::move(nc)};
}

std::pair<DensityCurve, DensityCurve> scale_by_share(std::pair<DensityCurve, DensityCurve> curves,
                                                     std::size_t faulty_count,
                                                     std::size_t non_faulty_count) {
    const double total = static_cast<double>(faulty_count + non_faulty_count);
    const double f_share = static_cast<double>(faulty_count) / total;
    const double n_share = static_cast<double>(non_faulty_count) / total;
    for (double& d : curves.first.density) d *= f_share;
    for (double& d : curves.second.density) d *= n_share;
    return curves;
}

void write_density_csv(std::ostream& out, const DensityCurve& faulty,
                       const DensityCurve& non_faulty) {
    out << "grid,density,label\n";
    for (std::size_t i = 0; i < faulty.grid.size(); ++i)
        out << format_fixed(faulty.grid[i], 4) << ',' << format_fixed(faulty.density[i], 4)
            << ",faulty\n";
    for (std::size_t i = 0; i < non_faulty.grid.size(); ++i)
        out << format_fixed(non_faulty.grid[i], 4) << ','
            << format_fixed(non_faulty.density[i], 4) << ",non_faulty\n";
}

double trapezoid_integral(std::span<const double> grid, std::span<const double> density) {
    double acc = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i)
        acc += 0.5 * (density[i] + density[i - 1]) * (grid[i] - grid[i - 1]);
    return acc;
}

std::string density_svg(const DensityCurve& faulty, const DensityCurve& non_faulty,
                        std::string_view title) {
    constexpr int kWidth = 640, kHeight = 360, kPad = 48;
    double y_max = 0.0;
    for (const double d : faulty.density) y_max = std::max(y_max, d);
    for (const double d : non_faulty.density) y_max = std::max(y_max, d);
    if (y_max <= 0.0) y_max = 1.0;
    const double x_lo = faulty.grid.front(), x_hi = faulty.grid.back();

    auto px = [&](double x) {
        return kPad + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kPad);
    };
    auto py = [&](double y) { return kHeight - kPad - y / y_max * (kHeight - 2 * kPad); };
    auto polyline = [&](const DensityCurve& c, const char* color) {
        std::ostringstream s;
        s << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < c.grid.size(); ++i) {
            if (i) s << ' ';
            s << format_fixed(px(c.grid[i]), 2) << ',' << format_fixed(py(c.density[i]), 2);
        }
        s << "\"/>\n";
        return s.str();
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "  <text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n"
        << "  <line x1=\"" << kPad << "\" y1=\"" << kHeight - kPad << "\" x2=\""
        << kWidth - kPad << "\" y2=\"" << kHeight - kPad << "\" stroke=\"black\"/>\n"
        << "  <line x1=\"" << kPad << "\" y1=\"" << kPad << "\" x2=\"" << kPad << "\" y2=\""
        << kHeight - kPad << "\" stroke=\"black\"/>\n"
        << "  <text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">value</text>\n"
        << "  <text x=\"16\" y=\"" << kHeight / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
           "transform=\"rotate(-90 16 " << kHeight / 2 << ")\">density</text>\n"
        << polyline(faulty, "#c0392b") << polyline(non_faulty, "#2471a3")
        << "  <text x=\"" << kWidth - kPad << "\" y=\"36\" text-anchor=\"end\" "
           "font-family=\"sans-serif\" font-size=\"12\" fill=\"#c0392b\">faulty</text>\n"
        << "  <text x=\"" << kWidth - kPad << "\" y=\"52\" text-anchor=\"end\" "
           "font-family=\"sans-serif\" font-size=\"12\" fill=\"#2471a3\">non-faulty</text>\n"
        << "</svg>\n";
    return svg.str();
}

}  // namespace oomet
