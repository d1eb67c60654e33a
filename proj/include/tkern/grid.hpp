#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tkern/common.hpp"

namespace tkern {

namespace detail {

/// 6-point Gauss-Legendre rule on [-1, 1]; exact through degree 11.
struct GaussLegendre6 {
    static constexpr std::array<double, 3> x{0.2386191860831969086305017,
                                             0.6612093864662645136613996,
                                             0.9324695142031520278123016};
    static constexpr std::array<double, 3> w{0.4679139345726910473898703,
                                             0.3607615730481386075698335,
                                             0.1713244923791703450402961};
};

/// Value of the Lagrange basis polynomial for node m of the stencil {0..5}.
inline double lagrange6(int m, double t) {
    double p = 1.0;
    for (int j = 0; j < 6; ++j) {
        if (j == m) continue;
        p *= (t - j) / static_cast<double>(m - j);
    }
    return p;
}

/// Weights for integrating a degree-5 interpolant over the unit interval
/// [r, r+1] inside a 6-node stencil, one row per interval position r = 0..4.
/// Generated once with Gauss-Legendre, which is exact for these integrands.
inline const std::array<std::array<double, 6>, 5>& interval_weights() {
    static const std::array<std::array<double, 6>, 5> rows = [] {
        std::array<std::array<double, 6>, 5> out{};
        for (int r = 0; r < 5; ++r) {
            for (int m = 0; m < 6; ++m) {
                const double mid = r + 0.5;
                double acc = 0.0;
                for (int g = 0; g < 3; ++g) {
                    acc += 0.5 * GaussLegendre6::w[g] *
                           (lagrange6(m, mid + 0.5 * GaussLegendre6::x[g]) +
                            lagrange6(m, mid - 0.5 * GaussLegendre6::x[g]));
                }
                out[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)] = acc;
            }
        }
        return out;
    }();
    return rows;
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace detail

/// Complex-valued function sampled on the uniform grid covering [-b, b].
/// Calculus operations (interpolation, integration, differentiation) use
/// degree-5 local stencils and need at least 6 nodes.
class GridFunction {
public:
    GridFunction() = default;

    GridFunction(double b, std::size_t n_points, cplx fill = cplx{})
        : b_(b), values_(n_points, fill) {
        if (!(b > 0.0)) throw std::invalid_argument("grid: half-width must be positive");
        if (n_points < 2) throw std::invalid_argument("grid: need at least two points");
    }

    static GridFunction from_samples(double b, std::vector<cplx> values) {
        GridFunction g(b, values.size());
        g.values_ = std::move(values);
        return g;
    }

    template <typename Fn>
    static GridFunction sample(double b, std::size_t n_points, Fn&& fn) {
        GridFunction g(b, n_points);
        for (std::size_t i = 0; i < n_points; ++i) g.values_[i] = fn(g.node(i));
        return g;
    }

    [[nodiscard]] double b() const { return b_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] double step() const { return 2.0 * b_ / static_cast<double>(size() - 1); }
    [[nodiscard]] double node(std::size_t i) const {
        return -b_ + static_cast<double>(i) * step();
    }

    cplx& operator[](std::size_t i) { return values_[i]; }
    const cplx& operator[](std::size_t i) const { return values_[i]; }
    [[nodiscard]] const std::vector<cplx>& values() const { return values_; }

    /// Degree-5 Lagrange interpolation on the 6 nodes nearest to x.
    [[nodiscard]] cplx interpolate(double x) const {
        require_calculus();
        const std::size_t n = size();
        const double u = (x + b_) / step();
        long i0 = static_cast<long>(std::floor(u)) - 2;
        i0 = std::clamp<long>(i0, 0, static_cast<long>(n) - 6);
        const double t = u - static_cast<double>(i0);
        cplx acc{};
        for (int m = 0; m < 6; ++m)
            acc += detail::lagrange6(m, t) * values_[static_cast<std::size_t>(i0) + m];
        return acc;
    }

    /// Value at x = 0 (exact node when the point count is odd).
    [[nodiscard]] cplx at_zero() const {
        if (size() % 2 == 1) return values_[(size() - 1) / 2];
        return interpolate(0.0);
    }

    void require_calculus() const {
        if (size() < 6)
            throw std::invalid_argument("grid: calculus operations need at least 6 points");
    }

private:
    double b_ = 1.0;
    std::vector<cplx> values_;
};

namespace detail {

inline void require_same_layout(const GridFunction& a, const GridFunction& g) {
    if (a.size() != g.size() || a.b() != g.b())
        throw std::invalid_argument("grid: operands sampled on different grids");
}

} // namespace detail

inline GridFunction operator+(const GridFunction& a, const GridFunction& c) {
    detail::require_same_layout(a, c);
    GridFunction out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c[i];
    return out;
}

inline GridFunction operator-(const GridFunction& a, const GridFunction& c) {
    detail::require_same_layout(a, c);
    GridFunction out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c[i];
    return out;
}

inline GridFunction operator*(const GridFunction& a, const GridFunction& c) {
    detail::require_same_layout(a, c);
    GridFunction out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= c[i];
    return out;
}

inline GridFunction operator/(const GridFunction& a, const GridFunction& c) {
    detail::require_same_layout(a, c);
    GridFunction out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] /= c[i];
    return out;
}

inline GridFunction operator*(cplx s, const GridFunction& g) {
    GridFunction out = g;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= s;
    return out;
}

/// Antiderivative F(x) = integral of g from 0 to x, sampled on the same grid.
/// Each interval is integrated with the degree-5 interpolatory rule, giving
/// sixth-order convergence for smooth integrands, and F is shifted so F(0) = 0.
inline GridFunction indefinite_integral(const GridFunction& g) {
    g.require_calculus();
    const std::size_t n = g.size();
    const double h = g.step();
    const auto& rows = detail::interval_weights();
    GridFunction out(g.b(), n);
    out[0] = cplx{};
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const long j0 = std::clamp<long>(static_cast<long>(i) - 2, 0, static_cast<long>(n) - 6);
        const auto& w = rows[i - static_cast<std::size_t>(j0)];
        cplx inc{};
        for (int m = 0; m < 6; ++m) inc += w[static_cast<std::size_t>(m)] * g[static_cast<std::size_t>(j0) + m];
        out[i + 1] = out[i] + h * inc;
    }
    const cplx shift = out.at_zero();
    for (std::size_t i = 0; i < n; ++i) out[i] -= shift;
    return out;
}

/// Fourth-order finite-difference derivative on the grid (5-point stencils,
/// one-sided at the two nodes next to each boundary).
inline GridFunction derivative_grid(const GridFunction& g) {
    g.require_calculus();
    const std::size_t n = g.size();
    const double h = g.step();
    GridFunction out(g.b(), n);
    auto v = [&](std::size_t i) { return g[i]; };
    out[0] = (-25.0 * v(0) + 48.0 * v(1) - 36.0 * v(2) + 16.0 * v(3) - 3.0 * v(4)) / (12.0 * h);
    out[1] = (-3.0 * v(0) - 10.0 * v(1) + 18.0 * v(2) - 6.0 * v(3) + v(4)) / (12.0 * h);
    for (std::size_t i = 2; i + 2 < n; ++i)
        out[i] = (v(i - 2) - 8.0 * v(i - 1) + 8.0 * v(i + 1) - v(i + 2)) / (12.0 * h);
    out[n - 2] = (3.0 * v(n - 1) + 10.0 * v(n - 2) - 18.0 * v(n - 3) + 6.0 * v(n - 4) - v(n - 5)) / (12.0 * h);
    out[n - 1] = (25.0 * v(n - 1) - 48.0 * v(n - 2) + 36.0 * v(n - 3) - 16.0 * v(n - 4) + 3.0 * v(n - 5)) / (12.0 * h);
    return out;
}

namespace detail {

/// 16-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre16 {
    static constexpr std::array<double, 8> x{
        0.0950125098376374401853193, 0.2816035507792589132304605,
        0.4580167776572273863424194, 0.6178762444026437484466718,
        0.7554044083550030338951012, 0.8656312023878317438804679,
        0.9445750230732325760779884, 0.9894009349916499325961542};
    static constexpr std::array<double, 8> w{
        0.1894506104550684962853967, 0.1826034150449235888667637,
        0.1691565193950025381893121, 0.1495959888165767320815017,
        0.1246289712555338720524763, 0.0951585116824927848099251,
        0.0622535239386478928628438, 0.0271524594117540948517806};
};

} // namespace detail

/// Composite 16-point Gauss-Legendre quadrature of fn over [a, c].  The panel
/// count grows with the interval length so smooth integrands are resolved to
/// machine precision.
template <typename Fn>
cplx integrate_gl(Fn&& fn, double a, double c, int panels = 0) {
    if (a == c) return cplx{};
    if (panels <= 0)
        panels = std::max(1, static_cast<int>(std::ceil(std::abs(c - a) / 0.5)));
    const double hp = (c - a) / panels;
    cplx acc{};
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * hp;
        const double half = 0.5 * hp;
        for (int g = 0; g < 8; ++g) {
            const double d = half * detail::GaussLegendre16::x[static_cast<std::size_t>(g)];
            acc += half * detail::GaussLegendre16::w[static_cast<std::size_t>(g)] *
                   (fn(mid + d) + fn(mid - d));
        }
    }
    return acc;
}

/// Writes the grid as CSV with header "x,re,im" and full double precision.
inline void write_csv(const GridFunction& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("grid: cannot open " + path + " for writing");
    out << "x,re,im\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        out << detail::format_double(g.node(i)) << ',' << detail::format_double(g[i].real())
            << ',' << detail::format_double(g[i].imag()) << '\n';
    }
}

/// Parsed CSV samples before any grid-shape interpretation.
struct CsvSamples {
    std::vector<double> x;
    std::vector<cplx> value;
};

/// Reads rows "x,re[,im]"; a header line is skipped if present.
inline CsvSamples read_csv_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("grid: cannot open " + path);
    CsvSamples out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.empty()) continue;
        char* end = nullptr;
        const double x = std::strtod(fields[0].c_str(), &end);
        if (end == fields[0].c_str() || (end && *end != '\0' && *end != '\r')) {
            if (out.x.empty()) continue; // header
            throw std::invalid_argument("grid: malformed CSV row in " + path + ": " + line);
        }
        if (fields.size() < 2) throw std::invalid_argument("grid: CSV row needs a value: " + line);
        const double re = std::strtod(fields[1].c_str(), nullptr);
        const double im = fields.size() > 2 ? std::strtod(fields[2].c_str(), nullptr) : 0.0;
        out.x.push_back(x);
        out.value.emplace_back(re, im);
    }
    if (out.x.size() < 2) throw std::invalid_argument("grid: CSV has fewer than two samples");
    return out;
}

/// Reads a full-grid CSV written by write_csv; validates uniform spacing and
/// a symmetric domain.
inline GridFunction read_csv(const std::string& path) {
    const CsvSamples s = read_csv_samples(path);
    const std::size_t n = s.x.size();
    const double b = s.x.back();
    if (!(b > 0.0) || std::abs(s.x.front() + b) > 1e-9 * b)
        throw std::invalid_argument("grid: CSV domain is not symmetric about 0");
    const double h = 2.0 * b / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(s.x[i] - (-b + static_cast<double>(i) * h)) > 1e-8 * (b + 1.0))
            throw std::invalid_argument("grid: CSV nodes are not uniformly spaced");
    }
    return GridFunction::from_samples(b, s.value);
}

inline nlohmann::ordered_json to_json(const GridFunction& g) {
    nlohmann::ordered_json j;
    j["b"] = g.b();
    j["n_points"] = g.size();
    auto& vals = j["values"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.size(); ++i)
        vals.push_back({g[i].real(), g[i].imag()});
    return j;
}

inline GridFunction grid_from_json(const nlohmann::json& j) {
    const double b = j.at("b").get<double>();
    const std::size_t n = j.at("n_points").get<std::size_t>();
    const auto& vals = j.at("values");
    if (vals.size() != n) throw std::invalid_argument("grid: JSON value count mismatch");
    std::vector<cplx> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = cplx(vals[i][0].get<double>(), vals[i][1].get<double>());
    return GridFunction::from_samples(b, std::move(v));
}

} // namespace tkern
