#pragma once

#include <algorithm>

#include "tkern/kernel.hpp"

namespace tkern {

namespace detail {

/// s_k(beta) = int_0^1 u^k sin(beta u) du and c_k = the cosine analogue.
/// Upward recursion divides by beta, so it is used only for beta >= k + 2;
/// below that the alternating series is summed in quad precision, where the
/// worst cancellation (beta near k + 2 <= 40 or so) still leaves plenty of
/// mantissa.
struct SinCosMoment {
    double s, c;
};

inline double moment_series_s(int k, double beta) {
    const __float128 b2 = static_cast<__float128>(beta) * beta;
    __float128 term = beta, acc = 0;
    for (int j = 0; j < 400; ++j) {
        const __float128 contrib = term / (k + 2 * j + 2);
        acc += contrib;
        term *= -b2 / ((2 * j + 2) * (2 * j + 3));
        if (j > 2 && contrib > -1e-45 && contrib < 1e-45) break;
    }
    return static_cast<double>(acc);
}

inline double moment_series_c(int k, double beta) {
    const __float128 b2 = static_cast<__float128>(beta) * beta;
    __float128 term = 1, acc = 0;
    for (int j = 0; j < 400; ++j) {
        const __float128 contrib = term / (k + 2 * j + 1);
        acc += contrib;
        term *= -b2 / ((2 * j + 1) * (2 * j + 2));
        if (j > 2 && contrib > -1e-45 && contrib < 1e-45) break;
    }
    return static_cast<double>(acc);
}

/// Pair (s_k, c_k): recursion when it is stable for every index on the way
/// up, the series otherwise.
inline SinCosMoment sincos_moment(int k, double beta, const TrigOfProduct& tp) {
    if (beta < k + 2) return {moment_series_s(k, beta), moment_series_c(k, beta)};
    SinCosMoment m{(1.0 - tp.cos_v) / beta, tp.sin_v / beta};
    for (int j = 1; j <= k; ++j) {
        const double s = -tp.cos_v / beta + (j / beta) * m.c;
        const double c = tp.sin_v / beta - (j / beta) * m.s;
        m = {s, c};
    }
    return m;
}

} // namespace detail

/// M_k(omega, x) = int_{-x}^{x} t^k sin(omega t) dt; zero for even k.
inline double sine_moment(int k, double omega, double x) {
    if (k < 0) throw std::invalid_argument("spectral: negative moment index");
    if (k % 2 == 0) return 0.0;
    const auto tp = trig_of_product(omega, x);
    return 2.0 * std::pow(x, k + 1) * detail::sincos_moment(k, omega * x, tp).s;
}

/// dM_k/domega = int_{-x}^{x} t^{k+1} cos(omega t) dt (for odd k).
inline double sine_moment_derivative(int k, double omega, double x) {
    if (k < 0) throw std::invalid_argument("spectral: negative moment index");
    if (k % 2 == 0) return 0.0;
    const auto tp = trig_of_product(omega, x);
    return 2.0 * std::pow(x, k + 2) * detail::sincos_moment(k + 1, omega * x, tp).c;
}

/// The transmuted sine solution scaled by omega,
///   s_N(x; omega) = sin(omega x) + sum over odd k of A_k(x) M_k(omega, x),
/// where A_k(x) are the t-power coefficients of the kernel at x.  Fixing
/// x = b gives the characteristic function of the Dirichlet problem on
/// [0, b]: eigenvalues are the squares of its positive roots.
class SineRepresentation {
public:
    SineRepresentation(const KernelApproximation& kernel, double x) : x_(x) {
        const auto a = kernel.t_coefficients(x);
        double scale = 0.0;
        for (const auto& z : a) scale = std::max(scale, std::abs(z));
        A_.resize(a.size());
        // only odd powers of t survive the integration against sin(omega t),
        // so realness matters (and is enforced) for those slots alone
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (k % 2 == 1 && std::abs(a[k].imag()) > 1e-10 * (scale + 1.0))
                throw std::invalid_argument("spectral: kernel coefficients must be real");
            A_[k] = a[k].real();
        }
    }

    explicit SineRepresentation(const KernelApproximation& kernel)
        : SineRepresentation(kernel, kernel.family().b()) {}

    [[nodiscard]] double x() const { return x_; }
    [[nodiscard]] const std::vector<double>& coefficients() const { return A_; }

    [[nodiscard]] double evaluate(double omega) const {
        const auto tp = trig_of_product(omega, x_);
        double acc = tp.sin_v;
        double xp = 2.0 * x_ * x_; // 2 x^{k+1}
        for (std::size_t k = 1; k < A_.size(); k += 2) {
            if (A_[k] != 0.0)
                acc += A_[k] * xp * detail::sincos_moment(static_cast<int>(k), omega * x_, tp).s;
            xp *= x_ * x_;
        }
        return acc;
    }

    [[nodiscard]] double derivative(double omega) const {
        const auto tp = trig_of_product(omega, x_);
        double acc = x_ * tp.cos_v;
        double xp = 2.0 * x_ * x_ * x_; // 2 x^{k+2}
        for (std::size_t k = 1; k < A_.size(); k += 2) {
            if (A_[k] != 0.0)
                acc += A_[k] * xp * detail::sincos_moment(static_cast<int>(k) + 1, omega * x_, tp).c;
            xp *= x_ * x_;
        }
        return acc;
    }

private:
    double x_;
    std::vector<double> A_;
};

/// Value of the approximate transmuted sine at 0 <= x <= b.
inline double s_N(const KernelApproximation& kernel, double x, double omega) {
    if (x == 0.0) return 0.0;
    return SineRepresentation(kernel, x).evaluate(omega);
}

struct SearchWindow {
    double omega_min = 0.0;  ///< scan start (0 means just above the trivial root)
    double omega_max = 0.0;  ///< scan cap (0 means sized from the requested count)
    double scan_step = 0.0;  ///< 0 means a quarter of the asymptotic root spacing
    double root_tol = 1e-13; ///< relative bound the final Newton step must meet
};

struct SpectralProblem {
    GridFunction q;
    double b;
    KernelApproximation kernel;
    SearchWindow search;
};

struct EigenvalueRecord {
    int index = 0;             ///< 1-based position in the ascending sequence
    double omega = 0.0;
    double omega_sq = 0.0;
    double char_residual = 0.0; ///< |s_N(b; omega)| at the accepted root
    double bracket_lo = 0.0;    ///< sign-change bracket the root was found in
    double bracket_hi = 0.0;
};

struct EigenvalueResult {
    std::vector<EigenvalueRecord> values;
    bool complete = true; ///< false when the scan cap was hit before `count` roots
};

namespace detail {

inline EigenvalueRecord polish_root(const SineRepresentation& rep, double lo, double hi,
                                    double root_tol) {
    EigenvalueRecord rec;
    rec.bracket_lo = lo;
    rec.bracket_hi = hi;
    double flo = rep.evaluate(lo);
    for (int i = 0; i < 60 && hi - lo > 1e-9 * (1.0 + hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = rep.evaluate(mid);
        if ((fm >= 0.0) == (flo >= 0.0)) { lo = mid; flo = fm; }
        else hi = mid;
    }
    double w = 0.5 * (lo + hi), last = hi - lo;
    for (int i = 0; i < 50; ++i) {
        const double d = rep.derivative(w);
        if (d == 0.0) break;
        const double delta = rep.evaluate(w) / d;
        w -= delta;
        last = std::abs(delta);
        if (last <= 1e-16 * std::max(1.0, std::abs(w))) break;
    }
    if (last > root_tol * std::max(1.0, std::abs(w)))
        throw numerical_error("spectral: root refinement stalled near omega = " + std::to_string(w));
    rec.omega = w;
    rec.omega_sq = w * w;
    rec.char_residual = std::abs(rep.evaluate(w));
    return rec;
}

} // namespace detail

/// First `count` positive roots of the characteristic function, by a
/// sign-change scan plus bisection and Newton polish.  Wide gaps between
/// consecutive roots are rescanned at eight-fold resolution to catch
/// near-tangent pairs.
inline EigenvalueResult find_eigenvalues(const SineRepresentation& rep, int count,
                                         SearchWindow search = {}) {
    if (count < 1) throw std::invalid_argument("spectral: count must be positive");
    const double pi = 3.14159265358979323846;
    const double step = search.scan_step > 0.0 ? search.scan_step : pi / (4.0 * rep.x());
    const double cap = search.omega_max > 0.0
                           ? search.omega_max
                           : (static_cast<double>(count) + 25.0) * pi / rep.x() * 1.5;

    EigenvalueResult out;
    std::vector<double> roots;
    std::vector<std::pair<double, double>> brackets;
    auto scan = [&](double from, double to, double h, int want) {
        double prev_x = from, prev_f = rep.evaluate(from);
        for (double x = from + h; prev_x < to && static_cast<int>(roots.size()) < want; x += h) {
            const double f = rep.evaluate(x);
            if ((f >= 0.0) != (prev_f >= 0.0)) {
                roots.push_back(0.5 * (prev_x + x));
                brackets.emplace_back(prev_x, x);
            }
            prev_x = x;
            prev_f = f;
        }
    };

    scan(std::max(search.omega_min, 0.5 * step), cap, step, count);
    out.complete = static_cast<int>(roots.size()) >= count;

    // rescan suspiciously wide interior gaps for roots the coarse pass missed
    if (roots.size() >= 4) {
        std::vector<double> gaps(roots.size() - 1);
        for (std::size_t i = 1; i < roots.size(); ++i) gaps[i - 1] = roots[i] - roots[i - 1];
        std::vector<double> sorted = gaps;
        std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2),
                         sorted.end());
        const double med = sorted[sorted.size() / 2];
        const std::size_t n_before = roots.size();
        for (std::size_t i = 0; i + 1 < n_before; ++i)
            if (roots[i + 1] - roots[i] > 2.5 * med)
                scan(roots[i] + 0.05 * med, roots[i + 1] - 0.05 * med, step / 8.0,
                     static_cast<int>(n_before) + 8);
        if (roots.size() > n_before) {
            std::vector<std::size_t> idx(roots.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return roots[a] < roots[b]; });
            std::vector<double> r2;
            std::vector<std::pair<double, double>> b2;
            for (std::size_t i : idx) {
                if (!r2.empty() && std::abs(roots[i] - r2.back()) < 0.25 * step) continue;
                r2.push_back(roots[i]);
                b2.push_back(brackets[i]);
            }
            roots.swap(r2);
            brackets.swap(b2);
            out.complete = static_cast<int>(roots.size()) >= count;
        }
    }

    if (static_cast<int>(roots.size()) > count) {
        roots.resize(static_cast<std::size_t>(count));
        brackets.resize(static_cast<std::size_t>(count));
    }
    out.values.resize(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        out.values[i] = detail::polish_root(rep, brackets[i].first, brackets[i].second, search.root_tol);
        out.values[i].index = static_cast<int>(i) + 1;
    }
    return out;
}

/// Checks the family consistency invariant (f'' = q f on the grid) and then
/// solves for the first `count` eigenvalues of the problem.
inline EigenvalueResult find_eigenvalues(const SpectralProblem& problem, int count) {
    const auto& fam = problem.kernel.family();
    if (problem.q.size() != fam.n_points() || problem.q.b() != fam.b())
        throw std::invalid_argument("spectral: potential grid does not match the kernel family");
    if (std::abs(problem.b - fam.b()) > 1e-12 * (1.0 + problem.b))
        throw std::invalid_argument("spectral: interval length does not match the kernel family");
    const GridFunction fpp = derivative_grid(derivative_grid(fam.f));
    double resid = 0.0, scale = 1.0;
    for (std::size_t i = 0; i < fpp.size(); ++i) {
        resid = std::max(resid, std::abs(fpp[i] - problem.q[i] * fam.f[i]));
        scale = std::max(scale, std::abs(problem.q[i] * fam.f[i]));
    }
    // a wrong potential leaves an O(1) relative residual; the bound only has
    // to sit above the stencil truncation of coarse grids
    if (resid > 1e-3 * scale)
        throw std::invalid_argument("spectral: kernel family does not solve f'' = q f for this potential");
    return find_eigenvalues(SineRepresentation(problem.kernel), count, problem.search);
}

} // namespace tkern
