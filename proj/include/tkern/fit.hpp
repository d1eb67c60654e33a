#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>

#include "tkern/kernel.hpp"

namespace tkern {

struct FitResult {
    std::vector<cplx> coefficients;
    double max_error = 0.0;       ///< largest |residual| over the sample points
    bool minimax_converged = false; ///< set by fit_minimax when the exchange loop finished
};

/// Solves min_a |A a - y|_2 by column-scaled rank-revealing QR.  Throws if the
/// scaled matrix is rank deficient; col_name, when given, labels the first
/// redundant column in the message.
inline FitResult fit_least_squares(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& y,
                                   const std::function<std::string(Eigen::Index)>& col_name = {}) {
    const Eigen::Index rows = A.rows(), cols = A.cols();
    if (rows < cols || cols < 1) throw std::invalid_argument("fit: need at least as many samples as columns");
    auto label = [&](Eigen::Index j) {
        return col_name ? col_name(j) : "column " + std::to_string(j);
    };
    Eigen::VectorXd scale(cols);
    Eigen::MatrixXcd As(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        const double m = A.col(j).cwiseAbs().maxCoeff();
        if (m == 0.0) throw numerical_error("fit: " + label(j) + " vanishes on all samples");
        scale[j] = 1.0 / m;
        As.col(j) = A.col(j) * scale[j];
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(As);
    if (qr.rank() < cols) {
        const Eigen::Index bad = qr.colsPermutation().indices()[qr.rank()];
        throw numerical_error("fit: " + label(bad) + " is numerically dependent on the others");
    }
    const Eigen::VectorXcd a = qr.solve(y).cwiseProduct(scale.cast<cplx>());
    FitResult out;
    out.coefficients.assign(a.data(), a.data() + cols);
    out.max_error = (A * a - y).cwiseAbs().maxCoeff();
    return out;
}

/// Uniform-norm best fit by single-point exchange on the given sample set.
/// xs must be strictly increasing and aligned with the rows of A.  Falls back
/// to least squares (minimax_converged = false) if the exchange loop stalls.
/// Real data only: complex targets have no alternation theory to drive the
/// exchange.
inline FitResult fit_minimax(const Eigen::MatrixXd& A, const Eigen::VectorXd& y,
                             const Eigen::VectorXd& xs,
                             const std::function<std::string(Eigen::Index)>& col_name = {}) {
    const Eigen::Index rows = A.rows(), cols = A.cols();
    if (rows != y.size() || rows != xs.size())
        throw std::invalid_argument("fit: sample count mismatch");
    if (rows < cols + 1) throw std::invalid_argument("fit: need at least cols + 1 samples");

    auto fallback = [&]() {
        FitResult out = fit_least_squares(A.cast<cplx>(), y.cast<cplx>(), col_name);
        out.minimax_converged = false;
        return out;
    };

    // reference set: cols + 1 extremum-distributed sample indices
    const Eigen::Index m = cols;
    std::vector<Eigen::Index> refs(static_cast<std::size_t>(m) + 1);
    for (Eigen::Index i = 0; i <= m; ++i) {
        const double u = 0.5 * (1.0 - std::cos(3.14159265358979323846 * i / m));
        refs[static_cast<std::size_t>(i)] =
            std::min<Eigen::Index>(rows - 1, static_cast<Eigen::Index>(std::lround(u * (rows - 1))));
    }
    for (std::size_t i = 1; i < refs.size(); ++i)
        if (refs[i] <= refs[i - 1]) refs[i] = refs[i - 1] + 1;
    if (refs.back() >= rows) return fallback();

    Eigen::MatrixXd B(m + 1, m + 1);
    Eigen::VectorXd rhs(m + 1), sol;
    Eigen::VectorXd err(rows);
    for (int iter = 0; iter < 200; ++iter) {
        for (Eigen::Index i = 0; i <= m; ++i) {
            B.row(i).head(m) = A.row(refs[static_cast<std::size_t>(i)]);
            B(i, m) = (i % 2 == 0) ? 1.0 : -1.0;
            rhs[i] = y[refs[static_cast<std::size_t>(i)]];
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(B);
        if (qr.rank() < m + 1) return fallback();
        sol = qr.solve(rhs);
        if (!sol.allFinite()) return fallback();

        err = A * sol.head(m) - y;
        Eigen::Index worst = 0;
        const double emax = err.cwiseAbs().maxCoeff(&worst);
        const double level = std::abs(sol[m]);
        if (emax - level <= 1e-3 * emax) {
            FitResult out;
            out.coefficients.resize(static_cast<std::size_t>(m));
            for (Eigen::Index j = 0; j < m; ++j) out.coefficients[static_cast<std::size_t>(j)] = sol[j];
            out.max_error = emax;
            out.minimax_converged = true;
            return out;
        }

        // single-point exchange keeping the residual signs alternating
        std::size_t p = 0;
        double best = std::numeric_limits<double>::max();
        for (std::size_t i = 0; i < refs.size(); ++i) {
            const double d = std::abs(xs[refs[i]] - xs[worst]);
            if (d < best) { best = d; p = i; }
        }
        const bool same_sign = (err[worst] >= 0.0) == (err[refs[p]] >= 0.0);
        if (same_sign) {
            refs[p] = worst;
        } else if (worst < refs[p]) {
            if (p > 0) {
                refs[p - 1] = worst;
            } else {
                for (std::size_t i = refs.size() - 1; i > 0; --i) refs[i] = refs[i - 1];
                refs[0] = worst;
            }
        } else {
            if (p + 1 < refs.size()) {
                refs[p + 1] = worst;
            } else {
                for (std::size_t i = 0; i + 1 < refs.size(); ++i) refs[i] = refs[i + 1];
                refs.back() = worst;
            }
        }
    }
    return fallback();
}

// ---------------------------------------------------------------------------
// kernel construction by fitting the characteristic boundary data
// ---------------------------------------------------------------------------

enum class FitMethod { least_squares, minimax };

struct GoursatFitResult {
    KernelApproximation kernel;
    double even_error = 0.0; ///< residual of the fit against h/2 + (1/4) int q
    double odd_error = 0.0;  ///< residual of the fit against (1/4) int q
    bool even_minimax_converged = false;
    bool odd_minimax_converged = false;
};

namespace detail {

/// Values of the diagonal traces of the wave-polynomial basis at x: slot n of
/// `even` holds the trace of the nth even-in-t member, slot n-1 of `odd` the
/// nth odd one.
inline void trace_rows(const BasisFamily& fam, int N, double x, std::vector<cplx>& even,
                       std::vector<cplx>& odd) {
    const auto phis = fam.phi_row(x, N);
    even.assign(static_cast<std::size_t>(N) + 1, cplx{});
    odd.assign(static_cast<std::size_t>(N), cplx{});
    even[0] = phis[0];
    double xp; // x^k
    for (int n = 1; n <= N; ++n) {
        cplx e{}, o{};
        xp = 1.0;
        for (int k = 0; k <= n; ++k) {
            const cplx term = binom(n, k) * phis[static_cast<std::size_t>(n - k)] * xp;
            if (k % 2 == 0) e += term; else o += term;
            xp *= x;
        }
        even[static_cast<std::size_t>(n)] = e;
        odd[static_cast<std::size_t>(n) - 1] = o;
    }
}

} // namespace detail

/// Builds the degree-N kernel approximation whose coefficients fit the
/// characteristic boundary data of the potential over a refined sample grid
/// (refine subdivisions per grid interval).
inline GoursatFitResult kernel_from_goursat(std::shared_ptr<const BasisFamily> family,
                                            const GridFunction& q, FitMethod method, int N,
                                            int refine = 4) {
    if (!family) throw std::invalid_argument("fit: missing family");
    if (N < 1 || N > family->order) throw std::invalid_argument("fit: order out of range");
    if (refine < 1) throw std::invalid_argument("fit: refine must be positive");
    const BasisFamily& fam = *family;
    const GoursatTargets targets = goursat_targets(q, fam.h);
    const Eigen::Index rows = refine * (static_cast<Eigen::Index>(fam.n_points()) - 1) + 1;

    Eigen::MatrixXcd Ae(rows, N + 1), Ao(rows, N);
    Eigen::VectorXcd ye(rows), yo(rows);
    Eigen::VectorXd xs(rows);
    std::vector<cplx> even, odd;
    const double b = fam.b();
    for (Eigen::Index r = 0; r < rows; ++r) {
        const double x = -b + 2.0 * b * static_cast<double>(r) / static_cast<double>(rows - 1);
        xs[r] = x;
        detail::trace_rows(fam, N, x, even, odd);
        for (int n = 0; n <= N; ++n) Ae(r, n) = even[static_cast<std::size_t>(n)];
        for (int n = 1; n <= N; ++n) Ao(r, n - 1) = odd[static_cast<std::size_t>(n) - 1];
        ye[r] = targets.even_part.interpolate(x);
        yo[r] = targets.odd_part.interpolate(x);
    }

    auto even_name = [](Eigen::Index j) { return "even trace of order " + std::to_string(j); };
    auto odd_name = [](Eigen::Index j) { return "odd trace of order " + std::to_string(j + 1); };

    FitResult fe, fo;
    if (method == FitMethod::least_squares) {
        fe = fit_least_squares(Ae, ye, even_name);
        fo = fit_least_squares(Ao, yo, odd_name);
    } else {
        const double scale_e = ye.cwiseAbs().maxCoeff() + Ae.cwiseAbs().maxCoeff();
        const double scale_o = yo.cwiseAbs().maxCoeff() + Ao.cwiseAbs().maxCoeff();
        if (Ae.imag().cwiseAbs().maxCoeff() + ye.imag().cwiseAbs().maxCoeff() > 1e-13 * scale_e ||
            Ao.imag().cwiseAbs().maxCoeff() + yo.imag().cwiseAbs().maxCoeff() > 1e-13 * scale_o)
            throw std::invalid_argument("fit: minimax fitting requires real data");
        fe = fit_minimax(Ae.real(), ye.real(), xs, even_name);
        fo = fit_minimax(Ao.real(), yo.real(), xs, odd_name);
    }

    std::vector<cplx> c = fe.coefficients;
    std::vector<cplx> bcoef(static_cast<std::size_t>(N) + 1, cplx{});
    for (int n = 1; n <= N; ++n) bcoef[static_cast<std::size_t>(n)] = fo.coefficients[static_cast<std::size_t>(n) - 1];

    GoursatFitResult out{KernelApproximation(std::move(family), std::move(c), std::move(bcoef)),
                         fe.max_error, fo.max_error, fe.minimax_converged, fo.minimax_converged};
    return out;
}

} // namespace tkern
