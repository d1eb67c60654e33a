#pragma once

#include <cstring>
#include <memory>
#include <optional>
#include <vector>

#include "tkern/grid.hpp"

namespace tkern {

/// Family of iterated-integral functions built from a nonvanishing solution f
/// of f'' = q f with f(0) = 1.  Two interleaved sequences of antiderivatives
/// feed the phi (image of powers) and psi (reciprocal-side) functions; their
/// first derivatives come from the closed forms, not finite differences.
class BasisFamily {
public:
    GridFunction f, fprime;
    cplx h{};  ///< f'(0)
    int order = 0;

    std::vector<GridFunction> X, Xt;                       ///< iterated integrals, index 0..order
    std::vector<GridFunction> phi, psi;                    ///< basis functions, index 0..order
    std::vector<GridFunction> phi_prime, psi_prime;        ///< their derivatives

    [[nodiscard]] double b() const { return f.b(); }
    [[nodiscard]] std::size_t n_points() const { return f.size(); }

    [[nodiscard]] cplx phi_at(int k, double x) const { return phi[static_cast<std::size_t>(k)].interpolate(x); }
    [[nodiscard]] cplx psi_at(int k, double x) const { return psi[static_cast<std::size_t>(k)].interpolate(x); }
    [[nodiscard]] cplx phi_prime_at(int k, double x) const {
        return phi_prime[static_cast<std::size_t>(k)].interpolate(x);
    }

    /// Interpolates phi_0..phi_n at one point in a single pass.
    [[nodiscard]] std::vector<cplx> phi_row(double x, int n) const {
        std::vector<cplx> out(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] = phi_at(k, x);
        return out;
    }

    [[nodiscard]] std::vector<cplx> phi_prime_row(double x, int n) const {
        std::vector<cplx> out(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] = phi_prime_at(k, x);
        return out;
    }

    /// Hash of the defining data (domain, sampling, h, f values); two families
    /// agree on it exactly when they were built from identical inputs.
    [[nodiscard]] std::uint64_t fingerprint() const {
        std::uint64_t acc = 1469598103934665603ull; // FNV-1a 64
        auto mix_bytes = [&acc](const void* p, std::size_t len) {
            const auto* c = static_cast<const unsigned char*>(p);
            for (std::size_t i = 0; i < len; ++i) {
                acc ^= c[i];
                acc *= 1099511628211ull;
            }
        };
        const double bb = b();
        const std::uint64_t n = n_points();
        const std::uint64_t ord = static_cast<std::uint64_t>(order);
        double hh[2] = {h.real(), h.imag()};
        mix_bytes(&bb, sizeof bb);
        mix_bytes(&n, sizeof n);
        mix_bytes(&ord, sizeof ord);
        mix_bytes(hh, sizeof hh);
        for (std::size_t i = 0; i < f.size(); ++i) {
            double v[2] = {f[i].real(), f[i].imag()};
            mix_bytes(v, sizeof v);
        }
        return acc;
    }
};

/// Builds the family from a sampled nonvanishing f.  The samples are rescaled
/// so f(0) = 1 (rejecting f(0) = 0); a real-valued f must keep one sign across
/// the grid.  The derivative grid and h are taken from the optional arguments
/// or computed by fourth-order finite differences.
inline BasisFamily build_basis_family(const GridFunction& f_in, int order,
                                      std::optional<cplx> h = std::nullopt,
                                      const GridFunction* fprime_in = nullptr) {
    if (order < 0) throw std::invalid_argument("basis: negative order");
    f_in.require_calculus();

    const cplx f0 = f_in.at_zero();
    if (std::abs(f0) < 1e-300) throw std::invalid_argument("basis: f vanishes at the origin");

    BasisFamily fam;
    fam.f = (cplx(1.0) / f0) * f_in;
    if (fprime_in) {
        detail::require_same_layout(*fprime_in, f_in);
        fam.fprime = (cplx(1.0) / f0) * (*fprime_in);
    } else {
        fam.fprime = derivative_grid(fam.f);
    }
    fam.h = h ? *h : fam.fprime.at_zero();
    fam.order = order;

    // reject sign changes (real data) and near-zero samples (complex data)
    double max_abs = 0.0;
    double max_imag = 0.0;
    for (std::size_t i = 0; i < fam.f.size(); ++i) {
        max_abs = std::max(max_abs, std::abs(fam.f[i]));
        max_imag = std::max(max_imag, std::abs(fam.f[i].imag()));
    }
    if (max_imag <= 1e-14 * max_abs) {
        for (std::size_t i = 0; i + 1 < fam.f.size(); ++i) {
            if (fam.f[i].real() == 0.0 || fam.f[i].real() * fam.f[i + 1].real() < 0.0)
                throw std::invalid_argument("basis: f changes sign inside the domain");
        }
    } else {
        for (std::size_t i = 0; i < fam.f.size(); ++i) {
            if (std::abs(fam.f[i]) < 1e-13 * max_abs)
                throw std::invalid_argument("basis: |f| nearly vanishes inside the domain");
        }
    }

    const std::size_t n = fam.f.size();
    GridFunction f_sq = fam.f * fam.f;
    GridFunction inv_f_sq(fam.f.b(), n);
    for (std::size_t i = 0; i < n; ++i) inv_f_sq[i] = cplx(1.0) / f_sq[i];

    fam.X.resize(static_cast<std::size_t>(order) + 1);
    fam.Xt.resize(static_cast<std::size_t>(order) + 1);
    GridFunction ones(fam.f.b(), n, cplx(1.0));
    fam.X[0] = ones;
    fam.Xt[0] = ones;
    for (int m = 1; m <= order; ++m) {
        // X alternates weights 1/f^2 (odd m), f^2 (even m); Xt the opposite
        const GridFunction& wX = (m % 2 == 1) ? inv_f_sq : f_sq;
        const GridFunction& wXt = (m % 2 == 1) ? f_sq : inv_f_sq;
        fam.X[static_cast<std::size_t>(m)] =
            cplx(static_cast<double>(m)) * indefinite_integral(fam.X[static_cast<std::size_t>(m) - 1] * wX);
        fam.Xt[static_cast<std::size_t>(m)] =
            cplx(static_cast<double>(m)) * indefinite_integral(fam.Xt[static_cast<std::size_t>(m) - 1] * wXt);
    }

    GridFunction inv_f(fam.f.b(), n);
    for (std::size_t i = 0; i < n; ++i) inv_f[i] = cplx(1.0) / fam.f[i];

    fam.phi.resize(static_cast<std::size_t>(order) + 1);
    fam.psi.resize(static_cast<std::size_t>(order) + 1);
    fam.phi_prime.resize(static_cast<std::size_t>(order) + 1);
    fam.psi_prime.resize(static_cast<std::size_t>(order) + 1);
    fam.phi[0] = fam.f;
    fam.psi[0] = inv_f;
    fam.phi_prime[0] = fam.fprime;
    {
        GridFunction d0(fam.f.b(), n);
        for (std::size_t i = 0; i < n; ++i) d0[i] = -fam.fprime[i] / f_sq[i];
        fam.psi_prime[0] = d0;
    }
    for (int k = 1; k <= order; ++k) {
        const auto ks = static_cast<std::size_t>(k);
        const GridFunction& Ak = (k % 2 == 1) ? fam.X[ks] : fam.Xt[ks];
        const GridFunction& Ak1 = (k % 2 == 1) ? fam.X[ks - 1] : fam.Xt[ks - 1];
        const GridFunction& Bk = (k % 2 == 1) ? fam.Xt[ks] : fam.X[ks];
        const GridFunction& Bk1 = (k % 2 == 1) ? fam.Xt[ks - 1] : fam.X[ks - 1];
        GridFunction p(fam.f.b(), n), pp(fam.f.b(), n), s(fam.f.b(), n), sp(fam.f.b(), n);
        const double kd = static_cast<double>(k);
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = fam.f[i] * Ak[i];
            pp[i] = fam.fprime[i] * Ak[i] + kd * Ak1[i] / fam.f[i];
            s[i] = Bk[i] / fam.f[i];
            sp[i] = kd * Bk1[i] * fam.f[i] - Bk[i] * fam.fprime[i] / f_sq[i];
        }
        fam.phi[ks] = std::move(p);
        fam.phi_prime[ks] = std::move(pp);
        fam.psi[ks] = std::move(s);
        fam.psi_prime[ks] = std::move(sp);
    }
    return fam;
}

/// Family generated by 1/f, used to run constructions from the reciprocal
/// side; its parameter is -h.
inline BasisFamily reciprocal_family(const BasisFamily& fam) {
    const std::size_t n = fam.n_points();
    GridFunction g(fam.b(), n), gp(fam.b(), n);
    for (std::size_t i = 0; i < n; ++i) {
        g[i] = cplx(1.0) / fam.f[i];
        gp[i] = -fam.fprime[i] / (fam.f[i] * fam.f[i]);
    }
    return build_basis_family(g, fam.order, -fam.h, &gp);
}

} // namespace tkern
