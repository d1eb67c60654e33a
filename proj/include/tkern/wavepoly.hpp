#pragma once

#include "tkern/bicomplex.hpp"
#include "tkern/family.hpp"

namespace tkern {

/// Harmonic-conjugate pair of homogeneous wave polynomials evaluated through
/// binomial sums: index 0 gives 1, index 2m-1 collects the even-k terms of
/// (x + j t)^m and index 2m the odd-k terms.
inline double wave_polynomial(int n, double x, double t) {
    if (n < 0) throw std::invalid_argument("wavepoly: negative index");
    if (n == 0) return 1.0;
    const int m = (n + 1) / 2;
    const bool even_k = (n % 2 == 1); // odd index keeps even powers of t
    double acc = 0.0;
    for (int k = even_k ? 0 : 1; k <= m; k += 2)
        acc += detail::binom(m, k) * std::pow(x, m - k) * std::pow(t, k);
    return acc;
}

/// Member of the transmuted polynomial family built on phi: index 0 is
/// phi_0(x) and index 2m-1 / 2m replace the powers of x in the wave
/// polynomial of the same index by phi functions.
inline cplx generalized_wave_polynomial_u(const BasisFamily& fam, int n, double x, double t) {
    if (n < 0) throw std::invalid_argument("wavepoly: negative index");
    const int m = (n + 1) / 2;
    if (m > fam.order) throw std::invalid_argument("wavepoly: family order too small");
    if (n == 0) return fam.phi_at(0, x);
    const bool even_k = (n % 2 == 1);
    cplx acc{};
    for (int k = even_k ? 0 : 1; k <= m; k += 2)
        acc += detail::binom(m, k) * fam.phi_at(m - k, x) * std::pow(t, k);
    return acc;
}

/// Same construction over the psi family.
inline cplx generalized_wave_polynomial_v(const BasisFamily& fam, int n, double x, double t) {
    if (n < 0) throw std::invalid_argument("wavepoly: negative index");
    const int m = (n + 1) / 2;
    if (m > fam.order) throw std::invalid_argument("wavepoly: family order too small");
    if (n == 0) return fam.psi_at(0, x);
    const bool even_k = (n % 2 == 1);
    cplx acc{};
    for (int k = even_k ? 0 : 1; k <= m; k += 2)
        acc += detail::binom(m, k) * fam.psi_at(m - k, x) * std::pow(t, k);
    return acc;
}

/// Formal power of degree n with bicomplex coefficient a, evaluated from the
/// iterated integrals: the auxiliary sum distributes binomial weights over
/// X or Xt depending on the parity of n, and the result recombines the two
/// components through f and 1/f.
inline Bicomplex formal_power(const BasisFamily& fam, int n, const Bicomplex& a, double x, double t) {
    if (n < 0) throw std::invalid_argument("wavepoly: negative degree");
    if (n > fam.order) throw std::invalid_argument("wavepoly: family order too small");
    const bool odd = (n % 2 == 1);
    // sums over C(n,k) * t^k, split by the parity of k into the 1 and j slots
    Bicomplex s_first{}, s_second{};
    double tk = 1.0;
    for (int k = 0; k <= n; ++k) {
        const double c = detail::binom(n, k) * tk;
        // odd n pairs the first slot with X, even n with Xt
        const cplx xv = odd ? fam.X[static_cast<std::size_t>(n - k)].interpolate(x)
                            : fam.Xt[static_cast<std::size_t>(n - k)].interpolate(x);
        const cplx xtv = odd ? fam.Xt[static_cast<std::size_t>(n - k)].interpolate(x)
                             : fam.X[static_cast<std::size_t>(n - k)].interpolate(x);
        if (k % 2 == 0) {
            s_first.re += c * xv;
            s_second.re += c * xtv;
        } else {
            s_first.im += c * xv;
            s_second.im += c * xtv;
        }
        tk *= t;
    }
    const Bicomplex star = a.re * s_first + bicomplex_j * (a.im * s_second);
    const cplx fv = fam.f.interpolate(x);
    return {fv * star.re, star.im / fv};
}

/// The same formal power assembled from generalized wave polynomials; kept as
/// an independent route for cross-checks.
inline Bicomplex formal_power_from_wave_polynomials(const BasisFamily& fam, int n, const Bicomplex& a,
                                                    double x, double t) {
    if (n == 0)
        return {a.re * generalized_wave_polynomial_u(fam, 0, x, t),
                a.im * generalized_wave_polynomial_v(fam, 0, x, t)};
    const cplx u_odd = generalized_wave_polynomial_u(fam, 2 * n - 1, x, t);
    const cplx u_even = generalized_wave_polynomial_u(fam, 2 * n, x, t);
    const cplx v_odd = generalized_wave_polynomial_v(fam, 2 * n - 1, x, t);
    const cplx v_even = generalized_wave_polynomial_v(fam, 2 * n, x, t);
    return {a.re * u_odd + a.im * u_even, a.re * v_even + a.im * v_odd};
}

} // namespace tkern
