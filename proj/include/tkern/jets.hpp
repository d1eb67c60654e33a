#pragma once

#include <complex>
#include <vector>

#include "tkern/common.hpp"
#include "tkern/s_coefficients.hpp"

namespace tkern {

/// Derivatives of a potential at the origin together with the logarithmic
/// derivative h = f'(0) of the associated nonvanishing solution.
/// q_derivs[m] holds the m-th derivative of the potential at 0.
struct PotentialJet {
    cplx h{};
    std::vector<cplx> q_derivs;
};

/// Exact-rational counterpart of PotentialJet for integer arithmetic checks.
struct ExactPotentialJet {
    big_rational h{};
    std::vector<big_rational> q_derivs;
};

namespace detail {

template <typename F>
struct FieldOps;

template <>
struct FieldOps<std::complex<long double>> {
    static std::complex<long double> from_int(const big_int& v) {
        return {v.template convert_to<long double>(), 0.0L};
    }
    static std::complex<long double> from_rational(const big_rational& r) {
        return {boost::multiprecision::numerator(r).template convert_to<long double>() /
                    boost::multiprecision::denominator(r).template convert_to<long double>(),
                0.0L};
    }
    static bool is_unit(const std::complex<long double>& v) {
        return std::abs(v - std::complex<long double>(1.0L)) <= 1e-12L;
    }
};

template <>
struct FieldOps<big_rational> {
    static big_rational from_int(const big_int& v) { return big_rational(v); }
    static big_rational from_rational(const big_rational& r) { return r; }
    static bool is_unit(const big_rational& v) { return v == 1; }
};

template <typename F>
std::vector<F> factorials(int n) {
    std::vector<F> f(static_cast<std::size_t>(n) + 1);
    f[0] = F(1);
    for (int k = 1; k <= n; ++k) f[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k) - 1] * F(k);
    return f;
}

/// Core of the derivative evaluation: for each level n the stored lists are
/// combined as sign * parity * q^(d-1) * S * prod q^(n_i), with q^(-1) standing
/// for h, and the total divided by 2^(n+1).
template <typename F>
std::vector<F> kernel_derivatives_core(const SCoefficientTable& table, const F& h,
                                       const std::vector<F>& q, int n_max) {
    if (n_max < 0) throw std::invalid_argument("taylor: negative derivative order");
    if (table.n_max() < n_max) throw std::invalid_argument("taylor: table too shallow");
    // level n contains the list with d = n, which consumes q^(n-1)
    if (static_cast<int>(q.size()) < n_max)
        throw std::invalid_argument("taylor: jet has fewer derivatives than requested order");
    auto qd = [&](int m) -> const F& { return m < 0 ? h : q[static_cast<std::size_t>(m)]; };
    std::vector<F> out(static_cast<std::size_t>(n_max) + 1);
    F half_power = F(1) / F(2); // 1 / 2^(n+1)
    for (int n = 0; n <= n_max; ++n) {
        F acc = F(0);
        for (const auto& list : enumerate_parameter_lists(n)) {
            const big_rational s = table.value(list);
            if (s == 0) continue;
            int parity = 1;
            if (list.d == 0) {
                if (n % 2 == 1) continue; // factor 1 + (-1)^n vanishes
                parity = 2;
            }
            F term = FieldOps<F>::from_rational(s) * F(parity) * qd(list.d - 1);
            if (list.ell % 2 == 1) term = -term;
            for (int v : list.parts) term *= qd(v);
            acc += term;
        }
        out[static_cast<std::size_t>(n)] = acc * half_power;
        half_power = half_power / F(2);
    }
    return out;
}

/// Taylor coefficients of 1/f from those of f (with f(0) = 1), via the sum
/// over multiplicity vectors (m_1..m_k) with sum(j*m_j) = k of
/// (-1)^M * M! / prod(m_j!) * prod(a_j^m_j).
template <typename F>
std::vector<F> inverse_coeffs_core(const std::vector<F>& a) {
    if (a.empty() || !FieldOps<F>::is_unit(a[0]))
        throw std::invalid_argument("taylor: reciprocal jet needs constant coefficient 1");
    const int kmax = static_cast<int>(a.size()) - 1;
    const auto fact = factorials<F>(kmax);
    std::vector<F> g(a.size());
    g[0] = F(1);
    for (int k = 1; k <= kmax; ++k) {
        F total = F(0);
        // walk multiplicities of part size j with remaining weight r; carry
        // prod(a_j^m_j / m_j!) and the total part count
        auto walk = [&](auto&& self, int j, int r, F term, int count) -> void {
            if (r == 0) {
                F contrib = term * fact[static_cast<std::size_t>(count)];
                total += (count % 2 == 1) ? -contrib : contrib;
                return;
            }
            if (j > r) return;
            F t = term;
            for (int m = 0; j * m <= r; ++m) {
                if (m > 0) t = t * a[static_cast<std::size_t>(j)] / F(m);
                self(self, j + 1, r - j * m, t, count + m);
            }
        };
        walk(walk, 1, k, F(1), 0);
        g[static_cast<std::size_t>(k)] = total;
    }
    return g;
}

/// Derivatives of f at 0 from the potential jet, using f'' = q f and Leibniz.
template <typename F>
std::vector<F> solution_derivs_core(const F& h, const std::vector<F>& q, int order) {
    std::vector<F> d(static_cast<std::size_t>(order) + 1, F(0));
    d[0] = F(1);
    if (order >= 1) d[1] = h;
    for (int n = 0; n + 2 <= order; ++n) {
        if (static_cast<std::size_t>(n) >= q.size())
            throw std::invalid_argument("taylor: jet too short for solution derivatives");
        F acc = F(0);
        big_int c = 1;
        for (int k = 0; k <= n; ++k) {
            acc += FieldOps<F>::from_int(c) * q[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(n - k)];
            c = c * (n - k) / (k + 1);
        }
        d[static_cast<std::size_t>(n) + 2] = acc;
    }
    return d;
}

/// Potential derivatives from the derivatives of its solution g (g(0) = 1),
/// inverting the Leibniz relation g^(n+2) = sum C(n,k) q^(k) g^(n-k).
template <typename F>
std::vector<F> potential_derivs_core(const std::vector<F>& g, int count) {
    std::vector<F> q(static_cast<std::size_t>(count), F(0));
    for (int n = 0; n < count; ++n) {
        if (static_cast<std::size_t>(n) + 2 >= g.size())
            throw std::invalid_argument("taylor: solution jet too short for potential recovery");
        F acc = g[static_cast<std::size_t>(n) + 2];
        big_int c = 1;
        for (int k = 0; k < n; ++k) {
            acc -= FieldOps<F>::from_int(c) * q[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(n - k)];
            c = c * (n - k) / (k + 1);
        }
        q[static_cast<std::size_t>(n)] = acc;
    }
    return q;
}

/// Jet of the reciprocal-side potential 2 (f'/f)^2 - q from the jet of q,
/// through the Riccati recurrence for w = f'/f (so w' = q - w^2).  Staying
/// in derivative space keeps every intermediate on the scale of the result;
/// inverting the series for f and differentiating it back would amplify
/// roundoff by factorial ratios.
template <typename F>
std::vector<F> reciprocal_potential_derivs_core(const F& h, const std::vector<F>& q, int count) {
    if (static_cast<int>(q.size()) < count)
        throw std::invalid_argument("taylor: jet too short for reciprocal potential");
    std::vector<F> w(static_cast<std::size_t>(count) + 1, F(0));
    std::vector<F> out(static_cast<std::size_t>(count), F(0));
    if (count == 0) return out;
    w[0] = h;
    for (int n = 0; n < count; ++n) {
        F sq = F(0);
        big_int c = 1;
        for (int k = 0; k <= n; ++k) {
            sq += FieldOps<F>::from_int(c) * w[static_cast<std::size_t>(k)] *
                  w[static_cast<std::size_t>(n - k)];
            c = c * (n - k) / (k + 1);
        }
        out[static_cast<std::size_t>(n)] = F(2) * sq - q[static_cast<std::size_t>(n)];
        w[static_cast<std::size_t>(n) + 1] = q[static_cast<std::size_t>(n)] - sq;
    }
    return out;
}

template <typename F>
std::vector<F> coeffs_from_derivs(const std::vector<F>& d) {
    auto out = d;
    F fact = F(1);
    for (std::size_t k = 1; k < out.size(); ++k) {
        fact = fact * F(static_cast<int>(k));
        out[k] = out[k] / fact;
    }
    return out;
}

template <typename F>
std::vector<F> derivs_from_coeffs(const std::vector<F>& a) {
    auto out = a;
    F fact = F(1);
    for (std::size_t k = 1; k < out.size(); ++k) {
        fact = fact * F(static_cast<int>(k));
        out[k] = out[k] * fact;
    }
    return out;
}

/// Cauchy product of two Taylor coefficient lists, truncated at the shorter.
template <typename F>
std::vector<F> coeffs_multiply(const std::vector<F>& a, const std::vector<F>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<F> out(n, F(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline std::vector<std::complex<long double>> widen(const std::vector<cplx>& v) {
    std::vector<std::complex<long double>> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = {static_cast<long double>(v[i].real()), static_cast<long double>(v[i].imag())};
    return out;
}

inline std::vector<cplx> narrow(const std::vector<std::complex<long double>>& v) {
    std::vector<cplx> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = {static_cast<double>(v[i].real()), static_cast<double>(v[i].imag())};
    return out;
}

} // namespace detail

/// Derivatives of the kernel trace along t at the origin, orders 0..n_max.
/// Accumulation runs in extended precision; for jets with moderate integer
/// entries the results are exact.
inline std::vector<cplx> kernel_derivatives_at_origin(const SCoefficientTable& table,
                                                      const PotentialJet& jet, int n_max) {
    using LD = std::complex<long double>;
    const LD h{static_cast<long double>(jet.h.real()), static_cast<long double>(jet.h.imag())};
    return detail::narrow(detail::kernel_derivatives_core<LD>(table, h, detail::widen(jet.q_derivs), n_max));
}

inline std::vector<big_rational> kernel_derivatives_at_origin(const SCoefficientTable& table,
                                                              const ExactPotentialJet& jet,
                                                              int n_max) {
    return detail::kernel_derivatives_core<big_rational>(table, jet.h, jet.q_derivs, n_max);
}

/// Taylor coefficients of 1/f from those of f; f_coeffs[0] must equal 1.
inline std::vector<cplx> inverse_function_jet(const std::vector<cplx>& f_coeffs) {
    return detail::narrow(detail::inverse_coeffs_core(detail::widen(f_coeffs)));
}

inline std::vector<big_rational> inverse_function_jet(const std::vector<big_rational>& f_coeffs) {
    return detail::inverse_coeffs_core(f_coeffs);
}

/// Coefficients of the kernel expansion over the polynomial basis pair: c[n]
/// multiplies the even-in-t member, b[n] the odd one.  b[0] has no basis
/// partner and is identically zero.
struct ExpansionCoefficients {
    std::vector<cplx> c, b;
};

struct ExactExpansionCoefficients {
    std::vector<big_rational> c, b;
};

namespace detail {

template <typename F, typename Out>
Out expansion_from_derivs(const std::vector<F>& derivs_f, const std::vector<F>& derivs_inv) {
    if (derivs_f.size() != derivs_inv.size())
        throw std::invalid_argument("taylor: derivative lists of mismatched length");
    const int N = static_cast<int>(derivs_f.size()) - 1;
    const auto fact = factorials<F>(N);
    Out out;
    out.c.resize(derivs_f.size());
    out.b.resize(derivs_f.size());
    out.b[0] = F(0);
    for (int n = 0; n <= N; ++n) {
        const auto& fn = fact[static_cast<std::size_t>(n)];
        if (n % 2 == 0) {
            out.c[static_cast<std::size_t>(n)] = derivs_f[static_cast<std::size_t>(n)] / fn;
            if (n > 0) out.b[static_cast<std::size_t>(n)] = -derivs_inv[static_cast<std::size_t>(n)] / fn;
        } else {
            out.c[static_cast<std::size_t>(n)] = -derivs_inv[static_cast<std::size_t>(n)] / fn;
            out.b[static_cast<std::size_t>(n)] = derivs_f[static_cast<std::size_t>(n)] / fn;
        }
    }
    return out;
}

} // namespace detail

/// Combines the derivative lists of the kernel pair (for f and for 1/f) into
/// basis coefficients; the parity of each order decides which list feeds
/// which coefficient family.
inline ExpansionCoefficients expansion_coefficients(const std::vector<cplx>& derivs_f,
                                                    const std::vector<cplx>& derivs_inv) {
    using LD = std::complex<long double>;
    struct Wide {
        std::vector<LD> c, b;
    };
    Wide w = detail::expansion_from_derivs<LD, Wide>(detail::widen(derivs_f), detail::widen(derivs_inv));
    return {detail::narrow(w.c), detail::narrow(w.b)};
}

inline ExactExpansionCoefficients expansion_coefficients(const std::vector<big_rational>& derivs_f,
                                                         const std::vector<big_rational>& derivs_inv) {
    return detail::expansion_from_derivs<big_rational, ExactExpansionCoefficients>(derivs_f, derivs_inv);
}

/// Full Taylor pipeline from a potential jet: reconstruct the solution jet,
/// invert it, recover the reciprocal-side potential jet, and evaluate both
/// derivative lists.  The reciprocal side carries parameter -h.
template <typename JetT>
struct TaylorPair;

template <>
struct TaylorPair<PotentialJet> {
    std::vector<cplx> derivs_f, derivs_inv;
    ExpansionCoefficients coeffs;
};

template <>
struct TaylorPair<ExactPotentialJet> {
    std::vector<big_rational> derivs_f, derivs_inv;
    ExactExpansionCoefficients coeffs;
};

namespace detail {

template <typename F, typename Pair>
Pair taylor_pair_core(const SCoefficientTable& table, const F& h, const std::vector<F>& q, int N) {
    // level N of the derivative evaluation consumes the reciprocal-side
    // potential through q^(N-1)
    const auto q_inv = reciprocal_potential_derivs_core<F>(h, q, std::max(0, N));
    Pair out;
    out.derivs_f = kernel_derivatives_core<F>(table, h, q, N);
    out.derivs_inv = kernel_derivatives_core<F>(table, -h, q_inv, N);
    using OutCoeffs = decltype(out.coeffs);
    out.coeffs = expansion_from_derivs<F, OutCoeffs>(out.derivs_f, out.derivs_inv);
    return out;
}

} // namespace detail

inline TaylorPair<PotentialJet> taylor_pair_from_jet(const SCoefficientTable& table,
                                                     const PotentialJet& jet, int N) {
    using LD = std::complex<long double>;
    struct WidePair {
        std::vector<LD> derivs_f, derivs_inv;
        struct {
            std::vector<LD> c, b;
        } coeffs;
    };
    const LD h{static_cast<long double>(jet.h.real()), static_cast<long double>(jet.h.imag())};
    WidePair w = detail::taylor_pair_core<LD, WidePair>(table, h, detail::widen(jet.q_derivs), N);
    TaylorPair<PotentialJet> out;
    out.derivs_f = detail::narrow(w.derivs_f);
    out.derivs_inv = detail::narrow(w.derivs_inv);
    out.coeffs = {detail::narrow(w.coeffs.c), detail::narrow(w.coeffs.b)};
    return out;
}

inline TaylorPair<ExactPotentialJet> taylor_pair_from_jet(const SCoefficientTable& table,
                                                          const ExactPotentialJet& jet, int N) {
    return detail::taylor_pair_core<big_rational, TaylorPair<ExactPotentialJet>>(table, jet.h,
                                                                                 jet.q_derivs, N);
}

/// Same pipeline when the reciprocal-side jet is already known analytically.
inline TaylorPair<PotentialJet> taylor_pair_from_jets(const SCoefficientTable& table,
                                                      const PotentialJet& jet_f,
                                                      const PotentialJet& jet_inv, int N) {
    using LD = std::complex<long double>;
    const LD hf{static_cast<long double>(jet_f.h.real()), static_cast<long double>(jet_f.h.imag())};
    const LD hi{static_cast<long double>(jet_inv.h.real()), static_cast<long double>(jet_inv.h.imag())};
    TaylorPair<PotentialJet> out;
    out.derivs_f = detail::narrow(
        detail::kernel_derivatives_core<LD>(table, hf, detail::widen(jet_f.q_derivs), N));
    out.derivs_inv = detail::narrow(
        detail::kernel_derivatives_core<LD>(table, hi, detail::widen(jet_inv.q_derivs), N));
    out.coeffs = expansion_coefficients(out.derivs_f, out.derivs_inv);
    return out;
}

} // namespace tkern
