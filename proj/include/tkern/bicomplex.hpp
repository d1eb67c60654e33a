#pragma once

#include <cmath>
#include <utility>

#include "tkern/common.hpp"

namespace tkern {

/// Number of the form w = u + v*j where u, v are complex and the second unit
/// satisfies j*j = +1 (and commutes with the imaginary unit i).  The pair of
/// idempotents (1+j)/2, (1-j)/2 splits the algebra into two complex lines,
/// which is what makes multiplication componentwise after the split.
struct Bicomplex {
    cplx re{0.0, 0.0}; ///< component along 1
    cplx im{0.0, 0.0}; ///< component along j

    constexpr Bicomplex() = default;
    constexpr Bicomplex(cplx u, cplx v) : re(u), im(v) {}

    /// Conjugation that flips the sign of the j component.
    [[nodiscard]] constexpr Bicomplex conj_j() const { return {re, -im}; }

    /// Components in the idempotent basis: (w_plus, w_minus) = (u + v, u - v).
    [[nodiscard]] constexpr std::pair<cplx, cplx> idempotent_split() const {
        return {re + im, re - im};
    }

    /// Reassembles a number from its idempotent components.
    static constexpr Bicomplex from_idempotent(cplx plus, cplx minus) {
        return {(plus + minus) / 2.0, (plus - minus) / 2.0};
    }

    Bicomplex& operator+=(const Bicomplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Bicomplex& operator-=(const Bicomplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Bicomplex& operator*=(const Bicomplex& o) {
        const cplx u = re * o.re + im * o.im;
        const cplx v = re * o.im + im * o.re;
        re = u;
        im = v;
        return *this;
    }
};

inline Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
inline Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
inline Bicomplex operator*(Bicomplex a, const Bicomplex& b) { return a *= b; }
constexpr Bicomplex operator*(cplx s, Bicomplex w) { return {s * w.re, s * w.im}; }
constexpr Bicomplex operator*(Bicomplex w, cplx s) { return s * w; }
constexpr Bicomplex operator*(double s, Bicomplex w) { return {s * w.re, s * w.im}; }
constexpr Bicomplex operator-(const Bicomplex& w) { return {-w.re, -w.im}; }

/// The unit along j.
inline constexpr Bicomplex bicomplex_j{cplx(0.0, 0.0), cplx(1.0, 0.0)};

/// Norm |w| = (|w_plus| + |w_minus|) / 2.  It vanishes only at w = 0; zero
/// divisors are the nonzero w with exactly one idempotent component zero.
inline double bicomplex_norm(const Bicomplex& w) {
    const auto [p, m] = w.idempotent_split();
    return 0.5 * (std::abs(p) + std::abs(m));
}

/// Integer power by repeated multiplication (exponent >= 0).
inline Bicomplex bicomplex_pow(Bicomplex w, int n) {
    Bicomplex acc{cplx(1.0, 0.0), cplx(0.0, 0.0)};
    for (int k = 0; k < n; ++k) acc *= w;
    return acc;
}

} // namespace tkern
