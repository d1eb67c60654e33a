#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>

#include "tkern/common.hpp"

namespace tkern {

namespace detail {

/// Power-series evaluation of I0; the terms are positive, so no cancellation.
inline double bessel_i0_series(double z) {
    const double w = 0.25 * z * z;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 400; ++k) {
        term *= w / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

inline double bessel_i1_series(double z) {
    const double w = 0.25 * z * z;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 400; ++k) {
        term *= w / (static_cast<double>(k) * (k + 1.0));
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return 0.5 * z * sum;
}

/// Large-argument expansion I_nu(z) ~ e^z / sqrt(2 pi z) * sum of descending
/// terms.  The sum is truncated at its smallest term, which for z >= 30 leaves
/// a remainder far below double precision.
inline double bessel_i_asymptotic(double z, double four_nu_sq) {
    double term = 1.0, sum = 1.0, prev = std::numeric_limits<double>::max();
    for (int k = 1; k < 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(four_nu_sq - odd * odd) / (8.0 * k * z);
        if (std::abs(term) >= prev) break;
        sum += term;
        prev = std::abs(term);
        if (prev < 1e-20 * std::abs(sum)) break;
    }
    return std::exp(z) / std::sqrt(2.0 * M_PI * z) * sum;
}

} // namespace detail

/// Modified Bessel function I0.  Series for |z| <= 30, asymptotic expansion
/// beyond; the crossover keeps the truncation remainder below 1e-15 relative.
inline double bessel_i0(double z) {
    z = std::abs(z);
    if (z <= 30.0) return detail::bessel_i0_series(z);
    return detail::bessel_i_asymptotic(z, 0.0);
}

/// Modified Bessel function I1 (odd in z).
inline double bessel_i1(double z) {
    const double s = z < 0.0 ? -1.0 : 1.0;
    z = std::abs(z);
    if (z <= 30.0) return s * detail::bessel_i1_series(z);
    return s * detail::bessel_i_asymptotic(z, 4.0);
}

/// Entire function with ghat(w) = I1(sqrt(w)) / sqrt(w) for w > 0; its value
/// at 0 is 1/2.  Used for kernels expressed through w = x^2 - t^2, where w may
/// take either sign.
inline double ghat(double w) {
    double term = 0.5, sum = 0.5;
    for (int k = 1; k < 400; ++k) {
        term *= w / (4.0 * k * (k + 1.0));
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-18 + 1e-300) break;
    }
    return sum;
}

/// Derivative of ghat.
inline double ghat_prime(double w) {
    // d/dw sum w^k / (2^(2k+1) k! (k+1)!) starts at k = 1.
    double term = 1.0 / 16.0, sum = term;
    for (int k = 2; k < 400; ++k) {
        term *= w * (static_cast<double>(k)) / (4.0 * k * (k + 1.0) * (k - 1.0));
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-18 + 1e-300) break;
    }
    return sum;
}

/// Entire function with ihat0(w) = I0(sqrt(w)) for w > 0.
inline double ihat0(double w) {
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 400; ++k) {
        term *= w / (4.0 * static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-18 + 1e-300) break;
    }
    return sum;
}

/// Sine and cosine of the product a*b evaluated as if the product were exact:
/// the fma residual of the rounded product feeds a first-order correction.
/// This keeps the absolute error near one ulp of the result even when a*b is
/// large, which matters for characteristic functions at high frequencies.
struct TrigOfProduct {
    double sin_v;
    double cos_v;
};

inline TrigOfProduct trig_of_product(double a, double b) {
    const double p = a * b;
    const double e = std::fma(a, b, -p);
    const double s = std::sin(p), c = std::cos(p);
    return {s + e * c, c - e * s};
}

} // namespace tkern
