#pragma once

#include <optional>
#include <string>

#include "tkern/family.hpp"
#include "tkern/jets.hpp"
#include "tkern/special.hpp"
#include "tkern/spps.hpp"

namespace tkern {

/// A potential on [-b, b] plus whatever analytic extras are known for it: a
/// nonvanishing solution of y'' = q y with y(0) = 1 (and its derivative and
/// logarithmic slope h), and the Taylor data of q at the origin.
struct Potential {
    std::string name;
    GridFunction q;
    std::optional<GridFunction> f;
    std::optional<GridFunction> fprime;
    std::optional<cplx> h;
    std::optional<PotentialJet> jet;     ///< h together with q derivatives at 0
    std::optional<PotentialJet> jet_inv; ///< same data for the reciprocal solution, when closed-form
};

namespace detail {

/// Derivatives at 0 of q(x) = 1 - 2 sech(x)^2, exact integers obtained from
/// the Taylor numerators of sech.
inline std::vector<big_rational> sech_potential_derivatives_exact(int count) {
    std::vector<big_int> E(static_cast<std::size_t>(count), 0); // sech numerators
    E[0] = 1;
    for (int n = 2; n < count; n += 2) {
        big_int acc = 0;
        for (int k = 0; k < n; k += 2) acc += binom_big(n, k) * E[static_cast<std::size_t>(k)];
        E[static_cast<std::size_t>(n)] = -acc;
    }
    std::vector<big_rational> q(static_cast<std::size_t>(count), big_rational(0));
    for (int n = 0; n < count; n += 2) {
        big_int s2 = 0;
        for (int k = 0; k <= n; k += 2)
            s2 += binom_big(n, k) * E[static_cast<std::size_t>(k)] * E[static_cast<std::size_t>(n - k)];
        q[static_cast<std::size_t>(n)] = big_rational((n == 0 ? big_int(1) : big_int(0)) - 2 * s2);
    }
    return q;
}

/// Same values rounded once to double.
inline std::vector<double> sech_potential_derivatives(int count) {
    const auto exact = sech_potential_derivatives_exact(count);
    std::vector<double> q(exact.size());
    for (std::size_t i = 0; i < exact.size(); ++i) q[i] = static_cast<double>(exact[i]);
    return q;
}

} // namespace detail

/// Builds one of the named potentials on [-b, b]:
///   zero         q = 0
///   const:VALUE  q = VALUE (cosh or cosine profile depending on sign)
///   cosh         shorthand for const:1
///   exp          q = e^x, with the Bessel-form solution
///   sech         q = 1 - 2 sech(x)^2, with f = sech
///   model        q = 0 paired with f = 1 + x (requires b < 1)
/// jet_order bounds the number of stored q derivatives at the origin.
inline Potential make_builtin_potential(const std::string& spec, double b, std::size_t n_points,
                                        int jet_order = 40) {
    if (b <= 0.0) throw std::invalid_argument("potential: b must be positive");
    if (n_points < 7 || n_points % 2 == 0)
        throw std::invalid_argument("potential: point count must be odd and at least 7");
    const std::size_t nd = static_cast<std::size_t>(jet_order) + 1;
    Potential p;
    p.name = spec;

    std::string head = spec, arg;
    if (const auto colon = spec.find(':'); colon != std::string::npos) {
        head = spec.substr(0, colon);
        arg = spec.substr(colon + 1);
    }
    if (head == "cosh") { head = "const"; arg = "1"; }

    if (head == "zero") {
        p.q = GridFunction(b, n_points);
        p.f = GridFunction(b, n_points, cplx(1.0));
        p.fprime = GridFunction(b, n_points);
        p.h = cplx{};
        p.jet = PotentialJet{cplx{}, std::vector<cplx>(nd, cplx{})};
    } else if (head == "const") {
        double c;
        try {
            std::size_t used = 0;
            c = std::stod(arg, &used);
            if (used != arg.size() || arg.empty()) throw std::invalid_argument(arg);
        } catch (const std::exception&) {
            throw std::invalid_argument("potential: const needs a numeric value, got '" + arg + "'");
        }
        const double r = std::sqrt(std::abs(c));
        p.q = GridFunction::sample(b, n_points, [c](double) { return cplx(c); });
        p.f = GridFunction::sample(b, n_points, [=](double x) {
            return cplx(c >= 0.0 ? std::cosh(r * x) : std::cos(r * x));
        });
        p.fprime = GridFunction::sample(b, n_points, [=](double x) {
            return cplx(c >= 0.0 ? r * std::sinh(r * x) : -r * std::sin(r * x));
        });
        p.h = cplx{};
        std::vector<cplx> qd(nd, cplx{});
        qd[0] = c;
        p.jet = PotentialJet{cplx{}, std::move(qd)};
    } else if (head == "exp") {
        const double i0_2 = bessel_i0(2.0);
        p.q = GridFunction::sample(b, n_points, [](double x) { return cplx(std::exp(x)); });
        p.f = GridFunction::sample(b, n_points, [=](double x) {
            return cplx(bessel_i0(2.0 * std::exp(0.5 * x)) / i0_2);
        });
        p.fprime = GridFunction::sample(b, n_points, [=](double x) {
            const double e = std::exp(0.5 * x);
            return cplx(bessel_i1(2.0 * e) * e / i0_2);
        });
        p.h = cplx(bessel_i1(2.0) / i0_2);
        p.jet = PotentialJet{*p.h, std::vector<cplx>(nd, cplx(1.0))};
    } else if (head == "sech") {
        p.q = GridFunction::sample(b, n_points, [](double x) {
            const double s = 1.0 / std::cosh(x);
            return cplx(1.0 - 2.0 * s * s);
        });
        p.f = GridFunction::sample(b, n_points, [](double x) { return cplx(1.0 / std::cosh(x)); });
        p.fprime = GridFunction::sample(b, n_points, [](double x) {
            return cplx(-std::tanh(x) / std::cosh(x));
        });
        p.h = cplx{};
        const auto qd = detail::sech_potential_derivatives(static_cast<int>(nd));
        std::vector<cplx> qc(qd.begin(), qd.end());
        p.jet = PotentialJet{cplx{}, std::move(qc)};
    } else if (head == "model") {
        if (b >= 1.0) throw std::invalid_argument("potential: model requires b < 1");
        p.q = GridFunction(b, n_points);
        p.f = GridFunction::sample(b, n_points, [](double x) { return cplx(1.0 + x); });
        p.fprime = GridFunction(b, n_points, cplx(1.0));
        p.h = cplx(1.0);
        p.jet = PotentialJet{cplx(1.0), std::vector<cplx>(nd, cplx{})};
        std::vector<cplx> qi(nd);
        double fact = 2.0; // 2 (n+1)! with alternating sign
        for (std::size_t n = 0; n < nd; ++n) {
            qi[n] = cplx((n % 2 == 0 ? 1.0 : -1.0) * fact);
            fact *= static_cast<double>(n) + 2.0;
        }
        p.jet_inv = PotentialJet{cplx(-1.0), std::move(qi)};
    } else {
        throw std::invalid_argument("potential: unknown builtin '" + spec + "'");
    }
    return p;
}

/// Reflects samples given on the uniform grid of [0, b] to the even
/// extension on [-b, b].
inline GridFunction extend_even(double b, const std::vector<cplx>& half) {
    const std::size_t n = half.size();
    if (n < 2) throw std::invalid_argument("potential: too few samples to extend");
    GridFunction out(b, 2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        out[n - 1 + i] = half[i];
        out[n - 1 - i] = half[i];
    }
    return out;
}

/// Wraps CSV samples as a potential: either a symmetric grid on [-b, b] or a
/// half grid starting at 0, which is extended evenly.
inline Potential potential_from_csv_samples(const CsvSamples& samples, const std::string& name) {
    if (samples.x.size() < 4) throw std::invalid_argument("potential: too few samples");
    const double x0 = samples.x.front(), x1 = samples.x.back();
    const double hstep = (x1 - x0) / static_cast<double>(samples.x.size() - 1);
    for (std::size_t i = 0; i < samples.x.size(); ++i)
        if (std::abs(samples.x[i] - (x0 + hstep * static_cast<double>(i))) > 1e-9 * (std::abs(x1) + 1.0))
            throw std::invalid_argument("potential: samples must be evenly spaced");
    Potential p;
    p.name = name;
    if (std::abs(x0) < 1e-12 * (std::abs(x1) + 1.0)) {
        p.q = extend_even(x1, samples.value);
    } else if (std::abs(x0 + x1) < 1e-9 * (std::abs(x1) + 1.0)) {
        if (samples.x.size() % 2 == 0)
            throw std::invalid_argument("potential: symmetric grid must contain x = 0");
        p.q = GridFunction(x1, samples.x.size());
        for (std::size_t i = 0; i < samples.x.size(); ++i) p.q[i] = samples.value[i];
    } else {
        throw std::invalid_argument("potential: samples must start at 0 or be symmetric about it");
    }
    return p;
}

/// Basis family for a potential: uses the analytic solution when one is
/// attached, otherwise integrates for a particular solution first.
inline BasisFamily family_for(const Potential& p, int order) {
    if (p.f) {
        const GridFunction* fp = p.fprime ? &*p.fprime : nullptr;
        return build_basis_family(*p.f, order, p.h, fp);
    }
    const auto ps = particular_solution(p.q);
    return build_basis_family(ps.f, order, ps.h);
}

} // namespace tkern
