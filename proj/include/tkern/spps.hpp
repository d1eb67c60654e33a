#pragma once

#include <optional>

#include "tkern/family.hpp"

namespace tkern {

/// Solution of y'' = q y with y(0) = 1 normalized for family construction,
/// together with its parameter h = y'(0).
struct ParticularSolution {
    GridFunction f;
    cplx h{};
    bool complexified = false; ///< true when f = y1 + i y2 replaced a vanishing y1
};

namespace detail {

struct Rk4State {
    cplx y, yp;
};

/// One classical fourth-order step of y'' = q y from x with signed step hs.
/// The potential is interpolated at the midpoint.
inline Rk4State rk4_step(const GridFunction& q, Rk4State u, double x, double hs) {
    auto deriv = [](const Rk4State& s, cplx qv) { return Rk4State{s.yp, qv * s.y}; };
    const cplx q0 = q.interpolate(x);
    const cplx qm = q.interpolate(x + 0.5 * hs);
    const cplx q1 = q.interpolate(x + hs);
    const Rk4State k1 = deriv(u, q0);
    const Rk4State k2 = deriv({u.y + 0.5 * hs * k1.y, u.yp + 0.5 * hs * k1.yp}, qm);
    const Rk4State k3 = deriv({u.y + 0.5 * hs * k2.y, u.yp + 0.5 * hs * k2.yp}, qm);
    const Rk4State k4 = deriv({u.y + hs * k3.y, u.yp + hs * k3.yp}, q1);
    u.y += hs / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
    u.yp += hs / 6.0 * (k1.yp + 2.0 * k2.yp + 2.0 * k3.yp + k4.yp);
    return u;
}

/// Integrates from the center node outward in both directions, storing y at
/// every node.
inline std::vector<cplx> integrate_from_center(const GridFunction& q, cplx y0, cplx yp0) {
    const std::size_t n = q.size();
    const std::size_t mid = (n - 1) / 2;
    const double h = q.step();
    std::vector<cplx> y(n);
    y[mid] = y0;
    Rk4State u{y0, yp0};
    for (std::size_t i = mid; i + 1 < n; ++i) {
        u = rk4_step(q, u, q.node(i), h);
        y[i + 1] = u.y;
    }
    u = {y0, yp0};
    for (std::size_t i = mid; i > 0; --i) {
        u = rk4_step(q, u, q.node(i), -h);
        y[i - 1] = u.y;
    }
    return y;
}

} // namespace detail

/// Integrates y'' = q y from the origin with y(0) = 1 and y'(0) given by
/// initial_slope (default 0).  If the resulting real solution changes sign, a
/// second independent solution is mixed in as f = y1 + i y2, which cannot
/// vanish for real q; for complex q a vanishing solution is an error.
inline ParticularSolution particular_solution(const GridFunction& q,
                                              std::optional<cplx> initial_slope = std::nullopt) {
    q.require_calculus();
    if (q.size() % 2 == 0)
        throw std::invalid_argument("spps: particular solution needs an odd point count so 0 is a node");

    const cplx slope = initial_slope.value_or(cplx{});
    double q_imag = 0.0, q_abs = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        q_imag = std::max(q_imag, std::abs(q[i].imag()));
        q_abs = std::max(q_abs, std::abs(q[i]));
    }
    const bool real_problem = q_imag <= 1e-14 * (q_abs + 1.0) && std::abs(slope.imag()) <= 1e-14;

    std::vector<cplx> y1 = detail::integrate_from_center(q, cplx(1.0), slope);

    bool vanishes = false;
    std::size_t argmin = 0;
    double min_abs = 1e300;
    for (std::size_t i = 0; i + 1 < y1.size(); ++i) {
        if (std::abs(y1[i]) < min_abs) {
            min_abs = std::abs(y1[i]);
            argmin = i;
        }
        if (real_problem && y1[i].real() * y1[i + 1].real() <= 0.0) vanishes = true;
    }
    if (std::abs(y1.back()) < min_abs) {
        min_abs = std::abs(y1.back());
        argmin = y1.size() - 1;
    }
    if (!real_problem) {
        // a smooth zero crossing leaves the nearest node within half a step of
        // the zero, so compare the minimum against the local node-to-node change
        double local = 0.0;
        if (argmin > 0) local = std::max(local, std::abs(y1[argmin] - y1[argmin - 1]));
        if (argmin + 1 < y1.size()) local = std::max(local, std::abs(y1[argmin + 1] - y1[argmin]));
        if (min_abs < 4.0 * local)
            throw numerical_error(
                "spps: solution of the complex potential passes near zero; supply a better initial slope");
    }

    ParticularSolution out;
    if (vanishes) {
        const std::vector<cplx> y2 = detail::integrate_from_center(q, cplx(0.0), cplx(1.0));
        std::vector<cplx> f(y1.size());
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = y1[i] + cplx(0.0, 1.0) * y2[i];
        out.f = GridFunction::from_samples(q.b(), std::move(f));
        out.h = slope + cplx(0.0, 1.0);
        out.complexified = true;
    } else {
        out.f = GridFunction::from_samples(q.b(), std::move(y1));
        out.h = slope;
    }
    return out;
}

/// Power series in the spectral parameter: g1 solves the equation with
/// g1(0) = 1, g1'(0) = h and g2 with g2(0) = 0, g2'(0) = 1.  Derivatives use
/// the precomputed closed-form derivative grids of the family.
struct SppsSolution {
    GridFunction g1, g2, g1_prime, g2_prime;
};

inline SppsSolution spps_evaluate(const BasisFamily& fam, cplx lambda, int M) {
    if (M < 0) throw std::invalid_argument("spps: negative truncation order");
    if (fam.order < 2 * M + 1)
        throw std::invalid_argument("spps: family order must be at least 2M+1");
    const std::size_t n = fam.n_points();
    SppsSolution s{GridFunction(fam.b(), n), GridFunction(fam.b(), n), GridFunction(fam.b(), n),
                   GridFunction(fam.b(), n)};
    cplx even_c = 1.0; // lambda^k / (2k)!
    cplx odd_c = 1.0;  // lambda^k / (2k+1)!
    for (int k = 0; k <= M; ++k) {
        if (k > 0) {
            even_c *= lambda / static_cast<double>((2 * k - 1) * (2 * k));
            odd_c *= lambda / static_cast<double>((2 * k) * (2 * k + 1));
        }
        const auto e = static_cast<std::size_t>(2 * k);
        for (std::size_t i = 0; i < n; ++i) {
            s.g1[i] += even_c * fam.phi[e][i];
            s.g2[i] += odd_c * fam.phi[e + 1][i];
            s.g1_prime[i] += even_c * fam.phi_prime[e][i];
            s.g2_prime[i] += odd_c * fam.phi_prime[e + 1][i];
        }
    }
    return s;
}

/// Wronskian g1 g2' - g1' g2 on the grid; identically 1 for exact solutions.
inline GridFunction spps_wronskian(const SppsSolution& s) {
    GridFunction w(s.g1.b(), s.g1.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = s.g1[i] * s.g2_prime[i] - s.g1_prime[i] * s.g2[i];
    return w;
}

} // namespace tkern
