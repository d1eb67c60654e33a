#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <utility>

#include "tkern/family.hpp"
#include "tkern/grid.hpp"
#include "tkern/jets.hpp"
#include "tkern/special.hpp"

namespace tkern {

/// Kernel of a Volterra integral operator on the region |t| <= |x|, packaged
/// as callables.  The partial derivatives are optional; kernel_dx / kernel_dt
/// fall back to central differences when they are absent.
struct EvaluableKernel {
    std::function<cplx(double, double)> value;
    std::function<cplx(double, double)> dx;
    std::function<cplx(double, double)> dt;
};

inline cplx kernel_dx(const EvaluableKernel& k, double x, double t, double step = 1e-6) {
    if (k.dx) return k.dx(x, t);
    return (k.value(x + step, t) - k.value(x - step, t)) / (2.0 * step);
}

inline cplx kernel_dt(const EvaluableKernel& k, double x, double t, double step = 1e-6) {
    if (k.dt) return k.dt(x, t);
    return (k.value(x, t + step) - k.value(x, t - step)) / (2.0 * step);
}

/// Truncated expansion of a transmutation kernel over the generalized wave
/// polynomial basis of a family: c[n] weights the even-in-t member of index n
/// and b[n] the odd one (b[0] unused).  Evaluation collects the coefficient
/// of each power of t and runs Horner in t, so one call costs O(N^2).
class KernelApproximation {
public:
    KernelApproximation() = default;

    KernelApproximation(std::shared_ptr<const BasisFamily> family, std::vector<cplx> c,
                        std::vector<cplx> b)
        : family_(std::move(family)), c_(std::move(c)), b_(std::move(b)) {
        if (!family_) throw std::invalid_argument("kernel: missing family");
        if (c_.empty() || b_.size() != c_.size())
            throw std::invalid_argument("kernel: coefficient lists must be nonempty and equal length");
        order_ = static_cast<int>(c_.size()) - 1;
        if (order_ > family_->order)
            throw std::invalid_argument("kernel: family order too small for coefficients");
    }

    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] const std::vector<cplx>& c() const { return c_; }
    [[nodiscard]] const std::vector<cplx>& b() const { return b_; }
    [[nodiscard]] const BasisFamily& family() const { return *family_; }
    [[nodiscard]] std::shared_ptr<const BasisFamily> family_ptr() const { return family_; }

    /// Coefficients of the polynomial in t at fixed x: slot k receives
    /// C(n,k) phi_(n-k)(x) from every order n of matching parity weight.
    [[nodiscard]] std::vector<cplx> t_coefficients(double x) const {
        const auto phis = family_->phi_row(x, order_);
        return assemble(phis);
    }

    /// Horner evaluation of a t-power coefficient list.
    static cplx eval_polynomial(const std::vector<cplx>& a, double t) {
        cplx acc{};
        for (std::size_t k = a.size(); k-- > 0;) acc = acc * t + a[k];
        return acc;
    }

    [[nodiscard]] cplx evaluate(double x, double t) const { return eval_polynomial(t_coefficients(x), t); }

    /// Partial derivative in x (phi rows replaced by their derivative grids).
    [[nodiscard]] cplx dx(double x, double t) const {
        const auto dphis = family_->phi_prime_row(x, order_);
        return eval_polynomial(assemble(dphis), t);
    }

    /// Partial derivative in t (differentiated Horner form).
    [[nodiscard]] cplx dt(double x, double t) const {
        const auto a = t_coefficients(x);
        cplx acc{};
        for (std::size_t k = a.size(); k-- > 1;)
            acc = acc * t + static_cast<double>(k) * a[k];
        return acc;
    }

    [[nodiscard]] EvaluableKernel as_evaluable() const {
        KernelApproximation copy = *this;
        return {[copy](double x, double t) { return copy.evaluate(x, t); },
                [copy](double x, double t) { return copy.dx(x, t); },
                [copy](double x, double t) { return copy.dt(x, t); }};
    }

    [[nodiscard]] nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["order"] = order_;
        j["family_fingerprint"] = family_->fingerprint();
        auto dump = [](const std::vector<cplx>& v) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& z : v) arr.push_back({z.real(), z.imag()});
            return arr;
        };
        j["c"] = dump(c_);
        j["b"] = dump(b_);
        return j;
    }

    static KernelApproximation from_json(const nlohmann::json& j,
                                         std::shared_ptr<const BasisFamily> family) {
        if (!family) throw std::invalid_argument("kernel: missing family");
        if (j.at("family_fingerprint").get<std::uint64_t>() != family->fingerprint())
            throw std::invalid_argument("kernel: family fingerprint mismatch");
        auto load = [](const nlohmann::json& arr) {
            std::vector<cplx> v(arr.size());
            for (std::size_t i = 0; i < arr.size(); ++i)
                v[i] = cplx(arr[i][0].get<double>(), arr[i][1].get<double>());
            return v;
        };
        return KernelApproximation(std::move(family), load(j.at("c")), load(j.at("b")));
    }

private:
    [[nodiscard]] std::vector<cplx> assemble(const std::vector<cplx>& phis) const {
        std::vector<cplx> a(static_cast<std::size_t>(order_) + 1, cplx{});
        for (int n = 0; n <= order_; ++n) {
            const int m = n; // basis index n uses phi_(n-k) with k of fixed parity
            for (int k = 0; k <= m; ++k) {
                const cplx w = (k % 2 == 0) ? c_[static_cast<std::size_t>(n)] : b_[static_cast<std::size_t>(n)];
                if (w == cplx{}) continue;
                a[static_cast<std::size_t>(k)] += w * detail::binom(m, k) * phis[static_cast<std::size_t>(m - k)];
            }
        }
        return a;
    }

    std::shared_ptr<const BasisFamily> family_;
    std::vector<cplx> c_, b_;
    int order_ = 0;
};

/// Builds the degree-N kernel approximation whose coefficients come from the
/// derivative lists of the potential jet (and, through the reciprocal jet, of
/// the inverse-side potential).
inline KernelApproximation kernel_from_taylor(std::shared_ptr<const BasisFamily> family,
                                              const SCoefficientTable& table,
                                              const PotentialJet& jet, int N) {
    const auto pair = taylor_pair_from_jet(table, jet, N);
    return KernelApproximation(std::move(family), pair.coeffs.c, pair.coeffs.b);
}

/// Variant with both jets supplied (skips the reciprocal-jet reconstruction).
inline KernelApproximation kernel_from_taylor(std::shared_ptr<const BasisFamily> family,
                                              const SCoefficientTable& table,
                                              const PotentialJet& jet_f,
                                              const PotentialJet& jet_inv, int N) {
    const auto pair = taylor_pair_from_jets(table, jet_f, jet_inv, N);
    return KernelApproximation(std::move(family), pair.coeffs.c, pair.coeffs.b);
}

/// Boundary data of the characteristic problem that determines the kernel:
/// on t = x the kernel equals h/2 + (1/4) * int_0^x q, and the even/odd split
/// in t decouples the two returned targets.
struct GoursatTargets {
    GridFunction even_part; ///< h/2 + (1/4) int_0^x q
    GridFunction odd_part;  ///< (1/4) int_0^x q
};

inline GoursatTargets goursat_targets(const GridFunction& q, cplx h) {
    GridFunction primitive = indefinite_integral(q);
    GridFunction even(q.b(), q.size()), odd(q.b(), q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        odd[i] = 0.25 * primitive[i];
        even[i] = 0.5 * h + odd[i];
    }
    return {std::move(even), std::move(odd)};
}

/// Largest deviation of the kernel from its characteristic boundary data,
/// reported separately for the even and odd parts in t.
struct GoursatResidual {
    double even_part;
    double odd_part;
};

inline GoursatResidual goursat_residual(const KernelApproximation& k, const GoursatTargets& targets) {
    const auto& fam = k.family();
    double re = 0.0, ro = 0.0;
    for (std::size_t i = 0; i < fam.n_points(); ++i) {
        const double x = fam.f.node(i);
        const cplx plus = k.evaluate(x, x);
        const cplx minus = k.evaluate(x, -x);
        re = std::max(re, std::abs(0.5 * (plus + minus) - targets.even_part[i]));
        ro = std::max(ro, std::abs(0.5 * (plus - minus) - targets.odd_part[i]));
    }
    return {re, ro};
}

// ---------------------------------------------------------------------------
// closed-form reference kernels
// ---------------------------------------------------------------------------

enum class ReferenceKernelKind {
    affine,            ///< for f = 1 + x: the constant 1/2
    affine_reciprocal, ///< for f = 1/(1+x): (t-1) / (2(x+1))
    cosh_profile,      ///< for f = cosh: (x+t)/2 * ghat(x^2 - t^2)
    sech_profile,      ///< for f = sech: Bessel head plus two one-dimensional integrals
};

namespace detail {

inline void require_in_triangle(double x, double t) {
    if (std::abs(t) > std::abs(x) * (1.0 + 1e-12) + 1e-14)
        throw std::domain_error("kernel: evaluation point outside |t| <= |x|");
}

/// Integrand of the second sech integral written as the cancellation-free
/// series sum_k (x-s)^(k-1) (x+s)^k (s - (2k+1) x) / (2^(2k+1) (k!)^2 (k+1))
/// minus 1/2; the closed form (x+s) ghat - x ihat0 over (x - s) loses all
/// precision near s = x.
inline double sech_integrand2(double x, double s) {
    const double A = x - s, B = x + s;
    double pref = B / 16.0; // k = 1 term prefactor
    double acc = -0.5;
    for (int k = 1; k < 300; ++k) {
        const double term = pref * (s - (2.0 * k + 1.0) * x);
        acc += term;
        if (std::abs(term) < 1e-19 * (std::abs(acc) + 1e-30) && k > 3) break;
        pref *= A * B / (4.0 * (k + 1.0) * (k + 2.0));
    }
    return acc;
}

inline double sech_kernel_value(double x, double t) {
    const double th = std::tanh(x);
    double head = 0.5 * (bessel_i1(x) - bessel_i0(x) * th);
    auto first = [&](double s) { return cplx(0.5 * th * (x + s) * ghat(x * x - s * s)); };
    auto second = [&](double s) { return cplx(0.5 * sech_integrand2(x, s)); };
    const int panels = std::max(2, static_cast<int>(std::ceil(std::abs(t) * 4.0)));
    return head + integrate_gl(first, 0.0, t, panels).real() +
           integrate_gl(second, 0.0, t, panels).real();
}

} // namespace detail

/// Closed-form kernels for families with explicit transmutation operators;
/// used as ground truth by the error sweeps.
inline EvaluableKernel reference_kernel(ReferenceKernelKind kind) {
    switch (kind) {
    case ReferenceKernelKind::affine:
        return {[](double x, double t) {
                    detail::require_in_triangle(x, t);
                    return cplx(0.5);
                },
                [](double, double) { return cplx(0.0); },
                [](double, double) { return cplx(0.0); }};
    case ReferenceKernelKind::affine_reciprocal:
        return {[](double x, double t) {
                    detail::require_in_triangle(x, t);
                    return cplx((t - 1.0) / (2.0 * (x + 1.0)));
                },
                [](double x, double t) { return cplx(-(t - 1.0) / (2.0 * (x + 1.0) * (x + 1.0))); },
                [](double x, double) { return cplx(1.0 / (2.0 * (x + 1.0))); }};
    case ReferenceKernelKind::cosh_profile:
        return {[](double x, double t) {
                    detail::require_in_triangle(x, t);
                    return cplx(0.5 * (x + t) * ghat(x * x - t * t));
                },
                [](double x, double t) {
                    const double w = x * x - t * t;
                    return cplx(0.5 * ghat(w) + (x + t) * x * ghat_prime(w));
                },
                [](double x, double t) {
                    const double w = x * x - t * t;
                    return cplx(0.5 * ghat(w) - (x + t) * t * ghat_prime(w));
                }};
    case ReferenceKernelKind::sech_profile:
        return {[](double x, double t) {
                    detail::require_in_triangle(x, t);
                    return cplx(detail::sech_kernel_value(x, t));
                },
                nullptr,
                [](double x, double t) {
                    return cplx(0.5 * std::tanh(x) * (x + t) * ghat(x * x - t * t) +
                                0.5 * detail::sech_integrand2(x, t));
                }};
    }
    throw std::invalid_argument("kernel: unknown reference kind");
}

// ---------------------------------------------------------------------------
// kernel transforms
// ---------------------------------------------------------------------------

enum class DarbouxDirection { forward, reverse };

/// Kernel of the transmutation for the reciprocal solution 1/f obtained from
/// the kernel for f by one x-line integral (precomputed on the family grid)
/// and two t-line integrals.  The reverse direction runs the same formula
/// with the roles of f and 1/f exchanged.  The t-line integrals for a given
/// x are built once on a dense sub-grid and reused, so sweeps in t (and
/// compositions of two transforms) stay cheap.  Output derivatives come from
/// the first-order system the pair satisfies, one evaluation each.
inline EvaluableKernel darboux_kernel(const EvaluableKernel& K, const BasisFamily& fam,
                                      DarbouxDirection dir = DarbouxDirection::forward) {
    struct State {
        GridFunction f, ratio; // ratio = f'/f for the active direction
        GridFunction eta_integral;
        cplx half_slope;       // f'(0) / 2
        EvaluableKernel K;
        std::mutex mu;
        double line_x = std::numeric_limits<double>::quiet_NaN();
        GridFunction cum_dx, cum_val; // int_0^t of K_x and K along the line
    };
    auto st = std::make_shared<State>();
    const std::size_t n = fam.n_points();
    st->f = GridFunction(fam.b(), n);
    st->ratio = GridFunction(fam.b(), n);
    for (std::size_t i = 0; i < n; ++i) {
        const cplx f = fam.f[i], fp = fam.fprime[i];
        if (dir == DarbouxDirection::forward) {
            st->f[i] = f;
            st->ratio[i] = fp / f;
        } else {
            st->f[i] = cplx(1.0) / f;
            st->ratio[i] = -fp / f;
        }
    }
    st->half_slope = 0.5 * st->ratio.at_zero(); // f(0) = 1 either way
    st->K = K;

    GridFunction integrand(fam.b(), n);
    for (std::size_t i = 0; i < n; ++i) {
        const double eta = integrand.node(i);
        integrand[i] = st->f[i] * kernel_dt(K, eta, 0.0);
    }
    st->eta_integral = indefinite_integral(integrand);

    auto value = [st](double x, double t) -> cplx {
        const cplx head = -(st->eta_integral.interpolate(x) + st->half_slope) / st->f.interpolate(x);
        if (std::abs(x) < 1e-12) return head;
        std::lock_guard<std::mutex> lock(st->mu);
        if (!(st->line_x == x)) {
            const std::size_t m = 513;
            GridFunction gdx = GridFunction::sample(std::abs(x), m, [&](double s) {
                return kernel_dx(st->K, x, s);
            });
            GridFunction gval = GridFunction::sample(std::abs(x), m, [&](double s) {
                return st->K.value(x, s);
            });
            st->cum_dx = indefinite_integral(gdx);
            st->cum_val = indefinite_integral(gval);
            st->line_x = x;
        }
        return head - st->cum_dx.interpolate(t) +
               st->ratio.interpolate(x) * st->cum_val.interpolate(t);
    };
    auto dt = [st](double x, double t) -> cplx {
        return -kernel_dx(st->K, x, t) + st->ratio.interpolate(x) * st->K.value(x, t);
    };
    auto dx = [st, value](double x, double t) -> cplx {
        return -kernel_dt(st->K, x, t) - st->ratio.interpolate(x) * value(x, t);
    };
    return {value, dx, dt};
}

/// Kernel for the same potential with boundary parameter h2 instead of h1:
/// a constant shift plus a weighted t-line integral of the input kernel.
inline EvaluableKernel change_parameter(const EvaluableKernel& K, cplx h1, cplx h2) {
    const cplx half_delta = 0.5 * (h2 - h1);
    auto value = [K, half_delta](double x, double t) -> cplx {
        const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(x - t) * 4.0)));
        const cplx integral = integrate_gl(
            [&](double s) { return K.value(x, s) - K.value(x, -s); }, t, x, panels);
        return half_delta + K.value(x, t) + half_delta * integral;
    };
    auto dt = [K, half_delta](double x, double t) -> cplx {
        return kernel_dt(K, x, t) - half_delta * (K.value(x, t) - K.value(x, -t));
    };
    return {value, nullptr, dt};
}

/// Largest residual of the first-order system coupling a kernel pair, with
/// all derivatives taken by fourth-order centered differences of width
/// fd_step on an interior mesh.
struct VekuaResidual {
    double first;    ///< max |f d/dx (u/f) - d/dt v|
    double second;   ///< max |(1/f) d/dx (f v) - d/dt u|
    [[nodiscard]] double combined() const { return std::max(first, second); }
};

inline VekuaResidual vekua_residual(const EvaluableKernel& Kf, const EvaluableKernel& Kinv,
                                    const BasisFamily& fam, int mesh_x = 24, int mesh_t = 13,
                                    double fd_step = 1e-4) {
    if (mesh_x < 2 || mesh_t < 1) throw std::invalid_argument("kernel: mesh too small");
    const double b = fam.b();
    const double margin = 2.5 * fd_step;
    auto u = [&](double x, double t) { return Kf.value(x, t); };
    auto v = [&](double x, double t) { return -Kinv.value(x, t); };
    auto fa = [&](double x) { return fam.f.interpolate(x); };

    // fourth-order centered first derivative from five samples
    auto d4 = [fd_step](const std::function<cplx(double)>& g, double c) {
        return (g(c - 2.0 * fd_step) - 8.0 * g(c - fd_step) + 8.0 * g(c + fd_step) -
                g(c + 2.0 * fd_step)) /
               (12.0 * fd_step);
    };

    VekuaResidual out{0.0, 0.0};
    for (int ix = 0; ix < mesh_x; ++ix) {
        const double x = -(b - margin) + (2.0 * (b - margin)) * ix / (mesh_x - 1);
        const double reach = std::abs(x) - 2.0 * margin;
        if (reach <= 0.0) continue;
        for (int it = 0; it < mesh_t; ++it) {
            const double t = mesh_t == 1 ? 0.0 : -reach + 2.0 * reach * it / (mesh_t - 1);
            const cplx r1 = fa(x) * d4([&](double s) { return u(s, t) / fa(s); }, x) -
                            d4([&](double s) { return v(x, s); }, t);
            const cplx r2 = d4([&](double s) { return fa(s) * v(s, t); }, x) / fa(x) -
                            d4([&](double s) { return u(x, s); }, t);
            out.first = std::max(out.first, std::abs(r1));
            out.second = std::max(out.second, std::abs(r2));
        }
    }
    return out;
}

/// Largest absolute deviation between an expanded kernel and a reference
/// over an evenly spaced mesh of [-b, b]^2 restricted to |t| <= |x|.  The
/// t-polynomial is assembled once per mesh row.
inline double mesh_error(const KernelApproximation& a, const EvaluableKernel& ref, double b,
                         int mesh = 100) {
    std::vector<double> row_max(static_cast<std::size_t>(mesh), 0.0);
    parallel_for(static_cast<std::size_t>(mesh), [&](std::size_t i) {
        const double x = -b + 2.0 * b * static_cast<double>(i) / (mesh - 1);
        const auto coef = a.t_coefficients(x);
        double worst = 0.0;
        for (int j = 0; j < mesh; ++j) {
            const double t = -b + 2.0 * b * j / (mesh - 1);
            if (std::abs(t) > std::abs(x)) continue;
            worst = std::max(worst,
                             std::abs(KernelApproximation::eval_polynomial(coef, t) - ref.value(x, t)));
        }
        row_max[i] = worst;
    });
    double out = 0.0;
    for (double v : row_max) out = std::max(out, v);
    return out;
}

/// Largest absolute deviation between two kernels over an evenly spaced mesh
/// of the square [-b, b]^2 restricted to |t| <= |x|.
template <typename KernelA, typename KernelB>
double mesh_error(const KernelA& a, const KernelB& c, double b, int mesh = 100) {
    std::vector<double> row_max(static_cast<std::size_t>(mesh), 0.0);
    parallel_for(static_cast<std::size_t>(mesh), [&](std::size_t i) {
        const double x = -b + 2.0 * b * static_cast<double>(i) / (mesh - 1);
        double worst = 0.0;
        for (int j = 0; j < mesh; ++j) {
            const double t = -b + 2.0 * b * j / (mesh - 1);
            if (std::abs(t) > std::abs(x)) continue;
            worst = std::max(worst, std::abs(a(x, t) - c(x, t)));
        }
        row_max[i] = worst;
    });
    double out = 0.0;
    for (double v : row_max) out = std::max(out, v);
    return out;
}

} // namespace tkern
