#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "tkern/builtins.hpp"
#include "tkern/kernel.hpp"
#include "tkern/oracle_values.hpp"

#include <cmath>
#include <memory>

using tkern::BasisFamily;
using tkern::cplx;
using tkern::EvaluableKernel;
using tkern::GridFunction;
using tkern::KernelApproximation;
using tkern::ReferenceKernelKind;
using test_util::rel_err;

namespace {

std::shared_ptr<const BasisFamily> model_family(int order) {
    auto p = tkern::make_builtin_potential("model", 0.9, 1001);
    return std::make_shared<const BasisFamily>(tkern::family_for(p, order));
}

} // namespace

TEST_CASE("closed-form kernels match the frozen samples") {
    auto kc = tkern::reference_kernel(ReferenceKernelKind::cosh_profile);
    for (const auto& row : tkern::oracle::kernel_cosh_samples) {
        const double got = kc.value(row[0], row[1]).real();
        REQUIRE(std::abs(got - row[2]) < 1e-13 * (1.0 + std::abs(row[2])));
    }
    auto ks = tkern::reference_kernel(ReferenceKernelKind::sech_profile);
    for (const auto& row : tkern::oracle::kernel_sech_samples) {
        const double got = ks.value(row[0], row[1]).real();
        REQUIRE(std::abs(got - row[2]) < 1e-11 * (1.0 + std::abs(row[2])));
    }
}

TEST_CASE("affine pair kernels in closed form") {
    auto ka = tkern::reference_kernel(ReferenceKernelKind::affine);
    auto kr = tkern::reference_kernel(ReferenceKernelKind::affine_reciprocal);
    for (double x : {-0.8, -0.2, 0.5, 0.85}) {
        for (double ratio : {-1.0, -0.4, 0.0, 0.9}) {
            const double t = ratio * x;
            REQUIRE(ka.value(x, t) == cplx{0.5, 0.0});
            REQUIRE(rel_err(kr.value(x, t), cplx{(t - 1.0) / (2.0 * (x + 1.0)), 0.0}) < 1e-14);
        }
    }
}

TEST_CASE("evaluation outside the characteristic triangle is rejected") {
    auto kc = tkern::reference_kernel(ReferenceKernelKind::cosh_profile);
    REQUIRE_THROWS_AS(kc.value(0.5, 0.6), std::domain_error);
    REQUIRE_THROWS_AS(kc.value(-0.5, 0.51), std::domain_error);
    REQUIRE_NOTHROW(kc.value(0.5, 0.5));
    REQUIRE_NOTHROW(kc.value(0.0, 0.0));
}

TEST_CASE("analytic kernel derivatives agree with finite differences") {
    auto kc = tkern::reference_kernel(ReferenceKernelKind::cosh_profile);
    auto ks = tkern::reference_kernel(ReferenceKernelKind::sech_profile);
    for (auto [x, t] : {std::pair{0.9, 0.3}, {1.4, -0.8}, {-1.1, 0.6}}) {
        const double h = 1e-5;
        const cplx fdx = (kc.value(x + h, t) - kc.value(x - h, t)) / (2.0 * h);
        const cplx fdt = (kc.value(x, t + h) - kc.value(x, t - h)) / (2.0 * h);
        REQUIRE(std::abs(kc.dx(x, t) - fdx) < 1e-8);
        REQUIRE(std::abs(kc.dt(x, t) - fdt) < 1e-8);
        const cplx sdt = (ks.value(x, t + h) - ks.value(x, t - h)) / (2.0 * h);
        REQUIRE(std::abs(ks.dt(x, t) - sdt) < 1e-8);
    }
}

TEST_CASE("finite-difference fallback drives kernels without analytic derivatives") {
    EvaluableKernel k{[](double x, double t) { return cplx{x * x * t + t * t, 0.0}; }, nullptr,
                      nullptr};
    REQUIRE(std::abs(tkern::kernel_dx(k, 0.7, 0.2) - cplx{2.0 * 0.7 * 0.2, 0.0}) < 1e-8);
    REQUIRE(std::abs(tkern::kernel_dt(k, 0.7, 0.2) - cplx{0.49 + 0.4, 0.0}) < 1e-8);
}

TEST_CASE("series expansion of the affine kernel collapses to one half") {
    auto fam = model_family(8);
    auto p = tkern::make_builtin_potential("model", 0.9, 1001);
    tkern::SCoefficientTable table(8);
    auto k = tkern::kernel_from_taylor(fam, table, *p.jet, *p.jet_inv, 8);

    auto ref = tkern::reference_kernel(ReferenceKernelKind::affine);
    REQUIRE(tkern::mesh_error(k, ref, 0.9, 80) < 1e-10);

    // reconstruction of the reciprocal jet gives the same kernel
    auto k2 = tkern::kernel_from_taylor(fam, table, *p.jet, 8);
    double worst = 0.0;
    for (std::size_t i = 0; i < k.c().size(); ++i) {
        worst = std::max(worst, std::abs(k.c()[i] - k2.c()[i]));
        worst = std::max(worst, std::abs(k.b()[i] - k2.b()[i]));
    }
    REQUIRE(worst < 1e-10);
}

TEST_CASE("polynomial assembly matches direct evaluation") {
    auto p = tkern::make_builtin_potential("sech", 2.0, 1001);
    auto fam = std::make_shared<const BasisFamily>(tkern::family_for(p, 9));
    tkern::SCoefficientTable table(9);
    auto k = tkern::kernel_from_taylor(fam, table, *p.jet, *p.jet_inv, 9);

    for (double x : {-1.7, 0.4, 1.9}) {
        const auto coef = k.t_coefficients(x);
        REQUIRE(coef.size() == 10);
        for (double t : {-0.3, 0.0, 0.2}) {
            REQUIRE(std::abs(KernelApproximation::eval_polynomial(coef, t) - k.evaluate(x, t)) < 1e-15);
        }
    }

    // derivative members against central differences of evaluate
    const double h = 1e-6;
    for (auto [x, t] : {std::pair{1.5, 0.7}, {-1.2, 0.4}}) {
        const cplx fdx = (k.evaluate(x + h, t) - k.evaluate(x - h, t)) / (2.0 * h);
        const cplx fdt = (k.evaluate(x, t + h) - k.evaluate(x, t - h)) / (2.0 * h);
        REQUIRE(std::abs(k.dx(x, t) - fdx) < 1e-6);
        REQUIRE(std::abs(k.dt(x, t) - fdt) < 1e-7);
    }

    auto ev = k.as_evaluable();
    REQUIRE(ev.value(1.1, 0.3) == k.evaluate(1.1, 0.3));
    REQUIRE(ev.dx(1.1, 0.3) == k.dx(1.1, 0.3));
    REQUIRE(ev.dt(1.1, 0.3) == k.dt(1.1, 0.3));
}

TEST_CASE("coefficient list validation") {
    auto fam = model_family(4);
    std::vector<cplx> five(5, cplx{});
    std::vector<cplx> four(4, cplx{});
    REQUIRE_NOTHROW(KernelApproximation(fam, five, five));
    REQUIRE_THROWS_AS(KernelApproximation(fam, five, four), std::invalid_argument);
    REQUIRE_THROWS_AS(KernelApproximation(fam, {}, {}), std::invalid_argument);
    std::vector<cplx> six(6, cplx{});
    REQUIRE_THROWS_AS(KernelApproximation(fam, six, six), std::invalid_argument);
    REQUIRE_THROWS_AS(KernelApproximation(nullptr, five, five), std::invalid_argument);
}

TEST_CASE("JSON round trip is guarded by the family fingerprint") {
    auto fam = model_family(6);
    auto p = tkern::make_builtin_potential("model", 0.9, 1001);
    tkern::SCoefficientTable table(6);
    auto k = tkern::kernel_from_taylor(fam, table, *p.jet, *p.jet_inv, 6);
    auto j = k.to_json();

    auto back = KernelApproximation::from_json(j, fam);
    for (double x : {-0.7, 0.3}) {
        REQUIRE(back.evaluate(x, 0.2 * x) == k.evaluate(x, 0.2 * x));
    }

    auto zp = tkern::make_builtin_potential("zero", 0.9, 1001);
    auto other = std::make_shared<const BasisFamily>(tkern::family_for(zp, 6));
    REQUIRE_THROWS_AS(KernelApproximation::from_json(j, other), std::invalid_argument);
}

TEST_CASE("boundary targets and residual for simple potentials") {
    auto zero = GridFunction::sample(1.0, 201, [](double) { return cplx{}; });
    auto tz = tkern::goursat_targets(zero, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < tz.even_part.size(); ++i) {
        REQUIRE(std::abs(tz.even_part[i]) < 1e-15);
        REQUIRE(std::abs(tz.odd_part[i]) < 1e-15);
    }

    auto one = GridFunction::sample(1.0, 201, [](double) { return cplx{1.0, 0.0}; });
    auto to = tkern::goursat_targets(one, cplx{0.5, 0.0});
    for (double x : {-0.9, -0.3, 0.4, 0.8}) {
        REQUIRE(std::abs(to.odd_part.interpolate(x) - cplx{0.25 * x, 0.0}) < 1e-13);
        REQUIRE(std::abs(to.even_part.interpolate(x) - cplx{0.25 + 0.25 * x, 0.0}) < 1e-13);
    }

    // the affine-model kernel satisfies its boundary data exactly
    auto fam = model_family(8);
    auto p = tkern::make_builtin_potential("model", 0.9, 1001);
    tkern::SCoefficientTable table(8);
    auto k = tkern::kernel_from_taylor(fam, table, *p.jet, *p.jet_inv, 8);
    auto res = tkern::goursat_residual(k, tkern::goursat_targets(p.q, *p.h));
    REQUIRE(res.even_part < 1e-10);
    REQUIRE(res.odd_part < 1e-10);
}

TEST_CASE("parameter change shifts the diagonal data") {
    EvaluableKernel none{[](double, double) { return cplx{}; },
                         [](double, double) { return cplx{}; },
                         [](double, double) { return cplx{}; }};
    auto shifted = tkern::change_parameter(none, cplx{0.0, 0.0}, cplx{0.8, 0.0});
    for (double x : {0.2, 0.9, 1.7}) {
        for (double t : {-0.15, 0.0, 0.1}) {
            REQUIRE(std::abs(shifted.value(x, t) - cplx{0.4, 0.0}) < 1e-14);
        }
    }

    auto kc = tkern::reference_kernel(ReferenceKernelKind::cosh_profile);
    const cplx h2{0.3, 0.0};
    auto moved = tkern::change_parameter(kc, cplx{0.0, 0.0}, h2);
    for (double x : {0.4, 1.0, 1.6}) {
        const cplx plus = moved.value(x, x);
        const cplx minus = moved.value(x, -x);
        REQUIRE(std::abs(minus - 0.5 * h2) < 1e-11);
        REQUIRE(std::abs(plus - minus - cplx{0.5 * x, 0.0}) < 1e-11);

        const double h = 1e-5;
        const cplx fdt = (moved.value(x, 0.2) - moved.value(x, 0.2 - 2.0 * h)) / (2.0 * h);
        REQUIRE(std::abs(moved.dt(x, 0.2 - h) - fdt) < 1e-7);
    }
}

TEST_CASE("line transform maps the affine kernel onto its reciprocal") {
    auto p = tkern::make_builtin_potential("model", 0.9, 1001);
    auto fam = tkern::family_for(p, 6);
    auto src = tkern::reference_kernel(ReferenceKernelKind::affine);
    auto ref = tkern::reference_kernel(ReferenceKernelKind::affine_reciprocal);

    auto fwd = tkern::darboux_kernel(src, fam, tkern::DarbouxDirection::forward);
    const double be = 0.81;
    double worst = tkern::mesh_error([&](double x, double t) { return fwd.value(x, t); },
                                     [&](double x, double t) { return ref.value(x, t); }, be, 60);
    REQUIRE(worst < 1e-9);

    auto back = tkern::darboux_kernel(fwd, fam, tkern::DarbouxDirection::reverse);
    double round = tkern::mesh_error([&](double x, double t) { return back.value(x, t); },
                                     [&](double x, double t) { return src.value(x, t); }, be, 40);
    REQUIRE(round < 1e-8);
}

TEST_CASE("first-order system residual vanishes on the exact pair") {
    auto p = tkern::make_builtin_potential("model", 0.9, 1001);
    auto fam = tkern::family_for(p, 4);
    auto kf = tkern::reference_kernel(ReferenceKernelKind::affine);
    auto ki = tkern::reference_kernel(ReferenceKernelKind::affine_reciprocal);
    auto res = tkern::vekua_residual(kf, ki, fam);
    REQUIRE(res.combined() < 1e-6);
    REQUIRE(res.combined() == std::max(res.first, res.second));
}

TEST_CASE("mesh error overloads agree") {
    auto fam = model_family(6);
    auto p = tkern::make_builtin_potential("model", 0.9, 1001);
    tkern::SCoefficientTable table(6);
    auto k = tkern::kernel_from_taylor(fam, table, *p.jet, *p.jet_inv, 6);
    auto ref = tkern::reference_kernel(ReferenceKernelKind::affine);
    const double direct = tkern::mesh_error(k, ref, 0.9, 50);
    const double generic =
        tkern::mesh_error([&](double x, double t) { return k.evaluate(x, t); },
                          [&](double x, double t) { return ref.value(x, t); }, 0.9, 50);
    REQUIRE(std::abs(direct - generic) < 1e-14);
}
