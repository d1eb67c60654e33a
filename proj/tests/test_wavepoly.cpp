#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "tkern/bicomplex.hpp"
#include "tkern/builtins.hpp"
#include "tkern/family.hpp"
#include "tkern/wavepoly.hpp"

#include <cmath>

using tkern::BasisFamily;
using tkern::Bicomplex;
using tkern::cplx;
using tkern::GridFunction;

namespace {

BasisFamily unit_family(int order) {
    auto one = GridFunction::sample(1.0, 401, [](double) { return cplx{1.0, 0.0}; });
    return tkern::build_basis_family(one, order, cplx{0.0, 0.0});
}

double bdist(const Bicomplex& a, const Bicomplex& b) {
    return std::abs(a.re - b.re) + std::abs(a.im - b.im);
}

} // namespace

TEST_CASE("low-order wave polynomials in closed form") {
    for (double x : {-0.8, 0.3, 1.1}) {
        for (double t : {-0.5, 0.0, 0.7}) {
            REQUIRE(tkern::wave_polynomial(0, x, t) == 1.0);
            REQUIRE(tkern::wave_polynomial(1, x, t) == Catch::Approx(x).margin(1e-15));
            REQUIRE(tkern::wave_polynomial(2, x, t) == Catch::Approx(t).margin(1e-15));
            REQUIRE(tkern::wave_polynomial(3, x, t) == Catch::Approx(x * x + t * t).margin(1e-14));
            REQUIRE(tkern::wave_polynomial(4, x, t) == Catch::Approx(2.0 * x * t).margin(1e-14));
            REQUIRE(tkern::wave_polynomial(5, x, t) ==
                    Catch::Approx(x * x * x + 3.0 * x * t * t).margin(1e-14));
            REQUIRE(tkern::wave_polynomial(6, x, t) ==
                    Catch::Approx(3.0 * x * x * t + t * t * t).margin(1e-14));
        }
    }
}

TEST_CASE("wave polynomials restricted to the diagonal") {
    for (int m = 1; m <= 6; ++m) {
        for (double x : {-1.2, 0.4, 0.9}) {
            const double want = std::pow(2.0, m - 1) * std::pow(x, m);
            REQUIRE(tkern::wave_polynomial(2 * m - 1, x, x) == Catch::Approx(want).margin(1e-13));
            REQUIRE(tkern::wave_polynomial(2 * m, x, x) == Catch::Approx(want).margin(1e-13));
        }
    }
}

TEST_CASE("pairs split the binomial expansion of (x + j t)^m") {
    for (int m = 1; m <= 7; ++m) {
        for (double x : {0.6, -0.9}) {
            for (double t : {0.45, -0.3}) {
                Bicomplex z{cplx{x, 0.0}, cplx{t, 0.0}};
                Bicomplex p = tkern::bicomplex_pow(z, m);
                REQUIRE(std::abs(p.re - cplx{tkern::wave_polynomial(2 * m - 1, x, t), 0.0}) < 1e-13);
                REQUIRE(std::abs(p.im - cplx{tkern::wave_polynomial(2 * m, x, t), 0.0}) < 1e-13);
            }
        }
    }
}

TEST_CASE("unit profile reduces the generalized family to plain wave polynomials") {
    auto fam = unit_family(12);
    for (int n = 0; n <= 12; ++n) {
        for (double x : {-0.8, 0.25, 0.95}) {
            for (double t : {-0.6, 0.1, 0.7}) {
                const double plain = tkern::wave_polynomial(n, x, t);
                REQUIRE(std::abs(tkern::generalized_wave_polynomial_u(fam, n, x, t) - cplx{plain, 0.0}) < 1e-9);
                REQUIRE(std::abs(tkern::generalized_wave_polynomial_v(fam, n, x, t) - cplx{plain, 0.0}) < 1e-9);
            }
        }
    }
}

TEST_CASE("unit profile formal powers are bicomplex monomials") {
    auto fam = unit_family(10);
    const Bicomplex a{cplx{1.2, -0.4}, cplx{0.3, 0.8}};
    for (int n = 0; n <= 10; ++n) {
        for (double x : {-0.7, 0.5}) {
            for (double t : {-0.35, 0.6}) {
                Bicomplex z{cplx{x, 0.0}, cplx{t, 0.0}};
                Bicomplex want = a * tkern::bicomplex_pow(z, n);
                Bicomplex got = tkern::formal_power(fam, n, a, x, t);
                REQUIRE(bdist(got, want) < 1e-9);
            }
        }
    }
}

TEST_CASE("degree zero returns the coefficient itself") {
    auto p = tkern::make_builtin_potential("exp", M_PI, 1001);
    auto fam = tkern::family_for(p, 6);
    const Bicomplex a{cplx{0.7, 0.1}, cplx{-0.2, 0.5}};
    Bicomplex got = tkern::formal_power(fam, 0, a, 1.3, 0.4);
    // the degree-zero power multiplies a by the profile pair at x
    REQUIRE(std::isfinite(got.re.real()));
    Bicomplex other = tkern::formal_power_from_wave_polynomials(fam, 0, a, 1.3, 0.4);
    REQUIRE(bdist(got, other) < 1e-12);
}

TEST_CASE("both assembly routes agree on a nontrivial family") {
    auto p = tkern::make_builtin_potential("exp", M_PI, 1001);
    auto fam = tkern::family_for(p, 12);
    const Bicomplex a{cplx{1.0, 0.3}, cplx{-0.6, 0.2}};
    for (int n = 0; n <= 6; ++n) {
        double scale = 1.0;
        for (double x : {-2.0, -0.9, 0.7, 2.5}) {
            for (double ratio : {-0.8, 0.0, 0.5}) {
                const double t = ratio * x;
                Bicomplex va = tkern::formal_power(fam, n, a, x, t);
                Bicomplex vb = tkern::formal_power_from_wave_polynomials(fam, n, a, x, t);
                scale = std::max({scale, tkern::bicomplex_norm(va)});
                REQUIRE(bdist(va, vb) < 1e-9 * scale);
            }
        }
    }
}
