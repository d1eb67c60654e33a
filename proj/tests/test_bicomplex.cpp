#include <catch2/catch_amalgamated.hpp>

#include "tkern/bicomplex.hpp"

#include <complex>

using tkern::Bicomplex;
using tkern::bicomplex_j;
using tkern::bicomplex_norm;
using tkern::bicomplex_pow;
using tkern::cplx;

namespace {

double dist(const Bicomplex& a, const Bicomplex& b) {
    return std::abs(a.re - b.re) + std::abs(a.im - b.im);
}

} // namespace

TEST_CASE("j squares to one") {
    Bicomplex jj = bicomplex_j * bicomplex_j;
    REQUIRE(dist(jj, Bicomplex{cplx{1.0, 0.0}, cplx{0.0, 0.0}}) == 0.0);
}

TEST_CASE("idempotent split diagonalizes multiplication") {
    Bicomplex a{cplx{1.3, -0.7}, cplx{0.25, 2.0}};
    Bicomplex b{cplx{-0.4, 0.9}, cplx{1.1, -0.3}};

    auto [ap, am] = a.idempotent_split();
    auto [bp, bm] = b.idempotent_split();

    Bicomplex prod = a * b;
    auto [pp, pm] = prod.idempotent_split();

    REQUIRE(std::abs(pp - ap * bp) < 1e-14);
    REQUIRE(std::abs(pm - am * bm) < 1e-14);

    Bicomplex rebuilt = Bicomplex::from_idempotent(ap, am);
    REQUIRE(dist(rebuilt, a) < 1e-14);
}

TEST_CASE("split components are re plus-minus im") {
    Bicomplex a{cplx{2.0, 1.0}, cplx{-0.5, 3.0}};
    auto [p, m] = a.idempotent_split();
    REQUIRE(std::abs(p - (a.re + a.im)) == 0.0);
    REQUIRE(std::abs(m - (a.re - a.im)) == 0.0);
}

TEST_CASE("arithmetic matches componentwise expansion") {
    Bicomplex a{cplx{0.3, -1.2}, cplx{2.0, 0.1}};
    Bicomplex b{cplx{-1.0, 0.4}, cplx{0.7, 0.7}};

    Bicomplex sum = a + b;
    REQUIRE(std::abs(sum.re - (a.re + b.re)) == 0.0);
    REQUIRE(std::abs(sum.im - (a.im + b.im)) == 0.0);

    Bicomplex diff = a - b;
    REQUIRE(std::abs(diff.re - (a.re - b.re)) == 0.0);
    REQUIRE(std::abs(diff.im - (a.im - b.im)) == 0.0);

    // (u1 + j v1)(u2 + j v2) = (u1 u2 + v1 v2) + j (u1 v2 + v1 u2)
    Bicomplex prod = a * b;
    REQUIRE(std::abs(prod.re - (a.re * b.re + a.im * b.im)) < 1e-15);
    REQUIRE(std::abs(prod.im - (a.re * b.im + a.im * b.re)) < 1e-15);

    Bicomplex scaled = cplx{0.0, 2.0} * a;
    REQUIRE(std::abs(scaled.re - cplx{0.0, 2.0} * a.re) == 0.0);
    REQUIRE(std::abs(scaled.im - cplx{0.0, 2.0} * a.im) == 0.0);

    Bicomplex neg = -a;
    REQUIRE(dist(neg + a, Bicomplex{}) == 0.0);
}

TEST_CASE("conjugation in j flips the j part") {
    Bicomplex a{cplx{0.3, -1.2}, cplx{2.0, 0.1}};
    Bicomplex c = a.conj_j();
    REQUIRE(std::abs(c.re - a.re) == 0.0);
    REQUIRE(std::abs(c.im + a.im) == 0.0);

    // a * conj_j(a) has vanishing j part
    Bicomplex prod = a * c;
    REQUIRE(std::abs(prod.im) < 1e-14);
}

TEST_CASE("norm is positive definite") {
    REQUIRE(bicomplex_norm(Bicomplex{}) == 0.0);
    // a zero divisor: re = im means the minus component vanishes
    Bicomplex zd{cplx{1.0, 0.5}, cplx{1.0, 0.5}};
    REQUIRE(bicomplex_norm(zd) > 0.5);
    Bicomplex a{cplx{1e-8, 0.0}, cplx{0.0, 0.0}};
    REQUIRE(bicomplex_norm(a) > 0.0);
}

TEST_CASE("integer powers agree with repeated products") {
    Bicomplex a{cplx{0.8, 0.3}, cplx{-0.2, 0.6}};
    Bicomplex acc{cplx{1.0, 0.0}, cplx{0.0, 0.0}};
    for (int n = 0; n <= 9; ++n) {
        Bicomplex p = bicomplex_pow(a, n);
        REQUIRE(dist(p, acc) < 1e-12);
        acc = acc * a;
    }
}

TEST_CASE("binomial expansion of x plus j t") {
    double x = 0.7;
    double t = -0.4;
    Bicomplex z{cplx{x, 0.0}, cplx{t, 0.0}};
    for (int n = 1; n <= 8; ++n) {
        Bicomplex p = bicomplex_pow(z, n);
        // real-part/j-part split of (x + j t)^n with j^2 = 1: binomial sum
        double even_sum = 0.0;
        double odd_sum = 0.0;
        double coeff = 1.0;
        for (int k = 0; k <= n; ++k) {
            double term = coeff * std::pow(x, n - k) * std::pow(t, k);
            if (k % 2 == 0) {
                even_sum += term;
            } else {
                odd_sum += term;
            }
            coeff = coeff * double(n - k) / double(k + 1);
        }
        REQUIRE(std::abs(p.re - cplx{even_sum, 0.0}) < 1e-12);
        REQUIRE(std::abs(p.im - cplx{odd_sum, 0.0}) < 1e-12);
    }
}
