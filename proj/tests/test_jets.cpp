#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "tkern/builtins.hpp"
#include "tkern/jets.hpp"
#include "tkern/oracle_values.hpp"
#include "tkern/reference_tables.hpp"

#include <string>
#include <vector>

using tkern::big_int;
using tkern::big_rational;
using tkern::cplx;
using tkern::ExactPotentialJet;
using tkern::PotentialJet;
using tkern::SCoefficientTable;
using test_util::rel_err;

namespace {

big_rational pow2(int e) {
    return big_rational(boost::multiprecision::pow(big_int(2), static_cast<unsigned>(e)));
}

big_rational factorial(int n) {
    big_int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return big_rational(f);
}

ExactPotentialJet exact_cosh_jet(int count) {
    ExactPotentialJet jet;
    jet.h = 0;
    jet.q_derivs.assign(static_cast<std::size_t>(count), big_rational(0));
    jet.q_derivs[0] = 1;
    return jet;
}

ExactPotentialJet exact_sech_jet(int count) {
    return {big_rational(0), tkern::detail::sech_potential_derivatives_exact(count)};
}

PotentialJet float_jet(const ExactPotentialJet& e) {
    PotentialJet jet;
    jet.h = cplx{e.h.convert_to<double>(), 0.0};
    for (const auto& v : e.q_derivs) jet.q_derivs.push_back(cplx{v.convert_to<double>(), 0.0});
    return jet;
}

} // namespace

TEST_CASE("sech potential derivatives match the frozen integers") {
    const auto exact = tkern::detail::sech_potential_derivatives_exact(31);
    REQUIRE(exact.size() == 31);
    for (int n = 0; n <= 30; ++n) {
        big_rational want{big_int(std::string(tkern::oracle::q_sech_derivatives[static_cast<std::size_t>(n)]))};
        REQUIRE(exact[static_cast<std::size_t>(n)] == want);
    }
    for (const auto& row : tkern::reference::sech_potential_derivative_rows())
        REQUIRE(exact[static_cast<std::size_t>(row.n)] == big_rational(row.value));

    const auto approx = tkern::detail::sech_potential_derivatives(31);
    for (int n = 0; n <= 30; ++n) {
        const double want = exact[static_cast<std::size_t>(n)].convert_to<double>();
        REQUIRE(std::abs(approx[static_cast<std::size_t>(n)] - want) <= 1e-12 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("kernel trace derivatives for the cosh potential, exact arithmetic") {
    SCoefficientTable table(21);
    const auto kd = tkern::kernel_derivatives_at_origin(table, exact_cosh_jet(21), 21);
    REQUIRE(kd.size() == 22);
    for (const auto& row : tkern::reference::kernel_derivative_rows()) {
        const auto got = kd[static_cast<std::size_t>(row.n)] * pow2(row.n + 1);
        REQUIRE(got == big_rational(row.scaled_cosh));
    }
}

TEST_CASE("kernel trace derivatives for the sech potential, exact arithmetic") {
    SCoefficientTable table(21);
    const auto kd = tkern::kernel_derivatives_at_origin(table, exact_sech_jet(21), 21);
    for (const auto& row : tkern::reference::kernel_derivative_rows()) {
        const auto got = kd[static_cast<std::size_t>(row.n)] * pow2(row.n + 1);
        REQUIRE(got == big_rational(row.scaled_sech));
    }
}

TEST_CASE("kernel trace derivatives in floating point stay within 1e-12") {
    SCoefficientTable table(21);
    for (bool sech : {false, true}) {
        const auto exact = sech ? exact_sech_jet(21) : exact_cosh_jet(21);
        const auto kd = tkern::kernel_derivatives_at_origin(table, float_jet(exact), 21);
        for (const auto& row : tkern::reference::kernel_derivative_rows()) {
            const double scaled = sech ? static_cast<double>(row.scaled_sech)
                                       : static_cast<double>(row.scaled_cosh);
            const double want = scaled / std::pow(2.0, row.n + 1);
            const cplx got = kd[static_cast<std::size_t>(row.n)];
            REQUIRE(rel_err(got.real(), want) < 1e-12);
            REQUIRE(std::abs(got.imag()) < 1e-12 * std::abs(want));
        }
    }
}

TEST_CASE("expansion coefficients for the sech potential match the published numerators") {
    SCoefficientTable table(21);
    const auto pair = tkern::taylor_pair_from_jet(table, exact_sech_jet(21), 21);
    for (const auto& row : tkern::reference::sech_coefficient_rows()) {
        const auto scale = pow2(row.n + 1) * factorial(row.n);
        REQUIRE(pair.coeffs.c[static_cast<std::size_t>(row.n)] * scale == big_rational(row.c_num));
        REQUIRE(pair.coeffs.b[static_cast<std::size_t>(row.n)] * scale == big_rational(row.b_num));
    }

    const auto fpair = tkern::taylor_pair_from_jet(table, float_jet(exact_sech_jet(21)), 21);
    for (const auto& row : tkern::reference::sech_coefficient_rows()) {
        const auto scale = pow2(row.n + 1) * factorial(row.n);
        const double want_c = big_rational(big_rational(row.c_num) / scale).convert_to<double>();
        const double want_b = big_rational(big_rational(row.b_num) / scale).convert_to<double>();
        REQUIRE(rel_err(fpair.coeffs.c[static_cast<std::size_t>(row.n)].real(), want_c) < 1e-12);
        REQUIRE(rel_err(fpair.coeffs.b[static_cast<std::size_t>(row.n)].real(), want_b) < 1e-12);
    }
}

TEST_CASE("reciprocal Taylor coefficients") {
    // 1/(1 + x) alternates
    std::vector<big_rational> one_plus_x(12, big_rational(0));
    one_plus_x[0] = 1;
    one_plus_x[1] = 1;
    const auto inv = tkern::inverse_function_jet(one_plus_x);
    for (int k = 0; k <= 11; ++k)
        REQUIRE(inv[static_cast<std::size_t>(k)] == big_rational(k % 2 == 0 ? 1 : -1));

    // Cauchy product against the original gives the identity series
    std::vector<cplx> f{cplx{1.0, 0.0}, cplx{0.3, 0.1}, cplx{-0.2, 0.0},
                        cplx{0.1, -0.05}, cplx{0.05, 0.0}};
    const auto g = tkern::inverse_function_jet(f);
    for (std::size_t n = 0; n < f.size(); ++n) {
        cplx conv{};
        for (std::size_t i = 0; i <= n; ++i) conv += f[i] * g[n - i];
        REQUIRE(std::abs(conv - (n == 0 ? cplx{1.0, 0.0} : cplx{})) < 1e-14);
    }

    std::vector<cplx> not_unit{cplx{2.0, 0.0}, cplx{1.0, 0.0}};
    REQUIRE_THROWS_AS(tkern::inverse_function_jet(not_unit), std::invalid_argument);
}

TEST_CASE("affine solution pair collapses to a constant kernel, exactly") {
    // f = 1 + x solves f'' = q f with q = 0 and h = 1; the reciprocal side
    // carries q(x) = 2/(1+x)^2
    SCoefficientTable table(10);
    ExactPotentialJet jet{big_rational(1), std::vector<big_rational>(11, big_rational(0))};
    const auto pair = tkern::taylor_pair_from_jet(table, jet, 10);

    REQUIRE(pair.derivs_f[0] == big_rational(1, 2));
    for (std::size_t n = 1; n < pair.derivs_f.size(); ++n)
        REQUIRE(pair.derivs_f[n] == 0);

    REQUIRE(pair.derivs_inv[0] == big_rational(-1, 2));
    REQUIRE(pair.derivs_inv[1] == big_rational(1, 2));
    for (std::size_t n = 2; n < pair.derivs_inv.size(); ++n)
        REQUIRE(pair.derivs_inv[n] == 0);

    REQUIRE(pair.coeffs.c[0] == big_rational(1, 2));
    REQUIRE(pair.coeffs.c[1] == big_rational(-1, 2));
    REQUIRE(pair.coeffs.b[0] == 0);
    REQUIRE(pair.coeffs.b[1] == 0);
    for (std::size_t n = 2; n < pair.coeffs.c.size(); ++n) {
        REQUIRE(pair.coeffs.c[n] == 0);
        REQUIRE(pair.coeffs.b[n] == 0);
    }
}

TEST_CASE("supplying the reciprocal jet analytically agrees with reconstruction") {
    SCoefficientTable table(8);
    PotentialJet jet_f{cplx{1.0, 0.0}, std::vector<cplx>(9, cplx{})};
    PotentialJet jet_inv;
    jet_inv.h = cplx{-1.0, 0.0};
    for (int n = 0; n <= 8; ++n) {
        double fac = 2.0;
        for (int k = 2; k <= n + 1; ++k) fac *= k;
        jet_inv.q_derivs.push_back(cplx{(n % 2 == 0 ? fac : -fac), 0.0});
    }

    const auto rebuilt = tkern::taylor_pair_from_jet(table, jet_f, 8);
    const auto given = tkern::taylor_pair_from_jets(table, jet_f, jet_inv, 8);
    for (std::size_t n = 0; n < rebuilt.derivs_inv.size(); ++n) {
        REQUIRE(std::abs(rebuilt.derivs_inv[n] - given.derivs_inv[n]) < 1e-10);
        REQUIRE(std::abs(rebuilt.derivs_f[n] - given.derivs_f[n]) < 1e-14);
    }
}

TEST_CASE("argument validation") {
    SCoefficientTable shallow(3);
    PotentialJet jet{cplx{}, std::vector<cplx>(10, cplx{})};
    REQUIRE_THROWS_AS(tkern::kernel_derivatives_at_origin(shallow, jet, 5), std::invalid_argument);

    SCoefficientTable table(5);
    PotentialJet short_jet{cplx{}, std::vector<cplx>(2, cplx{})};
    REQUIRE_THROWS_AS(tkern::kernel_derivatives_at_origin(table, short_jet, 5), std::invalid_argument);

    std::vector<cplx> a(3, cplx{1.0, 0.0});
    std::vector<cplx> b(4, cplx{1.0, 0.0});
    REQUIRE_THROWS_AS(tkern::expansion_coefficients(a, b), std::invalid_argument);
}
