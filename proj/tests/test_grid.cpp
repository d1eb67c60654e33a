#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "tkern/grid.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>

using tkern::cplx;
using tkern::GridFunction;
using test_util::rel_err;

namespace {

cplx quintic(double x) {
    return cplx{1.0 - 0.25 * std::pow(x, 5) + std::pow(x, 4) + 2.0 * x,
                0.5 * std::pow(x, 3) - x * x + 3.0};
}

cplx quintic_antiderivative(double x) {
    return cplx{x - 0.25 * std::pow(x, 6) / 6.0 + std::pow(x, 5) / 5.0 + x * x,
                0.125 * std::pow(x, 4) - std::pow(x, 3) / 3.0 + 3.0 * x};
}

double max_node_error(const GridFunction& got, const std::function<cplx(double)>& want) {
    double m = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i)
        m = std::max(m, std::abs(got[i] - want(got.node(i))));
    return m;
}

} // namespace

TEST_CASE("grid layout and node placement") {
    GridFunction g(2.0, 41);
    REQUIRE(g.b() == 2.0);
    REQUIRE(g.size() == 41);
    REQUIRE(g.step() == Catch::Approx(0.1).margin(1e-15));
    REQUIRE(g.node(0) == -2.0);
    REQUIRE(std::abs(g.node(40) - 2.0) < 1e-14);
    REQUIRE(std::abs(g.node(20)) < 1e-15);

    auto s = GridFunction::sample(1.0, 11, [](double x) { return cplx{x, -x}; });
    REQUIRE(s.at_zero() == cplx{0.0, 0.0});

    REQUIRE_THROWS_AS(GridFunction(-1.0, 11), std::invalid_argument);
    REQUIRE_THROWS_AS(GridFunction(0.0, 11), std::invalid_argument);
    REQUIRE_THROWS_AS(GridFunction(1.0, 1), std::invalid_argument);
    GridFunction tiny(1.0, 5);
    REQUIRE_THROWS_AS(tiny.require_calculus(), std::invalid_argument);
}

TEST_CASE("interpolation reproduces node values and quintics") {
    auto g = GridFunction::sample(2.0, 41, quintic);
    for (std::size_t i : {std::size_t{0}, std::size_t{7}, std::size_t{20}, std::size_t{40}})
        REQUIRE(std::abs(g.interpolate(g.node(i)) - g[i]) < 1e-12);
    for (double x : {-1.97, -1.004, -0.33, 0.0, 0.123, 1.55, 1.999}) {
        REQUIRE(std::abs(g.interpolate(x) - quintic(x)) < 1e-12);
    }
}

TEST_CASE("interpolation converges at degree six for smooth data") {
    auto fn = [](double x) { return cplx{std::sin(3.0 * x), 0.0}; };
    auto coarse = GridFunction::sample(1.0, 21, fn);
    auto fine = GridFunction::sample(1.0, 41, fn);
    double ec = 0.0, ef = 0.0;
    for (double x = -0.97; x < 1.0; x += 0.059) {
        ec = std::max(ec, std::abs(coarse.interpolate(x) - fn(x)));
        ef = std::max(ef, std::abs(fine.interpolate(x) - fn(x)));
    }
    REQUIRE(ef < 1e-6);
    REQUIRE(ec / ef > 20.0);
}

TEST_CASE("indefinite integral is exact for quintics and anchored at zero") {
    auto g = GridFunction::sample(2.0, 41, quintic);
    auto F = tkern::indefinite_integral(g);
    REQUIRE(std::abs(F.at_zero()) < 1e-14);
    REQUIRE(max_node_error(F, quintic_antiderivative) < 1e-12);
}

TEST_CASE("indefinite integral converges at sixth order") {
    auto fn = [](double x) { return cplx{std::sin(3.0 * x), std::cos(2.0 * x)}; };
    auto anti = [](double x) {
        return cplx{(1.0 - std::cos(3.0 * x)) / 3.0, std::sin(2.0 * x) / 2.0};
    };
    auto e_at = [&](std::size_t n) {
        auto F = tkern::indefinite_integral(GridFunction::sample(1.0, n, fn));
        return max_node_error(F, anti);
    };
    const double e21 = e_at(21);
    const double e81 = e_at(81);
    REQUIRE(e81 < 1e-8);
    REQUIRE(e21 / e81 > 200.0);
}

TEST_CASE("grid derivative is exact for quartics and fourth order for sines") {
    auto g = GridFunction::sample(1.5, 31, [](double x) {
        return cplx{std::pow(x, 4) - 2.0 * x * x + x, 3.0 * std::pow(x, 3)};
    });
    auto d = tkern::derivative_grid(g);
    auto want = [](double x) {
        return cplx{4.0 * std::pow(x, 3) - 4.0 * x + 1.0, 9.0 * x * x};
    };
    REQUIRE(max_node_error(d, want) < 1e-11);

    auto fn = [](double x) { return cplx{std::sin(3.0 * x), 0.0}; };
    auto dfn = [](double x) { return cplx{3.0 * std::cos(3.0 * x), 0.0}; };
    auto e_at = [&](std::size_t n) {
        auto dd = tkern::derivative_grid(GridFunction::sample(1.0, n, fn));
        return max_node_error(dd, dfn);
    };
    const double e21 = e_at(21);
    const double e41 = e_at(41);
    REQUIRE(e41 < 1e-3);
    REQUIRE(e21 / e41 > 8.0);
}

TEST_CASE("pointwise arithmetic and layout checks") {
    auto a = GridFunction::sample(1.0, 11, [](double x) { return cplx{x, 1.0}; });
    auto c = GridFunction::sample(1.0, 11, [](double x) { return cplx{2.0, x}; });
    auto sum = a + c;
    auto prod = a * c;
    auto quot = a / c;
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(sum[i] == a[i] + c[i]);
        REQUIRE(prod[i] == a[i] * c[i]);
        REQUIRE(std::abs(quot[i] - a[i] / c[i]) < 1e-15);
    }
    auto scaled = cplx{0.0, 2.0} * a;
    REQUIRE(scaled[3] == cplx{0.0, 2.0} * a[3]);

    GridFunction other(1.0, 13);
    REQUIRE_THROWS_AS(a + other, std::invalid_argument);
    GridFunction wider(2.0, 11);
    REQUIRE_THROWS_AS(a - wider, std::invalid_argument);
}

TEST_CASE("Gauss-Legendre quadrature is exact through degree 11") {
    auto val = tkern::integrate_gl([](double x) { return cplx{std::pow(x, 11), 0.0}; },
                                   -1.0, 2.0, 1);
    REQUIRE(rel_err(val.real(), 4095.0 / 12.0) < 1e-14);

    auto osc = tkern::integrate_gl([](double x) { return std::exp(cplx{0.0, x}); }, 0.0, 10.0);
    cplx want = (std::exp(cplx{0.0, 10.0}) - 1.0) / cplx{0.0, 1.0};
    REQUIRE(std::abs(osc - want) < 1e-13);

    REQUIRE(tkern::integrate_gl([](double) { return cplx{1.0, 0.0}; }, 3.0, 3.0) == cplx{});
}

TEST_CASE("CSV round trip preserves every sample bit-for-bit") {
    const std::string path = "grid_rt_test.csv";
    auto g = GridFunction::sample(1.5, 17, [](double x) {
        return cplx{std::sin(x) * 1e-7, std::exp(x)};
    });
    tkern::write_csv(g, path);
    auto back = tkern::read_csv(path);
    REQUIRE(back.size() == g.size());
    REQUIRE(back.b() == g.b());
    for (std::size_t i = 0; i < g.size(); ++i) REQUIRE(back[i] == g[i]);
    std::remove(path.c_str());
}

TEST_CASE("CSV sample reader accepts real-only rows and rejects garbage") {
    const std::string path = "grid_rows_test.csv";
    {
        std::ofstream out(path);
        out << "x,value\n";
        out << "0,1.5\n";
        out << "0.5,2.5\n";
        out << "1,3.5\n";
    }
    auto s = tkern::read_csv_samples(path);
    REQUIRE(s.x.size() == 3);
    REQUIRE(s.value[1] == cplx{2.5, 0.0});
    std::remove(path.c_str());

    {
        std::ofstream out(path);
        out << "0,1.0\n";
    }
    REQUIRE_THROWS_AS(tkern::read_csv_samples(path), std::invalid_argument);
    std::remove(path.c_str());

    REQUIRE_THROWS_AS(tkern::read_csv_samples("no_such_file_here.csv"), std::invalid_argument);
}

TEST_CASE("full-grid CSV reader validates the domain") {
    const std::string path = "grid_dom_test.csv";
    {
        std::ofstream out(path);
        out << "x,re,im\n";
        for (int i = 0; i <= 10; ++i) out << 0.1 * i << "," << i << ",0\n";
    }
    REQUIRE_THROWS_AS(tkern::read_csv(path), std::invalid_argument);
    std::remove(path.c_str());
}

TEST_CASE("JSON round trip") {
    auto g = GridFunction::sample(0.75, 9, [](double x) { return cplx{x * x, -x}; });
    auto j = tkern::to_json(g);
    REQUIRE(j["n_points"] == 9);
    auto back = tkern::grid_from_json(j);
    REQUIRE(back.b() == g.b());
    for (std::size_t i = 0; i < g.size(); ++i) REQUIRE(back[i] == g[i]);

    j["n_points"] = 8;
    REQUIRE_THROWS_AS(tkern::grid_from_json(j), std::invalid_argument);
}
