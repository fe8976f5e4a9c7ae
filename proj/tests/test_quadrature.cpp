#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "griesz/adaptive.hpp"
#include "griesz/quadrature.hpp"

using namespace griesz;
using Catch::Approx;

TEST_CASE("adaptive integrator on known integrals") {
    // endpoint power singularity: int_0^1 x^{-1/2} dx = 2
    auto r1 = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                 {1e-10, 4000});
    REQUIRE(r1.converged);
    CHECK(r1.value == Approx(2.0).epsilon(1e-9));

    // endpoint log singularity: int_0^1 log x dx = -1
    auto r2 = integrate_adaptive([](double x) { return std::log(x); }, 0.0, 1.0, {1e-11, 4000});
    REQUIRE(r2.converged);
    CHECK(r2.value == Approx(-1.0).epsilon(1e-10));

    // oscillatory Gaussian: int e^{-x^2} cos(3x) dx = sqrt(pi) e^{-9/4}
    auto r3 = integrate_adaptive([](double x) { return std::exp(-x * x) * std::cos(3.0 * x); },
                                 -8.0, 8.0, {1e-12, 4000});
    REQUIRE(r3.converged);
    CHECK(r3.value == Approx(std::sqrt(kPi) * std::exp(-2.25)).epsilon(1e-12));

    // kink handled by a forced split
    const double splits[] = {0.3};
    auto r4 = integrate_adaptive([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0,
                                 {1e-13, 2000}, splits);
    REQUIRE(r4.converged);
    CHECK(r4.value == Approx(0.5 * (0.3 * 0.3 + 0.7 * 0.7)).epsilon(1e-13));
}

TEST_CASE("nested box integration") {
    auto g2 = [](const Point& p) { return std::exp(-p[0] * p[0] - p[1] * p[1]); };
    auto r = integrate_box_adaptive(g2, Point{-6.0, -6.0}, Point{6.0, 6.0}, 1e-9, 400);
    REQUIRE(r.converged);
    CHECK(r.value == Approx(kPi).epsilon(1e-8));
}

TEST_CASE("gaussian rule basics") {
    SECTION("single node at the origin") {
        const QuadratureRule r = gaussian_rule(1, 1);
        REQUIRE(r.size() == 1);
        CHECK(r.nodes[0][0] == Approx(0.0).margin(1e-15));
        CHECK(r.weights[0] == Approx(1.0));
    }
    SECTION("probability normalization in 2d") {
        const QuadratureRule r = gaussian_rule(5, 2);
        double sum = 0.0;
        for (double w : r.weights) sum += w;
        CHECK(sum == Approx(1.0).margin(1e-12));
        CHECK(integrate(r, [](const Point&) { return 1.0; }) == Approx(1.0).margin(1e-12));
    }
    SECTION("node budget is enforced") {
        CHECK_THROWS_AS(gaussian_rule(101, 3, 1000000), std::runtime_error);
    }
}

TEST_CASE("gaussian rule moments match the gamma_d oracle") {
    // int x^{2k} dgamma_1 = (2k-1)!!/2^k; odd moments vanish
    const QuadratureRule r = gaussian_rule(12, 1);
    double dfact = 1.0;  // (2k-1)!!
    for (int k = 1; k < 12; ++k) {
        dfact *= 2.0 * k - 1.0;
        const double want = dfact / std::ldexp(1.0, k);
        const double got = integrate(r, [&](const Point& p) { return std::pow(p[0], 2 * k); });
        CHECK(got == Approx(want).epsilon(1e-12));
        const double odd = integrate(r, [&](const Point& p) { return std::pow(p[0], 2 * k - 1); });
        CHECK(odd == Approx(0.0).margin(1e-10));
    }
}

TEST_CASE("box rule is exact on polynomials") {
    const QuadratureRule r = box_rule(6, 1, 2.0);
    const double got = integrate(r, [](const Point& p) { return std::pow(p[0], 4); });
    CHECK(got == Approx(2.0 * 32.0 / 5.0).epsilon(1e-13));
}

TEST_CASE("graded singular box rule") {
    const Point mark{0.37};
    const QuadratureRule r = singular_box_rule(mark, 1.0, 44, 8);
    for (const auto& n : r.nodes) CHECK(n[0] != mark[0]);
    // integrable singularity at the mark: int |x-c|^{-1/2} over [c-1, c+1] = 4
    const double got =
        integrate(r, [&](const Point& p) { return 1.0 / std::sqrt(std::abs(p[0] - mark[0])); });
    CHECK(got == Approx(4.0).epsilon(1e-7));
}
