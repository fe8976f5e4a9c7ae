#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "griesz/hermite.hpp"
#include "griesz/varlp.hpp"

using namespace griesz;
using Catch::Approx;

TEST_CASE("modular") {
    const QuadratureRule rule = gaussian_rule(24, 1);
    const ExponentField p2 = constant_exponent(2.0);
    CHECK(modular([](const Point&) { return 0.0; }, p2, rule) == 0.0);
    CHECK(modular([](const Point&) { return 1.0; }, inverse_quadratic_exponent(2.0, 1.0),
                  rule) == Approx(1.0).margin(1e-12));
    CHECK(modular([](const Point& p) { return hermite_value(1, p[0]); }, p2, rule) ==
          Approx(2.0).epsilon(1e-12));
    // box rule with explicit gaussian weight agrees
    const QuadratureRule box = box_rule(80, 1, 8.0);
    CHECK(modular([](const Point& p) { return hermite_value(1, p[0]); }, p2, box) ==
          Approx(2.0).epsilon(1e-10));
}

TEST_CASE("luxemburg norm") {
    const QuadratureRule rule = gaussian_rule(24, 1);
    const ExponentField p2 = constant_exponent(2.0);
    SECTION("zero and constants") {
        CHECK(luxemburg_norm([](const Point&) { return 0.0; }, p2, rule) == 0.0);
        const ExponentField pv = inverse_quadratic_exponent(2.0, 1.0);
        CHECK(luxemburg_norm([](const Point&) { return 3.25; }, pv, rule) ==
              Approx(3.25).epsilon(1e-8));
    }
    SECTION("||H_1||_2 = sqrt 2") {
        CHECK(luxemburg_norm([](const Point& p) { return hermite_value(1, p[0]); }, p2, rule) ==
              Approx(std::sqrt(2.0)).epsilon(1e-8));
    }
    SECTION("constant-exponent consistency") {
        auto f = [](const Point& p) { return hermite_value(1, p[0]) + 0.3; };
        for (double q : {1.5, 2.0, 4.0}) {
            const ExponentField pq = constant_exponent(q);
            const double direct = std::pow(
                modular([&](const Point& p) { return f(p); }, pq, rule), 1.0 / q);
            CHECK(luxemburg_norm(f, pq, rule) == Approx(direct).epsilon(1e-8));
        }
    }
}

TEST_CASE("luxemburg norm properties") {
    const QuadratureRule rule = gaussian_rule(20, 1);
    const ExponentField p = inverse_quadratic_exponent(2.0, 1.0);
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> cdist(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        HermiteExpansion e(1);
        for (unsigned n = 0; n <= 4; ++n) e.set(MultiIndex{n}, cdist(rng));
        auto f = [&](const Point& pt) { return expansion_eval(e, pt); };
        const double nf = luxemburg_norm(f, p, rule);

        SECTION("homogeneity and unit ball, trial " + std::to_string(trial)) {
            const double c = std::abs(cdist(rng)) + 0.1;
            auto cf = [&](const Point& pt) { return c * f(pt); };
            REQUIRE(luxemburg_norm(cf, p, rule) == Approx(c * nf).epsilon(2e-8));
            if (nf > 0.0) {
                auto scaled = [&](const Point& pt) { return f(pt) / nf; };
                REQUIRE(modular(scaled, p, rule) == Approx(1.0).epsilon(1e-7));
            }
        }
    }
    SECTION("monotonicity") {
        for (int trial = 0; trial < 20; ++trial) {
            HermiteExpansion e(1);
            for (unsigned n = 0; n <= 3; ++n) e.set(MultiIndex{n}, cdist(rng));
            auto f = [&](const Point& pt) { return expansion_eval(e, pt); };
            auto g = [&](const Point& pt) { return std::abs(f(pt)) + 0.2; };
            REQUIRE(luxemburg_norm(f, p, rule) <= luxemburg_norm(g, p, rule) + 1e-9);
        }
    }
}

TEST_CASE("conjugate exponent") {
    CHECK(conjugate(constant_exponent(2.0)).eval(Point{0.3}) == Approx(2.0));
    CHECK(conjugate(constant_exponent(3.0)).eval(Point{0.3}) == Approx(1.5));
    const ExponentField p = inverse_quadratic_exponent(2.0, 1.0);
    const ExponentField q = conjugate(p);
    CHECK(q.eval(Point{0.0}) == Approx(1.5));  // p(0) = 3
    CHECK(q.p_minus == Approx(1.5));
    CHECK(*q.p_infty == Approx(2.0));
    // pointwise algebra oracle at random points
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int i = 0; i < 30; ++i) {
        const Point x{u(rng)};
        const double pv = p.eval(x);
        CHECK(q.eval(x) == Approx(pv / (pv - 1.0)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(conjugate(constant_exponent(1.0)), std::invalid_argument);
}

TEST_CASE("holder check") {
    const QuadratureRule rule = gaussian_rule(24, 1);
    const ExponentField p2 = constant_exponent(2.0);
    SECTION("zero lhs") {
        auto [lhs, rhs] = holder_check([](const Point&) { return 0.0; },
                                       [](const Point& p) { return p[0]; }, p2, rule);
        CHECK(lhs == 0.0);
        CHECK(lhs <= rhs);
    }
    SECTION("constants") {
        auto [lhs, rhs] = holder_check([](const Point&) { return 1.0; },
                                       [](const Point&) { return 1.0; }, p2, rule);
        CHECK(lhs == Approx(1.0).margin(1e-12));
        CHECK(rhs == Approx(2.0).epsilon(1e-7));
    }
    SECTION("H_1 against H_2") {
        auto h1 = [](const Point& p) { return hermite_value(1, p[0]); };
        auto h2 = [](const Point& p) { return hermite_value(2, p[0]); };
        auto [lhs, rhs] = holder_check(h1, h2, p2, rule);
        CHECK(lhs <= 2.0 * std::sqrt(2.0) * std::sqrt(8.0) + 1e-9);
        CHECK(lhs <= rhs);
    }
    SECTION("random pairs stay within the inequality") {
        const ExponentField p = inverse_quadratic_exponent(2.0, 1.0);
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> c(-2.0, 2.0);
        for (int i = 0; i < 100; ++i) {
            HermiteExpansion e1(1), e2(1);
            for (unsigned n = 0; n <= 3; ++n) {
                e1.set(MultiIndex{n}, c(rng));
                e2.set(MultiIndex{n}, c(rng));
            }
            auto f = [&](const Point& pt) { return expansion_eval(e1, pt); };
            auto g = [&](const Point& pt) { return expansion_eval(e2, pt); };
            auto [lhs, rhs] = holder_check(f, g, p, rule);
            REQUIRE(lhs <= rhs * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("local log-Holder diagnostic") {
    SECTION("constant exponent has zero constant") {
        CHECK(lh0_constant(constant_exponent(2.0), 1, 2000) == 0.0);
    }
    SECTION("smooth preset is stable under sample doubling") {
        const ExponentField p = inverse_quadratic_exponent(2.0, 1.0);
        const double c1 = lh0_constant(p, 1, 4000);
        const double c2 = lh0_constant(p, 1, 8000);
        CHECK(c2 <= 1.1 * c1 + 1e-12);
        CHECK(c1 <= 1.1 * c2 + 1e-12);
        CHECK(c1 > 0.0);
    }
    SECTION("step exponent blows up as sampling refines") {
        ExponentField step;
        step.id = "step";
        step.eval = [](const Point& x) { return norm(x) < 1.0 ? 3.0 : 2.0; };
        step.p_minus = 2.0;
        step.p_plus = 3.0;
        const double coarse = lh0_constant(step, 1, 200);
        const double fine = lh0_constant(step, 1, 200000);
        CHECK(fine > 1.5 * coarse);
    }
}

TEST_CASE("gaussian decay class diagnostic") {
    SECTION("constant exponent") {
        const auto res = pinfty_gamma_check(constant_exponent(2.0), 1, 3000);
        CHECK(res.c_gamma_hat == 0.0);
        CHECK(res.lemma14_ok);
    }
    SECTION("inverse quadratic preset is in the class with C <= 1") {
        const auto res = pinfty_gamma_check(inverse_quadratic_exponent(2.0, 1.0), 1, 5000);
        CHECK(res.c_gamma_hat <= 1.0 + 1e-12);
        CHECK(res.c_gamma_hat > 0.5);
        CHECK(res.lemma14_ok);
    }
    SECTION("log decay is not in the class") {
        const ExponentField p = log_decay_exponent(2.0, 1.0);
        const auto near = pinfty_gamma_check(p, 1, 3000, 10.0);
        const auto far = pinfty_gamma_check(p, 1, 3000, 1000.0);
        CHECK(far.c_gamma_hat > 2.0 * near.c_gamma_hat);
    }
}

TEST_CASE("exponent presets by id") {
    CHECK(make_exponent_preset("constant", {2.0}).p_plus == 2.0);
    CHECK(make_exponent_preset("inverse_quadratic", {2.0, 1.0}).tag_pinfty_gamma);
    CHECK(make_exponent_preset("sin_bump", {2.0, 0.5, 1.0}).p_plus == Approx(2.5));
    CHECK(make_exponent_preset("log_decay", {2.0, 1.0}).tag_lhinf);
    CHECK_THROWS_AS(make_exponent_preset("nope", {}), std::invalid_argument);
    CHECK_THROWS_AS(make_exponent_preset("constant", {}), std::invalid_argument);
    // sin bump evaluates to p_inf outside its support
    const ExponentField sb = make_exponent_preset("sin_bump", {2.0, 0.5, 1.0});
    CHECK(sb.eval(Point{0.0}) == Approx(2.5));
    CHECK(sb.eval(Point{2.0}) == Approx(2.0));
}
