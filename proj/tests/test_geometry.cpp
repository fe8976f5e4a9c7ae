#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "griesz/geometry.hpp"

using namespace griesz;
using Catch::Approx;

TEST_CASE("admissibility radius") {
    CHECK(admissibility_radius(Point{0.0}) == 1.0);
    CHECK(admissibility_radius(Point{2.0}) == Approx(0.5));
    CHECK(admissibility_radius(Point{0.5}) == 1.0);
    CHECK(admissibility_radius(Point{1.2, 1.6}) == Approx(0.5));  // |x| = 2
}

TEST_CASE("local region membership") {
    CHECK(in_local_region(Point{0.7}, Point{0.7}));
    CHECK(in_local_region(Point{0.0}, Point{0.9}));
    CHECK_FALSE(in_local_region(Point{10.0}, Point{10.2}));
    const AdmissibleBall b = admissible_ball(Point{3.0, 4.0});  // |x| = 5
    CHECK(b.radius == Approx(2.0 / 5.0));
}

TEST_CASE("covering family properties") {
    const int d = 2;
    const CoveringFamily fam = build_covering(4.0, d);
    std::mt19937_64 rng(31415);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    SECTION("i: dilated family covers the region") {
        for (int i = 0; i < 10000; ++i) {
            Point p(d);
            double r = fam.region_radius * std::sqrt(u01(rng));
            double pn = 0.0;
            for (int k = 0; k < d; ++k) {
                p[k] = gauss(rng);
                pn += p[k] * p[k];
            }
            pn = std::sqrt(pn);
            if (pn == 0.0) continue;
            for (int k = 0; k < d; ++k) p[k] *= r / pn;
            REQUIRE(fam.covered_by_dilated(p));
        }
    }
    SECTION("ii: bounded overlap") {
        CHECK(fam.overlap_bound >= 1);
        CHECK(fam.overlap_bound <= 64);
        for (int i = 0; i < 2000; ++i) {
            Point p(d);
            for (int k = 0; k < d; ++k) p[k] = 3.0 * (2.0 * u01(rng) - 1.0);
            REQUIRE(fam.overlap_count(p) <= fam.overlap_bound);
        }
    }
    SECTION("iii: gaussian weight is uniformly comparable on each ball") {
        CHECK(fam.gauss_ratio_bound <= std::exp(2.0 * d * 1.5));
        for (const auto& ball : fam.balls) {
            double hi = 0.0, lo = std::numeric_limits<double>::infinity();
            for (int i = 0; i < 200; ++i) {
                Point p(d);
                double pn = 0.0;
                for (int k = 0; k < d; ++k) {
                    p[k] = gauss(rng);
                    pn += p[k] * p[k];
                }
                pn = std::sqrt(pn);
                if (pn == 0.0) continue;
                const double rr = ball.radius * std::pow(u01(rng), 1.0 / d);
                for (int k = 0; k < d; ++k) p[k] = ball.center[k] + rr * p[k] / pn;
                const double w = std::exp(-norm_sq(p));
                hi = std::max(hi, w);
                lo = std::min(lo, w);
            }
            REQUIRE(hi / lo <= fam.gauss_ratio_bound * (1.0 + 1e-9));
        }
    }
    SECTION("iv: hyperbolic balls are swallowed by the recorded dilation") {
        int tested = 0;
        for (int i = 0; tested < 1000 && i < 100000; ++i) {
            const auto& ball = fam.balls[i % fam.balls.size()];
            Point p(d);
            double pn = 0.0;
            for (int k = 0; k < d; ++k) {
                p[k] = gauss(rng);
                pn += p[k] * p[k];
            }
            pn = std::sqrt(pn);
            if (pn == 0.0) continue;
            const double rr = ball.radius * std::pow(u01(rng), 1.0 / d);
            for (int k = 0; k < d; ++k) p[k] = ball.center[k] + rr * p[k] / pn;
            // B_h(p) subset C_d * ball <=> |p - c| + d m(p) <= C_d r
            REQUIRE(dist(p, ball.center) + d * admissibility_radius(p) <=
                    fam.dilation_bhat * ball.radius * (1.0 + 1e-9));
            ++tested;
        }
    }
    SECTION("small region reduces to near-unit balls") {
        const CoveringFamily tiny = build_covering(1.0, 1);
        for (const auto& ball : tiny.balls)
            CHECK(norm(ball.center) + ball.radius <= 2.0 + 1e-12);
        std::mt19937_64 rng2(7);
        std::uniform_real_distribution<double> r01(-1.0, 1.0);
        for (int i = 0; i < 10000; ++i) REQUIRE(tiny.covered_by_dilated(Point{r01(rng2)}));
    }
}

TEST_CASE("discrete maximal function") {
    SECTION("constants average to themselves") {
        const GridFunction g =
            GridFunction::sample([](const Point&) { return -2.5; }, 4.0, 33, 1);
        const double radii[] = {0.5, 1.0, 2.0};
        CHECK(maximal_function(g, Point{0.7}, radii) == Approx(2.5));
    }
    SECTION("indicator at its center") {
        const GridFunction g = GridFunction::sample(
            [](const Point& p) { return norm(p) <= 1.0 ? 1.0 : 0.0; }, 4.0, 81, 1);
        const double radii[] = {0.5, 1.0, 2.0, 4.0};
        CHECK(maximal_function(g, Point{0.0}, radii) == Approx(1.0));
    }
    SECTION("indicator seen from outside: volume-ratio window") {
        const GridFunction g = GridFunction::sample(
            [](const Point& p) { return norm(p) <= 1.0 ? 1.0 : 0.0; }, 6.0, 241, 1);
        const double radii[] = {4.0};
        const double v = maximal_function(g, Point{3.0}, radii);
        // counting oracle on the grid: nodes in [-1,1] / nodes in [-1,7]
        std::size_t in_support = 0, in_ball = 0;
        for (std::size_t i = 0; i < g.values.size(); ++i) {
            const Point p = g.node(i);
            if (std::abs(p[0] - 3.0) <= 4.0) {
                ++in_ball;
                if (norm(p) <= 1.0) ++in_support;
            }
        }
        CHECK(v == Approx(static_cast<double>(in_support) / in_ball));
        CHECK(v >= std::pow(3.0 / 4.0, 1.0) / 4.0 * 0.5);
        CHECK(v <= 1.0);
    }
    SECTION("dominates |f| once a radius isolates the node") {
        const GridFunction g = GridFunction::sample(
            [](const Point& p) { return std::sin(3.0 * p[0]); }, 2.0, 41, 1);
        const double h = g.spacing();
        const double radii[] = {0.4 * h, 1.0, 2.0};
        for (int i = 0; i < 41; i += 5) {
            const Point p = g.node(i);
            REQUIRE(maximal_function(g, p, radii) >= std::abs(g.values[i]) - 1e-12);
        }
    }
    SECTION("sublinear") {
        auto f1 = [](const Point& p) { return std::sin(2.0 * p[0]); };
        auto f2 = [](const Point& p) { return std::cos(1.0 + p[0]); };
        const GridFunction g1 = GridFunction::sample(f1, 3.0, 61, 1);
        const GridFunction g2 = GridFunction::sample(f2, 3.0, 61, 1);
        const GridFunction gs = GridFunction::sample(
            [&](const Point& p) { return f1(p) + f2(p); }, 3.0, 61, 1);
        const double radii[] = {0.3, 0.9, 2.0};
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(-2.5, 2.5);
        for (int i = 0; i < 50; ++i) {
            const Point p{u(rng)};
            REQUIRE(maximal_function(gs, p, radii) <=
                    maximal_function(g1, p, radii) + maximal_function(g2, p, radii) + 1e-12);
        }
    }
    SECTION("all-empty balls are an error") {
        const GridFunction g =
            GridFunction::sample([](const Point&) { return 1.0; }, 4.0, 9, 1);
        const double radii[] = {1e-6};
        CHECK_THROWS_AS(maximal_function(g, Point{0.4}, radii), std::runtime_error);
    }
}

TEST_CASE("local part is dominated by the maximal function") {
    // (1+|x|) int_{B_h(x)} |f(y)|/|x-y|^{d-1} dy <= C M(f chi_Bhat)(x)
    const int d = 1;
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const GridFunction grid = GridFunction::sample(
        [](const Point& p) { return std::exp(-0.3 * p[0] * p[0]) * (1.1 + std::sin(2 * p[0])); },
        6.0, 1201, 1);
    const double h = grid.spacing();
    double worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
        const Point x{u(rng)};
        const double rad = d * admissibility_radius(x);
        // grid-sum of the local integral (d = 1: plain average over the ball)
        double integral = 0.0;
        for (std::size_t i = 0; i < grid.values.size(); ++i) {
            const Point y = grid.node(i);
            if (dist(x, y) < rad) integral += std::abs(grid.values[i]) * h;
        }
        integral *= (1.0 + norm(x));
        std::vector<double> radii;
        for (double r = h; r <= 4.0; r *= 2.0) radii.push_back(r);
        const double mf = maximal_function(grid, x, radii);
        worst = std::max(worst, integral / mf);
    }
    // empirical constant is modest and finite
    CHECK(worst < 16.0);
    CHECK(worst > 0.0);
}
