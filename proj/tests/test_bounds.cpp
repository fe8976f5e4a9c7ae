#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "griesz/bounds.hpp"

using namespace griesz;
using Catch::Approx;

TEST_CASE("kernel geometry") {
    SECTION("worked example x = 1, y = 2") {
        const KernelGeometry g = kernel_geometry(Point{1.0}, Point{2.0});
        CHECK(g.a == Approx(5.0));
        CHECK(g.b == Approx(4.0));
        CHECK(g.t0 == Approx(0.75).epsilon(1e-14));
        CHECK(g.u_t0 == Approx(3.0).epsilon(1e-14));
    }
    SECTION("orthogonal pair: t0 = 1 and u(t0) = |y|^2") {
        const KernelGeometry g = kernel_geometry(Point{1.0, 0.0}, Point{0.0, 2.0});
        CHECK(g.b == 0.0);
        CHECK(g.t0 == Approx(1.0).epsilon(1e-14));
        CHECK(g.u_t0 == Approx(4.0).epsilon(1e-14));
    }
    SECTION("swap identity: u_t0(x,y) + u_t0(y,x) = sqrt(a^2 - b^2)") {
        std::mt19937_64 rng(12);
        std::normal_distribution<double> gauss(0.0, 1.5);
        for (int i = 0; i < 200; ++i) {
            const Point x{gauss(rng), gauss(rng)}, y{gauss(rng), gauss(rng)};
            const KernelGeometry gxy = kernel_geometry(x, y);
            const KernelGeometry gyx = kernel_geometry(y, x);
            const double disc = std::sqrt(gxy.a * gxy.a - gxy.b * gxy.b);
            REQUIRE(gxy.u_t0 + gyx.u_t0 == Approx(disc).margin(1e-10));
        }
    }
    SECTION("degenerate origin pair") {
        CHECK_THROWS_AS(kernel_geometry(Point{0.0}, Point{0.0}), std::invalid_argument);
    }
}

TEST_CASE("u(t)") {
    SECTION("boundary value t = 1") {
        CHECK(u_of_t(1.0, Point{1.3}, Point{0.4}) == Approx(0.16).epsilon(1e-12));
    }
    SECTION("consistency with the geometry record") {
        const KernelGeometry g = kernel_geometry(Point{1.0}, Point{2.0});
        CHECK(u_of_t(g.t0, Point{1.0}, Point{2.0}) == Approx(g.u_t0).epsilon(1e-13));
    }
    SECTION("defining identity u(t) = |y - sqrt(1-t) x|^2 / t") {
        std::mt19937_64 rng(77);
        std::normal_distribution<double> gauss(0.0, 1.5);
        std::uniform_real_distribution<double> ut(0.01, 1.0);
        for (int i = 0; i < 100; ++i) {
            const Point x{gauss(rng), gauss(rng)}, y{gauss(rng), gauss(rng)};
            const double t = ut(rng);
            const double w = std::sqrt(1.0 - t);
            double r2 = 0.0;
            for (int k = 0; k < 2; ++k) {
                const double r = y[k] - w * x[k];
                r2 += r * r;
            }
            REQUIRE(u_of_t(t, x, y) == Approx(r2 / t).margin(1e-10));
        }
    }
    SECTION("domain") {
        CHECK_THROWS_AS(u_of_t(0.0, Point{1.0}, Point{2.0}), std::invalid_argument);
        CHECK_THROWS_AS(u_of_t(1.5, Point{1.0}, Point{2.0}), std::invalid_argument);
    }
}

TEST_CASE("t0 minimizes u") {
    SECTION("worked example grid search") {
        const BoundReport rep = t0_minimizer_check(Point{1.0}, Point{2.0});
        CHECK(rep.pass);
        // the grid min sits just above u(t0) = 3 at grid resolution
        CHECK(rep.metrics.at("grid_min") == Approx(3.0).margin(1e-4));
        CHECK(rep.metrics.at("grid_min") >= 3.0 - 1e-9);
    }
    SECTION("b = 0 pairs are rejected (boundary minimum)") {
        CHECK_THROWS_AS(t0_minimizer_check(Point{1.0, 0.0}, Point{0.0, 1.0}),
                        std::invalid_argument);
    }
    SECTION("random positive-correlation pairs") {
        std::mt19937_64 rng(2718);
        std::normal_distribution<double> gauss(0.0, 1.5);
        int done = 0;
        while (done < 100) {
            const Point x{gauss(rng)}, y{gauss(rng)};
            if (2.0 * dot(x, y) <= 0.0 || norm(x) + norm(y) == 0.0) continue;
            const BoundReport rep = t0_minimizer_check(x, y, 800);
            REQUIRE(rep.pass);
            ++done;
        }
    }
}

TEST_CASE("decomposition terms") {
    SECTION("term I vanishes at x = 0") {
        const DecompositionTerms t =
            decomposition_terms(RieszOrder(2.0), Point{0.0}, Point{1.0});
        CHECK(t.term_I == Approx(0.0).margin(1e-14));
        CHECK(t.term_II > 0.0);
        CHECK(t.term_III > 0.0);
    }
    SECTION("finite and positive at a generic pair") {
        const DecompositionTerms t =
            decomposition_terms(RieszOrder(2.0), Point{1.0}, Point{1.5});
        CHECK(std::isfinite(t.term_I));
        CHECK(t.term_I > 0.0);
        CHECK(std::isfinite(t.term_II));
        CHECK(t.term_II > 0.0);
        CHECK(std::isfinite(t.term_III));
        CHECK(t.term_III > 0.0);
    }
    SECTION("master decomposition on sampled pairs") {
        const BoundReport rep = master_decomposition_check(RieszOrder(2.0), 1, 100);
        CHECK(rep.pass);
        CHECK(rep.violations == 0);
        // the dropped prefactor makes the sum strictly larger than |N|
        CHECK(rep.empirical_constant < 1.0);
    }
}

TEST_CASE("auxiliary kernels") {
    SECTION("K3 in one dimension is |x| + 1") {
        const AuxKernels a = aux_kernels(Point{1.5}, Point{0.2}, RieszOrder(2.0));
        CHECK(a.k3 == Approx(2.5).epsilon(1e-14));
    }
    SECTION("coincident points rejected") {
        CHECK_THROWS_AS(aux_kernels(Point{1.0}, Point{1.0}, RieszOrder(2.0)),
                        std::invalid_argument);
    }
    SECTION("local bound |N| <= C (K3 + K2) with stable C") {
        std::mt19937_64 rng(515);
        std::normal_distribution<double> gauss(0.0, 1.5);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        const RieszOrder beta(2.0);
        double sup = 0.0, sup_half = 0.0;
        const int n = 200;
        for (int i = 0; i < n; ++i) {
            Point x{gauss(rng)};
            const double rad = admissibility_radius(x);
            Point y{x[0] + (2.0 * u01(rng) - 1.0) * rad};
            if (dist(x, y) < 1e-3) {
                --i;
                continue;
            }
            const double lhs = std::abs(riesz_kernel_eval(beta, x, y, {1e-11, 8000}));
            const AuxKernels a = aux_kernels(x, y, beta);
            sup = std::max(sup, lhs / (a.k3 + a.k2));
            if (2 * (i + 1) <= n) sup_half = sup;
        }
        CHECK(std::isfinite(sup));
        CHECK(sup / sup_half <= 1.5);
    }
    SECTION("G2 against the displayed Holder majorant") {
        // G2(z) <= sup(r^{d-1} e^{-r^2/2 u} u^{-(d-1)/2}) / |z|^{d-1}
        //          * int_0^1 (-log sqrt(1-u))^{beta/2} u^{-1/2} du
        const int d = 2;
        const double beta = 2.0;
        const double holder_u =
            std::pow(lemma_gamma(1.5 * beta + 1.0), 1.0 / 3.0) * std::pow(4.0, 2.0 / 3.0);
        const double c_exp = expineq_constant(d - 1.0, 0.5);
        std::mt19937_64 rng(99);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int i = 0; i < 50; ++i) {
            const Point x{gauss(rng), gauss(rng)}, y{gauss(rng), gauss(rng)};
            if (dist(x, y) < 1e-2) continue;
            const AuxKernels a = aux_kernels(x, y, RieszOrder(beta));
            const double bound = c_exp * holder_u / std::pow(dist(x, y), d - 1.0);
            REQUIRE(a.g2 <= bound * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("pointwise exponential inequality constant") {
    CHECK(expineq_constant(0.0, 0.7) == 1.0);
    CHECK(expineq_constant(2.0, 0.5) == Approx(2.0 / std::exp(1.0)).epsilon(1e-14));
    // two-stage grid-search oracle
    for (double alpha : {1.0, 2.0, 3.0}) {
        for (double c : {0.25, 0.5, 1.0}) {
            auto value = [&](double x) { return std::pow(x, alpha) * std::exp(-c * x * x); };
            double best = 0.0, arg = 0.0;
            for (int i = 1; i < 20000; ++i) {
                const double x = 1e-3 * i;
                if (value(x) > best) {
                    best = value(x);
                    arg = x;
                }
            }
            for (int i = -2000; i <= 2000; ++i) best = std::max(best, value(arg + 1e-6 * i));
            REQUIRE(expineq_constant(alpha, c) == Approx(best).epsilon(1e-8));
        }
    }
}

TEST_CASE("log-integral identity") {
    CHECK(lemma_gamma(1.0) == Approx(1.0).margin(1e-12));
    CHECK(lemma_gamma(2.0) == Approx(0.5).epsilon(1e-9));
    CHECK(lemma_gamma(0.5) == Approx(std::sqrt(2.0 * kPi)).epsilon(1e-6));
    for (double alpha : {0.5, 1.0, 1.5, 2.0, 3.0})
        CHECK(lemma_gamma(alpha) ==
              Approx(std::pow(2.0, 1.0 - alpha) * std::tgamma(alpha)).epsilon(1e-8));
}

TEST_CASE("endpoint integrals") {
    SECTION("stable under refinement") {
        for (double beta : {1.0, 2.0, 4.0}) {
            const Lemma23Integrals coarse = lemma23_integrals(beta, 1e-9);
            const Lemma23Integrals fine = lemma23_integrals(beta, 1e-12);
            REQUIRE(std::abs(coarse.part_i - fine.part_i) < 1e-8);
            REQUIRE(std::abs(coarse.part_ii - fine.part_ii) < 1e-8);
            REQUIRE(std::isfinite(coarse.part_i));
            REQUIRE(std::isfinite(coarse.part_ii));
        }
    }
    SECTION("monotone in beta: part i up, part ii down") {
        // -log sqrt(1-u) <= log sqrt 2 < 1 on (0, 1/2], so part ii's
        // integrand decreases in beta; part i's log factor exceeds 1 near
        // u = 1 and wins
        double prev_i = 0.0, prev_ii = std::numeric_limits<double>::infinity();
        for (double beta : {1.0, 2.0, 3.0, 4.0}) {
            const Lemma23Integrals v = lemma23_integrals(beta);
            REQUIRE(v.part_i > prev_i);
            REQUIRE(v.part_ii < prev_ii);
            prev_i = v.part_i;
            prev_ii = v.part_ii;
        }
    }
    SECTION("beta -> 0 limit of part i is sqrt 2") {
        CHECK(lemma23_integrals(1e-7).part_i == Approx(std::sqrt(2.0)).epsilon(1e-4));
    }
}

TEST_CASE("pointwise bound at the minimizer") {
    SECTION("single pair, hand-checked t") {
        const Point x{1.0}, y{2.0};
        // t = 0.3: u(t) = 5/0.3 - sqrt(0.7)/0.3*4 - 1, lhs < rhs by direct evaluation
        const double ut = u_of_t(0.3, x, y);
        const double lhs = std::exp(-ut) / std::sqrt(0.3);
        const double rhs = 2.0 * std::exp(-3.0) / std::sqrt(0.75);
        CHECK(lhs < rhs);
        const BoundReport rep = phib0_check(x, y);
        CHECK(rep.pass);
    }
    SECTION("global-region pairs, many t samples") {
        // the bound is applied on B_h^c in the global part; near-origin
        // local pairs genuinely violate it
        std::mt19937_64 rng(606);
        GlobalSampleOptions opt;
        for (int i = 0; i < 100; ++i) {
            const GlobalRegion region =
                i % 2 == 0 ? GlobalRegion::b_pos_near : GlobalRegion::b_pos_far;
            auto [x, y] = sample_global_pair(region, 2, rng, opt);
            const BoundReport rep = phib0_check(x, y, 100);
            REQUIRE(rep.violations == 0);
        }
    }
}

TEST_CASE("global bounds have stable empirical constants") {
    for (GlobalRegion region :
         {GlobalRegion::b_nonpos, GlobalRegion::b_pos_near, GlobalRegion::b_pos_far}) {
        GlobalSampleOptions opt;
        opt.count = 200;
        const double eps = 0.5 * global_eps_max(1, 2.0);
        const BoundReport rep = global_bound_check(RieszOrder(2.0), region, eps, 1, opt);
        INFO(rep.region);
        CHECK(rep.pass);
        CHECK(std::isfinite(rep.empirical_constant));
        CHECK(rep.empirical_constant > 0.0);
    }
    SECTION("eps range is validated") {
        CHECK_THROWS_AS(
            global_bound_check(RieszOrder(2.0), GlobalRegion::b_nonpos, 2.0, 1, {}),
            std::invalid_argument);
    }
}

TEST_CASE("P/Q kernel checks") {
    SECTION("alpha_inf arithmetic") {
        // p = 2, eps = 0.1: alpha = 0.45 - |0.5 - 0.45| = 0.4
        const ExponentField p2 = constant_exponent(2.0);
        const BoundReport rep = pq_kernel_check(p2, 0.1, 10, 1);
        CHECK(rep.metrics.at("alpha_inf") == Approx(0.4).epsilon(1e-14));
        CHECK(rep.violations == 0);
    }
    SECTION("moment integral bounded and near-independent of x") {
        const ExponentField p = inverse_quadratic_exponent(2.0, 1.0);
        const BoundReport rep = pq_kernel_check(p, 0.1, 30, 1);
        CHECK(rep.pass);
        CHECK(rep.metrics.at("moment_max") <= rep.metrics.at("rhs_closed_form"));
        CHECK(rep.metrics.at("equiv_violations") == 0.0);
    }
    SECTION("eps too large is a precondition violation") {
        const ExponentField p2 = constant_exponent(2.0);
        CHECK_THROWS_AS(pq_kernel_check(p2, 0.6, 5, 1), std::invalid_argument);
    }
}

TEST_CASE("exponent comparison on sets") {
    SECTION("constant rho reduces to the trivial comparison") {
        const ExponentField rho = constant_exponent(2.0);
        const BoundReport rep = lemma326_check(rho, 3.0, 4, 4, 1);
        CHECK(rep.pass);
        // with rho = rho_inf both directions hold with C = 1
        CHECK(rep.empirical_constant <= 1.0 + 1e-9);
    }
    SECTION("log-decay rho has a stable constant") {
        const ExponentField rho = log_decay_exponent(2.0, 1.0);
        const BoundReport rep = lemma326_check(rho, 3.0, 8, 8, 1);
        CHECK(rep.pass);
        CHECK(std::isfinite(rep.empirical_constant));
    }
    SECTION("N too small rejected") {
        CHECK_THROWS_AS(lemma326_check(constant_exponent(2.0), 0.3, 2, 2, 1),
                        std::invalid_argument);
    }
}

TEST_CASE("estimate 2.13") {
    const BoundReport rep = estimate213_check(0.25, 1);
    CHECK(rep.pass);
    CHECK(rep.empirical_constant > 0.0);
    const BoundReport rep2 = estimate213_check(0.125, 2);
    CHECK(rep2.pass);
}

TEST_CASE("t0 asymptotics") {
    for (int d : {1, 2}) {
        const BoundReport rep = t0_asymptotics_check(d, 2000);
        INFO("d = " << d);
        CHECK(rep.pass);
        CHECK(rep.metrics.at("ratio_min") >= 1.0 - 1e-9);
        CHECK(rep.metrics.at("ratio_max") <= 4.0 + 1e-9);
    }
}

TEST_CASE("local region inequality 2.9") {
    for (int d : {1, 2}) {
        const BoundReport rep = local_inequality_check(d, 2000);
        CHECK(rep.violations == 0);
    }
}
