#pragma once

// The Gaussian Riesz potential of order beta, three ways:
//
//  * spectrally, as the multiplier |nu|^{-beta/2} on Hermite coefficients
//    with the mean projected out;
//  * through the kernel N_{beta/2}(x,y), evaluated as a 1-D integral and
//    applied by outer spatial quadrature;
//  * through the semigroup representation, for callers that can supply
//    T_t f(x) in closed form.
//
// Kernel evaluation. Writing u = 1 - e^{-2t} turns the defining t-integral
// into an integral over (0,1) whose bracket is e^{-|y|^2} expm1(g) with
//
//   g = |y|^2 - |y - sqrt(1-u) x|^2/u - (d/2) log u
//     = s(b - s a)/(1-s^2) - (d/2) log(1-s^2),   s = sqrt(1-u) = e^{-t},
//
// a = |x|^2+|y|^2, b = 2<x,y>. The expm1 form keeps the cancellation
// between the Mehler term and its t -> infinity limit exact. The two
// endpoints need different parameterizations: on u <= 1/2 we integrate in
// u itself (representable down to the Mehler transition at u ~ |x-y|^2,
// with expm1 snapping to -1 once the Mehler term underflows), while on
// u >= 1/2 the substitution s = sqrt(1-u) absorbs the du/(2(1-u)) factor
// exactly and the closed form of g above stays accurate as s -> 0. Both
// endpoint singularities are integrable, so the dyadic refinement of the
// adaptive driver converges. x = y makes the u -> 0 end non-integrable in
// dimension >= 2 and is excluded by callers; the panel budget is the
// failure signal.

#include <cmath>
#include <stdexcept>
#include <utility>

#include "griesz/adaptive.hpp"
#include "griesz/common.hpp"
#include "griesz/geometry.hpp"
#include "griesz/hermite.hpp"
#include "griesz/quadrature.hpp"

namespace griesz {

struct RieszOrder {
    double beta;
    explicit RieszOrder(double b) : beta(b) {
        if (!(b > 0.0)) throw std::invalid_argument("RieszOrder: beta > 0 required");
    }
};

/// Spectral action: coefficient at nu multiplied by |nu|^{-beta/2}; the
/// nu = 0 coefficient is annihilated.
inline HermiteExpansion riesz_spectral(const HermiteExpansion& e, RieszOrder order) {
    HermiteExpansion out(e.dimension);
    for (const auto& [nu, c] : e.coefficients) {
        const unsigned k = nu.order();
        if (k == 0) continue;
        out.set(nu, c * std::pow(static_cast<double>(k), -0.5 * order.beta));
    }
    return out;
}

struct KernelEvalOptions {
    double abs_tol = 1e-8;
    int max_panels = 4000;
};

/// N_{beta/2}(x, y) to absolute accuracy abs_tol.
inline double riesz_kernel_eval(RieszOrder order, const Point& x, const Point& y,
                                KernelEvalOptions opt = {}) {
    if (x.size() != y.size())
        throw std::invalid_argument("riesz_kernel_eval: dimension mismatch");
    if (!(opt.abs_tol > 0.0))
        throw std::invalid_argument("riesz_kernel_eval: tol > 0 required");
    const double d = static_cast<double>(x.size());
    const double a = norm_sq(x) + norm_sq(y);
    const double b = 2.0 * dot(x, y);
    const double y2 = norm_sq(y);
    const double expo = 0.5 * order.beta - 1.0;

    const double pref = std::pow(kPi, -0.5 * d) / std::tgamma(0.5 * order.beta);
    const double scale = pref * std::exp(-y2);
    const double internal_tol = 0.5 * opt.abs_tol / std::max(scale, 1e-300);

    // u in (0, 1/2]: componentwise |y - s x|^2 keeps q accurate near the
    // Mehler transition; the branch is exact once e^g underflows.
    auto low_u = [&](double u) {
        const double s = std::sqrt(1.0 - u);
        double r2 = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double t = y[i] - s * x[i];
            r2 += t * t;
        }
        const double g = y2 - r2 / u - 0.5 * d * std::log(u);
        const double bracket = g < -745.0 ? -1.0 : std::expm1(g);
        return std::pow(-0.5 * std::log1p(-u), expo) * bracket / (2.0 * (1.0 - u));
    };
    // s in (0, 1/sqrt 2]: the closed form of g stays accurate as s -> 0,
    // where the bracket vanishes linearly.
    auto high_u = [&](double s) {
        const double u = (1.0 - s) * (1.0 + s);
        const double g = s * (b - s * a) / u - 0.5 * d * std::log(u);
        return std::pow(-std::log(s), expo) * std::expm1(g) / s;
    };

    const AdaptiveOutcome lo =
        integrate_adaptive(low_u, 0.0, 0.5, {internal_tol, opt.max_panels});
    const AdaptiveOutcome hi = integrate_adaptive(high_u, 0.0, 1.0 / std::sqrt(2.0),
                                                  {internal_tol, opt.max_panels});
    if (!lo.converged || !hi.converged)
        throw std::runtime_error(
            "riesz_kernel_eval: subdivision budget exhausted (x too close to y for tol)");
    return scale * (lo.value + hi.value);
}

/// I_beta f(x) = int N_{beta/2}(x,y) f(y) dy over the rule's box. Nodes where
/// f vanishes are skipped; the kernel is evaluated with a per-node tolerance
/// scaled so the summed quadrature error stays below tol.
template <class F>
double riesz_apply_kernel(F&& f, RieszOrder order, const Point& x, const QuadratureRule& rule,
                          double tol = 1e-6, int kernel_panels = 4000) {
    if (rule.measure != Measure::lebesgue_box)
        throw std::invalid_argument("riesz_apply_kernel: lebesgue-box rule required");
    if (static_cast<std::size_t>(rule.dimension) != x.size())
        throw std::invalid_argument("riesz_apply_kernel: dimension mismatch");

    std::vector<double> fv(rule.size());
    double l1 = 0.0;
    std::size_t live = 0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        fv[i] = f(rule.nodes[i]);
        if (fv[i] != 0.0) ++live;
        l1 += std::abs(rule.weights[i] * fv[i]);
    }
    // half the error budget spread in proportion to |w f|, half equally, so
    // near-diagonal nodes with tiny weights get an attainable tolerance
    const double base = 0.5 * tol / std::max(l1, 1e-30);
    const double eta = 0.5 * tol / std::max<double>(live, 1);

    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        if (fv[i] == 0.0) continue;
        const KernelEvalOptions ko{base + eta / std::abs(rule.weights[i] * fv[i]),
                                   kernel_panels};
        acc += rule.weights[i] * fv[i] * riesz_kernel_eval(order, x, rule.nodes[i], ko);
    }
    return acc;
}

/// Local/global split at the admissible ball B_h(x): returns
/// (I_beta(f·chi_{B_h(x)})(x), I_beta(f·chi_{B_h(x)^c})(x)). The two parts
/// partition the rule's nodes, so they sum to riesz_apply_kernel exactly.
template <class F>
std::pair<double, double> riesz_split_apply(F&& f, RieszOrder order, const Point& x,
                                            const QuadratureRule& rule, double tol = 1e-6,
                                            int kernel_panels = 4000) {
    if (rule.measure != Measure::lebesgue_box)
        throw std::invalid_argument("riesz_split_apply: lebesgue-box rule required");
    std::vector<double> fv(rule.size());
    double l1 = 0.0;
    std::size_t live = 0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        fv[i] = f(rule.nodes[i]);
        if (fv[i] != 0.0) ++live;
        l1 += std::abs(rule.weights[i] * fv[i]);
    }
    const double base = 0.5 * tol / std::max(l1, 1e-30);
    const double eta = 0.5 * tol / std::max<double>(live, 1);

    double local = 0.0, global = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        if (fv[i] == 0.0) continue;
        const KernelEvalOptions ko{base + eta / std::abs(rule.weights[i] * fv[i]),
                                   kernel_panels};
        const double term =
            rule.weights[i] * fv[i] * riesz_kernel_eval(order, x, rule.nodes[i], ko);
        (in_local_region(x, rule.nodes[i]) ? local : global) += term;
    }
    return {local, global};
}

/// I_beta f(x) through the semigroup: Gamma(beta/2)^{-1} times the integral
/// of t^{beta/2-1} (T_t f(x) - mean f) dt. `value_at_s(s, x)` must return
/// T_{-log s} f(x). Small t is integrated in the t variable (the power
/// singularity at t = 0 needs t representable far below 1e-16), the rest
/// in s = e^{-t}.
template <class Tt>
double riesz_apply_semigroup(Tt&& value_at_s, double mean, RieszOrder order, const Point& x,
                             double abs_tol = 1e-8, int max_panels = 4000) {
    const double expo = 0.5 * order.beta - 1.0;
    const double gamma = std::tgamma(0.5 * order.beta);
    const double t_mid = std::log(2.0);

    auto small_t = [&](double t) {
        return std::pow(t, expo) * (value_at_s(std::exp(-t), x) - mean);
    };
    auto large_t = [&](double s) {
        return std::pow(-std::log(s), expo) * (value_at_s(s, x) - mean) / s;
    };
    const AdaptiveOutcome lo =
        integrate_adaptive(small_t, 0.0, t_mid, {0.5 * abs_tol * gamma, max_panels});
    const AdaptiveOutcome hi =
        integrate_adaptive(large_t, 0.0, 0.5, {0.5 * abs_tol * gamma, max_panels});
    if (!lo.converged || !hi.converged)
        throw std::runtime_error("riesz_apply_semigroup: subdivision budget exhausted");
    return (lo.value + hi.value) / gamma;
}

}  // namespace griesz
