#pragma once

// The Ornstein-Uhlenbeck (Mehler) kernel and the semigroup T_t applied by
// quadrature. T_t f(x) = pi^{-d/2} integral of omega(t,x,y) f(y) dy, where
// omega concentrates at e^{-t} x with width sqrt(1 - e^{-2t}).

#include <cmath>
#include <stdexcept>

#include "griesz/common.hpp"
#include "griesz/quadrature.hpp"

namespace griesz {

/// Mehler kernel omega(t,x,y) = exp(-|y - e^{-t}x|^2/(1-e^{-2t})) / (1-e^{-2t})^{d/2}.
inline double mehler_kernel(double t, const Point& x, const Point& y) {
    if (!(t > 0.0)) throw std::invalid_argument("mehler_kernel: t > 0 required");
    if (x.size() != y.size()) throw std::invalid_argument("mehler_kernel: dimension mismatch");
    const double d = static_cast<double>(x.size());
    const double s = std::exp(-t);
    const double u = -std::expm1(-2.0 * t);  // 1 - e^{-2t}, stable for small t
    double q = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - s * x[i];
        q += r * r;
    }
    return std::exp(-q / u) / std::pow(u, 0.5 * d);
}

/// T_t f(x) by quadrature over a lebesgue-box rule. Throws if the rule's box
/// cannot hold the kernel mass to within tail_tol.
template <class F>
double apply_semigroup(F&& f, double t, const Point& x, const QuadratureRule& rule,
                       double tail_tol = 1e-12) {
    if (!(t > 0.0)) throw std::invalid_argument("apply_semigroup: t > 0 required");
    if (rule.measure != Measure::lebesgue_box)
        throw std::invalid_argument("apply_semigroup: lebesgue-box rule required");
    if (static_cast<std::size_t>(rule.dimension) != x.size())
        throw std::invalid_argument("apply_semigroup: dimension mismatch");

    const double s = std::exp(-t);
    const double u = -std::expm1(-2.0 * t);
    // per-axis tail: erfc(delta/sqrt(u)) < tail_tol needs delta >= sqrt(u log(1/tail_tol)) + pad
    const double delta = std::sqrt(u * std::log(1.0 / tail_tol)) + std::sqrt(u);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::abs(s * x[i]) + delta > rule.box_radius)
            throw std::runtime_error("apply_semigroup: box too small for kernel tail");
    }

    const double d = static_cast<double>(x.size());
    const double pref = std::pow(kPi, -0.5 * d);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * mehler_kernel(t, x, rule.nodes[i]) * f(rule.nodes[i]);
    return pref * acc;
}

}  // namespace griesz
