#pragma once

// Quadrature rules: tensor Gauss-Hermite against the Gaussian probability
// measure, tensor Gauss-Legendre on boxes, and box rules graded toward a
// marked point (for outer integration of kernels with a diagonal
// singularity; the marked point itself is a panel edge and never a node).

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "griesz/common.hpp"

namespace griesz {

enum class Measure { gaussian, lebesgue_box };

struct QuadratureRule {
    int dimension = 0;
    Measure measure = Measure::gaussian;
    double box_radius = 0.0;  // lebesgue_box only
    std::vector<Point> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

namespace detail {

// Nodes/weights for weight e^{-x^2} via Newton iteration on the orthonormal
// recurrence (Numerical Recipes initial guesses). Weights sum to sqrt(pi).
inline std::pair<std::vector<double>, std::vector<double>> hermite_nodes_physicist(int n) {
    if (n < 1) throw std::invalid_argument("hermite nodes: n >= 1 required");
    std::vector<double> x(n), w(n);
    const int half = (n + 1) / 2;
    const double pim4 = 0.7511255444649425;  // pi^{-1/4}
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(n, 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * x[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * x[1];
        } else {
            z = 2.0 * z - x[i - 2];
        }
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = pim4, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 -
                     std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = z;
        w[i] = 2.0 / (pp * pp);
    }
    // mirror to the negative half, descending -> ascending order
    std::vector<double> xs(n), ws(n);
    for (int i = 0; i < half; ++i) {
        xs[n - 1 - i] = x[i];
        xs[i] = -x[i];
        ws[n - 1 - i] = w[i];
        ws[i] = w[i];
    }
    if (n % 2 == 1) xs[n / 2] = 0.0;
    return {xs, ws};
}

// Gauss-Legendre on [-1, 1].
inline std::pair<std::vector<double>, std::vector<double>> legendre_nodes(int n) {
    if (n < 1) throw std::invalid_argument("legendre nodes: n >= 1 required");
    std::vector<double> x(n), w(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    if (n % 2 == 1) x[n / 2] = 0.0;
    return {x, w};
}

inline void check_node_budget(std::size_t per_axis, int d, std::size_t budget) {
    double total = 1.0;
    for (int k = 0; k < d; ++k) total *= static_cast<double>(per_axis);
    if (total > static_cast<double>(budget))
        throw std::runtime_error("quadrature: node budget exceeded");
}

// Tensor product of per-axis (node, weight) lists.
inline void tensorize(QuadratureRule& rule, const std::vector<std::vector<double>>& xs,
                      const std::vector<std::vector<double>>& ws) {
    const int d = rule.dimension;
    std::vector<std::size_t> idx(d, 0);
    const std::size_t count = [&] {
        std::size_t c = 1;
        for (int k = 0; k < d; ++k) c *= xs[k].size();
        return c;
    }();
    rule.nodes.reserve(count);
    rule.weights.reserve(count);
    for (std::size_t flat = 0; flat < count; ++flat) {
        Point p(d);
        double w = 1.0;
        for (int k = 0; k < d; ++k) {
            p[k] = xs[k][idx[k]];
            w *= ws[k][idx[k]];
        }
        rule.nodes.push_back(std::move(p));
        rule.weights.push_back(w);
        for (int k = d - 1; k >= 0; --k) {
            if (++idx[k] < xs[k].size()) break;
            idx[k] = 0;
        }
    }
}

}  // namespace detail

/// Tensor Gauss-Hermite rule for the Gaussian probability measure gamma_d.
/// Exact for per-axis polynomial degree <= 2*points_per_axis - 1; weights
/// are rescaled so they sum to one.
inline QuadratureRule gaussian_rule(int points_per_axis, int d,
                                    std::size_t node_budget = 1000000) {
    if (points_per_axis < 1 || d < 1)
        throw std::invalid_argument("gaussian_rule: positive sizes required");
    detail::check_node_budget(points_per_axis, d, node_budget);
    auto [x1, w1] = detail::hermite_nodes_physicist(points_per_axis);
    double sum = 0.0;
    for (double w : w1) sum += w;
    for (double& w : w1) w /= sum;  // per-axis probability weights
    QuadratureRule rule;
    rule.dimension = d;
    rule.measure = Measure::gaussian;
    detail::tensorize(rule, std::vector(d, x1), std::vector(d, w1));
    return rule;
}

/// Tensor Gauss-Legendre rule on the box [-R, R]^d (plain Lebesgue weights).
inline QuadratureRule box_rule(int points_per_axis, int d, double radius,
                               std::size_t node_budget = 1000000) {
    if (points_per_axis < 1 || d < 1 || radius <= 0.0)
        throw std::invalid_argument("box_rule: positive sizes required");
    detail::check_node_budget(points_per_axis, d, node_budget);
    auto [x1, w1] = detail::legendre_nodes(points_per_axis);
    for (int i = 0; i < points_per_axis; ++i) {
        x1[i] *= radius;
        w1[i] *= radius;
    }
    QuadratureRule rule;
    rule.dimension = d;
    rule.measure = Measure::lebesgue_box;
    rule.box_radius = radius;
    detail::tensorize(rule, std::vector(d, x1), std::vector(d, w1));
    return rule;
}

/// Composite Gauss-Legendre box rule on [center-R, center+R]^d whose panels
/// shrink geometrically toward the marked point: per axis, `levels` panels
/// on each side with widths halving toward the mark. The mark's coordinates
/// are panel edges, so no node coincides with it in any axis.
inline QuadratureRule singular_box_rule(const Point& mark, double radius, int levels,
                                        int points_per_panel,
                                        std::size_t node_budget = 4000000) {
    const int d = static_cast<int>(mark.size());
    if (d < 1 || radius <= 0.0 || levels < 2 || points_per_panel < 2)
        throw std::invalid_argument("singular_box_rule: bad parameters");
    auto [gx, gw] = detail::legendre_nodes(points_per_panel);

    std::vector<std::vector<double>> xs(d), ws(d);
    for (int k = 0; k < d; ++k) {
        const double c = mark[k];
        auto add_panel = [&](double a, double b) {
            const double h = 0.5 * (b - a);
            const double m = 0.5 * (a + b);
            for (int i = 0; i < points_per_panel; ++i) {
                xs[k].push_back(m + h * gx[i]);
                ws[k].push_back(h * gw[i]);
            }
        };
        // edges at c +- radius*2^{-j}, j = levels..0, on both sides
        double prev = c;
        for (int j = levels; j >= 1; --j) {
            const double next = c + radius * std::ldexp(1.0, -j + 1) * 0.5;
            add_panel(prev, next);
            prev = next;
        }
        add_panel(prev, c + radius);
        prev = c;
        for (int j = levels; j >= 1; --j) {
            const double next = c - radius * std::ldexp(1.0, -j + 1) * 0.5;
            add_panel(next, prev);
            prev = next;
        }
        add_panel(c - radius, prev);
    }
    detail::check_node_budget(xs[0].size(), d, node_budget);

    QuadratureRule rule;
    rule.dimension = d;
    rule.measure = Measure::lebesgue_box;
    rule.box_radius = radius;
    detail::tensorize(rule, xs, ws);
    return rule;
}

template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(rule.nodes[i]);
    return s;
}

}  // namespace griesz
