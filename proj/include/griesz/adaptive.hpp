#pragma once

// Adaptive 1-D quadrature on finite intervals with an embedded
// Gauss(7)/Kronrod(15) pair, plus a nested driver for boxes in R^d.
//
// Panels are kept in a max-heap keyed by error estimate; the worst panel is
// bisected until the summed estimate meets the absolute tolerance or the
// panel budget runs out. Ties break on creation order, so results are
// deterministic. Endpoints are never evaluated (all Kronrod nodes are
// interior), which lets integrable endpoint singularities converge under
// the dyadic refinement without special casing.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

#include "griesz/common.hpp"

namespace griesz {

namespace detail {

// Gauss-Kronrod 7-15 abscissae/weights on [-1, 1] (positive half).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kK15Weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// Gauss-7 weights for nodes 1, 3, 5, 7 of the Kronrod set.
inline constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
inline void gk15_panel(F&& f, double a, double b, double& value, double& error) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double k15 = kK15Weights[7] * fc;
    double g7 = kG7Weights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kGK15Nodes[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        k15 += kK15Weights[i] * fsum;
        if (i % 2 == 1) g7 += kG7Weights[i / 2] * fsum;
    }
    value = k15 * half;
    // raw |K-G|; deliberately conservative so singular panels keep refining
    error = std::abs(k15 - g7) * half;
}

}  // namespace detail

struct AdaptiveOptions {
    double abs_tol = 1e-10;
    int max_panels = 2000;
    double rel_floor = 1e-14;  // stop once below abs_tol + rel_floor*|value|
};

struct AdaptiveOutcome {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
    bool converged = false;
};

template <class F>
AdaptiveOutcome integrate_adaptive(F&& f, double a, double b, AdaptiveOptions opt = {},
                                   std::span<const double> forced_splits = {}) {
    if (!(b > a)) {
        if (b == a) return {0.0, 0.0, 0, true};
        throw std::invalid_argument("integrate_adaptive: reversed interval");
    }

    struct Panel {
        double value, error, a, b;
        std::uint64_t seq;
        bool operator<(const Panel& o) const {
            if (error != o.error) return error < o.error;
            return seq > o.seq;  // older panel wins ties
        }
    };

    std::vector<double> edges{a};
    for (double s : forced_splits)
        if (s > a && s < b) edges.push_back(s);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Panel> queue;
    std::uint64_t seq = 0;
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p{0, 0, edges[i], edges[i + 1], seq++};
        detail::gk15_panel(f, p.a, p.b, p.value, p.error);
        total += p.value;
        total_err += p.error;
        queue.push(p);
    }

    int panels = static_cast<int>(queue.size());
    auto good_enough = [&] {
        return total_err <= opt.abs_tol + opt.rel_floor * std::abs(total);
    };
    while (!good_enough() && panels < opt.max_panels) {
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // interval at floating-point resolution; keep its estimate
            total_err -= worst.error;
            continue;
        }
        total -= worst.value;
        total_err -= worst.error;
        Panel left{0, 0, worst.a, mid, seq++};
        Panel right{0, 0, mid, worst.b, seq++};
        detail::gk15_panel(f, left.a, left.b, left.value, left.error);
        detail::gk15_panel(f, right.a, right.b, right.value, right.error);
        total += left.value + right.value;
        total_err += left.error + right.error;
        queue.push(left);
        queue.push(right);
        ++panels;
    }

    return {total, total_err, panels, good_enough()};
}

template <class F>
double integrate_or_throw(F&& f, double a, double b, AdaptiveOptions opt = {},
                          std::span<const double> forced_splits = {}) {
    const AdaptiveOutcome r = integrate_adaptive(f, a, b, opt, forced_splits);
    if (!r.converged)
        throw std::runtime_error("integrate_adaptive: panel budget exhausted");
    return r.value;
}

/// Nested adaptive integration over the box [lo, hi] in R^d.
/// `axis_splits` (optional) forces per-axis breakpoints, e.g. at kinks.
template <class F>
AdaptiveOutcome integrate_box_adaptive(F&& f, const Point& lo, const Point& hi, double abs_tol,
                                       int max_panels_per_axis = 600,
                                       const std::vector<std::vector<double>>& axis_splits = {}) {
    const std::size_t d = lo.size();
    if (hi.size() != d || d == 0)
        throw std::invalid_argument("integrate_box_adaptive: bad box");

    Point point(d, 0.0);
    bool ok = true;
    double err_acc = 0.0;

    // Evaluation error of inner integrals is folded into the per-axis budget
    // by halving the tolerance at each nesting level.
    std::function<double(std::size_t, double)> level = [&](std::size_t axis,
                                                           double tol) -> double {
        if (axis == d) return f(point);
        const double width = hi[axis] - lo[axis];
        const double tol_quad = 0.5 * tol;
        const double tol_eval = 0.5 * tol / std::max(width, 1e-12);
        auto g = [&](double t) {
            point[axis] = t;
            return level(axis + 1, tol_eval);
        };
        std::span<const double> splits;
        if (axis < axis_splits.size()) splits = axis_splits[axis];
        AdaptiveOutcome r = integrate_adaptive(g, lo[axis], hi[axis],
                                               {tol_quad, max_panels_per_axis}, splits);
        if (!r.converged) ok = false;
        if (axis == 0) err_acc = r.error_estimate;
        return r.value;
    };

    AdaptiveOutcome out;
    out.value = level(0, abs_tol);
    out.error_estimate = err_acc;
    out.converged = ok;
    return out;
}

}  // namespace griesz
