#pragma once

// Hyperbolic (admissible) balls B_h(x) of radius d*min(1, 1/|x|), a concrete
// covering family with measured overlap/dilation constants, and a discrete
// Hardy-Littlewood maximal operator on grid functions.

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "griesz/common.hpp"

namespace griesz {

/// m(x) = min(1, 1/|x|).
inline double admissibility_radius(const Point& x) {
    const double r = norm(x);
    return r <= 1.0 ? 1.0 : 1.0 / r;
}

/// True iff |x - y| < d * m(x), i.e. y lies in the hyperbolic ball at x.
inline bool in_local_region(const Point& x, const Point& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("in_local_region: dimension mismatch");
    const double d = static_cast<double>(x.size());
    return dist(x, y) < d * admissibility_radius(x);
}

struct AdmissibleBall {
    Point center;
    double radius = 0.0;

    bool contains(const Point& y, double dilation = 1.0) const {
        return dist(center, y) <= dilation * radius;
    }
};

/// The hyperbolic ball B_h(x), radius d * m(x).
inline AdmissibleBall admissible_ball(const Point& x) {
    return {x, static_cast<double>(x.size()) * admissibility_radius(x)};
}

/// Covering of the ball of radius `region_radius` by the unit ball plus
/// annulus lattices at dyadic scales: on {2^{k-1} <= |x| < 2^k} the balls
/// have radius 2^{-k-1} and centers on a lattice of the same spacing.
/// Overlap and dilation constants are measured at build time.
struct CoveringFamily {
    int dimension = 0;
    double region_radius = 0.0;
    std::vector<AdmissibleBall> balls;
    int overlap_bound = 0;           // N for property ii (construction bound)
    int overlap_seen = 0;            // largest overlap the probe lattice found
    double dilation_btilde = 2.0;    // B-tilde = 2B covers (property i)
    double dilation_bhat = 0.0;      // C_d with B_h(x) subset C_d B (property iv)
    double gauss_ratio_bound = 0.0;  // sup/inf of e^{-|.|^2} over any ball (property iii)

    // property i: the central ball plus the 2-dilated lattice balls cover
    bool covered_by_dilated(const Point& y) const {
        for (std::size_t i = 0; i < balls.size(); ++i)
            if (balls[i].contains(y, i == 0 ? 1.0 : dilation_btilde)) return true;
        return false;
    }

    int overlap_count(const Point& y, double dilation = 1.0) const {
        int c = 0;
        for (const auto& bll : balls)
            if (bll.contains(y, dilation)) ++c;
        return c;
    }
};

inline CoveringFamily build_covering(double region_radius, int d,
                                     std::size_t ball_budget = 2000000) {
    if (!(region_radius > 0.0) || d < 1)
        throw std::invalid_argument("build_covering: positive region and dimension required");
    CoveringFamily fam;
    fam.dimension = d;
    fam.region_radius = region_radius;
    fam.balls.push_back({Point(d, 0.0), 1.0});

    int levels = 0;
    while (std::ldexp(1.0, levels) < region_radius) ++levels;

    for (int k = 1; k <= levels; ++k) {
        const double inner = std::ldexp(1.0, k - 1);
        const double outer = std::ldexp(1.0, k);
        const double r = std::ldexp(1.0, -k - 1);
        const double h = r;  // lattice spacing
        const int span = static_cast<int>(std::ceil((outer + h) / h));
        std::vector<int> idx(d, -span);
        while (true) {
            Point c(d);
            for (int i = 0; i < d; ++i) c[i] = idx[i] * h;
            const double cn = norm(c);
            if (cn >= inner - h && cn <= outer + h) {
                fam.balls.push_back({c, r});
                if (fam.balls.size() > ball_budget)
                    throw std::runtime_error("build_covering: ball budget exceeded");
            }
            int axis = d - 1;
            while (axis >= 0 && ++idx[axis] > span) idx[axis--] = -span;
            if (axis < 0) break;
        }
    }

    // measure the constants the proof only asserts to exist
    double cd = 1.0 + 1e-12;
    double ratio = 1.0;
    for (const auto& bll : fam.balls) {
        const double cn = norm(bll.center);
        // extremes of |y|^2 over the ball are attained radially
        const double hi = (cn + bll.radius) * (cn + bll.radius);
        const double lo = cn > bll.radius ? (cn - bll.radius) * (cn - bll.radius) : 0.0;
        ratio = std::max(ratio, std::exp(hi - lo));
        // sup over x in B of (|x - c| + d m(x)) / r; m is largest at the
        // point of B nearest the origin
        const double min_norm = std::max(cn - bll.radius, 0.0);
        const double m_max = min_norm >= 1.0 ? 1.0 / min_norm : 1.0;
        cd = std::max(cd, (bll.radius + d * m_max) / bll.radius);
    }
    fam.gauss_ratio_bound = ratio;
    fam.dilation_bhat = cd;

    // Property ii. A point within r_k of an annulus-k center has that
    // center among the 3^d lattice cells around it (spacing = radius), and
    // the annulus norm windows let at most two consecutive k contribute, so
    // N <= 2*3^d + 1 including the central ball. The probe lattice records
    // what is actually attained.
    int pow3d = 1;
    for (int k = 0; k < d; ++k) pow3d *= 3;
    fam.overlap_bound = 2 * pow3d + 1;
    int max_overlap = 0;
    const double probe_h = 0.37;
    const int probe_span = static_cast<int>(std::ceil(region_radius / probe_h));
    std::vector<int> idx(d, -probe_span);
    while (true) {
        Point p(d);
        for (int i = 0; i < d; ++i) p[i] = idx[i] * probe_h;
        if (norm(p) <= region_radius) max_overlap = std::max(max_overlap, fam.overlap_count(p));
        int axis = d - 1;
        while (axis >= 0 && ++idx[axis] > probe_span) idx[axis--] = -probe_span;
        if (axis < 0) break;
    }
    fam.overlap_seen = max_overlap;
    return fam;
}

/// Samples of a function on a regular tensor grid over [-R, R]^d.
struct GridFunction {
    int dimension = 0;
    double box_radius = 0.0;
    int points_per_axis = 0;
    std::vector<double> values;

    template <class F>
    static GridFunction sample(F&& f, double radius, int n, int d) {
        if (n < 2 || d < 1 || radius <= 0.0)
            throw std::invalid_argument("GridFunction::sample: bad grid");
        GridFunction g;
        g.dimension = d;
        g.box_radius = radius;
        g.points_per_axis = n;
        std::size_t total = 1;
        for (int k = 0; k < d; ++k) total *= static_cast<std::size_t>(n);
        g.values.resize(total);
        for (std::size_t flat = 0; flat < total; ++flat) g.values[flat] = f(g.node(flat));
        return g;
    }

    double spacing() const { return 2.0 * box_radius / (points_per_axis - 1); }

    Point node(std::size_t flat) const {
        Point p(dimension);
        std::size_t rem = flat;
        for (int k = dimension - 1; k >= 0; --k) {
            const std::size_t i = rem % points_per_axis;
            rem /= points_per_axis;
            p[k] = -box_radius + spacing() * static_cast<double>(i);
        }
        return p;
    }
};

/// Discrete maximal function: the largest average of |f| over grid nodes in
/// B(x, r), r running over `radii`. Radii whose ball captures no node are
/// skipped; if every ball is empty, this throws.
inline double maximal_function(const GridFunction& f, const Point& x,
                               std::span<const double> radii) {
    if (static_cast<int>(x.size()) != f.dimension)
        throw std::invalid_argument("maximal_function: dimension mismatch");
    for (double v : x)
        if (std::abs(v) > f.box_radius)
            throw std::invalid_argument("maximal_function: x outside the grid box");
    double best = -1.0;
    for (double r : radii) {
        if (!(r > 0.0)) throw std::invalid_argument("maximal_function: radii must be positive");
        double sum = 0.0;
        std::size_t count = 0;
        const double r2 = r * r;
        for (std::size_t flat = 0; flat < f.values.size(); ++flat) {
            if (dist_sq(f.node(flat), x) <= r2) {
                sum += std::abs(f.values[flat]);
                ++count;
            }
        }
        if (count > 0) best = std::max(best, sum / static_cast<double>(count));
    }
    if (best < 0.0) throw std::runtime_error("maximal_function: no ball captured any node");
    return best;
}

}  // namespace griesz
