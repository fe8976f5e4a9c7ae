#pragma once

// Multi-index Hermite polynomials (physicists' convention, weight e^{-x^2})
// and finite Hermite expansions with projection against gamma_d.

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "griesz/common.hpp"
#include "griesz/quadrature.hpp"

namespace griesz {

struct MultiIndex {
    std::vector<unsigned> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> e) : entries(std::move(e)) {}
    MultiIndex(std::initializer_list<unsigned> e) : entries(e) {}

    std::size_t size() const { return entries.size(); }

    unsigned order() const {
        unsigned s = 0;
        for (unsigned v : entries) s += v;
        return s;
    }

    static MultiIndex zeros(std::size_t d) { return MultiIndex(std::vector<unsigned>(d, 0u)); }

    bool operator==(const MultiIndex& o) const { return entries == o.entries; }
    bool operator<(const MultiIndex& o) const { return entries < o.entries; }
};

/// H_n(x) by the three-term recurrence H_{n+1} = 2x H_n - 2n H_{n-1}.
inline double hermite_value(unsigned n, double x) {
    double h0 = 1.0;
    if (n == 0) return h0;
    double h1 = 2.0 * x;
    for (unsigned k = 1; k < n; ++k) {
        const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

/// Product H_nu(x) = prod_i H_{nu_i}(x_i).
inline double hermite_eval(const MultiIndex& nu, const Point& x) {
    if (nu.size() != x.size())
        throw std::invalid_argument("hermite_eval: dimension mismatch");
    double p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) p *= hermite_value(nu.entries[i], x[i]);
    return p;
}

/// Squared L^2(gamma_d) norm: prod_i 2^{nu_i} nu_i!.
inline double hermite_norm_sq(const MultiIndex& nu) {
    double p = 1.0;
    for (unsigned n : nu.entries)
        for (unsigned k = 1; k <= n; ++k) p *= 2.0 * k;
    return p;
}

/// Finite table of Hermite coefficients; zero coefficients are not stored.
struct HermiteExpansion {
    int dimension = 0;
    std::map<MultiIndex, double> coefficients;

    explicit HermiteExpansion(int d = 0) : dimension(d) {}

    void set(const MultiIndex& nu, double c) {
        if (static_cast<int>(nu.size()) != dimension)
            throw std::invalid_argument("HermiteExpansion::set: dimension mismatch");
        if (c == 0.0)
            coefficients.erase(nu);
        else
            coefficients[nu] = c;
    }

    double coefficient(const MultiIndex& nu) const {
        auto it = coefficients.find(nu);
        return it == coefficients.end() ? 0.0 : it->second;
    }

    unsigned degree() const {
        unsigned deg = 0;
        for (const auto& [nu, c] : coefficients) deg = std::max(deg, nu.order());
        return deg;
    }
};

inline double expansion_eval(const HermiteExpansion& e, const Point& x) {
    if (static_cast<int>(x.size()) != e.dimension)
        throw std::invalid_argument("expansion_eval: dimension mismatch");
    double s = 0.0;
    for (const auto& [nu, c] : e.coefficients) s += c * hermite_eval(nu, x);
    return s;
}

/// Hermite coefficient <f, H_nu>_gamma / ||H_nu||^2_gamma by quadrature.
/// The rule must be gaussian-tagged and exact to degree deg(f) + |nu| for
/// polynomial f, so that expanding and re-evaluating reproduces f.
template <class F>
double project(F&& f, const MultiIndex& nu, const QuadratureRule& rule) {
    if (rule.measure != Measure::gaussian)
        throw std::invalid_argument("project: gaussian-tagged rule required");
    if (static_cast<std::size_t>(rule.dimension) != nu.size())
        throw std::invalid_argument("project: dimension mismatch");
    double inner = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        inner += rule.weights[i] * f(rule.nodes[i]) * hermite_eval(nu, rule.nodes[i]);
    return inner / hermite_norm_sq(nu);
}

/// All multi-indices in d variables with order <= max_degree.
inline std::vector<MultiIndex> multi_indices_up_to(int d, unsigned max_degree) {
    std::vector<MultiIndex> all;
    MultiIndex cur = MultiIndex::zeros(d);
    std::function<void(int, unsigned)> rec = [&](int axis, unsigned left) {
        if (axis == d) {
            all.push_back(cur);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            cur.entries[axis] = v;
            rec(axis + 1, left - v);
        }
    };
    rec(0, max_degree);
    return all;
}

/// Expand f on all multi-indices of order <= max_degree.
template <class F>
HermiteExpansion expand(F&& f, int d, unsigned max_degree, const QuadratureRule& rule) {
    HermiteExpansion e(d);
    for (const auto& nu : multi_indices_up_to(d, max_degree)) {
        const double c = project(f, nu, rule);
        if (std::abs(c) > 0.0) e.set(nu, c);
    }
    return e;
}

}  // namespace griesz
