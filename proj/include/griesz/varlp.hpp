#pragma once

// Variable-exponent Lebesgue machinery over the Gaussian measure: exponent
// fields with class metadata, the modular, the Luxemburg norm by bisection,
// conjugates, Holder checks, and the sampling diagnostics for the
// log-Holder and Gaussian-decay exponent classes.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "griesz/common.hpp"
#include "griesz/quadrature.hpp"

namespace griesz {

struct ExponentField {
    std::string id;
    std::function<double(const Point&)> eval;
    double p_minus = 1.0;
    double p_plus = 1.0;
    std::optional<double> p_infty;
    bool tag_lh0 = false;
    bool tag_lhinf = false;
    bool tag_pinfty_gamma = false;
    std::optional<double> c_gamma;  // declared decay constant, when known

    double operator()(const Point& x) const { return eval(x); }
};

inline ExponentField constant_exponent(double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("constant_exponent: q >= 1 required");
    ExponentField p;
    p.id = "constant";
    p.eval = [q](const Point&) { return q; };
    p.p_minus = p.p_plus = q;
    p.p_infty = q;
    p.tag_lh0 = p.tag_lhinf = p.tag_pinfty_gamma = true;
    p.c_gamma = 0.0;
    return p;
}

/// p(x) = p_inf + c/(1+|x|^2); in P^inf_gamma and LH_0 by construction.
inline ExponentField inverse_quadratic_exponent(double p_inf, double c) {
    if (!(p_inf >= 1.0) || !(c > 0.0))
        throw std::invalid_argument("inverse_quadratic_exponent: p_inf >= 1, c > 0 required");
    ExponentField p;
    p.id = "inverse_quadratic";
    p.eval = [p_inf, c](const Point& x) { return p_inf + c / (1.0 + norm_sq(x)); };
    p.p_minus = p_inf;
    p.p_plus = p_inf + c;
    p.p_infty = p_inf;
    p.tag_lh0 = p.tag_lhinf = p.tag_pinfty_gamma = true;
    p.c_gamma = c;
    return p;
}

/// Compactly supported smooth perturbation: p_inf + c cos^2(pi|x|/(2 rho))
/// for |x| <= rho. Tagged LH_0 only; class membership is measured, not
/// assumed from the tag.
inline ExponentField sin_bump_exponent(double p_inf, double c, double rho) {
    if (!(p_inf >= 1.0) || !(c > 0.0) || !(rho > 0.0))
        throw std::invalid_argument("sin_bump_exponent: bad parameters");
    ExponentField p;
    p.id = "sin_bump";
    p.eval = [p_inf, c, rho](const Point& x) {
        const double r = norm(x);
        if (r >= rho) return p_inf;
        const double cs = std::cos(0.5 * kPi * r / rho);
        return p_inf + c * cs * cs;
    };
    p.p_minus = p_inf;
    p.p_plus = p_inf + c;
    p.p_infty = p_inf;
    p.tag_lh0 = true;
    p.tag_lhinf = true;
    return p;
}

/// p(x) = p_inf + c/log(e+|x|): log-Holder at infinity but decays too
/// slowly for P^inf_gamma. Useful as the negative control.
inline ExponentField log_decay_exponent(double p_inf, double c) {
    if (!(p_inf >= 1.0) || !(c > 0.0))
        throw std::invalid_argument("log_decay_exponent: bad parameters");
    ExponentField p;
    p.id = "log_decay";
    p.eval = [p_inf, c](const Point& x) { return p_inf + c / std::log(std::exp(1.0) + norm(x)); };
    p.p_minus = p_inf;
    p.p_plus = p_inf + c;
    p.p_infty = p_inf;
    p.tag_lh0 = true;
    p.tag_lhinf = true;
    return p;
}

/// Resolve a preset by string id. params are positional:
///   constant: q | inverse_quadratic: p_inf, c | sin_bump: p_inf, c, rho |
///   log_decay: p_inf, c
inline ExponentField make_exponent_preset(const std::string& id,
                                          const std::vector<double>& params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw std::invalid_argument("exponent preset '" + id + "': wrong parameter count");
    };
    if (id == "constant") {
        need(1);
        return constant_exponent(params[0]);
    }
    if (id == "inverse_quadratic") {
        need(2);
        return inverse_quadratic_exponent(params[0], params[1]);
    }
    if (id == "sin_bump") {
        need(3);
        return sin_bump_exponent(params[0], params[1], params[2]);
    }
    if (id == "log_decay") {
        need(2);
        return log_decay_exponent(params[0], params[1]);
    }
    throw std::invalid_argument("unknown exponent preset '" + id + "'");
}

/// |f|, p and effective gamma_d weights sampled on a rule's nodes; the
/// modular at any lambda is then a cheap weighted power sum. Box rules get
/// the explicit Gaussian density folded into the weights.
struct SampledModular {
    std::vector<double> abs_values;
    std::vector<double> exponents;
    std::vector<double> weights;

    double value(double lambda) const {
        double s = 0.0;
        for (std::size_t i = 0; i < abs_values.size(); ++i) {
            if (abs_values[i] == 0.0) continue;
            s += weights[i] * std::pow(abs_values[i] / lambda, exponents[i]);
        }
        return s;
    }

    bool zero() const {
        for (double v : abs_values)
            if (v != 0.0) return false;
        return true;
    }
};

template <class F>
SampledModular sample_modular(F&& f, const ExponentField& p, const QuadratureRule& rule) {
    SampledModular s;
    const std::size_t n = rule.size();
    s.abs_values.resize(n);
    s.exponents.resize(n);
    s.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.abs_values[i] = std::abs(f(rule.nodes[i]));
        s.exponents[i] = p(rule.nodes[i]);
        s.weights[i] = rule.measure == Measure::gaussian
                           ? rule.weights[i]
                           : rule.weights[i] * gaussian_density(rule.nodes[i]);
    }
    return s;
}

/// Modular rho_{p,gamma}(f) = int |f|^{p(x)} gamma_d(dx) by quadrature.
template <class F>
double modular(F&& f, const ExponentField& p, const QuadratureRule& rule) {
    return sample_modular(f, p, rule).value(1.0);
}

/// Luxemburg norm from pre-sampled data: inf{lambda : modular(f/lambda) <= 1}
/// by geometric bracketing plus bisection on the non-increasing map
/// lambda -> modular(f/lambda).
inline double luxemburg_norm_sampled(const SampledModular& s, double p_minus,
                                     double rel_tol = 1e-9) {
    if (s.zero()) return 0.0;
    const double m0 = s.value(1.0);
    double hi = std::pow(std::max(1.0, m0), 1.0 / p_minus);
    int guard = 0;
    while (s.value(hi) > 1.0) {
        hi *= 4.0;
        if (++guard > 600 || !(hi < 1e300))
            throw std::runtime_error("luxemburg_norm: modular divergent at all brackets");
    }
    double lo = hi;
    guard = 0;
    while (s.value(lo) <= 1.0) {
        lo *= 0.25;
        if (++guard > 600 || lo < 1e-300) {
            // modular stays <= 1 for arbitrarily small lambda: norm is 0
            return 0.0;
        }
    }
    while (hi - lo > rel_tol * hi) {
        const double mid = 0.5 * (lo + hi);
        (s.value(mid) <= 1.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

template <class F>
double luxemburg_norm(F&& f, const ExponentField& p, const QuadratureRule& rule,
                      double rel_tol = 1e-9) {
    return luxemburg_norm_sampled(sample_modular(f, p, rule), p.p_minus, rel_tol);
}

/// Pointwise conjugate exponent p'(x) = p(x)/(p(x)-1).
inline ExponentField conjugate(const ExponentField& p) {
    if (!(p.p_minus > 1.0))
        throw std::invalid_argument("conjugate: p_minus > 1 required");
    ExponentField q;
    q.id = p.id + "_conjugate";
    auto inner = p.eval;
    q.eval = [inner](const Point& x) {
        const double v = inner(x);
        return v / (v - 1.0);
    };
    q.p_minus = p.p_plus / (p.p_plus - 1.0);
    q.p_plus = p.p_minus / (p.p_minus - 1.0);
    if (p.p_infty) q.p_infty = *p.p_infty / (*p.p_infty - 1.0);
    q.tag_lh0 = p.tag_lh0;
    q.tag_lhinf = p.tag_lhinf;
    q.tag_pinfty_gamma = p.tag_pinfty_gamma;
    return q;
}

/// lhs = int |f g| d(gamma_d), rhs = 2 ||f||_p ||g||_{p'}; the variable
/// exponent Holder inequality asserts lhs <= rhs.
template <class F, class G>
std::pair<double, double> holder_check(F&& f, G&& g, const ExponentField& p,
                                       const QuadratureRule& rule) {
    double lhs = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double w = rule.measure == Measure::gaussian
                             ? rule.weights[i]
                             : rule.weights[i] * gaussian_density(rule.nodes[i]);
        lhs += w * std::abs(f(rule.nodes[i]) * g(rule.nodes[i]));
    }
    const double rhs = 2.0 * luxemburg_norm(f, p, rule) * luxemburg_norm(g, conjugate(p), rule);
    return {lhs, rhs};
}

/// Empirical local log-Holder constant of 1/p: sup over sampled pairs with
/// |x-y| <= 1/2 of |1/p(x)-1/p(y)| log(e + 1/|x-y|). The smallest sampled
/// separation shrinks like 1/sample_count, so fields with jumps blow up as
/// the sampling refines.
inline double lh0_constant(const ExponentField& p, int d, int sample_count,
                           std::uint64_t seed = 0x10c4) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ubox(-3.0, 3.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double r_min = std::max(1e-12, 1.0 / static_cast<double>(sample_count));
    const double log_rmin = std::log(r_min), log_rmax = std::log(0.5);
    double sup = 0.0;
    for (int i = 0; i < sample_count; ++i) {
        Point x(d), y(d), dir(d);
        for (int k = 0; k < d; ++k) x[k] = ubox(rng);
        double dn = 0.0;
        for (int k = 0; k < d; ++k) {
            dir[k] = gauss(rng);
            dn += dir[k] * dir[k];
        }
        dn = std::sqrt(dn);
        if (dn == 0.0) continue;
        const double r = std::exp(log_rmin + (log_rmax - log_rmin) * u01(rng));
        for (int k = 0; k < d; ++k) y[k] = x[k] + r * dir[k] / dn;
        const double diff = std::abs(1.0 / p(x) - 1.0 / p(y));
        sup = std::max(sup, diff * std::log(std::exp(1.0) + 1.0 / r));
    }
    return sup;
}

struct PinftyGammaResult {
    double c_gamma_hat = 0.0;
    bool lemma14_ok = false;
};

/// Measures C_gamma = sup |p(x)-p_inf| |x|^2 on radial samples and checks
/// the two-sided equivalence bounds with the constants C1 = e^{C/p_inf},
/// C2 = e^{C p'_minus / p_inf}.
inline PinftyGammaResult pinfty_gamma_check(const ExponentField& p, int d, int sample_count,
                                            double max_radius = 30.0,
                                            std::uint64_t seed = 0x9a44a) {
    if (!p.p_infty) throw std::invalid_argument("pinfty_gamma_check: p_infty required");
    const double p_inf = *p.p_infty;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double log_rmin = std::log(0.05), log_rmax = std::log(max_radius);

    std::vector<Point> samples;
    samples.reserve(sample_count);
    for (int i = 0; i < sample_count; ++i) {
        Point dir(d);
        double dn = 0.0;
        for (int k = 0; k < d; ++k) {
            dir[k] = gauss(rng);
            dn += dir[k] * dir[k];
        }
        dn = std::sqrt(dn);
        if (dn == 0.0) continue;
        const double r = std::exp(log_rmin + (log_rmax - log_rmin) * u01(rng));
        for (int k = 0; k < d; ++k) dir[k] *= r / dn;
        samples.push_back(std::move(dir));
    }

    PinftyGammaResult res;
    for (const auto& x : samples)
        res.c_gamma_hat = std::max(res.c_gamma_hat, std::abs(p(x) - p_inf) * norm_sq(x));

    const double c1 = std::exp(res.c_gamma_hat / p_inf);
    const bool do_conj = p.p_minus > 1.0 && p_inf > 1.0;
    const double pp_minus = do_conj ? p.p_plus / (p.p_plus - 1.0) : 0.0;
    const double c2 = do_conj ? std::exp(res.c_gamma_hat * pp_minus / p_inf) : 0.0;
    const double pp_inf = do_conj ? p_inf / (p_inf - 1.0) : 0.0;

    const double slack = 1e-9;
    res.lemma14_ok = true;
    for (const auto& x : samples) {
        const double e1 = std::exp(-norm_sq(x) * (p(x) / p_inf - 1.0));
        if (e1 > c1 * (1.0 + slack) || e1 < 1.0 / c1 * (1.0 - slack)) {
            res.lemma14_ok = false;
            break;
        }
        if (do_conj) {
            const double px = p(x);
            const double ppx = px / (px - 1.0);
            const double e2 = std::exp(-norm_sq(x) * (ppx / pp_inf - 1.0));
            if (e2 > c2 * (1.0 + slack) || e2 < 1.0 / c2 * (1.0 - slack)) {
                res.lemma14_ok = false;
                break;
            }
        }
    }
    return res;
}

}  // namespace griesz
