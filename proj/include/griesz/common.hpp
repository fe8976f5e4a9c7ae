#pragma once

// Small shared pieces: point arithmetic in R^d and numeric constants.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace griesz {

using Point = std::vector<double>;

inline constexpr double kPi = 3.14159265358979323846;

inline double dot(const Point& a, const Point& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("griesz: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm_sq(const Point& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return s;
}

inline double norm(const Point& a) { return std::sqrt(norm_sq(a)); }

inline double dist_sq(const Point& a, const Point& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("griesz: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double dist(const Point& a, const Point& b) { return std::sqrt(dist_sq(a, b)); }

/// Density of the Gaussian probability measure, pi^{-d/2} exp(-|x|^2).
inline double gaussian_density(const Point& x) {
    const double d = static_cast<double>(x.size());
    return std::pow(kPi, -0.5 * d) * std::exp(-norm_sq(x));
}

}  // namespace griesz
