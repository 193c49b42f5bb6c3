#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "freud/real.hpp"

namespace freud {

// Gauss-Legendre rule on [-1, 1].
struct QuadratureRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};

namespace detail {

// Legendre P_n and P_n' by the three term recurrence.
inline std::pair<Real, Real> legendre_pair(int n, const Real& x) {
    Real p0 = 1, p1 = x;
    for (int j = 2; j <= n; ++j) {
        Real p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
    }
    Real dp = n * (x * p1 - p0) / (x * x - 1);
    return {p1, dp};
}

inline QuadratureRule make_gauss_legendre(int n, int digits) {
    PrecisionScope scope(digits);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const Real tol = pow(Real(10), -(digits - 2));
    for (int k = 1; k <= n / 2; ++k) {
        // Chebyshev-angle initial guess, then Newton at full precision.
        Real x = std::cos(M_PI * (k - 0.25) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            auto [p, dp] = legendre_pair(n, x);
            Real dx = p / dp;
            x -= dx;
            if (abs(dx) < tol) break;
        }
        auto [p, dp] = legendre_pair(n, x);
        (void)p;
        Real w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[k - 1] = -x;
        rule.weights[k - 1] = w;
        rule.nodes[n - k] = x;
        rule.weights[n - k] = w;
    }
    if (n % 2 == 1) {
        Real x = 0;
        auto [p, dp] = legendre_pair(n, x);
        (void)p;
        rule.nodes[n / 2] = 0;
        rule.weights[n / 2] = 2 / (dp * dp);
    }
    return rule;
}

}  // namespace detail

// Cached by (order, digits); rules are immutable once built.
inline const QuadratureRule& gauss_legendre(int n, int digits) {
    static std::map<std::pair<int, int>, QuadratureRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, digits);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, detail::make_gauss_legendre(n, digits)).first;
    return it->second;
}

// Integrates f over [-R, R].
template <typename F>
Real integrate_symmetric(F&& f, const Real& R, int order, int digits) {
    const QuadratureRule& rule = gauss_legendre(order, digits);
    Real sum = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(R * rule.nodes[i]);
    return R * sum;
}

}  // namespace freud
