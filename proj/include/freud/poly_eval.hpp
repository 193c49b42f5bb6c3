#pragma once

#include <vector>

#include "freud/recurrence.hpp"

namespace freud {

namespace detail {
inline void require_degree(int n, int limit, const char* what) {
    if (n < 0 || n > limit)
        throw FreudError(std::string(what) + ": degree " + std::to_string(n) +
                         " exceeds table coverage " + std::to_string(limit));
}
}  // namespace detail

/// Monic F_n(x) by the three term recurrence.
inline Real eval_F(int n, const Real& x, const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max, "eval_F");
    Real prev = 0, cur = 1;
    for (int k = 0; k < n; ++k) {
        Real next = x * cur - tab.a_sq[k] * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

struct Jet2 {
    Real value;
    Real d1;
    Real d2;
};

/// F_n, F_n', F_n'' propagated together through the recurrence.
inline Jet2 eval_F_jet(int n, const Real& x, const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max, "eval_F_jet");
    Real f0 = 1, f1 = 0, d0 = 0, d1 = 0, s0 = 0, s1 = 0;
    for (int k = 0; k < n; ++k) {
        Real fn = x * f0 - tab.a_sq[k] * f1;
        Real dn = f0 + x * d0 - tab.a_sq[k] * d1;
        Real sn = 2 * d0 + x * s0 - tab.a_sq[k] * s1;
        f1 = f0;
        f0 = fn;
        d1 = d0;
        d0 = dn;
        s1 = s0;
        s0 = sn;
    }
    return {f0, d0, s0};
}

inline Real eval_F_prime(int n, const Real& x, const RecurrenceTable& tab) {
    return eval_F_jet(n, x, tab).d1;
}

/// Residual of the structure relation
/// F_n' = -4 a_n^2 x F_n + 4 a_n^2 (x^2 - t + a_n^2 + a_{n+1}^2) F_{n-1},
/// evaluated through two independent paths (jet against recurrence values).
inline Real structure_relation_residual(int n, const Real& x, const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max - 1, "structure_relation_residual");
    if (n < 1) throw FreudError("structure_relation_residual: n must be >= 1");
    Real a = -4 * tab.a_sq[n] * x;
    Real b = 4 * tab.a_sq[n] * (x * x - tab.t + tab.a_sq[n] + tab.a_sq[n + 1]);
    return abs(eval_F_prime(n, x, tab) - a * eval_F(n, x, tab) - b * eval_F(n - 1, x, tab));
}

/// Coefficients of F_n in ascending powers of x, built exactly by the
/// recurrence. Signs alternate, which is why these stay in extended
/// precision rather than double.
inline std::vector<Real> coeffs_F(int n, const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max, "coeffs_F");
    std::vector<Real> prev{Real(0)}, cur{Real(1)};
    for (int k = 0; k < n; ++k) {
        std::vector<Real> next(cur.size() + 1, Real(0));
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= tab.a_sq[k] * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// K_n(0,0;t) > 0. Odd index collapses onto the even one below it, which is
/// what makes b_n = 1 exact for odd n downstream. kernel00(-1) is 0 (empty sum).
inline Real kernel00(int n, const RecurrenceTable& tab) {
    if (n == -1) return Real(0);
    detail::require_degree(n, tab.n_max - 1, "kernel00");
    if (n == 0) return 1 / tab.norm_sq[0];
    if (n % 2 == 1) return kernel00(n - 1, tab);
    return eval_F_prime(n + 1, Real(0), tab) * eval_F(n, Real(0), tab) / tab.norm_sq[n];
}

/// Direct sum K_n(x,y) = sum_k F_k(x) F_k(y) / ||F_k||^2, kept as the slow
/// reference path; terms are accumulated in normalized form.
inline Real eval_kernel_sum(int n, const Real& x, const Real& y, const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max - 1, "eval_kernel_sum");
    Real fx_prev = 0, fx = 1, fy_prev = 0, fy = 1, sum = 0;
    for (int k = 0; k <= n; ++k) {
        sum += fx * fy / tab.norm_sq[k];
        Real nx = x * fx - tab.a_sq[k] * fx_prev;
        Real ny = y * fy - tab.a_sq[k] * fy_prev;
        fx_prev = fx;
        fx = nx;
        fy_prev = fy;
        fy = ny;
    }
    return sum;
}

/// Christoffel-Darboux kernel. Uses the CD quotient away from the diagonal
/// and the confluent (derivative) form when x and y nearly coincide, where
/// the quotient would cancel. Internally works with normalized polynomials
/// so large n cannot overflow.
inline Real eval_kernel(int n, const Real& x, const Real& y, const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max - 1, "eval_kernel");
    const Real switch_tol = Real(1e-6) * (1 + abs(x));
    if (abs(x - y) < switch_tol) {
        Real m = (x + y) / 2;
        Jet2 lo = eval_F_jet(n, m, tab);
        Jet2 hi = eval_F_jet(n + 1, m, tab);
        return (hi.d1 * lo.value - lo.d1 * hi.value) / tab.norm_sq[n];
    }
    Real nrm_n = sqrt(tab.norm_sq[n]);
    Real nrm_n1 = nrm_n * sqrt(tab.a_sq[n + 1]);
    Real px_prev = 0, px = 1, py_prev = 0, py = 1;
    for (int k = 0; k <= n; ++k) {
        Real nx = x * px - tab.a_sq[k] * px_prev;
        Real ny = y * py - tab.a_sq[k] * py_prev;
        px_prev = px;
        px = nx;
        py_prev = py;
        py = ny;
    }
    // px = F_{n+1}(x), px_prev = F_n(x); same for y.
    return (px / nrm_n1 * (py_prev / nrm_n) - py / nrm_n1 * (px_prev / nrm_n)) *
           sqrt(tab.a_sq[n + 1]) / (x - y);
}

/// K_n(x, 0;t). Even degree in x for every n: odd indices collapse, and
/// K_{2m}(x,0) = F_{2m}(0) F_{2m+1}(x) / (x ||F_{2m}||^2) with the removable
/// singularity at x = 0 evaluated through F_{2m+1}'(0).
inline Real kernel_x0(int n, const Real& x, const RecurrenceTable& tab) {
    if (n == -1) return Real(0);
    detail::require_degree(n, tab.n_max - 1, "kernel_x0");
    if (n == 0) return 1 / tab.norm_sq[0];
    if (n % 2 == 1) return kernel_x0(n - 1, x, tab);
    Real ratio;
    if (abs(x) < Real(1e-20))
        ratio = eval_F_prime(n + 1, Real(0), tab);
    else
        ratio = eval_F(n + 1, x, tab) / x;
    return eval_F(n, Real(0), tab) * ratio / tab.norm_sq[n];
}

}  // namespace freud
