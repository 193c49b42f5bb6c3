#pragma once

#include <vector>

#include "freud/poly_eval.hpp"
#include "freud/tridiag.hpp"

namespace freud {

// The 2-iterated Christoffel family F_n^[2]: monic orthogonal polynomials of
// the measure x^2 w_t(x) dx. Only k = 2 exists here; odd k is not
// quasi-definite for an even weight, so no other iterate is provided.

/// Connection coefficient xi_n^2 in x^2 F_n^[2] = F_{n+2} + xi_n^2 F_n.
/// Even n reads off values at 0, odd n first derivatives at 0.
inline Real xi_sq(int n, const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max - 2, "xi_sq");
    Real v;
    if (n % 2 == 0)
        v = -eval_F(n + 2, Real(0), tab) / eval_F(n, Real(0), tab);
    else
        v = -eval_F_prime(n + 2, Real(0), tab) / eval_F_prime(n, Real(0), tab);
    if (!(v > 0)) throw FreudError("xi_sq: nonpositive value at n = " + std::to_string(n));
    return v;
}

/// Recurrence coefficient of the F^[2] family: alpha_n^2 = (xi_n^2 / xi_{n-1}^2) a_n^2.
inline Real alpha_sq(int n, const RecurrenceTable& tab) {
    if (n < 1) throw FreudError("alpha_sq: n must be >= 1");
    detail::require_degree(n, tab.n_max - 3, "alpha_sq");
    return xi_sq(n, tab) / xi_sq(n - 1, tab) * tab.a_sq[n];
}

namespace detail {
inline std::vector<Real> alpha_sq_list(int n, const RecurrenceTable& tab) {
    std::vector<Real> alphas(n, Real(0));
    for (int k = 1; k < n; ++k) alphas[k] = alpha_sq(k, tab);
    return alphas;
}
}  // namespace detail

/// F_n^[2](x). Away from the origin the connection formula
/// (F_{n+2} + xi_n^2 F_n)/x^2 applies; near it the three term recurrence
/// with alpha_n^2, which has nothing to cancel. |x| < 1e-4 is the tie line.
inline Real eval_F2(int n, const Real& x, const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max - 2, "eval_F2");
    if (n == 0) return Real(1);
    if (abs(x) < Real(1e-4)) {
        Real prev = 0, cur = 1;
        for (int k = 0; k < n; ++k) {
            Real ak = k >= 1 ? alpha_sq(k, tab) : Real(0);
            Real next = x * cur - ak * prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    return (eval_F(n + 2, x, tab) + xi_sq(n, tab) * eval_F(n, x, tab)) / (x * x);
}

inline Real eval_F2_prime(int n, const Real& x, const RecurrenceTable& tab) {
    std::vector<Real> alphas = detail::alpha_sq_list(n, tab);
    Real f1 = 0, f0 = 1, d1 = 0, d0 = 0;
    for (int k = 0; k < n; ++k) {
        Real fn = x * f0 - alphas[k] * f1;
        Real dn = f0 + x * d0 - alphas[k] * d1;
        f1 = f0;
        f0 = fn;
        d1 = d0;
        d0 = dn;
    }
    return d0;
}

/// Zeros of F_n^[2], from its own Jacobi matrix.
inline std::vector<Real> zeros_F2_values(int n, const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max - 2, "zeros_F2");
    std::vector<Real> alphas = detail::alpha_sq_list(n, tab);
    return symmetric_opoly_zeros(
        n, alphas, [&](const Real& y) { return eval_F2(n, y, tab); },
        [&](const Real& y) { return eval_F2_prime(n, y, tab); }, "zeros_F2");
}

/// Zero multiset of G_{2m} = x F_{2m-1}^[2]: the zeros of F_{2m-1}^[2]
/// (which include 0) plus one extra 0, i.e. a double zero at the origin.
/// Returned sorted, length 2m, with entries m-1 and m both exactly 0.
inline std::vector<Real> g_zeros(int m, const RecurrenceTable& tab) {
    if (m < 1) throw FreudError("g_zeros: m must be >= 1");
    std::vector<Real> z = zeros_F2_values(2 * m - 1, tab);
    std::vector<Real> g;
    g.reserve(2 * m);
    for (int i = 0; i < m - 1; ++i) g.push_back(z[i]);
    g.push_back(Real(0));
    g.push_back(Real(0));
    for (int i = m; i < 2 * m - 1; ++i) g.push_back(z[i]);
    return g;
}

struct InterlaceReport {
    bool ok = true;
    int violation_index = -1;  // position in the merged chain, -1 if none
    std::vector<Real> merged;  // the checked chain, innermost ties included
};

namespace detail {
inline InterlaceReport check_strict_chain(const std::vector<Real>& chain,
                                          const std::vector<bool>& tie_ok) {
    InterlaceReport rep;
    rep.merged = chain;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        bool good = tie_ok[i] ? !(chain[i] > chain[i + 1]) : chain[i] < chain[i + 1];
        if (!good) {
            rep.ok = false;
            rep.violation_index = static_cast<int>(i);
            return rep;
        }
    }
    return rep;
}
}  // namespace detail

/// Interlacing of the zeros g of G_{2m} = x F_{2m-1}^[2] with the zeros x of
/// F_{2m}:  x_1 < g_1 < x_2 < ... < x_m < g_m = 0 = g_{m+1} < x_{m+1} < ...
/// < x_{2m-1} < g_{2m} < x_{2m}.
inline InterlaceReport interlace_christoffel(int m, const RecurrenceTable& tab) {
    detail::require_degree(2 * m, tab.n_max - 1, "interlace_christoffel");
    std::vector<Real> g = g_zeros(m, tab);  // g[m-1] = g[m] = 0
    std::vector<Real> x = symmetric_opoly_zeros(
        2 * m, tab.a_sq, [&](const Real& y) { return eval_F(2 * m, y, tab); },
        [&](const Real& y) { return eval_F_prime(2 * m, y, tab); }, "interlace_christoffel");
    std::vector<Real> chain;
    std::vector<bool> tie_ok;
    auto push = [&](const Real& v, bool tie_after) {
        chain.push_back(v);
        tie_ok.push_back(tie_after);
    };
    for (int k = 1; k <= m; ++k) {
        push(x[k - 1], false);
        push(g[k - 1], k == m);  // g_m = 0 is allowed to tie with g_{m+1} = 0
    }
    push(g[m], false);  // g_{m+1} = 0
    for (int k = m + 1; k <= 2 * m - 1; ++k) {
        push(x[k - 1], false);
        push(g[k], false);  // g_{k+1}
    }
    push(x[2 * m - 1], false);
    return detail::check_strict_chain(chain, tie_ok);
}

}  // namespace freud
