#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "freud/christoffel.hpp"
#include "freud/poly_eval.hpp"

namespace freud {

/// Measure selector for the mass-modified family: w_t(x) dx + M delta_0.
struct UvarovParams {
    Real t;
    Real M;
};

inline void validate(const UvarovParams& p) {
    if (!(p.t >= 0) || !std::isfinite(to_double(p.t)))
        throw FreudError("UvarovParams: t must be finite and >= 0");
    if (!(p.M >= 0) || !std::isfinite(to_double(p.M)))
        throw FreudError("UvarovParams: M must be finite and >= 0");
}

/// Derived data of the family Q_n for one (t, M). Indexing is valid for
/// n <= n_max - 1 (the kernel K_n(0,0) consumes one degree of the table).
/// With M = 0 every entry reduces exactly to the unmodified family.
struct UvarovTable {
    UvarovParams params;
    int n_max = 0;
    std::vector<Real> b;          // b[n] = (1 + M K_n(0,0)) / (1 + M K_{n-1}(0,0)); b[odd] = 1 exactly
    std::vector<Real> gamma;      // gamma[n] = (b[n]/b[n-1]) a_n^2, recurrence coefficient of Q
    std::vector<Real> q0;         // Q_n(0)
    std::vector<Real> norm_sq_Q;  // ||Q_n||^2 = b_n ||F_n||^2
    std::vector<Real> kappa;      // kappa[m] = 1 + M K_{2m-1}(0,0), m = 0..(n_max-1)/2
};

/// All formulas are written without dividing by M, so M = 0 is exact.
inline UvarovTable build_uvarov(const UvarovParams& params, const RecurrenceTable& tab) {
    validate(params);
    UvarovTable uv;
    uv.params = params;
    uv.n_max = tab.n_max;
    const int n_top = tab.n_max - 1;
    const Real& M = params.M;

    std::vector<Real> one_plus_MK(n_top + 1);  // 1 + M K_n(0,0), n = 0..n_top
    for (int n = 0; n <= n_top; ++n)
        one_plus_MK[n] = n % 2 == 1 ? one_plus_MK[n - 1] : 1 + M * kernel00(n, tab);

    uv.b.assign(n_top + 1, Real(1));
    uv.gamma.assign(n_top + 1, Real(0));
    uv.q0.assign(n_top + 1, Real(0));
    uv.norm_sq_Q.assign(n_top + 1, Real(0));
    for (int n = 0; n <= n_top; ++n) {
        Real denom = n >= 1 ? one_plus_MK[n - 1] : Real(1);
        uv.b[n] = n % 2 == 1 ? Real(1) : one_plus_MK[n] / denom;
        if (n >= 1) uv.gamma[n] = uv.b[n] / uv.b[n - 1] * tab.a_sq[n];
        uv.q0[n] = eval_F(n, Real(0), tab) / denom;
        uv.norm_sq_Q[n] = uv.b[n] * tab.norm_sq[n];
    }
    uv.kappa.reserve(n_top / 2 + 1);
    for (int m = 0; 2 * m <= n_top; ++m)
        uv.kappa.push_back(2 * m >= 1 ? one_plus_MK[2 * m - 1] : Real(1));
    return uv;
}

/// Memoized per (t, M, n_max, digits); same lifetime contract as
/// recurrence_cache.
inline const UvarovTable& uvarov_cache(const UvarovParams& params, const RecurrenceTable& tab) {
    using Key = std::tuple<std::string, std::string, int, int>;
    static std::map<Key, std::unique_ptr<const UvarovTable>> cache;
    static std::mutex mtx;
    Key key{detail::real_key(tab.t), detail::real_key(params.M), tab.n_max, tab.working_digits};
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto table = std::make_unique<const UvarovTable>(build_uvarov(params, tab));
        it = cache.emplace(std::move(key), std::move(table)).first;
    }
    return *it->second;
}

enum class QPath { recurrence, kernel };

/// Q_n(x). The gamma recurrence is the default path; the kernel connection
/// Q_n = F_n - M Q_n(0) K_{n-1}(x,0) is kept as a permanently available
/// second route, and the two must agree (tests cross-validate every run).
inline Real eval_Q(int n, const Real& x, const UvarovParams& params, const RecurrenceTable& tab,
                   QPath path = QPath::recurrence) {
    detail::require_degree(n, tab.n_max - 1, "eval_Q");
    const UvarovTable& uv = uvarov_cache(params, tab);
    if (path == QPath::kernel) {
        if (n == 0) return Real(1);
        return eval_F(n, x, tab) - params.M * uv.q0[n] * kernel_x0(n - 1, x, tab);
    }
    Real prev = 0, cur = 1;
    for (int k = 0; k < n; ++k) {
        Real next = x * cur - uv.gamma[k] * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Q_n, Q_n', Q_n'' along the gamma recurrence.
inline Jet2 eval_Q_jet(int n, const Real& x, const UvarovParams& params,
                       const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max - 1, "eval_Q_jet");
    const UvarovTable& uv = uvarov_cache(params, tab);
    Real f0 = 1, f1 = 0, d0 = 0, d1 = 0, s0 = 0, s1 = 0;
    for (int k = 0; k < n; ++k) {
        Real fn = x * f0 - uv.gamma[k] * f1;
        Real dn = f0 + x * d0 - uv.gamma[k] * d1;
        Real sn = 2 * d0 + x * s0 - uv.gamma[k] * s1;
        f1 = f0;
        f0 = fn;
        d1 = d0;
        d0 = dn;
        s1 = s0;
        s0 = sn;
    }
    return {f0, d0, s0};
}

/// Q_n'(x) through the kernel connection (derivative of the second route).
/// The derivative of K_{2m}(x,0) = c F_{2m+1}(x)/x is formed from the jet;
/// at the origin it vanishes by parity.
inline Real eval_Q_prime_kernel(int n, const Real& x, const UvarovParams& params,
                                const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max - 1, "eval_Q_prime_kernel");
    if (n == 0) return Real(0);
    const UvarovTable& uv = uvarov_cache(params, tab);
    int k = n - 1;
    if (k % 2 == 1) --k;  // odd index collapses
    Real dK = 0;
    if (k >= 2 && !(abs(x) < Real(1e-30))) {
        Real c = eval_F(k, Real(0), tab) / tab.norm_sq[k];
        Jet2 j = eval_F_jet(k + 1, x, tab);
        dK = c * (j.d1 * x - j.value) / (x * x);
    }
    return eval_F_prime(n, x, tab) - params.M * uv.q0[n] * dK;
}

/// kappa_{2m} Q_{2m}(x) through the Christoffel route
/// F_{2m} + M K_{2m-1}(0,0) x F_{2m-1}^[2]; agreement with kappa * Q_{2m}
/// from the gamma recurrence is asserted before returning.
inline Real connection_tilde(int m, const Real& x, const UvarovParams& params,
                             const RecurrenceTable& tab) {
    if (m < 1) throw FreudError("connection_tilde: m must be >= 1");
    detail::require_degree(2 * m, tab.n_max - 2, "connection_tilde");
    const UvarovTable& uv = uvarov_cache(params, tab);
    Real K = kernel00(2 * m - 1, tab);
    Real tilde = eval_F(2 * m, x, tab) + params.M * K * x * eval_F2(2 * m - 1, x, tab);
    Real via_q = uv.kappa[m] * eval_Q(2 * m, x, params, tab);
    Real scale = abs(tilde) + abs(via_q) + 1;
    if (abs(tilde - via_q) > pow(Real(10), -tab.working_digits / 2) * scale)
        throw FreudError("connection_tilde: routes disagree at m = " + std::to_string(m));
    return tilde;
}

/// ||Q_n||^2 / ||F_n||^2 = b_n; exactly 1 for odd n.
inline Real norm_ratio_Q(int n, const UvarovParams& params, const RecurrenceTable& tab) {
    if (n < 1) throw FreudError("norm_ratio_Q: n must be >= 1");
    if (n % 2 == 1) return Real(1);
    detail::require_degree(n, tab.n_max - 1, "norm_ratio_Q");
    return uvarov_cache(params, tab).b[n];
}

/// Residuals of the nonlinear difference equation satisfied by the gamma
/// coefficients. Two circulating variants differ in the t term and both are
/// reported side by side:
///   t_half  - keeps t/2;
///   exact   - the substitution of gamma = (b_n/b_{n-1}) a_n^2 into the
///             string equation, whose t-term is (b_{n-1}/b_n) t.
/// Only `exact` reduces to the plain string equation at M = 0; it is the
/// authoritative one, `t_half` is retained for the record.
struct PerturbedStringResidual {
    Real t_half;
    Real exact;
};

inline PerturbedStringResidual perturbed_string_residual(int n, const UvarovParams& params,
                                                         const RecurrenceTable& tab) {
    if (n < 2 || n > tab.n_max - 2)
        throw FreudError("perturbed_string_residual: n out of range [2, n_max-2]");
    const UvarovTable& uv = uvarov_cache(params, tab);
    const std::vector<Real>& b = uv.b;
    const std::vector<Real>& g = uv.gamma;
    Real core = (b[n - 2] / b[n]) * g[n - 1] + (b[n - 1] / b[n]) * (b[n - 1] / b[n]) * g[n] +
                (b[n - 1] / b[n + 1]) * g[n + 1];
    PerturbedStringResidual r;
    r.t_half = abs(4 * g[n] * (core - params.t / 2) - n);
    r.exact = abs(4 * g[n] * (core - (b[n - 1] / b[n]) * params.t) - n);
    return r;
}

}  // namespace freud
