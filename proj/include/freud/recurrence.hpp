#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "freud/weight.hpp"

namespace freud {

/// Recurrence data of the monic family F_n for one value of t:
/// x F_n = F_{n+1} + a_n^2 F_{n-1}, a_0^2 = 0.
struct RecurrenceTable {
    Real t;
    int n_max = 0;
    int working_digits = 80;
    std::vector<Real> a_sq;     // a_sq[n] = a_n^2(t), n = 0..n_max
    std::vector<Real> norm_sq;  // ||F_n||^2, n = 0..n_max
    std::vector<Real> zeta;     // zeta[n] = a_1^2 ... a_n^2, zeta[0] = 1
    Real max_abs_mean;          // largest |b_n| seen by the symmetry check
};

/// Discretized Stieltjes orthogonalization against the Gauss-Legendre
/// discretization of the measure on [-R, R]. The string equation is never
/// iterated here: run forward it is the unstable discrete Painleve-I map,
/// so it serves only as an independent certificate (string_residual).
inline RecurrenceTable compute_recurrence(const Real& t, int n_max, const PrecisionConfig& cfg = {}) {
    validate(cfg);
    if (n_max < 2) throw FreudError("compute_recurrence: n_max must be >= 2");
    PrecisionScope scope(cfg.working_digits);

    const int order = cfg.quadrature_order > 0 ? cfg.quadrature_order : 4 * n_max + 200;
    // A discrete measure on `order` nodes only carries orthogonal polynomials
    // up to degree order - 1.
    if (order <= n_max)
        throw FreudError("compute_recurrence: " + std::to_string(order) +
                         " quadrature nodes cannot orthogonalize up to degree n = " +
                         std::to_string(n_max) + "; raise quadrature_order");
    const Real R = truncation_radius(t, cfg.working_digits);
    const QuadratureRule& rule = gauss_legendre(order, cfg.working_digits);

    const std::size_t N = rule.nodes.size();
    std::vector<Real> x(N), w(N);
    for (std::size_t i = 0; i < N; ++i) {
        x[i] = R * rule.nodes[i];
        w[i] = R * rule.weights[i] * eval_weight(x[i], t);
    }

    RecurrenceTable tab;
    tab.t = t;
    tab.n_max = n_max;
    tab.working_digits = cfg.working_digits;
    tab.a_sq.assign(n_max + 1, Real(0));
    tab.norm_sq.assign(n_max + 1, Real(0));
    tab.zeta.assign(n_max + 1, Real(1));
    tab.max_abs_mean = 0;

    std::vector<Real> prev(N, Real(0)), cur(N, Real(1));
    Real nrm = 0;
    for (std::size_t i = 0; i < N; ++i) nrm += w[i];
    tab.norm_sq[0] = nrm;

    const Real mean_tol = pow(Real(10), -(cfg.working_digits - 10));
    for (int n = 0; n < n_max; ++n) {
        // The measure is even, so the diagonal recurrence coefficient must
        // vanish; a non-tiny value flags a broken discretization.
        Real mean = 0;
        for (std::size_t i = 0; i < N; ++i) mean += w[i] * x[i] * cur[i] * cur[i];
        mean /= tab.norm_sq[n];
        if (abs(mean) > tab.max_abs_mean) tab.max_abs_mean = abs(mean);
        if (abs(mean) > mean_tol)
            throw FreudError("compute_recurrence: symmetry violated at n = " + std::to_string(n) +
                             " (|mean| = " + Real(abs(mean)).str(3, std::ios_base::scientific) + ")");

        Real an2 = tab.a_sq[n];
        Real nrm_next = 0;
        for (std::size_t i = 0; i < N; ++i) {
            Real next = x[i] * cur[i] - an2 * prev[i];
            prev[i] = cur[i];
            cur[i] = next;
            nrm_next += w[i] * next * next;
        }
        if (!(nrm_next > 0))
            throw FreudError("compute_recurrence: nonpositive norm at n = " + std::to_string(n + 1) +
                             "; raise working_digits or quadrature_order");
        tab.norm_sq[n + 1] = nrm_next;
        tab.a_sq[n + 1] = nrm_next / tab.norm_sq[n];
        // A collapse of the norm ratio means the discretization ran out of
        // resolving power even though roundoff kept the norm positive.
        if (!(tab.a_sq[n + 1] > 0) || (n >= 1 && tab.a_sq[n + 1] < Real(1e-6) * tab.a_sq[n]))
            throw FreudError("compute_recurrence: a_n^2 <= 0 at n = " + std::to_string(n + 1) +
                             "; raise working_digits or quadrature_order");
        tab.zeta[n + 1] = tab.zeta[n] * tab.a_sq[n + 1];
    }
    return tab;
}

/// |4 a_n^2 (a_{n-1}^2 + a_n^2 + a_{n+1}^2 - t) - n|.
inline Real string_residual(const RecurrenceTable& tab, int n) {
    if (n < 1 || n > tab.n_max - 1)
        throw FreudError("string_residual: n out of range [1, n_max-1], got " + std::to_string(n));
    return abs(4 * tab.a_sq[n] * (tab.a_sq[n - 1] + tab.a_sq[n] + tab.a_sq[n + 1] - tab.t) - n);
}

namespace detail {
inline std::string real_key(const Real& v) { return v.str(40, std::ios_base::scientific); }
}  // namespace detail

/// Memoized tables, keyed by (t, n_max, digits). Entries are immutable once
/// inserted, so handing out references is safe for concurrent readers.
inline const RecurrenceTable& recurrence_cache(const Real& t, int n_max,
                                               const PrecisionConfig& cfg = {}) {
    using Key = std::tuple<std::string, int, int, int>;
    static std::map<Key, std::unique_ptr<const RecurrenceTable>> cache;
    static std::mutex mtx;
    Key key{detail::real_key(t), n_max, cfg.working_digits, cfg.quadrature_order};
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto table = std::make_unique<const RecurrenceTable>(compute_recurrence(t, n_max, cfg));
        it = cache.emplace(std::move(key), std::move(table)).first;
    }
    return *it->second;
}

/// Central-difference check of the Toda flow da_k/dt = a_k (a_{k+1}^2 - a_{k-1}^2).
inline Real toda_residual(const Real& t, const Real& h, int k, const PrecisionConfig& cfg = {}) {
    if (k < 1) throw FreudError("toda_residual: k must be >= 1");
    if (!(h > 0)) throw FreudError("toda_residual: h must be positive");
    int n_max = std::max(k + 1, 2);
    const RecurrenceTable& mid = recurrence_cache(t, n_max, cfg);
    const RecurrenceTable& up = recurrence_cache(t + h, n_max, cfg);
    const RecurrenceTable& dn = recurrence_cache(t - h, n_max, cfg);
    Real adot = (sqrt(up.a_sq[k]) - sqrt(dn.a_sq[k])) / (2 * h);
    return abs(adot - sqrt(mid.a_sq[k]) * (mid.a_sq[k + 1] - mid.a_sq[k - 1]));
}

}  // namespace freud
