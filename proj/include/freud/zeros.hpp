#pragma once

#include <algorithm>
#include <vector>

#include "freud/christoffel.hpp"
#include "freud/electrostatics.hpp"
#include "freud/tridiag.hpp"
#include "freud/uvarov.hpp"

namespace freud {

enum class Family { freud, uvarov, christoffel2 };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::freud: return "freud";
        case Family::uvarov: return "uvarov";
        default: return "christoffel2";
    }
}

/// Sorted simple zeros of one polynomial, with provenance. Always symmetric
/// about the origin; odd degrees carry an exact zero in the middle.
struct ZeroSet {
    Family family = Family::freud;
    int n = 0;
    Real t;
    Real M;  // 0 unless family == uvarov
    std::vector<Real> values;
};

inline const std::vector<Real>& zero_values(const ZeroSet& zs) { return zs.values; }

inline ZeroSet zeros_F(int n, const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max - 1, "zeros_F");
    ZeroSet zs{Family::freud, n, tab.t, Real(0), {}};
    zs.values = symmetric_opoly_zeros(
        n, tab.a_sq, [&](const Real& y) { return eval_F(n, y, tab); },
        [&](const Real& y) { return eval_F_prime(n, y, tab); }, "zeros_F");
    return zs;
}

inline ZeroSet zeros_Q(int n, const UvarovParams& params, const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max - 1, "zeros_Q");
    const UvarovTable& uv = uvarov_cache(params, tab);
    ZeroSet zs{Family::uvarov, n, tab.t, params.M, {}};
    zs.values = symmetric_opoly_zeros(
        n, uv.gamma, [&](const Real& y) { return eval_Q(n, y, params, tab); },
        [&](const Real& y) { return eval_Q_jet(n, y, params, tab).d1; }, "zeros_Q");
    return zs;
}

inline ZeroSet zeros_F2(int n, const RecurrenceTable& tab) {
    ZeroSet zs{Family::christoffel2, n, tab.t, Real(0), {}};
    zs.values = zeros_F2_values(n, tab);
    return zs;
}

/// Speed of a zero x of F_n under d/dt: x / (2(x^2 - t + a_n^2 + a_{n+1}^2)).
inline Real motion_rhs_F(const Real& x, int n, const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max - 1, "motion_rhs_F");
    Real den = 2 * (x * x - tab.t + tab.a_sq[n] + tab.a_sq[n + 1]);
    if (abs(den) < Real(1e-25))
        throw FreudError("motion_rhs_F: denominator vanishes at x = " + std::to_string(to_double(x)));
    return x / den;
}

/// Speed of the k-th zero y of Q_n under d/dt. k is carried for error
/// reporting only; the value depends on (y, n) and the tables.
inline Real motion_rhs_Q(const Real& y, int k, int n, const UvarovParams& params,
                         const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max - 1, "motion_rhs_Q");
    if (n < 2) throw FreudError("motion_rhs_Q: n must be >= 2");
    if (abs(y) == 0) return Real(0);  // the central zero of odd degrees never moves
    const UvarovTable& uv = uvarov_cache(params, tab);
    const Real& t = tab.t;
    const Real a = tab.a_sq[n];
    const Real am = tab.a_sq[n - 1];
    const Real ap = tab.a_sq[n + 1];
    const Real bn = uv.b[n];

    Real F0 = eval_F(n, Real(0), tab);
    Real flat = -(2 / uv.b[n - 2]) *
                (a * am + params.M * F0 * F0 /
                              ((1 + params.M * kernel00(n - 1, tab)) * tab.norm_sq[n - 2]));
    Real Ck1 = 1 - 4 * a * (bn * y * y + (bn - 1) * (a + am - t));
    Real Ck2 = 4 * a * y * (bn * (y * y - t + a) + ap);
    Real den = Ck1 * eval_F(n, y, tab) + Ck2 * eval_F(n - 1, y, tab);
    if (abs(den) < Real(1e-25))
        throw FreudError("motion_rhs_Q: denominator vanishes at zero index " + std::to_string(k));
    Real num = -y * y * flat * (uv.b[n - 2] / (uv.b[n - 1] * am)) *
               eval_Q(n - 1, y, params, tab);
    return num / den;
}

struct Trajectory {
    std::vector<Real> times;
    std::vector<std::vector<Real>> zeros;  // one row per time
};

/// Classical RK4 on the full zero vector. Every stage recomputes the
/// recurrence (and mass-modified) tables at the stage time; the caches make
/// repeated stage times cheap. A vanishing denominator along the path aborts
/// with its location.
inline Trajectory integrate_motion(int n, Family family, const UvarovParams& params, const Real& t0,
                                   const Real& t1, int steps, const PrecisionConfig& cfg = {}) {
    if (steps < 1) throw FreudError("integrate_motion: steps must be >= 1");
    if (!(t0 > 0) || !(t1 > 0)) throw FreudError("integrate_motion: t0, t1 must be positive");
    if (family == Family::christoffel2)
        throw FreudError("integrate_motion: no motion equation for the christoffel2 family");
    const int n_max = std::max(n + 2, 6);

    auto rhs = [&](const Real& tau, const std::vector<Real>& y) {
        const RecurrenceTable& tab = recurrence_cache(tau, n_max, cfg);
        std::vector<Real> dy(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (family == Family::freud) {
                dy[i] = motion_rhs_F(y[i], n, tab);
            } else {
                UvarovParams p{tau, params.M};
                dy[i] = motion_rhs_Q(y[i], static_cast<int>(i), n, p, tab);
            }
        }
        return dy;
    };

    const RecurrenceTable& tab0 = recurrence_cache(t0, n_max, cfg);
    std::vector<Real> y = family == Family::freud
                              ? zeros_F(n, tab0).values
                              : zeros_Q(n, UvarovParams{t0, params.M}, tab0).values;

    Trajectory traj;
    traj.times.push_back(t0);
    traj.zeros.push_back(y);
    Real h = (t1 - t0) / steps;
    auto axpy = [](const std::vector<Real>& base, const Real& c, const std::vector<Real>& v) {
        std::vector<Real> out(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) out[i] = base[i] + c * v[i];
        return out;
    };
    for (int s = 0; s < steps; ++s) {
        Real tau = t0 + s * h;
        std::vector<Real> k1 = rhs(tau, y);
        std::vector<Real> k2 = rhs(tau + h / 2, axpy(y, h / 2, k1));
        std::vector<Real> k3 = rhs(tau + h / 2, axpy(y, h / 2, k2));
        std::vector<Real> k4 = rhs(tau + h, axpy(y, h, k3));
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
        traj.times.push_back(tau + h);
        traj.zeros.push_back(y);
    }
    return traj;
}

/// |dF_n/dt + 2 a_n^2 a_{n-1}^2 F_{n-2}|(x) with the t-derivative by central
/// difference of step h.
inline Real dF_dt_residual(int n, const Real& x, const Real& t, const Real& h,
                           const PrecisionConfig& cfg = {}) {
    if (n < 1) return Real(0);  // F_0 = 1 has no t dependence and no F_{-2} term
    const int n_max = std::max(n + 1, 4);
    const RecurrenceTable& mid = recurrence_cache(t, n_max, cfg);
    const RecurrenceTable& up = recurrence_cache(t + h, n_max, cfg);
    const RecurrenceTable& dn = recurrence_cache(t - h, n_max, cfg);
    Real fd = (eval_F(n, x, up) - eval_F(n, x, dn)) / (2 * h);
    Real rhs = n >= 2 ? -2 * mid.a_sq[n] * mid.a_sq[n - 1] * eval_F(n - 2, x, mid) : Real(0);
    return abs(fd - rhs);
}

/// |dQ_n/dt - flat_{n,n-2} Q_{n-2}|(x), central difference in t.
inline Real dQ_dt_residual(int n, const Real& x, const UvarovParams& params, const Real& h,
                           const PrecisionConfig& cfg = {}) {
    if (n < 2) return dF_dt_residual(n, x, params.t, h, cfg);
    const int n_max = std::max(n + 1, 4);
    const RecurrenceTable& mid = recurrence_cache(params.t, n_max, cfg);
    const RecurrenceTable& up = recurrence_cache(params.t + h, n_max, cfg);
    const RecurrenceTable& dn = recurrence_cache(params.t - h, n_max, cfg);
    const UvarovTable& uv = uvarov_cache(params, mid);
    Real fd = (eval_Q(n, x, UvarovParams{params.t + h, params.M}, up) -
               eval_Q(n, x, UvarovParams{params.t - h, params.M}, dn)) /
              (2 * h);
    Real F0 = eval_F(n, Real(0), mid);
    Real flat = -(2 / uv.b[n - 2]) *
                (mid.a_sq[n] * mid.a_sq[n - 1] +
                 params.M * F0 * F0 /
                     ((1 + params.M * kernel00(n - 1, mid)) * mid.norm_sq[n - 2]));
    return abs(fd - flat * eval_Q(n - 2, x, params, mid));
}

/// Equilibrium residuals evaluated at the computed zeros of Q_{2m}.
inline EquilibriumReport equilibrium_residual(int m, const UvarovParams& params,
                                              const RecurrenceTable& tab) {
    ZeroSet y = zeros_Q(2 * m, params, tab);
    return equilibrium_residual_at(y.values, m, params, tab);
}

/// One (side, index) entry of the mass-limit study of the zeros of Q_{2m}.
/// For a simple nonzero limit point g the observed product is
///   left:  M (g - y_l(M)),   right: M (y_r(M) - g),
/// and the predicted limit is -/+ F_{2m}(g) / (K_{2m-1}(0,0) G'(g)) with G'
/// the derivative of the full G_{2m} at g (the sided split polynomial alone
/// misses the opposite-side factor; the brute-force limit fixes the choice).
/// The two captured zeros converge like M^(-1/2); for those the reported
/// product is M y^2 with its own finite limit.
struct LimitRateEntry {
    int m;
    double t;
    char side;   // 'l' or 'r'
    int index;   // 1-based zero index within the degree-2m set
    bool captured = false;
    Real g;
    std::vector<std::pair<double, Real>> observed;  // (M, product)
    Real predicted;
};

struct MonotonicReport {
    bool interlacing_ok = true;
    int interlacing_violation_M_index = -1;
    bool monotone_ok = true;
    Real max_limit_gap;  // max |y(M_last) - g| over all zeros
    std::vector<LimitRateEntry> rates;
};

/// Checks, for each M in the grid: the interlacing chain
///   x_l < y_l < g_l (left), g_r < y_r < x_r (right),
/// monotone motion of every zero in M (left up, right down), convergence to
/// the g limit points, and the rate products above.
inline MonotonicReport uvarov_monotonic_report(int m, const Real& t,
                                               const std::vector<Real>& M_grid,
                                               const RecurrenceTable& tab) {
    if (m < 1) throw FreudError("uvarov_monotonic_report: m must be >= 1");
    if (M_grid.empty()) throw FreudError("uvarov_monotonic_report: empty M grid");
    const int n = 2 * m;
    MonotonicReport rep;
    rep.max_limit_gap = 0;

    std::vector<Real> x = zeros_F(n, tab).values;
    std::vector<Real> g = g_zeros(m, tab);  // g[m-1] = g[m] = 0
    Real K = kernel00(2 * m - 1, tab);

    auto g_prime_full = [&](int idx) {
        // Derivative of the monic polynomial with zero multiset g at g[idx].
        Real p = 1;
        for (int j = 0; j < n; ++j)
            if (j != idx) p *= g[idx] - g[j];
        return p;
    };

    std::vector<std::vector<Real>> ys;
    for (std::size_t gi = 0; gi < M_grid.size(); ++gi) {
        UvarovParams params{t, M_grid[gi]};
        std::vector<Real> y = zeros_Q(n, params, tab).values;
        ys.push_back(y);
        for (int k = 0; k < n && rep.interlacing_ok; ++k) {
            bool left = k < m;
            bool ok;
            if (M_grid[gi] == 0)
                ok = true;  // y == x exactly; the chain starts moving once M > 0
            else if (left)
                ok = x[k] < y[k] && (k == m - 1 ? y[k] < 0 : y[k] < g[k]);
            else
                ok = y[k] < x[k] && (k == m ? y[k] > 0 : y[k] > g[k]);
            if (!ok) {
                rep.interlacing_ok = false;
                rep.interlacing_violation_M_index = static_cast<int>(gi);
            }
        }
    }

    for (std::size_t gi = 0; gi + 1 < ys.size(); ++gi) {
        if (!(M_grid[gi] < M_grid[gi + 1]))
            throw FreudError("uvarov_monotonic_report: M grid must be strictly increasing");
        for (int k = 0; k < n; ++k) {
            bool ok = k < m ? ys[gi][k] < ys[gi + 1][k] : ys[gi][k] > ys[gi + 1][k];
            if (!ok) rep.monotone_ok = false;
        }
    }

    for (int k = 0; k < n; ++k) {
        bool captured = (k == m - 1 || k == m);
        Real gap = abs(ys.back()[k] - g[k]);
        if (gap > rep.max_limit_gap) rep.max_limit_gap = gap;
        LimitRateEntry entry;
        entry.m = m;
        entry.t = to_double(t);
        entry.side = k < m ? 'l' : 'r';
        entry.index = k + 1;
        entry.captured = captured;
        entry.g = g[k];
        if (captured) {
            entry.predicted = abs(eval_F(n, Real(0), tab)) / K;
            for (int j = 0; j < n; ++j)
                if (j != m - 1 && j != m) entry.predicted /= abs(g[j]);
            for (std::size_t gi = 0; gi < ys.size(); ++gi)
                if (M_grid[gi] > 0)
                    entry.observed.emplace_back(to_double(M_grid[gi]),
                                                M_grid[gi] * ys[gi][k] * ys[gi][k]);
        } else {
            Real pred = eval_F(n, g[k], tab) / (K * g_prime_full(k));
            entry.predicted = k < m ? pred : -pred;
            for (std::size_t gi = 0; gi < ys.size(); ++gi)
                if (M_grid[gi] > 0)
                    entry.observed.emplace_back(
                        to_double(M_grid[gi]),
                        k < m ? M_grid[gi] * (g[k] - ys[gi][k]) : M_grid[gi] * (ys[gi][k] - g[k]));
        }
        rep.rates.push_back(std::move(entry));
    }
    return rep;
}

}  // namespace freud
