#pragma once

#include <vector>

#include "freud/quadrature.hpp"
#include "freud/real.hpp"

namespace freud {

/// Quartic Freud weight w_t(x) = exp(-x^4 + 2 t x^2).
/// Even in x by construction: the exponent is formed from x^2 only, so
/// w(x) == w(-x) bit for bit. Far out in the tails the result underflows
/// to 0, which is harmless for every use here (integrands vanish there).
inline Real eval_weight(const Real& x, const Real& t) {
    Real x2 = x * x;
    return exp((2 * t - x2) * x2);
}

/// |w'(x) - (-4x^3 + 4tx) w(x)| with w' approximated by a central
/// difference of step h. Checks the Pearson relation the weight satisfies;
/// the return value is O(h^2) times the local scale of w.
inline Real pearson_residual(const Real& x, const Real& t, const Real& h) {
    if (!(h > 0)) throw FreudError("pearson_residual: h must be positive");
    Real numeric = (eval_weight(x + h, t) - eval_weight(x - h, t)) / (2 * h);
    Real exact = (-4 * x * x * x + 4 * t * x) * eval_weight(x, t);
    return abs(numeric - exact);
}

/// Even raw moments mu[j] = integral of x^(2j) w_t(x) over the line.
struct MomentTable {
    Real t;
    std::vector<Real> mu;  // mu[j] = mu_{2j}, j = 0..K
    int working_digits = 80;
};

/// mu_0 and mu_2 by Gauss-Legendre on the truncated interval, the rest by
/// the forward recursion mu_{2j+4} = t mu_{2j+2} + (2j+1)/4 mu_{2j}
/// (integration by parts against the Pearson relation). The recursion
/// propagates the growing solution, so running it forward is stable.
/// mu_4 is recomputed by quadrature as a cross-check; disagreement means
/// the quadrature is misconfigured and is reported as an error.
inline MomentTable compute_moments(const Real& t, int K, const PrecisionConfig& cfg = {}) {
    validate(cfg);
    if (K < 2) throw FreudError("compute_moments: K must be >= 2");
    PrecisionScope scope(cfg.working_digits);
    const int order = cfg.quadrature_order > 0 ? cfg.quadrature_order : 260;
    const Real R = truncation_radius(t, cfg.working_digits);

    auto moment_by_quadrature = [&](int twoj) {
        return integrate_symmetric(
            [&](const Real& x) { return pow(x, twoj) * eval_weight(x, t); }, R, order,
            cfg.working_digits);
    };

    MomentTable table;
    table.t = t;
    table.working_digits = cfg.working_digits;
    table.mu.resize(K + 1);
    table.mu[0] = moment_by_quadrature(0);
    table.mu[1] = moment_by_quadrature(2);
    for (int j = 0; j + 2 <= K; ++j)
        table.mu[j + 2] = t * table.mu[j + 1] + Real(2 * j + 1) / 4 * table.mu[j];

    Real mu4_quad = moment_by_quadrature(4);
    Real rel = abs(mu4_quad - table.mu[2]) / table.mu[2];
    if (rel > pow(Real(10), -(cfg.working_digits - 10)))
        throw FreudError("compute_moments: mu_4 cross-check failed (relative " +
                         rel.str(3, std::ios_base::scientific) +
                         "); quadrature order or radius is insufficient");
    return table;
}

}  // namespace freud
