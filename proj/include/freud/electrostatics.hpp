#pragma once

#include <array>
#include <complex>
#include <vector>

#include "freud/uvarov.hpp"

namespace freud {

/// The biquadratic external-field polynomial
///   u(x,t;2m) = 4 b x^4 + 4([a^2 b - t] b + a_+^2) x^2 + h,
/// with b = b_{2m}, a^2 = a_{2m}^2, a_+^2 = a_{2m+1}^2 and
///   h = (4 a^2 [a^2 + a_-^2 - t][b - 1] - 1)(b - 1).
/// Odd coefficients are zero by construction; M = 0 forces h = 0 and b = 1.
struct UPoly {
    int m = 0;
    Real c4, c2, c0;
    std::array<std::complex<double>, 4> roots;  // closed-form quartic roots

    Real operator()(const Real& x) const {
        Real x2 = x * x;
        return (c4 * x2 + c2) * x2 + c0;
    }
    Real derivative(const Real& x) const { return (4 * c4 * x * x + 2 * c2) * x; }
};

/// The roots come from the quadratic in x^2 followed by square roots, which
/// is exact for a biquadratic. No claim is enforced about their type: some
/// parameter rows genuinely produce four real roots.
inline UPoly build_u(int m, const UvarovParams& params, const RecurrenceTable& tab) {
    if (m < 1) throw FreudError("build_u: m must be >= 1");
    if (2 * m + 1 > tab.n_max) throw FreudError("build_u: table too small for m");
    const UvarovTable& uv = uvarov_cache(params, tab);
    const Real& t = tab.t;
    const Real a = tab.a_sq[2 * m];
    const Real am = tab.a_sq[2 * m - 1];
    const Real ap = tab.a_sq[2 * m + 1];
    const Real b = uv.b[2 * m];

    UPoly u;
    u.m = m;
    u.c4 = 4 * b;
    u.c2 = 4 * ((a * b - t) * b + ap);
    u.c0 = (4 * a * (a + am - t) * (b - 1) - 1) * (b - 1);

    // Solve c4 z^2 + c2 z + c0 = 0, z = x^2.
    Real disc = u.c2 * u.c2 - 4 * u.c4 * u.c0;
    std::complex<double> z1, z2;
    if (disc >= 0) {
        Real root = sqrt(disc);
        // Avoid the cancelling branch of the quadratic formula.
        Real q = u.c2 >= 0 ? Real(-(u.c2 + root) / 2) : Real(-(u.c2 - root) / 2);
        z1 = std::complex<double>(to_double(q / u.c4), 0);
        z2 = std::complex<double>(u.c0 == 0 ? 0.0 : to_double(u.c0 / q), 0);
    } else {
        double re = to_double(-u.c2 / (2 * u.c4));
        double im = to_double(sqrt(-disc) / (2 * u.c4));
        z1 = {re, im};
        z2 = {re, -im};
    }
    std::complex<double> r1 = std::sqrt(z1), r2 = std::sqrt(z2);
    u.roots = {r1, -r1, r2, -r2};
    return u;
}

/// Per-zero gradient of the total energy at the zeros of Q_{2m}:
///   E_i = sum_{j != i} 1/(y_j - y_i) + u'(y_i)/(2 u(y_i)) - 1/y_i
///         + 2 (y_i^3 - t y_i).
/// Vanishes at equilibrium. u(y_i) = 0 would be a pole collision and is
/// reported as an error instead of dividing through.
struct EquilibriumReport {
    std::vector<Real> zeros;
    std::vector<Real> residuals;
    Real max_abs;
};

// zeros_Q is provided by zeros.hpp; declared here to keep this header usable
// on its own for build_u.
struct ZeroSet;
ZeroSet zeros_Q(int n, const UvarovParams& params, const RecurrenceTable& tab);
const std::vector<Real>& zero_values(const ZeroSet& zs);

inline EquilibriumReport equilibrium_residual_at(const std::vector<Real>& y, int m,
                                                 const UvarovParams& params,
                                                 const RecurrenceTable& tab) {
    UPoly u = build_u(m, params, tab);
    EquilibriumReport rep;
    rep.zeros = y;
    rep.max_abs = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        Real uy = u(y[i]);
        if (abs(uy) < Real(1e-40))
            throw FreudError("equilibrium_residual: u vanishes at zero index " + std::to_string(i));
        Real E = u.derivative(y[i]) / (2 * uy) - 1 / y[i] + 2 * (y[i] * y[i] * y[i] - tab.t * y[i]);
        for (std::size_t j = 0; j < y.size(); ++j)
            if (j != i) E += 1 / (y[j] - y[i]);
        rep.residuals.push_back(E);
        if (abs(E) > rep.max_abs) rep.max_abs = abs(E);
    }
    return rep;
}

/// External potential of the zero configuration:
///   V_ext(x) = (1/2) ln u(x,t;2m) - (1/2) ln(x^2 w_t(x)),
/// short range (charges at the roots of u) plus long range (the weight).
inline Real external_potential(const Real& x, int m, const UvarovParams& params,
                               const RecurrenceTable& tab) {
    if (abs(x) == 0) throw FreudError("external_potential: x = 0 not allowed");
    UPoly u = build_u(m, params, tab);
    Real ux = u(x);
    if (!(ux > 0)) throw FreudError("external_potential: u(x) <= 0, log undefined here");
    return (log(ux) - log(x * x * eval_weight(x, tab.t))) / 2;
}

inline Real short_range_potential(const Real& x, int m, const UvarovParams& params,
                                  const RecurrenceTable& tab) {
    UPoly u = build_u(m, params, tab);
    Real ux = u(x);
    if (!(ux > 0)) throw FreudError("short_range_potential: u(x) <= 0");
    return log(ux) / 2;
}

inline Real long_range_potential(const Real& x, const RecurrenceTable& tab) {
    if (abs(x) == 0) throw FreudError("long_range_potential: x = 0 not allowed");
    return -log(x * x * eval_weight(x, tab.t)) / 2;
}

/// Analytic d/dx of V_ext, for the finite-difference consistency check.
inline Real external_potential_gradient(const Real& x, int m, const UvarovParams& params,
                                        const RecurrenceTable& tab) {
    if (abs(x) == 0) throw FreudError("external_potential_gradient: x = 0 not allowed");
    UPoly u = build_u(m, params, tab);
    return u.derivative(x) / (2 * u(x)) - 1 / x + 2 * (x * x * x - tab.t * x);
}

}  // namespace freud
