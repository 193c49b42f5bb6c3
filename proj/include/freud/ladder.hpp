#pragma once

#include <string>
#include <vector>

#include "freud/laurent.hpp"
#include "freud/uvarov.hpp"

namespace freud {

/// The eight connection coefficients tying (Q_n, Q_n', Q_{n-1}, Q_{n-1}')
/// to (F_n, F_{n-1}), their 2x2 combinations Psi_ij = A_i D_j - C_j B_i,
/// and the Cramer determinant Delta. D1 and C2 genuinely carry 1/x terms;
/// every composite used downstream is polynomial after cancellation.
struct LadderCoeffs {
    int n = 0;
    LaurentPoly A1, B1, C1, D1, A2, B2, C2, D2;
    LaurentPoly Delta;
    LaurentPoly Psi11, Psi12, Psi21, Psi22;
};

inline LadderCoeffs build_ladder(int n, const UvarovParams& params, const RecurrenceTable& tab) {
    if (n < 1 || n > tab.n_max - 1)
        throw FreudError("build_ladder: n out of range [1, n_max-1], got " + std::to_string(n));
    const UvarovTable& uv = uvarov_cache(params, tab);
    const Real& t = tab.t;
    const Real a = tab.a_sq[n];
    const Real am = tab.a_sq[n - 1];
    const Real ap = tab.a_sq[n + 1];
    const Real bn = uv.b[n];
    const Real bm = n >= 1 ? uv.b[n - 1] : Real(1);

    LadderCoeffs L;
    L.n = n;
    L.A1 = LaurentPoly::term(Real(1), 1);
    L.B1 = LaurentPoly::constant(a * (bn - 1));
    L.C1 = LaurentPoly(0, {-4 * a * (bn - 1) * (am + a - t), Real(0), -4 * a * bn});
    L.D1 = LaurentPoly(-1, {-a * (bn - 1), Real(0), 4 * a * (ap + bn * (a - t)), Real(0), 4 * a * bn});
    L.A2 = LaurentPoly::constant(1 - bm);
    L.B2 = LaurentPoly::term(bm, 1);
    L.C2 = LaurentPoly(-1, {bm - 1, Real(0), 4 * a * (bm - 1) - 4 * bm * (am + a - t), Real(0), -4 * bm});
    L.D2 = LaurentPoly(0, {4 * a * (1 - bm) * (a + ap - t), Real(0),
                           4 * a * (1 - bm) + 4 * bm * (a - t), Real(0), 4 * bm});
    // One of b_n - 1, b_{n-1} - 1 vanishes exactly, so Delta = b_{n-1} x^2.
    L.Delta = LaurentPoly(0, {a * (bn - 1) * (bm - 1), Real(0), bm});

    auto psi = [](const LaurentPoly& Ai, const LaurentPoly& Bi, const LaurentPoly& Cj,
                  const LaurentPoly& Dj) { return Ai * Dj - Cj * Bi; };
    const Real trim = pow(Real(10), -(tab.working_digits - 15));
    L.Psi11 = psi(L.A1, L.B1, L.C1, L.D1).trimmed(trim);
    L.Psi12 = psi(L.A1, L.B1, L.C2, L.D2).trimmed(trim);
    L.Psi21 = psi(L.A2, L.B2, L.C1, L.D1).trimmed(trim);
    L.Psi22 = psi(L.A2, L.B2, L.C2, L.D2).trimmed(trim);
    return L;
}

/// Normalized residuals of the lowering and raising relations
///   Psi21 Q_n + Delta Q_n'      = Psi11 Q_{n-1}
///   Psi12 Q_{n-1} - Delta Q_{n-1}' = Psi22 Q_n
/// with analytic derivatives. Each residual is |mismatch| / (term scale).
struct LadderResiduals {
    Real lowering;
    Real raising;
};

inline LadderResiduals ladder_identity_residual(int n, const Real& x, const UvarovParams& params,
                                                const RecurrenceTable& tab) {
    if (abs(x) == 0) throw FreudError("ladder_identity_residual: x = 0 not allowed");
    LadderCoeffs L = build_ladder(n, params, tab);
    Jet2 qn = eval_Q_jet(n, x, params, tab);
    Jet2 qm = eval_Q_jet(n - 1, x, params, tab);

    Real lo1 = L.Psi21(x) * qn.value, lo2 = L.Delta(x) * qn.d1, lo3 = L.Psi11(x) * qm.value;
    Real ra1 = L.Psi12(x) * qm.value, ra2 = L.Delta(x) * qm.d1, ra3 = L.Psi22(x) * qn.value;
    LadderResiduals r;
    r.lowering = abs(lo1 + lo2 - lo3) / (abs(lo1) + abs(lo2) + abs(lo3) + Real(1e-30));
    r.raising = abs(ra1 - ra2 - ra3) / (abs(ra1) + abs(ra2) + abs(ra3) + Real(1e-30));
    return r;
}

/// Coefficients of the second order equation A Q'' + B Q' + C Q = 0.
struct OdeCoeffs {
    int n = 0;
    LaurentPoly A, B, C;
    int wronskian_sign = +1;  // +1: W{f,g} = f g' - f' g; -1: the opposite
};

namespace detail {

inline LaurentPoly wronskian(const LaurentPoly& f, const LaurentPoly& g, int sign) {
    LaurentPoly w = f * g.derivative() - f.derivative() * g;
    return sign >= 0 ? w : -w;
}

inline OdeCoeffs assemble_ode(const LadderCoeffs& L, int sign, const Real& trim) {
    OdeCoeffs ode;
    ode.n = L.n;
    ode.wronskian_sign = sign;
    ode.A = (L.Psi11 * L.Delta * L.Delta).trimmed(trim);
    ode.B = (L.Delta * (wronskian(L.Psi11, L.Delta, sign) + L.Psi11 * (L.Psi21 - L.Psi12))).trimmed(trim);
    LaurentPoly det = L.Psi11 * L.Psi22 - L.Psi12 * L.Psi21;
    ode.C = (L.Delta * wronskian(L.Psi11, L.Psi21, sign) + L.Psi11 * det).trimmed(trim);
    return ode;
}

inline Real ode_residual_at(const OdeCoeffs& ode, const Jet2& q, const Real& x) {
    Real t1 = ode.A(x) * q.d2, t2 = ode.B(x) * q.d1, t3 = ode.C(x) * q.value;
    return abs(t1 + t2 + t3) / (abs(t1) + abs(t2) + abs(t3) + Real(1e-30));
}

}  // namespace detail

/// Symbolic assembly of A, B, C from the ladder determinants. The source
/// never defines the Wronskian orientation, so it is fixed empirically:
/// build with f g' - f' g, check the equation annihilates Q_n at probe
/// points, and flip once if it does not. The winning sign is recorded on
/// the result. Negative powers must cancel; leftovers beyond 1e-8 of the
/// coefficient scale signal a transcription error and throw.
inline OdeCoeffs build_ode(int n, const UvarovParams& params, const RecurrenceTable& tab) {
    LadderCoeffs L = build_ladder(n, params, tab);
    const Real trim = pow(Real(10), -(tab.working_digits - 20));

    OdeCoeffs ode;
    Real best = 0;
    for (int attempt = 0; attempt < 2; ++attempt) {
        int sign = attempt == 0 ? +1 : -1;
        OdeCoeffs cand = detail::assemble_ode(L, sign, trim);
        Real worst = 0;
        for (double p : {0.37, 0.93, 1.51}) {
            Real x(p);
            Real r = detail::ode_residual_at(cand, eval_Q_jet(n, x, params, tab), x);
            if (r > worst) worst = r;
        }
        if (attempt == 0 || worst < best) {
            ode = cand;
            best = worst;
        }
        if (worst < Real(1e-20)) break;
    }

    for (const LaurentPoly* p : {&ode.A, &ode.B, &ode.C}) {
        if (!p->is_zero() && p->min_exp() < 0) {
            Real leftover = 0;
            for (auto& [e, c] : p->items())
                if (e < 0 && abs(c) > leftover) leftover = abs(c);
            if (leftover > Real(1e-8) * p->magnitude())
                throw FreudError("build_ode: negative powers failed to cancel at n = " +
                                 std::to_string(n));
        }
    }
    return ode;
}

/// Closed-form coefficient tables for A and B. `general` is the any-parity
/// form; `even` the reduced b_{n-1} = 1 form valid at even degrees. C has no
/// closed form here and is taken from build_ode.
enum class OdeTable { general, even };

inline OdeCoeffs table_ode_coeffs(int n, const UvarovParams& params, const RecurrenceTable& tab,
                                  OdeTable which) {
    if (n < 1 || n > tab.n_max - 1)
        throw FreudError("table_ode_coeffs: n out of range [1, n_max-1]");
    const UvarovTable& uv = uvarov_cache(params, tab);
    const Real& t = tab.t;
    const Real a = tab.a_sq[n];
    const Real am = tab.a_sq[n - 1];
    const Real ap = tab.a_sq[n + 1];
    const Real bn = uv.b[n];
    const Real bm = uv.b[n - 1];

    OdeCoeffs ode;
    ode.n = n;
    std::vector<Real> A(9, Real(0));   // ascending powers 0..8
    std::vector<Real> B(12, Real(0));  // ascending powers 0..11

    if (which == OdeTable::even) {
        if (n % 2 != 0)
            throw FreudError("table_ode_coeffs: even-index table requested at odd n");
        A[8] = 4 * a * bn;
        A[6] = 4 * a * (ap + bn * (a * bn - t));
        A[4] = -a * (1 - 4 * a * (a + am - t) * (bn - 1)) * (bn - 1);
        B[11] = -16 * a * bn;
        B[9] = -16 * a * (ap + bn * (a * bn - 2 * t));
        B[7] = -4 * a *
               (1 - 4 * t * ap + 4 * a * a * (bn - 1) * (bn - 1) + bn + 4 * t * t * bn +
                4 * a * (am * (bn - 1) * (bn - 1) - t * (1 + 2 * (bn - 1) * bn)));
        B[5] = -4 * t * a * (1 - 4 * a * (a + am - t) * (bn - 1)) * (bn - 1);
        B[3] = -2 * a * (1 - 4 * a * (a + am - t) * (bn - 1)) * (bn - 1);
    } else {
        A[8] = 4 * a * bn * bm * bm;
        A[6] = 4 * a * bm * (bn * (a * (2 * (1 - bn) + bm * (3 * bn - 2)) - t * bm) + ap * bm);
        A[4] = a * (bn - 1) *
               (4 * bm * a * (bm * ((bn - 1) * am + (1 - 3 * bm) * t) + 2 * (bm - 1) * ap + 2 * t * bn) +
                4 * a * a *
                    ((3 * bn * bn - 1) * bm * bm + 2 * bn * bm * (1 - 2 * bn) + (bn - 1) * bn) -
                bm * bm);
        A[2] = 2 * a * a * (bm - 1) * (bn - 1) * (bn - 1) *
               (2 * a *
                    (bn * (t - bn * a) +
                     bm * (2 * (bn - 1) * am + a * (bn * (bn + 2) - 2) + t * (2 - 3 * bn)) +
                     ap * (bm - 1)) -
                bm);
        A[0] = -a * a * a * (bm - 1) * (bm - 1) * (bn - 1) * (bn - 1) * (bn - 1) *
               (1 - 4 * a * (bn - 1) * (am + a - t));
        B[11] = -16 * a * bn * bm * bm;
        B[9] = -16 * a * bm * (bn * (a * (bm * (3 * bn - 2) + 2 * (1 - bn)) - 2 * t * bm) + bm * ap);
        B[7] = -4 * a *
               (bm * bm * (1 - 4 * t * ap + 4 * t * t * bn + bn) +
                4 * bm * a *
                    (bm * ((bn - 1) * (bn - 1) * am + t * (6 * (1 - bn) * bn - 1)) +
                     2 * (bm - 1) * (bn - 1) * ap + 4 * t * (bn - 1) * bn) +
                4 * (bn - 1) * a * a *
                    ((3 * bn * bn - 1) * bm * bm + 2 * bn * (1 - 2 * bn) * bm + (bn - 1) * bn));
        B[5] = -4 * (bn - 1) * a *
               (2 * bm * a *
                    (bm * (-2 * t * (bn - 1) * am + (6 * t * t + 1) * bn - 2 * t * t + 1) -
                     4 * t * ap * (bm - 1) - (4 * t * t + 1) * bn - 1) +
                4 * a * a *
                    (2 * bm * (t * (1 - 2 * bn) * (1 - 2 * bn) - am * (bn - 1) * (bn - 1)) -
                     bm * bm * (-2 * am * (bn - 1) * (bn - 1) + t * bn * (6 * bn - 5) + t) +
                     ap * (bn - 1) * (bm - 1) * (bm - 1) - 2 * t * (bn - 1) * bn) +
                4 * a * a * a * (bm - 1) * (bn - 1) * (bm * (bn * (bn + 2) - 2) - bn * bn) +
                t * bm * bm);
        B[3] = -2 * a * (bn - 1) *
               (2 * a * a * (bn - 1) *
                    (-2 * bm * (-4 * t * am * (bn - 1) + 8 * t * t * bn + bn - 4 * t * t + 1) +
                     bm * bm * (-8 * t * am * (bn - 1) + 12 * t * t * bn + bn - 8 * t * t - 1) -
                     4 * t * ap * (bm - 1) * (bm - 1) + 4 * t * t * bn + bn + 1) -
                8 * a * a * a * (bm - 1) * (bn - 1) *
                    (-(bm - 1) * (am * (bn - 1) * (bn - 1) - 2 * t * bn * bn) -
                     t * (bm - 2 * bn + 1)) +
                4 * a * bm * (bn - 1) * (bm * (2 * t - am) - t) +
                8 * a * a * a * a * (bm - 1) * (bm - 1) * (bn - 1) * (bn - 1) * (bn - 1) + bm * bm);
        B[1] = -4 * a * a * (bm - 1) * (bn - 1) * (bn - 1) *
               (1 - 4 * a * (bn - 1) * (am + a - t)) * (t * a * (bm - 1) * (bn - 1) + bm);
    }

    ode.A = LaurentPoly(0, std::move(A));
    ode.B = LaurentPoly(0, std::move(B));
    ode.C = build_ode(n, params, tab).C;
    return ode;
}

/// Default closed-form choice: even degrees use the reduced table, odd the general one.
inline OdeCoeffs table_ode_coeffs(int n, const UvarovParams& params, const RecurrenceTable& tab) {
    return table_ode_coeffs(n, params, tab, n % 2 == 0 ? OdeTable::even : OdeTable::general);
}

/// Normalized residual |A Q'' + B Q' + C Q| / (|A Q''| + |B Q'| + |C Q| + eps).
inline Real ode_residual(const OdeCoeffs& ode, const Real& x, const UvarovParams& params,
                         const RecurrenceTable& tab) {
    if (abs(x) == 0) throw FreudError("ode_residual: x = 0 not allowed");
    return detail::ode_residual_at(ode, eval_Q_jet(ode.n, x, params, tab), x);
}

inline Real ode_residual(int n, const Real& x, const UvarovParams& params,
                         const RecurrenceTable& tab) {
    return ode_residual(build_ode(n, params, tab), x, params, tab);
}

/// Residual of the plain-family second order equation F_n'' + R F' + S F = 0,
/// with R and S obtained by eliminating F_{n-1} between the structure
/// relation and its derivative.
inline Real holonomic_F_residual(int n, const Real& x, const RecurrenceTable& tab) {
    detail::require_degree(n, tab.n_max - 1, "holonomic_F_residual");
    if (n < 1) throw FreudError("holonomic_F_residual: n must be >= 1");
    const Real& t = tab.t;
    Real den = x * x - t + tab.a_sq[n] + tab.a_sq[n + 1];
    if (abs(den) < Real(1e-25))
        throw FreudError("holonomic_F_residual: vanishing denominator");
    Real R = -4 * (x * x * x - t * x) - 2 * x / den;
    Real sum3 = tab.a_sq[n - 1] + tab.a_sq[n] + tab.a_sq[n + 1];
    Real S = 4 * tab.a_sq[n] *
             (4 * x * x * (sum3 - t) - 2 * x * x / den +
              4 * (tab.a_sq[n] + tab.a_sq[n + 1] - t) * (tab.a_sq[n - 1] + tab.a_sq[n] - t) + 1);
    Jet2 f = eval_F_jet(n, x, tab);
    Real t1 = f.d2, t2 = R * f.d1, t3 = S * f.value;
    return abs(t1 + t2 + t3) / (abs(t1) + abs(t2) + abs(t3) + Real(1e-30));
}

}  // namespace freud
