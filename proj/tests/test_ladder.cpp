#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace freud;
using testutil::Rng;

namespace {
const RecurrenceTable& tab1() { return testutil::table(1.0, 14); }
}  // namespace

TEST_CASE("ladder: odd index carries no 1/x term") {
    UvarovParams p{Real(1), Real("0.5")};
    LadderCoeffs L = build_ladder(5, p, tab1());
    // b_5 = 1, so C1 = -4 a^2 x^2 and D1 = 4 a^2 x (x^2 - t + a^2 + a_+^2)
    Real a = tab1().a_sq[5];
    CHECK(L.D1.min_exp() >= 1);
    CHECK(testutil::rel_diff(L.C1.coeff(2), -4 * a) < 1e-60);
    CHECK(L.C1.coeff(0) == 0);
    CHECK(testutil::rel_diff(L.D1.coeff(3), 4 * a) < 1e-60);
    Real d1_lin = 4 * a * (tab1().a_sq[6] + tab1().a_sq[5] - tab1().t);
    CHECK(testutil::rel_diff(L.D1.coeff(1), d1_lin) < 1e-55);
}

TEST_CASE("ladder: Delta is b_{n-1} x^2 with no constant term") {
    UvarovParams p{Real(1), Real("0.5")};
    for (int n : {3, 4, 5, 8}) {
        LadderCoeffs L = build_ladder(n, p, tab1());
        UvarovTable uv = build_uvarov(p, tab1());
        CHECK(L.Delta.min_exp() == 2);
        CHECK(L.Delta.max_exp() == 2);
        CHECK(L.Delta.coeff(2) == uv.b[n - 1]);
    }
}

TEST_CASE("ladder: M = 0 lowering degenerates to the structure relation") {
    UvarovParams p{Real(1), Real(0)};
    Rng rng(53);
    for (int n : {3, 4, 6}) {
        LadderCoeffs L = build_ladder(n, p, tab1());
        Real a2 = tab1().a_sq[n];
        for (int i = 0; i < 5; ++i) {
            Real x(rng.uniform_away_from_zero(-2, 2, 0.1));
            // Psi21/x^2 = 4 a^2 x = -a(x); Psi11/x^2 = b(x) of the structure
            // relation, so the lowering identity IS that relation at M = 0.
            Real b_struct = 4 * a2 * (x * x - tab1().t + tab1().a_sq[n] + tab1().a_sq[n + 1]);
            CHECK(testutil::rel_diff(L.Psi21(x) / (x * x), 4 * a2 * x) < 1e-55);
            CHECK(testutil::rel_diff(L.Psi11(x) / (x * x), b_struct) < 1e-55);
            Real lhs = L.Psi21(x) * eval_F(n, x, tab1()) + L.Delta(x) * eval_F_prime(n, x, tab1());
            Real rhs = L.Psi11(x) * eval_F(n - 1, x, tab1());
            Real scale = abs(lhs) + abs(rhs) + 1;
            CHECK(abs(lhs - rhs) <= Real("1e-9") * scale);
        }
    }
}

TEST_CASE("ladder: identity residuals across the mass grid") {
    Rng rng(59);
    for (double M : {0.0, 0.5, 5.0}) {
        UvarovParams p{Real(1), Real(M)};
        for (int n : {2, 4, 5, 7, 9}) {
            for (int i = 0; i < 20; ++i) {
                Real x(rng.uniform_away_from_zero(0.1, 2, 0.1));
                if (i % 2 == 0) x = -x;
                LadderResiduals r = ladder_identity_residual(n, x, p, tab1());
                CHECK(r.lowering <= Real("1e-8"));
                CHECK(r.raising <= Real("1e-8"));
            }
        }
    }
    CHECK_THROWS_AS(ladder_identity_residual(4, Real(0), UvarovParams{Real(1), Real(1)}, tab1()),
                    FreudError);
}

TEST_CASE("ladder: inversion identities") {
    Rng rng(61);
    UvarovParams p{Real(1), Real("0.5")};
    UvarovTable uv = build_uvarov(p, tab1());
    for (int n : {3, 4, 6, 9}) {
        const Real bm = uv.b[n - 1];
        const Real bn = uv.b[n];
        const Real a = tab1().a_sq[n];
        for (int i = 0; i < 10; ++i) {
            Real x(rng.uniform_away_from_zero(-2, 2, 0.05));
            Real f = eval_F(n, x, tab1()), fm = eval_F(n - 1, x, tab1());
            Real q = eval_Q(n, x, p, tab1()), qm = eval_Q(n - 1, x, p, tab1());
            Real r1 = x * bm * f - (x * bm * q - a * (bn - 1) * qm);
            Real r2 = x * bm * fm - ((bm - 1) * q + x * qm);
            Real scale = abs(x * bm * f) + abs(x * bm * fm) + 1;
            CHECK(abs(r1) <= Real("1e-9") * scale);
            CHECK(abs(r2) <= Real("1e-9") * scale);
        }
    }
}

TEST_CASE("ode: symbolic build annihilates Q and fixes the orientation") {
    UvarovParams p{Real(1), Real("0.5")};
    OdeCoeffs ode = build_ode(4, p, tab1());
    CHECK(ode.wronskian_sign == 1);
    Rng rng(67);
    for (int i = 0; i < 50; ++i) {
        Real x(rng.uniform_away_from_zero(-2, 2, 0.02));
        CHECK(ode_residual(ode, x, p, tab1()) <= Real("1e-7"));
    }
}

TEST_CASE("ode: negative powers cancel and parity holds") {
    for (double M : {0.0, 0.5, 5.0}) {
        UvarovParams p{Real(1), Real(M)};
        for (int n = 2; n <= 9; ++n) {
            OdeCoeffs ode = build_ode(n, p, tab1());
            CHECK(ode.A.min_exp() >= 0);
            CHECK(ode.B.min_exp() >= 0);
            CHECK(ode.C.min_exp() >= 0);
            Real scaleA = ode.A.magnitude(), scaleB = ode.B.magnitude(), scaleC = ode.C.magnitude();
            for (const auto& [e, c] : ode.A.items())
                if (e % 2 == 1) CHECK(abs(c) <= Real("1e-10") * scaleA);
            for (const auto& [e, c] : ode.B.items())
                if (e % 2 == 0) CHECK(abs(c) <= Real("1e-10") * scaleB);
            for (const auto& [e, c] : ode.C.items())
                if (e % 2 == 1) CHECK(abs(c) <= Real("1e-10") * scaleC);
        }
    }
}

TEST_CASE("ode: even-degree closed forms match the symbolic build") {
    for (double t : {0.5, 1.0, 2.0}) {
        const RecurrenceTable& tab = testutil::table(t, 14);
        for (double M : {0.0, 0.5, 5.0}) {
            UvarovParams p{Real(t), Real(M)};
            for (int n : {2, 4, 6, 8}) {
                OdeCoeffs sym = build_ode(n, p, tab);
                OdeCoeffs closed = table_ode_coeffs(n, p, tab);
                for (const auto& [e, c] : sym.A.items())
                    CHECK(abs(c - closed.A.coeff(e)) <= Real("1e-8") * (abs(c) + Real("1e-20")));
                for (const auto& [e, c] : sym.B.items())
                    CHECK(abs(c - closed.B.coeff(e)) <= Real("1e-8") * (abs(c) + Real("1e-20")));
            }
        }
    }
}

TEST_CASE("ode: general-n closed form vs symbolic build, discrepancies logged") {
    // The any-parity closed form disagrees with the symbolic build in exactly
    // one coefficient (the x^4 entry of A) at even degree; the symbolic build
    // is authoritative. This test documents the mismatch instead of asserting
    // it away.
    UvarovParams p{Real(1), Real("0.5")};
    OdeCoeffs sym = build_ode(4, p, tab1());
    OdeCoeffs closed = table_ode_coeffs(4, p, tab1(), OdeTable::general);
    int mismatches = 0;
    for (const auto& [e, c] : sym.A.items()) {
        if (abs(c - closed.A.coeff(e)) > Real("1e-8") * (abs(c) + Real("1e-20"))) {
            ++mismatches;
            WARN("general-table A coefficient differs at power " << e << ": built "
                                                                 << to_double(c) << " vs closed form "
                                                                 << to_double(closed.A.coeff(e)));
            CHECK(e == 4);  // the one known deviation
        }
    }
    CHECK(mismatches == 1);
    for (const auto& [e, c] : sym.B.items())
        CHECK(abs(c - closed.B.coeff(e)) <= Real("1e-8") * (abs(c) + Real("1e-20")));

    // At odd n the (b_n - 1) factors kill the bad entry and the general
    // table agrees everywhere.
    OdeCoeffs sym5 = build_ode(5, p, tab1());
    OdeCoeffs closed5 = table_ode_coeffs(5, p, tab1(), OdeTable::general);
    for (const auto& [e, c] : sym5.A.items())
        CHECK(abs(c - closed5.A.coeff(e)) <= Real("1e-8") * (abs(c) + Real("1e-20")));
    for (const auto& [e, c] : sym5.B.items())
        CHECK(abs(c - closed5.B.coeff(e)) <= Real("1e-8") * (abs(c) + Real("1e-20")));
}

TEST_CASE("ode: odd degree reduces to the plain-family equation") {
    UvarovParams p{Real(1), Real("0.5")};
    Rng rng(71);
    OdeCoeffs ode = build_ode(5, p, tab1());
    for (int i = 0; i < 10; ++i) {
        Real x(rng.uniform_away_from_zero(-2, 2, 0.1));
        Real den = x * x - tab1().t + tab1().a_sq[5] + tab1().a_sq[6];
        Real R = -4 * (x * x * x - tab1().t * x) - 2 * x / den;
        Real sum3 = tab1().a_sq[4] + tab1().a_sq[5] + tab1().a_sq[6];
        Real S = 4 * tab1().a_sq[5] *
                 (4 * x * x * (sum3 - tab1().t) - 2 * x * x / den +
                  4 * (tab1().a_sq[5] + tab1().a_sq[6] - tab1().t) *
                      (tab1().a_sq[4] + tab1().a_sq[5] - tab1().t) +
                  1);
        CHECK(testutil::rel_diff(ode.B(x) / ode.A(x), R) < 1e-9);
        CHECK(testutil::rel_diff(ode.C(x) / ode.A(x), S) < 1e-9);
    }
    // M = 0 at even degree also collapses to the plain equation
    OdeCoeffs ode4 = build_ode(4, UvarovParams{Real(1), Real(0)}, tab1());
    for (int i = 0; i < 5; ++i) {
        Real x(rng.uniform_away_from_zero(-2, 2, 0.1));
        Real den = x * x - tab1().t + tab1().a_sq[4] + tab1().a_sq[5];
        Real R = -4 * (x * x * x - tab1().t * x) - 2 * x / den;
        Real sum3 = tab1().a_sq[3] + tab1().a_sq[4] + tab1().a_sq[5];
        Real S = 4 * tab1().a_sq[4] *
                 (4 * x * x * (sum3 - tab1().t) - 2 * x * x / den +
                  4 * (tab1().a_sq[4] + tab1().a_sq[5] - tab1().t) *
                      (tab1().a_sq[3] + tab1().a_sq[4] - tab1().t) +
                  1);
        CHECK(testutil::rel_diff(ode4.B(x) / ode4.A(x), R) < 1e-9);
        CHECK(testutil::rel_diff(ode4.C(x) / ode4.A(x), S) < 1e-9);
    }
}

TEST_CASE("ode: even-index closed form has empty x^2 and x^0 rows") {
    UvarovParams p{Real(1), Real(5)};
    for (int n : {2, 4, 6}) {
        OdeCoeffs closed = table_ode_coeffs(n, p, tab1(), OdeTable::even);
        CHECK(closed.A.coeff(2) == 0);
        CHECK(closed.A.coeff(0) == 0);
        CHECK(closed.B.coeff(1) == 0);
        CHECK(closed.A.min_exp() == 4);
    }
}

TEST_CASE("ode: at M = 0 the two closed-form variants coincide") {
    UvarovParams p{Real(1), Real(0)};
    for (int n : {2, 4, 6, 8}) {
        OdeCoeffs gen = table_ode_coeffs(n, p, tab1(), OdeTable::general);
        OdeCoeffs even = table_ode_coeffs(n, p, tab1(), OdeTable::even);
        OdeCoeffs sym = build_ode(n, p, tab1());
        for (const auto& [e, c] : sym.A.items()) {
            CHECK(abs(gen.A.coeff(e) - c) <= Real("1e-10") * (abs(c) + Real("1e-20")));
            CHECK(abs(even.A.coeff(e) - c) <= Real("1e-10") * (abs(c) + Real("1e-20")));
        }
        for (const auto& [e, c] : sym.B.items()) {
            CHECK(abs(gen.B.coeff(e) - c) <= Real("1e-10") * (abs(c) + Real("1e-20")));
            CHECK(abs(even.B.coeff(e) - c) <= Real("1e-10") * (abs(c) + Real("1e-20")));
        }
    }
}

TEST_CASE("ode: plain-family holonomic residuals") {
    Rng rng(73);
    for (int i = 0; i < 20; ++i) {
        Real x(rng.uniform_away_from_zero(-2, 2, 0.1));
        CHECK(holonomic_F_residual(3, x, tab1()) <= Real("1e-9"));
        CHECK(holonomic_F_residual(6, x, tab1()) <= Real("1e-9"));
    }
}

TEST_CASE("ode: perturbing a coefficient is detected") {
    UvarovParams p{Real(1), Real("0.5")};
    OdeCoeffs ode = build_ode(4, p, tab1());
    // bump the leading A coefficient by 1%
    LaurentPoly bump = LaurentPoly::term(ode.A.coeff(8) / 100, 8);
    OdeCoeffs broken = ode;
    broken.A += bump;
    Real x("0.9");
    CHECK(ode_residual(broken, x, p, tab1()) > Real("1e-4"));
}
