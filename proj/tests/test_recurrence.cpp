#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace freud;

TEST_CASE("recurrence: a_0^2 = 0 and a_1^2 = mu_2/mu_0") {
    const RecurrenceTable& tab = testutil::table(1.0, 12);
    CHECK(tab.a_sq[0] == 0);
    MomentTable mt = compute_moments(Real(1), 2, testutil::cfg());
    CHECK(testutil::rel_diff(tab.a_sq[1], mt.mu[1] / mt.mu[0]) < 1e-60);
}

TEST_CASE("recurrence: t = 0 coefficients against the gamma-function oracle") {
    const RecurrenceTable& tab = testutil::table(0.0, 8);
    Real a1 = tgamma(Real(3) / 4) / tgamma(Real(1) / 4);
    CHECK(testutil::rel_diff(tab.a_sq[1], a1) < 1e-60);
    // String equation at n = 1 with a_0^2 = 0 pins a_2^2 = 1/(4 a_1^2) - a_1^2.
    CHECK(testutil::rel_diff(tab.a_sq[2], 1 / (4 * a1) - a1) < 1e-55);
    // Frozen oracle values (12 digits), from the same closed forms.
    CHECK(to_double(tab.a_sq[1]) == Catch::Approx(0.337989120034).epsilon(1e-10));
    CHECK(to_double(tab.a_sq[2]) == Catch::Approx(0.401679659764).epsilon(1e-10));
}

TEST_CASE("recurrence: string equation residuals") {
    const RecurrenceTable& tab = testutil::table(1.0, 12);
    CHECK(string_residual(tab, 1) <= Real("1e-10"));
    CHECK(string_residual(tab, 10) <= Real("1e-10"));
    CHECK_THROWS_AS(string_residual(tab, 0), FreudError);
    CHECK_THROWS_AS(string_residual(tab, 12), FreudError);

    // A hand-built table violating the relation reports the violation exactly.
    RecurrenceTable fake = tab;
    fake.a_sq[5] += Real("1e-3");
    Real expected = abs(4 * fake.a_sq[5] * (fake.a_sq[4] + fake.a_sq[5] + fake.a_sq[6] - fake.t) - 5);
    CHECK(string_residual(fake, 5) == expected);
    CHECK(expected > Real("1e-4"));
}

TEST_CASE("recurrence: string residual across the working range") {
    for (double t : {0.5, 1.0, 2.0}) {
        const RecurrenceTable& tab = testutil::table(t, 31);
        Real tol = pow(Real(10), -tab.working_digits / 2);
        for (int n = 1; n <= 30; ++n) CHECK(string_residual(tab, n) <= tol);
    }
}

TEST_CASE("recurrence: norms, zeta and symmetry diagnostics") {
    const RecurrenceTable& tab = testutil::table(0.5, 20);
    for (int n = 1; n <= 20; ++n) {
        CHECK(tab.zeta[n] > 0);
        CHECK(testutil::rel_diff(tab.norm_sq[n] / tab.norm_sq[n - 1], tab.a_sq[n]) < 1e-60);
        CHECK(testutil::rel_diff(tab.norm_sq[n], tab.zeta[n] * tab.norm_sq[0]) < 1e-55);
    }
    CHECK(tab.max_abs_mean <= pow(Real(10), -(tab.working_digits - 10)));
}

TEST_CASE("recurrence: failure names the offending degree") {
    PrecisionConfig bad{80, 12};  // 12 nodes cannot orthogonalize degree 20
    try {
        compute_recurrence(Real(1), 20, bad);
        FAIL("expected a failure");
    } catch (const FreudError& e) {
        CHECK(std::string(e.what()).find("n = ") != std::string::npos);
    }
}

TEST_CASE("recurrence: toda evolution by central differences") {
    Real r1 = toda_residual(Real(1), Real("1e-3"), 1, testutil::cfg());
    CHECK(r1 <= Real("1e-5"));
    // O(h^2) decay under halving
    Real r2 = toda_residual(Real(1), Real("5e-4"), 1, testutil::cfg());
    CHECK(r2 < Real("0.3") * r1);
    // k = 1 uses a_0^2 = 0 and is well-defined
    CHECK(toda_residual(Real(1), Real("1e-3"), 1, testutil::cfg()) < 1);
    for (int k = 2; k <= 10; ++k)
        CHECK(toda_residual(Real(1), Real("1e-3"), k, testutil::cfg()) <= Real("1e-5"));
}
