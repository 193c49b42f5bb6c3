#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace freud;
using testutil::Rng;

TEST_CASE("poly: low-degree values") {
    const RecurrenceTable& tab = testutil::table(1.0, 12);
    Rng rng(3);
    for (int i = 0; i < 10; ++i) {
        Real x(rng.uniform(-2, 2));
        CHECK(eval_F(1, x, tab) == x);
        CHECK(eval_F_prime(2, x, tab) == 2 * x);
    }
    CHECK(eval_F(2, Real(0), tab) == -tab.a_sq[1]);
}

TEST_CASE("poly: F4 changes sign across the tabulated zeros at t = 1") {
    const RecurrenceTable& tab = testutil::table(1.0, 12);
    for (double z : {0.6156, 1.3002}) {
        CHECK(eval_F(4, Real(z - 1e-3), tab) * eval_F(4, Real(z + 1e-3), tab) < 0);
        CHECK(eval_F(4, Real(-z - 1e-3), tab) * eval_F(4, Real(-z + 1e-3), tab) < 0);
    }
}

TEST_CASE("poly: structure relation residual at random points") {
    const RecurrenceTable& tab = testutil::table(1.0, 12);
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        Real x(rng.uniform(-2, 2));
        Real scale = abs(eval_F_prime(5, x, tab)) + 1;
        CHECK(structure_relation_residual(5, x, tab) <= Real("1e-9") * scale);
    }
}

TEST_CASE("poly: parity pattern at the origin is exact") {
    const RecurrenceTable& tab = testutil::table(0.5, 16);
    for (int n = 0; n <= 15; ++n) {
        Jet2 j = eval_F_jet(n, Real(0), tab);
        if (n % 2 == 1) {
            CHECK(j.value == 0);
            CHECK(j.d2 == 0);
        } else {
            CHECK(j.d1 == 0);
        }
    }
}

TEST_CASE("poly: monic leading coefficient by coefficient propagation") {
    const RecurrenceTable& tab = testutil::table(1.0, 12);
    for (int n : {1, 4, 9, 12}) {
        std::vector<Real> c = coeffs_F(n, tab);
        REQUIRE(static_cast<int>(c.size()) == n + 1);
        CHECK(c[n] == 1);
        // opposite-parity coefficients vanish
        for (int k = n - 1; k >= 0; k -= 2) CHECK(c[k] == 0);
    }
}

TEST_CASE("poly: kernel K_0 is the constant 1/mu_0") {
    const RecurrenceTable& tab = testutil::table(1.0, 12);
    Rng rng(7);
    for (int i = 0; i < 5; ++i) {
        Real x(rng.uniform(-2, 2)), y(rng.uniform(-2, 2));
        CHECK(testutil::rel_diff(eval_kernel(0, x, y, tab), 1 / tab.norm_sq[0]) < 1e-60);
    }
}

TEST_CASE("poly: reproducing property against the quadrature oracle") {
    const RecurrenceTable& tab = testutil::table(1.0, 12);
    // integral of K_3(x, 0.4) x^2 w(x) dx must reproduce 0.4^2 = 0.16
    Real R = truncation_radius(tab.t, tab.working_digits);
    Real v = integrate_symmetric(
        [&](const Real& x) {
            return eval_kernel(3, x, Real("0.4"), tab) * x * x * eval_weight(x, tab.t);
        },
        R, 400, tab.working_digits);
    CHECK(testutil::rel_diff(v, Real("0.16")) < 1e-40);
}

TEST_CASE("poly: odd kernel index collapses at y = 0") {
    const RecurrenceTable& tab = testutil::table(1.0, 12);
    Rng rng(9);
    for (int m = 1; m <= 4; ++m) {
        Real x(rng.uniform(-2, 2));
        CHECK(testutil::rel_diff(kernel_x0(2 * m - 1, x, tab), kernel_x0(2 * m - 2, x, tab)) == 0);
        CHECK(testutil::rel_diff(eval_kernel(2 * m - 1, x, Real(0), tab),
                                 eval_kernel(2 * m - 2, x, Real(0), tab)) < 1e-50);
    }
}

TEST_CASE("poly: kernel00 values and positivity") {
    const RecurrenceTable& tab = testutil::table(1.0, 22);
    CHECK(kernel00(-1, tab) == 0);
    CHECK(testutil::rel_diff(kernel00(1, tab), 1 / tab.norm_sq[0]) == 0);
    CHECK(kernel00(1, tab) == kernel00(0, tab));
    for (double t : {0.5, 1.0, 2.0}) {
        const RecurrenceTable& tt = testutil::table(t, 22);
        for (int n = 0; n <= 20; ++n) CHECK(kernel00(n, tt) > 0);
    }
    // direct-sum oracle at n = 3
    Real direct = eval_kernel_sum(3, Real(0), Real(0), tab);
    CHECK(testutil::rel_diff(kernel00(3, tab), direct) < 1e-60);
}

TEST_CASE("poly: CD quotient equals the direct sum") {
    const RecurrenceTable& tab = testutil::table(1.0, 17);
    Rng rng(13);
    for (int i = 0; i < 30; ++i) {
        int n = 1 + static_cast<int>(rng.uniform(0, 15));
        Real x(rng.uniform(-2, 2)), y(rng.uniform(-2, 2));
        Real a = eval_kernel(n, x, y, tab);
        Real b = eval_kernel_sum(n, x, y, tab);
        CHECK(testutil::rel_diff(a, b) < 1e-9);
    }
}

TEST_CASE("poly: confluent branch agrees with the sum near the diagonal") {
    const RecurrenceTable& tab = testutil::table(1.0, 12);
    Real x("0.83");
    Real y = x + Real("1e-9");
    CHECK(testutil::rel_diff(eval_kernel(6, x, y, tab), eval_kernel_sum(6, x, y, tab)) < 1e-9);
    CHECK(testutil::rel_diff(eval_kernel(6, x, x, tab), eval_kernel_sum(6, x, x, tab)) < 1e-40);
}

TEST_CASE("poly: degree limits throw") {
    const RecurrenceTable& tab = testutil::table(1.0, 8);
    CHECK_THROWS_AS(eval_F(9, Real(1), tab), FreudError);
    CHECK_THROWS_AS(eval_kernel(8, Real(1), Real(0), tab), FreudError);
    CHECK_THROWS_AS(kernel00(8, tab), FreudError);
}
