#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "freud/real.hpp"

namespace freud {

// Eigenvalues of the symmetric tridiagonal Jacobi matrix with zero diagonal
// and off-diagonals beta[k] (k = 0..n-2), by Sturm-sequence bisection.
// Plain doubles suffice here: the bisection only needs to land close enough
// for the extended-precision Newton polish that callers apply afterwards.
inline std::vector<double> jacobi_eigenvalues_bisect(const std::vector<double>& beta) {
    const int n = static_cast<int>(beta.size()) + 1;
    std::vector<double> beta_sq(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) beta_sq[i] = beta[i] * beta[i];

    // Count of eigenvalues below lambda = number of negative pivots in the
    // LDL^T factorization of J - lambda I, with a guard against zero pivots.
    auto count_below = [&](double lambda) {
        int count = 0;
        double d = -lambda;
        if (d == 0) d = -1e-300;
        if (d < 0) ++count;
        for (int i = 1; i < n; ++i) {
            d = -lambda - beta_sq[i - 1] / d;
            if (d == 0) d = -1e-300;
            if (d < 0) ++count;
        }
        return count;
    };

    double radius = 0;
    for (int i = 0; i < n; ++i) {
        double r = (i > 0 ? std::abs(beta[i - 1]) : 0.0) + (i < n - 1 ? std::abs(beta[i]) : 0.0);
        radius = std::max(radius, r);
    }
    radius += 1e-12;

    std::vector<double> eigs(n);
    for (int k = 0; k < n; ++k) {
        double lo = -radius, hi = radius;
        while (hi - lo > 1e-14 * radius) {
            double mid = 0.5 * (lo + hi);
            if (count_below(mid) >= k + 1)
                hi = mid;
            else
                lo = mid;
        }
        eigs[k] = 0.5 * (lo + hi);
    }
    return eigs;
}

// Zeros of a symmetric (even weight) monic orthogonal polynomial of degree n:
// eigenvalues of its Jacobi matrix with off-diagonals sqrt(coeff_sq[k]),
// refined by at most two Newton steps on the supplied evaluator and then
// symmetrized about the origin.
template <typename Value, typename Derivative>
std::vector<Real> symmetric_opoly_zeros(int n, const std::vector<Real>& coeff_sq, Value&& value,
                                        Derivative&& derivative, const char* what) {
    if (n < 1) throw FreudError(std::string(what) + ": degree must be >= 1");
    std::vector<double> beta(n - 1);
    for (int k = 1; k < n; ++k) {
        if (!(coeff_sq[k] > 0))
            throw FreudError(std::string(what) + ": nonpositive recurrence coefficient at k = " +
                             std::to_string(k));
        beta[k - 1] = std::sqrt(to_double(coeff_sq[k]));
    }
    std::vector<double> eigs = jacobi_eigenvalues_bisect(beta);

    std::vector<Real> zeros(n);
    for (int k = 0; k < n; ++k) {
        Real y = eigs[k];
        Real fy = abs(value(y));
        for (int step = 0; step < 2; ++step) {
            Real dy = value(y) / derivative(y);
            Real cand = y - dy;
            Real fc = abs(value(cand));
            if (fc <= fy) {
                y = cand;
                fy = fc;
            } else {
                break;
            }
        }
        zeros[k] = y;
    }
    std::sort(zeros.begin(), zeros.end());
    // The family is symmetric: pair up +-zeros exactly, pin the middle zero
    // of odd degrees to 0.
    for (int k = 0; k < n / 2; ++k) {
        Real v = (zeros[n - 1 - k] - zeros[k]) / 2;
        zeros[k] = -v;
        zeros[n - 1 - k] = v;
    }
    if (n % 2 == 1) zeros[n / 2] = 0;
    for (int k = 0; k + 1 < n; ++k)
        if (!(zeros[k + 1] - zeros[k] > Real(1e-10)))
            throw FreudError(std::string(what) + ": zeros not simple/sorted near index " +
                             std::to_string(k));
    return zeros;
}

}  // namespace freud
