#pragma once

#include <cstdint>
#include <vector>

#include "freud/freud.hpp"

namespace testutil {

using freud::Real;

// Deterministic xorshift generator for property-style sampling.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state_(seed) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (next() >> 11) * (1.0 / 9007199254740992.0);
    }

    // Uniform over [lo, hi] with |x| >= clear, for integrands with a pole at 0.
    double uniform_away_from_zero(double lo, double hi, double clear) {
        for (;;) {
            double x = uniform(lo, hi);
            if (std::abs(x) >= clear) return x;
        }
    }

private:
    std::uint64_t state_;
};

inline const freud::PrecisionConfig& cfg() {
    static freud::PrecisionConfig c{80, 0};
    return c;
}

inline const freud::RecurrenceTable& table(double t, int n_max) {
    return freud::recurrence_cache(Real(t), n_max, cfg());
}

// Set before any test runs; Catch2 is single threaded.
struct PrecisionInit {
    PrecisionInit() { Real::default_precision(80); }
};
inline PrecisionInit precision_init;

inline double rel_diff(const Real& a, const Real& b) {
    return freud::to_double(abs(a - b) / (abs(a) + abs(b) + Real(1e-300)));
}

}  // namespace testutil
