#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace freud {

// Extended-precision scalar. Precision of freshly constructed values is the
// thread's current default; results of arithmetic keep the widest operand
// precision, so values built from an 80-digit table stay at 80 digits.
using Real = boost::multiprecision::mpfr_float;

struct FreudError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrecisionConfig {
    int working_digits = 80;
    // 0 means: derived from context (4*n_max + 200 for orthogonalization,
    // a fixed floor for plain moment quadrature).
    int quadrature_order = 0;
};

inline void validate(const PrecisionConfig& cfg) {
    if (cfg.working_digits < 30)
        throw FreudError("working_digits must be >= 30, got " + std::to_string(cfg.working_digits));
    if (cfg.quadrature_order < 0)
        throw FreudError("quadrature_order must be nonnegative");
}

// Sets the default construction precision for the current scope.
class PrecisionScope {
public:
    explicit PrecisionScope(int digits) : saved_(Real::default_precision()) {
        Real::default_precision(static_cast<unsigned>(digits));
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

inline double to_double(const Real& x) { return x.convert_to<double>(); }

// Smallest R with x^4 - 2 t x^2 >= (working_digits + 10) * ln 10, so the
// discarded tails of the weight are below the target precision.
inline Real truncation_radius(const Real& t, int working_digits) {
    Real decades = Real(working_digits + 10) * log(Real(10));
    return sqrt(t + sqrt(t * t + decades));
}

}  // namespace freud
