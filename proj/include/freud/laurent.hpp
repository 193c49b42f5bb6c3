#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "freud/real.hpp"

namespace freud {

/// Finite coefficient sequence over integer powers of x, negative powers
/// allowed. Canonical form keeps the first and last stored coefficients
/// nonzero (the zero polynomial stores nothing).
class LaurentPoly {
public:
    LaurentPoly() = default;

    LaurentPoly(int min_exp, std::vector<Real> coeffs) : min_exp_(min_exp), c_(std::move(coeffs)) {
        normalize();
    }

    static LaurentPoly term(const Real& coeff, int exp) {
        return LaurentPoly(exp, std::vector<Real>{coeff});
    }

    static LaurentPoly constant(const Real& c) { return term(c, 0); }

    bool is_zero() const { return c_.empty(); }
    int min_exp() const { return min_exp_; }
    int max_exp() const { return min_exp_ + static_cast<int>(c_.size()) - 1; }

    Real coeff(int exp) const {
        if (is_zero() || exp < min_exp_ || exp > max_exp()) return Real(0);
        return c_[exp - min_exp_];
    }

    /// Largest |coefficient|; 0 for the zero polynomial.
    Real magnitude() const {
        Real m = 0;
        for (const Real& v : c_)
            if (abs(v) > m) m = abs(v);
        return m;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        int lo = std::min(min_exp_, o.min_exp_);
        int hi = std::max(max_exp(), o.max_exp());
        std::vector<Real> out(hi - lo + 1, Real(0));
        for (int e = min_exp_; e <= max_exp(); ++e) out[e - lo] = c_[e - min_exp_];
        for (int e = o.min_exp_; e <= o.max_exp(); ++e) out[e - lo] += o.c_[e - o.min_exp_];
        min_exp_ = lo;
        c_ = std::move(out);
        normalize();
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (Real& v : r.c_) v = -v;
        return r;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Real> out(a.c_.size() + b.c_.size() - 1, Real(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return LaurentPoly(a.min_exp_ + b.min_exp_, std::move(out));
    }

    friend LaurentPoly operator*(const Real& s, const LaurentPoly& p) {
        LaurentPoly r = p;
        for (Real& v : r.c_) v *= s;
        r.normalize();
        return r;
    }

    LaurentPoly derivative() const {
        if (is_zero()) return {};
        std::vector<Real> out;
        out.reserve(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            int e = min_exp_ + static_cast<int>(i);
            out.push_back(e * c_[i]);
        }
        return LaurentPoly(min_exp_ - 1, std::move(out));
    }

    /// Horner evaluation; x = 0 is rejected whenever negative powers are present.
    Real operator()(const Real& x) const {
        if (is_zero()) return Real(0);
        if (min_exp_ < 0 && abs(x) == 0)
            throw FreudError("LaurentPoly: evaluation at x = 0 with negative powers");
        Real acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc * pow(x, min_exp_);
    }

    /// Drops coefficients below tol * magnitude. Used as the explicit
    /// cancellation pass after compositions that must be polynomial.
    LaurentPoly trimmed(const Real& tol) const {
        if (is_zero()) return {};
        Real cut = tol * magnitude();
        std::vector<Real> out = c_;
        for (Real& v : out)
            if (abs(v) <= cut) v = 0;
        return LaurentPoly(min_exp_, std::move(out));
    }

    /// Coefficients as (exponent, value) pairs, ascending.
    std::vector<std::pair<int, Real>> items() const {
        std::vector<std::pair<int, Real>> out;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) out.emplace_back(min_exp_ + static_cast<int>(i), c_[i]);
        return out;
    }

private:
    void normalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        std::size_t tail = c_.size();
        while (tail > lead && c_[tail - 1] == 0) --tail;
        if (lead > 0 || tail < c_.size()) {
            c_ = std::vector<Real>(c_.begin() + lead, c_.begin() + tail);
            min_exp_ += static_cast<int>(lead);
        }
        if (c_.empty()) min_exp_ = 0;
    }

    int min_exp_ = 0;
    std::vector<Real> c_;
};

}  // namespace freud
