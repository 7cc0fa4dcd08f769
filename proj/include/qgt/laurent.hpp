#pragma once

// Exact Laurent polynomials in one variable with rational coefficients.

#include "qgt/field.hpp"

#include <gmpxx.h>

#include <vector>

namespace qgt {

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long low, std::vector<mpq_class> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }

    static LaurentPoly monomial(long e, const mpq_class& c) { return {e, {c}}; }

    long low() const { return low_; }
    long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    mpq_class coeff(long e) const {
        if (e < low_ || e > high()) return 0;
        return c_[static_cast<std::size_t>(e - low_)];
    }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const mpq_class& s) const;
    // p(s x): coefficient of x^k multiplied by s^k
    LaurentPoly dilated(const mpq_class& s) const;

    // Exact quotient by (x - r); throws DivisionByZero on nonzero remainder.
    LaurentPoly divided_by_root(const mpq_class& r) const;

    template <class T>
    T eval(const T& x) const {
        if (c_.empty()) return from_long<T>(0);
        // Horner on the polynomial part, then shift by x^low.
        T acc = from_rational<T>(c_.back());
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + from_rational<T>(c_[i]);
        return low_ == 0 ? acc : acc * ipow(x, low_);
    }

private:
    void trim();
    long low_ = 0;
    std::vector<mpq_class> c_;
};

}  // namespace qgt
