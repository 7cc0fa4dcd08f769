#pragma once

// Uniform helpers over the three number types the algorithms are
// instantiated with: exact rationals, MPFR complex, and hardware complex.

#include "qgt/errors.hpp"
#include "qgt/mp.hpp"

#include <gmpxx.h>

#include <complex>
#include <cmath>
#include <type_traits>

namespace qgt {

using cd = std::complex<double>;

template <class T>
struct is_exact : std::false_type {};
template <>
struct is_exact<mpq_class> : std::true_type {};
template <class T>
inline constexpr bool is_exact_v = is_exact<T>::value;

template <class T>
T from_rational(const mpq_class& r);
template <>
inline mpq_class from_rational<mpq_class>(const mpq_class& r) { return r; }
template <>
inline MpComplex from_rational<MpComplex>(const mpq_class& r) { return MpComplex(r); }
template <>
inline cd from_rational<cd>(const mpq_class& r) { return cd(r.get_d(), 0.0); }

template <class T>
T from_long(long n) { return from_rational<T>(mpq_class(n)); }

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool is_zero(const MpComplex& x) { return x.is_zero(); }
inline bool is_zero(const cd& x) { return x == cd(0.0, 0.0); }

inline double magnitude(const mpq_class& x) { return std::abs(x.get_d()); }
inline double magnitude(const MpComplex& x) { return std::abs(x.to_cd()); }
inline double magnitude(const cd& x) { return std::abs(x); }

inline cd to_cd(const mpq_class& x) { return {x.get_d(), 0.0}; }
inline cd to_cd(const MpComplex& x) { return x.to_cd(); }
inline cd to_cd(const cd& x) { return x; }

// x^n for integer n; negative n inverts (ZeroPoint if x == 0).
template <class T>
T ipow(const T& x, long n) {
    if (n < 0) {
        if (is_zero(x)) throw ZeroPoint("negative power of zero");
        return from_long<T>(1) / ipow(x, -n);
    }
    T result = from_long<T>(1);
    T base = x;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

template <>
inline mpq_class ipow<mpq_class>(const mpq_class& x, long n) {
    if (n < 0) {
        if (sgn(x) == 0) throw ZeroPoint("negative power of zero");
        mpq_class inv = 1 / x;
        return ipow(inv, -n);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(n));
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

template <class T>
T checked_div(const T& a, const T& b) {
    if (is_zero(b)) throw DivisionByZero("division by zero");
    return a / b;
}

}  // namespace qgt
