#pragma once

// Thin RAII layer over MPFR.  Every value owns its precision; binary
// operations round to the larger of the two operand precisions.  New
// values default to a thread-local precision set through PrecisionScope.

#include <mpfr.h>
#include <gmpxx.h>

#include <complex>
#include <string>

namespace qgt {

long default_precision();

class PrecisionScope {
public:
    explicit PrecisionScope(long bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    long saved_;
};

class MpReal {
public:
    MpReal();
    explicit MpReal(long prec_bits, int /*tag*/);
    MpReal(double d);  // NOLINT: implicit by design, constants read naturally
    MpReal(long n);    // NOLINT
    MpReal(int n) : MpReal(static_cast<long>(n)) {}  // NOLINT
    explicit MpReal(const mpq_class& r);
    explicit MpReal(const mpz_class& z);
    MpReal(const MpReal& o);
    MpReal(MpReal&& o) noexcept;
    MpReal& operator=(const MpReal& o);
    MpReal& operator=(MpReal&& o) noexcept;
    ~MpReal();

    long prec() const { return static_cast<long>(mpfr_get_prec(v_)); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    std::string to_string(int digits) const;

    MpReal& operator+=(const MpReal& o);
    MpReal& operator-=(const MpReal& o);
    MpReal& operator*=(const MpReal& o);
    MpReal& operator/=(const MpReal& o);

    friend MpReal operator+(MpReal a, const MpReal& b) { return a += b; }
    friend MpReal operator-(MpReal a, const MpReal& b) { return a -= b; }
    friend MpReal operator*(MpReal a, const MpReal& b) { return a *= b; }
    friend MpReal operator/(MpReal a, const MpReal& b) { return a /= b; }
    MpReal operator-() const;

    friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const MpReal& a, const MpReal& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator==(const MpReal& a, const MpReal& b) { return mpfr_equal_p(a.v_, b.v_); }

    friend MpReal sqrt(const MpReal& a);
    friend MpReal exp(const MpReal& a);
    friend MpReal log(const MpReal& a);
    friend MpReal cos(const MpReal& a);
    friend MpReal sin(const MpReal& a);
    friend MpReal abs(const MpReal& a);
    friend MpReal atan2(const MpReal& y, const MpReal& x);
    friend MpReal hypot(const MpReal& a, const MpReal& b);

private:
    mpfr_t v_;
};

class MpComplex {
public:
    MpComplex() : re_(0L), im_(0L) {}
    MpComplex(MpReal re) : re_(std::move(re)), im_(MpReal(re_.prec(), 0)) {}  // NOLINT
    MpComplex(MpReal re, MpReal im) : re_(std::move(re)), im_(std::move(im)) {}
    MpComplex(double d) : MpComplex(MpReal(d)) {}  // NOLINT
    MpComplex(long n) : MpComplex(MpReal(n)) {}    // NOLINT
    MpComplex(int n) : MpComplex(MpReal(n)) {}     // NOLINT
    explicit MpComplex(const mpq_class& r) : MpComplex(MpReal(r)) {}
    explicit MpComplex(std::complex<double> z) : re_(z.real()), im_(z.imag()) {}

    const MpReal& real() const { return re_; }
    const MpReal& imag() const { return im_; }
    long prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    std::complex<double> to_cd() const { return {re_.to_double(), im_.to_double()}; }

    MpComplex& operator+=(const MpComplex& o);
    MpComplex& operator-=(const MpComplex& o);
    MpComplex& operator*=(const MpComplex& o);
    MpComplex& operator/=(const MpComplex& o);
    friend MpComplex operator+(MpComplex a, const MpComplex& b) { return a += b; }
    friend MpComplex operator-(MpComplex a, const MpComplex& b) { return a -= b; }
    friend MpComplex operator*(MpComplex a, const MpComplex& b) { return a *= b; }
    friend MpComplex operator/(MpComplex a, const MpComplex& b) { return a /= b; }
    MpComplex operator-() const { return {-re_, -im_}; }

    friend bool operator==(const MpComplex& a, const MpComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend MpReal abs(const MpComplex& z) { return hypot(z.re_, z.im_); }
    friend MpComplex exp(const MpComplex& z);
    // principal branch, cut along the negative real axis
    friend MpComplex log(const MpComplex& z);

private:
    MpReal re_, im_;
};

}  // namespace qgt
