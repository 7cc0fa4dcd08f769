#include "qgt/mp.hpp"

#include "qgt/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

namespace qgt {

namespace {
thread_local long tl_precision = 256;

mpfr_prec_t wider(const MpReal& a, const MpReal& b) {
    return static_cast<mpfr_prec_t>(std::max(a.prec(), b.prec()));
}

// Raise a's precision in place (exactly) before an in-place op.
void widen_to(mpfr_ptr v, mpfr_prec_t p) {
    if (mpfr_get_prec(v) < p) mpfr_prec_round(v, p, MPFR_RNDN);
}
}  // namespace

long default_precision() { return tl_precision; }

PrecisionScope::PrecisionScope(long bits) : saved_(tl_precision) {
    if (bits < 2) throw InvalidConfig("precision must be at least 2 bits");
    tl_precision = bits;
}
PrecisionScope::~PrecisionScope() { tl_precision = saved_; }

MpReal::MpReal() {
    mpfr_init2(v_, tl_precision);
    mpfr_set_zero(v_, 1);
}
MpReal::MpReal(long prec_bits, int) {
    mpfr_init2(v_, prec_bits);
    mpfr_set_zero(v_, 1);
}
MpReal::MpReal(double d) {
    mpfr_init2(v_, tl_precision);
    mpfr_set_d(v_, d, MPFR_RNDN);
}
MpReal::MpReal(long n) {
    mpfr_init2(v_, tl_precision);
    mpfr_set_si(v_, n, MPFR_RNDN);
}
MpReal::MpReal(const mpq_class& r) {
    mpfr_init2(v_, tl_precision);
    mpfr_set_q(v_, r.get_mpq_t(), MPFR_RNDN);
}
MpReal::MpReal(const mpz_class& z) {
    mpfr_init2(v_, tl_precision);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}
MpReal::MpReal(const MpReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}
MpReal::MpReal(MpReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}
MpReal& MpReal::operator=(const MpReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}
MpReal& MpReal::operator=(MpReal&& o) noexcept {
    if (this != &o) {
        if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    return *this;
}
MpReal::~MpReal() { mpfr_clear(v_); }

std::string MpReal::to_string(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

MpReal& MpReal::operator+=(const MpReal& o) {
    widen_to(v_, wider(*this, o));
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
MpReal& MpReal::operator-=(const MpReal& o) {
    widen_to(v_, wider(*this, o));
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
MpReal& MpReal::operator*=(const MpReal& o) {
    widen_to(v_, wider(*this, o));
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
MpReal& MpReal::operator/=(const MpReal& o) {
    if (o.is_zero()) throw DivisionByZero("MpReal division by zero");
    widen_to(v_, wider(*this, o));
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
MpReal MpReal::operator-() const {
    MpReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

#define QGT_UNARY(fn, mpfn)                          \
    MpReal fn(const MpReal& a) {                     \
        MpReal r(a.prec(), 0);                       \
        mpfn(r.v_, a.v_, MPFR_RNDN);                 \
        return r;                                    \
    }
QGT_UNARY(sqrt, mpfr_sqrt)
QGT_UNARY(exp, mpfr_exp)
QGT_UNARY(log, mpfr_log)
QGT_UNARY(cos, mpfr_cos)
QGT_UNARY(sin, mpfr_sin)
QGT_UNARY(abs, mpfr_abs)
#undef QGT_UNARY

MpReal atan2(const MpReal& y, const MpReal& x) {
    MpReal r(static_cast<long>(wider(y, x)), 0);
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}
MpReal hypot(const MpReal& a, const MpReal& b) {
    MpReal r(static_cast<long>(wider(a, b)), 0);
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

MpComplex& MpComplex::operator+=(const MpComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}
MpComplex& MpComplex::operator-=(const MpComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}
MpComplex& MpComplex::operator*=(const MpComplex& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    MpReal r = re_ * o.re_ - im_ * o.im_;
    MpReal i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}
MpComplex& MpComplex::operator/=(const MpComplex& o) {
    if (o.is_zero()) throw DivisionByZero("MpComplex division by zero");
    if (o.im_.is_zero()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    MpReal den = o.re_ * o.re_ + o.im_ * o.im_;
    MpReal r = (re_ * o.re_ + im_ * o.im_) / den;
    MpReal i = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

MpComplex exp(const MpComplex& z) {
    MpReal m = exp(z.re_);
    if (z.im_.is_zero()) return MpComplex(m, MpReal(m.prec(), 0));
    return MpComplex(m * cos(z.im_), m * sin(z.im_));
}

MpComplex log(const MpComplex& z) {
    if (z.is_zero()) throw ZeroPoint("log of zero");
    return MpComplex(log(abs(z)), atan2(z.im_, z.re_));
}

}  // namespace qgt
