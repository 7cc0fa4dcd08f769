#include "qgt/arith.hpp"

#include <cmath>
#include <sstream>

namespace qgt {

void EvalConfig::validate() const {
    if (sgn(q) <= 0 || q >= 1) throw InvalidConfig("q must lie in (0,1), got " + q.get_str());
    if (sqrt_q) {
        if (sgn(*sqrt_q) <= 0 || (*sqrt_q) * (*sqrt_q) != q)
            throw InvalidConfig("sqrt_q^2 != q");
    }
    if (float_precision_bits < 53) throw InvalidConfig("float precision below 53 bits");
}

EvalConfig EvalConfig::exact(const mpq_class& q, std::optional<mpq_class> sqrt_q) {
    EvalConfig c;
    c.q = q;
    c.sqrt_q = std::move(sqrt_q);
    c.mode = Mode::exact;
    c.validate();
    return c;
}

EvalConfig EvalConfig::floating(const mpq_class& q, long bits) {
    EvalConfig c;
    c.q = q;
    c.mode = Mode::floating;
    c.float_precision_bits = bits;
    c.validate();
    return c;
}

cd qpoch_inf(cd a, double q, double tol) {
    cd r(1.0, 0.0);
    cd term = a;
    // stop once the remaining factors are within tol of 1
    for (int i = 0; i < 100000; ++i) {
        r *= (1.0 - term);
        term *= q;
        if (std::abs(term) < tol) break;
    }
    return r;
}

const mpq_class& Scalar::exact() const {
    if (!is_exact()) throw ExactModeUnsupported("value is not exact");
    return std::get<mpq_class>(v_);
}

MpComplex Scalar::to_float() const {
    if (is_exact()) return MpComplex(std::get<mpq_class>(v_));
    return std::get<MpComplex>(v_);
}

cd Scalar::to_cd() const {
    if (is_exact()) return {std::get<mpq_class>(v_).get_d(), 0.0};
    return std::get<MpComplex>(v_).to_cd();
}

bool Scalar::is_zero() const {
    if (is_exact()) return sgn(std::get<mpq_class>(v_)) == 0;
    return std::get<MpComplex>(v_).is_zero();
}

std::string Scalar::to_string(int digits) const {
    if (is_exact()) {
        const auto& r = std::get<mpq_class>(v_);
        if (r.get_den() == 1) return r.get_num().get_str();
        return r.get_num().get_str() + "/" + r.get_den().get_str();
    }
    const auto& z = std::get<MpComplex>(v_);
    if (z.imag().is_zero()) return z.real().to_string(digits);
    return "[" + z.real().to_string(digits) + ", " + z.imag().to_string(digits) + "]";
}

namespace {
template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
    if (a.is_exact() && b.is_exact()) return Scalar(mpq_class(op(a.exact(), b.exact())));
    return Scalar(MpComplex(op(a.to_float(), b.to_float())));
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero("Scalar division by zero");
    return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}
bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
    return a.to_float() == b.to_float();
}

Scalar q_power(const EvalConfig& cfg, HalfInt a) {
    cfg.validate();
    if (cfg.mode == Mode::exact) return Scalar(QPowers<mpq_class>(cfg).pow(a));
    PrecisionScope ps(cfg.float_precision_bits);
    return Scalar(QPowers<MpComplex>(cfg).pow(a));
}

Scalar qpochhammer(const EvalConfig& cfg, const Scalar& a, long n) {
    if (n < 0) throw InvalidConfig("Pochhammer length must be nonnegative");
    if (cfg.mode == Mode::exact && a.is_exact()) return Scalar(qpoch(a.exact(), cfg.q, n));
    PrecisionScope ps(cfg.float_precision_bits);
    return Scalar(qpoch(a.to_float(), MpComplex(cfg.q), n));
}

Scalar qpochhammer_inf(const EvalConfig& cfg, const Scalar& a, double tol) {
    if (cfg.mode == Mode::exact)
        throw ExactModeUnsupported("infinite Pochhammer symbols exist only in float mode");
    PrecisionScope ps(cfg.float_precision_bits);
    MpComplex q(cfg.q);
    MpComplex term = a.to_float();
    MpComplex r(1L);
    MpReal bound(tol);
    for (long i = 0; i < 1000000; ++i) {
        r = r * (MpComplex(1L) - term);
        if (r.is_zero()) break;
        term = term * q;
        if (abs(term) < bound) break;
    }
    return Scalar(r);
}

mpq_class parse_rational(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw InvalidConfig("not a rational: '" + s + "'");
    if (sgn(r.get_den()) == 0) throw InvalidConfig("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace qgt
