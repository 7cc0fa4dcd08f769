#pragma once

#include "qgt/errors.hpp"
#include "qgt/field.hpp"
#include "qgt/mp.hpp"

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <variant>

namespace qgt {

// A value in (1/2)Z stored as twice itself.
struct HalfInt {
    long doubled = 0;

    static HalfInt integer(long n) { return HalfInt{2 * n}; }
    static HalfInt half(long twice) { return HalfInt{twice}; }

    bool is_integral() const { return doubled % 2 == 0; }
    long floor_value() const { return doubled >= 0 ? doubled / 2 : -((-doubled + 1) / 2); }
    double to_double() const { return 0.5 * static_cast<double>(doubled); }

    HalfInt operator+(HalfInt o) const { return {doubled + o.doubled}; }
    HalfInt operator-(HalfInt o) const { return {doubled - o.doubled}; }
    HalfInt operator-() const { return {-doubled}; }
    HalfInt operator*(long k) const { return {doubled * k}; }
    auto operator<=>(const HalfInt&) const = default;
};

enum class Mode { exact, floating };

struct EvalConfig {
    mpq_class q{1, 2};
    std::optional<mpq_class> sqrt_q;
    long float_precision_bits = 256;
    Mode mode = Mode::exact;

    // Throws InvalidConfig unless 0 < q < 1 and sqrt_q^2 == q.
    void validate() const;

    static EvalConfig exact(const mpq_class& q, std::optional<mpq_class> sqrt_q = std::nullopt);
    static EvalConfig floating(const mpq_class& q, long bits = 256);
};

// Powers q^a in a chosen number type.
template <class T>
class QPowers {
public:
    explicit QPowers(const EvalConfig& cfg) : cfg_(cfg) {
        q_ = from_rational<T>(cfg.q);
        if (cfg.sqrt_q) s_ = from_rational<T>(*cfg.sqrt_q);
    }

    T pow(HalfInt a) const {
        if (a.is_integral()) return ipow(q_, a.doubled / 2);
        if (s_) return ipow(*s_, a.doubled);
        if constexpr (is_exact_v<T>) {
            throw HalfPowerUnavailable("q^(" + std::to_string(a.doubled) +
                                       "/2) needs sqrt_q in exact mode");
        } else {
            return half_power_float(a);
        }
    }
    T pow(long n) const { return ipow(q_, n); }
    const T& q() const { return q_; }
    const EvalConfig& config() const { return cfg_; }

private:
    T half_power_float(HalfInt a) const;

    EvalConfig cfg_;
    T q_;
    std::optional<T> s_;
};

template <>
inline MpComplex QPowers<MpComplex>::half_power_float(HalfInt a) const {
    return ipow(MpComplex(sqrt(MpReal(cfg_.q))), a.doubled);
}
template <>
inline cd QPowers<cd>::half_power_float(HalfInt a) const {
    return cd(std::pow(cfg_.q.get_d(), a.to_double()), 0.0);
}
template <>
inline mpq_class QPowers<mpq_class>::half_power_float(HalfInt) const {
    throw HalfPowerUnavailable("exact half power");
}

// (a; q)_n = prod_{i=1}^n (1 - a q^{i-1}), n >= 0.
template <class T>
T qpoch(const T& a, const T& q, long n) {
    T r = from_long<T>(1);
    T term = a;
    for (long i = 0; i < n; ++i) {
        r = r * (from_long<T>(1) - term);
        term = term * q;
    }
    return r;
}

// Infinite Pochhammer in hardware precision; truncates once |a q^{n-1}| < tol.
cd qpoch_inf(cd a, double q, double tol = 1e-18);

// Backend-tagged value: exact rational or MPFR complex.
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}
    Scalar(mpq_class r) : v_(std::move(r)) {}  // NOLINT
    Scalar(MpComplex z) : v_(std::move(z)) {}  // NOLINT
    static Scalar from_cd(cd z) { return Scalar(MpComplex(z)); }

    bool is_exact() const { return std::holds_alternative<mpq_class>(v_); }
    const mpq_class& exact() const;
    MpComplex to_float() const;
    cd to_cd() const;
    bool is_zero() const;

    // "p/r" for exact values, decimal strings otherwise.
    std::string to_string(int digits = 30) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    std::variant<mpq_class, MpComplex> v_;
};

Scalar q_power(const EvalConfig& cfg, HalfInt a);
Scalar qpochhammer(const EvalConfig& cfg, const Scalar& a, long n);
Scalar qpochhammer_inf(const EvalConfig& cfg, const Scalar& a, double tol);

// Parse "p/r" or an integer literal.
mpq_class parse_rational(const std::string& s);

}  // namespace qgt
