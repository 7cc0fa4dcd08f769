#include <doctest.h>

#include "qgt/arith.hpp"

#include <random>

using namespace qgt;

TEST_CASE("q_power examples") {
    auto c4 = EvalConfig::exact(mpq_class(1, 4), mpq_class(1, 2));
    CHECK(q_power(c4, HalfInt::half(1)).exact() == mpq_class(1, 2));
    auto c2 = EvalConfig::exact(mpq_class(1, 2));
    CHECK(q_power(c2, HalfInt::integer(0)).exact() == 1);
    CHECK(q_power(c2, HalfInt::integer(3)).exact() == mpq_class(1, 8));
    CHECK(q_power(c2, HalfInt::integer(-2)).exact() == 4);
    CHECK_THROWS_AS(q_power(c2, HalfInt::half(3)), HalfPowerUnavailable);
}

TEST_CASE("q_power float half power") {
    auto cf = EvalConfig::floating(mpq_class(1, 2));
    auto v = q_power(cf, HalfInt::half(1)).to_cd();
    CHECK(v.real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(EvalConfig::exact(mpq_class(3, 2)), InvalidConfig);
    CHECK_THROWS_AS(EvalConfig::exact(mpq_class(0)), InvalidConfig);
    CHECK_THROWS_AS(EvalConfig::exact(mpq_class(1, 4), mpq_class(1, 3)), InvalidConfig);
}

TEST_CASE("qpochhammer examples") {
    auto c = EvalConfig::exact(mpq_class(1, 2));
    CHECK(qpochhammer(c, Scalar(mpq_class(0)), 5).exact() == 1);
    CHECK(qpochhammer(c, Scalar(mpq_class(1, 2)), 2).exact() == mpq_class(3, 8));
    CHECK(qpochhammer(c, Scalar(mpq_class(7, 3)), 0).exact() == 1);
}

TEST_CASE("qpochhammer_inf") {
    auto cf = EvalConfig::floating(mpq_class(1, 2));
    CHECK(qpochhammer_inf(cf, Scalar(mpq_class(0)), 1e-30).to_cd().real() == 1.0);
    CHECK(qpochhammer_inf(cf, Scalar(mpq_class(1)), 1e-30).is_zero());
    // decimal product of 200 factors, tests/oracles/chars_oracle.py
    MpReal ref = MpReal(mpq_class("28878809508660242127889972192923078008891190484071/"
                                  "100000000000000000000000000000000000000000000000000"));
    PrecisionScope ps(256);
    auto v = qpochhammer_inf(cf, Scalar(mpq_class(1, 2)), 1e-45).to_float();
    CHECK(abs(v.real() - ref).to_double() < 1e-44);
    auto ce = EvalConfig::exact(mpq_class(1, 2));
    CHECK_THROWS_AS(qpochhammer_inf(ce, Scalar(mpq_class(1, 2)), 1e-30), ExactModeUnsupported);
}

TEST_CASE("Pochhammer concatenation and power additivity are exact") {
    std::mt19937_64 rng(7);
    auto c = EvalConfig::exact(mpq_class(1, 3));
    QPowers<mpq_class> qp(c);
    for (int trial = 0; trial < 50; ++trial) {
        mpq_class a(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 7) + 1);
        a.canonicalize();
        long n = static_cast<long>(rng() % 6), m = static_cast<long>(rng() % 6);
        mpq_class lhs = qpoch(a, c.q, n + m);
        mpq_class rhs = qpoch(a, c.q, n) * qpoch(mpq_class(a * qp.pow(n)), c.q, m);
        CHECK(lhs == rhs);
        long x = static_cast<long>(rng() % 15) - 7, y = static_cast<long>(rng() % 15) - 7;
        CHECK(qp.pow(x + y) == qp.pow(x) * qp.pow(y));
    }
    auto cs = EvalConfig::exact(mpq_class(1, 9), mpq_class(1, 3));
    QPowers<mpq_class> qs(cs);
    for (long x = -5; x <= 5; ++x)
        for (long y = -5; y <= 5; ++y)
            CHECK(qs.pow(HalfInt{x + y}) == qs.pow(HalfInt{x}) * qs.pow(HalfInt{y}));
}

TEST_CASE("float Pochhammer tracks exact to the working precision") {
    std::mt19937_64 rng(11);
    for (long bits : {128L, 256L}) {
        auto ce = EvalConfig::exact(mpq_class(2, 5));
        auto cf = EvalConfig::floating(mpq_class(2, 5), bits);
        const double bound = std::ldexp(1.0, static_cast<int>(-bits + 8));
        for (int t = 0; t < 1000; ++t) {
            // |a| <= 1 keeps each factor 1 - a q^i at condition number below 2^7
            mpq_class a(static_cast<long>(rng() % 195) - 97, 97);
            a.canonicalize();
            long n = static_cast<long>(rng() % 12);
            mpq_class ex = qpochhammer(ce, Scalar(a), n).exact();
            if (sgn(ex) == 0) continue;
            PrecisionScope ps(bits + 64);
            MpReal fl = qpochhammer(cf, Scalar(MpComplex(MpReal(a))), n).to_float().real();
            MpReal rel = abs((fl - MpReal(ex)) / MpReal(ex));
            CHECK(rel.to_double() <= bound);
        }
    }
}

TEST_CASE("Scalar formatting") {
    CHECK(Scalar(mpq_class(5, 2)).to_string() == "5/2");
    CHECK(Scalar(mpq_class(3)).to_string() == "3");
    CHECK(parse_rational("1/2") == mpq_class(1, 2));
    CHECK_THROWS_AS(parse_rational("x"), InvalidConfig);
}
