#include <doctest.h>

#include "qgt/contour.hpp"

using namespace qgt;

namespace {
const EvalConfig kHalf = EvalConfig::exact(mpq_class(1, 2));
const EvalConfig kQuarter = EvalConfig::exact(mpq_class(1, 4), mpq_class(1, 2));
const EvalConfig kSixteenth = EvalConfig::exact(mpq_class(1, 16), mpq_class(1, 4));

double rel_err(const Scalar& a, const Scalar& b) {
    const cd x = a.to_cd(), y = b.to_cd();
    return std::abs(x - y) / std::max(1.0, std::abs(y));
}
}  // namespace

TEST_CASE("type A residue examples") {
    CHECK(typeA_finiteN_residue({1, 0}, 2, 1, HalfInt::integer(3), kHalf).exact() == mpq_class(3, 4));
    CHECK(typeA_finiteN_residue({0, 0, 0}, 3, 2, HalfInt::integer(5), kHalf).exact() == 1);
    CHECK(typeA_finiteN_residue({2, 1, 0}, 3, 1, HalfInt::integer(2), kHalf) ==
          typeA_direct_ratio({2, 1, 0}, 1, {Scalar(mpq_class(1, 2))}, kHalf));
}

TEST_CASE("type A residue equals the direct ratio, including removable points") {
    for (long N = 2; N <= 4; ++N)
        for_each_signature(N, -2, 2, [&](const Signature& lam) {
            for (long b = 1; b < N; ++b)
                for (long a = -1; a <= N + 2; ++a) {
                    auto lhs = typeA_finiteN_residue(lam, N, b, HalfInt::integer(a), kHalf);
                    auto x = Scalar(mpq_class(ipow(kHalf.q, a - b)));
                    CHECK(lhs == typeA_direct_ratio(lam, b, {x}, kHalf));
                }
        });
}

TEST_CASE("slot polynomial matches direct ratios at every slot") {
    const std::vector<mpq_class> xs{mpq_class(3), mpq_class(-2, 5), mpq_class(7, 3)};
    for (long N = 1; N <= 4; ++N)
        for_each_signature(N, -1, 3, [&](const Signature& lam) {
            for (long s = 0; s < N; ++s) {
                auto P = typeA_slot_polynomial(lam, s, kHalf.q);
                for (const auto& x : xs) CHECK(Scalar(P.eval(x)) == typeA_direct_ratio(lam, s, {Scalar(x)}, kHalf));
            }
        });
}

TEST_CASE("float type A residue at a complex point") {
    auto cf = EvalConfig::floating(mpq_class(1, 2));
    Signature lam{3, 1, 0, -1, -2};
    for (long b = 1; b < 5; ++b) {
        Scalar X = Scalar::from_cd(cd(0.4, 0.9));
        auto r = typeA_finiteN_residue_at(lam, 5, b, X, cf);
        auto d = typeA_direct_ratio(lam, b, {X / Scalar(mpq_class(ipow(kHalf.q, b)))}, cf);
        CHECK(rel_err(r, d) < 1e-60);
    }
}

TEST_CASE("BCD residue is exact at q-power points") {
    struct Case {
        Family g;
        EvalConfig cfg;
    };
    for (const auto& c : {Case{Family::C, kHalf}, Case{Family::D, kHalf}, Case{Family::B, kSixteenth}}) {
        GroupType g{c.g};
        for (long N = 1; N <= 3; ++N)
            for_each_signature(N, 0, 2, [&](const Signature& lam) {
                for (long m = 0; m < N; ++m)
                    for (long a2 = -4; a2 <= 2 * N + 4; ++a2) {
                        HalfInt a{a2};
                        if (g.tag != Family::B && !a.is_integral()) continue;
                        if (a2 == 0) continue;  // x = 1: branch point of the B/C prefactor
                        auto r = bcd_finiteN_residue(g, lam, m, a, c.cfg);
                        auto d = bcd_direct_ratio(g, lam, m, {q_power(c.cfg, a)}, c.cfg);
                        CHECK_MESSAGE(r == d, g.letter(), " ", to_string(lam), " m=", m, " a2=", a2);
                    }
            });
    }
}

TEST_CASE("float BCD residue at generic points") {
    for (Family f : {Family::B, Family::C, Family::D}) {
        GroupType g{f};
        auto cf = EvalConfig::floating(f == Family::B ? mpq_class(1, 4) : mpq_class(1, 2));
        for (const cd x : {cd(1.3, 0), cd(0.6, 0.5), cd(2.0, -1.0)}) {
            Signature lam{3, 1, 1, 0};
            for (long m = 0; m < 4; ++m) {
                auto r = bcd_finiteN_residue_at(g, lam, m, Scalar::from_cd(x), cf);
                auto d = bcd_direct_ratio(g, lam, m, {Scalar::from_cd(x)}, cf);
                CHECK(rel_err(r, d) < 1e-60);
            }
        }
    }
}

TEST_CASE("type A multivariate determinant") {
    const auto& q = kHalf.q;
    // exact q-power points
    for (long N = 2; N <= 5; ++N)
        for_each_signature(N, 0, 2, [&](const Signature& lam) {
            for (long k = 1; k <= std::min(3L, N); ++k)
                for (long b = 0; b + k <= N; ++b) {
                    std::vector<Scalar> xs;
                    for (long i = 0; i < k; ++i) xs.emplace_back(mpq_class(ipow(q, N + 2 - 2 * i - b)));
                    CHECK(typeA_multivar_det(lam, N, b, xs, kHalf) == typeA_direct_ratio(lam, b, xs, kHalf));
                }
        });
    CHECK(typeA_multivar_det({2, 1, 0, 0}, 4, 1, {Scalar(mpq_class(1, 16)), Scalar(mpq_class(1, 32))}, kHalf) ==
          typeA_direct_ratio({2, 1, 0, 0}, 1, {Scalar(mpq_class(1, 16)), Scalar(mpq_class(1, 32))}, kHalf));
    CHECK_THROWS_AS(typeA_multivar_det({1, 0, 0}, 3, 0, {Scalar(mpq_class(2)), Scalar(mpq_class(2))}, kHalf),
                    CoincidentPoints);
}

TEST_CASE("BC multivariate determinant") {
    struct Case {
        Family g;
        EvalConfig cfg;
    };
    for (const auto& c : {Case{Family::C, kHalf}, Case{Family::D, kHalf}, Case{Family::B, kQuarter}}) {
        GroupType g{c.g};
        QPowers<mpq_class> qp(c.cfg);
        for (long N = 1; N <= 4; ++N)
            for_each_signature(N, 0, 2, [&](const Signature& lam) {
                for (long k = 1; k <= std::min(3L, N); ++k) {
                    std::vector<Scalar> xs;
                    for (long i = 0; i < k; ++i)
                        xs.emplace_back(qp.pow(HalfInt::integer(N + 3 - 2 * i) + g.epsilon()));
                    CHECK(bcd_multivar_det(g, lam, N, xs, c.cfg) == bcd_direct_ratio(g, lam, 0, xs, c.cfg));
                }
            });
        // generic rational points
        std::vector<Scalar> xs{Scalar(mpq_class(3)), Scalar(mpq_class(-2, 7)), Scalar(mpq_class(5, 3))};
        CHECK(bcd_multivar_det(g, {2, 1, 1, 0}, 4, xs, c.cfg) == bcd_direct_ratio(g, {2, 1, 1, 0}, 0, xs, c.cfg));
    }
}
