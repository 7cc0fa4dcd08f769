#include <doctest.h>

#include "qgt/contour.hpp"

#include <cmath>

using namespace qgt;

namespace {
const EvalConfig kHalfF = EvalConfig::floating(mpq_class(1, 2));

double rel_err(const Scalar& a, const Scalar& b) {
    const cd x = a.to_cd(), y = b.to_cd();
    return std::abs(x - y) / std::max(1.0, std::abs(y));
}
}  // namespace

TEST_CASE("type A strip form against direct ratios") {
    QuadratureSpec quad;
    // x = q^3 lies outside q^(N-b) < |x| < q^-(b+1) for N = 2, b = 1
    CHECK_THROWS_AS(typeA_finiteN_strip({1, 0}, 2, 1, Scalar::from_cd(0.125), kHalfF, quad), DomainViolation);
    CHECK(rel_err(typeA_finiteN_strip({1, 0}, 2, 1, Scalar::from_cd(1.125), kHalfF, quad),
                  typeA_finiteN_residue_at({1, 0}, 2, 1, Scalar::from_cd(0.5625), kHalfF)) < 1e-10);
    auto x = Scalar::from_cd(1.3);
    CHECK(rel_err(typeA_finiteN_strip({2, 1, 0, 0}, 4, 2, x, kHalfF, quad),
                  typeA_direct_ratio({2, 1, 0, 0}, 2, {x}, kHalfF)) < 1e-10);
    CHECK(rel_err(typeA_finiteN_strip({0, 0, 0}, 3, 1, x, kHalfF, quad), Scalar(mpq_class(1))) < 1e-10);
    for (const Signature& lam : {Signature{3, 1, 0, -2}, Signature{2, 2, -1, -3}, Signature{0, 0, 0, 0}})
        for (long b = 0; b < 4; ++b)
            for (const cd z : {cd(1.3, 0), cd(0.7, 0.4), cd(0.9, -1.1), cd(3.0, 0.5)}) {
                auto xs = Scalar::from_cd(z);
                const bool inside = std::abs(z) > std::pow(0.5, 3 - b) && std::abs(z) < std::pow(2.0, b);
                if (!inside) {
                    CHECK_THROWS_AS(typeA_finiteN_strip(lam, 4, b, xs, kHalfF, quad), DomainViolation);
                    continue;
                }
                CHECK_MESSAGE(rel_err(typeA_finiteN_strip(lam, 4, b, xs, kHalfF, quad),
                                      typeA_direct_ratio(lam, b, {xs}, kHalfF)) < 1e-10,
                              to_string(lam), " b=", b, " x=", z.real(), "+", z.imag(), "i");
            }
}

TEST_CASE("strip value does not depend on the segment position") {
    auto x = Scalar::from_cd(cd(0.8, 0.3));
    const auto ref = typeA_direct_ratio({2, 1, 0, -1}, 1, {x}, kHalfF);
    for (double R : {-2.0, 0.0, 2.0}) {
        QuadratureSpec quad;
        quad.R = R;
        CHECK(rel_err(typeA_finiteN_strip({2, 1, 0, -1}, 4, 1, x, kHalfF, quad), ref) < 1e-10);
    }
}

TEST_CASE("serial and parallel strip quadrature agree bitwise") {
    QuadratureSpec par, ser;
    ser.parallel = false;
    auto x = Scalar::from_cd(1.3);
    auto a = typeA_finiteN_strip({2, 1, 0, 0}, 4, 2, x, kHalfF, par).to_cd();
    auto b = typeA_finiteN_strip({2, 1, 0, 0}, 4, 2, x, kHalfF, ser).to_cd();
    CHECK(a == b);
}

TEST_CASE("B/C/D finite integral, all methods") {
    QuadratureSpec quad;
    const EvalConfig quarter = EvalConfig::floating(mpq_class(1, 4));
    CHECK(rel_err(bcd_finiteN_integral(GroupType{Family::C}, {1}, 1, 0, Scalar::from_cd(0.25), kHalfF, quad),
                  Scalar(mpq_class(17, 10))) < 1e-10);
    {
        GroupType B{Family::B};
        auto x = Scalar::from_cd(2.0);
        CHECK(rel_err(bcd_finiteN_integral(B, {1, 0}, 2, 1, x, quarter, quad),
                      bcd_direct_ratio(B, {1, 0}, 1, {x}, quarter)) < 1e-9);
    }
    for (Family f : {Family::B, Family::C, Family::D}) {
        GroupType g{f};
        const EvalConfig& cf = f == Family::B ? quarter : kHalfF;
        for (const Signature& lam : {Signature{3, 1, 1, 0}, Signature{2, 0, 0}, Signature{0, 0}})
            for (long m = 0; m < static_cast<long>(lam.size()); ++m)
                for (const cd z : {cd(1.3, 0), cd(0.6, 0.5), cd(2.0, -1.0)}) {
                    auto x = Scalar::from_cd(z);
                    const auto ref = bcd_direct_ratio(g, lam, m, {x}, cf);
                    for (BcdMethod meth : {BcdMethod::contour, BcdMethod::strip, BcdMethod::residue})
                        CHECK_MESSAGE(rel_err(bcd_finiteN_integral(g, lam, static_cast<long>(lam.size()), m, x, cf,
                                                                   quad, meth),
                                              ref) < 1e-9,
                                      g.letter(), " ", to_string(lam), " m=", m, " method=", static_cast<int>(meth),
                                      " x=", z.real(), "+", z.imag(), "i");
                }
    }
}

TEST_CASE("doubling check allows for the rounding floor of the strip sum") {
    // B at q = 1/4 with m = N - 1: the sum cancels down to ~1e-3 from terms of order one.
    const EvalConfig quarter = EvalConfig::floating(mpq_class(1, 4));
    GroupType B{Family::B};
    QuadratureSpec quad;
    QuadDiagnostics d;
    const auto x = Scalar::from_cd(1.3);
    const auto v = bcd_finiteN_integral(B, {3, 1, 1, 0}, 4, 3, x, quarter, quad, BcdMethod::strip, &d);
    CHECK(d.roundoff_floor > quad.tol);
    CHECK(d.doubling_delta <= d.roundoff_floor);
    CHECK(rel_err(v, bcd_direct_ratio(B, {3, 1, 1, 0}, 3, {x}, quarter)) < 1e-9);
}
