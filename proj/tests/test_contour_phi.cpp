#include <doctest.h>

#include "qgt/contour.hpp"

#include <cmath>

using namespace qgt;

namespace {
const EvalConfig kHalfF = EvalConfig::floating(mpq_class(1, 2));

double rel_err(const Scalar& a, cd b) {
    return std::abs(a.to_cd() - b) / std::max(1.0, std::abs(b));
}

// lambda_i = t_{b+1-i} with b = N/2
Signature stabilized(const BoundaryPointA& t, long N) {
    Signature lam(N);
    for (long i = 1; i <= N; ++i) lam[i - 1] = t.t(N / 2 + 1 - i);
    return lam;
}

// y read from the bottom: lambda_{N+1-i} = y_i
Signature stabilized(const BoundaryPointBC& y, long N) {
    Signature lam(N);
    for (long i = 1; i <= N; ++i) lam[N - i] = y.y(i);
    return lam;
}
}  // namespace

TEST_CASE("boundary point parsing") {
    auto t = BoundaryPointA::parse("0:1,1,2:3@-1");
    CHECK(t.t(-5) == 0);
    CHECK(t.t(-1) == 1);
    CHECK(t.t(1) == 2);
    CHECK(t.t(9) == 3);
    CHECK(BoundaryPointA::parse(t.to_string()).to_string() == t.to_string());
    CHECK_THROWS(BoundaryPointA::parse("2:1:3@0"));
    auto y = BoundaryPointBC::parse("0,1,2");
    CHECK(y.y(1) == 0);
    CHECK(y.y(7) == 2);
    CHECK_THROWS(BoundaryPointBC::parse("1,0"));
    CHECK_THROWS(BoundaryPointBC::parse("-1,0"));
}

TEST_CASE("type A limit function") {
    QuadratureSpec quad;
    const auto x = Scalar::from_cd(0.7);
    CHECK(rel_err(phiA(BoundaryPointA::constant(0), x, kHalfF, quad), 1.0) < 1e-9);
    CHECK(rel_err(phiA(BoundaryPointA::constant(2), x, kHalfF, quad), 0.49) < 1e-9);
    CHECK(rel_err(phiA(BoundaryPointA::constant(-1), Scalar::from_cd(cd(1.2, 0.6)), kHalfF, quad),
                  1.0 / cd(1.2, 0.6)) < 1e-9);

    const auto x13 = Scalar::from_cd(1.3);
    for (const BoundaryPointA& t : {BoundaryPointA{0, {}, 1, 1}, BoundaryPointA{0, {1}, 1, 3}}) {
        const cd phi = phiA(t, x13, kHalfF, quad).to_cd();
        const cd at40 = typeA_direct_ratio(stabilized(t, 40), 20, {x13}, kHalfF).to_cd();
        const cd at20 = typeA_direct_ratio(stabilized(t, 20), 10, {x13}, kHalfF).to_cd();
        CHECK(std::abs(phi - at40) < 1e-6);
        CHECK(std::abs(phi - at40) < std::abs(phi - at20));
    }
    CHECK_THROWS_AS(phiA(BoundaryPointA::constant(0), Scalar::from_cd(0.25 + 1e-5), kHalfF, quad),
                    PoleNeighborhood);
    CHECK_THROWS_AS(phiA(BoundaryPointA::constant(0), Scalar::from_cd(-0.5), kHalfF, quad), DomainViolation);
}

TEST_CASE("type A multivariate limit") {
    QuadratureSpec quad;
    const BoundaryPointA t{0, {1}, 1, 3};
    const std::vector<Scalar> xs{Scalar::from_cd(1.3), Scalar::from_cd(0.8)};
    CHECK(rel_err(phiA_multivar(t, {xs[0]}, kHalfF, quad), phiA(t, xs[0], kHalfF, quad).to_cd()) < 1e-12);
    CHECK(rel_err(phiA_multivar(BoundaryPointA::constant(0), xs, kHalfF, quad), 1.0) < 1e-9);
    CHECK(rel_err(phiA_multivar(t, xs, kHalfF, quad),
                  typeA_direct_ratio(stabilized(t, 40), 20, xs, kHalfF).to_cd()) < 1e-6);
    CHECK(rel_err(phiA_multivar(t, {Scalar::from_cd(1.0), Scalar::from_cd(0.5)}, kHalfF, quad), 1.0) < 1e-8);
    CHECK_THROWS_AS(phiA_multivar(t, {xs[0], xs[0]}, kHalfF, quad), CoincidentPoints);
}

TEST_CASE("B/C/D limit functions") {
    QuadratureSpec quad;
    const BoundaryPointBC y{{0, 1, 2}};
    const auto x = Scalar::from_cd(1.3);
    const cd z(0.6, 0.5);
    for (Family f : {Family::B, Family::C, Family::D}) {
        GroupType g{f};
        for (long m : {0L, 1L}) {
            CAPTURE(g.letter());
            CAPTURE(m);
            CHECK(rel_err(phiBCD(g, BoundaryPointBC{}, m, Scalar::from_cd(1.7), kHalfF, quad), 1.0) < 1e-9);
            CHECK(rel_err(phiBCD(g, y, m, x, kHalfF, quad),
                          bcd_direct_ratio(g, stabilized(y, 40), m, {x}, kHalfF).to_cd()) < 1e-6);
            CHECK(rel_err(phiBCD(g, y, m, Scalar::from_cd(z), kHalfF, quad),
                          phiBCD(g, y, m, Scalar::from_cd(1.0 / z), kHalfF, quad).to_cd()) < 1e-8);
        }
    }
    // the removed principal point restored gives ratio 1
    GroupType C{Family::C};
    const auto qm = Scalar::from_cd(std::pow(0.5, 1 + C.epsilon().to_double()));
    CHECK_THROWS_AS(phiBCD(C, y, 1, qm, kHalfF, quad), PoleNeighborhood);
    CHECK(rel_err(phiBCD(C, y, 1, qm, kHalfF, quad, Continuation::mean_value), 1.0) < 1e-8);
    GroupType B{Family::B};
    CHECK(rel_err(phiBCD(B, y, 0, Scalar::from_cd(std::sqrt(0.5)), kHalfF, quad, Continuation::mean_value), 1.0) <
          1e-8);
}

TEST_CASE("B/C/D multivariate limit") {
    QuadratureSpec quad;
    const BoundaryPointBC y{{0, 1, 1}};
    const std::vector<Scalar> xs{Scalar::from_cd(1.3), Scalar::from_cd(0.8)};
    for (Family f : {Family::B, Family::C, Family::D}) {
        GroupType g{f};
        CAPTURE(g.letter());
        CHECK(rel_err(phiBCD_multivar(g, y, xs, kHalfF, quad),
                      bcd_multivar_det(g, stabilized(y, 36), 36, xs, kHalfF).to_cd()) < 1e-5);
        CHECK(rel_err(phiBCD_multivar(g, BoundaryPointBC{}, xs, kHalfF, quad), 1.0) < 1e-8);
    }
    GroupType C{Family::C};
    CHECK_THROWS_AS(phiBCD_multivar(C, y, {xs[0], Scalar::from_cd(1.0 / 1.3)}, kHalfF, quad), CoincidentOrbit);
}
