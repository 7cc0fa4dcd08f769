#include <doctest.h>

#include "qgt/chars.hpp"

#include <random>

using namespace qgt;

namespace {
std::vector<Scalar> rats(std::initializer_list<mpq_class> xs) {
    std::vector<Scalar> v;
    for (const auto& x : xs) v.emplace_back(x);
    return v;
}
const EvalConfig kHalf = EvalConfig::exact(mpq_class(1, 2));
const EvalConfig kQuarter = EvalConfig::exact(mpq_class(1, 4), mpq_class(1, 2));

std::vector<mpq_class> qpts(const QPowers<mpq_class>& qp, const std::vector<HalfInt>& ex) {
    std::vector<mpq_class> v;
    for (auto e : ex) v.push_back(qp.pow(e));
    return v;
}
}  // namespace

TEST_CASE("interlacing examples") {
    CHECK(interlaces(InterlaceKind::gt, {2, 0}, {1}));
    CHECK_FALSE(interlaces(InterlaceKind::gt, {2, 0}, {3}));
    CHECK(interlaces(InterlaceKind::bc_same_length, {1, 0}, {1, 0}));
    CHECK_THROWS_AS(interlaces(InterlaceKind::gt, {2, 0}, {1, 0}), LengthMismatch);
    CHECK(interlacing_below({2, 0}).size() == 3);
}

TEST_CASE("schur_eval examples") {
    CHECK(schur_eval({1, 0}, rats({1, mpq_class(1, 2)}), kHalf).exact() == mpq_class(3, 2));
    CHECK(schur_eval({0, 0, 0}, rats({2, 3, 5}), kHalf).exact() == 1);
    CHECK(schur_eval({2, 1}, rats({1, mpq_class(1, 2)}), kHalf).exact() == mpq_class(3, 4));
    CHECK_THROWS_AS(schur_eval({1, 0}, rats({2, 2}), kHalf), CoincidentPoints);
    CHECK_THROWS_AS(schur_eval({0, -1}, rats({0, 2}), kHalf), ZeroPoint);
}

TEST_CASE("schur_principal examples") {
    CHECK(schur_principal({2, 1}, 2, kHalf).exact() == mpq_class(3, 4));
    CHECK(schur_principal({0, 0, 0, 0}, 4, kHalf).exact() == 1);
    CHECK(schur_principal({1, 0}, 2, kHalf).exact() == mpq_class(3, 2));
    // tableau enumeration, tests/oracles/chars_oracle.py
    CHECK(schur_principal({3, 1, 0}, 3, kHalf).exact() == mpq_class(217, 128));
}

TEST_CASE("bcd_eval examples") {
    CHECK(bcd_eval({Family::C}, {1}, rats({2}), kHalf).exact() == mpq_class(5, 2));
    CHECK(bcd_eval({Family::D}, {0}, rats({7}), kHalf).exact() == 2);
    CHECK(bcd_eval({Family::B}, {0}, rats({7}), kHalf).exact() == 1);
    auto p = rats({2, 3, mpq_class(5, 2)});
    // Weyl ratio with Laplace expansion, tests/oracles/chars_oracle.py
    CHECK(bcd_eval({Family::B}, {2, 1, 0}, p, kHalf).exact() == mpq_class(252319, 900));
    CHECK(bcd_eval({Family::C}, {2, 1, 0}, p, kHalf).exact() == mpq_class(3927, 20));
    CHECK(bcd_eval({Family::D}, {2, 1, 0}, p, kHalf).exact() == mpq_class(3927, 10));
    CHECK(bcd_eval({Family::C}, {2, 2}, rats({mpq_class(1, 2), mpq_class(1, 4)}), kHalf).exact() ==
          mpq_class(6477, 64));
    CHECK_THROWS_AS(bcd_eval({Family::C}, {1, 0}, rats({2, mpq_class(1, 2)}), kHalf), CoincidentOrbit);
}

TEST_CASE("bcd_principal examples") {
    CHECK(bcd_principal({Family::C}, {1}, kHalf).exact() == mpq_class(5, 2));
    CHECK(bcd_principal({Family::D}, {0, 0, 0}, kHalf).exact() == 2);
    CHECK(bcd_principal({Family::B}, {0, 0, 0}, kQuarter).exact() == 1);
    CHECK(bcd_principal({Family::B}, {2, 1}, kQuarter).exact() == mpq_class(43307, 128));
    CHECK(bcd_principal({Family::C}, {3, 1, 0}, kHalf).exact() == mpq_class(17716881, 2048));
    CHECK(bcd_principal({Family::D}, {3, 1, 1}, kHalf).exact() == mpq_class(93345, 64));
    CHECK_THROWS_AS(bcd_principal({Family::B}, {1}, kHalf), HalfPowerUnavailable);
}

TEST_CASE("sym_poly_eval examples") {
    CHECK(sym_poly_eval(SymKind::h, 0, rats({3, 4}), kHalf).exact() == 1);
    CHECK(sym_poly_eval(SymKind::e, 2, rats({1, mpq_class(1, 2), mpq_class(1, 4)}), kHalf).exact() ==
          mpq_class(7, 8));
    CHECK(sym_poly_eval(SymKind::HCD, 1, rats({2}), kHalf).exact() == mpq_class(5, 2));
    CHECK(sym_poly_eval(SymKind::e, 4, rats({1, 2, 3}), kHalf).exact() == 0);
    CHECK(sym_poly_eval(SymKind::EB, 4, rats({2}), kHalf).exact() == 0);
    CHECK(sym_poly_eval(SymKind::EB, 3, rats({2}), kHalf).exact() == 1);
    CHECK(sym_poly_eval(SymKind::h, -1, rats({2}), kHalf).exact() == 0);
    CHECK_THROWS_AS(sym_poly_eval(SymKind::HCD, 1, rats({0}), kHalf), ZeroPoint);
}

TEST_CASE("hook_char_eval examples") {
    CHECK(hook_char_eval(HookFamily::schurA, 0, 0, 2, rats({1, mpq_class(1, 2)}), kHalf).exact() ==
          mpq_class(3, 2));
    CHECK(hook_char_eval(HookFamily::C, 0, 0, 1, rats({2}), kHalf).exact() == mpq_class(5, 2));
    CHECK(hook_char_eval(HookFamily::D, 0, 0, 1, rats({2}), kHalf) ==
          bcd_eval({Family::D}, {1}, rats({2}), kHalf));
    CHECK_THROWS_AS(hook_char_eval(HookFamily::C, 0, 2, 2, rats({2, 3}), kHalf), BadShape);
}

TEST_CASE("Frobenius coordinates round-trip") {
    for_each_signature(4, 0, 4, [](const Signature& s) {
        auto f = frobenius_coords(s);
        CHECK(from_frobenius(f, s.size()) == s);
    });
    auto f = frobenius_coords({4, 3, 1});
    CHECK(f.a == std::vector<long>{3, 1});
    CHECK(f.b == std::vector<long>{2, 0});
}

TEST_CASE("Jacobi-Trudi and Frobenius examples") {
    auto p3 = rats({2, 3, mpq_class(5, 2)});
    CHECK(jacobi_trudi_eval({Family::B}, {0, 0, 0}, p3, kHalf).exact() == 1);
    CHECK(jacobi_trudi_eval({Family::D}, {2, 1, 0}, p3, kHalf).exact() == mpq_class(3927, 10));
    CHECK(frobenius_det_eval({Family::C}, {2, 2}, rats({mpq_class(1, 2), mpq_class(1, 4)}), kHalf)
              .exact() == mpq_class(6477, 64));
    CHECK(frobenius_det_eval({Family::D}, {2, 2, 0}, rats({1, mpq_class(1, 2), mpq_class(1, 4)}), kHalf)
              .exact() == mpq_class(22225, 32));
}

TEST_CASE("principal specializations equal Weyl evaluation at geometric points") {
    QPowers<mpq_class> qh(kHalf), qq(kQuarter);
    for (std::size_t n = 1; n <= 4; ++n)
        for_each_signature(n, 0, 3, [&](const Signature& lam) {
            std::vector<mpq_class> g;
            for (std::size_t i = 0; i < n; ++i) g.push_back(qh.pow(static_cast<long>(i)));
            CHECK(schur_principal_t(lam, qh) == schur_eval_t(lam, g));
            for (Family f : {Family::B, Family::C, Family::D}) {
                GroupType G{f};
                const auto& qp = f == Family::B ? qq : qh;
                auto z = qpts(qp, G.exponents(Signature(n, 0)));
                CHECK(bcd_principal_t(G, lam, qp) == bcd_eval_t(G, lam, z));
            }
        });
}

TEST_CASE("Weyl-group invariance and homogeneity") {
    std::mt19937_64 rng(3);
    auto rnd = [&] {
        mpq_class r(static_cast<long>(rng() % 17) + 2, static_cast<long>(rng() % 5) + 1);
        r.canonicalize();
        return r;
    };
    for (int t = 0; t < 40; ++t) {
        std::vector<mpq_class> z = {rnd(), rnd(), rnd()};
        auto orbit = [](const mpq_class& a, const mpq_class& b) { return a == b || a * b == 1; };
        if (orbit(z[0], z[1]) || orbit(z[1], z[2]) || orbit(z[0], z[2])) continue;
        Signature lam = {static_cast<long>(rng() % 4), 0, 0};
        lam[1] = static_cast<long>(rng() % (lam[0] + 1));
        lam[2] = static_cast<long>(rng() % (lam[1] + 1));
        for (Family f : {Family::B, Family::C, Family::D}) {
            GroupType G{f};
            mpq_class base = bcd_eval_t(G, lam, z);
            auto zi = z;
            zi[1] = 1 / zi[1];
            CHECK(bcd_eval_t(G, lam, zi) == base);
            auto zp = std::vector<mpq_class>{z[2], z[0], z[1]};
            CHECK(bcd_eval_t(G, lam, zp) == base);
        }
        mpq_class c(3, 2);
        std::vector<mpq_class> cz;
        for (auto& x : z) cz.push_back(c * x);
        CHECK(schur_eval_t(lam, cz) == ipow(c, weight(lam)) * schur_eval_t(lam, z));
    }
}

TEST_CASE("Schur label-variable duality (exhaustive N<=4, parts<=3)") {
    QPowers<mpq_class> qp(kHalf);
    for (std::size_t n = 1; n <= 4; ++n) {
        auto sigs = all_signatures(n, 0, 3);
        auto at = [&](const Signature& lam, const Signature& mu) {
            std::vector<mpq_class> pts;
            for (std::size_t i = 0; i < n; ++i) pts.push_back(qp.pow(mu[i] + static_cast<long>(n - 1 - i)));
            return mpq_class(schur_eval_t(lam, pts) / schur_principal_t(lam, qp));
        };
        for (const auto& lam : sigs)
            for (const auto& mu : sigs) CHECK(at(lam, mu) == at(mu, lam));
    }
}

TEST_CASE("Schur branching rule at exact points") {
    std::vector<mpq_class> x = {mpq_class(3, 7), 2, mpq_class(5, 3)};
    mpq_class u(4, 9);
    for (std::size_t n = 1; n <= 3; ++n)
        for_each_signature(n + 1, 0, 3, [&](const Signature& lam) {
            std::vector<mpq_class> xs(x.begin(), x.begin() + static_cast<long>(n));
            auto full = xs;
            full.push_back(u);
            mpq_class sum = 0;
            for (const auto& mu : interlacing_below(lam))
                sum += schur_eval_t(mu, xs) * ipow(u, weight(lam) - weight(mu));
            CHECK(sum == schur_eval_t(lam, full));
        });
}

TEST_CASE("hook, Jacobi-Trudi and Frobenius agree with Weyl (exhaustive N<=4, parts<=3)") {
    std::vector<mpq_class> base = {mpq_class(2), mpq_class(7, 3), mpq_class(11, 2), mpq_class(3, 13)};
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<mpq_class> z(base.begin(), base.begin() + static_cast<long>(n));
        for_each_signature(n, 0, 3, [&](const Signature& lam) {
            for (Family f : {Family::B, Family::C, Family::D}) {
                GroupType G{f};
                mpq_class w = bcd_eval_t(G, lam, z);
                CHECK(jacobi_trudi_eval_t(G, lam, z) == w);
                CHECK(frobenius_det_eval_t(G, lam, z) == w);
                auto fr = frobenius_coords(lam);
                if (fr.a.size() == 1) {
                    HookFamily hf = f == Family::B ? HookFamily::B : f == Family::C ? HookFamily::C : HookFamily::D;
                    CHECK(hook_char_eval_t(hf, fr.a[0], fr.b[0], static_cast<long>(n), z) == w);
                }
            }
            auto fr = frobenius_coords(lam);
            if (fr.a.size() == 1)
                CHECK(hook_char_eval_t(HookFamily::schurA, fr.a[0], fr.b[0], static_cast<long>(n), z) ==
                      schur_eval_t(lam, z));
        });
    }
}

TEST_CASE("BC label-variable duality (exhaustive N<=4, parts<=3)") {
    for (Family f : {Family::B, Family::C, Family::D}) {
        GroupType G{f};
        const EvalConfig& cfg = f == Family::B ? kQuarter : kHalf;
        QPowers<mpq_class> qp(cfg);
        for (std::size_t n = 1; n <= 4; ++n) {
            auto sigs = all_signatures(n, 0, 3);
            auto ratio = [&](const Signature& lam, const Signature& nu) {
                return mpq_class(bcd_eval_t(G, lam, qpts(qp, G.exponents(nu))) / bcd_principal_t(G, lam, qp));
            };
            for (const auto& lam : sigs)
                for (const auto& nu : sigs) CHECK(ratio(lam, nu) == ratio(nu, lam));
        }
    }
}

TEST_CASE("float backend matches exact backend") {
    auto cf = EvalConfig::floating(mpq_class(1, 2));
    auto p = rats({2, 3, mpq_class(5, 2)});
    auto v = bcd_eval({Family::B}, {2, 1, 0}, p, cf);
    CHECK_FALSE(v.is_exact());
    CHECK(v.to_cd().real() == doctest::Approx(252319.0 / 900.0).epsilon(1e-14));
    std::vector<cd> pc = {cd(2, 0), cd(3, 0), cd(2.5, 0)};
    CHECK(bcd_eval_t(GroupType{Family::C}, {2, 1, 0}, pc).real() ==
          doctest::Approx(3927.0 / 20.0).epsilon(1e-12));
}
