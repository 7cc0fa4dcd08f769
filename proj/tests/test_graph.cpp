#include <doctest.h>

#include "qgt/graph.hpp"

#include <random>
#include <set>

using namespace qgt;

namespace {
const EvalConfig kHalf = EvalConfig::exact(mpq_class(1, 2));
const EvalConfig kSixteenth = EvalConfig::exact(mpq_class(1, 16), mpq_class(1, 4));

const EvalConfig& cfg_for(Family f) { return f == Family::B ? kSixteenth : kHalf; }

Signature random_signature(std::mt19937_64& rng, long n, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    Signature s(static_cast<std::size_t>(n));
    for (auto& v : s) v = d(rng);
    std::sort(s.rbegin(), s.rend());
    return s;
}

void check_stochastic(const KernelRow& row) {
    for (const auto& [mu, p] : row.mass) CHECK(p.exact() >= 0);
    CHECK(row.total().exact() == 1);
}
}  // namespace

TEST_CASE("sign sequences") {
    auto s = SignSequence::parse("alt");
    CHECK(s.sigma(1) == 1);
    CHECK(s.sigma(2) == -1);
    for (long n = 0; n < 12; ++n) CHECK(s.b(n) == n / 2);
    CHECK(s.b_k(3, 10) == 4);
    CHECK(s.generic());
    CHECK_FALSE(SignSequence::parse("+").generic());
    CHECK(SignSequence::parse("+--").b(7) == 4);
    CHECK_THROWS_AS(SignSequence::parse("+x"), InvalidConfig);
}

TEST_CASE("type A one-step kernel") {
    auto row = kernelA_step({1, 0}, 1, kHalf);
    CHECK(row.mass.size() == 2);
    CHECK(row.at({0}).exact() == mpq_class(1, 3));
    CHECK(row.at({1}).exact() == mpq_class(2, 3));
    auto flat = kernelA_step({2, 2, 2}, -1, kHalf);
    CHECK(flat.mass.size() == 1);
    CHECK(flat.at({2, 2}).exact() == 1);
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 60; ++rep) {
        const long n = 2 + rep % 6;
        const auto lam = random_signature(rng, n, -2, 4);
        check_stochastic(kernelA_step(lam, 1, kHalf));
        check_stochastic(kernelA_step(lam, -1, kHalf));
    }
}

TEST_CASE("BC skew weights and one-step kernels") {
    // C, lambda = (1, 0): chi_{lambda/(0)}(u) = u + 1/u, chi_{lambda/(1)}(u) = 1
    GroupType C{Family::C};
    const Scalar u(mpq_class(1, 4));
    CHECK(bc_skew_weight(C, {1, 0}, {0}, u).exact() == mpq_class(17, 4));
    CHECK(bc_skew_weight(C, {1, 0}, {1}, u).exact() == 1);
    auto row = kernelBC_step(C, {1, 0}, kHalf);
    const auto top = bcd_principal(C, {1, 0}, kHalf);
    CHECK(row.at({0}) == Scalar(mpq_class(17, 4)) * bcd_principal(C, {0}, kHalf) / top);
    CHECK(row.at({1}) == bcd_principal(C, {1}, kHalf) / top);
    check_stochastic(row);

    for (Family f : {Family::B, Family::C, Family::D}) {
        GroupType g{f};
        const auto& cfg = cfg_for(f);
        for (long n = 2; n <= 4; ++n)
            for_each_signature(n, 0, 3, [&](const Signature& lam) {
                auto r = kernelBC_step(g, lam, cfg);
                CAPTURE(g.letter());
                CAPTURE(to_string(lam));
                check_stochastic(r);
                const Scalar uq = q_power(cfg, HalfInt::integer(n - 1) + g.epsilon());
                for (const auto& [mu, p] : r.mass)
                    CHECK(bc_skew_weight(g, lam, mu, uq) == bc_skew_weight(g, lam, mu, uq, true));
            });
        check_stochastic(kernelBC_step(g, Signature(4, 0), cfg));
        CHECK(kernelBC_step(g, Signature(4, 0), cfg).at(Signature(3, 0)).exact() == 1);
    }
}

TEST_CASE("BC branching rule with the skew weights") {
    const std::vector<mpq_class> pts{mpq_class(3), mpq_class(-2, 5), mpq_class(7, 4)};
    const Scalar u(mpq_class(5, 2));
    for (Family f : {Family::B, Family::C, Family::D}) {
        GroupType g{f};
        for (long n = 1; n <= 3; ++n)
            for_each_signature(n + 1, 0, 3, [&](const Signature& lam) {
                std::vector<Scalar> z;
                for (long i = 0; i < n; ++i) z.emplace_back(pts[i]);
                std::vector<Scalar> zu = z;
                zu.push_back(u);
                const auto lhs = bcd_eval(g, lam, zu, kHalf);
                Scalar rhs(mpq_class(0));
                std::set<Signature> mus;
                for (const auto& nu : bc_interlacing_below(lam))
                    for (const auto& mu : interlacing_below(nu)) mus.insert(mu);
                for (const auto& mu : mus) rhs = rhs + bc_skew_weight(g, lam, mu, u) * bcd_eval(g, mu, z, kHalf);
                CHECK_MESSAGE(lhs == rhs, g.letter(), " ", to_string(lam));
            });
    }
}

TEST_CASE("type A multi-step kernel equals composed steps") {
    for (const char* pat : {"+", "-", "+-", "-++"}) {
        const auto sigma = SignSequence::parse(pat);
        const Graph g = Graph::symA(sigma);
        for (long N = 2; N <= 6; ++N)
            for_each_signature(N, -1, 2, [&](const Signature& lam) {
                for (long k = 1; k <= std::min(3L, N - 1); ++k) {
                    auto a = kernelA_multi_exact(lam, k, sigma, kHalf);
                    auto b = compose_kernels(g, lam, k, kHalf);
                    CHECK_MESSAGE(a.mass == b.mass, pat, " ", to_string(lam), " k=", k);
                }
            });
        auto one = kernelA_multi_exact({2, 1, 0}, 2, sigma, kHalf);
        CHECK(one.mass == kernelA_step({2, 1, 0}, sigma.sigma(3), kHalf).mass);
    }
    auto flat = kernelA_multi_exact(Signature(5, 1), 2, SignSequence::parse("+-"), kHalf);
    CHECK(flat.mass.size() == 1);
    CHECK(flat.at({1, 1}).exact() == 1);
}

TEST_CASE("chain sampling") {
    const Graph g = Graph::symA(SignSequence::parse("+-"));
    const Signature top{3, 2, 2, 1, 0, 0};
    ChainSampler s(g, kHalf);
    auto a = s.sample(top, 2, 99);
    auto b = s.sample(top, 2, 99);
    CHECK(a.levels == b.levels);
    REQUIRE(a.levels.size() == 5);
    for (std::size_t i = 1; i < a.levels.size(); ++i) CHECK(interlaces(InterlaceKind::gt, a.levels[i - 1], a.levels[i]));
    CHECK(sample_chain(g, Signature(5, 0), 1, 3, kHalf).levels.back() == Signature{0});

    // serial and parallel runs give the same endpoints
    CHECK(s.sample_many(top, 3, 500, 5, true) == s.sample_many(top, 3, 500, 5, false));

    // one-step frequencies against the exact row
    const long n = 100000;
    auto ends = s.sample_step_many(top, n, 11);
    std::map<Signature, long> counts;
    for (const auto& e : ends) ++counts[e];
    for (const auto& [mu, p] : kernel_step(g, top, kHalf).mass) {
        const double pe = p.exact().get_d();
        const double se = std::sqrt(pe * (1 - pe) / n);
        CHECK(std::abs(static_cast<double>(counts[mu]) / n - pe) <= 3 * se + 1e-12);
    }

    const Graph c = Graph::bc(GroupType{Family::C});
    auto chain = sample_chain(c, {2, 2, 1, 0}, 1, 4, kHalf);
    for (std::size_t i = 1; i < chain.levels.size(); ++i) CHECK(chain.levels[i].size() + 1 == chain.levels[i - 1].size());
}

TEST_CASE("canonical sequences") {
    const auto alt = SignSequence::parse("alt");
    CHECK(canonical_sequence_A(BoundaryPointA::constant(0), alt, 5) == Signature(5, 0));
    const BoundaryPointA t{0, {0, 1, 2}, 0, 2};
    CHECK(canonical_sequence_A(t, SignSequence::parse("-+"), 6) == Signature{2, 2, 1, 0, 0, 0});
    for (long N = 1; N <= 12; ++N) {
        const auto lam = canonical_sequence_A(t, alt, N);
        for (long i = alt.b(N) + 1 - N; i <= alt.b(N); ++i) CHECK(lam[alt.b(N) - i] == t.t(i));
    }
    CHECK(canonical_sequence_BC(BoundaryPointBC{{0, 1, 2}}, 4) == Signature{2, 2, 1, 0});
    CHECK(canonical_sequence_BC(BoundaryPointBC{}, 3) == Signature(3, 0));
}

TEST_CASE("boundary measures") {
    const auto cf = EvalConfig::floating(mpq_class(1, 2));
    const auto alt = SignSequence::parse("alt");
    auto zero = boundary_measure_A(alt, BoundaryPointA::constant(0), 2, kHalf, {});
    CHECK(zero.mass.size() == 1);
    CHECK(zero.at({0, 0}).exact() == 1);
    MeasureDiagnostics d;
    const BoundaryPointA t{0, {}, 1, 1};
    auto m = boundary_measure_A(alt, t, 2, cf, {}, &d);
    CHECK(std::abs(m.total().to_cd() - 1.0) < 1e-6);
    CHECK(d.tv_check < 1e-6);
    MeasureMethod comp;
    comp.kind = MeasureMethod::Kind::compose;
    comp.n_trunc = 24;
    comp.tol = 1e-3;
    auto c1 = boundary_measure_A(alt, t, 2, cf, comp);
    CHECK(total_variation(c1, m) < 1e-3);
    auto bc = boundary_measure_BC(GroupType{Family::C}, BoundaryPointBC{{0, 1, 2}}, 1, cf, comp);
    CHECK(std::abs(bc.total().to_cd() - 1.0) < 1e-12);
    for (const auto& [mu, p] : bc.mass) CHECK(p.to_cd().real() >= 0);
    MeasureMethod mc;
    mc.kind = MeasureMethod::Kind::monte_carlo;
    mc.n_trunc = 16;
    mc.samples = 20000;
    MeasureDiagnostics dm;
    auto e = boundary_measure_BC(GroupType{Family::C}, BoundaryPointBC{{0, 1, 2}}, 1, cf, mc, &dm);
    for (const auto& [mu, p] : bc.mass)
        CHECK(std::abs(e.at(mu).to_cd().real() - p.to_cd().real()) <= dm.radius95[mu] * 2 + 1e-3);
    CHECK_THROWS_AS(boundary_measure_BC(GroupType{Family::C}, BoundaryPointBC{}, 1, cf, {}), InvalidConfig);
}

TEST_CASE("torus functionals are orthonormal") {
    for (long k = 1; k <= 2; ++k)
        for_each_signature(k, -2, 3, [&](const Signature& mu) {
            for_each_signature(k, -2, 3, [&](const Signature& nu) {
                auto f = [&](const std::vector<cd>& z) { return schur_eval_t(nu, z); };
                const double expect = mu == nu ? 1.0 : 0.0;
                CHECK(std::abs(f_mu_functional(TorusFamily::A, mu, f, k, 32) - expect) < 1e-10);
            });
        });
    for (Family fam : {Family::B, Family::C, Family::D}) {
        GroupType g{fam};
        const TorusFamily tf = fam == Family::B ? TorusFamily::B : fam == Family::C ? TorusFamily::C : TorusFamily::D;
        for (long k = 1; k <= 2; ++k)
            for_each_signature(k, 0, 3, [&](const Signature& mu) {
                for_each_signature(k, 0, 3, [&](const Signature& nu) {
                    auto f = [&](const std::vector<cd>& z) { return bcd_eval_t(g, nu, z); };
                    const double expect = mu == nu ? 1.0 : 0.0;
                    CHECK_MESSAGE(std::abs(f_mu_functional(tf, mu, f, k, 32) - expect) < 1e-10, g.letter(), " ",
                                  to_string(mu), " ", to_string(nu));
                });
            });
    }
    CHECK_THROWS_AS(f_mu_functional(TorusFamily::A, {5}, [](const std::vector<cd>&) { return cd(1); }, 1, 8),
                    GridTooCoarse);
}
