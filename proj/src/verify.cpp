#include "qgt/verify.hpp"

#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace qgt {

namespace {

struct Outcome {
    bool ok = true;
    double err = 0;
    std::string what;
};

struct Case {
    std::string group;
    std::string label;
    std::function<Outcome()> run;
};

Outcome exact_match(const Scalar& a, const Scalar& b) {
    if (a == b) return {};
    return {false, std::abs(a.to_cd() - b.to_cd()), a.to_string(20) + " != " + b.to_string(20)};
}

Outcome exact_match(const mpq_class& a, const mpq_class& b) { return exact_match(Scalar(a), Scalar(b)); }

Outcome within(cd a, cd b, double tol, bool relative) {
    double e = std::abs(a - b);
    if (relative && std::abs(b) > 0) e /= std::abs(b);
    Outcome o{e <= tol, e, {}};
    if (!o.ok) o.what = "deviation " + format_double(e);
    return o;
}

Outcome within(const Scalar& a, const Scalar& b, double tol, bool relative) {
    return within(a.to_cd(), b.to_cd(), tol, relative);
}

struct Totals {
    long cases = 0, failures = 0;
    double max_err = 0;
};

ExperimentReport execute(const std::string& suite, Json config, std::vector<Case> cases, double tol, bool parallel) {
    std::vector<Outcome> out(cases.size());
    const long n = static_cast<long>(cases.size());
    auto one = [&](long i) {
        try {
            out[i] = cases[i].run();
        } catch (const std::exception& e) {
            out[i] = {false, 0, e.what()};
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) one(i);
    } else {
        for (long i = 0; i < n; ++i) one(i);
    }

    ExperimentReport r;
    r.name = "verify";
    r.config = {{"suite", suite}};
    r.config.update(config);
    r.config["tolerance"] = tol == 0 ? Json("exact") : Json(format_double(tol));
    std::vector<std::string> order;
    std::map<std::string, Totals> groups;
    Totals all;
    Json failures = Json::array();
    for (long i = 0; i < n; ++i) {
        const auto& c = cases[i];
        if (!groups.count(c.group)) order.push_back(c.group);
        auto& g = groups[c.group];
        ++g.cases;
        ++all.cases;
        g.max_err = std::max(g.max_err, out[i].err);
        all.max_err = std::max(all.max_err, out[i].err);
        if (!out[i].ok) {
            ++g.failures;
            ++all.failures;
            if (failures.size() < 20) failures.push_back(c.group + " " + c.label + ": " + out[i].what);
        }
    }
    for (const auto& name : order) {
        const auto& g = groups[name];
        r.rows.push_back(
            {{"group", name}, {"cases", g.cases}, {"failures", g.failures}, {"max_error", format_double(g.max_err)}});
    }
    r.result = {{"cases", all.cases}, {"failures", all.failures}, {"max_error", format_double(all.max_err)},
                {"first_failures", failures}};
    r.pass = all.failures == 0 && all.cases > 0;
    r.detail = std::to_string(all.failures) + " of " + std::to_string(all.cases) + " cases failed";
    return r;
}

EvalConfig config_for(Family f, const mpq_class& q) {
    if (f == Family::B) return EvalConfig::exact(mpq_class(q * q), q);
    return EvalConfig::exact(q);
}

EvalConfig float_config_for(Family f, const mpq_class& q) {
    return EvalConfig::floating(f == Family::B ? mpq_class(q * q) : q);
}

const Family kFamilies[] = {Family::B, Family::C, Family::D};

std::string fam_name(Family f) { return std::string(1, GroupType{f}.letter()); }

Json base_config(const VerifyOptions& opt, long max_n) {
    return {{"max_n", max_n}, {"q", Scalar(opt.q).to_string()}, {"q_B", Scalar(mpq_class(opt.q * opt.q)).to_string()}};
}

// Generic points used by the floating checks.  None of them is a removable
// point of the limit functions at q = 1/2 or 1/4, and no two are inverse.
const std::vector<cd> kPoints{cd(1.3, 0), cd(0.6, 0.5), cd(2.0, -1.0), cd(-0.8, 0.3), cd(0.4, -0.9), cd(1.7, 1.1)};

// ----------------------------------------------------------- contour-A

ExperimentReport suite_contour_A(const VerifyOptions& opt, long max_n) {
    const auto cfg = EvalConfig::exact(opt.q);
    std::vector<Case> cases;
    for (long N = 2; N <= max_n; ++N)
        for (const auto& lam : all_signatures(N, -3, 3))
            for (long b = 1; b < N; ++b)
                cases.push_back({"N=" + std::to_string(N), to_string(lam) + " b=" + std::to_string(b), [=] {
                                     for (long a = 0; a <= N + 2; ++a) {
                                         const auto lhs = typeA_finiteN_residue(lam, N, b, HalfInt::integer(a), cfg);
                                         const Scalar x(mpq_class(ipow(cfg.q, a - b)));
                                         auto o = exact_match(lhs, typeA_direct_ratio(lam, b, {x}, cfg));
                                         if (!o.ok) {
                                             o.what = "a=" + std::to_string(a) + " " + o.what;
                                             return o;
                                         }
                                     }
                                     return Outcome{};
                                 }});
    Json c = base_config(opt, max_n);
    c["parts"] = {-3, 3};
    c["a_range"] = "0..N+2";
    return execute("contour-A", c, std::move(cases), 0, opt.parallel);
}

// ---------------------------------------------------------- contour-BC

ExperimentReport suite_contour_BC(const VerifyOptions& opt, long max_n) {
    constexpr double tol = 1e-9;
    QuadratureSpec quad;
    quad.parallel = false;
    std::vector<Case> cases;
    for (Family f : kFamilies) {
        const auto cf = float_config_for(f, opt.q);
        const GroupType g{f};
        for (long N = 1; N <= max_n; ++N)
            for (const auto& lam : all_signatures(N, 0, 3))
                for (long m = 0; m < N; ++m)
                    for (std::size_t p = 0; p < kPoints.size(); ++p)
                        cases.push_back({fam_name(f) + " N=" + std::to_string(N),
                                         to_string(lam) + " m=" + std::to_string(m) + " x#" + std::to_string(p), [=] {
                                             const auto x = Scalar::from_cd(kPoints[p]);
                                             return within(bcd_finiteN_integral(g, lam, N, m, x, cf, quad),
                                                           bcd_direct_ratio(g, lam, m, {x}, cf), tol, true);
                                         }});
    }
    Json c = base_config(opt, max_n);
    c["parts"] = {0, 3};
    c["points"] = kPoints.size();
    c["quadrature"] = quad_json(quad);
    return execute("contour-BC", c, std::move(cases), tol, opt.parallel);
}

// ------------------------------------------------------------ multivar

ExperimentReport suite_multivar(const VerifyOptions& opt, long max_n) {
    constexpr double tol = 1e-10;
    std::vector<Case> cases;
    const auto cA = EvalConfig::exact(opt.q);
    const auto fA = EvalConfig::floating(opt.q);
    for (long N = 1; N <= max_n; ++N)
        for (const auto& lam : all_signatures(N, 0, 3))
            for (long k = 1; k <= std::min(3L, N); ++k)
                for (long b = 0; b + k <= N; ++b)
                    cases.push_back({"A N=" + std::to_string(N),
                                     to_string(lam) + " k=" + std::to_string(k) + " b=" + std::to_string(b), [=] {
                                         std::vector<Scalar> xs, gs;
                                         for (long i = 0; i < k; ++i) {
                                             xs.emplace_back(mpq_class(ipow(cA.q, N + 2 - 2 * i - b)));
                                             gs.push_back(Scalar::from_cd(kPoints[i]));
                                         }
                                         auto o = exact_match(typeA_multivar_det(lam, N, b, xs, cA),
                                                              typeA_direct_ratio(lam, b, xs, cA));
                                         if (!o.ok) return o;
                                         return within(typeA_multivar_det(lam, N, b, gs, fA),
                                                       typeA_direct_ratio(lam, b, gs, fA), tol, true);
                                     }});
    for (Family f : kFamilies) {
        const GroupType g{f};
        const auto ce = config_for(f, opt.q);
        const auto cf = float_config_for(f, opt.q);
        for (long N = 1; N <= max_n; ++N)
            for (const auto& lam : all_signatures(N, 0, 3))
                for (long k = 1; k <= std::min(3L, N); ++k)
                    cases.push_back({fam_name(f) + " N=" + std::to_string(N), to_string(lam) + " k=" + std::to_string(k),
                                     [=] {
                                         QPowers<mpq_class> qp(ce);
                                         std::vector<Scalar> xs, gs;
                                         for (long i = 0; i < k; ++i) {
                                             xs.emplace_back(qp.pow(HalfInt::integer(N + 3 - 2 * i) + g.epsilon()));
                                             gs.push_back(Scalar::from_cd(kPoints[i]));
                                         }
                                         auto o = exact_match(bcd_multivar_det(g, lam, N, xs, ce),
                                                              bcd_direct_ratio(g, lam, 0, xs, ce));
                                         if (!o.ok) return o;
                                         return within(bcd_multivar_det(g, lam, N, gs, cf),
                                                       bcd_direct_ratio(g, lam, 0, gs, cf), tol, true);
                                     }});
    }
    Json c = base_config(opt, max_n);
    c["parts"] = {0, 3};
    c["k_max"] = 3;
    return execute("multivar", c, std::move(cases), tol, opt.parallel);
}

// ---------------------------------------------------------- structural

std::vector<mpq_class> qpts(const QPowers<mpq_class>& qp, const std::vector<HalfInt>& ex) {
    std::vector<mpq_class> v;
    for (auto e : ex) v.push_back(qp.pow(e));
    return v;
}

ExperimentReport suite_structural(const VerifyOptions& opt, long max_n) {
    std::vector<Case> cases;
    const std::vector<mpq_class> base{mpq_class(2), mpq_class(7, 3), mpq_class(11, 2), mpq_class(3, 13),
                                      mpq_class(-5, 4), mpq_class(9, 7)};
    const mpq_class u(4, 9);
    const auto cA = EvalConfig::exact(opt.q);

    for (long n = 1; n < max_n; ++n)
        for (const auto& lam : all_signatures(n + 1, 0, 3)) {
            cases.push_back({"branching A", to_string(lam), [=] {
                                 std::vector<mpq_class> xs(base.begin(), base.begin() + n);
                                 auto full = xs;
                                 full.push_back(u);
                                 mpq_class sum = 0;
                                 for (const auto& mu : interlacing_below(lam))
                                     sum += schur_eval_t(mu, xs) * ipow(u, weight(lam) - weight(mu));
                                 return exact_match(sum, schur_eval_t(lam, full));
                             }});
            for (Family f : kFamilies)
                cases.push_back({"branching " + fam_name(f), to_string(lam), [=] {
                                     const GroupType g{f};
                                     std::vector<Scalar> z, zu;
                                     for (long i = 0; i < n; ++i) z.emplace_back(base[i]);
                                     zu = z;
                                     zu.emplace_back(mpq_class(5, 2));
                                     std::set<Signature> mus;
                                     for (const auto& nu : bc_interlacing_below(lam))
                                         for (const auto& mu : interlacing_below(nu)) mus.insert(mu);
                                     Scalar rhs(mpq_class(0));
                                     for (const auto& mu : mus)
                                         rhs = rhs + bc_skew_weight(g, lam, mu, Scalar(mpq_class(5, 2))) *
                                                         bcd_eval(g, mu, z, cA);
                                     return exact_match(bcd_eval(g, lam, zu, cA), rhs);
                                 }});
        }

    for (long n = 1; n <= max_n; ++n) {
        const auto sigs = all_signatures(n, 0, 3);
        for (const auto& lam : sigs) {
            cases.push_back({"duality A", to_string(lam), [=] {
                                 QPowers<mpq_class> qp(cA);
                                 auto at = [&](const Signature& a, const Signature& b) {
                                     std::vector<mpq_class> pts;
                                     for (long i = 0; i < n; ++i) pts.push_back(qp.pow(HalfInt::integer(b[i] + n - 1 - i)));
                                     return mpq_class(schur_eval_t(a, pts) / schur_principal_t(a, qp));
                                 };
                                 for (const auto& mu : sigs) {
                                     auto o = exact_match(at(lam, mu), at(mu, lam));
                                     if (!o.ok) return Outcome{false, o.err, to_string(mu) + " " + o.what};
                                 }
                                 return Outcome{};
                             }});
            for (Family f : kFamilies)
                cases.push_back({"duality " + fam_name(f), to_string(lam), [=] {
                                     const GroupType g{f};
                                     QPowers<mpq_class> qp(config_for(f, opt.q));
                                     auto ratio = [&](const Signature& a, const Signature& b) {
                                         return mpq_class(bcd_eval_t(g, a, qpts(qp, g.exponents(b))) /
                                                          bcd_principal_t(g, a, qp));
                                     };
                                     for (const auto& nu : sigs) {
                                         auto o = exact_match(ratio(lam, nu), ratio(nu, lam));
                                         if (!o.ok) return Outcome{false, o.err, to_string(nu) + " " + o.what};
                                     }
                                     return Outcome{};
                                 }});
            cases.push_back({"determinantal forms", to_string(lam), [=] {
                                 const std::vector<mpq_class> z(base.begin(), base.begin() + n);
                                 const auto fr = frobenius_coords(lam);
                                 const mpq_class s = schur_eval_t(lam, z);
                                 if (auto o = exact_match(schur_jt_eval_t(lam, z), s); !o.ok) return o;
                                 if (fr.a.size() == 1)
                                     if (auto o = exact_match(hook_char_eval_t(HookFamily::schurA, fr.a[0], fr.b[0], n, z), s);
                                         !o.ok)
                                         return o;
                                 for (Family f : kFamilies) {
                                     const GroupType g{f};
                                     const mpq_class w = bcd_eval_t(g, lam, z);
                                     if (auto o = exact_match(jacobi_trudi_eval_t(g, lam, z), w); !o.ok) return o;
                                     if (auto o = exact_match(frobenius_det_eval_t(g, lam, z), w); !o.ok) return o;
                                     if (fr.a.size() == 1) {
                                         const HookFamily hf = f == Family::B   ? HookFamily::B
                                                               : f == Family::C ? HookFamily::C
                                                                                : HookFamily::D;
                                         if (auto o = exact_match(hook_char_eval_t(hf, fr.a[0], fr.b[0], n, z), w); !o.ok)
                                             return o;
                                     }
                                 }
                                 return Outcome{};
                             }});
        }
    }
    Json c = base_config(opt, max_n);
    c["parts"] = {0, 3};
    return execute("structural", c, std::move(cases), 0, opt.parallel);
}

// ---------------------------------------------------------- stochastic

Outcome stochastic(const KernelRow& row) {
    for (const auto& [mu, p] : row.mass)
        if (p.exact() < 0) return {false, 0, "negative entry at " + to_string(mu)};
    return exact_match(row.total(), Scalar(mpq_class(1)));
}

ExperimentReport suite_stochastic(const VerifyOptions& opt, long max_n) {
    std::vector<Case> cases;
    std::mt19937_64 rng(opt.seed);
    auto draw = [&](long lo, long hi) {
        std::uniform_int_distribution<long> len(2, max_n), part(lo, hi);
        Signature s(static_cast<std::size_t>(len(rng)));
        for (auto& v : s) v = part(rng);
        std::sort(s.rbegin(), s.rend());
        return s;
    };
    const auto cA = EvalConfig::exact(opt.q);
    for (int sign : {1, -1})
        for (long i = 0; i < opt.random_rows; ++i) {
            const auto lam = draw(-3, 4);
            cases.push_back({sign > 0 ? "A+" : "A-", to_string(lam),
                             [=] { return stochastic(kernelA_step(lam, sign, cA)); }});
        }
    for (Family f : kFamilies) {
        const auto cfg = config_for(f, opt.q);
        for (long i = 0; i < opt.random_rows; ++i) {
            const auto lam = draw(0, 4);
            cases.push_back({fam_name(f), to_string(lam),
                             [=] { return stochastic(kernelBC_step(GroupType{f}, lam, cfg)); }});
        }
    }
    Json c = base_config(opt, max_n);
    c["rows_per_graph"] = opt.random_rows;
    c["seed"] = opt.seed;
    c["parts_A"] = {-3, 4};
    c["parts_BC"] = {0, 4};
    return execute("stochastic", c, std::move(cases), 0, opt.parallel);
}

// ----------------------------------------------------------- multistep

ExperimentReport suite_multistep(const VerifyOptions& opt, long max_n) {
    std::vector<Case> cases;
    const auto cfg = EvalConfig::exact(opt.q);
    const std::vector<std::string> patterns{"+", "-", "+-", "-++"};
    for (const auto& pat : patterns) {
        const auto sigma = SignSequence::parse(pat);
        for (long N = 2; N <= max_n; ++N)
            for (const auto& lam : all_signatures(N, -1, 2))
                cases.push_back({pat + " N=" + std::to_string(N), to_string(lam), [=] {
                                     for (long k = 1; k <= std::min(3L, N - 1); ++k) {
                                         const auto a = kernelA_multi_exact(lam, k, sigma, cfg);
                                         const auto b = compose_kernels(Graph::symA(sigma), lam, k, cfg);
                                         if (a.mass != b.mass) return Outcome{false, total_variation(a, b), "k=" + std::to_string(k)};
                                     }
                                     return Outcome{};
                                 }});
    }
    Json c = base_config(opt, max_n);
    c["patterns"] = patterns;
    c["parts"] = {-1, 2};
    c["k_max"] = 3;
    return execute("multistep", c, std::move(cases), 0, opt.parallel);
}

// ----------------------------------------------------------------- phi

ExperimentReport suite_phi(const VerifyOptions& opt, long) {
    constexpr double tol = 1e-8;
    QuadratureSpec quad;
    quad.parallel = false;
    const auto cfg = EvalConfig::floating(opt.q);
    const double q = opt.q.get_d();
    std::vector<Case> cases;
    const BoundaryPointBC y{{0, 1, 2}};
    const std::vector<BoundaryPointA> ts{BoundaryPointA::parse("0:1,3:3@0"), BoundaryPointA::parse("-1:0,2:2@1"),
                                         BoundaryPointA::parse("0::1@0")};
    for (std::size_t p = 0; p < kPoints.size(); ++p) {
        const auto x = Scalar::from_cd(kPoints[p]);
        const auto lbl = "x#" + std::to_string(p);
        cases.push_back({"trivial A", lbl, [=] {
                             return within(phiA(BoundaryPointA::constant(0), x, cfg, quad), Scalar(mpq_class(1)), tol,
                                           false);
                         }});
        for (Family f : kFamilies)
            for (long m : {0L, 1L}) {
                const GroupType g{f};
                const auto ml = lbl + " m=" + std::to_string(m);
                cases.push_back({"trivial " + fam_name(f), ml, [=] {
                                     return within(phiBCD(g, BoundaryPointBC{}, m, x, cfg, quad), Scalar(mpq_class(1)),
                                                   tol, false);
                                 }});
                cases.push_back({"symmetry " + fam_name(f), ml, [=] {
                                     const auto inv = Scalar::from_cd(1.0 / kPoints[p]);
                                     return within(phiBCD(g, y, m, x, cfg, quad), phiBCD(g, y, m, inv, cfg, quad), tol,
                                                   true);
                                 }});
            }
    }
    for (const auto& t : ts)
        for (long k = 1; k <= 2; ++k)
            cases.push_back({"normalization A", t.to_string() + " k=" + std::to_string(k), [=] {
                                 std::vector<Scalar> xs;
                                 for (long i = 0; i < k; ++i) xs.push_back(Scalar::from_cd(std::pow(q, i)));
                                 return within(phiA_multivar(t, xs, cfg, quad), Scalar(mpq_class(1)), tol, false);
                             }});
    Json c = base_config(opt, 0);
    c.erase("max_n");
    c.erase("q_B");
    c["points"] = kPoints.size();
    c["boundary_points_A"] = Json::array();
    for (const auto& t : ts) c["boundary_points_A"].push_back(t.to_string());
    c["boundary_point_BC"] = y.to_string();
    c["quadrature"] = quad_json(quad);
    return execute("phi", c, std::move(cases), tol, opt.parallel);
}

// --------------------------------------------------------------- torus

ExperimentReport suite_torus(const VerifyOptions& opt, long) {
    constexpr double tol = 1e-8;
    constexpr long grid = 32;
    std::vector<Case> cases;
    for (long k = 1; k <= 2; ++k) {
        const auto sigs = all_signatures(k, -3, 3);
        for (const auto& mu : sigs)
            cases.push_back({"A k=" + std::to_string(k), to_string(mu), [=] {
                                 Outcome worst;
                                 for (const auto& nu : sigs) {
                                     auto fn = [&](const std::vector<cd>& z) { return schur_eval_t(nu, z); };
                                     auto o = within(f_mu_functional(TorusFamily::A, mu, fn, k, grid),
                                                     cd(mu == nu ? 1.0 : 0.0), tol, false);
                                     if (o.err >= worst.err) worst = o;
                                 }
                                 return worst;
                             }});
        const auto nonneg = all_signatures(k, 0, 3);
        for (Family f : kFamilies) {
            const TorusFamily tf = f == Family::B ? TorusFamily::B : f == Family::C ? TorusFamily::C : TorusFamily::D;
            for (const auto& mu : nonneg)
                cases.push_back({fam_name(f) + " k=" + std::to_string(k), to_string(mu), [=] {
                                     Outcome worst;
                                     for (const auto& nu : nonneg) {
                                         auto fn = [&](const std::vector<cd>& z) {
                                             return bcd_eval_t(GroupType{f}, nu, z);
                                         };
                                         auto o = within(f_mu_functional(tf, mu, fn, k, grid),
                                                         cd(mu == nu ? 1.0 : 0.0), tol, false);
                                         if (o.err >= worst.err) worst = o;
                                     }
                                     return worst;
                                 }});
        }
    }
    Json c = {{"grid", grid}, {"parts_A", {-3, 3}}, {"parts_BC", {0, 3}}, {"k_max", 2}};
    return execute("torus", c, std::move(cases), tol, opt.parallel);
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names{"contour-A",  "contour-BC", "multivar", "structural",
                                                "stochastic", "multistep",  "phi",      "torus"};
    return names;
}

long verify_default_max_n(const std::string& suite) {
    if (suite == "contour-A" || suite == "multivar" || suite == "multistep") return 6;
    if (suite == "contour-BC" || suite == "structural") return 4;
    if (suite == "stochastic") return 7;
    return 0;
}

ExperimentReport run_verify_suite(const std::string& suite, const VerifyOptions& opt) {
    const long n = opt.max_n > 0 ? opt.max_n : verify_default_max_n(suite);
    if (opt.q <= 0 || opt.q >= 1) throw InvalidConfig("q must lie in (0, 1)");
    if (suite == "contour-A") return suite_contour_A(opt, n);
    if (suite == "contour-BC") return suite_contour_BC(opt, n);
    if (suite == "multivar") return suite_multivar(opt, n);
    if (suite == "structural") return suite_structural(opt, n);
    if (suite == "stochastic") return suite_stochastic(opt, std::max(2L, n));
    if (suite == "multistep") return suite_multistep(opt, n);
    if (suite == "phi") return suite_phi(opt, n);
    if (suite == "torus") return suite_torus(opt, n);
    throw InvalidConfig("unknown suite '" + suite + "'");
}

}  // namespace qgt
