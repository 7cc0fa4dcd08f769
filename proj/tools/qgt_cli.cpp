// Command-line front end.  Every command writes one report (JSON or CSV) with
// its effective configuration, labeled rows and a verdict.
//
// Exit codes: 0 success / verdict pass, 1 verdict fail or numeric failure,
// 2 usage error.

#include "qgt/verify.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace qgt;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string q = "1/2";
    std::string sqrt_q;
    std::string mode;  // empty: the command's default
    long bits = 256;
    std::uint64_t seed = 1;
    int threads = 0;
    std::string output = "-";
    std::string format = "json";
    QuadratureSpec quad;
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--q", c.q, "deformation parameter, rational p/r in (0,1)")->capture_default_str();
    app->add_option("--sqrt-q", c.sqrt_q, "exact square root of q (type B in exact mode)");
    app->add_option("--mode", c.mode, "exact or float (default depends on the command)")
        ->check(CLI::IsMember({"exact", "float"}));
    app->add_option("--precision", c.bits, "float precision in bits")->capture_default_str();
    app->add_option("--seed", c.seed, "random seed")->capture_default_str();
    app->add_option("--threads", c.threads, "worker thread cap (0: OpenMP default)");
    app->add_option("-o,--output", c.output, "report path, - for stdout")->capture_default_str();
    app->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app->add_option("--quad-v-nodes", c.quad.v_nodes, "Gauss-Legendre nodes on the vertical segment");
    app->add_option("--quad-u-nodes", c.quad.u_nodes_per_unit, "Gauss-Legendre nodes per u-panel");
    app->add_option("--quad-halfwidth", c.quad.u_halfwidth, "cap on |Re u - center|");
    app->add_option("--quad-truncation", c.quad.product_truncation, "infinite product truncation");
    app->add_option("--quad-tol", c.quad.tol, "quadrature tolerance");
}

mpq_class rational_flag(const std::string& flag, const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const Error&) {
        throw UsageError(flag + ": not a rational '" + s + "'");
    }
}

EvalConfig make_config(const Common& c, const char* default_mode) {
    const std::string mode = c.mode.empty() ? default_mode : c.mode;
    const auto q = rational_flag("--q", c.q);
    EvalConfig cfg = mode == "exact" ? EvalConfig::exact(q) : EvalConfig::floating(q, c.bits);
    if (!c.sqrt_q.empty()) cfg.sqrt_q = rational_flag("--sqrt-q", c.sqrt_q);
    try {
        cfg.validate();
        c.quad.validate();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

// "3/2", "-2", "1.3" (read exactly as 13/10) or a complex "0.6+0.5i" (float mode only).
Scalar parse_point(const std::string& s, const EvalConfig& cfg) {
    if (s.find('i') != std::string::npos) {
        if (cfg.mode == Mode::exact) throw UsageError("complex point '" + s + "' needs --mode float");
        std::size_t split = std::string::npos;
        for (std::size_t k = 1; k < s.size(); ++k)
            if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') split = k;
        try {
            const std::string im = split == std::string::npos ? s.substr(0, s.size() - 1)
                                                              : s.substr(split, s.size() - 1 - split);
            const double re = split == std::string::npos ? 0.0 : std::stod(s.substr(0, split));
            const double iv = im == "+" || im.empty() ? 1.0 : im == "-" ? -1.0 : std::stod(im);
            return Scalar::from_cd(cd(re, iv));
        } catch (const std::exception&) {
            throw UsageError("bad complex point '" + s + "'");
        }
    }
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Scalar(rational_flag("point", s));
    const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const auto scale = static_cast<long>(s.size() - dot - 1);
    mpz_class num;
    if (digits.empty() || num.set_str(digits, 10) != 0) throw UsageError("bad point '" + s + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
    return Scalar(mpq_class(num, den));
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

std::vector<Scalar> parse_points(const std::string& s, const EvalConfig& cfg) {
    std::vector<Scalar> out;
    for (const auto& tok : split_csv(s)) out.push_back(parse_point(tok, cfg));
    return out;
}

std::vector<long> parse_longs(const std::string& flag, const std::string& s) {
    std::vector<long> out;
    for (const auto& tok : split_csv(s)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError(flag + ": bad integer '" + tok + "'");
        }
    }
    return out;
}

template <class T, class Fn>
T usage_parse(const std::string& flag, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Signature signature_flag(const std::string& s) {
    return usage_parse<Signature>("--signature", [&] { return parse_signature(s); });
}

GroupType group_flag(const std::string& s) {
    return usage_parse<GroupType>("--family", [&] { return GroupType::parse(s); });
}

void write_report(const ExperimentReport& r, const Common& c, const std::string& command) {
    Json j = r.to_json();
    j["config"]["command"] = command;
    std::string text = c.format == "csv" ? r.to_csv() : j.dump(2) + "\n";
    if (c.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw UsageError("--output: cannot open '" + c.output + "'");
    f << text;
}

Json common_json(const Common& c, const EvalConfig& cfg) {
    Json j = config_json(cfg);
    j["seed"] = c.seed;
    return j;
}

// ------------------------------------------------------------------ char

struct CharArgs {
    std::string family = "A";
    std::string signature;
    std::string points;
};

ExperimentReport run_char(const CharArgs& a, const Common& c) {
    const auto cfg = make_config(c, "exact");
    const auto lam = signature_flag(a.signature);
    const bool principal = a.points.empty();
    Scalar v;
    const bool typeA = a.family == "A";
    const GroupType g = typeA ? GroupType{} : group_flag(a.family);
    if (!typeA && !lam.empty() && lam.back() < 0) throw UsageError("--signature: B/C/D need nonnegative parts");
    std::vector<Scalar> pts;
    if (!principal) {
        pts = parse_points(a.points, cfg);
        if (pts.size() != lam.size()) throw UsageError("--points: expected " + std::to_string(lam.size()) + " values");
    }
    if (typeA)
        v = principal ? schur_principal(lam, static_cast<long>(lam.size()), cfg) : schur_eval(lam, pts, cfg);
    else
        v = principal ? bcd_principal(g, lam, cfg) : bcd_eval(g, lam, pts, cfg);

    ExperimentReport r;
    r.name = "char";
    r.config = {{"family", a.family}, {"signature", to_string(lam)}, {"points", principal ? Json("principal") : Json(a.points)},
                {"eval", common_json(c, cfg)}};
    r.result = {{"value", format_scalar(v, cfg)}};
    r.rows.push_back({{"signature", to_string(lam)}, {"value", format_scalar(v, cfg)}});
    r.pass = true;
    r.detail = "evaluated";
    return r;
}

// ---------------------------------------------------------------- kernel

struct KernelArgs {
    std::string graph = "symA";
    std::string sigma = "+";
    std::string signature;
    long steps = 1;
    std::string method = "exact_multi";
};

Graph graph_flag(const std::string& graph, const std::string& sigma) {
    if (graph == "symA" || graph == "A")
        return Graph::symA(usage_parse<SignSequence>("--sigma", [&] { return SignSequence::parse(sigma); }));
    return Graph::bc(group_flag(graph));
}

ExperimentReport run_kernel(const KernelArgs& a, const Common& c) {
    const auto cfg = make_config(c, "exact");
    const auto lam = signature_flag(a.signature);
    const Graph g = graph_flag(a.graph, a.sigma);
    const long N = static_cast<long>(lam.size());
    if (a.steps < 1 || a.steps >= N) throw UsageError("--steps: need 1 <= steps < signature length");
    if (g.kind == Graph::Kind::bc && lam.back() < 0) throw UsageError("--signature: BC graphs need nonnegative parts");
    KernelRow row;
    std::string method = a.steps == 1 ? "step" : a.method;
    if (a.steps == 1)
        row = kernel_step(g, lam, cfg);
    else if (g.kind == Graph::Kind::symA && a.method == "exact_multi")
        row = kernelA_multi_exact(lam, N - a.steps, g.sigma, cfg);
    else {
        method = "compose";
        row = compose_kernels(g, lam, N - a.steps, cfg);
    }
    ExperimentReport r;
    r.name = "kernel";
    r.config = {{"graph", g.to_string()}, {"signature", to_string(lam)}, {"steps", a.steps}, {"method", method},
                {"eval", common_json(c, cfg)}};
    for (const auto& [mu, p] : row.mass) r.rows.push_back({{"mu", to_string(mu)}, {"mass", format_scalar(p, cfg)}});
    r.result = {{"masses", row_json(row, cfg)}, {"total", format_scalar(row.total(), cfg)}};
    r.pass = true;
    r.detail = std::to_string(row.mass.size()) + " target signatures";
    return r;
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
    std::string graph = "symA";
    std::string sigma = "+";
    std::string signature;
    long level = 1;
    long count = 1;
    bool full = false;
};

ExperimentReport run_sample(const SampleArgs& a, const Common& c) {
    const auto cfg = make_config(c, "float");
    const auto top = signature_flag(a.signature);
    const Graph g = graph_flag(a.graph, a.sigma);
    if (a.level < 1 || a.level >= static_cast<long>(top.size()))
        throw UsageError("--level: need 1 <= level < signature length");
    if (a.count < 1) throw UsageError("--count: must be positive");
    ChainSampler sampler(g, cfg);
    ExperimentReport r;
    r.name = "sample";
    r.config = {{"graph", g.to_string()}, {"top", to_string(top)}, {"level", a.level}, {"count", a.count},
                {"full", a.full}, {"eval", common_json(c, cfg)}};
    std::map<Signature, long> hist;
    if (a.full) {
        for (long i = 0; i < a.count; ++i) {
            const auto s = sampler.sample(top, a.level, chain_seed(c.seed, static_cast<std::uint64_t>(i)));
            Json levels = Json::array();
            for (const auto& l : s.levels) levels.push_back(to_string(l));
            r.rows.push_back({{"chain", i}, {"seed", s.rng_seed}, {"levels", levels}});
            ++hist[s.levels.back()];
        }
    } else {
        const auto ends = sampler.sample_many(top, a.level, a.count, c.seed);
        for (long i = 0; i < a.count; ++i) {
            r.rows.push_back({{"chain", i}, {"endpoint", to_string(ends[i])}});
            ++hist[ends[i]];
        }
    }
    Json h = Json::object();
    for (const auto& [mu, n] : hist) h[to_string(mu)] = n;
    r.result = {{"histogram", h}};
    r.pass = true;
    r.detail = std::to_string(a.count) + " chains";
    return r;
}

// ------------------------------------------------------------------- phi

struct PhiArgs {
    std::string family = "A";
    std::string point;
    std::string xs;
    long m = 0;
    std::string continuation = "refuse";
};

ExperimentReport run_phi(const PhiArgs& a, const Common& c) {
    auto cfg = make_config(c, "float");
    if (cfg.mode == Mode::exact) throw UsageError("--mode: the limit functions need float mode");
    const auto xs = parse_points(a.xs, cfg);
    if (xs.empty()) throw UsageError("--x: at least one point required");
    const auto cont = a.continuation == "mean_value" ? Continuation::mean_value : Continuation::refuse;
    Scalar v;
    std::string point;
    if (a.family == "A") {
        const auto t = usage_parse<BoundaryPointA>("--point", [&] { return BoundaryPointA::parse(a.point); });
        point = t.to_string();
        v = xs.size() == 1 ? phiA(t, xs[0], cfg, c.quad, cont) : phiA_multivar(t, xs, cfg, c.quad);
    } else {
        const auto g = group_flag(a.family);
        const auto y = usage_parse<BoundaryPointBC>("--point", [&] { return BoundaryPointBC::parse(a.point); });
        point = y.to_string();
        v = xs.size() == 1 ? phiBCD(g, y, a.m, xs[0], cfg, c.quad, cont) : phiBCD_multivar(g, y, xs, cfg, c.quad);
    }
    ExperimentReport r;
    r.name = "phi";
    r.config = {{"family", a.family}, {"point", point}, {"x", a.xs}, {"continuation", a.continuation},
                {"eval", common_json(c, cfg)}, {"quadrature", quad_json(c.quad)}};
    if (a.family != "A" && xs.size() == 1) r.config["m"] = a.m;
    // The limit functions are accurate to double precision at best.
    const cd z = v.to_cd();
    Json val = z.imag() == 0 ? Json(format_double(z.real()))
                             : Json::array({format_double(z.real()), format_double(z.imag())});
    r.result = {{"value", val}};
    r.rows.push_back({{"x", a.xs}, {"value", val}});
    r.pass = true;
    r.detail = "evaluated";
    return r;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite;
    long max_n = 0;
    long rows = 500;
};

ExperimentReport run_verify(const VerifyArgs& a, const Common& c) {
    VerifyOptions opt;
    opt.q = rational_flag("--q", c.q);
    if (opt.q <= 0 || opt.q >= 1) throw UsageError("--q: must lie in (0, 1)");
    opt.max_n = a.max_n;
    opt.seed = c.seed;
    opt.random_rows = a.rows;
    const auto& names = verify_suites();
    if (a.suite != "all" && std::find(names.begin(), names.end(), a.suite) == names.end())
        throw UsageError("--suite: unknown suite '" + a.suite + "'");
    if (a.suite != "all") return run_verify_suite(a.suite, opt);

    ExperimentReport r;
    r.name = "verify";
    r.config = {{"suite", "all"}};
    r.pass = true;
    long failed = 0;
    for (const auto& s : names) {
        const auto one = run_verify_suite(s, opt);
        r.rows.push_back({{"suite", s},
                          {"cases", one.result.at("cases")},
                          {"failures", one.result.at("failures")},
                          {"max_error", one.result.at("max_error")},
                          {"pass", one.pass}});
        r.result[s] = one.to_json();
        r.pass = r.pass && one.pass;
        failed += !one.pass;
    }
    r.detail = std::to_string(failed) + " of " + std::to_string(names.size()) + " suites failed";
    return r;
}

// ------------------------------------------------------------ experiment

struct ExperimentArgs {
    std::string kind;
    std::string family = "A";
    std::string sigma = "alt";
    std::string point;
    std::string xs = "1.3";
    std::string n_list;
    double tol = 1e-6;
    long k_max = 3;
    long L = 20;
    long start = 0;
    long samples = 0;
    long k = 0;
    double bound = 20;
    double threshold = 0.99;
};

ExperimentReport run_experiment(const ExperimentArgs& a, const Common& c) {
    const bool typeA = a.family == "A";
    const auto sigma = usage_parse<SignSequence>("--sigma", [&] { return SignSequence::parse(a.sigma); });
    const GroupType g = typeA ? GroupType{} : group_flag(a.family);
    const auto t = typeA ? usage_parse<BoundaryPointA>("--point", [&] { return BoundaryPointA::parse(a.point); })
                         : BoundaryPointA{};
    const auto y = typeA ? BoundaryPointBC{}
                         : usage_parse<BoundaryPointBC>("--point", [&] { return BoundaryPointBC::parse(a.point); });
    const auto nl = a.n_list.empty() ? std::vector<long>{} : parse_longs("--n-list", a.n_list);

    if (a.kind == "convergence") {
        const auto cfg = make_config(c, "float");
        ConvergenceSpec s;
        s.xs = parse_points(a.xs, cfg);
        if (!nl.empty()) s.n_list = nl;
        s.tol = a.tol;
        return typeA ? convergence_experiment_A(sigma, t, s, cfg, c.quad)
                     : convergence_experiment_BC(g, y, s, cfg, c.quad);
    }
    if (a.kind == "lln") {
        const auto cfg = make_config(c, typeA ? "exact" : "float");
        LlnSpec s;
        s.k_max = a.k_max;
        s.L = a.L;
        s.start_level = a.start;
        if (a.samples > 0) s.samples = a.samples;
        s.seed = c.seed;
        s.threshold = a.threshold;
        if (s.L <= s.k_max) throw UsageError("--L: must exceed --k-max");
        return typeA ? lln_experiment_A(sigma, t, s, cfg) : lln_experiment_BC(g, y, s, cfg);
    }
    if (a.kind == "concentration") {
        const auto cfg = make_config(c, "float");
        ConcentrationSpec s;
        if (a.k > 0) s.k = a.k;
        if (!nl.empty()) s.n_list = nl;
        if (a.samples > 0) s.samples = a.samples;
        s.seed = c.seed;
        s.bound = a.bound;
        return typeA ? concentration_experiment_A(sigma, t, s, cfg) : concentration_experiment_BC(g, y, s, cfg);
    }
    const auto cfg = make_config(c, typeA ? "exact" : "float");
    MartinSpec s;
    if (a.k > 0) s.k = a.k;
    if (!nl.empty()) s.n_list = nl;
    s.tol = a.tol;
    return typeA ? martin_experiment_A(sigma, t, s, cfg) : martin_experiment_BC(g, y, s, cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-deformed characters, limit functions and branching-graph kernels"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "expand all help");

    Common common;
    CharArgs char_args;
    KernelArgs kernel_args;
    SampleArgs sample_args;
    PhiArgs phi_args;
    VerifyArgs verify_args;
    ExperimentArgs exp_args;

    auto* c_char = app.add_subcommand("char", "evaluate a Schur or B/C/D character (at points or principal)");
    add_common(c_char, common);
    c_char->add_option("--family", char_args.family, "A, B, C or D")->check(CLI::IsMember({"A", "B", "C", "D"}))
        ->capture_default_str();
    c_char->add_option("--signature", char_args.signature, "comma-separated, weakly decreasing")->required();
    c_char->add_option("--points", char_args.points, "comma-separated points; omit for the principal value");

    auto* c_kernel = app.add_subcommand("kernel", "one-step or multi-step kernel row");
    add_common(c_kernel, common);
    c_kernel->add_option("--graph", kernel_args.graph, "symA, B, C or D")
        ->check(CLI::IsMember({"symA", "A", "B", "C", "D"}))->capture_default_str();
    c_kernel->add_option("--sigma", kernel_args.sigma, "periodic sign pattern (symA), e.g. +, -, +-, alt")
        ->capture_default_str();
    c_kernel->add_option("--signature", kernel_args.signature, "top signature")->required();
    c_kernel->add_option("--steps", kernel_args.steps, "number of levels to descend")->capture_default_str();
    c_kernel->add_option("--method", kernel_args.method, "exact_multi or compose (symA, steps > 1)")
        ->check(CLI::IsMember({"exact_multi", "compose"}))->capture_default_str();

    auto* c_sample = app.add_subcommand("sample", "sample chains down the graph");
    add_common(c_sample, common);
    c_sample->add_option("--graph", sample_args.graph, "symA, B, C or D")
        ->check(CLI::IsMember({"symA", "A", "B", "C", "D"}))->capture_default_str();
    c_sample->add_option("--sigma", sample_args.sigma, "periodic sign pattern (symA)")->capture_default_str();
    c_sample->add_option("--signature", sample_args.signature, "top signature")->required();
    c_sample->add_option("--level", sample_args.level, "final level")->capture_default_str();
    c_sample->add_option("--count", sample_args.count, "number of chains")->capture_default_str();
    c_sample->add_flag("--full", sample_args.full, "report every level of every chain");

    auto* c_phi = app.add_subcommand("phi", "evaluate a limit function");
    add_common(c_phi, common);
    c_phi->add_option("--family", phi_args.family, "A, B, C or D")->check(CLI::IsMember({"A", "B", "C", "D"}))
        ->capture_default_str();
    c_phi->add_option("--point", phi_args.point, "left:middle:right@offset (A) or head (B/C/D)")->required();
    c_phi->add_option("--x", phi_args.xs, "comma-separated points; several give the multivariate function")
        ->required();
    c_phi->add_option("--m", phi_args.m, "index of the single-variable B/C/D function")->capture_default_str();
    c_phi->add_option("--continuation", phi_args.continuation, "refuse or mean_value near removable points")
        ->check(CLI::IsMember({"refuse", "mean_value"}))->capture_default_str();

    auto* c_verify = app.add_subcommand("verify", "run an exact-identity suite");
    add_common(c_verify, common);
    std::string suites = "all";
    for (const auto& s : verify_suites()) suites += ", " + s;
    c_verify->add_option("--suite", verify_args.suite, suites)->required();
    c_verify->add_option("--max-n", verify_args.max_n, "largest N (0: suite default)")->capture_default_str();
    c_verify->add_option("--rows", verify_args.rows, "random rows per graph (stochastic)")->capture_default_str();

    auto* c_exp = app.add_subcommand("experiment", "convergence, lln, concentration or martin study");
    add_common(c_exp, common);
    c_exp->add_option("kind", exp_args.kind, "convergence | lln | concentration | martin")
        ->required()
        ->check(CLI::IsMember({"convergence", "lln", "concentration", "martin"}));
    c_exp->add_option("--family", exp_args.family, "A, B, C or D")->check(CLI::IsMember({"A", "B", "C", "D"}))
        ->capture_default_str();
    c_exp->add_option("--sigma", exp_args.sigma, "sign pattern (A)")->capture_default_str();
    c_exp->add_option("--point", exp_args.point, "boundary point")->required();
    c_exp->add_option("--x", exp_args.xs, "evaluation points (convergence)")->capture_default_str();
    c_exp->add_option("--n-list", exp_args.n_list, "comma-separated levels");
    c_exp->add_option("--tol", exp_args.tol, "final error / distance tolerance")->capture_default_str();
    c_exp->add_option("--k-max", exp_args.k_max, "events per side (lln)")->capture_default_str();
    c_exp->add_option("--L", exp_args.L, "target level (lln)")->capture_default_str();
    c_exp->add_option("--start", exp_args.start, "start level (lln, 0: 2L)")->capture_default_str();
    c_exp->add_option("--samples", exp_args.samples, "Monte Carlo samples (0: default)")->capture_default_str();
    c_exp->add_option("--k", exp_args.k, "window (concentration) or level (martin), 0: default");
    c_exp->add_option("--bound", exp_args.bound, "bound on the fitted constant")->capture_default_str();
    c_exp->add_option("--threshold", exp_args.threshold, "event probability threshold (lln)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (common.threads > 0) omp_set_num_threads(common.threads);

    try {
        ExperimentReport r;
        std::string command;
        if (c_char->parsed()) {
            r = run_char(char_args, common);
            command = "char";
        } else if (c_kernel->parsed()) {
            r = run_kernel(kernel_args, common);
            command = "kernel";
        } else if (c_sample->parsed()) {
            r = run_sample(sample_args, common);
            command = "sample";
        } else if (c_phi->parsed()) {
            r = run_phi(phi_args, common);
            command = "phi";
        } else if (c_verify->parsed()) {
            r = run_verify(verify_args, common);
            command = "verify";
        } else {
            r = run_experiment(exp_args, common);
            command = "experiment " + exp_args.kind;
        }
        write_report(r, common, command);
        return r.pass ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
