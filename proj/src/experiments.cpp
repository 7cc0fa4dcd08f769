#include "qgt/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <sstream>

namespace qgt {

// -------------------------------------------------------------- output

std::string format_double(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string format_scalar(const Scalar& s, const EvalConfig& cfg) {
    if (s.is_exact()) return s.to_string();
    const int digits = static_cast<int>(std::ceil(static_cast<double>(cfg.float_precision_bits) * 0.30103));
    return s.to_string(std::min(digits, 80));
}

namespace {

Json scalar_json(const Scalar& s, const EvalConfig& cfg) {
    if (s.is_exact()) return s.to_string();
    const auto z = s.to_float();
    if (z.imag().is_zero()) return format_scalar(s, cfg);
    return Json::array({format_scalar(Scalar(MpComplex(z.real())), cfg), format_scalar(Scalar(MpComplex(z.imag())), cfg)});
}

Json cd_json(cd z) {
    if (z.imag() == 0) return format_double(z.real());
    return Json::array({format_double(z.real()), format_double(z.imag())});
}

std::string csv_cell(const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Json config_json(const EvalConfig& cfg) {
    Json j;
    j["q"] = Scalar(cfg.q).to_string();
    if (cfg.sqrt_q) j["sqrt_q"] = Scalar(*cfg.sqrt_q).to_string();
    j["mode"] = cfg.mode == Mode::exact ? "exact" : "float";
    j["precision_bits"] = cfg.float_precision_bits;
    return j;
}

Json quad_json(const QuadratureSpec& quad) {
    Json j;
    j["v_nodes"] = quad.v_nodes;
    j["u_nodes_per_unit"] = quad.u_nodes_per_unit;
    j["u_halfwidth"] = format_double(quad.u_halfwidth);
    j["product_truncation"] = quad.product_truncation;
    j["tol"] = format_double(quad.tol);
    j["R"] = format_double(quad.R);
    j["check_doubling"] = quad.check_doubling;
    return j;
}

Json row_json(const KernelRow& row, const EvalConfig& cfg) {
    Json j = Json::object();
    for (const auto& [mu, p] : row.mass) j[to_string(mu)] = scalar_json(p, cfg);
    return j;
}

Json ExperimentReport::to_json() const {
    Json j;
    j["name"] = name;
    j["config"] = config;
    j["rows"] = rows;
    j["result"] = result;
    j["verdict"] = {{"pass", pass}, {"detail", detail}};
    return j;
}

std::string ExperimentReport::to_csv() const {
    std::ostringstream out;
    if (rows.empty()) return "";
    std::vector<std::string> cols;
    for (const auto& r : rows)
        for (const auto& [key, v] : r.items())
            if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_cell(cols[i]);
    out << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) out << ",";
            if (r.contains(cols[i])) out << csv_cell(r.at(cols[i]));
        }
        out << "\n";
    }
    return out.str();
}

// --------------------------------------------------------- convergence

namespace {

bool weakly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

Json xs_json(const std::vector<Scalar>& xs, const EvalConfig& cfg) {
    Json j = Json::array();
    for (const auto& x : xs) j.push_back(scalar_json(x, cfg));
    return j;
}

void finish_convergence(ExperimentReport& r, const std::vector<double>& errs, double tol) {
    const bool mono = weakly_decreasing(errs);
    const bool small = !errs.empty() && errs.back() <= tol;
    r.pass = mono && small;
    r.result["final_error"] = format_double(errs.empty() ? 0.0 : errs.back());
    r.detail = std::string(mono ? "errors weakly decreasing" : "errors not monotone") + ", final error " +
               format_double(errs.empty() ? 0.0 : errs.back()) + (small ? " <= " : " > ") + format_double(tol);
}

}  // namespace

ExperimentReport convergence_experiment_A(const SignSequence& sigma, const BoundaryPointA& t,
                                          const ConvergenceSpec& spec, const EvalConfig& cfg,
                                          const QuadratureSpec& quad) {
    ExperimentReport r;
    r.name = "convergence";
    r.config = {{"family", "A"}, {"sigma", sigma.pattern}, {"point", t.to_string()}, {"xs", xs_json(spec.xs, cfg)},
                {"n_list", spec.n_list}, {"tol", format_double(spec.tol)}, {"eval", config_json(cfg)},
                {"quadrature", quad_json(quad)}};
    const auto fcfg = cfg.mode == Mode::exact ? EvalConfig::floating(cfg.q, cfg.float_precision_bits) : cfg;
    const cd phi = phiA_multivar(t, spec.xs, fcfg, quad).to_cd();
    r.result["phi"] = cd_json(phi);
    std::vector<double> errs;
    for (long N : spec.n_list) {
        const long b = sigma.b(N);
        if (b + static_cast<long>(spec.xs.size()) > N) throw BadShape("level too small for the variable count");
        const cd fin = typeA_direct_ratio(canonical_sequence_A(t, sigma, N), b, spec.xs, fcfg).to_cd();
        errs.push_back(std::abs(fin - phi));
        r.rows.push_back({{"N", N}, {"b", b}, {"finite", cd_json(fin)}, {"error", format_double(errs.back())}});
    }
    finish_convergence(r, errs, spec.tol);
    return r;
}

ExperimentReport convergence_experiment_BC(GroupType g, const BoundaryPointBC& y, const ConvergenceSpec& spec,
                                           const EvalConfig& cfg, const QuadratureSpec& quad) {
    ExperimentReport r;
    r.name = "convergence";
    r.config = {{"family", std::string(1, g.letter())}, {"point", y.to_string()}, {"xs", xs_json(spec.xs, cfg)},
                {"n_list", spec.n_list}, {"tol", format_double(spec.tol)}, {"eval", config_json(cfg)},
                {"quadrature", quad_json(quad)}};
    const auto fcfg = cfg.mode == Mode::exact ? EvalConfig::floating(cfg.q, cfg.float_precision_bits) : cfg;
    const cd phi = phiBCD_multivar(g, y, spec.xs, fcfg, quad).to_cd();
    r.result["phi"] = cd_json(phi);
    std::vector<double> errs;
    for (long N : spec.n_list) {
        const cd fin = bcd_direct_ratio(g, canonical_sequence_BC(y, N), 0, spec.xs, fcfg).to_cd();
        errs.push_back(std::abs(fin - phi));
        r.rows.push_back({{"N", N}, {"finite", cd_json(fin)}, {"error", format_double(errs.back())}});
    }
    finish_convergence(r, errs, spec.tol);
    return r;
}

// ------------------------------------------------------------------ LLN

ExperimentReport lln_experiment_A(const SignSequence& sigma, const BoundaryPointA& t, const LlnSpec& spec,
                                  const EvalConfig& cfg) {
    ExperimentReport r;
    r.name = "lln";
    const long start = spec.start_level > 0 ? spec.start_level : 2 * spec.L;
    r.config = {{"family", "A"},  {"sigma", sigma.pattern}, {"point", t.to_string()},
                {"k_max", spec.k_max}, {"L", spec.L},       {"start_level", start},
                {"method", "exact_multi"}, {"threshold", format_double(spec.threshold)}, {"eval", config_json(cfg)}};
    if (spec.L >= start) throw BadShape("LLN needs L below the start level");
    const auto M = kernelA_multi_exact(canonical_sequence_A(t, sigma, start), spec.L, sigma, cfg);
    const long b = sigma.b(spec.L);
    r.pass = true;
    double worst = 1;
    for (long k = 1 - spec.k_max; k <= spec.k_max; ++k) {
        const long pos = b + k;  // 1-based
        if (pos < 1 || pos > spec.L) continue;
        const long target = t.t(1 - k);
        Scalar mass(mpq_class(0));
        for (const auto& [mu, p] : M.mass)
            if (mu[pos - 1] == target) mass = mass + p;
        const double f = mass.to_cd().real();
        worst = std::min(worst, f);
        r.pass = r.pass && f >= spec.threshold;
        r.rows.push_back({{"k", k},
                          {"position", pos},
                          {"target", target},
                          {"probability", format_scalar(mass, cfg)},
                          {"probability_decimal", format_double(f)}});
    }
    r.result["min_probability"] = format_double(worst);
    r.detail = "smallest event probability " + format_double(worst) + (r.pass ? " >= " : " < ") +
               format_double(spec.threshold);
    return r;
}

ExperimentReport lln_experiment_BC(GroupType g, const BoundaryPointBC& y, const LlnSpec& spec, const EvalConfig& cfg) {
    ExperimentReport r;
    r.name = "lln";
    const long start = spec.start_level > 0 ? spec.start_level : 2 * spec.L;
    r.config = {{"family", std::string(1, g.letter())},
                {"point", y.to_string()},
                {"k_max", spec.k_max},
                {"L", spec.L},
                {"start_level", start},
                {"samples", spec.samples},
                {"seed", spec.seed},
                {"method", "monte_carlo"},
                {"threshold", format_double(spec.threshold)},
                {"eval", config_json(cfg)}};
    if (spec.L >= start || spec.k_max > spec.L) throw BadShape("LLN needs k_max <= L < start level");
    ChainSampler s(Graph::bc(g), cfg);
    const auto ends = s.sample_many(canonical_sequence_BC(y, start), spec.L, spec.samples, spec.seed);
    r.pass = true;
    double worst = 1;
    for (long k = 1; k <= spec.k_max; ++k) {
        long hits = 0;
        for (const auto& mu : ends) hits += mu[spec.L - k] == y.y(k);
        const double f = static_cast<double>(hits) / static_cast<double>(spec.samples);
        const double se = std::sqrt(f * (1 - f) / static_cast<double>(spec.samples));
        worst = std::min(worst, f);
        r.pass = r.pass && f >= spec.threshold;
        r.rows.push_back({{"k", k},
                          {"target", y.y(k)},
                          {"hits", hits},
                          {"frequency", format_double(f)},
                          {"std_error", format_double(se)}});
    }
    r.result["min_frequency"] = format_double(worst);
    r.detail = "smallest event frequency " + format_double(worst) + (r.pass ? " >= " : " < ") +
               format_double(spec.threshold);
    return r;
}

// -------------------------------------------------------- concentration

namespace {

template <class Violates>
void concentration_rows(ExperimentReport& r, const ConcentrationSpec& spec, const EvalConfig& cfg,
                        const Graph& graph, const std::function<Signature(long)>& top_at,
                        const std::function<long(long)>& rate, Violates&& violates) {
    ChainSampler s(graph, cfg);
    const double q = cfg.q.get_d();
    double chat = 0;
    for (long N : spec.n_list) {
        const Signature top = top_at(N + 1);
        const auto draws = s.sample_step_many(top, spec.samples, chain_seed(spec.seed, static_cast<std::uint64_t>(N)));
        long bad = 0;
        for (const auto& mu : draws) bad += violates(N, top, mu);
        const double f = static_cast<double>(bad) / static_cast<double>(spec.samples);
        const double scale = std::pow(q, static_cast<double>(rate(N)));
        chat = std::max(chat, f / scale);
        r.rows.push_back({{"N", N},
                          {"rate", rate(N)},
                          {"violations", bad},
                          {"frequency", format_double(f)},
                          {"ratio", format_double(f / scale)}});
    }
    r.result["fitted_constant"] = format_double(chat);
    r.pass = chat <= spec.bound;
    r.detail = "fitted constant " + format_double(chat) + (r.pass ? " <= " : " > ") + format_double(spec.bound);
}

Json concentration_config(const ConcentrationSpec& spec, const EvalConfig& cfg) {
    return {{"k", spec.k},         {"n_list", spec.n_list},          {"samples", spec.samples},
            {"seed", spec.seed},   {"bound", format_double(spec.bound)}, {"eval", config_json(cfg)}};
}

}  // namespace

ExperimentReport concentration_experiment_A(const SignSequence& sigma, const BoundaryPointA& t,
                                            const ConcentrationSpec& spec, const EvalConfig& cfg) {
    ExperimentReport r;
    r.name = "concentration";
    r.config = {{"family", "A"}, {"sigma", sigma.pattern}, {"point", t.to_string()}};
    r.config.update(concentration_config(spec, cfg));
    concentration_rows(
        r, spec, cfg, Graph::symA(sigma), [&](long n) { return canonical_sequence_A(t, sigma, n); },
        [&](long N) { return std::min(sigma.b(N), N - sigma.b(N)); },
        [&](long N, const Signature& top, const Signature& mu) {
            for (long i = -spec.k; i <= spec.k; ++i) {
                const long p = sigma.b(N) + i, pt = sigma.b(N + 1) + i;
                if (p < 1 || p > N || pt < 1 || pt > N + 1) continue;
                if (mu[p - 1] != top[pt - 1]) return true;
            }
            return false;
        });
    return r;
}

ExperimentReport concentration_experiment_BC(GroupType g, const BoundaryPointBC& y, const ConcentrationSpec& spec,
                                             const EvalConfig& cfg) {
    ExperimentReport r;
    r.name = "concentration";
    r.config = {{"family", std::string(1, g.letter())}, {"point", y.to_string()}};
    r.config.update(concentration_config(spec, cfg));
    concentration_rows(
        r, spec, cfg, Graph::bc(g), [&](long n) { return canonical_sequence_BC(y, n); }, [](long N) { return N; },
        [&](long N, const Signature& top, const Signature& mu) {
            for (long i = 1; i <= std::min(spec.k, N); ++i)
                if (mu[N - i] != top[N + 1 - i]) return true;
            return false;
        });
    return r;
}

// --------------------------------------------------------------- Martin

namespace {

ExperimentReport martin_rows(ExperimentReport r, const MartinSpec& spec, const EvalConfig& cfg,
                             const std::function<KernelRow(long)>& row_at) {
    std::vector<KernelRow> rows(spec.n_list.size());
    for (std::size_t i = 0; i < spec.n_list.size(); ++i) rows[i] = row_at(spec.n_list[i]);
    std::vector<double> tv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Json j = {{"N", spec.n_list[i]}, {"support", rows[i].mass.size()}};
        if (i > 0) {
            tv.push_back(total_variation(rows[i - 1], rows[i]));
            j["tv_to_previous"] = format_double(tv.back());
        }
        r.rows.push_back(j);
    }
    const bool mono = weakly_decreasing(tv);
    const double last = tv.empty() ? 0.0 : tv.back();
    r.pass = mono && last <= spec.tol;
    if (!rows.empty()) {
        r.result["measure"] = row_json(rows.back(), cfg);
        Json dec = Json::object();
        for (const auto& [mu, p] : rows.back().mass) dec[to_string(mu)] = format_double(p.to_cd().real());
        r.result["measure_decimal"] = dec;
    }
    r.result["final_tv"] = format_double(last);
    r.detail = std::string(mono ? "distances weakly decreasing" : "distances not monotone") + ", final " +
               format_double(last) + (last <= spec.tol ? " <= " : " > ") + format_double(spec.tol);
    return r;
}

}  // namespace

ExperimentReport martin_experiment_A(const SignSequence& sigma, const BoundaryPointA& t, const MartinSpec& spec,
                                     const EvalConfig& cfg) {
    ExperimentReport r;
    r.name = "martin";
    r.config = {{"family", "A"}, {"sigma", sigma.pattern}, {"point", t.to_string()}, {"k", spec.k},
                {"n_list", spec.n_list}, {"method", "exact_multi"}, {"tol", format_double(spec.tol)},
                {"eval", config_json(cfg)}};
    return martin_rows(std::move(r), spec, cfg, [&](long N) {
        return kernelA_multi_exact(canonical_sequence_A(t, sigma, N), spec.k, sigma, cfg);
    });
}

ExperimentReport martin_experiment_BC(GroupType g, const BoundaryPointBC& y, const MartinSpec& spec,
                                      const EvalConfig& cfg) {
    ExperimentReport r;
    r.name = "martin";
    r.config = {{"family", std::string(1, g.letter())}, {"point", y.to_string()}, {"k", spec.k},
                {"n_list", spec.n_list}, {"method", "compose"}, {"tol", format_double(spec.tol)},
                {"eval", config_json(cfg)}};
    return martin_rows(std::move(r), spec, cfg, [&](long N) {
        return compose_kernels(Graph::bc(g), canonical_sequence_BC(y, N), spec.k, cfg);
    });
}

}  // namespace qgt
