#include "qgt/graph.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <shared_mutex>

namespace qgt {

// --------------------------------------------------------------- signs

int SignSequence::sigma(long n) const {
    if (n < 1) throw BadShape("sign index starts at 1");
    return pattern[static_cast<std::size_t>((n - 1) % static_cast<long>(pattern.size()))] == '-' ? -1 : 1;
}

long SignSequence::b(long n) const {
    const long p = static_cast<long>(pattern.size());
    const long per = static_cast<long>(std::count(pattern.begin(), pattern.end(), '-'));
    long r = (n / p) * per;
    for (long i = 0; i < n % p; ++i) r += pattern[static_cast<std::size_t>(i)] == '-';
    return r;
}

bool SignSequence::generic() const {
    return pattern.find('+') != std::string::npos && pattern.find('-') != std::string::npos;
}

SignSequence SignSequence::parse(const std::string& s) {
    if (s == "alt") return {"+-"};
    if (s.empty() || s.find_first_not_of("+-") != std::string::npos)
        throw InvalidConfig("sign pattern must be a nonempty string of + and -: '" + s + "'");
    return {s};
}

std::string Graph::to_string() const {
    if (kind == Kind::symA) return "symA(" + sigma.pattern + ")";
    return std::string("bc(") + group.letter() + ")";
}

// ---------------------------------------------------------------- rows

Scalar KernelRow::total() const {
    Scalar s(mpq_class(0));
    for (const auto& [mu, p] : mass) s = s + p;
    return s;
}

Scalar KernelRow::at(const Signature& mu) const {
    auto it = mass.find(mu);
    return it == mass.end() ? Scalar(mpq_class(0)) : it->second;
}

double total_variation(const KernelRow& a, const KernelRow& b) {
    double s = 0;
    std::set<Signature> keys;
    for (const auto& [mu, p] : a.mass) keys.insert(mu);
    for (const auto& [mu, p] : b.mass) keys.insert(mu);
    for (const auto& mu : keys) s += std::abs(a.at(mu).to_cd() - b.at(mu).to_cd());
    return 0.5 * s;
}

namespace {

Scalar spow(const Scalar& u, long e) {
    Scalar base = e < 0 ? Scalar(mpq_class(1)) / u : u;
    Scalar r(mpq_class(1));
    for (long n = std::abs(e); n > 0; n >>= 1) {
        if (n & 1) r = r * base;
        if (n > 1) base = base * base;
    }
    return r;
}

long positive_parts(const Signature& s) {
    return static_cast<long>(std::count_if(s.begin(), s.end(), [](long v) { return v > 0; }));
}

// tau^G(u; lambda, nu, mu), first matching case wins for D.
Scalar tau(GroupType g, const Signature& lambda, const Signature& nu, const Signature& mu, const Scalar& u) {
    const long N = static_cast<long>(mu.size());
    switch (g.tag) {
        case Family::B:
            if (nu[N] == 0) return Scalar(mpq_class(1));
            return Scalar(mpq_class(1)) + Scalar(mpq_class(1)) / u;
        case Family::C: return Scalar(mpq_class(1));
        case Family::D: {
            const long mu_last = N > 0 ? mu[N - 1] : 0;
            if (nu[N] > 0 && nu[N] < std::min(mu_last, lambda[N])) return Scalar(mpq_class(0));
            if (positive_parts(lambda) == N && positive_parts(mu) == N) return Scalar(mpq_class(2));
            return Scalar(mpq_class(1));
        }
    }
    return Scalar(mpq_class(1));
}

void require_level(const Signature& lambda) {
    if (lambda.size() < 2) throw BadShape("kernel rows need a level of at least 2");
}

}  // namespace

KernelRow kernelA_step(const Signature& lambda, int sign, const EvalConfig& cfg) {
    require_signature(lambda);
    require_level(lambda);
    const long N = static_cast<long>(lambda.size()) - 1;
    const Scalar top = schur_principal(lambda, N + 1, cfg);
    const long wl = weight(lambda);
    KernelRow row;
    for (const auto& mu : interlacing_below(lambda)) {
        const long e = sign < 0 ? weight(mu) : N * (wl - weight(mu));
        row.mass[mu] = schur_principal(mu, N, cfg) * q_power(cfg, HalfInt::integer(e)) / top;
    }
    return row;
}

Scalar bc_skew_weight(GroupType g, const Signature& lambda, const Signature& mu, const Scalar& u, bool inverted) {
    require_nonneg_signature(lambda);
    require_nonneg_signature(mu);
    if (lambda.size() != mu.size() + 1) throw LengthMismatch("skew weight needs len(lambda) = len(mu) + 1");
    const Scalar v = inverted ? Scalar(mpq_class(1)) / u : u;
    const long base = weight(lambda) + weight(mu);
    Scalar acc(mpq_class(0));
    for (const auto& nu : bc_interlacing_below(lambda)) {
        if (!interlaces(InterlaceKind::gt, nu, mu)) continue;
        const long e = 2 * weight(nu) - base;
        acc = acc + tau(g, lambda, nu, mu, v) * spow(u, inverted ? -e : e);
    }
    return acc;
}

KernelRow kernelBC_step(GroupType g, const Signature& lambda, const EvalConfig& cfg) {
    require_nonneg_signature(lambda);
    require_level(lambda);
    const long N = static_cast<long>(lambda.size()) - 1;
    const Scalar u = q_power(cfg, HalfInt::integer(N) + g.epsilon());
    const Scalar top = bcd_principal(g, lambda, cfg);
    const long base = weight(lambda);
    std::map<Signature, Scalar> skew;
    for (const auto& nu : bc_interlacing_below(lambda))
        for (const auto& mu : interlacing_below(nu)) {
            const Scalar w = tau(g, lambda, nu, mu, u) * spow(u, 2 * weight(nu) - base - weight(mu));
            auto it = skew.find(mu);
            if (it == skew.end())
                skew.emplace(mu, w);
            else
                it->second = it->second + w;
        }
    KernelRow row;
    for (const auto& [mu, w] : skew) {
        if (w.is_zero()) continue;
        row.mass[mu] = bcd_principal(g, mu, cfg) * w / top;
    }
    return row;
}

namespace {

void enumerate_between(const Signature& lambda, long k, Signature& cur, std::vector<Signature>& out) {
    const long N = static_cast<long>(lambda.size());
    const long i = static_cast<long>(cur.size());
    if (i == k) {
        out.push_back(cur);
        return;
    }
    long hi = lambda[i];
    if (i > 0) hi = std::min(hi, cur.back());
    for (long v = hi; v >= lambda[i + N - k]; --v) {
        cur.push_back(v);
        enumerate_between(lambda, k, cur, out);
        cur.pop_back();
    }
}

// s_{lambda/mu}(xs) by the Jacobi-Trudi determinant det[h_{lambda_i - mu_j - i + j}],
// after shifting both signatures to be nonnegative.
template <class T>
T skew_schur_t(const Signature& lambda, const Signature& mu, const std::vector<T>& h, long shift,
               const T& prod_pow) {
    const long N = static_cast<long>(lambda.size());
    auto H = [&](long m) {
        if (m < 0) return from_long<T>(0);
        if (m >= static_cast<long>(h.size())) throw BadShape("h table too short");
        return h[static_cast<std::size_t>(m)];
    };
    auto m = make_matrix<T>(N, N);
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) {
            const long muj = j < static_cast<long>(mu.size()) ? mu[j] + shift : 0;
            m[i][j] = H(lambda[i] + shift - muj - i + j);
        }
    return det(std::move(m)) / prod_pow;
}

}  // namespace

KernelRow kernelA_multi_exact(const Signature& lambda, long k, const SignSequence& sigma, const EvalConfig& cfg) {
    require_signature(lambda);
    const long N = static_cast<long>(lambda.size());
    if (k < 1 || k >= N) throw BadShape("multi-step kernel needs 1 <= k < N");
    const long bk = sigma.b_k(k, N);
    std::vector<HalfInt> rest;
    for (long j = 0; j < N; ++j)
        if (j < bk || j >= bk + k) rest.push_back(HalfInt::integer(j));
    const long shift = std::max(0L, -lambda.back());
    std::vector<Signature> mus;
    Signature cur;
    enumerate_between(lambda, k, cur, mus);

    auto run = [&](auto tag) {
        using T = decltype(tag);
        QPowers<T> qp(cfg);
        std::vector<T> xs;
        T prod = from_long<T>(1);
        for (auto e : rest) {
            xs.push_back(qp.pow(e));
            prod = prod * xs.back();
        }
        const T prod_pow = ipow(prod, shift);
        const auto h = complete_h_upto(xs, lambda.front() + shift + N);
        const T top = schur_principal_t(lambda, qp);
        KernelRow row;
        for (const auto& mu : mus) {
            const T skew = skew_schur_t(lambda, mu, h, shift, prod_pow);
            if (is_zero(skew)) continue;
            QPowers<T> qk(cfg);
            T v = schur_principal_t(mu, qk) * qp.pow(HalfInt::integer(bk * weight(mu))) * skew / top;
            row.mass[mu] = Scalar(v);
        }
        return row;
    };
    // The skew determinant cancels badly in floating point; q is rational, so
    // the row is always computed exactly and converted afterwards.
    cfg.validate();
    KernelRow row = run(mpq_class());
    if (cfg.mode == Mode::floating) {
        PrecisionScope ps(cfg.float_precision_bits);
        for (auto& [mu, p] : row.mass) p = Scalar(p.to_float());
    }
    return row;
}

KernelRow kernel_step(const Graph& g, const Signature& lambda, const EvalConfig& cfg) {
    if (g.kind == Graph::Kind::symA)
        return kernelA_step(lambda, g.sigma.sigma(static_cast<long>(lambda.size())), cfg);
    return kernelBC_step(g.group, lambda, cfg);
}

namespace {
constexpr double kPruneMass = 1e-20;
}

KernelRow compose_kernels(const Graph& g, const Signature& lambda, long k, const EvalConfig& cfg) {
    const long N = static_cast<long>(lambda.size());
    if (k < 1 || k > N) throw BadShape("compose_kernels needs 1 <= k <= N");
    KernelRow dist;
    dist.mass[lambda] = Scalar(mpq_class(1));
    for (long n = N; n > k; --n) {
        KernelRow next;
        for (const auto& [from, p] : dist.mass)
            for (const auto& [to, w] : kernel_step(g, from, cfg).mass) {
                auto it = next.mass.find(to);
                if (it == next.mass.end())
                    next.mass.emplace(to, p * w);
                else
                    it->second = it->second + p * w;
            }
        // in floating mode, states far below the working accuracy are dropped
        if (cfg.mode == Mode::floating)
            std::erase_if(next.mass, [](const auto& kv) { return std::abs(kv.second.to_cd()) < kPruneMass; });
        dist = std::move(next);
    }
    return dist;
}

// ------------------------------------------------------------ sampling

std::uint64_t chain_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct ChainSampler::Impl {
    Graph graph;
    EvalConfig cfg;
    struct Table {
        std::vector<Signature> states;
        std::vector<double> cum;
    };
    mutable std::shared_mutex mu;
    mutable std::map<Signature, std::shared_ptr<const Table>> cache;

    std::shared_ptr<const Table> table(const Signature& lambda) const {
        {
            std::shared_lock lk(mu);
            auto it = cache.find(lambda);
            if (it != cache.end()) return it->second;
        }
        auto t = std::make_shared<Table>();
        double acc = 0;
        for (const auto& [m, p] : kernel_step(graph, lambda, cfg).mass) {
            const double w = p.to_cd().real();
            if (w <= 0) continue;
            acc += w;
            t->states.push_back(m);
            t->cum.push_back(acc);
        }
        std::unique_lock lk(mu);
        return cache.emplace(lambda, std::move(t)).first->second;
    }

    const Signature& step(const Signature& lambda, std::mt19937_64& rng) const {
        auto t = table(lambda);
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * t->cum.back();
        auto it = std::upper_bound(t->cum.begin(), t->cum.end(), u);
        const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(it - t->cum.begin()),
                                                    t->states.size() - 1);
        // the table lives in the cache for the sampler's lifetime
        return t->states[i];
    }
};

ChainSampler::ChainSampler(Graph g, EvalConfig cfg) : impl_(new Impl{std::move(g), std::move(cfg), {}, {}}) {}
ChainSampler::~ChainSampler() { delete impl_; }

ChainSample ChainSampler::sample(const Signature& top, long k, std::uint64_t seed) const {
    const long N = static_cast<long>(top.size());
    if (k < 1 || k > N) throw BadShape("chain needs 1 <= k <= N");
    ChainSample out;
    out.rng_seed = seed;
    out.levels.push_back(top);
    std::mt19937_64 rng(seed);
    for (long n = N; n > k; --n) out.levels.push_back(impl_->step(out.levels.back(), rng));
    return out;
}

namespace {

template <class Fn>
void run_indexed(long count, bool parallel, Fn&& fn) {
    std::exception_ptr err;
#pragma omp parallel for schedule(static) if (parallel)
    for (long i = 0; i < count; ++i) {
        try {
            fn(i);
        } catch (...) {
#pragma omp critical(qgt_chain_error)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

}  // namespace

std::vector<Signature> ChainSampler::sample_many(const Signature& top, long k, long count, std::uint64_t seed,
                                                 bool parallel) const {
    std::vector<Signature> out(static_cast<std::size_t>(count));
    impl_->table(top);  // fill the first row before the threads start
    run_indexed(count, parallel, [&](long i) {
        out[static_cast<std::size_t>(i)] = sample(top, k, chain_seed(seed, static_cast<std::uint64_t>(i))).levels.back();
    });
    return out;
}

std::vector<Signature> ChainSampler::sample_step_many(const Signature& from, long count, std::uint64_t seed,
                                                      bool parallel) const {
    std::vector<Signature> out(static_cast<std::size_t>(count));
    impl_->table(from);
    run_indexed(count, parallel, [&](long i) {
        std::mt19937_64 rng(chain_seed(seed, static_cast<std::uint64_t>(i)));
        out[static_cast<std::size_t>(i)] = impl_->step(from, rng);
    });
    return out;
}

ChainSample sample_chain(const Graph& g, const Signature& top, long k, std::uint64_t seed, const EvalConfig& cfg) {
    return ChainSampler(g, cfg).sample(top, k, seed);
}

// ------------------------------------------------------ boundary points

Signature canonical_sequence_A(const BoundaryPointA& t, const SignSequence& sigma, long N) {
    t.validate();
    Signature lam(static_cast<std::size_t>(N));
    const long b = sigma.b(N);
    for (long j = 1; j <= N; ++j) lam[j - 1] = t.t(b + 1 - j);
    return lam;
}

Signature canonical_sequence_BC(const BoundaryPointBC& y, long N) {
    y.validate();
    Signature lam(static_cast<std::size_t>(N));
    for (long j = 1; j <= N; ++j) lam[j - 1] = y.y(N + 1 - j);
    return lam;
}

namespace {

KernelRow empirical(const std::vector<Signature>& ends, MeasureDiagnostics* diag) {
    std::map<Signature, long> counts;
    for (const auto& s : ends) ++counts[s];
    KernelRow row;
    const double n = static_cast<double>(ends.size());
    for (const auto& [mu, c] : counts) {
        row.mass[mu] = Scalar(mpq_class(c, static_cast<long>(ends.size())));
        if (diag) {
            const double p = static_cast<double>(c) / n;
            diag->radius95[mu] = 1.96 * std::sqrt(p * (1 - p) / n);
        }
    }
    return row;
}

template <class RowAt>
KernelRow checked_measure(const MeasureMethod& method, MeasureDiagnostics* diag, RowAt&& row_at) {
    KernelRow row = row_at(method.n_trunc);
    if (method.check) {
        const double tv = total_variation(row, row_at(method.n_trunc + 8));
        if (diag) diag->tv_check = tv;
        if (tv > method.tol)
            throw NotConverged("boundary measure moved by " + std::to_string(tv) + " between levels " +
                               std::to_string(method.n_trunc) + " and " + std::to_string(method.n_trunc + 8));
    }
    return row;
}

}  // namespace

KernelRow boundary_measure_A(const SignSequence& sigma, const BoundaryPointA& t, long k, const EvalConfig& cfg,
                             const MeasureMethod& method, MeasureDiagnostics* diag) {
    const Graph g = Graph::symA(sigma);
    switch (method.kind) {
        case MeasureMethod::Kind::exact_multi:
            return checked_measure(method, diag, [&](long N) {
                return kernelA_multi_exact(canonical_sequence_A(t, sigma, N), k, sigma, cfg);
            });
        case MeasureMethod::Kind::compose:
            return checked_measure(method, diag, [&](long N) {
                return compose_kernels(g, canonical_sequence_A(t, sigma, N), k, cfg);
            });
        case MeasureMethod::Kind::monte_carlo: {
            ChainSampler s(g, cfg);
            return empirical(s.sample_many(canonical_sequence_A(t, sigma, method.n_trunc), k, method.samples,
                                           method.seed),
                             diag);
        }
    }
    return {};
}

KernelRow boundary_measure_BC(GroupType g, const BoundaryPointBC& y, long k, const EvalConfig& cfg,
                              const MeasureMethod& method, MeasureDiagnostics* diag) {
    const Graph gr = Graph::bc(g);
    switch (method.kind) {
        case MeasureMethod::Kind::exact_multi:
            throw InvalidConfig("the closed-form multi-step kernel exists for the symmetric graph only");
        case MeasureMethod::Kind::compose:
            return checked_measure(method, diag, [&](long N) {
                return compose_kernels(gr, canonical_sequence_BC(y, N), k, cfg);
            });
        case MeasureMethod::Kind::monte_carlo: {
            ChainSampler s(gr, cfg);
            return empirical(s.sample_many(canonical_sequence_BC(y, method.n_trunc), k, method.samples, method.seed),
                             diag);
        }
    }
    return {};
}

// ---------------------------------------------------------- functionals

cd f_mu_functional(TorusFamily fam, const Signature& mu, const TorusFunction& f, long k, long grid) {
    if (static_cast<long>(mu.size()) != k) throw LengthMismatch("F_mu: len(mu) != k");
    if (k < 1 || k > 3) throw BadShape("torus functionals are implemented for k <= 3");
    long top = 0;
    for (long v : mu) top = std::max(top, std::abs(v));
    if (grid <= 2 * (top + 2 * k + 2))
        throw GridTooCoarse("grid " + std::to_string(grid) + " aliases the weight times the character");
    if (fam != TorusFamily::A) require_nonneg_signature(mu);
    const GroupType g{fam == TorusFamily::B ? Family::B : fam == TorusFamily::C ? Family::C : Family::D};

    long total = 1;
    for (long i = 0; i < k; ++i) total *= grid;
    std::vector<cd> num(static_cast<std::size_t>(total)), den(static_cast<std::size_t>(total));
    std::vector<cd> roots(static_cast<std::size_t>(grid));
    for (long j = 0; j < grid; ++j)
        roots[static_cast<std::size_t>(j)] =
            std::polar(1.0, 2 * M_PI * (static_cast<double>(j) + 0.5) / static_cast<double>(grid));

    std::exception_ptr err;
#pragma omp parallel for schedule(static)
    for (long flat = 0; flat < total; ++flat) {
        try {
            std::vector<cd> z(static_cast<std::size_t>(k));
            long r = flat;
            for (long i = 0; i < k; ++i) {
                z[static_cast<std::size_t>(i)] = roots[static_cast<std::size_t>(r % grid)];
                r /= grid;
            }
            bool degenerate = false;
            for (long i = 0, ri = flat; i < k; ++i, ri /= grid)
                for (long j = i + 1, rj = ri / grid; j < k; ++j, rj /= grid) {
                    const long a = ri % grid, b = rj % grid;
                    degenerate = degenerate || a == b || (fam != TorusFamily::A && a + b == grid - 1);
                }
            if (degenerate) continue;  // the weight vanishes on these diagonals
            double w = 1;
            for (long i = 0; i < k; ++i)
                for (long j = i + 1; j < k; ++j) {
                    w *= std::norm(z[i] - z[j]);
                    if (fam != TorusFamily::A) w *= std::norm(1.0 - z[i] * z[j]);
                }
            for (long i = 0; i < k; ++i) {
                if (fam == TorusFamily::B) w *= std::norm(1.0 - z[i]);
                if (fam == TorusFamily::C) w *= std::norm(1.0 - z[i]) * std::norm(1.0 + z[i]);
            }
            if (w == 0) continue;
            const cd ch = fam == TorusFamily::A ? schur_eval_t(mu, z) : bcd_eval_t(g, mu, z);
            num[static_cast<std::size_t>(flat)] = f(z) * std::conj(ch) * w;
            den[static_cast<std::size_t>(flat)] = ch * std::conj(ch) * w;
        } catch (...) {
#pragma omp critical(qgt_torus_error)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    cd sn = 0, sd = 0;
    for (long i = 0; i < total; ++i) {
        sn += num[static_cast<std::size_t>(i)];
        sd += den[static_cast<std::size_t>(i)];
    }
    if (fam != TorusFamily::A) return sn / sd;
    double kf = 1;
    for (long i = 2; i <= k; ++i) kf *= static_cast<double>(i);
    return sn / (static_cast<double>(total) * kf);
}

}  // namespace qgt
