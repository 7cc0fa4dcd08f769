#pragma once

// Branching graphs: one-step and multi-step Markov kernels for the symmetric
// (type A) and BC q-Gelfand-Tsetlin graphs, chain sampling, boundary
// measures and the torus functionals F_mu.

#include "qgt/chars.hpp"
#include "qgt/contour.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qgt {

// Periodic sign pattern sigma_1 sigma_2 ... ("+", "-", "+-", "++-", ...).
// The step from level n+1 to level n uses sigma_{n+1}, so that
// b_k(N) = #{k < i <= N : sigma_i = -1} counts the signs used between levels
// k and N.
struct SignSequence {
    std::string pattern = "+";

    int sigma(long n) const;     // n >= 1
    long b(long n) const;        // #{i <= n : sigma_i = -1}, b(0) = 0
    long b_k(long k, long N) const { return std::max(0L, b(N) - b(k)); }
    // Both signs occur, so b(N) and N - b(N) are unbounded.
    bool generic() const;
    std::string to_string() const { return pattern; }

    static SignSequence parse(const std::string& s);  // also "alt" for "+-"
};

struct KernelRow {
    std::map<Signature, Scalar> mass;

    Scalar total() const;
    Scalar at(const Signature& mu) const;
};

double total_variation(const KernelRow& a, const KernelRow& b);

// Lambda^{N+1}_N(lambda, .) of the symmetric graph for the sign of this step.
KernelRow kernelA_step(const Signature& lambda, int sign, const EvalConfig& cfg);

// chi^G_{lambda/mu}(u) by enumeration of the intermediate nu.  With
// `inverted` the sum uses tau(1/u) u^{|lambda|+|mu|-2|nu|} instead, which
// must give the same value.
Scalar bc_skew_weight(GroupType g, const Signature& lambda, const Signature& mu, const Scalar& u,
                      bool inverted = false);

// Lambda^{N+1}_N(lambda, .) of the BC graph of type g.
KernelRow kernelBC_step(GroupType g, const Signature& lambda, const EvalConfig& cfg);

// Lambda^N_k(lambda, .) of the symmetric graph in closed form (skew Schur at
// the unused principal points).
KernelRow kernelA_multi_exact(const Signature& lambda, long k, const SignSequence& sigma, const EvalConfig& cfg);

struct Graph {
    enum class Kind { symA, bc } kind = Kind::symA;
    SignSequence sigma;
    GroupType group;

    static Graph symA(SignSequence s) { return {Kind::symA, std::move(s), {}}; }
    static Graph bc(GroupType g) { return {Kind::bc, {}, g}; }
    std::string to_string() const;
};

// Row of the graph's kernel from level lambda.size() to one level below.
KernelRow kernel_step(const Graph& g, const Signature& lambda, const EvalConfig& cfg);

// Lambda^N_k(lambda, .) by propagating the distribution level by level.
KernelRow compose_kernels(const Graph& g, const Signature& lambda, long k, const EvalConfig& cfg);

struct ChainSample {
    std::vector<Signature> levels;  // level N first, level k last
    std::uint64_t rng_seed = 0;
};

// Independent stream for chain `index` of a run seeded with `seed`.
std::uint64_t chain_seed(std::uint64_t seed, std::uint64_t index);

// Kernel rows converted to cumulative double tables, cached per signature.
// Thread safe.
class ChainSampler {
public:
    ChainSampler(Graph g, EvalConfig cfg);
    ~ChainSampler();
    ChainSampler(const ChainSampler&) = delete;
    ChainSampler& operator=(const ChainSampler&) = delete;

    ChainSample sample(const Signature& top, long k, std::uint64_t seed) const;
    // Level-k endpoints of `count` chains with seeds chain_seed(seed, i).
    std::vector<Signature> sample_many(const Signature& top, long k, long count, std::uint64_t seed,
                                       bool parallel = true) const;
    // One step from `from`, `count` times.
    std::vector<Signature> sample_step_many(const Signature& from, long count, std::uint64_t seed,
                                            bool parallel = true) const;

private:
    struct Impl;
    Impl* impl_;
};

ChainSample sample_chain(const Graph& g, const Signature& top, long k, std::uint64_t seed, const EvalConfig& cfg);

// lambda(N)_j = t_{b(N)+1-j}
Signature canonical_sequence_A(const BoundaryPointA& t, const SignSequence& sigma, long N);
// lambda(N)_j = y_{N+1-j}
Signature canonical_sequence_BC(const BoundaryPointBC& y, long N);

struct MeasureMethod {
    enum class Kind { exact_multi, compose, monte_carlo } kind = Kind::exact_multi;
    long n_trunc = 40;
    long samples = 100000;
    std::uint64_t seed = 1;
    double tol = 1e-6;  // allowed total variation between levels n_trunc and n_trunc + 8
    bool check = true;
};

struct MeasureDiagnostics {
    double tv_check = 0;                    // TV distance to the row at n_trunc + 8
    std::map<Signature, double> radius95;  // Monte Carlo only
};

// Level-k boundary measure of the point, approximated from the canonical
// sequence at level n_trunc.
KernelRow boundary_measure_A(const SignSequence& sigma, const BoundaryPointA& t, long k, const EvalConfig& cfg,
                             const MeasureMethod& method, MeasureDiagnostics* diag = nullptr);
KernelRow boundary_measure_BC(GroupType g, const BoundaryPointBC& y, long k, const EvalConfig& cfg,
                              const MeasureMethod& method, MeasureDiagnostics* diag = nullptr);

enum class TorusFamily { A, B, C, D };
using TorusFunction = std::function<cd(const std::vector<cd>&)>;

// F_mu(f) by the trapezoid rule on `grid`^k torus points (offset half a step
// so that z = +-1 are never sampled).  Type A uses the Haar measure with the
// |Vandermonde|^2 / k! weight, B/C/D the normalized Weyl weight.
cd f_mu_functional(TorusFamily fam, const Signature& mu, const TorusFunction& f, long k, long grid);

}  // namespace qgt
