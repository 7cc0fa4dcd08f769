#pragma once

// Reproducible experiments: convergence of finite-N ratios to the limit
// functions, laws of large numbers, concentration and stabilization of the
// multi-step kernels.  Each run returns a self-describing report.

#include "qgt/graph.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qgt {

using Json = nlohmann::ordered_json;

struct ExperimentReport {
    std::string name;
    Json config = Json::object();  // everything needed to re-run
    std::vector<Json> rows;        // labeled records
    Json result = Json::object();  // summary values (fitted constants, final measures)
    bool pass = false;
    std::string detail;

    Json to_json() const;
    std::string to_csv() const;  // the rows only, columns in order of first appearance
};

// Shortest decimal string that reads back to the same double.
std::string format_double(double x);
// Exact values as "p/r", floating values with digits matching the precision.
std::string format_scalar(const Scalar& s, const EvalConfig& cfg);
Json config_json(const EvalConfig& cfg);
Json quad_json(const QuadratureSpec& quad);
Json row_json(const KernelRow& row, const EvalConfig& cfg);

struct ConvergenceSpec {
    std::vector<Scalar> xs;
    std::vector<long> n_list{10, 20, 40};
    double tol = 1e-6;  // required error at the last N
};

ExperimentReport convergence_experiment_A(const SignSequence& sigma, const BoundaryPointA& t,
                                          const ConvergenceSpec& spec, const EvalConfig& cfg,
                                          const QuadratureSpec& quad);
ExperimentReport convergence_experiment_BC(GroupType g, const BoundaryPointBC& y, const ConvergenceSpec& spec,
                                           const EvalConfig& cfg, const QuadratureSpec& quad);

struct LlnSpec {
    long k_max = 3;
    long L = 20;
    long start_level = 0;  // 0 means 2L
    long samples = 5000;   // BC chains
    std::uint64_t seed = 1;
    double threshold = 0.99;
};

// Type A: exact M_L from the canonical signature at the start level, events
// mu_{b(L)+k} = t_{1-k} for 1-k_max <= k <= k_max.
ExperimentReport lln_experiment_A(const SignSequence& sigma, const BoundaryPointA& t, const LlnSpec& spec,
                                  const EvalConfig& cfg);
// BC: chains from the start level, events mu_{L+1-k} = y_k for 1 <= k <= k_max.
ExperimentReport lln_experiment_BC(GroupType g, const BoundaryPointBC& y, const LlnSpec& spec, const EvalConfig& cfg);

struct ConcentrationSpec {
    long k = 1;
    std::vector<long> n_list{5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
    long samples = 100000;
    std::uint64_t seed = 1;
    double bound = 20;
};

// mu(N) drawn from Lambda^{N+1}_N(lambda(N+1), .) for the canonical sequence;
// the violation event is compared with q^{rate(N)}.
ExperimentReport concentration_experiment_A(const SignSequence& sigma, const BoundaryPointA& t,
                                            const ConcentrationSpec& spec, const EvalConfig& cfg);
ExperimentReport concentration_experiment_BC(GroupType g, const BoundaryPointBC& y, const ConcentrationSpec& spec,
                                             const EvalConfig& cfg);

struct MartinSpec {
    long k = 2;
    std::vector<long> n_list{16, 24, 32, 40};
    double tol = 1e-6;
};

// Total variation between consecutive Lambda^N_k rows along n_list.
ExperimentReport martin_experiment_A(const SignSequence& sigma, const BoundaryPointA& t, const MartinSpec& spec,
                                     const EvalConfig& cfg);
ExperimentReport martin_experiment_BC(GroupType g, const BoundaryPointBC& y, const MartinSpec& spec,
                                      const EvalConfig& cfg);

}  // namespace qgt
