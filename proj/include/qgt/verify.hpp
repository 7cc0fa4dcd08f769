#pragma once

// Exhaustive identity checks shared by the command line and the acceptance
// binary.  Each suite enumerates its cases, runs them in parallel and reports
// per-group counts, the largest deviation and the first failures.

#include "qgt/experiments.hpp"

#include <string>
#include <vector>

namespace qgt {

struct VerifyOptions {
    long max_n = 0;            // 0 selects the suite's own default
    mpq_class q{1, 2};         // type B runs at q^2 with sqrt q = q
    std::uint64_t seed = 1;    // random signatures in the stochastic suite
    long random_rows = 500;    // per graph, stochastic suite
    bool parallel = true;
};

// contour-A, contour-BC, multivar, structural, stochastic, multistep, phi, torus
const std::vector<std::string>& verify_suites();
long verify_default_max_n(const std::string& suite);

// Throws InvalidConfig for an unknown suite name.
ExperimentReport run_verify_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace qgt
