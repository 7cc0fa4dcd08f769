#pragma once

// Internal quadrature machinery shared by the contour translation units.

#include "qgt/contour.hpp"

#include <vector>

namespace qgt::detail {

struct GaussRule {
    std::vector<double> x, w;  // nodes and weights on [-1, 1]
};
const GaussRule& gauss_legendre(int n);

enum class StripKernel { A, B, C, D };

// Integrand data for the strip double integral
//   x^u K(u, v) P(v) / P(u),  P(w) = prod_c (1 - q^{c - w}) prod_d (1 - q^{d + w}).
struct StripProblem {
    StripKernel kernel = StripKernel::A;
    long m = 0;
    double q = 0.5;
    cd x;
    std::vector<double> minus;  // the c's
    std::vector<double> plus;   // the d's
    cd prefactor = 1;
};

// prefactor * {double integral over the v-segment and the u-lines combined
// with the closed-form single v-integral}.  The doubling check compares
// final values.
cd strip_value(const StripProblem& p, const QuadratureSpec& quad, QuadDiagnostics* diag);

// Index count for an infinite product whose exponents grow like the index,
// large enough that q^{c_I - U} is negligible for |Re u| <= U.
long product_cutoff(double q, const QuadratureSpec& quad, double slowest_start);

Scalar bcd_finiteN_strip(GroupType g, const Signature& lambda, long m, const Scalar& x, const EvalConfig& cfg,
                         const QuadratureSpec& quad, QuadDiagnostics* diag);

}  // namespace qgt::detail
