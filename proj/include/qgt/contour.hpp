#pragma once

// Contour-integral side of the theory: finite-N residue and quadrature
// evaluations of normalized characters, the multivariate determinant
// reductions, and the limit functions Phi.

#include "qgt/arith.hpp"
#include "qgt/chars.hpp"
#include "qgt/laurent.hpp"

#include <string>
#include <vector>

namespace qgt {

// Nondecreasing doubly infinite integer sequence with constant tails:
// t_i = left_tail for i < offset, middle[i - offset] on the window,
// right_tail after it.
struct BoundaryPointA {
    long left_tail = 0;
    std::vector<long> middle;
    long offset = 0;
    long right_tail = 0;

    long t(long i) const;
    void validate() const;
    // t'_n = t_{n - s}; A_j in the multivariate formula is shifted(j - 1).
    BoundaryPointA shifted(long s) const;
    static BoundaryPointA constant(long c) { return {c, {}, 0, c}; }
    // "left:m1,m2,...:right@offset"; the middle may be empty.
    static BoundaryPointA parse(const std::string& s);
    std::string to_string() const;
};

// Nondecreasing nonnegative sequence y_1 <= y_2 <= ..., constant after head.
struct BoundaryPointBC {
    std::vector<long> head;

    long y(long i) const;  // 1-based
    long tail_value() const { return head.empty() ? 0 : head.back(); }
    void validate() const;
    static BoundaryPointBC parse(const std::string& s);
    std::string to_string() const;
};

struct QuadratureSpec {
    int v_nodes = 96;            // Gauss-Legendre nodes on the v-segment, 4 panels
    int u_nodes_per_unit = 20;   // Gauss-Legendre nodes per u-panel
    double u_halfwidth = 200.0;  // hard cap on |Re u - center|
    long product_truncation = 400;
    double tol = 1e-10;
    double R = 0.0;              // Re v of the vertical segment
    bool check_doubling = true;
    bool parallel = true;

    void validate() const;
};

struct QuadDiagnostics {
    long product_terms = 0;
    double u_lo = 0, u_hi = 0;
    long u_nodes = 0;
    long v_nodes = 0;
    double doubling_delta = 0;
    double roundoff_floor = 0;  // estimated rounding error of the strip sum, relative
    bool continued = false;
};

enum class Continuation { refuse, mean_value };

// ------------------------------------------------------------ direct ratios

// s_lambda at (1, q, ..., q^{N-1}) with positions slot..slot+k-1 replaced by
// q^slot x_1, ..., q^slot x_k, divided by the principal value.  Uses the
// Jacobi-Trudi form when points collide.
Scalar typeA_direct_ratio(const Signature& lambda, long slot, const std::vector<Scalar>& xs,
                          const EvalConfig& cfg);

// chi^G_lambda at the principal points with positions slot..slot+k-1 replaced
// by the actual values xs, over the principal value.
Scalar bcd_direct_ratio(GroupType g, const Signature& lambda, long slot, const std::vector<Scalar>& xs,
                        const EvalConfig& cfg);

// ------------------------------------------------------------------ type A

// The single-slot ratio s_lambda(..., q^slot x, ...)/s_lambda(principal) as an
// exact Laurent polynomial in x, obtained from the residue expansion.
LaurentPoly typeA_slot_polynomial(const Signature& lambda, long slot, const mpq_class& q);

// Residue evaluation of the double contour integral for position b, value q^a.
Scalar typeA_finiteN_residue(const Signature& lambda, long N, long b, HalfInt a, const EvalConfig& cfg);
// Same with the value X = q^a given directly.
Scalar typeA_finiteN_residue_at(const Signature& lambda, long N, long b, const Scalar& X,
                                const EvalConfig& cfg);

Scalar typeA_finiteN_strip(const Signature& lambda, long N, long b, const Scalar& x, const EvalConfig& cfg,
                           const QuadratureSpec& quad, QuadDiagnostics* diag = nullptr);

Scalar typeA_multivar_det(const Signature& lambda, long N, long b, const std::vector<Scalar>& xs,
                          const EvalConfig& cfg);

// ------------------------------------------------------------------- B/C/D

enum class BcdMethod { contour, strip, residue };

// Residue evaluation at x = q^a (exact when the needed powers of q are rational).
Scalar bcd_finiteN_residue(GroupType g, const Signature& lambda, long m, HalfInt a, const EvalConfig& cfg);
Scalar bcd_finiteN_residue_at(GroupType g, const Signature& lambda, long m, const Scalar& x,
                              const EvalConfig& cfg);

Scalar bcd_finiteN_integral(GroupType g, const Signature& lambda, long N, long m, const Scalar& x,
                            const EvalConfig& cfg, const QuadratureSpec& quad,
                            BcdMethod method = BcdMethod::contour, QuadDiagnostics* diag = nullptr);

Scalar bcd_multivar_det(GroupType g, const Signature& lambda, long N, const std::vector<Scalar>& xs,
                        const EvalConfig& cfg);

// c_{k,N}^G, exact (needs sqrt_q for B).
Scalar bcd_multivar_constant(GroupType g, long k, long N, const EvalConfig& cfg);
// c_k^G
Scalar bcd_limit_constant(GroupType g, long k, const EvalConfig& cfg);

// ---------------------------------------------------------------- limits

Scalar phiA(const BoundaryPointA& t, const Scalar& x, const EvalConfig& cfg, const QuadratureSpec& quad,
            Continuation cont = Continuation::refuse, QuadDiagnostics* diag = nullptr);
Scalar phiA_multivar(const BoundaryPointA& t, const std::vector<Scalar>& xs, const EvalConfig& cfg,
                     const QuadratureSpec& quad);

Scalar phiBCD(GroupType g, const BoundaryPointBC& y, long m, const Scalar& x, const EvalConfig& cfg,
              const QuadratureSpec& quad, Continuation cont = Continuation::refuse,
              QuadDiagnostics* diag = nullptr);
Scalar phiBCD_multivar(GroupType g, const BoundaryPointBC& y, const std::vector<Scalar>& xs,
                       const EvalConfig& cfg, const QuadratureSpec& quad);

// Points where the integral representation of Phi (or the finite-N strip form)
// has a removable singularity: q^n for type A, {1} and q^{n + eps} for B/C/D.
double distance_to_removable_A(cd x, double q);
double distance_to_removable_BCD(GroupType g, cd x, double q);

}  // namespace qgt
