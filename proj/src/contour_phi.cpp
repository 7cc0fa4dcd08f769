#include "qgt/contour.hpp"

#include "quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qgt {

// ---------------------------------------------------------- boundary points

long BoundaryPointA::t(long i) const {
    if (i < offset) return left_tail;
    const long k = i - offset;
    if (k >= static_cast<long>(middle.size())) return right_tail;
    return middle[static_cast<std::size_t>(k)];
}

void BoundaryPointA::validate() const {
    long prev = left_tail;
    for (long v : middle) {
        if (v < prev) throw BadShape("boundary point must be nondecreasing");
        prev = v;
    }
    if (right_tail < prev) throw BadShape("boundary point must be nondecreasing");
}

BoundaryPointA BoundaryPointA::shifted(long s) const { return {left_tail, middle, offset + s, right_tail}; }

namespace {

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw BadShape("bad integer '" + item + "'");
        }
        if (used != item.size()) throw BadShape("bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::string join(const std::vector<long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

BoundaryPointA BoundaryPointA::parse(const std::string& s) {
    BoundaryPointA t;
    std::string body = s;
    if (auto at = s.find('@'); at != std::string::npos) {
        body = s.substr(0, at);
        auto off = parse_list(s.substr(at + 1));
        if (off.size() != 1) throw BadShape("bad offset in '" + s + "'");
        t.offset = off[0];
    }
    const auto c1 = body.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : body.find(':', c1 + 1);
    if (c2 == std::string::npos) throw BadShape("boundary point must read left:middle:right[@offset]");
    auto l = parse_list(body.substr(0, c1)), r = parse_list(body.substr(c2 + 1));
    if (l.size() != 1 || r.size() != 1) throw BadShape("tails must be single integers");
    t.left_tail = l[0];
    t.right_tail = r[0];
    t.middle = parse_list(body.substr(c1 + 1, c2 - c1 - 1));
    t.validate();
    return t;
}

std::string BoundaryPointA::to_string() const {
    return std::to_string(left_tail) + ":" + join(middle) + ":" + std::to_string(right_tail) + "@" +
           std::to_string(offset);
}

long BoundaryPointBC::y(long i) const {
    if (i < 1) throw BadShape("y is indexed from 1");
    if (i > static_cast<long>(head.size())) return tail_value();
    return head[static_cast<std::size_t>(i - 1)];
}

void BoundaryPointBC::validate() const {
    long prev = 0;
    for (long v : head) {
        if (v < prev) throw BadShape("y must be nonnegative and nondecreasing");
        prev = v;
    }
}

BoundaryPointBC BoundaryPointBC::parse(const std::string& s) {
    BoundaryPointBC y{parse_list(s)};
    y.validate();
    return y;
}

std::string BoundaryPointBC::to_string() const { return join(head); }

void QuadratureSpec::validate() const {
    if (v_nodes < 4 || u_nodes_per_unit < 2) throw InvalidConfig("too few quadrature nodes");
    if (!(u_halfwidth > 0) || product_truncation < 1 || !(tol > 0)) throw InvalidConfig("quadrature parameters must be positive");
}

// --------------------------------------------------------------- helpers

namespace {

using detail::StripKernel;
using detail::StripProblem;

constexpr double kNear = 1e-3;

cd checked_point(const Scalar& x) {
    const cd z = x.to_cd();
    if (z.imag() == 0 && z.real() <= 0) throw DomainViolation("x on the branch cut (-inf, 0]");
    return z;
}

struct Removable {
    cd point;
    double dist;
};

// nearest point of {q^{n + shift}} (plus 1 when with_one)
Removable nearest_removable(cd x, double q, double shift, bool with_one) {
    const double t = std::log(std::abs(x)) / std::log(q) - shift;
    Removable best{1.0, with_one ? std::abs(x - 1.0) : 1e300};
    for (long n = static_cast<long>(std::floor(t)) - 1; n <= static_cast<long>(std::floor(t)) + 2; ++n) {
        const cd p = std::pow(q, static_cast<double>(n) + shift);
        if (std::abs(x - p) < best.dist) best = {p, std::abs(x - p)};
    }
    return best;
}

double removable_spacing(double q, bool half_step) { return 1 - std::pow(q, half_step ? 0.5 : 1.0); }

// Value at x, replaced by the mean over a circle when x sits next to a
// removable singularity of the integral representation.
template <class F>
cd evaluate_near(cd x, const Removable& rm, double spacing, Continuation cont, QuadDiagnostics* diag, F&& f) {
    if (rm.dist >= kNear) return f(x);
    if (cont == Continuation::refuse)
        throw PoleNeighborhood("x within 1e-3 of a removable point of the integral representation");
    const double r = 0.4 * std::abs(rm.point) * spacing;
    constexpr int M = 32;
    cd s = 0;
    for (int k = 0; k < M; ++k) s += f(x + std::polar(r, 2 * std::numbers::pi * (k + 0.5) / M));
    if (diag) diag->continued = true;
    return s / static_cast<double>(M);
}

cd poch(cd a, double q, long n) {
    cd r = 1;
    for (long i = 0; i < n; ++i, a *= q) r *= 1.0 - a;
    return r;
}

// Prefactor of the B/C/D strip forms; M < 0 means infinite products.
cd bcd_strip_prefactor(Family g, long m, cd x, double q, long M) {
    auto qp = [&](double e) { return std::pow(q, e); };
    auto pm = [&](cd a) { return M < 0 ? qpoch_inf(a, q) : poch(a, q, M); };
    const double md = static_cast<double>(m);
    const double lnq = std::log(q);
    cd v = lnq * lnq;
    switch (g) {
        case Family::C:
            v *= (qp(md + 1) - qp(-(md + 1))) / (x - 1.0 / x) * poch(qp(md + 2), q, m) * poch(qp(-md), q, m) *
                 pm(q) * pm(qp(2 * md + 3)) /
                 (poch(q * x, q, m) * poch(q / x, q, m) * pm(qp(md + 2) * x) * pm(qp(md + 2) / x));
            break;
        case Family::D:
            v *= (m == 0 ? 0.5 : 1.0) * poch(qp(md), q, m) * poch(qp(-md), q, m) * pm(q) * pm(qp(2 * md + 1)) /
                 (poch(x, q, m) * poch(1.0 / x, q, m) * pm(qp(md + 1) * x) * pm(qp(md + 1) / x));
            break;
        case Family::B: {
            const cd sx = std::sqrt(x);
            v *= (qp(0.5 * (md + 0.5)) - qp(-0.5 * (md + 0.5))) / (sx - 1.0 / sx) * poch(qp(md + 1), q, m) *
                 poch(qp(-md), q, m) * pm(q) * pm(qp(2 * md + 2)) /
                 (poch(qp(0.5) * x, q, m) * poch(qp(0.5) / x, q, m) * pm(qp(md + 1.5) * x) * pm(qp(md + 1.5) / x));
            break;
        }
    }
    return v;
}

StripKernel kernel_of(Family g) {
    switch (g) {
        case Family::B: return StripKernel::B;
        case Family::C: return StripKernel::C;
        case Family::D: return StripKernel::D;
    }
    return StripKernel::C;
}

cd phiA_at(const BoundaryPointA& t, cd x, double q, const QuadratureSpec& quad, QuadDiagnostics* diag) {
    StripProblem P;
    P.kernel = StripKernel::A;
    P.q = q;
    P.x = x;
    const long I1 = detail::product_cutoff(q, quad, static_cast<double>(t.t(1)));
    const long I2 = detail::product_cutoff(q, quad, static_cast<double>(1 - t.t(0)));
    for (long i = 1; i <= I1; ++i) P.minus.push_back(static_cast<double>(t.t(i) + i - 1));
    for (long j = 1; j <= I2; ++j) P.plus.push_back(static_cast<double>(j - t.t(1 - j)));
    const double lnq = std::log(q);
    const cd qq = qpoch_inf(q, q);
    // overall sign: see typeA_finiteN_strip
    P.prefactor = -x * lnq * lnq * qq * qq / (qpoch_inf(q * x, q) * qpoch_inf(q / x, q));
    if (diag) diag->product_terms = I1 + I2;
    return detail::strip_value(P, quad, diag);
}

cd phiBCD_at(GroupType g, const BoundaryPointBC& y, long m, cd x, double q, const QuadratureSpec& quad,
             QuadDiagnostics* diag) {
    StripProblem P;
    P.kernel = kernel_of(g.tag);
    P.m = m;
    P.q = q;
    P.x = x;
    const double eps = g.epsilon().to_double();
    const long I = detail::product_cutoff(q, quad, static_cast<double>(y.y(1)) + eps);
    for (long i = 1; i <= I; ++i) P.minus.push_back(static_cast<double>(y.y(i) + i - 1) + eps);
    P.plus = P.minus;
    P.prefactor = bcd_strip_prefactor(g.tag, m, x, q, -1);
    if (diag) diag->product_terms = I;
    return detail::strip_value(P, quad, diag);
}

}  // namespace

double distance_to_removable_A(cd x, double q) { return nearest_removable(x, q, 0, false).dist; }

double distance_to_removable_BCD(GroupType g, cd x, double q) {
    return nearest_removable(x, q, g.epsilon().to_double(), true).dist;
}

// ---------------------------------------------------------- finite strips

Scalar typeA_finiteN_strip(const Signature& lambda, long N, long b, const Scalar& x, const EvalConfig& cfg,
                           const QuadratureSpec& quad, QuadDiagnostics* diag) {
    require_signature(lambda);
    if (static_cast<long>(lambda.size()) != N) throw LengthMismatch("signature length != N");
    if (b < 0 || b > N - 1) throw BadShape("need 0 <= b <= N-1");
    const double q = cfg.q.get_d();
    const cd z = checked_point(x);
    // The u-integrand decays like (x q^b)^u to the right and like
    // (q^{N-b-1}/x)^{-u} to the left.
    if (!(std::abs(z) > std::pow(q, N - b - 1) && std::abs(z) < std::pow(q, -b)))
        throw DomainViolation("strip form needs q^(N-b-1) < |x| < q^-b");
    if (distance_to_removable_A(z, q) < kNear) throw DomainViolation("x too close to a power of q");
    StripProblem P;
    P.kernel = StripKernel::A;
    P.q = q;
    P.x = z;
    for (long i = 1; i <= b; ++i) P.minus.push_back(static_cast<double>(lambda[b - i] + i - 1));
    for (long j = 1; j <= N - b; ++j) P.plus.push_back(static_cast<double>(j - lambda[b + j - 1]));
    const double lnq = std::log(q);
    // The contours read as drawn give the negated ratio (the same orientation
    // effect as for the type A residue form), hence the leading minus.
    P.prefactor = -z * lnq * lnq * poch(q, q, b) * poch(q, q, N - b - 1) / (poch(q * z, q, b) * poch(q / z, q, N - b - 1));
    return Scalar::from_cd(detail::strip_value(P, quad, diag));
}

Scalar detail::bcd_finiteN_strip(GroupType g, const Signature& lambda, long m, const Scalar& x,
                                 const EvalConfig& cfg, const QuadratureSpec& quad, QuadDiagnostics* diag) {
    require_nonneg_signature(lambda);
    const long N = static_cast<long>(lambda.size());
    if (m < 0 || m > N - 1) throw BadShape("slot m must lie in 0..N-1");
    const double q = cfg.q.get_d();
    const cd z = checked_point(x);
    if (!(std::abs(z) > std::pow(q, N) && std::abs(z) < std::pow(q, -N)))
        throw DomainViolation("strip form needs q^N < |x| < q^-N");
    if (distance_to_removable_BCD(g, z, q) < kNear) throw DomainViolation("x too close to an excluded point");
    StripProblem P;
    P.kernel = kernel_of(g.tag);
    P.m = m;
    P.q = q;
    P.x = z;
    for (auto e : g.exponents(lambda)) P.minus.push_back(e.to_double());
    P.plus = P.minus;
    P.prefactor = bcd_strip_prefactor(g.tag, m, z, q, N - m - 1);
    return Scalar::from_cd(detail::strip_value(P, quad, diag));
}

// ------------------------------------------------------------------ limits

Scalar phiA(const BoundaryPointA& t, const Scalar& x, const EvalConfig& cfg, const QuadratureSpec& quad,
            Continuation cont, QuadDiagnostics* diag) {
    t.validate();
    const double q = cfg.q.get_d();
    const cd z = checked_point(x);
    const cd v = evaluate_near(z, nearest_removable(z, q, 0, false), removable_spacing(q, false), cont, diag,
                               [&](cd w) { return phiA_at(t, w, q, quad, diag); });
    return Scalar::from_cd(v);
}

Scalar phiBCD(GroupType g, const BoundaryPointBC& y, long m, const Scalar& x, const EvalConfig& cfg,
              const QuadratureSpec& quad, Continuation cont, QuadDiagnostics* diag) {
    y.validate();
    if (m < 0) throw BadShape("m must be nonnegative");
    const double q = cfg.q.get_d();
    const cd z = checked_point(x);
    const Removable rm = nearest_removable(z, q, g.epsilon().to_double(), true);
    const cd v = evaluate_near(z, rm, removable_spacing(q, g.tag == Family::B), cont, diag,
                               [&](cd w) { return phiBCD_at(g, y, m, w, q, quad, diag); });
    return Scalar::from_cd(v);
}

Scalar phiA_multivar(const BoundaryPointA& t, const std::vector<Scalar>& xs, const EvalConfig& cfg,
                     const QuadratureSpec& quad) {
    t.validate();
    const long k = static_cast<long>(xs.size());
    if (k < 1) throw BadShape("need at least one variable");
    const double q = cfg.q.get_d();
    std::vector<cd> x;
    for (const auto& s : xs) x.push_back(checked_point(s));
    cd vdm = 1;  // V(x_k, ..., x_1)
    for (long i = 0; i < k; ++i)
        for (long j = i + 1; j < k; ++j) vdm *= x[k - 1 - i] - x[k - 1 - j];
    if (std::abs(vdm) == 0) throw CoincidentPoints("multivariate formula needs distinct x_i");
    auto M = make_matrix<cd>(k, k);
    for (long i = 0; i < k; ++i)
        for (long j = 1; j <= k; ++j) {
            cd mult = 1;
            for (long s = 1; s <= k; ++s)
                if (s != j) mult *= x[i] * std::pow(q, 1 - s) - 1.0;
            if (std::abs(mult) < 1e-14) continue;
            const Scalar arg = Scalar::from_cd(x[i] * std::pow(q, 1 - j));
            M[i][j - 1] = phiA(t.shifted(j - 1), arg, cfg, quad, Continuation::mean_value).to_cd() * mult;
        }
    cd c = std::pow(q, static_cast<double>(k * (k - 1) * (2 * k - 1) / 6));
    for (long i = 1; i <= k; ++i)
        for (long j = i + 1; j <= k; ++j) c /= 1 - std::pow(q, j - i);
    return Scalar::from_cd(c * det(std::move(M)) / vdm);
}

Scalar phiBCD_multivar(GroupType g, const BoundaryPointBC& y, const std::vector<Scalar>& xs, const EvalConfig& cfg,
                       const QuadratureSpec& quad) {
    y.validate();
    const long k = static_cast<long>(xs.size());
    if (k < 1) throw BadShape("need at least one variable");
    const double q = cfg.q.get_d(), eps = g.epsilon().to_double();
    std::vector<cd> x;
    for (const auto& s : xs) x.push_back(checked_point(s));
    const cd vs = sym_vandermonde(x);
    if (std::abs(vs) == 0) throw CoincidentOrbit("multivariate formula needs x_i + 1/x_i distinct");
    std::vector<cd> base;
    for (long i = 0; i < k; ++i) base.push_back(std::pow(q, static_cast<double>(i) + eps));
    const cd qe = std::pow(q, eps);
    auto M = make_matrix<cd>(k, k);
    for (long i = 0; i < k; ++i)
        for (long j = 1; j <= k; ++j) {
            const cd qj = std::pow(q, static_cast<double>(j) + eps);
            const cd mult = poch(qe * x[i], q, j - 1) * poch(qe / x[i], q, j - 1) * poch(qj * x[i], q, k - j) *
                            poch(qj / x[i], q, k - j);
            if (std::abs(mult) < 1e-14) continue;
            M[i][j - 1] = phiBCD(g, y, j - 1, xs[i], cfg, quad, Continuation::mean_value).to_cd() * mult;
        }
    const cd c = bcd_limit_constant(g, k, cfg).to_cd();
    return Scalar::from_cd(c * sym_vandermonde(base) / vs * det(std::move(M)));
}

}  // namespace qgt
