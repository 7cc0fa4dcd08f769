#include "qgt/contour.hpp"

#include "quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace qgt {

namespace {

template <class T>
std::vector<T> principal_points_A(long n, const QPowers<T>& qp) {
    std::vector<T> pts;
    for (long i = 0; i < n; ++i) pts.push_back(qp.pow(i));
    return pts;
}

template <class T>
T schur_any(const Signature& lambda, const std::vector<T>& pts) {
    try {
        return schur_eval_t(lambda, pts);
    } catch (const CoincidentPoints&) {
        return schur_jt_eval_t(lambda, pts);
    }
}

template <class T>
T bcd_any(GroupType g, const Signature& lambda, const std::vector<T>& pts) {
    for (const auto& p : pts)
        if (is_zero(p)) throw ZeroPoint("character at a zero point");
    try {
        return bcd_eval_t(g, lambda, pts);
    } catch (const CoincidentOrbit&) {
        return jacobi_trudi_eval_t(g, lambda, pts);
    }
}

// Run fn<T>() with T picked from cfg and the given inputs; float runs at the
// configured precision plus `extra_bits`.
template <class Fn>
Scalar dispatch(const EvalConfig& cfg, const std::vector<Scalar>& xs, long extra_bits, Fn&& fn) {
    bool exact = cfg.mode == Mode::exact;
    for (const auto& x : xs) exact = exact && x.is_exact();
    if (exact) {
        std::vector<mpq_class> v;
        for (const auto& x : xs) v.push_back(x.exact());
        return Scalar(fn(v));
    }
    PrecisionScope ps(cfg.float_precision_bits + extra_bits);
    std::vector<MpComplex> v;
    for (const auto& x : xs) v.push_back(x.to_float());
    MpComplex r = fn(v);
    MpReal re(cfg.float_precision_bits, 0), im(cfg.float_precision_bits, 0);
    mpfr_set(re.raw(), r.real().raw(), MPFR_RNDN);
    mpfr_set(im.raw(), r.imag().raw(), MPFR_RNDN);
    return Scalar(MpComplex(std::move(re), std::move(im)));
}

// Coefficients of prod (w - r), lowest degree first.
template <class T>
std::vector<T> poly_from_roots(const std::vector<T>& roots) {
    std::vector<T> c{from_long<T>(1)};
    for (const auto& r : roots) {
        std::vector<T> next(c.size() + 1, from_long<T>(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] = next[i + 1] + c[i];
            next[i] = next[i] - r * c[i];
        }
        c = std::move(next);
    }
    return c;
}

template <class T>
T horner(const std::vector<T>& c, const T& z) {
    T acc = from_long<T>(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

double log2_abs(const mpq_class& r) {
    if (sgn(r) == 0) return -1e9;
    return static_cast<double>(mpz_sizeinbase(r.get_num_mpz_t(), 2)) -
           static_cast<double>(mpz_sizeinbase(r.get_den_mpz_t(), 2));
}

// ---------------------------------------------------------------- type A

struct ResidueA {
    LaurentPoly sum;            // sum_i D_i X^{l_i}
    mpq_class scale;            // C' in  C' * sum / prod (X - root)
    std::vector<mpq_class> roots;
};

// Residue expansion for position b, 1 <= b <= N-1, in the variable X = q^a.
// The w-loop is taken around infinity (clockwise in the finite plane): the
// counterclockwise reading gives the negated left side.
ResidueA residue_A(const Signature& lambda, long b, const mpq_class& q) {
    const long N = static_cast<long>(lambda.size());
    std::vector<long> l(N);
    std::vector<mpq_class> p(N);
    for (long i = 0; i < N; ++i) {
        l[i] = lambda[i] + N - 1 - i;
        p[i] = ipow(q, l[i]);
    }
    auto E = poly_from_roots(p);
    // W(z) = sum_n E_{b+1+n} z^n
    std::vector<mpq_class> W;
    for (long r = b + 1; r <= N; ++r) W.push_back(E[static_cast<std::size_t>(r)]);
    ResidueA out;
    for (long i = 0; i < N; ++i) {
        mpq_class den = 1;
        for (long k = 0; k < N; ++k)
            if (k != i) den *= p[i] - p[k];
        out.sum += LaurentPoly::monomial(l[i], mpq_class(horner(W, p[i]) / den));
    }
    mpq_class c = 1;
    for (long i = 1; i <= N - b - 1; ++i) {
        c *= (1 - ipow(q, i)) * ipow(q, b);
        out.roots.push_back(ipow(q, b + i));
    }
    for (long i = 1; i <= b; ++i) {
        c *= -(1 - ipow(q, i)) * ipow(q, b - i);
        out.roots.push_back(ipow(q, b - i));
    }
    out.scale = c;
    return out;
}

Signature reversed_negated(const Signature& lambda) {
    Signature r;
    for (auto it = lambda.rbegin(); it != lambda.rend(); ++it) r.push_back(-*it);
    return r;
}

LaurentPoly reflect(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    std::vector<mpq_class> c(p.coeffs().rbegin(), p.coeffs().rend());
    return {-p.high(), std::move(c)};
}

void check_typeA(const Signature& lambda, long N, long b) {
    require_signature(lambda);
    if (static_cast<long>(lambda.size()) != N) throw LengthMismatch("signature length != N");
    if (b < 1 || b > N - 1) throw BadShape("position b must lie in 1..N-1");
}

// ---------------------------------------------------------------- B/C/D

mpq_class exact_sqrt(const mpq_class& r, const char* what) {
    mpz_class n = r.get_num(), d = r.get_den();
    if (sgn(n) < 0 || !mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        throw HalfPowerUnavailable(what);
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return mpq_class(sn, sd);
}

// Powers q^{n/4} and x^{f/2} in one number type.
template <class T>
struct PowCtx;

template <>
struct PowCtx<mpq_class> {
    EvalConfig cfg;
    HalfInt a;
    mpq_class q4(long n4) const {
        if (n4 % 4 == 0) return ipow(cfg.q, n4 / 4);
        if (!cfg.sqrt_q) throw HalfPowerUnavailable("exact residue needs sqrt_q");
        if (n4 % 2 == 0) return ipow(*cfg.sqrt_q, n4 / 2);
        return ipow(exact_sqrt(*cfg.sqrt_q, "exact type-B residue needs a rational q^(1/4)"), n4);
    }
    mpq_class x2(long f2) const { return q4(a.doubled * f2); }
    mpq_class a_value() const { return mpq_class(a.doubled, 2); }
};

template <>
struct PowCtx<MpComplex> {
    MpComplex lnq;
    MpComplex logx;
    MpComplex q4(long n4) const { return exp(lnq * MpComplex(MpReal(n4) / MpReal(4L))); }
    MpComplex x2(long f2) const { return exp(logx * MpComplex(MpReal(f2) / MpReal(2L))); }
    MpComplex a_value() const { return logx / lnq; }
};

struct BcdShape {
    std::vector<long> l2;   // doubled exponents l_i
    long N = 0, m = 0;
    Family g = Family::C;
};

// Prefactor in front of the double integral.  Sets *apparent when a
// denominator factor vanishes (x in the orbit of another principal point).
template <class T>
T bcd_prefactor(const BcdShape& s, const PowCtx<T>& pc, bool* apparent) {
    const long N = s.N, m = s.m;
    const T one = from_long<T>(1);
    auto q = [&](long n) { return pc.q4(4 * n); };
    auto qpo = [&](const T& a, long n) { return qpoch(a, q(1), n); };
    T num = one, den = one;
    auto fac = [&](const T& f) {
        if (is_zero(f) || magnitude(f) < 1e-60) *apparent = true;
        den = den * f;
    };
    auto pair = [&](long n4, long count) {
        // (q^{n4/4} x, q^{n4/4}/x; q)_count
        for (long r = 0; r < count; ++r) {
            fac(one - pc.q4(n4 + 4 * r) * pc.x2(2));
            fac(one - pc.q4(n4 + 4 * r) * pc.x2(-2));
        }
    };
    switch (s.g) {
        case Family::C:
            num = (q(m + 1) - q(-(m + 1))) * qpo(q(m + 2), m) * qpo(q(-m), m) * qpo(q(1), N - m - 1) *
                  qpo(q(2 * m + 3), N - m - 1);
            fac(pc.x2(2) - pc.x2(-2));
            pair(4, m);
            pair(4 * (m + 2), N - m - 1);
            break;
        case Family::D:
            num = from_long<T>(m == 0 ? 1 : 2) * qpo(q(m), m) * qpo(q(-m), m) * qpo(q(1), N - m - 1) *
                  qpo(q(2 * m + 1), N - m - 1);
            den = from_long<T>(2);
            pair(0, m);
            pair(4 * (m + 1), N - m - 1);
            break;
        case Family::B:
            num = (pc.q4(2 * m + 1) - pc.q4(-(2 * m + 1))) * qpo(q(m + 1), m) * qpo(q(-m), m) *
                  qpo(q(1), N - m - 1) * qpo(q(2 * m + 2), N - m - 1);
            fac(pc.x2(1) - pc.x2(-1));
            pair(2, m);
            pair(4 * m + 6, N - m - 1);
            break;
    }
    if (*apparent) return from_long<T>(0);
    return num / den;
}

template <class T>
std::vector<T> derivative(const std::vector<T>& c) {
    std::vector<T> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(from_long<T>(static_cast<long>(i)) * c[i]);
    return d;
}

// Inner w-loop in closed form plus the pole data of the outer z-integrand
// z^{a + kappa2/2} W(z) / D(z).
template <class T>
struct BcdLoop {
    std::vector<T> W1, W0;  // W(z) = z W1(z) + W0(z)
    std::vector<long> pole_e2;
    std::vector<T> poles;  // simple poles q^{e2/2}
    bool double_one = false;
    long kappa2 = 0;

    T W(const T& z) const { return T(z * horner(W1, z) + horner(W0, z)); }
    T denominator(const T& z) const {
        const T one = from_long<T>(1);
        T d = double_one ? T((z - one) * (z - one)) : one;
        for (const auto& p : poles) d = d * (z - p);
        return d;
    }
};

template <class T>
BcdLoop<T> bcd_loop(const BcdShape& s, const PowCtx<T>& pc) {
    const long N = s.N, m = s.m;
    std::vector<T> roots;
    for (long l2 : s.l2) {
        roots.push_back(pc.q4(2 * l2));
        roots.push_back(pc.q4(-2 * l2));
    }
    auto Q = poly_from_roots(roots);
    const T one = from_long<T>(1), zero = from_long<T>(0);
    // numerator in w is z * A1(w) + A0(w); the inner loop picks [w^-1] of
    // (z A1 + A0) w^{-K} / (w - z), i.e. sum_{r >= K} coeff_r z^{r-K}.
    std::vector<T> A1, A0;
    long K = N + m + 1;
    auto shift_mul = [&](const std::vector<T>& p, long sft, const T& c) {
        std::vector<T> out(p.size() + static_cast<std::size_t>(sft), zero);
        for (std::size_t i = 0; i < p.size(); ++i) out[i + sft] = c * p[i];
        return out;
    };
    auto add = [&](std::vector<T> a, const std::vector<T>& b) {
        if (a.size() < b.size()) a.resize(b.size(), zero);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
        return a;
    };
    BcdLoop<T> out;
    // simple poles q^{e2/2}; for D with l_N = 0 the pair q^{+-0} merges into a
    // double pole at 1
    for (long l2 : s.l2) {
        if (l2 == 0) {
            out.double_one = true;
            continue;
        }
        out.pole_e2.push_back(l2);
        out.pole_e2.push_back(-l2);
    }
    switch (s.g) {
        case Family::C: A0 = add(Q, shift_mul(Q, 2 * m + 2, -one)); break;
        case Family::D:
            A1 = Q;
            A0 = shift_mul(Q, 2 * m + 1, one);
            break;
        case Family::B: {
            auto A = add(shift_mul(Q, 1, one), shift_mul(Q, 0, -one));  // (w - 1) Q(w)
            A1 = A;
            A0 = shift_mul(A, 2 * m + 2, -one);
            K = N + m + 2;
            out.pole_e2.push_back(0);
            break;
        }
    }
    auto tail = [&](const std::vector<T>& p) {
        std::vector<T> t;
        for (long r = K; r < static_cast<long>(p.size()); ++r) t.push_back(p[static_cast<std::size_t>(r)]);
        return t;
    };
    out.W1 = tail(A1);
    out.W0 = tail(A0);
    // z^{a + N - 1} (C, D) or z^{a + N - 1/2} (B)
    out.kappa2 = s.g == Family::B ? 2 * N - 1 : 2 * N - 2;
    for (long e2 : out.pole_e2) out.poles.push_back(pc.q4(2 * e2));
    return out;
}

template <class T>
T bcd_residue_sum(const BcdShape& s, const PowCtx<T>& pc) {
    const BcdLoop<T> lp = bcd_loop(s, pc);
    const T one = from_long<T>(1), zero = from_long<T>(0);
    const auto& poles = lp.poles;
    T total = zero;
    // at z = q^{e}: z^{a + kappa} = q^{e kappa} x^{e}
    for (std::size_t i = 0; i < poles.size(); ++i) {
        const T& rho = poles[i];
        T dprime = lp.double_one ? T((rho - one) * (rho - one)) : one;
        for (std::size_t j = 0; j < poles.size(); ++j)
            if (j != i) dprime = dprime * (rho - poles[j]);
        T zpow = pc.q4(lp.pole_e2[i] * lp.kappa2) * pc.x2(lp.pole_e2[i]);
        total = total + zpow * lp.W(rho) / dprime;
    }
    if (lp.double_one) {
        // d/dz [z^kappa W(z) / R(z)] at z = 1, R = prod over the simple poles
        T R = one, dlogR = zero;
        for (const auto& p : poles) {
            R = R * (one - p);
            dlogR = dlogR + one / (one - p);
        }
        const T W = lp.W(one);
        const T dW = horner(lp.W1, one) + horner(derivative(lp.W1), one) + horner(derivative(lp.W0), one);
        const T kappa = pc.a_value() + from_long<T>(s.N - 1);
        total = total + (kappa * W + dW - W * dlogR) / R;
    }
    return total;
}

// Outer z-loop by the trapezoid rule on an ellipse in zeta = log z around
// the pole interval [-l_1 ln(1/q), l_1 ln(1/q)]; the inner w-loop is the
// closed form W(z).  Doubles the node count until two passes agree.
MpComplex bcd_contour_sum(const BcdShape& s, const PowCtx<MpComplex>& pc, double q, double tol, long* nodes,
                          double* delta) {
    const BcdLoop<MpComplex> lp = bcd_loop(s, pc);
    const double L = -std::log(q);
    double lmax = 0;
    for (long l2 : s.l2) lmax = std::max(lmax, 0.5 * static_cast<double>(l2));
    const double a = lmax * L + 0.5 * L;
    const double b = std::clamp(std::sqrt(a * L), 0.5, 3.0);
    const MpComplex expo = pc.a_value() + MpComplex(MpReal(lp.kappa2 + 2) / MpReal(2L));
    MpReal pi(0L);
    mpfr_const_pi(pi.raw(), MPFR_RNDN);
    auto pass = [&](long M) {
        MpComplex acc(0L);
        for (long k = 0; k < M; ++k) {
            const MpReal th = MpReal(2L) * pi * MpReal(k) / MpReal(M);
            const MpReal c = cos(th), sn = sin(th);
            const MpComplex zeta(MpReal(a) * c, MpReal(b) * sn);
            const MpComplex dzeta(-(MpReal(a) * sn), MpReal(b) * c);
            const MpComplex z = exp(zeta);
            acc += exp(expo * zeta) * lp.W(z) / lp.denominator(z) * dzeta;
        }
        // (1/2 pi i) * (2 pi / M) * sum
        return MpComplex(acc / MpComplex(MpReal(0L), MpReal(M)));
    };
    long M = 64;
    MpComplex prev = pass(M);
    for (;;) {
        M *= 2;
        MpComplex cur = pass(M);
        const double d = std::abs((cur - prev).to_cd()) / std::max(1.0, std::abs(cur.to_cd()));
        if (d < 1e-3 * tol || M >= 8192) {
            if (nodes) *nodes = M;
            if (delta) *delta = d;
            if (!(d <= tol)) throw NonConvergedQuadrature("z-contour quadrature did not settle");
            return cur;
        }
        prev = std::move(cur);
    }
}

BcdShape make_shape(GroupType g, const Signature& lambda, long m) {
    require_nonneg_signature(lambda);
    const long N = static_cast<long>(lambda.size());
    if (m < 0 || m > N - 1) throw BadShape("slot m must lie in 0..N-1");
    BcdShape s;
    s.N = N;
    s.m = m;
    s.g = g.tag;
    for (auto e : g.exponents(lambda)) s.l2.push_back(e.doubled);
    return s;
}

long bcd_extra_bits(const BcdShape& s, double q) {
    double lsum = 0, lmax = 0;
    for (long l2 : s.l2) {
        lsum += 0.5 * static_cast<double>(l2);
        lmax = std::max(lmax, 0.5 * static_cast<double>(l2));
    }
    return static_cast<long>(std::ceil(std::log2(1.0 / q) * (2 * lsum + (s.N + s.m + 3) * lmax))) + 64;
}

// Working bits lost to cancellation in a Weyl-type determinant at q-power
// points whose exponents span `spread` in total.
long determinant_guard_bits(double spread, const EvalConfig& cfg) {
    if (cfg.mode == Mode::exact) return 0;
    return static_cast<long>(std::ceil(std::log2(1.0 / cfg.q.get_d()) * spread));
}

}  // namespace

// ------------------------------------------------------------ direct ratios

Scalar typeA_direct_ratio(const Signature& lambda, long slot, const std::vector<Scalar>& xs,
                          const EvalConfig& cfg) {
    require_signature(lambda);
    const long N = static_cast<long>(lambda.size());
    const long k = static_cast<long>(xs.size());
    if (slot < 0 || slot + k > N) throw BadShape("replaced positions exceed the signature length");
    double spread = 0.5 * static_cast<double>(N * (N - 1));
    for (long v : lambda) spread += static_cast<double>(std::abs(v));
    return dispatch(cfg, xs, determinant_guard_bits(spread, cfg), [&](const auto& x) {
        using T = typename std::decay_t<decltype(x)>::value_type;
        QPowers<T> qp(cfg);
        auto pts = principal_points_A<T>(N, qp);
        for (long j = 0; j < k; ++j) pts[slot + j] = qp.pow(slot) * x[j];
        return T(schur_any(lambda, pts) / schur_principal_t(lambda, qp));
    });
}

Scalar bcd_direct_ratio(GroupType g, const Signature& lambda, long slot, const std::vector<Scalar>& xs,
                        const EvalConfig& cfg) {
    require_nonneg_signature(lambda);
    const long N = static_cast<long>(lambda.size());
    const long k = static_cast<long>(xs.size());
    if (slot < 0 || slot + k > N) throw BadShape("replaced positions exceed the signature length");
    double spread = static_cast<double>(N * N);
    for (long v : lambda) spread += 2.0 * static_cast<double>(v);
    return dispatch(cfg, xs, determinant_guard_bits(spread, cfg), [&](const auto& x) {
        using T = typename std::decay_t<decltype(x)>::value_type;
        QPowers<T> qp(cfg);
        std::vector<T> pts;
        for (long i = 0; i < N; ++i) pts.push_back(qp.pow(HalfInt::integer(i) + g.epsilon()));
        for (long j = 0; j < k; ++j) pts[slot + j] = x[j];
        return T(bcd_any(g, lambda, pts) / bcd_principal_t(g, lambda, qp));
    });
}

// ------------------------------------------------------------------ type A

LaurentPoly typeA_slot_polynomial(const Signature& lambda, long slot, const mpq_class& q) {
    require_signature(lambda);
    const long N = static_cast<long>(lambda.size());
    if (slot < 0 || slot >= N) throw BadShape("slot outside 0..N-1");
    if (N == 1) return LaurentPoly::monomial(lambda[0], 1);
    if (slot == 0) return reflect(typeA_slot_polynomial(reversed_negated(lambda), N - 1, q));
    auto r = residue_A(lambda, slot, q);
    LaurentPoly s = r.sum;
    for (const auto& root : r.roots) s = s.divided_by_root(root);
    return s.scaled(r.scale).dilated(ipow(q, slot));
}

Scalar typeA_finiteN_residue(const Signature& lambda, long N, long b, HalfInt a, const EvalConfig& cfg) {
    check_typeA(lambda, N, b);
    // X = q^a coincides with a denominator root exactly when a is another
    // principal exponent.
    const bool apparent = a.is_integral() && a.doubled / 2 >= 0 && a.doubled / 2 <= N - 1 && a.doubled / 2 != b;
    if (cfg.mode == Mode::exact) {
        const mpq_class X = q_power(cfg, a).exact();
        auto r = residue_A(lambda, b, cfg.q);
        if (apparent) {
            if (sgn(r.sum.eval(X)) != 0) throw DivisionByZero("residue sum fails to vanish at a removable point");
            return typeA_direct_ratio(lambda, b, {Scalar(mpq_class(X / ipow(cfg.q, b)))}, cfg);
        }
        mpq_class den = 1;
        for (const auto& root : r.roots) den *= X - root;
        return Scalar(mpq_class(r.scale * r.sum.eval(X) / den));
    }
    return typeA_finiteN_residue_at(lambda, N, b, q_power(cfg, a), cfg);
}

Scalar typeA_finiteN_residue_at(const Signature& lambda, long N, long b, const Scalar& X, const EvalConfig& cfg) {
    check_typeA(lambda, N, b);
    auto r = residue_A(lambda, b, cfg.q);
    if (cfg.mode == Mode::exact && X.is_exact()) {
        const mpq_class& Xe = X.exact();
        mpq_class den = 1;
        for (const auto& root : r.roots) den *= Xe - root;
        if (sgn(den) == 0) {
            if (sgn(r.sum.eval(Xe)) != 0) throw DivisionByZero("residue sum fails to vanish at a removable point");
            return typeA_direct_ratio(lambda, b, {Scalar(mpq_class(Xe / ipow(cfg.q, b)))}, cfg);
        }
        return Scalar(mpq_class(r.scale * r.sum.eval(Xe) / den));
    }
    const cd Xc = X.to_cd();
    for (const auto& root : r.roots)
        if (std::abs(Xc - root.get_d()) <= 1e-12 * root.get_d()) {
            EvalConfig c = cfg;
            c.mode = Mode::floating;
            return typeA_direct_ratio(lambda, b, {X / Scalar(ipow(cfg.q, b))}, c);
        }
    // The residue terms cancel down to the ratio; carry enough bits for that.
    double top = 0;
    const double lx = std::log2(std::max(std::abs(Xc), 1e-300));
    for (long e = r.sum.low(); e <= r.sum.high(); ++e)
        top = std::max(top, log2_abs(r.sum.coeff(e)) + e * lx);
    const long extra = static_cast<long>(top) + 64;
    return dispatch(cfg, {X}, extra, [&](const auto& v) {
        using T = typename std::decay_t<decltype(v)>::value_type;
        T den = from_long<T>(1);
        for (const auto& root : r.roots) den = den * (v[0] - from_rational<T>(root));
        return T(from_rational<T>(r.scale) * r.sum.eval(v[0]) / den);
    });
}

Scalar typeA_multivar_det(const Signature& lambda, long N, long b, const std::vector<Scalar>& xs,
                          const EvalConfig& cfg) {
    require_signature(lambda);
    if (static_cast<long>(lambda.size()) != N) throw LengthMismatch("signature length != N");
    const long k = static_cast<long>(xs.size());
    if (k < 1 || b < 0 || b + k > N) throw BadShape("need k >= 1, b >= 0 and b + k <= N");
    std::vector<LaurentPoly> slot;
    for (long j = 1; j <= k; ++j) slot.push_back(typeA_slot_polynomial(lambda, b + j - 1, cfg.q));
    return dispatch(cfg, xs, 0, [&](const auto& x) {
        using T = typename std::decay_t<decltype(x)>::value_type;
        QPowers<T> qp(cfg);
        const T one = from_long<T>(1);
        // V(x_k, ..., x_1)
        T vdm = one;
        for (long i = 0; i < k; ++i)
            for (long j = i + 1; j < k; ++j) vdm = vdm * (x[k - 1 - i] - x[k - 1 - j]);
        if (is_zero(vdm)) throw CoincidentPoints("multivariate formula needs distinct x_i");
        auto M = make_matrix<T>(k, k);
        for (long i = 0; i < k; ++i)
            for (long j = 1; j <= k; ++j) {
                T mult = one;
                for (long s = 1; s <= k; ++s)
                    if (s != j) mult = mult * (x[i] * qp.pow(1 - s) - one);
                M[i][j - 1] = is_zero(mult) ? from_long<T>(0) : T(slot[j - 1].eval(T(x[i] * qp.pow(1 - j))) * mult);
            }
        // q^{k(k-1)(2k-1)/6} / prod_{i<j} (1 - q^{j-i})
        T c = qp.pow(k * (k - 1) * (2 * k - 1) / 6);
        for (long i = 1; i <= k; ++i)
            for (long j = i + 1; j <= k; ++j) c = c / (one - qp.pow(j - i));
        return T(c * det(std::move(M)) / vdm);
    });
}

// ------------------------------------------------------------------- B/C/D

Scalar bcd_finiteN_residue(GroupType g, const Signature& lambda, long m, HalfInt a, const EvalConfig& cfg) {
    const BcdShape s = make_shape(g, lambda, m);
    if (cfg.mode == Mode::exact) {
        PowCtx<mpq_class> pc{cfg, a};
        bool apparent = false;
        mpq_class pref = bcd_prefactor(s, pc, &apparent);
        if (apparent) {
            if (sgn(bcd_residue_sum(s, pc)) != 0)
                throw DivisionByZero("residue sum fails to vanish at a removable point");
            return bcd_direct_ratio(g, lambda, m, {q_power(cfg, a)}, cfg);
        }
        return Scalar(mpq_class(pref * bcd_residue_sum(s, pc)));
    }
    return bcd_finiteN_residue_at(g, lambda, m, q_power(cfg, a), cfg);
}

Scalar bcd_finiteN_residue_at(GroupType g, const Signature& lambda, long m, const Scalar& x, const EvalConfig& cfg) {
    const BcdShape s = make_shape(g, lambda, m);
    if (x.is_zero()) throw ZeroPoint("x = 0");
    const cd xc = x.to_cd();
    if (xc.imag() == 0.0 && xc.real() < 0) throw DomainViolation("x on the branch cut (-inf, 0]");
    const long extra = bcd_extra_bits(s, cfg.q.get_d());
    bool apparent = false;
    Scalar out = dispatch(cfg, {x}, extra, [&](const auto& v) {
        using T = typename std::decay_t<decltype(v)>::value_type;
        if constexpr (is_exact_v<T>) {
            throw ExactModeUnsupported("exact residue needs x as a power of q");
            return mpq_class(0);
        } else {
            PowCtx<MpComplex> pc{MpComplex(log(MpReal(cfg.q))), log(v[0])};
            MpComplex pref = bcd_prefactor(s, pc, &apparent);
            if (apparent) return MpComplex(0L);
            return MpComplex(pref * bcd_residue_sum(s, pc));
        }
    });
    if (apparent) {
        EvalConfig c = cfg;
        c.mode = Mode::floating;
        return bcd_direct_ratio(g, lambda, m, {x}, c);
    }
    return out;
}

Scalar bcd_multivar_constant(GroupType g, long k, long N, const EvalConfig& cfg) {
    if (k < 1 || k > N) throw BadShape("need 1 <= k <= N");
    const long e2 = g.epsilon().doubled;  // 2 eps
    const mpq_class& q = cfg.q;
    mpq_class c = 1;
    for (long i = 1; i <= k; ++i) {
        c *= qpoch(mpq_class(ipow(q, i)), q, N - k) * qpoch(mpq_class(ipow(q, k + i - 1 + e2)), q, N - k);
        c /= qpoch(mpq_class(ipow(q, i - 1 + e2)), q, i - 1) * qpoch(mpq_class(ipow(q, 1 - i)), q, i - 1) *
             qpoch(q, q, N - i) * qpoch(mpq_class(ipow(q, 2 * i - 1 + e2)), q, N - i);
    }
    return Scalar(c);
}

Scalar bcd_limit_constant(GroupType g, long k, const EvalConfig& cfg) {
    if (k < 1) throw BadShape("need k >= 1");
    const long e2 = g.epsilon().doubled;
    const mpq_class& q = cfg.q;
    mpq_class d = 1;
    for (long i = 1; i <= k; ++i)
        d *= qpoch(mpq_class(ipow(q, i - 1 + e2)), q, i - 1) * qpoch(mpq_class(ipow(q, 1 - i)), q, i - 1) *
             qpoch(q, q, i - 1) * qpoch(mpq_class(ipow(q, 2 * k - 2 * i + e2 + 1)), q, i - 1);
    return Scalar(mpq_class(1 / d));
}

Scalar bcd_multivar_det(GroupType g, const Signature& lambda, long N, const std::vector<Scalar>& xs,
                        const EvalConfig& cfg) {
    require_nonneg_signature(lambda);
    if (static_cast<long>(lambda.size()) != N) throw LengthMismatch("signature length != N");
    const long k = static_cast<long>(xs.size());
    if (k < 1 || k > N) throw BadShape("need 1 <= k <= N");
    // Entry ratios: direct determinants for small N, residues otherwise.
    std::vector<std::vector<Scalar>> ratio(k, std::vector<Scalar>(k));
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j)
            ratio[i][j] = N <= 12 ? bcd_direct_ratio(g, lambda, j, {xs[i]}, cfg)
                                  : bcd_finiteN_residue_at(g, lambda, j, xs[i], cfg);
    const Scalar c = bcd_multivar_constant(g, k, N, cfg);
    std::vector<Scalar> flat = xs;
    for (auto& row : ratio) flat.insert(flat.end(), row.begin(), row.end());
    flat.push_back(c);
    return dispatch(cfg, flat, 0, [&](const auto& v) {
        using T = typename std::decay_t<decltype(v)>::value_type;
        QPowers<T> qp(cfg);
        const T one = from_long<T>(1);
        std::vector<T> x(v.begin(), v.begin() + k);
        T vs = sym_vandermonde(x);
        if (is_zero(vs)) throw CoincidentOrbit("multivariate formula needs x_i + 1/x_i distinct");
        std::vector<T> base;
        for (long i = 0; i < k; ++i) base.push_back(qp.pow(HalfInt::integer(i) + g.epsilon()));
        const T qe = qp.pow(g.epsilon());
        auto M = make_matrix<T>(k, k);
        for (long i = 0; i < k; ++i)
            for (long j = 1; j <= k; ++j) {
                const T qj = qp.pow(HalfInt::integer(j) + g.epsilon());
                T mult = qpoch(T(qe * x[i]), qp.q(), j - 1) * qpoch(T(qe / x[i]), qp.q(), j - 1) *
                         qpoch(T(qj * x[i]), qp.q(), k - j) * qpoch(T(qj / x[i]), qp.q(), k - j);
                M[i][j - 1] = v[static_cast<std::size_t>(k + i * k + (j - 1))] * mult;
            }
        return T(v.back() * sym_vandermonde(base) / vs * det(std::move(M)));
    });
}

Scalar bcd_finiteN_integral(GroupType g, const Signature& lambda, long N, long m, const Scalar& x,
                            const EvalConfig& cfg, const QuadratureSpec& quad, BcdMethod method, QuadDiagnostics* diag) {
    if (static_cast<long>(lambda.size()) != N) throw LengthMismatch("signature length != N");
    quad.validate();
    EvalConfig cf = cfg;
    cf.mode = Mode::floating;
    switch (method) {
        case BcdMethod::residue: return bcd_finiteN_residue_at(g, lambda, m, x, cf);
        case BcdMethod::strip: return detail::bcd_finiteN_strip(g, lambda, m, x, cf, quad, diag);
        case BcdMethod::contour: break;
    }
    const BcdShape s = make_shape(g, lambda, m);
    if (x.is_zero()) throw ZeroPoint("x = 0");
    const cd xc = x.to_cd();
    if (xc.imag() == 0.0 && xc.real() < 0) throw DomainViolation("x on the branch cut (-inf, 0]");
    const double q = cfg.q.get_d();
    PrecisionScope ps(64 + bcd_extra_bits(s, q));
    PowCtx<MpComplex> pc{MpComplex(log(MpReal(cfg.q))), log(x.to_float())};
    bool apparent = false;
    const MpComplex pref = bcd_prefactor(s, pc, &apparent);
    if (apparent) return bcd_direct_ratio(g, lambda, m, {x}, cf);
    long nodes = 0;
    double delta = 0;
    const MpComplex v = pref * bcd_contour_sum(s, pc, q, quad.tol, &nodes, &delta);
    if (diag) {
        *diag = QuadDiagnostics{};
        diag->v_nodes = nodes;
        diag->doubling_delta = delta;
    }
    return Scalar::from_cd(v.to_cd());
}

}  // namespace qgt
