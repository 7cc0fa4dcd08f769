#pragma once

// Schur and type B/C/D characters: determinant evaluation, principal
// specializations, H/E generators, hooks, Jacobi-Trudi and Frobenius forms.
// Templates work over mpq_class, MpComplex and std::complex<double>; the
// Scalar overloads at the bottom pick the backend from the EvalConfig.

#include "qgt/arith.hpp"
#include "qgt/linalg.hpp"
#include "qgt/signature.hpp"

#include <string>
#include <vector>

namespace qgt {

enum class Family { B, C, D };

struct GroupType {
    Family tag = Family::C;

    HalfInt epsilon() const {
        switch (tag) {
            case Family::B: return HalfInt::half(1);
            case Family::C: return HalfInt::integer(1);
            case Family::D: return HalfInt::integer(0);
        }
        return {};
    }
    char letter() const { return tag == Family::B ? 'B' : tag == Family::C ? 'C' : 'D'; }
    static GroupType parse(const std::string& s);

    // l_i = lambda_i + N - i + eps, i = 1..N
    std::vector<HalfInt> exponents(const Signature& lambda) const {
        std::vector<HalfInt> out;
        const long n = static_cast<long>(lambda.size());
        for (long i = 0; i < n; ++i)
            out.push_back(HalfInt::integer(lambda[i] + n - 1 - i) + epsilon());
        return out;
    }
};

struct FrobeniusCoords {
    std::vector<long> a;
    std::vector<long> b;
};

FrobeniusCoords frobenius_coords(const Signature& lambda);
Signature from_frobenius(const FrobeniusCoords& f, std::size_t length);

enum class SymKind { h, e, HB, EB, HCD, ECD };
enum class HookFamily { schurA, B, C, D };

// ---------------------------------------------------------------- templates

template <class T>
T vandermonde(const std::vector<T>& x) {
    T v = from_long<T>(1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) v = v * (x[i] - x[j]);
    return v;
}

template <class T>
T sym_vandermonde(const std::vector<T>& z) {
    std::vector<T> s;
    for (const auto& zi : z) {
        if (is_zero(zi)) throw ZeroPoint("zero point in symplectic Vandermonde");
        s.push_back(zi + from_long<T>(1) / zi);
    }
    return vandermonde(s);
}

template <class T>
T schur_eval_t(const Signature& lambda, const std::vector<T>& x) {
    require_signature(lambda);
    if (lambda.size() != x.size()) throw LengthMismatch("schur_eval: point count != length");
    const long n = static_cast<long>(x.size());
    if (n == 0) return from_long<T>(1);
    T v = vandermonde(x);
    if (is_zero(v)) throw CoincidentPoints("schur_eval: points coincide");
    auto m = make_matrix<T>(x.size(), x.size());
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m[i][j] = ipow(x[i], lambda[j] + n - 1 - j);
    return det(std::move(m)) / v;
}

// h_0..h_M by Newton's identity m h_m = sum_k p_k h_{m-k}.
template <class T>
std::vector<T> complete_h_upto(const std::vector<T>& x, long M) {
    std::vector<T> h(static_cast<std::size_t>(std::max(M, 0L) + 1), from_long<T>(0));
    h[0] = from_long<T>(1);
    std::vector<T> p(h.size(), from_long<T>(0));
    std::vector<T> pw(x);
    for (long k = 1; k <= M; ++k) {
        T s = from_long<T>(0);
        for (std::size_t i = 0; i < x.size(); ++i) {
            s = s + pw[i];
            pw[i] = pw[i] * x[i];
        }
        p[k] = s;
    }
    for (long m = 1; m <= M; ++m) {
        T acc = from_long<T>(0);
        for (long k = 1; k <= m; ++k) acc = acc + p[k] * h[m - k];
        h[m] = acc / from_long<T>(m);
    }
    return h;
}

// e_0..e_n by multiplying out prod (1 + x_i t).
template <class T>
std::vector<T> elementary_e(const std::vector<T>& x) {
    std::vector<T> e(x.size() + 1, from_long<T>(0));
    e[0] = from_long<T>(1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] = e[k] + x[i] * e[k - 1];
    return e;
}

template <class T>
std::vector<T> bc_symbols(bool with_one, const std::vector<T>& z) {
    std::vector<T> s;
    if (with_one) s.push_back(from_long<T>(1));
    for (const auto& zi : z) {
        if (is_zero(zi)) throw ZeroPoint("inverse of a zero point");
        s.push_back(zi);
        s.push_back(from_long<T>(1) / zi);
    }
    return s;
}

template <class T>
T sym_poly_eval_t(SymKind kind, long m, const std::vector<T>& pts) {
    if (m < 0) return from_long<T>(0);
    std::vector<T> sym;
    switch (kind) {
        case SymKind::h:
        case SymKind::e: sym = pts; break;
        case SymKind::HB:
        case SymKind::EB: sym = bc_symbols(true, pts); break;
        case SymKind::HCD:
        case SymKind::ECD: sym = bc_symbols(false, pts); break;
    }
    const bool is_e = kind == SymKind::e || kind == SymKind::EB || kind == SymKind::ECD;
    if (is_e) {
        if (m > static_cast<long>(sym.size())) return from_long<T>(0);
        return elementary_e(sym)[static_cast<std::size_t>(m)];
    }
    return complete_h_upto(sym, m)[static_cast<std::size_t>(m)];
}

// Table of H^G_m for m in [0, M] with negative m reading as zero.
template <class T>
struct HTable {
    std::vector<T> h;
    T operator()(long m) const {
        if (m < 0 || m >= static_cast<long>(h.size())) {
            if (m < 0) return from_long<T>(0);
            throw BadShape("H table too short");
        }
        return h[static_cast<std::size_t>(m)];
    }
};

template <class T>
HTable<T> h_table(Family g, const std::vector<T>& z, long M) {
    return {complete_h_upto(bc_symbols(g == Family::B, z), M)};
}

template <class T>
T bcd_eval_t(GroupType g, const Signature& lambda, const std::vector<T>& z) {
    require_nonneg_signature(lambda);
    if (lambda.size() != z.size()) throw LengthMismatch("bcd_eval: point count != length");
    const long n = static_cast<long>(z.size());
    if (n == 0) return from_long<T>(1);
    T vs = sym_vandermonde(z);
    if (is_zero(vs)) throw CoincidentOrbit("bcd_eval: z_i + 1/z_i collide");
    auto m = make_matrix<T>(z.size(), z.size());
    for (long i = 0; i < n; ++i) {
        const long k = lambda[i] + n - 1 - i;
        for (long j = 0; j < n; ++j) {
            const T& zj = z[j];
            switch (g.tag) {
                case Family::B: {
                    // (z^{k+1/2} - z^{-k-1/2}) / (z^{1/2} - z^{-1/2}) = z^{-k} + ... + z^{k}
                    T s = ipow(zj, -k);
                    T acc = s;
                    for (long t = -k + 1; t <= k; ++t) {
                        s = s * zj;
                        acc = acc + s;
                    }
                    m[i][j] = acc;
                    break;
                }
                case Family::C: {
                    // (z^{k+1} - z^{-k-1}) / (z - z^{-1}) = z^{-k} + z^{-k+2} + ... + z^{k}
                    T z2 = zj * zj;
                    T s = ipow(zj, -k);
                    T acc = s;
                    for (long t = 1; t <= k; ++t) {
                        s = s * z2;
                        acc = acc + s;
                    }
                    m[i][j] = acc;
                    break;
                }
                case Family::D: m[i][j] = ipow(zj, k) + ipow(zj, -k); break;
            }
        }
    }
    return det(std::move(m)) / vs;
}

template <class T>
T schur_principal_t(const Signature& lambda, const QPowers<T>& qp) {
    require_signature(lambda);
    const long n = static_cast<long>(lambda.size());
    T num = qp.pow(n_stat(lambda));
    T den = from_long<T>(1);
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            num = num * (from_long<T>(1) - qp.pow(lambda[i] - lambda[j] + j - i));
            den = den * (from_long<T>(1) - qp.pow(j - i));
        }
    return num / den;
}

template <class T>
T sym_vandermonde_q(const std::vector<HalfInt>& ex, const QPowers<T>& qp) {
    std::vector<T> z;
    for (auto e : ex) z.push_back(qp.pow(e));
    return sym_vandermonde(z);
}

template <class T>
T bcd_principal_t(GroupType g, const Signature& lambda, const QPowers<T>& qp) {
    require_nonneg_signature(lambda);
    const long n = static_cast<long>(lambda.size());
    if (n == 0) return from_long<T>(1);
    const auto l = g.exponents(lambda);
    const auto base = g.exponents(Signature(lambda.size(), 0));
    std::vector<HalfInt> l_rev(l.rbegin(), l.rend()), b_rev(base.rbegin(), base.rend());
    T ratio = sym_vandermonde_q(l_rev, qp) / sym_vandermonde_q(b_rev, qp);
    const T one = from_long<T>(1);
    switch (g.tag) {
        case Family::B:
            // (q^{-l/2} - q^{l/2}) / (q^{-k/2} - q^{k/2}) = q^{-lambda_i/2} (1 - q^l) / (1 - q^k)
            for (long i = 0; i < n; ++i)
                ratio = ratio * qp.pow(HalfInt::half(-lambda[i])) * (one - qp.pow(l[i])) /
                        (one - qp.pow(base[i]));
            return ratio;
        case Family::C:
            for (long i = 0; i < n; ++i)
                ratio = ratio * (qp.pow(-l[i]) - qp.pow(l[i])) / (qp.pow(-base[i]) - qp.pow(base[i]));
            return ratio;
        case Family::D: return from_long<T>(2) * ratio;
    }
    return ratio;
}

template <class T>
T hook_char_eval_t(HookFamily fam, long a, long b, long n, const std::vector<T>& pts) {
    if (a < 0 || b < 0 || n < b + 1) throw BadShape("hook needs a,b >= 0 and N >= b+1");
    if (static_cast<long>(pts.size()) != n) throw LengthMismatch("hook: point count != N");
    if (fam == HookFamily::schurA) {
        auto h = complete_h_upto(pts, a + b + 1);
        auto e = elementary_e(pts);
        T acc = from_long<T>(0);
        for (long i = 0; i <= b; ++i) {
            T term = h[a + 1 + i] * (b - i < static_cast<long>(e.size()) ? e[b - i] : from_long<T>(0));
            if (i % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
        }
        return acc;
    }
    const Family g = fam == HookFamily::B ? Family::B : fam == HookFamily::C ? Family::C : Family::D;
    auto sym = bc_symbols(g == Family::B, pts);
    HTable<T> H{complete_h_upto(sym, a + b + 2)};
    auto e = elementary_e(sym);
    auto E = [&](long m) {
        if (m < 0 || m >= static_cast<long>(e.size())) return from_long<T>(0);
        return e[static_cast<std::size_t>(m)];
    };
    T acc = from_long<T>(0);
    for (long i = 0; i <= b; ++i) {
        T hh;
        if (g == Family::C)
            hh = i == 0 ? H(a + 1) : T(H(a + 1 + i) + H(a + 1 - i));
        else
            hh = H(a + 1 + i) - H(a - 1 - i);
        T term = hh * E(b - i);
        if (i % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    if (g == Family::D && b != n - 1) acc = from_long<T>(2) * acc;
    return acc;
}

// Jacobi-Trudi determinant over the nonzero parts.  For D the result is
// scaled by (2 - 1{lambda_N > 0}) so that it matches the twin-sum character.
template <class T>
T jacobi_trudi_eval_t(GroupType g, const Signature& lambda, const std::vector<T>& z) {
    require_nonneg_signature(lambda);
    if (lambda.size() != z.size()) throw LengthMismatch("jacobi_trudi: point count != length");
    long len = 0;
    while (len < static_cast<long>(lambda.size()) && lambda[len] > 0) ++len;
    const long top = (lambda.empty() ? 0 : lambda[0]) + len + 1;
    auto H = h_table(g.tag, z, top);
    auto m = make_matrix<T>(len, len);
    for (long i = 1; i <= len; ++i)
        for (long j = 1; j <= len; ++j) {
            const long li = lambda[i - 1];
            if (g.tag == Family::C)
                m[i - 1][j - 1] = j == 1 ? H(li + j - i) : T(H(li + j - i) + H(li - i - j + 2));
            else
                m[i - 1][j - 1] = H(li + j - i) - H(li - i - j);
        }
    T d = det(std::move(m));
    if (g.tag == Family::D && (lambda.empty() || lambda.back() == 0)) d = from_long<T>(2) * d;
    return d;
}

// Schur polynomial as det[h_{lambda_i - i + j}]; needs no distinct points.
// Negative parts are shifted away using s_{lambda + c} = (x_1...x_N)^c s_lambda.
template <class T>
T schur_jt_eval_t(const Signature& lambda, const std::vector<T>& x) {
    require_signature(lambda);
    if (lambda.size() != x.size()) throw LengthMismatch("schur_jt: point count != length");
    if (lambda.empty()) return from_long<T>(1);
    const long shift = std::min(lambda.back(), 0L);
    long len = 0;
    while (len < static_cast<long>(lambda.size()) && lambda[len] - shift > 0) ++len;
    auto h = complete_h_upto(x, lambda[0] - shift + len);
    auto H = [&](long m) { return m < 0 ? from_long<T>(0) : h[static_cast<std::size_t>(m)]; };
    auto m = make_matrix<T>(len, len);
    for (long i = 0; i < len; ++i)
        for (long j = 0; j < len; ++j) m[i][j] = H(lambda[i] - shift - i + j);
    T d = det(std::move(m));
    if (shift == 0) return d;
    T prod = from_long<T>(1);
    for (const auto& xi : x) prod = prod * xi;
    return d * ipow(prod, shift);
}

template <class T>
T frobenius_det_eval_t(GroupType g, const Signature& lambda, const std::vector<T>& z) {
    require_nonneg_signature(lambda);
    const long n = static_cast<long>(lambda.size());
    if (static_cast<long>(z.size()) != n) throw LengthMismatch("frobenius: point count != length");
    auto f = frobenius_coords(lambda);
    const std::size_t d = f.a.size();
    if (d == 0) return bcd_eval_t(g, lambda, z);  // empty diagram
    for (long bi : f.b)
        if (bi > n - 1) throw BadShape("Frobenius leg exceeds N-1");
    const HookFamily fam = g.tag == Family::B ? HookFamily::B
                           : g.tag == Family::C ? HookFamily::C
                                                : HookFamily::D;
    auto m = make_matrix<T>(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m[i][j] = hook_char_eval_t(fam, f.a[i], f.b[j], n, z);
    T r = det(std::move(m));
    if (g.tag == Family::D) r = r / ipow(from_long<T>(2), static_cast<long>(d) - 1);
    return r;
}

// ------------------------------------------------------------ Scalar API

Scalar schur_eval(const Signature& lambda, const std::vector<Scalar>& points, const EvalConfig& cfg);
Scalar schur_principal(const Signature& lambda, long n, const EvalConfig& cfg);
Scalar bcd_eval(GroupType g, const Signature& lambda, const std::vector<Scalar>& points,
                const EvalConfig& cfg);
Scalar bcd_principal(GroupType g, const Signature& lambda, const EvalConfig& cfg);
Scalar sym_poly_eval(SymKind kind, long m, const std::vector<Scalar>& points, const EvalConfig& cfg);
Scalar hook_char_eval(HookFamily fam, long a, long b, long n, const std::vector<Scalar>& points,
                      const EvalConfig& cfg);
Scalar jacobi_trudi_eval(GroupType g, const Signature& lambda, const std::vector<Scalar>& points,
                         const EvalConfig& cfg);
Scalar frobenius_det_eval(GroupType g, const Signature& lambda, const std::vector<Scalar>& points,
                          const EvalConfig& cfg);

// Run fn<T>(points as T) in the backend chosen by cfg and the inputs.
template <class Fn>
Scalar with_backend(const EvalConfig& cfg, const std::vector<Scalar>& points, Fn&& fn) {
    bool exact = cfg.mode == Mode::exact;
    for (const auto& p : points) exact = exact && p.is_exact();
    if (exact) {
        std::vector<mpq_class> xs;
        for (const auto& p : points) xs.push_back(p.exact());
        return Scalar(fn(xs));
    }
    PrecisionScope ps(cfg.float_precision_bits);
    std::vector<MpComplex> xs;
    for (const auto& p : points) xs.push_back(p.to_float());
    return Scalar(fn(xs));
}

}  // namespace qgt
