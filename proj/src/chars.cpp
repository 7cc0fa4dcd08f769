#include "qgt/chars.hpp"

namespace qgt {

GroupType GroupType::parse(const std::string& s) {
    if (s == "B" || s == "b") return {Family::B};
    if (s == "C" || s == "c") return {Family::C};
    if (s == "D" || s == "d") return {Family::D};
    throw InvalidConfig("unknown group type '" + s + "'");
}

FrobeniusCoords frobenius_coords(const Signature& lambda) {
    require_nonneg_signature(lambda);
    const Signature conj = conjugate(lambda);
    FrobeniusCoords f;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const long idx = static_cast<long>(i) + 1;
        if (lambda[i] < idx) break;
        f.a.push_back(lambda[i] - idx);
        f.b.push_back(conj[i] - idx);
    }
    return f;
}

Signature from_frobenius(const FrobeniusCoords& f, std::size_t length) {
    if (f.a.size() != f.b.size()) throw BadShape("Frobenius arms and legs differ in count");
    for (std::size_t i = 0; i < f.a.size(); ++i) {
        if (f.a[i] < 0 || f.b[i] < 0) throw BadShape("negative Frobenius coordinate");
        if (i && (f.a[i] >= f.a[i - 1] || f.b[i] >= f.b[i - 1]))
            throw BadShape("Frobenius coordinates must strictly decrease");
    }
    const long d = static_cast<long>(f.a.size());
    Signature lam(length, 0);
    for (long i = 0; i < d; ++i) {
        if (static_cast<std::size_t>(i) >= length) throw BadShape("signature too short");
        lam[i] = f.a[i] + i + 1;
    }
    // rows below the diagonal block come from the legs
    for (long j = 0; j < d; ++j) {
        const long col_len = f.b[j] + j + 1;
        if (static_cast<std::size_t>(col_len) > length) throw BadShape("leg exceeds length");
        for (long r = d; r < col_len; ++r) lam[r] += 1;
    }
    return lam;
}

Scalar schur_eval(const Signature& lambda, const std::vector<Scalar>& points, const EvalConfig& cfg) {
    return with_backend(cfg, points, [&](const auto& xs) { return schur_eval_t(lambda, xs); });
}

Scalar schur_principal(const Signature& lambda, long n, const EvalConfig& cfg) {
    if (static_cast<long>(lambda.size()) != n) throw LengthMismatch("schur_principal: len != N");
    cfg.validate();
    if (cfg.mode == Mode::exact) return Scalar(schur_principal_t(lambda, QPowers<mpq_class>(cfg)));
    PrecisionScope ps(cfg.float_precision_bits);
    return Scalar(schur_principal_t(lambda, QPowers<MpComplex>(cfg)));
}

Scalar bcd_eval(GroupType g, const Signature& lambda, const std::vector<Scalar>& points,
                const EvalConfig& cfg) {
    return with_backend(cfg, points, [&](const auto& xs) { return bcd_eval_t(g, lambda, xs); });
}

Scalar bcd_principal(GroupType g, const Signature& lambda, const EvalConfig& cfg) {
    cfg.validate();
    if (cfg.mode == Mode::exact) return Scalar(bcd_principal_t(g, lambda, QPowers<mpq_class>(cfg)));
    PrecisionScope ps(cfg.float_precision_bits);
    return Scalar(bcd_principal_t(g, lambda, QPowers<MpComplex>(cfg)));
}

Scalar sym_poly_eval(SymKind kind, long m, const std::vector<Scalar>& points, const EvalConfig& cfg) {
    return with_backend(cfg, points, [&](const auto& xs) { return sym_poly_eval_t(kind, m, xs); });
}

Scalar hook_char_eval(HookFamily fam, long a, long b, long n, const std::vector<Scalar>& points,
                      const EvalConfig& cfg) {
    return with_backend(cfg, points,
                        [&](const auto& xs) { return hook_char_eval_t(fam, a, b, n, xs); });
}

Scalar jacobi_trudi_eval(GroupType g, const Signature& lambda, const std::vector<Scalar>& points,
                         const EvalConfig& cfg) {
    return with_backend(cfg, points,
                        [&](const auto& xs) { return jacobi_trudi_eval_t(g, lambda, xs); });
}

Scalar frobenius_det_eval(GroupType g, const Signature& lambda, const std::vector<Scalar>& points,
                          const EvalConfig& cfg) {
    return with_backend(cfg, points,
                        [&](const auto& xs) { return frobenius_det_eval_t(g, lambda, xs); });
}

}  // namespace qgt
