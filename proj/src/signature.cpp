#include "qgt/signature.hpp"

#include "qgt/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qgt {

bool is_signature(const Signature& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] > s[i - 1]) return false;
    return true;
}

bool is_nonneg_signature(const Signature& s) {
    return is_signature(s) && (s.empty() || s.back() >= 0);
}

void require_signature(const Signature& s) {
    if (!is_signature(s)) throw BadShape("not weakly decreasing: " + to_string(s));
}

void require_nonneg_signature(const Signature& s) {
    if (!is_nonneg_signature(s)) throw BadShape("not a nonnegative signature: " + to_string(s));
}

long weight(const Signature& s) {
    long w = 0;
    for (long p : s) w += p;
    return w;
}

long n_stat(const Signature& s) {
    long w = 0;
    for (std::size_t i = 0; i < s.size(); ++i) w += static_cast<long>(i) * s[i];
    return w;
}

Signature conjugate(const Signature& s) {
    require_nonneg_signature(s);
    if (s.empty()) return {};
    Signature c(static_cast<std::size_t>(s.front()), 0);
    for (long j = 0; j < s.front(); ++j) {
        long cnt = 0;
        for (long p : s)
            if (p > j) ++cnt;
        c[static_cast<std::size_t>(j)] = cnt;
    }
    return c;
}

Signature constant_signature(std::size_t n, long c) { return Signature(n, c); }

bool interlaces(InterlaceKind kind, const Signature& upper, const Signature& lower) {
    if (kind == InterlaceKind::gt) {
        if (upper.size() != lower.size() + 1)
            throw LengthMismatch("gt interlacing needs len(upper) = len(lower)+1");
        for (std::size_t i = 0; i < lower.size(); ++i)
            if (!(upper[i] >= lower[i] && lower[i] >= upper[i + 1])) return false;
        return true;
    }
    if (upper.size() != lower.size())
        throw LengthMismatch("bc interlacing needs equal lengths");
    if (!is_nonneg_signature(upper) || !is_nonneg_signature(lower)) return false;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (upper[i] < lower[i]) return false;
        if (i + 1 < upper.size() && lower[i] < upper[i + 1]) return false;
    }
    return true;
}

namespace {
void box_product(const std::vector<long>& lo, const std::vector<long>& hi,
                 std::vector<Signature>& out) {
    const std::size_t n = lo.size();
    Signature cur(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (long v = hi[i]; v >= lo[i]; --v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}
}  // namespace

std::vector<Signature> interlacing_below(const Signature& lambda) {
    require_signature(lambda);
    if (lambda.empty()) throw LengthMismatch("empty signature has no level below");
    const std::size_t n = lambda.size() - 1;
    std::vector<long> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        hi[i] = lambda[i];
        lo[i] = lambda[i + 1];
    }
    std::vector<Signature> out;
    box_product(lo, hi, out);
    return out;
}

std::vector<Signature> bc_interlacing_below(const Signature& lambda) {
    require_nonneg_signature(lambda);
    const std::size_t n = lambda.size();
    std::vector<long> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        hi[i] = lambda[i];
        lo[i] = i + 1 < n ? lambda[i + 1] : 0;
    }
    std::vector<Signature> out;
    box_product(lo, hi, out);
    return out;
}

void for_each_signature(std::size_t n, long lo, long hi,
                        const std::function<void(const Signature&)>& fn) {
    Signature cur(n);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long cap) {
        if (i == n) {
            fn(cur);
            return;
        }
        for (long v = cap; v >= lo; --v) {
            cur[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, hi);
}

std::vector<Signature> all_signatures(std::size_t n, long lo, long hi) {
    std::vector<Signature> out;
    for_each_signature(n, lo, hi, [&](const Signature& s) { out.push_back(s); });
    return out;
}

std::string to_string(const Signature& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    return os.str();
}

Signature parse_signature(const std::string& csv) {
    Signature s;
    if (csv.empty()) return s;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            s.push_back(v);
        } catch (const std::exception&) {
            throw BadShape("bad signature entry '" + tok + "'");
        }
    }
    require_signature(s);
    return s;
}

}  // namespace qgt
