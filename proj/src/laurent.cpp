#include "qgt/laurent.hpp"

namespace qgt {

void LaurentPoly::trim() {
    std::size_t lead = 0;
    while (lead < c_.size() && sgn(c_[lead]) == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        low_ = 0;
        return;
    }
    if (lead) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        low_ += static_cast<long>(lead);
    }
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const long lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
    std::vector<mpq_class> out(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e) out[static_cast<std::size_t>(e - lo)] = coeff(e) + o.coeff(e);
    *this = LaurentPoly(lo, std::move(out));
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpq_class> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return {low_ + o.low_, std::move(out)};
}

LaurentPoly LaurentPoly::scaled(const mpq_class& s) const {
    std::vector<mpq_class> out(c_);
    for (auto& c : out) c *= s;
    return {low_, std::move(out)};
}

LaurentPoly LaurentPoly::dilated(const mpq_class& s) const {
    if (is_zero()) return {};
    std::vector<mpq_class> out(c_);
    mpq_class p = ipow(s, low_);
    for (auto& c : out) {
        c *= p;
        p *= s;
    }
    return {low_, std::move(out)};
}

LaurentPoly LaurentPoly::divided_by_root(const mpq_class& r) const {
    if (is_zero()) return {};
    // Synthetic division of x^{-low} p(x) by (x - r), top coefficient down.
    if (sgn(r) == 0) return {low_ - 1, c_};
    const std::size_t n = c_.size();
    if (n == 1) throw DivisionByZero("Laurent division leaves a remainder");
    std::vector<mpq_class> quo(n - 1);
    mpq_class carry = c_[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        quo[i] = carry;
        carry = c_[i] + r * carry;
    }
    if (sgn(carry) != 0) throw DivisionByZero("Laurent division leaves a remainder");
    return {low_, std::move(quo)};
}

}  // namespace qgt
