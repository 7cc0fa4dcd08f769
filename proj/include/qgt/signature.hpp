#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qgt {

// Weakly decreasing integer tuple, most significant part first.
using Signature = std::vector<long>;

enum class InterlaceKind { gt, bc_same_length };

bool is_signature(const Signature& s);
bool is_nonneg_signature(const Signature& s);
void require_signature(const Signature& s);
void require_nonneg_signature(const Signature& s);

long weight(const Signature& s);   // |lambda|
long n_stat(const Signature& s);   // sum (i-1) lambda_i
Signature conjugate(const Signature& s);  // nonnegative only; length lambda_1
Signature constant_signature(std::size_t n, long c);

// gt: len(upper) = len(lower)+1, upper_1 >= lower_1 >= upper_2 >= ...
// bc_same_length: equal lengths, upper_1 >= lower_1 >= ... >= upper_N >= lower_N
bool interlaces(InterlaceKind kind, const Signature& upper, const Signature& lower);

// All mu with mu < lambda (gt), in lexicographically decreasing order.
std::vector<Signature> interlacing_below(const Signature& lambda);

// All nu with lambda >= nu_1 >= lambda_2 >= ... >= nu_N >= lo (bc_same_length, nu_N >= 0).
std::vector<Signature> bc_interlacing_below(const Signature& lambda);

// Every signature of length n with parts in [lo, hi], decreasing lex order.
std::vector<Signature> all_signatures(std::size_t n, long lo, long hi);
void for_each_signature(std::size_t n, long lo, long hi,
                        const std::function<void(const Signature&)>& fn);

std::string to_string(const Signature& s);
Signature parse_signature(const std::string& csv);

}  // namespace qgt
