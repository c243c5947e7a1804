#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "erseq/sequence.hpp"

namespace erseq {

// Termwise sum / product; lengths must match.
Sequence pointwise_add(const Sequence& a, const Sequence& b);
Sequence pointwise_mul(const Sequence& a, const Sequence& b);

// term n = sum over i+j = n+1, 1 <= i,j <= n, of a_i * b_j.
Sequence additive_convolution(const Sequence& a, const Sequence& b);

// term n = sum over d | n of a_d * b_{n/d}.
Sequence dirichlet_convolution(const Sequence& a, const Sequence& b);

struct QuotientResult {
  std::optional<Sequence> quotient;        // present iff every term divides
  std::optional<std::size_t> fail_index;   // first non-integral index otherwise
};

// Termwise a_n / b_n. A zero divisor raises std::domain_error naming the
// index; a non-integral quotient is a structured failure, not an error.
QuotientResult quotient_check(const Sequence& a, const Sequence& b);

// All termwise splittings a_n = b_n * c_n where both factors pass the
// realizability congruence on the prefix, deduplicated by requiring b <= c
// lexicographically.
struct FactorizationResult {
  std::vector<std::pair<Sequence, Sequence>> pairs;
  bool complete = true;             // false when the node budget ran out
  bool truncated = false;           // true when max_results cut the output
  std::uint64_t nodes_visited = 0;
};

// Depth-first over indices, branching over divisor pairs of a_n and pruning
// with the congruence at each index (it only involves d <= n). Requires a to
// pass check_er with every term >= 1.
FactorizationResult search_factorizations(const Sequence& a, std::size_t max_results,
                                          std::uint64_t node_budget = 1'000'000);

// Smallest n <= bound at which (P(n)) violates the realizability congruence,
// or nullopt. coeffs are c_0, c_1, ... (constant term first).
std::optional<std::size_t> refute_polynomial(const std::vector<Integer>& coeffs,
                                             std::size_t bound);

// Extends the given values at primes to a completely multiplicative sequence
// and reports the smallest failing index, or nullopt. Every prime <= bound
// must have a value >= 1; a missing prime is an error.
std::optional<std::size_t> refute_completely_multiplicative(
    const std::map<Integer, Integer>& prime_values, std::size_t bound);

}  // namespace erseq
