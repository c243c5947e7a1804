#pragma once

#include <cstddef>
#include <optional>

#include "erseq/sequence.hpp"
#include "erseq/transforms.hpp"

namespace erseq {

// u_{n+2} = a*u_{n+1} + b*u_n with initial terms u1, u2 >= 1.
struct RecurrenceSpec {
  RecurrenceSpec(Integer a, Integer b, Integer u1, Integer u2);

  Integer a;
  Integer b;
  Integer u1;
  Integer u2;

  Integer discriminant() const { return a * a + 4 * b; }       // a^2 + 4b
  Integer common_factor() const;                               // gcd(a, a^2 + 2b)
};

enum class Applicability {
  theorem_applies,      // discriminant non-square and gcd(a, a^2+2b) == 1
  square_discriminant,  // no sharp decision; only the empirical prefix verdict
  common_factor,        // likewise
};

enum class Decision { in_er, not_in_er };

struct RecurrenceVerdict {
  Applicability applicability = Applicability::theorem_applies;
  std::optional<Decision> decision;        // present iff the theorem applies
  std::optional<Integer> witness_prime;    // present iff decision == not_in_er and found
  bool witness_search_capped = false;      // search hit the prime cap without a hit
  ERVerdict empirical;                     // prefix check, always present
};

// Searched primes are the first witness_prime_cap primes with Jacobi symbol
// (discriminant/p) == -1 and p coprime to 2*b*discriminant.
inline constexpr std::size_t witness_prime_cap = 10'000;

// Exact terms u_1..u_N; requires N >= 2.
Sequence eval_recurrence(const RecurrenceSpec& spec, std::size_t n_terms);

// Sharp classification when the discriminant is non-square and a is coprime
// to a^2+2b: in ER iff u2 * a == u1 * (a^2 + 2b) (cross-multiplied, no
// division). Square-discriminant and common-factor specs get no theorem
// decision, only the empirical prefix verdict.
RecurrenceVerdict classify(const RecurrenceSpec& spec, std::size_t n_terms);

enum class RatioFamily {
  jacobsthal,  // t * trace([[1,2],[1,0]]^n) + s * |(-2)^n - 1|
  mersenne,    // t * 2^n + s
};

// Requires t, s >= 0 and not both zero.
Sequence ratio_family(RatioFamily family, const Integer& t, const Integer& s,
                      std::size_t n_terms);

}  // namespace erseq
