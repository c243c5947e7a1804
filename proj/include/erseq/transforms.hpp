#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "erseq/sequence.hpp"

namespace erseq {

enum class FailReason { negative, not_divisible };

// Smallest index at which the realizability congruence fails, together with
// the offending Moebius sum. Non-negativity is checked before divisibility.
struct Witness {
  std::size_t index = 0;
  Integer mobius_sum;
  FailReason reason = FailReason::negative;
};

// Outcome of the realizability check on a prefix. A pass means "no violation
// up to N" and nothing stronger; report it as "consistent with ER up to N".
struct ERVerdict {
  bool pass = false;
  Sequence orbit_counts;           // populated iff pass
  std::optional<Witness> witness;  // populated iff !pass
};

// f_n = sum_{d|n} d * orb_d. Input terms must be non-negative; a negative
// term raises std::domain_error naming the index.
Sequence per_transform(const Sequence& orbit_counts);

// Moebius inversion of per_transform, divided by n. Fails (carrying the
// smallest offending index) when an inverted count is negative or
// non-integral; this is exactly check_er's fail path.
ERVerdict orbit_transform(const Sequence& per_counts);

// Pass iff for every n <= N the Moebius sum s_n = sum_{d|n} mu(n/d) a_d is
// non-negative and divisible by n; on pass, orbit_counts_n = s_n / n.
ERVerdict check_er(const Sequence& a);

// fstar_n = sum_{d|n} mu(n/d) a_d, not divided by n. Defined for arbitrary
// integer input, so it can be used as a diagnostic when check_er fails.
Sequence least_period_counts(const Sequence& a);

// f_n = sum_{d|n} a_d; the inverse of least_period_counts.
Sequence sum_over_divisors(const Sequence& a);

// Single-index variants (n must be <= a.size()).
Integer per_term(const Sequence& a, std::size_t n);
Integer mobius_sum_term(const Sequence& a, std::size_t n);

// rows[0] = start, rows[k+1] = per_transform(rows[k]); steps >= 1.
std::vector<Sequence> iterate_per(const Sequence& start, std::size_t steps);

// Straightforward single-threaded formula translations, kept as reference
// implementations for the parallel kernels above and for the benchmark.
namespace serial {
Sequence per_transform(const Sequence& orbit_counts);
Sequence least_period_counts(const Sequence& a);
Sequence sum_over_divisors(const Sequence& a);
}  // namespace serial

}  // namespace erseq
