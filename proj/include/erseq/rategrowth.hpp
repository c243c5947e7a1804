#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "erseq/sequence.hpp"

namespace erseq {

// Exact floor values of the two target shapes: floor(n^alpha) for the power
// kind and floor(beta^n) for the geometric kind, both via integer roots and
// integer division only.
struct RateTarget {
  enum class Kind { power, geometric };

  Kind kind;
  Rational parameter;  // alpha or beta, positive

  Integer value_at(std::uint64_t n) const;
};

struct RateRealization {
  Sequence orbit_counts;
  Sequence per_counts;  // per_transform(orbit_counts)
};

// Jordan-totient-style construction: o_n = ceil(J_alpha(n)/n) with
// J_alpha(n) = n^alpha * prod_{p|n} (1 - p^-alpha), every ceiling decided in
// exact arithmetic. Guarantees 0 <= f_n - floor(n^alpha) <= sigma(n).
// Requires alpha > 1 (the target is not realizable in rate otherwise).
RateRealization rr_construct_power(const Rational& alpha, std::size_t n_terms);

// The orbit-count kernel behind rr_construct_power, parallel over indices.
Sequence power_orbit_counts(const Rational& alpha, std::size_t n_terms);

// Greedy construction for floor(beta^n): o_n tops the partial divisor sum up
// to the target, so t_n <= f_n < t_n + n whenever the partial sum has not
// already overshot. Requires beta >= 1 (the target sequence is eventually
// zero otherwise).
RateRealization rr_construct_geometric(const Rational& beta, std::size_t n_terms);

// J_alpha(n) for integer alpha >= 1; always an integer.
Integer jordan_totient(std::uint64_t n, unsigned long alpha);

// Finite-scale reflection of the slow-growth obstruction: flagged when the
// prefix both escapes its own early values and has phi_n/n so small on the
// tail that any realizing map would need zero orbits of those lengths.
// A heuristic diagnostic about the prefix only, never a proof.
struct SlowGrowthDiagnosis {
  bool obstructed = false;
  Rational tail_ratio_max;  // max over the tail half of phi_n / n
  Integer head_max;         // max over the first max(10, N/100) terms
  Integer tail_max;         // max over the tail half
  std::string note;
};

SlowGrowthDiagnosis check_slow_growth_obstruction(const Sequence& phi);

// Least-period counts growing like k * 2^(k^3) off a sparse set of semiprime
// indices n_r = p_r * p_{r+1}, where blocks of sizes 1, 2, 3, ... cycle the
// exponent j in n_r * 2^(j * n_r). The mixed scales give the log-growth
// statistics infinitely many limit points. Requires 2 <= K <= 128.
Sequence gen_pathological_orbit_growth(std::size_t K);

struct GrowthRow {
  std::uint64_t n = 0;
  Integer f;
  Integer fstar;
  bool prime = false;
  bool prime_power = false;  // p^r with r >= 2
  bool semiprime = false;    // p*q with p != q
};

struct GrowthReport {
  Rational alpha;
  std::vector<GrowthRow> rows;
};

// Per-index scaled statistics for a positive sequence; fstar is the Moebius
// sum, and tags mark the prime / prime-power / semiprime index subsequences
// along which the scaled ratios are usually read.
GrowthReport growth_report(const Sequence& f, const Rational& alpha);

// Sign of value / n^alpha - threshold, decided exactly (v-th power
// comparisons for alpha = u/v; no floating point).
int compare_power_ratio(const Integer& value, std::uint64_t n, const Rational& alpha,
                        const Rational& threshold);

// Decimal rendering of value / n^alpha, truncated to `places` digits.
// Presentation only; assertions use compare_power_ratio.
std::string format_power_ratio(const Integer& value, std::uint64_t n, const Rational& alpha,
                               int places = 6);

// Decimal rendering of (1/n) * ln(value); presentation only.
std::string format_log_rate(const Integer& value, std::uint64_t n, int places = 6);

namespace serial {
// Reference loop for the parallel kernel inside rr_construct_power.
Sequence power_orbit_counts(const Rational& alpha, std::size_t n_terms);
}

}  // namespace erseq
