#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "erseq/sequence.hpp"

namespace erseq {

enum class MatrixKind {
  nonneg,      // subshift of finite type; all entries >= 0
  invertible,  // toral automorphism; |det| must be 1
};

// A square integer matrix tagged with the dynamical interpretation it is
// allowed to back. Construction validates the kind's invariant.
class MatrixSpec {
 public:
  MatrixSpec(std::size_t dim, std::vector<Integer> row_major, MatrixKind kind);

  std::size_t dim() const { return dim_; }
  MatrixKind kind() const { return kind_; }
  const Integer& entry(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  const std::vector<Integer>& entries() const { return entries_; }
  Integer determinant() const;

 private:
  std::size_t dim_;
  std::vector<Integer> entries_;
  MatrixKind kind_;
};

// Parameters of the binomial family a_n = C(k*n, j*n); requires k > 1 and
// 1 <= j < k.
struct BinomialSpec {
  BinomialSpec(Integer k, Integer j);
  Integer k;
  Integer j;
};

// A connected S-integer system: a nonzero rational xi with |xi| != 1 and a
// finite set of primes S such that every prime dividing the denominator of
// xi lies in S (that is the admissibility condition |xi|_p > 1 => p in S).
class SIntegerSpec {
 public:
  SIntegerSpec(Rational xi, std::vector<Integer> s_primes);

  const Rational& xi() const { return xi_; }
  const std::vector<Integer>& s_primes() const { return s_primes_; }  // sorted, unique

 private:
  Rational xi_;
  std::vector<Integer> s_primes_;
};

// Periodic points of the subshift of finite type of a non-negative matrix:
// term n = trace(m^n).
Sequence gen_sft_trace(const MatrixSpec& m, std::size_t n_terms);

// Periodic points of the toral automorphism of a unimodular matrix:
// term n = |det(m^n - I)|. Throws std::domain_error naming n when the
// determinant vanishes (the formula degenerates there).
Sequence gen_toral_det(const MatrixSpec& m, std::size_t n_terms);

// Signed values det(m^n - I), without the degeneracy check; used by the
// congruence diagnostics, which are stated for signed determinants.
std::vector<Integer> gen_toral_det_signed(const MatrixSpec& m, std::size_t n_terms);

// term n = C(k*n, j*n).
Sequence gen_binomial(const BinomialSpec& b, std::size_t n_terms);

// term n = |xi^n - 1|_infinity * prod_{p in S} |xi^n - 1|_p, evaluated in
// exact rational arithmetic; the product is asserted to be a positive
// integer, so an admissibility mistake surfaces as a clear error.
Sequence gen_s_integer_connected(const SIntegerSpec& s, std::size_t n_terms);

// The zero-dimensional example: term n = 2^(n - 2^v) where v is the 2-adic
// valuation of n.
Sequence gen_s_integer_zero_dim_example(std::size_t n_terms);

enum class NamedKind {
  constant,   // (c, c, c, ...); param = c >= 0
  power,      // (c^n); param = c >= 0
  r_k,        // a^(k): divisor sums of the indicator r^(k); param = k >= 1
  r_product,  // termwise product of all a^(k)
  alt_prime,  // (1, 3, 1, 3, ...)
};

// Named families; param is required for constant/power/r_k and must be
// absent for r_product/alt_prime.
Sequence gen_named(NamedKind kind, const std::optional<Integer>& param, std::size_t n_terms);

// The r_product generator evaluates its definition exactly; at index 4 the
// result (175) disagrees with the published prefix value (245), while the
// surrounding terms 3, 16, 1296, 41160 agree. Recorded here so tests can
// assert the annotation exists instead of hard-coding the published value.
struct RProductDiscrepancy {
  std::size_t index;
  Integer computed;
  Integer published;
  std::string note;
};

const RProductDiscrepancy& r_product_discrepancy();

}  // namespace erseq
