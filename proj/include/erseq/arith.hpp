#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace erseq {

// All integer quantities are arbitrary precision; nothing in the library is
// allowed to overflow or to decide a congruence with floating point.
using Integer = mpz_class;
// Canonical form: lowest terms, positive denominator (mpq invariant).
using Rational = mpq_class;

// Ordered list of all positive divisors of n. Throws std::domain_error for n < 1.
std::vector<Integer> divisors(const Integer& n);

// Moebius function, in {-1, 0, 1}. Throws std::domain_error for n < 1.
int moebius(const Integer& n);

// Complete prime factorization as (prime, multiplicity) pairs in increasing
// prime order; factorize(1) == {}. Trial division by primes up to 2^20, after
// which the cofactor must itself be prime; anything harder is out of the
// supported (desk-scale) range and throws std::domain_error.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

// Largest e with p^e | n. Throws std::domain_error for n == 0 (the valuation
// would be infinite) or p not prime.
unsigned long padic_valuation(const Integer& n, const Integer& p);

// Jacobi symbol (a/m) for odd positive m; equals the Legendre symbol when m
// is an odd prime. Throws std::domain_error for even or non-positive m.
int jacobi(const Integer& a, const Integer& m);

// Floor of the k-th root of n. Requires n >= 0 and k >= 1.
Integer integer_root(const Integer& n, unsigned long k);

// Deterministic primality test: trial division by the witness primes, then
// Miller-Rabin with the fixed witness set {2,...,37}, which is exact below
// 3.317e24. Larger inputs throw std::domain_error.
bool is_prime(const Integer& n);

// Factorization of an index-sized value by plain trial division.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

// Incremental Eratosthenes sieve, growing by doubling on demand.
// Instances are cheap; use one per context (not thread-safe per instance).
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t initial_limit = 1024) { sieve_to(initial_limit); }

  // Grows the sieve so that all primes <= limit are present; the returned
  // table may extend beyond limit. Use up_to() for an exact range.
  const std::vector<std::uint64_t>& ensure_limit(std::uint64_t limit);
  // At least `count` primes.
  const std::vector<std::uint64_t>& ensure_count(std::size_t count);
  // Exactly the primes <= limit.
  std::span<const std::uint64_t> up_to(std::uint64_t limit);
  // 1-based: nth(1) == 2.
  std::uint64_t nth(std::size_t index);

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::uint64_t limit() const { return limit_; }

 private:
  void sieve_to(std::uint64_t limit);

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> primes_;
};

}  // namespace erseq
