#include "erseq/recurrence.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

#include "erseq/generators.hpp"

namespace erseq {

namespace {

// 2x2 companion-matrix power mod p; entries stay below p < 2^21, so the
// intermediate products fit comfortably in 64 bits.
using Mat2 = std::array<std::uint64_t, 4>;

Mat2 mul_mod(const Mat2& x, const Mat2& y, std::uint64_t p) {
  return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
          (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
}

Mat2 pow_mod(Mat2 base, std::uint64_t exp, std::uint64_t p) {
  Mat2 result{1 % p, 0, 0, 1 % p};
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t mod_ui(const Integer& v, std::uint64_t p) {
  Integer r = v % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

// u_p mod p via [u_{n+1}, u_n]^T = M^(n-1) [u_2, u_1]^T with M = [[a,b],[1,0]].
std::uint64_t term_mod(const RecurrenceSpec& spec, std::uint64_t index, std::uint64_t p) {
  const std::uint64_t a = mod_ui(spec.a, p);
  const std::uint64_t b = mod_ui(spec.b, p);
  const Mat2 m = pow_mod(Mat2{a, b, 1 % p, 0}, index - 1, p);
  return (m[2] * mod_ui(spec.u2, p) + m[3] * mod_ui(spec.u1, p)) % p;
}

}  // namespace

RecurrenceSpec::RecurrenceSpec(Integer a_in, Integer b_in, Integer u1_in, Integer u2_in)
    : a(std::move(a_in)), b(std::move(b_in)), u1(std::move(u1_in)), u2(std::move(u2_in)) {
  if (u1 < 1 || u2 < 1)
    throw std::invalid_argument("RecurrenceSpec: initial terms must be >= 1");
}

Integer RecurrenceSpec::common_factor() const {
  Integer g;
  const Integer m = a * a + 2 * b;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return g;
}

Sequence eval_recurrence(const RecurrenceSpec& spec, std::size_t n_terms) {
  if (n_terms < 2) throw std::domain_error("eval_recurrence: need at least two terms");
  std::vector<Integer> out;
  out.reserve(n_terms);
  out.push_back(spec.u1);
  out.push_back(spec.u2);
  for (std::size_t n = 2; n < n_terms; ++n)
    out.push_back(spec.a * out[n - 1] + spec.b * out[n - 2]);
  return Sequence(std::move(out));
}

RecurrenceVerdict classify(const RecurrenceSpec& spec, std::size_t n_terms) {
  RecurrenceVerdict verdict;
  verdict.empirical = check_er(eval_recurrence(spec, n_terms));

  const Integer delta = spec.discriminant();
  if (delta >= 0 && mpz_perfect_square_p(delta.get_mpz_t())) {
    verdict.applicability = Applicability::square_discriminant;
    return verdict;
  }
  if (spec.common_factor() != 1) {
    verdict.applicability = Applicability::common_factor;
    return verdict;
  }

  verdict.applicability = Applicability::theorem_applies;
  const Integer forced_ratio_numerator = spec.a * spec.a + 2 * spec.b;
  if (spec.u2 * spec.a == spec.u1 * forced_ratio_numerator) {
    verdict.decision = Decision::in_er;
    return verdict;
  }
  verdict.decision = Decision::not_in_er;

  // Witness: the smallest prime with (delta/p) = -1 and p coprime to
  // 2*b*delta at which u_p != u_1 mod p, i.e. where the prime congruence
  // forced on any realizable sequence fails.
  const Integer excluded = 2 * spec.b * delta;
  PrimeSieve sieve;
  sieve.ensure_count(witness_prime_cap);
  for (std::size_t i = 1; i <= witness_prime_cap; ++i) {
    const std::uint64_t p = sieve.nth(i);
    if (p == 2) continue;
    if (mpz_divisible_ui_p(excluded.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    if (jacobi(delta, Integer(static_cast<unsigned long>(p))) != -1) continue;
    if (term_mod(spec, p, p) != mod_ui(spec.u1, p)) {
      verdict.witness_prime = Integer(static_cast<unsigned long>(p));
      return verdict;
    }
  }
  verdict.witness_search_capped = true;
  return verdict;
}

Sequence ratio_family(RatioFamily family, const Integer& t, const Integer& s,
                      std::size_t n_terms) {
  if (t < 0 || s < 0 || (t == 0 && s == 0))
    throw std::domain_error("ratio_family: t, s must be >= 0 and not both zero");
  std::vector<Integer> out;
  out.reserve(n_terms);
  if (family == RatioFamily::jacobsthal) {
    const MatrixSpec m(2, {Integer(1), Integer(2), Integer(1), Integer(0)}, MatrixKind::nonneg);
    const Sequence traces = gen_sft_trace(m, n_terms);
    Integer minus2_power = 1;
    for (std::size_t n = 1; n <= n_terms; ++n) {
      minus2_power *= -2;
      out.push_back(t * traces.at(n) + s * abs(minus2_power - 1));
    }
  } else {
    Integer two_power = 1;
    for (std::size_t n = 1; n <= n_terms; ++n) {
      two_power *= 2;
      out.push_back(t * two_power + s);
    }
  }
  return Sequence(std::move(out));
}

}  // namespace erseq
