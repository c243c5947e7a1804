#include "erseq/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace erseq {

namespace {

constexpr std::uint64_t kTrialDivisionBound = 1u << 20;

// Exact below this bound with the witness set {2,...,37}.
const Integer& deterministic_mr_bound() {
  static const Integer bound("3317044064679887385961981");
  return bound;
}

constexpr unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(const Integer& n) {
  const Integer n_minus_1 = n - 1;
  const unsigned long r = mpz_scan1(n_minus_1.get_mpz_t(), 0);
  const Integer d = n_minus_1 >> r;
  for (unsigned long a : kWitnesses) {
    if (mpz_cmp_ui(n.get_mpz_t(), a) <= 0) continue;
    Integer x;
    const Integer base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned long i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long p : kWitnesses) {
    if (mpz_cmp_ui(n.get_mpz_t(), p) == 0) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 41 * 41) return true;
  if (n >= deterministic_mr_bound())
    throw std::domain_error("is_prime: input beyond the deterministic Miller-Rabin range");
  return miller_rabin(n);
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factor_u64: cannot factor zero");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  const auto strip = [&](std::uint64_t p) {
    if (n % p != 0) return;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  if (n < 1) throw std::domain_error("factorize: n must be >= 1");
  std::vector<std::pair<Integer, unsigned>> out;
  // Fast path where trial division to sqrt(n) is trivially cheap.
  if (n.fits_ulong_p() && n.get_ui() <= 1'000'000'000'000ull) {
    for (auto [p, e] : factor_u64(n.get_ui()))
      out.emplace_back(Integer(static_cast<unsigned long>(p)), e);
    return out;
  }
  Integer rem = n;
  PrimeSieve sieve;
  for (std::uint64_t p : sieve.ensure_limit(kTrialDivisionBound)) {
    if (mpz_divisible_ui_p(rem.get_mpz_t(), static_cast<unsigned long>(p))) {
      const Integer prime(static_cast<unsigned long>(p));
      const unsigned long e = mpz_remove(rem.get_mpz_t(), rem.get_mpz_t(), prime.get_mpz_t());
      out.emplace_back(prime, static_cast<unsigned>(e));
      if (rem == 1) break;
    }
  }
  if (rem > 1) {
    if (!is_prime(rem))
      throw std::domain_error("factorize: composite cofactor exceeds the trial-division bound");
    out.emplace_back(rem, 1);
  }
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  if (n < 1) throw std::domain_error("divisors: n must be >= 1");
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t t = 0; t < base; ++t) divs.push_back(divs[t] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

int moebius(const Integer& n) {
  if (n < 1) throw std::domain_error("moebius: n must be >= 1");
  int result = 1;
  for (const auto& [p, e] : factorize(n)) {
    (void)p;
    if (e >= 2) return 0;
    result = -result;
  }
  return result;
}

unsigned long padic_valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw std::domain_error("padic_valuation: valuation of zero is infinite");
  if (!is_prime(p)) throw std::domain_error("padic_valuation: p must be prime");
  Integer stripped;
  return mpz_remove(stripped.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

int jacobi(const Integer& a, const Integer& m) {
  if (m < 1 || mpz_even_p(m.get_mpz_t()))
    throw std::domain_error("jacobi: modulus must be odd and positive");
  return mpz_jacobi(a.get_mpz_t(), m.get_mpz_t());
}

Integer integer_root(const Integer& n, unsigned long k) {
  if (n < 0) throw std::domain_error("integer_root: n must be >= 0");
  if (k < 1) throw std::domain_error("integer_root: k must be >= 1");
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

const std::vector<std::uint64_t>& PrimeSieve::ensure_limit(std::uint64_t limit) {
  if (limit > limit_) sieve_to(limit);
  return primes_;
}

const std::vector<std::uint64_t>& PrimeSieve::ensure_count(std::size_t count) {
  while (primes_.size() < count) sieve_to(std::max<std::uint64_t>(2 * limit_, 2048));
  return primes_;
}

std::span<const std::uint64_t> PrimeSieve::up_to(std::uint64_t limit) {
  ensure_limit(limit);
  const auto end = std::upper_bound(primes_.begin(), primes_.end(), limit);
  return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

std::uint64_t PrimeSieve::nth(std::size_t index) {
  if (index == 0) throw std::domain_error("PrimeSieve::nth: index is 1-based");
  ensure_count(index);
  return primes_[index - 1];
}

void PrimeSieve::sieve_to(std::uint64_t limit) {
  if (limit < 2) limit = 2;
  std::vector<bool> composite(limit + 1, false);
  primes_.clear();
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes_.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  limit_ = limit;
}

}  // namespace erseq
