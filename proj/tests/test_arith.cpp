#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "erseq/arith.hpp"

using namespace erseq;

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<Integer>{1});
  CHECK(divisors(12) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(13) == std::vector<Integer>{1, 13});
  CHECK_THROWS_AS(divisors(0), std::domain_error);
  CHECK_THROWS_AS(divisors(-6), std::domain_error);
}

TEST_CASE("moebius basics") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(2) == -1);
  CHECK(moebius(30) == -1);
  CHECK_THROWS_AS(moebius(0), std::domain_error);
}

TEST_CASE("sum of moebius over divisors vanishes for n > 1") {
  for (unsigned long n = 1; n <= 10'000; ++n) {
    int sum = 0;
    for (const Integer& d : divisors(Integer(n))) sum += moebius(d);
    CHECK(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(1023) ==
        std::vector<std::pair<Integer, unsigned>>{{3, 1}, {11, 1}, {31, 1}});
  CHECK(factorize(8191) == std::vector<std::pair<Integer, unsigned>>{{8191, 1}});
  CHECK(factorize(360) ==
        std::vector<std::pair<Integer, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize reconstructs random inputs below 1e6") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<unsigned long> dist(1, 1'000'000);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned long n = dist(rng);
    Integer product = 1;
    Integer previous = 0;
    for (const auto& [p, e] : factorize(Integer(n))) {
      CHECK(p > previous);
      CHECK(is_prime(p));
      previous = p;
      for (unsigned i = 0; i < e; ++i) product *= p;
    }
    CHECK(product == n);
  }
}

TEST_CASE("padic_valuation") {
  CHECK(padic_valuation(12, 2) == 2);
  CHECK(padic_valuation(4095, 3) == 2);
  for (unsigned long n = 1; n <= 64; ++n) {
    Integer v = (Integer(1) << n) - 1;
    CHECK(padic_valuation(v, 2) == 0);  // 2^n - 1 is odd
  }
  CHECK(padic_valuation(-24, 2) == 3);
  CHECK_THROWS_AS(padic_valuation(0, 2), std::domain_error);
  CHECK_THROWS_AS(padic_valuation(12, 4), std::domain_error);
}

TEST_CASE("jacobi fixed values") {
  CHECK(jacobi(5, 3) == -1);
  CHECK(jacobi(0, 3) == 0);
  for (unsigned long m = 1; m < 100; m += 2) CHECK(jacobi(1, Integer(m)) == 1);
  CHECK_THROWS_AS(jacobi(3, 4), std::domain_error);
  CHECK_THROWS_AS(jacobi(3, 0), std::domain_error);
  CHECK_THROWS_AS(jacobi(3, -5), std::domain_error);
}

TEST_CASE("jacobi matches quadratic-residue enumeration for odd primes < 100") {
  PrimeSieve sieve;
  for (std::uint64_t p : sieve.up_to(100)) {
    if (p == 2) continue;
    std::set<std::uint64_t> residues;
    for (std::uint64_t a = 1; a < p; ++a) residues.insert(a * a % p);
    for (std::uint64_t a = 0; a < p; ++a) {
      const int expected = a == 0 ? 0 : (residues.count(a) ? 1 : -1);
      CHECK(jacobi(Integer(a), Integer(p)) == expected);
    }
  }
}

TEST_CASE("integer_root fixed values") {
  CHECK(integer_root(8, 3) == 2);
  CHECK(integer_root(80, 2) == 8);
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 18);
  Integer root;
  mpz_ui_pow_ui(root.get_mpz_t(), 10, 9);
  CHECK(integer_root(big, 2) == root);
  CHECK(integer_root(0, 5) == 0);
  CHECK_THROWS_AS(integer_root(-1, 2), std::domain_error);
  CHECK_THROWS_AS(integer_root(8, 0), std::domain_error);
}

TEST_CASE("integer_root brackets random 256-bit inputs") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(424242ul);
  for (int trial = 0; trial < 200; ++trial) {
    const Integer n = rng.get_z_bits(256);
    for (unsigned long k = 1; k <= 8; ++k) {
      const Integer r = integer_root(n, k);
      Integer low, high;
      mpz_pow_ui(low.get_mpz_t(), r.get_mpz_t(), k);
      Integer r1 = r + 1;
      mpz_pow_ui(high.get_mpz_t(), r1.get_mpz_t(), k);
      CHECK(low <= n);
      CHECK(n < high);
    }
  }
}

TEST_CASE("is_prime spot checks") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(97));
  CHECK(is_prime(104729));
  CHECK(is_prime(Integer("2305843009213693951")));  // 2^61 - 1
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(-7));
  CHECK_FALSE(is_prime(Integer(8191) * 8191));
  CHECK_FALSE(is_prime(Integer(104729) * 104723));
}

TEST_CASE("prime sieve growth and indexing") {
  PrimeSieve sieve(16);
  const auto small = sieve.up_to(30);
  CHECK(std::vector<std::uint64_t>(small.begin(), small.end()) ==
        std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(sieve.nth(1) == 2);
  CHECK(sieve.nth(25) == 97);
  CHECK(sieve.nth(10'000) == 104'729);
  CHECK(sieve.primes().size() >= 10'000);
}
