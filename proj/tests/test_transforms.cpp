#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "erseq/transforms.hpp"

using namespace erseq;

namespace {

Sequence random_orbit_counts(std::mt19937_64& rng, std::size_t max_len, std::uint64_t max_term) {
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  std::uniform_int_distribution<std::uint64_t> term_dist(0, max_term);
  std::vector<Integer> terms(len_dist(rng));
  for (Integer& t : terms) t = Integer(static_cast<unsigned long>(term_dist(rng)));
  return Sequence(std::move(terms));
}

}  // namespace

TEST_CASE("per_transform fixed prefixes") {
  CHECK(per_transform(Sequence::delta(6)) == Sequence::ones(6));
  CHECK(per_transform(Sequence::ones(12)) ==
        Sequence{1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28});
  CHECK(per_transform(Sequence{1, 3, 4, 7, 6, 12, 8, 15}) ==
        Sequence{1, 7, 13, 35, 31, 91, 57, 155});
}

TEST_CASE("per_transform rejects negative terms") {
  CHECK_THROWS_WITH_AS(per_transform(Sequence{1, 2, -1, 4}),
                       doctest::Contains("index 3"), std::domain_error);
}

TEST_CASE("orbit_transform fixed prefixes") {
  const ERVerdict doubling = orbit_transform(Sequence{2, 4, 8, 16, 32, 64});
  REQUIRE(doubling.pass);
  CHECK(doubling.orbit_counts == Sequence{2, 1, 2, 3, 6, 9});

  const ERVerdict lucas = orbit_transform(Sequence{1, 3, 4, 7, 11, 18});
  REQUIRE(lucas.pass);
  CHECK(lucas.orbit_counts == Sequence{1, 1, 1, 1, 2, 2});

  const ERVerdict fibonacci = orbit_transform(Sequence{1, 1, 2, 3, 5, 8});
  REQUIRE_FALSE(fibonacci.pass);
  CHECK(fibonacci.witness->index == 3);
  CHECK(fibonacci.witness->reason == FailReason::not_divisible);
  CHECK(fibonacci.witness->mobius_sum == 1);
}

TEST_CASE("check_er verdicts") {
  SUBCASE("ten Lucas terms pass") {
    const ERVerdict v = check_er(Sequence{1, 3, 4, 7, 11, 18, 29, 47, 76, 123});
    REQUIRE(v.pass);
    CHECK(v.orbit_counts == Sequence{1, 1, 1, 1, 2, 2, 4, 5, 8, 11});
    CHECK_FALSE(v.witness.has_value());
  }
  SUBCASE("central binomial coefficients pass") {
    const ERVerdict v = check_er(Sequence{2, 6, 20, 70, 252, 924});
    REQUIRE(v.pass);
    CHECK(v.orbit_counts == Sequence{2, 2, 6, 16, 50, 150});
  }
  SUBCASE("all-zero passes as the empty map") {
    const ERVerdict v = check_er(Sequence::zeros(8));
    REQUIRE(v.pass);
    CHECK(v.orbit_counts == Sequence::zeros(8));
  }
  SUBCASE("empty prefix passes vacuously") { CHECK(check_er(Sequence{}).pass); }
  SUBCASE("negative first term fails with reason negative at n=1") {
    const ERVerdict v = check_er(Sequence{-1, 2, 3});
    REQUIRE_FALSE(v.pass);
    CHECK(v.witness->index == 1);
    CHECK(v.witness->reason == FailReason::negative);
    CHECK(v.witness->mobius_sum == -1);
  }
  SUBCASE("non-negativity is reported before divisibility") {
    // s_2 = -4 is both negative and not divisible by 2... pick s_2 = -3:
    // a = (4, 1): s_2 = 1 - 4 = -3, negative wins over not-divisible.
    const ERVerdict v = check_er(Sequence{4, 1});
    REQUIRE_FALSE(v.pass);
    CHECK(v.witness->index == 2);
    CHECK(v.witness->reason == FailReason::negative);
  }
}

TEST_CASE("least_period_counts fixed prefixes") {
  CHECK(least_period_counts(Sequence::ones(6)) == Sequence{1, 0, 0, 0, 0, 0});
  CHECK(least_period_counts(Sequence{2, 6, 20, 70}) == Sequence{2, 4, 18, 64});
  CHECK(least_period_counts(Sequence{1, 3, 4, 7, 11, 18}) == Sequence{1, 2, 3, 4, 10, 12});
}

TEST_CASE("sum_over_divisors inverts least_period_counts") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> term_dist(-50, 50);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Integer> terms(40);
    for (Integer& t : terms) t = Integer(term_dist(rng));
    const Sequence a(std::move(terms));
    CHECK(least_period_counts(sum_over_divisors(a)) == a);
    CHECK(sum_over_divisors(least_period_counts(a)) == a);
  }
}

TEST_CASE("iterate_per reproduces the first table rows") {
  const auto rows = iterate_per(Sequence::delta(10), 4);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == Sequence{1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(rows[1] == Sequence::ones(10));
  CHECK(rows[2] == Sequence{1, 3, 4, 7, 6, 12, 8, 15, 13, 18});
  CHECK(rows[3] == Sequence{1, 7, 13, 35, 31, 91, 57, 155, 130, 217});
  CHECK(rows[4] == Sequence{1, 15, 40, 155, 156, 600, 400, 1395, 1210, 2340});
}

TEST_CASE("iterate_per column laws") {
  const auto rows = iterate_per(Sequence::delta(6), 6);
  Integer two_power = 1, three_power = 1;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].at(1) == 1);
    CHECK(rows[k].at(2) == two_power - 1);
    CHECK(rows[k].at(3) == (three_power - 1) / 2);
    two_power *= 2;
    three_power *= 3;
  }
  CHECK_THROWS_AS(iterate_per(Sequence::delta(4), 0), std::domain_error);
}

TEST_CASE("round trip: orbit_transform after per_transform is the identity") {
  std::mt19937_64 rng(123456);
  for (int trial = 0; trial < 200; ++trial) {
    const Sequence orbits = random_orbit_counts(rng, 64, ~0ull);
    const ERVerdict back = orbit_transform(per_transform(orbits));
    REQUIRE(back.pass);
    CHECK(back.orbit_counts == orbits);
  }
}

TEST_CASE("round trip: sequences passing check_er are reproduced exactly") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Sequence f = per_transform(random_orbit_counts(rng, 40, 1000));
    const ERVerdict v = check_er(f);
    REQUIRE(v.pass);
    CHECK(per_transform(v.orbit_counts) == f);
  }
}

TEST_CASE("prime identity: per(o)_p = o_1 + p * o_p") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 50; ++trial) {
    const Sequence o = random_orbit_counts(rng, 60, 10'000);
    const Sequence f = per_transform(o);
    for (std::size_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59}) {
      if (p > o.size()) break;
      CHECK(f.at(p) == o.at(1) + Integer(static_cast<unsigned long>(p)) * o.at(p));
    }
  }
}

TEST_CASE("prime congruence a_p = a_1 mod p for passing prefixes") {
  std::mt19937_64 rng(31415);
  for (int trial = 0; trial < 50; ++trial) {
    const Sequence f = per_transform(random_orbit_counts(rng, 50, 1000));
    for (std::size_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
      if (p > f.size()) break;
      Integer diff = f.at(p) - f.at(1);
      CHECK(mpz_divisible_ui_p(diff.get_mpz_t(), p));
    }
  }
}

TEST_CASE("monotone consistency: fstar_n <= a_n on passing prefixes") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 50; ++trial) {
    const Sequence f = per_transform(random_orbit_counts(rng, 48, 5000));
    const Sequence fstar = least_period_counts(f);
    for (std::size_t n = 1; n <= f.size(); ++n) CHECK(fstar.at(n) <= f.at(n));
  }
}

TEST_CASE("parallel kernels agree with the serial references") {
  std::mt19937_64 rng(8080);
  std::uniform_int_distribution<long> term_dist(-1000, 1000);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Integer> raw(300);
    for (Integer& t : raw) t = Integer(term_dist(rng));
    const Sequence any(std::move(raw));
    CHECK(least_period_counts(any) == serial::least_period_counts(any));
    CHECK(sum_over_divisors(any) == serial::sum_over_divisors(any));

    const Sequence orbits = random_orbit_counts(rng, 300, 1'000'000);
    CHECK(per_transform(orbits) == serial::per_transform(orbits));
  }
}

TEST_CASE("per_term evaluates a single index") {
  CHECK(per_term(Sequence::ones(12), 12) == 28);  // sigma(12)
  CHECK(mobius_sum_term(Sequence{1, 3, 4, 7, 11, 18}, 6) == 12);
}
