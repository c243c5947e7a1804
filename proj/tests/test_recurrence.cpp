#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "erseq/recurrence.hpp"

using namespace erseq;

TEST_CASE("eval_recurrence") {
  CHECK(eval_recurrence(RecurrenceSpec(1, 1, 1, 3), 6) == Sequence{1, 3, 4, 7, 11, 18});
  CHECK(eval_recurrence(RecurrenceSpec(1, 1, 1, 1), 6) == Sequence{1, 1, 2, 3, 5, 8});
  CHECK(eval_recurrence(RecurrenceSpec(3, -2, 3, 5), 5) == Sequence{3, 5, 9, 17, 33});
  CHECK_THROWS_AS(eval_recurrence(RecurrenceSpec(1, 1, 1, 1), 1), std::domain_error);
  CHECK_THROWS_AS(RecurrenceSpec(1, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("spec derived quantities") {
  const RecurrenceSpec fib(1, 1, 1, 1);
  CHECK(fib.discriminant() == 5);
  CHECK(fib.common_factor() == 1);
  CHECK(RecurrenceSpec(2, 1, 1, 1).common_factor() == 2);  // gcd(2, 6)
}

TEST_CASE("classify: Fibonacci is refused with witness prime 3") {
  const RecurrenceVerdict v = classify(RecurrenceSpec(1, 1, 1, 1), 12);
  CHECK(v.applicability == Applicability::theorem_applies);
  REQUIRE(v.decision.has_value());
  CHECK(*v.decision == Decision::not_in_er);
  REQUIRE(v.witness_prime.has_value());
  CHECK(*v.witness_prime == 3);
  CHECK_FALSE(v.witness_search_capped);
  CHECK_FALSE(v.empirical.pass);
  CHECK(v.empirical.witness->index == 3);
}

TEST_CASE("classify: doubled Lucas is accepted") {
  const RecurrenceVerdict v = classify(RecurrenceSpec(1, 1, 2, 6), 24);
  CHECK(v.applicability == Applicability::theorem_applies);
  REQUIRE(v.decision.has_value());
  CHECK(*v.decision == Decision::in_er);
  CHECK_FALSE(v.witness_prime.has_value());
  CHECK(v.empirical.pass);
}

TEST_CASE("classify: square discriminant defers to the empirical verdict") {
  const RecurrenceVerdict v = classify(RecurrenceSpec(1, 2, 1, 5), 12);  // delta = 9
  CHECK(v.applicability == Applicability::square_discriminant);
  CHECK_FALSE(v.decision.has_value());
  CHECK(v.empirical.pass);

  // The Mersenne recurrence u_{n+2} = 3u_{n+1} - 2u_n has delta = 1.
  const RecurrenceVerdict m = classify(RecurrenceSpec(3, -2, 3, 5), 12);
  CHECK(m.applicability == Applicability::square_discriminant);
  CHECK(m.empirical.pass);
}

TEST_CASE("classify: common factor defers to the empirical verdict") {
  const RecurrenceVerdict v = classify(RecurrenceSpec(2, 1, 1, 1), 12);  // delta = 8, g = 2
  CHECK(v.applicability == Applicability::common_factor);
  CHECK_FALSE(v.decision.has_value());
}

TEST_CASE("a=b=1 family: in ER exactly when u2 = 3 u1") {
  for (unsigned long u1 = 1; u1 <= 6; ++u1) {
    for (unsigned long u2 = 1; u2 <= 19; ++u2) {
      const RecurrenceVerdict v = classify(RecurrenceSpec(1, 1, u1, u2), 30);
      CHECK(v.applicability == Applicability::theorem_applies);
      REQUIRE(v.decision.has_value());
      const bool expected_in = (u2 == 3 * u1);
      CHECK((*v.decision == Decision::in_er) == expected_in);
      if (expected_in) CHECK(v.empirical.pass);
    }
  }
}

TEST_CASE("ratio families") {
  CHECK(ratio_family(RatioFamily::jacobsthal, 1, 0, 4) == Sequence{1, 5, 7, 17});
  CHECK(ratio_family(RatioFamily::jacobsthal, 0, 1, 4) == Sequence{3, 3, 9, 15});
  CHECK(ratio_family(RatioFamily::mersenne, 1, 1, 4) == Sequence{3, 5, 9, 17});
  CHECK_THROWS_AS(ratio_family(RatioFamily::mersenne, 0, 0, 4), std::domain_error);
  CHECK_THROWS_AS(ratio_family(RatioFamily::mersenne, -1, 2, 4), std::domain_error);
}

TEST_CASE("ratio family members stay realizable and satisfy their recurrences") {
  for (long t = 0; t <= 5; ++t) {
    for (long s = 0; s <= 5; ++s) {
      if (t == 0 && s == 0) continue;
      const Sequence jac = ratio_family(RatioFamily::jacobsthal, t, s, 30);
      const Sequence mer = ratio_family(RatioFamily::mersenne, t, s, 30);
      CHECK(check_er(jac).pass);
      CHECK(check_er(mer).pass);
      for (std::size_t n = 1; n + 2 <= 30; ++n) {
        CHECK(jac.at(n + 2) == jac.at(n + 1) + 2 * jac.at(n));
        CHECK(mer.at(n + 2) == 3 * mer.at(n + 1) - 2 * mer.at(n));
      }
    }
  }
}

TEST_CASE("realized initial ratios are distinct across coprime (t, s)") {
  std::set<Rational> jacobsthal_ratios;
  std::set<Rational> mersenne_ratios;
  std::size_t coprime_pairs = 0;
  for (unsigned long t = 1; t <= 10; ++t) {
    for (unsigned long s = 1; s <= 10; ++s) {
      Integer g;
      mpz_gcd_ui(g.get_mpz_t(), Integer(t).get_mpz_t(), s);
      if (g != 1) continue;
      ++coprime_pairs;
      const Sequence jac = ratio_family(RatioFamily::jacobsthal, t, s, 2);
      const Sequence mer = ratio_family(RatioFamily::mersenne, t, s, 2);
      Rational rj(jac.at(2), jac.at(1));
      rj.canonicalize();
      Rational rm(mer.at(2), mer.at(1));
      rm.canonicalize();
      Rational expected_j(5 * t + 3 * s, t + 3 * s);
      expected_j.canonicalize();
      Rational expected_m(4 * t + s, 2 * t + s);
      expected_m.canonicalize();
      CHECK(rj == expected_j);
      CHECK(rm == expected_m);
      jacobsthal_ratios.insert(rj);
      mersenne_ratios.insert(rm);
    }
  }
  CHECK(jacobsthal_ratios.size() == coprime_pairs);
  CHECK(mersenne_ratios.size() == coprime_pairs);
}

TEST_CASE("theorem acceptance implies the empirical check passes") {
  std::mt19937_64 rng(112233);
  std::uniform_int_distribution<long> ab_dist(1, 20);
  std::uniform_int_distribution<long> scale_dist(1, 5);
  int tested = 0;
  while (tested < 200) {
    const Integer a = ab_dist(rng);
    const Integer b = ab_dist(rng);
    const Integer delta = a * a + 4 * b;
    if (mpz_perfect_square_p(delta.get_mpz_t())) continue;
    const Integer ratio_num = a * a + 2 * b;
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), ratio_num.get_mpz_t());
    if (g != 1) continue;
    const Integer m = scale_dist(rng);
    const RecurrenceVerdict v = classify(RecurrenceSpec(a, b, a * m, ratio_num * m), 24);
    CHECK(v.applicability == Applicability::theorem_applies);
    REQUIRE(v.decision.has_value());
    CHECK(*v.decision == Decision::in_er);
    CHECK(v.empirical.pass);
    ++tested;
  }
}
