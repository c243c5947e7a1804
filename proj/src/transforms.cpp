#include "erseq/transforms.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "erseq/detail/divisor_walk.hpp"

namespace erseq {

namespace {

void require_non_negative(const Sequence& s, const char* op) {
  for (std::size_t n = 1; n <= s.size(); ++n) {
    if (s.at(n) < 0)
      throw std::domain_error(std::string(op) + ": negative term at index " + std::to_string(n));
  }
}

}  // namespace

Integer per_term(const Sequence& a, std::size_t n) {
  Integer sum = 0;
  detail::for_each_divisor(n, [&](std::uint64_t d) {
    sum += a.at(d) * static_cast<unsigned long>(d);
  });
  return sum;
}

Integer mobius_sum_term(const Sequence& a, std::size_t n) {
  Integer sum = 0;
  detail::for_each_squarefree_divisor(n, [&](std::uint64_t m, int mu) {
    if (mu > 0)
      sum += a.at(n / m);
    else
      sum -= a.at(n / m);
  });
  return sum;
}

Sequence per_transform(const Sequence& orbit_counts) {
  require_non_negative(orbit_counts, "per_transform");
  const std::int64_t count = static_cast<std::int64_t>(orbit_counts.size());
  std::vector<Integer> out(orbit_counts.size());
#pragma omp parallel for schedule(dynamic, 16) if (count > 64)
  for (std::int64_t n = 1; n <= count; ++n)
    out[n - 1] = per_term(orbit_counts, static_cast<std::size_t>(n));
  return Sequence(std::move(out));
}

Sequence least_period_counts(const Sequence& a) {
  const std::int64_t count = static_cast<std::int64_t>(a.size());
  std::vector<Integer> out(a.size());
#pragma omp parallel for schedule(dynamic, 16) if (count > 64)
  for (std::int64_t n = 1; n <= count; ++n)
    out[n - 1] = mobius_sum_term(a, static_cast<std::size_t>(n));
  return Sequence(std::move(out));
}

Sequence sum_over_divisors(const Sequence& a) {
  const std::int64_t count = static_cast<std::int64_t>(a.size());
  std::vector<Integer> out(a.size());
#pragma omp parallel for schedule(dynamic, 16) if (count > 64)
  for (std::int64_t n = 1; n <= count; ++n) {
    Integer sum = 0;
    detail::for_each_divisor(static_cast<std::uint64_t>(n),
                             [&](std::uint64_t d) { sum += a.at(d); });
    out[n - 1] = sum;
  }
  return Sequence(std::move(out));
}

ERVerdict check_er(const Sequence& a) {
  const Sequence sums = least_period_counts(a);
  ERVerdict verdict;
  std::vector<Integer> orbits(a.size());
  for (std::size_t n = 1; n <= a.size(); ++n) {
    const Integer& s = sums.at(n);
    if (s < 0) {
      verdict.witness = Witness{n, s, FailReason::negative};
      return verdict;
    }
    if (!mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(n))) {
      verdict.witness = Witness{n, s, FailReason::not_divisible};
      return verdict;
    }
    orbits[n - 1] = s / static_cast<unsigned long>(n);
  }
  verdict.pass = true;
  verdict.orbit_counts = Sequence(std::move(orbits));
  return verdict;
}

ERVerdict orbit_transform(const Sequence& per_counts) { return check_er(per_counts); }

std::vector<Sequence> iterate_per(const Sequence& start, std::size_t steps) {
  if (steps < 1) throw std::domain_error("iterate_per: steps must be >= 1");
  require_non_negative(start, "iterate_per");
  std::vector<Sequence> rows;
  rows.reserve(steps + 1);
  rows.push_back(start);
  for (std::size_t k = 0; k < steps; ++k) rows.push_back(per_transform(rows.back()));
  return rows;
}

namespace serial {

Sequence per_transform(const Sequence& orbit_counts) {
  require_non_negative(orbit_counts, "per_transform");
  std::vector<Integer> out(orbit_counts.size());
  for (std::size_t n = 1; n <= orbit_counts.size(); ++n) {
    Integer sum = 0;
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) sum += orbit_counts.at(d) * static_cast<unsigned long>(d);
    out[n - 1] = sum;
  }
  return Sequence(std::move(out));
}

Sequence least_period_counts(const Sequence& a) {
  std::vector<Integer> out(a.size());
  for (std::size_t n = 1; n <= a.size(); ++n) {
    Integer sum = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const int mu = moebius(Integer(static_cast<unsigned long>(n / d)));
      if (mu > 0)
        sum += a.at(d);
      else if (mu < 0)
        sum -= a.at(d);
    }
    out[n - 1] = sum;
  }
  return Sequence(std::move(out));
}

Sequence sum_over_divisors(const Sequence& a) {
  std::vector<Integer> out(a.size());
  for (std::size_t n = 1; n <= a.size(); ++n) {
    Integer sum = 0;
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) sum += a.at(d);
    out[n - 1] = sum;
  }
  return Sequence(std::move(out));
}

}  // namespace serial

}  // namespace erseq
