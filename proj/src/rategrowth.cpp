#include "erseq/rategrowth.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "erseq/detail/divisor_walk.hpp"
#include "erseq/transforms.hpp"

namespace erseq {

namespace {

Integer pow_ui(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Integer ceil_q(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Dyadic bracket lo <= B^(1/v) <= hi with hi - lo = 2^-s, via one integer root.
struct Bracket {
  Rational lo;
  Rational hi;
};

Bracket root_bracket(const Integer& base, unsigned long v, unsigned long s) {
  Integer scaled = base;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), v * s);
  const Integer t = integer_root(scaled, v);
  Integer denom = 1;
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), s);
  Rational lo(t, denom);
  Rational hi(t + 1, denom);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

// ceil(J_alpha(n)/n) = ceil(n^(alpha-1) * prod_{p|n} (1 - p^-alpha)), exact.
Integer ceil_jordan_ratio(std::uint64_t n, const Integer& u, const Integer& v_int) {
  if (n == 1) return 1;  // empty product
  const unsigned long u_ul = u.get_ui();
  const unsigned long v_ul = v_int.get_ui();
  const auto factors = factor_u64(n);
  const Integer n_int(static_cast<unsigned long>(n));

  if (v_ul == 1) {
    // Integer exponent: plain rational arithmetic.
    Rational value(pow_ui(n_int, u_ul - 1));
    for (const auto& [p, e] : factors) {
      (void)e;
      const Integer pa = pow_ui(Integer(static_cast<unsigned long>(p)), u_ul);
      value *= Rational(pa - 1, pa);
      value.canonicalize();
    }
    return ceil_q(value);
  }

  // Fractional exponent u/v: bracket each v-th root with exact dyadic bounds
  // and refine until the ceiling is unambiguous. For n >= 2 the value is
  // irrational, so this terminates.
  for (unsigned long s = 32; s <= 4096; s *= 2) {
    Bracket x = root_bracket(pow_ui(n_int, u_ul - v_ul), v_ul, s);
    for (const auto& [p, e] : factors) {
      (void)e;
      const Bracket y = root_bracket(pow_ui(Integer(static_cast<unsigned long>(p)), u_ul), v_ul, s);
      // 1 - 1/y is increasing in y, and y > 2 here.
      x.lo *= (y.lo - 1) / y.lo;
      x.hi *= (y.hi - 1) / y.hi;
      x.lo.canonicalize();
      x.hi.canonicalize();
    }
    const Integer c_lo = ceil_q(x.lo);
    const Integer c_hi = ceil_q(x.hi);
    if (c_lo == c_hi) return c_lo;
  }
  throw std::runtime_error("rr_construct_power: ceiling did not stabilise at n = " +
                           std::to_string(n));
}

void require_positive_rational(const Rational& q, const char* what) {
  if (q <= 0) throw std::domain_error(std::string(what) + " must be positive");
}

}  // namespace

Integer RateTarget::value_at(std::uint64_t n) const {
  require_positive_rational(parameter, "RateTarget parameter");
  const Integer num = parameter.get_num();
  const Integer den = parameter.get_den();
  if (kind == Kind::power) {
    // floor(n^(u/v)) = floor((n^u)^(1/v))
    const Integer base = pow_ui(Integer(static_cast<unsigned long>(n)), num.get_ui());
    return integer_root(base, den.get_ui());
  }
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), pow_ui(num, n).get_mpz_t(), pow_ui(den, n).get_mpz_t());
  return out;
}

Integer jordan_totient(std::uint64_t n, unsigned long alpha) {
  if (n == 0 || alpha == 0) throw std::domain_error("jordan_totient: need n >= 1, alpha >= 1");
  Integer out = 1;
  for (const auto& [p, e] : factor_u64(n)) {
    const Integer pa = pow_ui(Integer(static_cast<unsigned long>(p)), alpha);
    out *= pow_ui(pa, e - 1) * (pa - 1);
  }
  return out;
}

Sequence power_orbit_counts(const Rational& alpha, std::size_t n_terms) {
  if (alpha <= 1)
    throw std::domain_error("rr_construct_power: alpha must exceed 1 (floor(n^alpha) is not "
                            "realizable in rate otherwise)");
  const Integer u = alpha.get_num();
  const Integer v = alpha.get_den();
  const std::int64_t count = static_cast<std::int64_t>(n_terms);
  std::vector<Integer> orbits(n_terms);
  std::atomic<bool> failed{false};
  std::string failure;
#pragma omp parallel for schedule(dynamic, 64) if (count > 512)
  for (std::int64_t n = 1; n <= count; ++n) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      orbits[n - 1] = ceil_jordan_ratio(static_cast<std::uint64_t>(n), u, v);
    } catch (const std::exception& e) {
#pragma omp critical
      {
        failed.store(true, std::memory_order_relaxed);
        failure = e.what();
      }
    }
  }
  if (failed.load()) throw std::runtime_error(failure);
  return Sequence(std::move(orbits));
}

RateRealization rr_construct_power(const Rational& alpha, std::size_t n_terms) {
  Sequence o = power_orbit_counts(alpha, n_terms);
  Sequence f = per_transform(o);
  return {std::move(o), std::move(f)};
}

RateRealization rr_construct_geometric(const Rational& beta, std::size_t n_terms) {
  if (beta < 1)
    throw std::domain_error("rr_construct_geometric: beta must be >= 1 (floor(beta^n) is "
                            "eventually zero otherwise)");
  const Integer num = beta.get_num();
  const Integer den = beta.get_den();
  std::vector<Integer> orbits(n_terms);
  for (std::uint64_t n = 1; n <= n_terms; ++n) {
    Integer target;
    mpz_fdiv_q(target.get_mpz_t(), pow_ui(num, n).get_mpz_t(), pow_ui(den, n).get_mpz_t());
    Integer partial = 0;
    detail::for_each_divisor(n, [&](std::uint64_t d) {
      if (d < n) partial += orbits[d - 1] * static_cast<unsigned long>(d);
    });
    const Integer deficit = target - partial;
    if (deficit > 0) {
      Integer o;
      mpz_cdiv_q_ui(o.get_mpz_t(), deficit.get_mpz_t(), static_cast<unsigned long>(n));
      orbits[n - 1] = std::move(o);
    } else {
      orbits[n - 1] = 0;
    }
  }
  Sequence o(std::move(orbits));
  Sequence f = per_transform(o);
  return {std::move(o), std::move(f)};
}

SlowGrowthDiagnosis check_slow_growth_obstruction(const Sequence& phi) {
  SlowGrowthDiagnosis d;
  d.note = "finite-scale diagnostic on the given prefix only";
  const std::size_t n_terms = phi.size();
  if (n_terms < 2) return d;

  const std::size_t head_end = std::min<std::size_t>(n_terms, std::max<std::size_t>(10, n_terms / 100));
  Integer head_max = phi.at(1);
  for (std::size_t n = 2; n <= head_end; ++n)
    if (phi.at(n) > head_max) head_max = phi.at(n);

  const std::size_t tail_begin = n_terms / 2 + 1;
  Integer tail_max = phi.at(tail_begin);
  Rational ratio_max(phi.at(tail_begin), Integer(static_cast<unsigned long>(tail_begin)));
  ratio_max.canonicalize();
  for (std::size_t n = tail_begin + 1; n <= n_terms; ++n) {
    if (phi.at(n) > tail_max) tail_max = phi.at(n);
    Rational r(phi.at(n), Integer(static_cast<unsigned long>(n)));
    r.canonicalize();
    if (r > ratio_max) ratio_max = r;
  }

  d.head_max = head_max;
  d.tail_max = tail_max;
  d.tail_ratio_max = ratio_max;

  // (a) on the tail, phi_n/n <= 1/2: a realizer tracking phi at ratio ~1
  //     would need f*_n = 0 there, so f would be bounded by its early values;
  // (b) the tail still escapes the early values, which a bounded f cannot do.
  const bool tail_starved = ratio_max <= Rational(1, 2);
  Integer escape_bar = head_max < 1 ? Integer(1) : head_max;
  const bool escapes = tail_max > 2 * escape_bar;
  d.obstructed = tail_starved && escapes;
  return d;
}

Sequence gen_pathological_orbit_growth(std::size_t K) {
  if (K < 2) throw std::domain_error("gen_pathological_orbit_growth: K must be >= 2");
  if (K > 128)
    throw std::length_error("gen_pathological_orbit_growth: terms reach 2^(K^3); K capped at 128");

  std::vector<Integer> fstar(K);
  for (std::uint64_t k = 1; k <= K; ++k) {
    Integer v = 1;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), k * k * k);
    fstar[k - 1] = v * static_cast<unsigned long>(k);
  }

  // Overrides at n_r = p_r * p_{r+1}: within block m (sizes 1, 2, 3, ...)
  // position j gives f*_{n_r} = n_r * 2^(j * n_r).
  PrimeSieve sieve;
  std::size_t block = 1;
  std::size_t position = 1;
  for (std::size_t r = 1;; ++r) {
    const std::uint64_t n_r = sieve.nth(r) * sieve.nth(r + 1);
    if (n_r > K) break;
    Integer v = 1;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), position * n_r);
    fstar[n_r - 1] = v * static_cast<unsigned long>(n_r);
    if (position == block) {
      ++block;
      position = 1;
    } else {
      ++position;
    }
  }
  return Sequence(std::move(fstar));
}

GrowthReport growth_report(const Sequence& f, const Rational& alpha) {
  for (std::size_t n = 1; n <= f.size(); ++n)
    if (f.at(n) <= 0)
      throw std::domain_error("growth_report: term at index " + std::to_string(n) +
                              " is not positive");
  GrowthReport report;
  report.alpha = alpha;
  const Sequence fstar = least_period_counts(f);
  report.rows.resize(f.size());
  const std::int64_t count = static_cast<std::int64_t>(f.size());
#pragma omp parallel for schedule(dynamic, 64) if (count > 256)
  for (std::int64_t n = 1; n <= count; ++n) {
    GrowthRow& row = report.rows[n - 1];
    row.n = static_cast<std::uint64_t>(n);
    row.f = f.at(n);
    row.fstar = fstar.at(n);
    const auto factors = factor_u64(static_cast<std::uint64_t>(n));
    if (factors.size() == 1) {
      row.prime = factors[0].second == 1;
      row.prime_power = factors[0].second >= 2;
    } else if (factors.size() == 2 && factors[0].second == 1 && factors[1].second == 1) {
      row.semiprime = true;
    }
  }
  return report;
}

int compare_power_ratio(const Integer& value, std::uint64_t n, const Rational& alpha,
                        const Rational& threshold) {
  if (n == 0) throw std::domain_error("compare_power_ratio: n must be >= 1");
  require_positive_rational(alpha, "compare_power_ratio: alpha");
  const unsigned long u = Integer(alpha.get_num()).get_ui();
  const unsigned long v = Integer(alpha.get_den()).get_ui();
  // sign of value/n^(u/v) - c/e == sign of X - c * n^(u/v) with X = value * e.
  const Integer c = threshold.get_num();
  const Integer x = value * threshold.get_den();
  if (c == 0) return sgn(x);
  const Integer n_pow = pow_ui(Integer(static_cast<unsigned long>(n)), u);
  if (c > 0) {
    if (x <= 0) return -1;
    return cmp(pow_ui(x, v), pow_ui(c, v) * n_pow);
  }
  if (x >= 0) return 1;
  return cmp(pow_ui(-c, v) * n_pow, pow_ui(-x, v));
}

std::string format_power_ratio(const Integer& value, std::uint64_t n, const Rational& alpha,
                               int places) {
  if (value < 0) return "-" + format_power_ratio(-value, n, alpha, places);
  require_positive_rational(alpha, "format_power_ratio: alpha");
  const unsigned long u = Integer(alpha.get_num()).get_ui();
  const unsigned long v = Integer(alpha.get_den()).get_ui();
  const Integer scale = pow_ui(Integer(10), static_cast<unsigned long>(places));
  // r = floor(value * 10^places / n^(u/v)): the largest r with r^v n^u <= A^v.
  const Integer a = value * scale;
  const Integer a_pow = pow_ui(a, v);
  const Integer n_pow = pow_ui(Integer(static_cast<unsigned long>(n)), u);
  Integer quotient;
  mpz_fdiv_q(quotient.get_mpz_t(), a_pow.get_mpz_t(), n_pow.get_mpz_t());
  Integer r = integer_root(quotient, v);
  while (pow_ui(r + 1, v) * n_pow <= a_pow) ++r;
  while (r > 0 && pow_ui(r, v) * n_pow > a_pow) --r;

  Integer whole, frac;
  mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), r.get_mpz_t(), scale.get_mpz_t());
  std::string frac_str = frac.get_str();
  frac_str.insert(0, static_cast<std::size_t>(places) - frac_str.size(), '0');
  return whole.get_str() + "." + frac_str;
}

std::string format_log_rate(const Integer& value, std::uint64_t n, int places) {
  if (value <= 0) throw std::domain_error("format_log_rate: value must be positive");
  signed long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  const double log_value = std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(places);
  os << log_value / static_cast<double>(n);
  return os.str();
}

namespace serial {

Sequence power_orbit_counts(const Rational& alpha, std::size_t n_terms) {
  if (alpha <= 1) throw std::domain_error("power_orbit_counts: alpha must exceed 1");
  std::vector<Integer> orbits(n_terms);
  for (std::uint64_t n = 1; n <= n_terms; ++n)
    orbits[n - 1] = ceil_jordan_ratio(n, alpha.get_num(), alpha.get_den());
  return Sequence(std::move(orbits));
}

}  // namespace serial

}  // namespace erseq
