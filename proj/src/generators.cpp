#include "erseq/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "erseq/detail/divisor_walk.hpp"

namespace erseq {

namespace {

struct SquareMatrix {
  std::size_t dim = 0;
  std::vector<Integer> e;  // row-major

  static SquareMatrix identity(std::size_t dim) {
    SquareMatrix m{dim, std::vector<Integer>(dim * dim, Integer(0))};
    for (std::size_t i = 0; i < dim; ++i) m.e[i * dim + i] = 1;
    return m;
  }

  const Integer& at(std::size_t i, std::size_t j) const { return e[i * dim + j]; }
  Integer& at(std::size_t i, std::size_t j) { return e[i * dim + j]; }

  SquareMatrix operator*(const SquareMatrix& rhs) const {
    SquareMatrix out{dim, std::vector<Integer>(dim * dim, Integer(0))};
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        const Integer& left = at(i, k);
        if (left == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) out.at(i, j) += left * rhs.at(k, j);
      }
    return out;
  }

  Integer trace() const {
    Integer t = 0;
    for (std::size_t i = 0; i < dim; ++i) t += at(i, i);
    return t;
  }
};

// Fraction-free Bareiss elimination; every division is exact.
Integer bareiss_determinant(SquareMatrix m) {
  const std::size_t dim = m.dim;
  if (dim == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < dim && m.at(swap_row, k) == 0) ++swap_row;
      if (swap_row == dim) return 0;
      for (std::size_t j = 0; j < dim; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < dim; ++i) {
      for (std::size_t j = k + 1; j < dim; ++j) {
        Integer v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = v;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(dim - 1, dim - 1) : -m.at(dim - 1, dim - 1);
}

SquareMatrix to_square(const MatrixSpec& spec) {
  return SquareMatrix{spec.dim(), spec.entries()};
}

Integer det_minus_identity(const SquareMatrix& m) {
  SquareMatrix shifted = m;
  for (std::size_t i = 0; i < m.dim; ++i) shifted.at(i, i) -= 1;
  return bareiss_determinant(std::move(shifted));
}

// a^(k)_n = sum of divisors d of n with d == 1 or d > k.
Integer named_r_term(std::uint64_t n, std::uint64_t k) {
  Integer sum = 0;
  detail::for_each_divisor(n, [&](std::uint64_t d) {
    if (d == 1 || d > k) sum += static_cast<unsigned long>(d);
  });
  return sum;
}

unsigned long checked_ulong(const Integer& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p())
    throw std::domain_error(std::string(what) + " out of supported range");
  return v.get_ui();
}

}  // namespace

MatrixSpec::MatrixSpec(std::size_t dim, std::vector<Integer> row_major, MatrixKind kind)
    : dim_(dim), entries_(std::move(row_major)), kind_(kind) {
  if (dim_ == 0) throw std::invalid_argument("MatrixSpec: dimension must be >= 1");
  if (entries_.size() != dim_ * dim_)
    throw std::invalid_argument("MatrixSpec: expected " + std::to_string(dim_ * dim_) +
                                " entries, got " + std::to_string(entries_.size()));
  if (kind_ == MatrixKind::nonneg) {
    for (const Integer& v : entries_)
      if (v < 0) throw std::invalid_argument("MatrixSpec: nonneg matrix has a negative entry");
  } else {
    const Integer det = determinant();
    if (det != 1 && det != -1)
      throw std::invalid_argument("MatrixSpec: invertible matrix must have determinant +-1, got " +
                                  det.get_str());
  }
}

Integer MatrixSpec::determinant() const { return bareiss_determinant(to_square(*this)); }

Sequence gen_sft_trace(const MatrixSpec& m, std::size_t n_terms) {
  if (m.kind() != MatrixKind::nonneg)
    throw std::invalid_argument("gen_sft_trace: matrix kind must be nonneg");
  std::vector<Integer> out;
  out.reserve(n_terms);
  SquareMatrix power = to_square(m);
  const SquareMatrix base = to_square(m);
  for (std::size_t n = 1; n <= n_terms; ++n) {
    out.push_back(power.trace());
    if (n < n_terms) power = power * base;
  }
  return Sequence(std::move(out));
}

std::vector<Integer> gen_toral_det_signed(const MatrixSpec& m, std::size_t n_terms) {
  if (m.kind() != MatrixKind::invertible)
    throw std::invalid_argument("gen_toral_det_signed: matrix kind must be invertible");
  std::vector<Integer> out;
  out.reserve(n_terms);
  SquareMatrix power = to_square(m);
  const SquareMatrix base = to_square(m);
  for (std::size_t n = 1; n <= n_terms; ++n) {
    out.push_back(det_minus_identity(power));
    if (n < n_terms) power = power * base;
  }
  return out;
}

Sequence gen_toral_det(const MatrixSpec& m, std::size_t n_terms) {
  std::vector<Integer> signed_dets = gen_toral_det_signed(m, n_terms);
  for (std::size_t n = 1; n <= signed_dets.size(); ++n) {
    if (signed_dets[n - 1] == 0)
      throw std::domain_error("gen_toral_det: det(A^n - I) vanishes at n = " + std::to_string(n) +
                              "; the matrix has an eigenvalue that is a root of unity");
    mpz_abs(signed_dets[n - 1].get_mpz_t(), signed_dets[n - 1].get_mpz_t());
  }
  return Sequence(std::move(signed_dets));
}

BinomialSpec::BinomialSpec(Integer k_in, Integer j_in) : k(std::move(k_in)), j(std::move(j_in)) {
  if (k <= 1) throw std::invalid_argument("BinomialSpec: k must be > 1");
  if (j < 1 || j >= k) throw std::invalid_argument("BinomialSpec: j must satisfy 1 <= j < k");
}

Sequence gen_binomial(const BinomialSpec& b, std::size_t n_terms) {
  const unsigned long k = checked_ulong(b.k, "gen_binomial: k");
  const unsigned long j = checked_ulong(b.j, "gen_binomial: j");
  std::vector<Integer> out;
  out.reserve(n_terms);
  for (std::size_t n = 1; n <= n_terms; ++n) {
    Integer v;
    mpz_bin_uiui(v.get_mpz_t(), k * n, j * n);
    out.push_back(std::move(v));
  }
  return Sequence(std::move(out));
}

SIntegerSpec::SIntegerSpec(Rational xi, std::vector<Integer> s_primes)
    : xi_(std::move(xi)), s_primes_(std::move(s_primes)) {
  xi_.canonicalize();
  if (xi_ == 0) throw std::invalid_argument("SIntegerSpec: xi must be nonzero");
  if (xi_ == 1 || xi_ == -1) throw std::invalid_argument("SIntegerSpec: |xi| must differ from 1");
  for (const Integer& p : s_primes_)
    if (!is_prime(p))
      throw std::invalid_argument("SIntegerSpec: S contains the non-prime " + p.get_str());
  std::sort(s_primes_.begin(), s_primes_.end());
  s_primes_.erase(std::unique(s_primes_.begin(), s_primes_.end()), s_primes_.end());
  // Admissibility: |xi|_p > 1 exactly for the primes dividing the denominator.
  for (const auto& [p, e] : factorize(xi_.get_den())) {
    (void)e;
    if (!std::binary_search(s_primes_.begin(), s_primes_.end(), p))
      throw std::invalid_argument("SIntegerSpec: |xi|_p > 1 for p = " + p.get_str() +
                                  ", which is missing from S");
  }
}

Sequence gen_s_integer_connected(const SIntegerSpec& s, std::size_t n_terms) {
  std::vector<Integer> out;
  out.reserve(n_terms);
  Rational xi_power(1);
  for (std::size_t n = 1; n <= n_terms; ++n) {
    xi_power *= s.xi();
    Rational x = xi_power - 1;
    if (x == 0)
      throw std::domain_error("gen_s_integer_connected: xi^n = 1 at n = " + std::to_string(n));
    // |x|_infinity * prod_{p in S} p^(-v_p(x)), with v_p(x) = v_p(num) - v_p(den).
    Rational value = abs(x);
    for (const Integer& p : s.s_primes()) {
      const long v_num = static_cast<long>(padic_valuation(x.get_num(), p));
      const long v_den = static_cast<long>(padic_valuation(x.get_den(), p));
      const long v = v_num - v_den;
      Integer scale;
      mpz_pow_ui(scale.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
      if (v < 0)
        value *= scale;
      else
        value /= scale;
      value.canonicalize();
    }
    if (value.get_den() != 1 || value <= 0)
      throw std::domain_error("gen_s_integer_connected: product of valuations at n = " +
                              std::to_string(n) + " is not a positive integer (" +
                              value.get_str() + "); the S-integer data is inadmissible");
    out.push_back(value.get_num());
  }
  return Sequence(std::move(out));
}

Sequence gen_s_integer_zero_dim_example(std::size_t n_terms) {
  std::vector<Integer> out;
  out.reserve(n_terms);
  for (std::uint64_t n = 1; n <= n_terms; ++n) {
    const std::uint64_t low_bit = n & (~n + 1);  // 2^(2-adic valuation of n)
    Integer v = 1;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), n - low_bit);
    out.push_back(std::move(v));
  }
  return Sequence(std::move(out));
}

Sequence gen_named(NamedKind kind, const std::optional<Integer>& param, std::size_t n_terms) {
  const auto require_param = [&](const char* what) -> const Integer& {
    if (!param) throw std::invalid_argument(std::string("gen_named: ") + what + " needs a parameter");
    return *param;
  };
  const auto forbid_param = [&](const char* what) {
    if (param) throw std::invalid_argument(std::string("gen_named: ") + what + " takes no parameter");
  };

  std::vector<Integer> out;
  out.reserve(n_terms);
  switch (kind) {
    case NamedKind::constant: {
      const Integer& c = require_param("constant");
      if (c < 0) throw std::domain_error("gen_named: constant must be >= 0");
      out.assign(n_terms, c);
      break;
    }
    case NamedKind::power: {
      const Integer& c = require_param("power");
      if (c < 0) throw std::domain_error("gen_named: power base must be >= 0");
      Integer v = 1;
      for (std::size_t n = 1; n <= n_terms; ++n) {
        v *= c;
        out.push_back(v);
      }
      break;
    }
    case NamedKind::r_k: {
      const unsigned long k = checked_ulong(require_param("r_k"), "gen_named: r_k parameter");
      if (k < 1) throw std::domain_error("gen_named: r_k parameter must be >= 1");
      for (std::uint64_t n = 1; n <= n_terms; ++n) out.push_back(named_r_term(n, k));
      break;
    }
    case NamedKind::r_product: {
      forbid_param("r_product");
      for (std::uint64_t n = 1; n <= n_terms; ++n) {
        // Factors with k >= n equal 1, so the product is finite.
        Integer v = 1;
        for (std::uint64_t k = 1; k < n; ++k) v *= named_r_term(n, k);
        out.push_back(std::move(v));
      }
      break;
    }
    case NamedKind::alt_prime: {
      forbid_param("alt_prime");
      for (std::size_t n = 1; n <= n_terms; ++n) out.push_back(n % 2 == 0 ? 3 : 1);
      break;
    }
  }
  return Sequence(std::move(out));
}

const RProductDiscrepancy& r_product_discrepancy() {
  static const RProductDiscrepancy note{
      4, Integer(175), Integer(245),
      "r_product index 4: direct evaluation of the r^(k) definition gives "
      "a^(1)_4 * a^(2)_4 * a^(3)_4 = 7 * 5 * 5 = 175, while the published "
      "prefix (1, 3, 16, 245, 1296, 41160, ...) prints 245 there; the "
      "neighbouring terms 3, 16, 1296 and 41160 all agree with the "
      "definition. The generator computes from the definition."};
  return note;
}

}  // namespace erseq
