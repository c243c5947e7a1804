#include "erseq/algebra.hpp"

#include <stdexcept>
#include <string>

#include "erseq/detail/divisor_walk.hpp"
#include "erseq/transforms.hpp"

namespace erseq {

namespace {

void require_same_length(const Sequence& a, const Sequence& b, const char* op) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(op) + ": length mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

// DFS state for the factorization search.
struct FactorSearch {
  const Sequence& a;
  std::size_t max_results;
  std::uint64_t node_budget;
  FactorizationResult result;
  std::vector<Integer> b;
  std::vector<Integer> c;

  // s_n = sum_{d|n} mu(n/d) x_d over the chosen prefix; every d | n has
  // already been assigned when index n is processed.
  bool congruence_holds(const std::vector<Integer>& x, std::size_t n) const {
    Integer sum = 0;
    detail::for_each_squarefree_divisor(n, [&](std::uint64_t m, int mu) {
      if (mu > 0)
        sum += x[n / m - 1];
      else
        sum -= x[n / m - 1];
    });
    return sum >= 0 && mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(n));
  }

  // equal_so_far: b and c agree on indices < n; used to emit each unordered
  // pair once (b <= c lexicographically).
  bool dfs(std::size_t n, bool equal_so_far) {
    if (n > a.size()) {
      result.pairs.emplace_back(Sequence(b), Sequence(c));
      if (result.pairs.size() >= max_results) {
        result.truncated = true;
        return false;
      }
      return true;
    }
    for (const Integer& divisor : divisors(a.at(n))) {
      if (result.nodes_visited >= node_budget) {
        result.complete = false;
        return false;
      }
      ++result.nodes_visited;
      Integer co = a.at(n) / divisor;
      if (equal_so_far && divisor > co) continue;
      b[n - 1] = divisor;
      c[n - 1] = co;
      if (!congruence_holds(b, n) || !congruence_holds(c, n)) continue;
      if (!dfs(n + 1, equal_so_far && divisor == co)) return false;
    }
    return true;
  }
};

}  // namespace

Sequence pointwise_add(const Sequence& a, const Sequence& b) {
  require_same_length(a, b, "pointwise_add");
  std::vector<Integer> out(a.size());
  for (std::size_t n = 1; n <= a.size(); ++n) out[n - 1] = a.at(n) + b.at(n);
  return Sequence(std::move(out));
}

Sequence pointwise_mul(const Sequence& a, const Sequence& b) {
  require_same_length(a, b, "pointwise_mul");
  std::vector<Integer> out(a.size());
  for (std::size_t n = 1; n <= a.size(); ++n) out[n - 1] = a.at(n) * b.at(n);
  return Sequence(std::move(out));
}

Sequence additive_convolution(const Sequence& a, const Sequence& b) {
  require_same_length(a, b, "additive_convolution");
  std::vector<Integer> out(a.size());
  for (std::size_t n = 1; n <= a.size(); ++n) {
    Integer sum = 0;
    for (std::size_t i = 1; i <= n; ++i) sum += a.at(i) * b.at(n + 1 - i);
    out[n - 1] = sum;
  }
  return Sequence(std::move(out));
}

Sequence dirichlet_convolution(const Sequence& a, const Sequence& b) {
  require_same_length(a, b, "dirichlet_convolution");
  std::vector<Integer> out(a.size());
  for (std::size_t n = 1; n <= a.size(); ++n) {
    Integer sum = 0;
    detail::for_each_divisor(n, [&](std::uint64_t d) { sum += a.at(d) * b.at(n / d); });
    out[n - 1] = sum;
  }
  return Sequence(std::move(out));
}

QuotientResult quotient_check(const Sequence& a, const Sequence& b) {
  require_same_length(a, b, "quotient_check");
  std::vector<Integer> out(a.size());
  for (std::size_t n = 1; n <= a.size(); ++n) {
    if (b.at(n) == 0)
      throw std::domain_error("quotient_check: division by zero at index " + std::to_string(n));
    if (!mpz_divisible_p(a.at(n).get_mpz_t(), b.at(n).get_mpz_t()))
      return QuotientResult{std::nullopt, n};
    out[n - 1] = a.at(n) / b.at(n);
  }
  return QuotientResult{Sequence(std::move(out)), std::nullopt};
}

FactorizationResult search_factorizations(const Sequence& a, std::size_t max_results,
                                          std::uint64_t node_budget) {
  for (std::size_t n = 1; n <= a.size(); ++n)
    if (a.at(n) < 1)
      throw std::domain_error("search_factorizations: term at index " + std::to_string(n) +
                              " is not positive");
  if (!check_er(a).pass)
    throw std::domain_error("search_factorizations: input fails the realizability congruence");
  if (max_results == 0) return {};

  FactorSearch search{a, max_results, node_budget, {}, std::vector<Integer>(a.size()),
                      std::vector<Integer>(a.size())};
  search.dfs(1, true);
  return std::move(search.result);
}

std::optional<std::size_t> refute_polynomial(const std::vector<Integer>& coeffs,
                                             std::size_t bound) {
  if (bound < 1) throw std::domain_error("refute_polynomial: bound must be >= 1");
  std::vector<Integer> values(bound);
  for (std::size_t n = 1; n <= bound; ++n) {
    Integer v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * static_cast<unsigned long>(n) + coeffs[i];
    values[n - 1] = std::move(v);
  }
  const ERVerdict verdict = check_er(Sequence(std::move(values)));
  if (verdict.pass) return std::nullopt;
  return verdict.witness->index;
}

std::optional<std::size_t> refute_completely_multiplicative(
    const std::map<Integer, Integer>& prime_values, std::size_t bound) {
  if (bound < 1)
    throw std::domain_error("refute_completely_multiplicative: bound must be >= 1");
  for (const auto& [p, v] : prime_values) {
    if (!is_prime(p))
      throw std::invalid_argument("refute_completely_multiplicative: key " + p.get_str() +
                                  " is not prime");
    if (v < 1)
      throw std::invalid_argument("refute_completely_multiplicative: value at " + p.get_str() +
                                  " must be >= 1");
  }
  std::vector<Integer> values(bound);
  for (std::uint64_t n = 1; n <= bound; ++n) {
    Integer v = 1;
    for (const auto& [p, e] : factor_u64(n)) {
      const auto it = prime_values.find(Integer(static_cast<unsigned long>(p)));
      if (it == prime_values.end())
        throw std::invalid_argument("refute_completely_multiplicative: missing value at prime " +
                                    std::to_string(p));
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), it->second.get_mpz_t(), e);
      v *= power;
    }
    values[n - 1] = std::move(v);
  }
  const ERVerdict verdict = check_er(Sequence(std::move(values)));
  if (verdict.pass) return std::nullopt;
  return verdict.witness->index;
}

}  // namespace erseq
