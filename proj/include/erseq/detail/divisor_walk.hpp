#pragma once

#include <cstdint>
#include <vector>

#include "erseq/arith.hpp"

namespace erseq::detail {

// Calls fn(d) for every divisor d of n, in no particular order.
template <typename F>
void for_each_divisor(std::uint64_t n, F&& fn) {
  const auto factors = factor_u64(n);
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t t = 0; t < base; ++t) divs.push_back(divs[t] * pk);
    }
  }
  for (std::uint64_t d : divs) fn(d);
}

// Calls fn(m, mu) for every squarefree divisor m of n, mu = moebius(m).
// Useful because sum_{d|n} mu(n/d) a_d = sum over squarefree m|n of mu(m) a_{n/m}.
template <typename F>
void for_each_squarefree_divisor(std::uint64_t n, F&& fn) {
  const auto factors = factor_u64(n);
  const std::size_t k = factors.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::uint64_t m = 1;
    int mu = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        m *= factors[i].first;
        mu = -mu;
      }
    }
    fn(m, mu);
  }
}

}  // namespace erseq::detail
