#include "erseq/oracle.hpp"

#include <stdexcept>
#include <string>

namespace erseq {

PermutationMap build_permutation(const Sequence& orbit_counts) {
  Integer total = 0;
  for (std::size_t n = 1; n <= orbit_counts.size(); ++n) {
    const Integer& o = orbit_counts.at(n);
    if (o < 0)
      throw std::domain_error("build_permutation: negative orbit count at index " +
                              std::to_string(n));
    total += o * static_cast<unsigned long>(n);
  }
  if (total > PermutationMap::max_points)
    throw std::length_error("build_permutation: domain of " + total.get_str() +
                            " points exceeds the " +
                            std::to_string(PermutationMap::max_points) + "-point guard");

  PermutationMap map;
  map.image_.reserve(total.get_ui());
  for (std::size_t n = 1; n <= orbit_counts.size(); ++n) {
    const std::uint64_t count = orbit_counts.at(n).get_ui();
    if (count > 0) map.manifest_.push_back({n, count});
    for (std::uint64_t c = 0; c < count; ++c) {
      const std::uint32_t base = static_cast<std::uint32_t>(map.image_.size());
      for (std::uint64_t i = 0; i < n; ++i)
        map.image_.push_back(base + static_cast<std::uint32_t>((i + 1) % n));
    }
  }
  return map;
}

std::uint64_t count_fixed_points(const PermutationMap& map, std::uint64_t k) {
  if (k < 1) throw std::domain_error("count_fixed_points: k must be >= 1");
  const auto& image = map.image();
  const std::int64_t size = static_cast<std::int64_t>(image.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total) if (size > 4096)
  for (std::int64_t x = 0; x < size; ++x) {
    std::uint32_t y = static_cast<std::uint32_t>(x);
    for (std::uint64_t step = 0; step < k; ++step) y = image[y];
    if (y == static_cast<std::uint32_t>(x)) ++total;
  }
  return total;
}

std::uint64_t count_fixed_points_cycle(const PermutationMap& map, std::uint64_t k) {
  if (k < 1) throw std::domain_error("count_fixed_points_cycle: k must be >= 1");
  std::uint64_t total = 0;
  for (const CycleCount& c : map.cycle_manifest())
    if (k % c.length == 0) total += c.length * c.count;
  return total;
}

namespace serial {

std::uint64_t count_fixed_points(const PermutationMap& map, std::uint64_t k) {
  if (k < 1) throw std::domain_error("count_fixed_points: k must be >= 1");
  const auto& image = map.image();
  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x < image.size(); ++x) {
    std::uint32_t y = static_cast<std::uint32_t>(x);
    for (std::uint64_t step = 0; step < k; ++step) y = image[y];
    if (y == static_cast<std::uint32_t>(x)) ++total;
  }
  return total;
}

}  // namespace serial

}  // namespace erseq
