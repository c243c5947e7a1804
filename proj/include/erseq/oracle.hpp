#pragma once

#include <cstdint>
#include <vector>

#include "erseq/sequence.hpp"

namespace erseq {

struct CycleCount {
  std::uint64_t length = 0;
  std::uint64_t count = 0;
};

// An explicit permutation of {0, ..., domain_size-1} with a known cycle
// manifest. Cycles are laid out consecutively in increasing length, each
// block mapping i -> i+1 cyclically within itself, so the image array is a
// deterministic function of the orbit counts.
class PermutationMap {
 public:
  static constexpr std::uint64_t max_points = 10'000'000;

  std::uint64_t domain_size() const { return image_.size(); }
  const std::vector<std::uint32_t>& image() const { return image_; }
  const std::vector<CycleCount>& cycle_manifest() const { return manifest_; }

 private:
  friend PermutationMap build_permutation(const Sequence& orbit_counts);

  std::vector<std::uint32_t> image_;
  std::vector<CycleCount> manifest_;
};

// A permutation with exactly orbit_counts.at(n) cycles of length n for every
// n. Throws std::length_error when sum n * o_n exceeds max_points, and
// std::domain_error on negative counts.
PermutationMap build_permutation(const Sequence& orbit_counts);

// #{x : map^k(x) == x}, counted by iterating the image array point by point;
// parallel over starting points. Requires k >= 1.
std::uint64_t count_fixed_points(const PermutationMap& map, std::uint64_t k);

// Shortcut via the cycle manifest (a length-L cycle is fixed by map^k iff
// L | k). Tests assert it agrees with the direct count.
std::uint64_t count_fixed_points_cycle(const PermutationMap& map, std::uint64_t k);

namespace serial {
std::uint64_t count_fixed_points(const PermutationMap& map, std::uint64_t k);
}

}  // namespace erseq
