// Compares the OpenMP kernels against their serial reference implementations
// on representative workloads and prints a small timing table. The outputs
// are compared for equality as a side check; this is a benchmark, not a test.

#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "erseq/oracle.hpp"
#include "erseq/rategrowth.hpp"
#include "erseq/transforms.hpp"

using namespace erseq;

namespace {

double seconds(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

void report(const char* name, double serial_s, double parallel_s, bool equal) {
  std::printf("%-28s %10.3f ms %10.3f ms %7.2fx %s\n", name, serial_s * 1e3, parallel_s * 1e3,
              serial_s / parallel_s, equal ? "outputs-equal" : "OUTPUTS-DIFFER");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> term(0, ~0ull);

  {
    std::vector<Integer> terms(20'000);
    for (Integer& t : terms) t = Integer(static_cast<unsigned long>(term(rng)));
    const Sequence a(std::move(terms));
    Sequence out_serial, out_parallel;
    const double s = seconds([&] { out_serial = serial::least_period_counts(a); });
    const double p = seconds([&] { out_parallel = least_period_counts(a); });
    report("least_period_counts 20k", s, p, out_serial == out_parallel);
  }

  {
    std::vector<Integer> terms(20'000);
    for (Integer& t : terms) t = Integer(static_cast<unsigned long>(term(rng)));
    const Sequence o(std::move(terms));
    Sequence out_serial, out_parallel;
    const double s = seconds([&] { out_serial = serial::per_transform(o); });
    const double p = seconds([&] { out_parallel = per_transform(o); });
    report("per_transform 20k", s, p, out_serial == out_parallel);
  }

  {
    // ~1.3M points across cycle lengths 1..500.
    std::uniform_int_distribution<unsigned long> count(0, 10);
    std::vector<Integer> counts(500);
    for (Integer& c : counts) c = count(rng);
    const PermutationMap map = build_permutation(Sequence(std::move(counts)));
    std::uint64_t fixed_serial = 0, fixed_parallel = 0;
    const double s = seconds([&] { fixed_serial = serial::count_fixed_points(map, 360); });
    const double p = seconds([&] { fixed_parallel = count_fixed_points(map, 360); });
    std::printf("(domain %llu, cycle shortcut: %llu)\n",
                static_cast<unsigned long long>(map.domain_size()),
                static_cast<unsigned long long>(count_fixed_points_cycle(map, 360)));
    report("count_fixed_points k=360", s, p, fixed_serial == fixed_parallel);
  }

  {
    const Rational alpha(2);
    Sequence out_serial, out_parallel;
    const double s = seconds([&] { out_serial = serial::power_orbit_counts(alpha, 20'000); });
    const double p = seconds([&] { out_parallel = power_orbit_counts(alpha, 20'000); });
    report("power orbit counts 20k", s, p, out_serial == out_parallel);

    const Rational frac(3, 2);
    const double fs = seconds([&] { out_serial = serial::power_orbit_counts(frac, 4'000); });
    const double fp = seconds([&] { out_parallel = power_orbit_counts(frac, 4'000); });
    report("power orbit counts 3/2 4k", fs, fp, out_serial == out_parallel);
  }

  return 0;
}
