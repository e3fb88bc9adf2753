// Compares the serial reference batch classifier against the OpenMP one on
// the same deterministic workload and reports wall times. The two paths
// must produce identical outcomes; the speedup depends on the host core
// count (1.0x on a single-core box).

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rns/batch.hpp"
#include "rns/rng.hpp"

using namespace rns;

namespace {

std::vector<Rational> workload(const Params& p, std::size_t count, std::uint64_t q_max) {
  std::vector<Rational> xs;
  xs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    SplitMix64 rng = SplitMix64::keyed(42, i);
    const std::uint64_t q = rng.range(2, q_max);
    const std::uint64_t top = q * static_cast<std::uint64_t>(p.r) / (p.s - 1);
    xs.emplace_back(BigInt(rng.below(top + 1)), BigInt(q));
  }
  return xs;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t count = 4000;
  std::uint64_t q_max = 3000;
  if (argc > 1) count = static_cast<std::size_t>(std::atoll(argv[1]));
  if (argc > 2) q_max = static_cast<std::uint64_t>(std::atoll(argv[2]));

  const Params p{3, 3};
  const std::vector<Rational> xs = workload(p, count, q_max);

#ifdef _OPENMP
  std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("openmp disabled (serial fallback)\n");
#endif
  std::printf("workload: %zu rationals, s=%d r=%d, q <= %llu\n", xs.size(), p.s, p.r,
              static_cast<unsigned long long>(q_max));

  auto t0 = std::chrono::steady_clock::now();
  const auto serial = batch::classify_many(xs, p, kDefaultMaxStates, false);
  const double serial_ms = ms_since(t0);
  std::printf("serial:   %8.1f ms\n", serial_ms);

  t0 = std::chrono::steady_clock::now();
  const auto parallel = batch::classify_many(xs, p, kDefaultMaxStates, true);
  const double parallel_ms = ms_since(t0);
  std::printf("parallel: %8.1f ms\n", parallel_ms);

  if (serial != parallel) {
    std::printf("MISMATCH between serial and parallel outcomes\n");
    return 1;
  }
  std::printf("outcomes identical; speedup %.2fx\n", serial_ms / parallel_ms);
  return 0;
}
