#pragma once

#include <cstddef>
#include <exception>
#include <span>
#include <utility>
#include <vector>

#include "rns/automaton.hpp"

namespace rns::batch {

/// Serial reference loop: runs fn(0), ..., fn(n-1) in order.
template <typename Fn>
void serial_for(std::size_t n, Fn&& fn) {
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

/// OpenMP twin of serial_for. fn(i) must touch only state owned by index i;
/// under that contract the outcome is schedule-independent and equal to the
/// serial loop's. The first exception thrown by any iteration is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
#ifdef _OPENMP
  std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
#else
  serial_for(n, std::forward<Fn>(fn));
#endif
}

/// Per-input outcome of a batched classification; inputs that blow the
/// state cap are flagged rather than aborting the whole batch.
struct ClassifyOutcome {
  bool limit_exceeded = false;
  RepClass cls;

  friend bool operator==(const ClassifyOutcome&, const ClassifyOutcome&) = default;
};

/// Classifies every input independently; parallel=false selects the serial
/// reference loop. Both paths return identical vectors.
std::vector<ClassifyOutcome> classify_many(std::span<const Rational> xs,
                                           const Params& p,
                                           std::size_t max_states = kDefaultMaxStates,
                                           bool parallel = true);

}  // namespace rns::batch
