#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rns/automaton.hpp"

namespace rns {

/// Dimension of the set of numbers with a unique expansion:
/// ln(2s-r-1)/ln(s), the growth rate of middle-window words. Zero when the
/// window is a single digit (r = 2s-2).
double hausdorff_dimension(const Params& p);

/// Number of length-d digit strings that extend to an infinite univoque
/// shape (single-digit head, zero block then a digit below s, or r block
/// then a digit above r-s, middle-window digits after). count(0) = 1.
BigInt count_E_prefixes(const Params& p, std::size_t d);

struct DimensionReport {
  double formula_value = 0.0;
  std::optional<double> estimate;     // ln(count(d+1)/count(d))/ln(s)
  std::size_t depth = 0;
  std::vector<BigInt> prefix_counts;  // count(1), ..., count(depth+1)
  bool degenerate = false;            // r = 2s-2: prefix counts stop growing
};

/// Formula value plus the finite-depth growth estimate; in the degenerate
/// single-window-digit case the estimate is absent instead of an error.
DimensionReport dimension_report(const Params& p, std::size_t depth);

/// Same, but the degenerate case throws DegenerateDimension.
DimensionReport dimension_estimate(const Params& p, std::size_t depth);

/// Boxes of side s^-d needed to cover the middle-window Cantor set:
/// (2s-r-1)^d.
BigInt cantor_C_boxcount(const Params& p, std::size_t d);

struct MeasureBound {
  std::size_t n = 1;
  std::size_t depth = 1;
  Rational bound;  // exact total length of the depth-`depth` cylinder cover
};

/// Exact Lebesgue cover bound for B_n, the set of x whose expansions all
/// have middle-window digits from position n on:
/// (r+1)^(n-1) * (2s-r-1)^(d-n+1) * s^-d * r/(s-1), with d = depth >= n.
MeasureBound measure_bound_Bn(const Params& p, std::size_t n, std::size_t depth);

struct MonteCarloResult {
  double fraction = 0.0;  // share of samples classified Continuum
  std::uint64_t samples = 0;
  std::uint64_t unique_count = 0;
  std::uint64_t finite_count = 0;  // more than one but finitely many
  std::uint64_t countably_infinite_count = 0;
  std::uint64_t continuum_count = 0;
  std::uint64_t state_limit_count = 0;  // tallied, never silently dropped
  std::string rng_algorithm;            // recorded for reproducibility
};

/// Classifies `samples` random rationals p/q with q uniform on [2, q_max]
/// and p uniform on the admissible numerators for q. Sample i is drawn
/// from substream (seed, i), so results are independent of thread count.
MonteCarloResult monte_carlo_continuum_fraction(
    const Params& p, std::uint64_t q_max, std::uint64_t samples,
    std::uint64_t seed, std::size_t max_states = kDefaultMaxStates);

}  // namespace rns
