#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rns/automaton.hpp"
#include "rns/rng.hpp"

namespace rns {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> failure_samples;  // first few, for diagnosis

  bool passed() const { return failures == 0; }
};

/// Uniform random system with 2 <= s <= s_max and s <= r <= 2s-2.
Params random_params(SplitMix64& rng, int s_max);

/// Uniform random digits; preperiod length 0..max_pre, period length
/// 1..max_period, canonicalized on construction.
DigitSeq random_digit_seq(SplitMix64& rng, const Params& p, std::size_t max_pre,
                          std::size_t max_period);

/// Seeded cross-validation suites pitting the closed-form statements
/// against the remainder-automaton classifier:
///   lemma-table          single-digit periods match the digit-range table
///   criterion-automaton  tail criterion == (classifier says Unique)
///   eform-criterion      structural shapes == tail criterion
///   reflection-symmetry  criterion invariant under digit reflection
///   certificate-soundness  certificate implies classifier says Continuum
///   forbidden-period     boundary periods are never uniquely represented
///   unique-structure     unique expansions have the block structure
///   degenerate-window    r = 2s-2 admits no interior unique points
/// `cases` is the per-suite corpus size. Deterministic in (s_max, cases,
/// seed) regardless of thread count.
std::vector<SuiteResult> run_check_suites(int s_max, std::uint64_t cases,
                                          std::uint64_t seed,
                                          std::size_t max_states = kDefaultMaxStates);

}  // namespace rns
