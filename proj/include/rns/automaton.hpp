#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rns/digit_seq.hpp"

namespace rns {

inline constexpr std::size_t kDefaultMaxStates = 1'000'000;

/// Digits a for which the successor remainder s*y - a stays inside
/// [0, r/(s-1)], ascending. Nonempty for every y in range: these are
/// exactly the digits an expansion of y can start with.
std::vector<int> admissible_digits(const Rational& y, const Params& p);

/// Finite graph of the remainders reachable from a rational start value x
/// under y -> s*y - a. Infinite digit paths from the start correspond
/// one-to-one with expansions of x. States are scaled numerators over one
/// fixed denominator, in breadth-first discovery order (state 0 = x);
/// out-edges of each state are ascending by digit.
struct RemainderAutomaton {
  struct Edge {
    int digit;
    std::uint32_t to;
  };

  Params params;
  BigInt denom;                           // positive; common to all states
  std::vector<BigInt> numerators;         // state i has value numerators[i]/denom
  std::vector<std::uint32_t> edge_begin;  // size()+1 offsets into edges
  std::vector<Edge> edges;

  std::size_t size() const { return numerators.size(); }
  Rational state_value(std::size_t i) const { return Rational(numerators[i], denom); }
  Rational start() const { return state_value(0); }
  std::span<const Edge> out(std::size_t i) const {
    return {edges.data() + edge_begin[i], edges.data() + edge_begin[i + 1]};
  }
};

/// Breadth-first closure of x under y -> s*y - a. Throws StateLimitExceeded
/// if more than max_states remainders appear (impossible for rational x:
/// the true bound is den(x)*r/(s-1)+1, but the cap keeps memory honest).
RemainderAutomaton build_automaton(const Rational& x, const Params& p,
                                   std::size_t max_states = kDefaultMaxStates);

enum class RepTag { Unique, Finite, CountablyInfinite, Continuum };

const char* rep_tag_name(RepTag tag);

/// Cardinality of the set of expansions of one number.
struct RepClass {
  RepTag tag = RepTag::Unique;
  BigInt count = 1;  // exact count when tag is Unique or Finite, else 0

  static RepClass unique() { return {RepTag::Unique, 1}; }
  static RepClass finite(BigInt n) { return {RepTag::Finite, std::move(n)}; }
  static RepClass countably_infinite() { return {RepTag::CountablyInfinite, 0}; }
  static RepClass continuum() { return {RepTag::Continuum, 0}; }

  friend bool operator==(const RepClass&, const RepClass&) = default;
};

std::string to_string(const RepClass& c);

/// Cardinality from the graph alone, via strongly connected components:
/// a component with more internal edges than vertices yields a continuum
/// of paths; otherwise any cycle with an exit edge yields countably many;
/// otherwise paths are counted exactly by dynamic programming.
RepClass classify_automaton(const RemainderAutomaton& a);

RepClass classify(const Rational& x, const Params& p,
                  std::size_t max_states = kDefaultMaxStates);

/// classify with the exact count always populated when finite.
RepClass count_representations(const Rational& x, const Params& p,
                               std::size_t max_states = kDefaultMaxStates);

/// All distinct eventually periodic expansions of x with preperiod length
/// <= max_pre and period length <= max_period, canonicalized, deduplicated,
/// sorted by digit stream.
std::vector<DigitSeq> enumerate_lassos(const Rational& x, const Params& p,
                                       std::size_t max_pre, std::size_t max_period,
                                       std::size_t max_states = kDefaultMaxStates);

}  // namespace rns
