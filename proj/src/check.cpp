#include "rns/check.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rns/automaton.hpp"
#include "rns/batch.hpp"
#include "rns/uniqueness.hpp"

namespace rns {

Params random_params(SplitMix64& rng, int s_max) {
  const int s = static_cast<int>(rng.range(2, s_max));
  const int r = static_cast<int>(rng.range(s, 2 * s - 2));
  return Params{s, r};
}

DigitSeq random_digit_seq(SplitMix64& rng, const Params& p, std::size_t max_pre,
                          std::size_t max_period) {
  std::vector<int> pre(rng.below(max_pre + 1));
  std::vector<int> per(1 + rng.below(max_period));
  for (int& d : pre) d = static_cast<int>(rng.below(p.r + 1));
  for (int& d : per) d = static_cast<int>(rng.below(p.r + 1));
  return DigitSeq(std::move(pre), std::move(per));
}

namespace {

using MaybeMsg = std::optional<std::string>;

// Preperiod/period bounds tuned with the default state cap: with s <= 5
// the worst denominator s^4 (s^4 - 1) keeps the remainder closure under a
// million states.
constexpr std::size_t kMaxPre = 4;
constexpr std::size_t kMaxPeriod = 4;

std::string describe(const Params& p, const DigitSeq& seq) {
  return "s=" + std::to_string(p.s) + " r=" + std::to_string(p.r) +
         " seq=" + format_digit_seq(seq);
}

DigitSeq random_interior_seq(SplitMix64& rng, const Params& p) {
  for (;;) {
    DigitSeq seq = random_digit_seq(rng, p, kMaxPre, kMaxPeriod);
    const Rational x = eval(seq, p);
    if (x != 0 && x != p.max_value()) return seq;
  }
}

// Random sequence whose period certifies a continuum (leaves the middle
// window, is not (0) or (r)). Such periods abound for every valid system.
DigitSeq random_certificate_seq(SplitMix64& rng, const Params& p) {
  for (;;) {
    DigitSeq seq = random_digit_seq(rng, p, kMaxPre, kMaxPeriod);
    if (continuum_certificate(seq, p)) return seq;
  }
}

// Univoque-shaped sequence: a zero or r block, one transition digit in the
// allowed range, then middle-window digits, avoiding the two boundary
// periods. Requires a window with at least two digits.
DigitSeq construct_univoque_seq(SplitMix64& rng, const Params& p, bool r_block) {
  for (;;) {
    std::vector<int> pre(1 + rng.below(3), r_block ? p.r : 0);
    if (r_block) {
      pre.push_back(static_cast<int>(rng.range(p.r - p.s + 1, p.r - 1)));
    } else {
      pre.push_back(static_cast<int>(rng.range(1, p.s - 1)));
    }
    std::vector<int> per(1 + rng.below(3));
    for (int& d : per) {
      d = p.middle_low() + static_cast<int>(rng.below(p.middle_size()));
    }
    DigitSeq seq(std::move(pre), std::move(per));
    if (has_forbidden_period(seq, p)) continue;
    const Rational x = eval(seq, p);
    if (x == 0 || x == p.max_value()) continue;
    return seq;
  }
}

// Structural consequences of uniqueness: zeros form a prefix run followed
// by a digit below s; r's dually. Only called on criterion-unique input.
MaybeMsg check_block_structure(const DigitSeq& seq, const Params& p) {
  const std::size_t span = seq.preperiod().size() + seq.period().size();
  const auto& per = seq.period();

  const bool per_zero = per.size() == 1 && per[0] == 0;
  const bool per_r = per.size() == 1 && per[0] == p.r;
  bool seen_nonzero = false;
  bool seen_non_r = false;
  for (std::size_t k = 1; k <= span; ++k) {
    const int d = seq.digit_at(k);
    if (d != 0) seen_nonzero = true;
    if (d != p.r) seen_non_r = true;
  }
  if (!per_zero) {
    for (int d : per) {
      if (d == 0 && seen_nonzero) {
        return "unique expansion has recurring zeros after a nonzero digit: " +
               describe(p, seq);
      }
    }
  }
  if (!per_r) {
    for (int d : per) {
      if (d == p.r && seen_non_r) {
        return "unique expansion has recurring top digits after a lower digit: " +
               describe(p, seq);
      }
    }
  }
  for (std::size_t k = 2; k <= seq.preperiod().size(); ++k) {
    if (seq.digit_at(k) == 0 && seq.digit_at(k - 1) != 0) {
      return "unique expansion has a zero after a nonzero digit: " + describe(p, seq);
    }
    if (seq.digit_at(k) == p.r && seq.digit_at(k - 1) != p.r) {
      return "unique expansion has a top digit after a lower digit: " + describe(p, seq);
    }
  }
  if (seq.digit_at(1) == 0) {
    std::size_t k = 1;
    while (k <= span && seq.digit_at(k) == 0) ++k;
    if (k <= span && seq.digit_at(k) >= p.s) {
      return "digit after the zero block is not below s: " + describe(p, seq);
    }
  }
  if (seq.digit_at(1) == p.r) {
    std::size_t k = 1;
    while (k <= span && seq.digit_at(k) == p.r) ++k;
    if (k <= span && seq.digit_at(k) <= p.r - p.s) {
      return "digit after the top block is not above r-s: " + describe(p, seq);
    }
  }
  return std::nullopt;
}

template <typename CaseFn>
SuiteResult run_suite(std::string name, std::uint64_t cases, std::uint64_t suite_seed,
                      CaseFn&& case_fn) {
  std::vector<std::string> messages(cases);
  std::vector<std::uint8_t> failed(cases, 0);
  batch::parallel_for(cases, [&](std::size_t i) {
    SplitMix64 rng = SplitMix64::keyed(suite_seed, i);
    try {
      if (MaybeMsg msg = case_fn(i, rng)) {
        failed[i] = 1;
        messages[i] = std::move(*msg);
      }
    } catch (const Error& e) {
      failed[i] = 1;
      messages[i] = std::string(e.code_name()) + ": " + e.what();
    }
  });
  SuiteResult res;
  res.name = std::move(name);
  res.cases = cases;
  for (std::size_t i = 0; i < cases; ++i) {
    if (!failed[i]) continue;
    ++res.failures;
    if (res.failure_samples.size() < 3) res.failure_samples.push_back(messages[i]);
  }
  return res;
}

}  // namespace

std::vector<SuiteResult> run_check_suites(int s_max, std::uint64_t cases,
                                          std::uint64_t seed, std::size_t max_states) {
  if (s_max < 2) fail(ErrorCode::ParamsOutOfRange, "s_max must be at least 2");
  if (cases < 1) fail(ErrorCode::InvalidSampleCount, "need at least one case per suite");

  SplitMix64 seeder(seed);
  std::vector<SuiteResult> results;

  // Single-digit periods, exhaustively: the digit-range table must agree
  // with the automaton on c/(s-1) for every system with s <= s_max.
  {
    (void)seeder.next();
    std::vector<std::tuple<int, int, int>> triples;
    for (int s = 2; s <= s_max; ++s) {
      for (int r = s; r <= 2 * s - 2; ++r) {
        for (int c = 0; c <= r; ++c) triples.emplace_back(s, r, c);
      }
    }
    results.push_back(run_suite(
        "lemma-table", triples.size(), 0, [&](std::size_t i, SplitMix64&) -> MaybeMsg {
          auto [s, r, c] = triples[i];
          const Params p{s, r};
          const RepTag expected = classify_periodic_digit(c, p);
          const RepClass got = classify(Rational(c, s - 1), p, max_states);
          if (got.tag != expected) {
            return "digit " + std::to_string(c) + " in s=" + std::to_string(s) +
                   " r=" + std::to_string(r) + ": table says " + rep_tag_name(expected) +
                   ", automaton says " + to_string(got);
          }
          return std::nullopt;
        }));
  }

  // The tail criterion must match the automaton's verdict exactly.
  results.push_back(run_suite(
      "criterion-automaton", cases, seeder.next(),
      [&](std::size_t, SplitMix64& rng) -> MaybeMsg {
        const Params p = random_params(rng, s_max);
        const DigitSeq seq = random_interior_seq(rng, p);
        const bool by_criterion = criterion_unique(seq, p);
        const bool by_automaton = classify(eval(seq, p), p, max_states).tag == RepTag::Unique;
        if (by_criterion != by_automaton) {
          return describe(p, seq) + ": criterion says " +
                 (by_criterion ? "unique" : "non-unique") + ", automaton disagrees";
        }
        return std::nullopt;
      }));

  // The structural shapes are exactly the criterion-unique sequences.
  results.push_back(run_suite(
      "eform-criterion", cases, seeder.next(),
      [&](std::size_t i, SplitMix64& rng) -> MaybeMsg {
        const Params p = random_params(rng, s_max);
        // Half the corpus is biased toward univoque shapes so the equality
        // is exercised from both sides.
        DigitSeq seq = (i % 2 == 0 && p.middle_size() >= 2)
                           ? construct_univoque_seq(rng, p, i % 4 == 2)
                           : random_interior_seq(rng, p);
        const bool shaped = e_form(seq, p);
        const bool unique = criterion_unique(seq, p);
        if (shaped != unique) {
          return describe(p, seq) + ": e_form=" + (shaped ? "true" : "false") +
                 " but criterion=" + (unique ? "true" : "false");
        }
        return std::nullopt;
      }));

  // Reflecting every digit (a -> r-a) must preserve uniqueness.
  results.push_back(run_suite(
      "reflection-symmetry", cases, seeder.next(),
      [&](std::size_t, SplitMix64& rng) -> MaybeMsg {
        const Params p = random_params(rng, s_max);
        const DigitSeq seq = random_interior_seq(rng, p);
        if (criterion_unique(seq, p) != criterion_unique(reflect(seq, p), p)) {
          return describe(p, seq) + ": reflection changes the criterion verdict";
        }
        return std::nullopt;
      }));

  // A period leaving the middle window forces a continuum.
  results.push_back(run_suite(
      "certificate-soundness", cases, seeder.next(),
      [&](std::size_t, SplitMix64& rng) -> MaybeMsg {
        const Params p = random_params(rng, s_max);
        const DigitSeq seq = random_certificate_seq(rng, p);
        const RepClass got = classify(eval(seq, p), p, max_states);
        if (got.tag != RepTag::Continuum) {
          return describe(p, seq) + ": certificate holds but class is " + to_string(got);
        }
        return std::nullopt;
      }));

  // The two boundary periods (s-1) and (r-s+1) never give a unique or even
  // finite set of expansions.
  results.push_back(run_suite(
      "forbidden-period", cases, seeder.next(),
      [&](std::size_t i, SplitMix64& rng) -> MaybeMsg {
        const Params p = random_params(rng, s_max);
        std::vector<int> pre(rng.below(kMaxPre + 1));
        for (int& d : pre) d = static_cast<int>(rng.below(p.r + 1));
        const int boundary = (i % 2 == 0) ? p.s - 1 : p.middle_low();
        const DigitSeq seq(std::move(pre), {boundary});
        if (!has_forbidden_period(seq, p)) {
          return describe(p, seq) + ": boundary period not flagged";
        }
        const RepClass got = classify(eval(seq, p), p, max_states);
        if (got.tag == RepTag::Unique || got.tag == RepTag::Finite) {
          return describe(p, seq) + ": boundary period classified " + to_string(got);
        }
        return std::nullopt;
      }));

  // Criterion-unique sequences must exhibit the block structure; shaped
  // sequences (injected on even indices) must pass the criterion.
  results.push_back(run_suite(
      "unique-structure", cases, seeder.next(),
      [&](std::size_t i, SplitMix64& rng) -> MaybeMsg {
        const Params p = random_params(rng, s_max);
        const bool constructed = i % 2 == 0 && p.middle_size() >= 2;
        const DigitSeq seq = constructed ? construct_univoque_seq(rng, p, i % 4 == 2)
                                         : random_interior_seq(rng, p);
        const bool unique = criterion_unique(seq, p);
        if (constructed && !unique) {
          return describe(p, seq) + ": univoque-shaped sequence fails the criterion";
        }
        if (unique) return check_block_structure(seq, p);
        return std::nullopt;
      }));

  // Systems with a single-digit middle window have no interior unique
  // points and no univoque shapes at all.
  results.push_back(run_suite(
      "degenerate-window", cases, seeder.next(),
      [&](std::size_t, SplitMix64& rng) -> MaybeMsg {
        const int s = static_cast<int>(rng.range(2, s_max));
        const Params p{s, 2 * s - 2};
        const DigitSeq seq = random_interior_seq(rng, p);
        if (e_form(seq, p)) {
          return describe(p, seq) + ": degenerate system admits a univoque shape";
        }
        const RepClass got = classify(eval(seq, p), p, max_states);
        if (got.tag == RepTag::Unique) {
          return describe(p, seq) + ": interior point unique in a degenerate system";
        }
        return std::nullopt;
      }));

  return results;
}

}  // namespace rns
