#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rns/params.hpp"

namespace rns {

/// Eventually periodic digit sequence: a finite preperiod followed by an
/// infinitely repeated period. The constructor canonicalizes so that equal
/// infinite digit streams compare equal field-wise: the period is reduced
/// to its primitive root, and any preperiod tail that merely repeats the
/// period is absorbed into a rotation of it. Finite expansions carry an
/// explicit trailing period (0).
class DigitSeq {
 public:
  DigitSeq() : period_{0} {}
  DigitSeq(std::vector<int> preperiod, std::vector<int> period);

  const std::vector<int>& preperiod() const { return preperiod_; }
  const std::vector<int>& period() const { return period_; }

  /// 1-based position in the infinite digit stream.
  int digit_at(std::size_t k) const;

  int max_digit() const;

  /// True when the stream is eventually the constant 0 (finite expansion).
  bool is_finite() const { return period_.size() == 1 && period_[0] == 0; }

  friend bool operator==(const DigitSeq&, const DigitSeq&) = default;

  /// Three-way comparison of the underlying infinite digit streams.
  static int compare_streams(const DigitSeq& a, const DigitSeq& b);

  friend bool operator<(const DigitSeq& a, const DigitSeq& b) {
    return compare_streams(a, b) < 0;
  }

 private:
  std::vector<int> preperiod_;
  std::vector<int> period_;
};

/// Text form "d1,d2,...(p1,p2,...)"; absent parentheses mean period (0).
DigitSeq parse_digit_seq(const std::string& text);
std::string format_digit_seq(const DigitSeq& seq);

/// Exact value sum_{k>=1} a_k s^-k of the sequence in system p.
Rational eval(const DigitSeq& seq, const Params& p);

/// Digitwise complement a_k -> r - a_k. eval(reflect(w)) = r/(s-1) - eval(w).
DigitSeq reflect(const DigitSeq& seq, const Params& p);

/// Drops the first m digits; eval(shift(w, m)) = s^m * eval(w) - (scaled head).
DigitSeq shift(const DigitSeq& seq, std::size_t m);

/// All digit pairs (c, d) != (a, b) with s*(a - c) = d - b, i.e. the ways to
/// rewrite the two-digit block "a b" without changing the value.
std::vector<std::pair<int, int>> alternatives(int a, int b, const Params& p);

/// First n digits of the digitwise-maximal expansion of x in [0, r/(s-1)].
std::vector<int> greedy_digits(const Rational& x, const Params& p, std::size_t n);

/// First n digits of the digitwise-minimal expansion.
std::vector<int> lazy_digits(const Rational& x, const Params& p, std::size_t n);

/// Accepts "p/q", an integer, or a finite decimal such as "0.625";
/// range-checked against [0, r/(s-1)].
Rational parse_number(const std::string& text, const Params& p);

}  // namespace rns
