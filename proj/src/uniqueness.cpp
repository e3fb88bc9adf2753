#include "rns/uniqueness.hpp"

#include <string>

namespace rns {

RepTag classify_periodic_digit(int c, const Params& p) {
  if (!p.in_alphabet(c)) {
    fail(ErrorCode::DigitOutOfAlphabet,
         "digit " + std::to_string(c) + " outside alphabet 0.." + std::to_string(p.r));
  }
  // Partition of the alphabet for the value c/(s-1):
  //   {0, r} and the strict interior of the middle window -> unique;
  //   strictly between window and alphabet ends            -> continuum;
  //   the window endpoints r-s+1 and s-1                   -> countable.
  if (c == 0 || c == p.r) return RepTag::Unique;
  if (c > p.middle_low() && c < p.middle_high()) return RepTag::Unique;
  if (c == p.middle_low() || c == p.middle_high()) return RepTag::CountablyInfinite;
  return RepTag::Continuum;
}

bool criterion_unique(const DigitSeq& seq, const Params& p) {
  const Rational x = eval(seq, p);
  if (x == 0 || x == p.max_value()) {
    fail(ErrorCode::EndpointNotCovered,
         "tail criterion is stated on the open interval only; " + to_string(x) +
             " is an endpoint");
  }
  const DigitSeq reflected = reflect(seq, p);
  // Tails repeat with the same preperiod and period, so positions
  // 1 .. m+p exhaust all distinct (digit, tail) pairs.
  const std::size_t span = seq.preperiod().size() + seq.period().size();
  for (std::size_t k = 1; k <= span; ++k) {
    const int digit = seq.digit_at(k);
    if (digit != p.r && eval(shift(seq, k), p) >= 1) return false;
    if (digit != 0 && eval(shift(reflected, k), p) >= 1) return false;
  }
  return true;
}

namespace {

// True when every digit of seq at positions strictly after t lies in the
// middle window. Positions t+1..m cover the remaining preperiod; every
// period digit occurs beyond any t <= m+p, so the period is checked whole.
bool tail_in_middle(const DigitSeq& seq, const Params& p, std::size_t t) {
  for (int d : seq.period()) {
    if (!p.in_middle(d)) return false;
  }
  for (std::size_t i = t; i < seq.preperiod().size(); ++i) {
    if (!p.in_middle(seq.preperiod()[i])) return false;
  }
  return true;
}

// Length of the maximal constant-c prefix of the stream, capped at m+p
// (a longer constant run means the whole stream is constant c).
std::size_t leading_run(const DigitSeq& seq, int c) {
  const std::size_t span = seq.preperiod().size() + seq.period().size();
  std::size_t k = 0;
  while (k < span && seq.digit_at(k + 1) == c) ++k;
  return k;
}

}  // namespace

bool e_form(const DigitSeq& seq, const Params& p) {
  if (seq.max_digit() > p.r) {
    fail(ErrorCode::DigitOutOfAlphabet,
         "digit " + std::to_string(seq.max_digit()) + " exceeds alphabet max " +
             std::to_string(p.r));
  }
  if (has_forbidden_period(seq, p)) return false;

  // Shape 1: any single leading digit, middle-window digits afterwards.
  if (tail_in_middle(seq, p, 1)) return true;

  const std::size_t span = seq.preperiod().size() + seq.period().size();

  // Shape 2: a nonempty zero block, one digit a with 0 <= a < s, window
  // digits afterwards. (A constant-zero stream has no such digit a.)
  std::size_t z = leading_run(seq, 0);
  if (z >= 1 && z < span) {
    int a = seq.digit_at(z + 1);
    if (a < p.s && tail_in_middle(seq, p, z + 1)) return true;
  }

  // Shape 3: mirror image, a nonempty r block then one digit above r-s.
  std::size_t t = leading_run(seq, p.r);
  if (t >= 1 && t < span) {
    int b = seq.digit_at(t + 1);
    if (b > p.r - p.s && tail_in_middle(seq, p, t + 1)) return true;
  }

  return false;
}

bool has_forbidden_period(const DigitSeq& seq, const Params& p) {
  const auto& per = seq.period();
  if (per.size() != 1) return false;
  return per[0] == p.s - 1 || per[0] == p.middle_low();
}

bool continuum_certificate(const DigitSeq& seq, const Params& p) {
  if (seq.max_digit() > p.r) {
    fail(ErrorCode::DigitOutOfAlphabet,
         "digit " + std::to_string(seq.max_digit()) + " exceeds alphabet max " +
             std::to_string(p.r));
  }
  const auto& per = seq.period();
  if (per.size() == 1 && (per[0] == 0 || per[0] == p.r)) return false;
  for (int d : per) {
    if (!p.in_middle(d)) return true;
  }
  return false;
}

}  // namespace rns
