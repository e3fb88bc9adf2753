#pragma once

#include "rns/errors.hpp"
#include "rns/rational.hpp"

namespace rns {

/// Numeral system with natural base s and digit alphabet {0, ..., r},
/// constrained to 2 <= s <= r <= 2s-2. Every number in [0, r/(s-1)] has at
/// least one expansion sum a_k s^-k with digits from the alphabet.
struct Params {
  int s = 2;
  int r = 2;

  Rational max_value() const { return Rational(r, s - 1); }

  /// The middle digit window {r-s+1, ..., s-1}: digits that leave a full
  /// digit's worth of slack on both sides. Nonempty for all valid (s, r).
  int middle_low() const { return r - s + 1; }
  int middle_high() const { return s - 1; }
  int middle_size() const { return 2 * s - r - 1; }

  bool in_alphabet(int digit) const { return digit >= 0 && digit <= r; }
  bool in_middle(int digit) const {
    return digit >= middle_low() && digit <= middle_high();
  }

  friend bool operator==(const Params&, const Params&) = default;
};

/// Validates 2 <= s <= r <= 2s-2; throws ParamsOutOfRange otherwise.
Params make_params(long long s, long long r);

}  // namespace rns
