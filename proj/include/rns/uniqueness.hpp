#pragma once

#include "rns/automaton.hpp"
#include "rns/digit_seq.hpp"

namespace rns {

/// Representation class of the purely periodic point with single-digit
/// period (c), read off the digit-range table: {0, r} and the strict
/// interior of the middle window give Unique; digits strictly between the
/// window and the alphabet ends give Continuum; the window's own endpoints
/// r-s+1 and s-1 give CountablyInfinite.
RepTag classify_periodic_digit(int c, const Params& p);

/// Exact tail test for uniqueness of the expansion: at every position k,
/// the tail value must stay below 1 unless the digit before it is r, and
/// the reflected tail value must stay below 1 unless that digit is 0.
/// Only defined on the open interval (0, r/(s-1)); endpoints throw
/// EndpointNotCovered.
bool criterion_unique(const DigitSeq& seq, const Params& p);

/// Structural membership test for the univoque shapes: a head that is a
/// single digit, a zero block followed by one digit below s, or an r block
/// followed by one digit above r-s, with every later digit inside the
/// middle window -- excluding the two single-digit tail periods (s-1) and
/// (r-s+1), which sit on the window boundary and are not unique.
bool e_form(const DigitSeq& seq, const Params& p);

/// True when the canonical period is exactly (s-1) or (r-s+1).
bool has_forbidden_period(const DigitSeq& seq, const Params& p);

/// Sufficient condition for a continuum of expansions of eval(seq): the
/// period is neither (0) nor (r) and some period digit lies outside the
/// middle window.
bool continuum_certificate(const DigitSeq& seq, const Params& p);

}  // namespace rns
