#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "rns/digit_seq.hpp"
#include "rns/rng.hpp"

using namespace rns;

namespace {

const Params kP22{2, 2};
const Params kP33{3, 3};
const Params kP34{3, 4};
const Params kP57{5, 7};

DigitSeq seq(std::vector<int> pre, std::vector<int> per) {
  return DigitSeq(std::move(pre), std::move(per));
}

}  // namespace

TEST_CASE("params validation") {
  CHECK(make_params(2, 2).s == 2);
  CHECK(make_params(5, 7).r == 7);
  CHECK_THROWS_AS(make_params(1, 1), Error);
  CHECK_THROWS_AS(make_params(2, 3), Error);  // r > 2s-2
  CHECK_THROWS_AS(make_params(3, 2), Error);  // r < s
  CHECK_THROWS_AS(make_params(4, 7), Error);
  try {
    make_params(2, 5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParamsOutOfRange);
  }
}

TEST_CASE("middle window bounds") {
  CHECK(kP22.middle_low() == 1);
  CHECK(kP22.middle_high() == 1);
  CHECK(kP22.middle_size() == 1);
  CHECK(kP33.middle_low() == 1);
  CHECK(kP33.middle_high() == 2);
  CHECK(kP33.middle_size() == 2);
  CHECK(kP57.middle_low() == 3);
  CHECK(kP57.middle_high() == 4);
  CHECK(kP57.middle_size() == 2);
  CHECK(kP57.max_value() == Rational(7, 4));
}

TEST_CASE("canonical form reduces the period to its primitive root") {
  CHECK(seq({}, {1, 2, 1, 2}) == seq({}, {1, 2}));
  CHECK(seq({}, {0, 0, 0}) == seq({}, {0}));
  CHECK(seq({}, {2, 2, 2, 2}).period() == std::vector<int>{2});
  CHECK(seq({}, {1, 2, 2}).period() == std::vector<int>{1, 2, 2});
}

TEST_CASE("canonical form absorbs preperiod tails into period rotations") {
  // 1,2,1,2,... written with a redundant preperiod
  const DigitSeq a = seq({1, 2, 1, 2}, {1, 2});
  CHECK(a.preperiod().empty());
  CHECK(a.period() == std::vector<int>{1, 2});
  // 0,1,1,1,... : the trailing 1 folds into the period
  const DigitSeq b = seq({0, 1}, {1});
  CHECK(b.preperiod() == std::vector<int>{0});
  CHECK(b.period() == std::vector<int>{1});
  // rotation case: 2,1,2,1,2,... = 2 followed by (1,2)
  const DigitSeq c = seq({2, 1, 2}, {1, 2});
  CHECK(c.preperiod().empty());
  CHECK(c.period() == std::vector<int>{2, 1});
  CHECK(c == seq({}, {2, 1}));
}

TEST_CASE("empty period becomes the explicit zero tail") {
  const DigitSeq a = seq({1, 0}, {});
  CHECK(a.period() == std::vector<int>{0});
  // trailing zeros are absorbed too
  CHECK(a.preperiod() == std::vector<int>{1});
  CHECK(DigitSeq().is_finite());
}

TEST_CASE("digit_at walks preperiod then period") {
  const DigitSeq a = seq({0, 2}, {1, 2});
  CHECK(a.digit_at(1) == 0);
  CHECK(a.digit_at(2) == 2);
  CHECK(a.digit_at(3) == 1);
  CHECK(a.digit_at(4) == 2);
  CHECK(a.digit_at(5) == 1);
  CHECK(a.digit_at(100) == 2);
  CHECK(a.max_digit() == 2);
}

TEST_CASE("stream comparison is the infinite lexicographic order") {
  CHECK(DigitSeq::compare_streams(seq({}, {1}), seq({}, {1})) == 0);
  CHECK(seq({0}, {2}) < seq({}, {1}));       // 022... < 111...
  CHECK(seq({}, {1}) < seq({1, 2}, {0}));    // 111... < 120...
  CHECK(seq({1, 2}, {0}) < seq({2}, {0}));   // 120... < 200...
  // equal streams written differently compare equal
  CHECK(DigitSeq::compare_streams(seq({1}, {2, 1}), seq({}, {1, 2})) == 0);
  CHECK(seq({1}, {2, 1}) == seq({}, {1, 2}));
}

TEST_CASE("parse and format round-trip") {
  // the trailing 2 of the preperiod is absorbed into a rotated period
  CHECK(format_digit_seq(parse_digit_seq("0,2(1,2)")) == "0(2,1)");
  CHECK(format_digit_seq(parse_digit_seq("(1)")) == "(1)");
  CHECK(format_digit_seq(parse_digit_seq("7")) == "7(0)");
  CHECK(format_digit_seq(parse_digit_seq(" 1 , 2 ( 0 ) ")) == "1,2(0)");
  // canonicalization applies on parse
  CHECK(format_digit_seq(parse_digit_seq("1,2(1,2)")) == "(1,2)");
  CHECK(parse_digit_seq("0,2(1,2)") == seq({0, 2}, {1, 2}));
}

TEST_CASE("parse rejects malformed input with ParseError") {
  for (const char* bad : {"", "()", "1,(", "1,2)", "(1,2", "1,,2", "a(1)", "1(2)3", "(1)(2)", ",1", "1,"}) {
    try {
      parse_digit_seq(bad);
      CHECK_MESSAGE(false, "expected ParseError for: ", bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
}

TEST_CASE("negative digits are rejected at construction") {
  CHECK_THROWS_AS(seq({-1}, {0}), Error);
  CHECK_THROWS_AS(seq({}, {-2}), Error);
}

TEST_CASE("eval matches hand-computed exact values") {
  // 0,2,2,2,... in base 2 is 1
  CHECK(eval(seq({0}, {2}), kP22) == Rational(1));
  // the constant sequence (c) evaluates to c/(s-1)
  CHECK(eval(seq({}, {1}), kP22) == Rational(1));
  CHECK(eval(seq({}, {2}), kP33) == Rational(1));
  CHECK(eval(seq({}, {7}), kP57) == Rational(7, 4));
  // finite expansion: 1,0,0,... in base 2 is 1/2
  CHECK(eval(seq({1}, {0}), kP22) == Rational(1, 2));
  // mixed: 0,0,2(1,2) in base 3 = 2/27 + (1*3+2)/((3^2-1)*27) = 7/72
  CHECK(eval(seq({0, 0, 2}, {1, 2}), kP33) == Rational(7, 72));
  // zero
  CHECK(eval(DigitSeq(), kP33) == Rational(0));
}

TEST_CASE("eval rejects digits outside the alphabet") {
  try {
    eval(seq({3}, {0}), kP22);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DigitOutOfAlphabet);
  }
}

TEST_CASE("eval agrees with truncated partial sums") {
  SplitMix64 rng(2024);
  for (int it = 0; it < 200; ++it) {
    const int s = 2 + static_cast<int>(rng.below(4));
    const Params sys{s, s + static_cast<int>(rng.below(s - 1))};
    std::vector<int> pre(rng.below(4)), per(1 + rng.below(4));
    for (int& d : pre) d = static_cast<int>(rng.below(sys.r + 1));
    for (int& d : per) d = static_cast<int>(rng.below(sys.r + 1));
    const DigitSeq w(pre, per);
    const Rational exact = eval(w, sys);
    const std::size_t depth = 25;
    const Rational approx = oracles::partial_sum(w, sys, depth);
    const Rational tail_max = sys.max_value() / pow_int(sys.s, depth);
    CHECK(exact >= approx);
    CHECK(exact <= approx + tail_max);
    // eval lands in [0, r/(s-1)]
    CHECK(exact >= 0);
    CHECK(exact <= sys.max_value());
  }
}

TEST_CASE("reflection is an exact involution around the midpoint") {
  SplitMix64 rng(99);
  for (int it = 0; it < 200; ++it) {
    const int s = 2 + static_cast<int>(rng.below(4));
    const Params p{s, s + static_cast<int>(rng.below(s - 1))};
    std::vector<int> pre(rng.below(4)), per(1 + rng.below(4));
    for (int& d : pre) d = static_cast<int>(rng.below(p.r + 1));
    for (int& d : per) d = static_cast<int>(rng.below(p.r + 1));
    const DigitSeq w(pre, per);
    const DigitSeq rw = reflect(w, p);
    CHECK(reflect(rw, p) == w);
    CHECK(eval(rw, p) == p.max_value() - eval(w, p));
  }
}

TEST_CASE("shift drops digits and rescales the value") {
  const DigitSeq w = seq({0, 2}, {1, 2});
  CHECK(shift(w, 0) == w);
  CHECK(shift(w, 1) == seq({2}, {1, 2}));
  CHECK(shift(w, 2) == seq({}, {1, 2}));
  CHECK(shift(w, 3) == seq({}, {2, 1}));
  CHECK(shift(w, 4) == seq({}, {1, 2}));
  SplitMix64 rng(7);
  for (int it = 0; it < 100; ++it) {
    const int s = 2 + static_cast<int>(rng.below(4));
    const Params p{s, s + static_cast<int>(rng.below(s - 1))};
    std::vector<int> pre(rng.below(4)), per(1 + rng.below(3));
    for (int& d : pre) d = static_cast<int>(rng.below(p.r + 1));
    for (int& d : per) d = static_cast<int>(rng.below(p.r + 1));
    const DigitSeq w2(pre, per);
    const std::size_t m = rng.below(6);
    // eval(w) = (first m digits) + s^-m eval(shift(w, m))
    const Rational head = oracles::partial_sum(w2, p, m);
    const Rational rest = eval(shift(w2, m), p) / pow_int(p.s, m);
    CHECK(eval(w2, p) == head + rest);
  }
}

TEST_CASE("alternatives match the exhaustive definition") {
  // spec example: in (3,3), the block 1,2 can also be written 2 lower/higher
  SplitMix64 rng(4242);
  for (int it = 0; it < 300; ++it) {
    const int s = 2 + static_cast<int>(rng.below(5));
    const Params p{s, s + static_cast<int>(rng.below(s - 1))};
    const int a = static_cast<int>(rng.below(p.r + 1));
    const int b = static_cast<int>(rng.below(p.r + 1));
    CHECK(alternatives(a, b, p) == oracles::alternatives_brute(a, b, p));
  }
}

TEST_CASE("alternative pairs preserve the evaluated value in context") {
  const Params p = kP33;
  for (int a = 0; a <= p.r; ++a) {
    for (int b = 0; b <= p.r; ++b) {
      for (const auto& [c, d] : alternatives(a, b, p)) {
        CHECK(eval(DigitSeq({a, b}, {0}), p) == eval(DigitSeq({c, d}, {0}), p));
      }
    }
  }
}

TEST_CASE("adjacent middle-window digits admit no alternatives") {
  // the defining property of N = {r-s+1..s-1}: a block of window digits
  // cannot be rewritten anywhere, which is what makes window tails rigid
  for (const Params& p : {kP22, kP33, kP34, kP57, Params{4, 5}, Params{6, 6}}) {
    for (int a = p.middle_low(); a <= p.middle_high(); ++a) {
      for (int b = p.middle_low(); b <= p.middle_high(); ++b) {
        CHECK(alternatives(a, b, p).empty());
      }
    }
    // and every digit outside N has at least one alternative for some b
    for (int a = 0; a <= p.r; ++a) {
      if (p.in_middle(a)) continue;
      bool any = false;
      for (int b = 0; b <= p.r; ++b) any = any || !alternatives(a, b, p).empty();
      CHECK(any);
    }
  }
}

TEST_CASE("greedy and lazy expansions match the worked example") {
  CHECK(greedy_digits(Rational(1, 2), kP22, 3) == std::vector<int>{1, 0, 0});
  CHECK(lazy_digits(Rational(1, 2), kP22, 3) == std::vector<int>{0, 0, 2});
  CHECK(greedy_digits(Rational(2), kP22, 3) == std::vector<int>{2, 2, 2});
  CHECK(lazy_digits(Rational(0), kP22, 3) == std::vector<int>{0, 0, 0});
}

TEST_CASE("greedy dominates lazy in stream order and both re-evaluate to x") {
  SplitMix64 rng(1337);
  for (int it = 0; it < 150; ++it) {
    const int s = 2 + static_cast<int>(rng.below(4));
    const Params p{s, s + static_cast<int>(rng.below(s - 1))};
    const std::uint64_t q = rng.range(2, 40);
    const std::uint64_t top = q * static_cast<std::uint64_t>(p.r) / (p.s - 1);
    const Rational x(BigInt(rng.below(top + 1)), BigInt(q));
    const std::size_t n = 24;
    const std::vector<int> hi = greedy_digits(x, p, n);
    const std::vector<int> lo = lazy_digits(x, p, n);
    // lexicographic dominance: at the first difference greedy is larger
    for (std::size_t k = 0; k < n; ++k) {
      if (hi[k] != lo[k]) {
        CHECK(hi[k] > lo[k]);
        break;
      }
    }
    // both are prefixes of valid expansions of x
    for (const std::vector<int>& digits : {hi, lo}) {
      Rational sum = 0;
      Rational scale = 1;
      for (int d : digits) {
        scale /= p.s;
        sum += Rational(d) * scale;
      }
      CHECK(sum <= x);
      CHECK(x <= sum + p.max_value() * scale);
    }
  }
}

TEST_CASE("greedy and lazy reject out-of-range values") {
  try {
    greedy_digits(Rational(5, 2), kP22, 4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValueOutOfRange);
  }
  CHECK_THROWS_AS(lazy_digits(Rational(-1, 2), kP22, 4), Error);
}

TEST_CASE("parse_number accepts fractions, integers, and finite decimals") {
  CHECK(parse_number("7/12", kP33) == Rational(7, 12));
  CHECK(parse_number("1", kP33) == Rational(1));
  CHECK(parse_number("0.625", kP33) == Rational(5, 8));
  CHECK(parse_number("1.50", kP33) == Rational(3, 2));
  CHECK(parse_number(" 3/2 ", kP33) == Rational(3, 2));
  CHECK(parse_number("0", kP33) == Rational(0));
}

TEST_CASE("parse_number rejects bad syntax and out-of-range values") {
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "2x", ".5", "1/2/3"}) {
    try {
      parse_number(bad, kP33);
      CHECK_MESSAGE(false, "expected ParseError for: ", bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
  for (const char* out : {"2", "-1/2", "1.51"}) {
    try {
      parse_number(out, kP33);  // max is 3/2
      CHECK_MESSAGE(false, "expected ValueOutOfRange for: ", out);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ValueOutOfRange);
    }
  }
}

TEST_CASE("rational helpers format exactly") {
  CHECK(to_string(Rational(7, 12)) == "7/12");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(decimal_string(Rational(1, 3), 6) == "0.333333");
  CHECK(decimal_string(Rational(5, 8), 4) == "0.6250");
  CHECK(decimal_string(Rational(3, 2), 0) == "1");
  CHECK(to_double(Rational(1, 2)) == 0.5);
  CHECK(pow_int(3, 4) == 81);
  CHECK(pow_int(10, 0) == 1);
}
