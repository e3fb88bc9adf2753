#include "rns/digit_seq.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "rns/automaton.hpp"

namespace rns {

namespace {

// Length of the shortest word w' with w = w'^k (the primitive root of w).
std::size_t primitive_root_length(const std::vector<int>& w) {
  for (std::size_t cand = 1; cand < w.size(); ++cand) {
    if (w.size() % cand != 0) continue;
    bool ok = true;
    for (std::size_t i = cand; i < w.size() && ok; ++i) {
      ok = w[i] == w[i % cand];
    }
    if (ok) return cand;
  }
  return w.size();
}

void require_digits_nonneg(const std::vector<int>& digits) {
  for (int d : digits) {
    if (d < 0) {
      fail(ErrorCode::DigitOutOfAlphabet,
           "negative digit " + std::to_string(d));
    }
  }
}

void require_digits_in_alphabet(const DigitSeq& seq, const Params& p) {
  if (seq.max_digit() > p.r) {
    fail(ErrorCode::DigitOutOfAlphabet,
         "digit " + std::to_string(seq.max_digit()) + " exceeds alphabet max " +
             std::to_string(p.r));
  }
}

}  // namespace

DigitSeq::DigitSeq(std::vector<int> preperiod, std::vector<int> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  require_digits_nonneg(preperiod_);
  require_digits_nonneg(period_);
  if (period_.empty()) period_ = {0};
  period_.resize(primitive_root_length(period_));
  // Absorb any preperiod tail that already repeats the period: rotating the
  // period right by one swallows one trailing digit without changing the
  // infinite stream.
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    preperiod_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

int DigitSeq::digit_at(std::size_t k) const {
  if (k == 0) throw std::out_of_range("digit positions are 1-based");
  if (k <= preperiod_.size()) return preperiod_[k - 1];
  return period_[(k - preperiod_.size() - 1) % period_.size()];
}

int DigitSeq::max_digit() const {
  int m = 0;
  for (int d : preperiod_) m = std::max(m, d);
  for (int d : period_) m = std::max(m, d);
  return m;
}

int DigitSeq::compare_streams(const DigitSeq& a, const DigitSeq& b) {
  if (a == b) return 0;
  // Streams that agree past both preperiods for a full lcm of the period
  // lengths agree everywhere; one extra position decides any difference.
  std::size_t bound = std::max(a.preperiod_.size(), b.preperiod_.size()) +
                      a.period_.size() * b.period_.size() + 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    int da = a.digit_at(k);
    int db = b.digit_at(k);
    if (da != db) return da < db ? -1 : 1;
  }
  return 0;
}

namespace {

std::string strip_spaces(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

std::vector<int> parse_digit_list(const std::string& text, bool allow_empty) {
  std::vector<int> digits;
  if (text.empty()) {
    if (allow_empty) return digits;
    fail(ErrorCode::ParseError, "empty digit list");
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) {
      fail(ErrorCode::ParseError, "expected digit at '" + text.substr(start) + "'");
    }
    if (pos - start > 9) {
      fail(ErrorCode::ParseError, "digit value too large: " + text.substr(start, pos - start));
    }
    digits.push_back(std::stoi(text.substr(start, pos - start)));
    if (pos < text.size()) {
      if (text[pos] != ',') {
        fail(ErrorCode::ParseError, std::string("expected ',' at '") + text.substr(pos) + "'");
      }
      ++pos;
      if (pos == text.size()) fail(ErrorCode::ParseError, "trailing ',' in digit list");
    }
  }
  return digits;
}

}  // namespace

DigitSeq parse_digit_seq(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.empty()) fail(ErrorCode::ParseError, "empty digit sequence");
  std::size_t open = s.find('(');
  if (open == std::string::npos) {
    return DigitSeq(parse_digit_list(s, false), {0});
  }
  if (s.back() != ')') {
    fail(ErrorCode::ParseError, "expected ')' at end of '" + text + "'");
  }
  std::string pre = s.substr(0, open);
  std::string per = s.substr(open + 1, s.size() - open - 2);
  if (per.find('(') != std::string::npos) {
    fail(ErrorCode::ParseError, "nested '(' in '" + text + "'");
  }
  return DigitSeq(parse_digit_list(pre, true), parse_digit_list(per, false));
}

std::string format_digit_seq(const DigitSeq& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.preperiod().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(seq.preperiod()[i]);
  }
  out += "(";
  for (std::size_t i = 0; i < seq.period().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(seq.period()[i]);
  }
  out += ")";
  return out;
}

Rational eval(const DigitSeq& seq, const Params& p) {
  require_digits_in_alphabet(seq, p);
  const auto& pre = seq.preperiod();
  const auto& per = seq.period();
  BigInt pre_num = 0;
  for (int d : pre) pre_num = pre_num * p.s + d;
  BigInt per_num = 0;
  for (int d : per) per_num = per_num * p.s + d;
  BigInt s_m = pow_int(p.s, pre.size());
  BigInt s_p_minus_1 = pow_int(p.s, per.size()) - 1;
  // sum = pre_num/s^m + per_num/(s^m (s^p - 1))
  return Rational(pre_num * s_p_minus_1 + per_num, s_m * s_p_minus_1);
}

DigitSeq reflect(const DigitSeq& seq, const Params& p) {
  require_digits_in_alphabet(seq, p);
  std::vector<int> pre = seq.preperiod();
  std::vector<int> per = seq.period();
  for (int& d : pre) d = p.r - d;
  for (int& d : per) d = p.r - d;
  return DigitSeq(std::move(pre), std::move(per));
}

DigitSeq shift(const DigitSeq& seq, std::size_t m) {
  const auto& pre = seq.preperiod();
  const auto& per = seq.period();
  if (m <= pre.size()) {
    return DigitSeq(std::vector<int>(pre.begin() + m, pre.end()), per);
  }
  std::size_t offset = (m - pre.size()) % per.size();
  std::vector<int> rotated(per.begin() + offset, per.end());
  rotated.insert(rotated.end(), per.begin(), per.begin() + offset);
  return DigitSeq({}, std::move(rotated));
}

std::vector<std::pair<int, int>> alternatives(int a, int b, const Params& p) {
  if (!p.in_alphabet(a) || !p.in_alphabet(b)) {
    fail(ErrorCode::DigitOutOfAlphabet,
         "digits (" + std::to_string(a) + "," + std::to_string(b) +
             ") outside alphabet 0.." + std::to_string(p.r));
  }
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c <= p.r; ++c) {
    // Carrying delta = a - c out of the first position demands d = b + s*delta.
    long long d = b + static_cast<long long>(p.s) * (a - c);
    if (c == a) continue;
    if (d >= 0 && d <= p.r) out.emplace_back(c, static_cast<int>(d));
  }
  return out;
}

namespace {

std::vector<int> extremal_digits(const Rational& x, const Params& p, std::size_t n,
                                 bool greedy) {
  if (x < 0 || x > p.max_value()) {
    fail(ErrorCode::ValueOutOfRange,
         "value " + to_string(x) + " outside [0, " + to_string(p.max_value()) + "]");
  }
  std::vector<int> digits;
  digits.reserve(n);
  Rational y = x;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> options = admissible_digits(y, p);
    int a = greedy ? options.back() : options.front();
    digits.push_back(a);
    y = Rational(p.s) * y - a;
  }
  return digits;
}

}  // namespace

std::vector<int> greedy_digits(const Rational& x, const Params& p, std::size_t n) {
  return extremal_digits(x, p, n, true);
}

std::vector<int> lazy_digits(const Rational& x, const Params& p, std::size_t n) {
  return extremal_digits(x, p, n, false);
}

Rational parse_number(const std::string& text, const Params& p) {
  std::string s = strip_spaces(text);
  if (s.empty()) fail(ErrorCode::ParseError, "empty number");
  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    pos = 1;
  }
  auto read_digits = [&](const char* what) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) {
      fail(ErrorCode::ParseError, std::string("expected ") + what + " in '" + text + "'");
    }
    return s.substr(start, pos - start);
  };
  std::string whole = read_digits("digits");
  Rational value;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::string denom = read_digits("denominator");
    if (pos != s.size()) fail(ErrorCode::ParseError, "trailing characters in '" + text + "'");
    BigInt d(denom);
    if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    value = Rational(BigInt(whole), d);
  } else if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::string frac = read_digits("fractional digits");
    if (pos != s.size()) fail(ErrorCode::ParseError, "trailing characters in '" + text + "'");
    BigInt scale = pow_int(10, frac.size());
    value = Rational(BigInt(whole) * scale + BigInt(frac), scale);
  } else {
    if (pos != s.size()) fail(ErrorCode::ParseError, "trailing characters in '" + text + "'");
    value = Rational(BigInt(whole));
  }
  if (negative) value = -value;
  if (value < 0 || value > p.max_value()) {
    fail(ErrorCode::ValueOutOfRange,
         "value " + to_string(value) + " outside [0, " + to_string(p.max_value()) + "]");
  }
  return value;
}

}  // namespace rns
