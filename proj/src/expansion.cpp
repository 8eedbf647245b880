#include "takagi/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace takagi {

DigitWord word_from_string(std::string_view bits) {
  DigitWord w;
  w.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("digit word: expected only 0/1, got '" +
                                  std::string(bits) + "'");
    w.push_back(static_cast<Digit>(c - '0'));
  }
  return w;
}

std::string word_to_string(const DigitWord& w) {
  std::string s;
  s.reserve(w.size());
  for (Digit d : w) s.push_back(static_cast<char>('0' + d));
  return s;
}

DigitWord flipped(DigitWord w) {
  for (Digit& d : w) d = static_cast<Digit>(1 - d);
  return w;
}

int word_deficiency(const DigitWord& w) {
  int ones = 0;
  for (Digit d : w) ones += d;
  return static_cast<int>(w.size()) - 2 * ones;
}

Integer word_value(const DigitWord& w) {
  Integer v = 0;
  for (Digit d : w) {
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), 1);
    if (d) v += 1;
  }
  return v;
}

BinaryExpansion BinaryExpansion::zeros(DigitWord prefix) {
  BinaryExpansion x;
  x.prefix_ = std::move(prefix);
  x.tail_ = Tail::kZeros;
  return x;
}

BinaryExpansion BinaryExpansion::ones(DigitWord prefix) {
  BinaryExpansion x;
  x.prefix_ = std::move(prefix);
  x.tail_ = Tail::kOnes;
  return x;
}

BinaryExpansion BinaryExpansion::periodic(DigitWord prefix, DigitWord period) {
  if (period.empty())
    throw std::invalid_argument("BinaryExpansion: empty period");
  BinaryExpansion x;
  x.prefix_ = std::move(prefix);
  x.tail_ = Tail::kPeriodic;
  x.period_ = std::move(period);
  x.canonicalize_periodic();
  return x;
}

void BinaryExpansion::canonicalize_periodic() {
  // Shrink to the primitive period.
  const int q = static_cast<int>(period_.size());
  for (int d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    bool repeats = true;
    for (int i = d; i < q && repeats; ++i)
      repeats = (period_[i] == period_[i - d]);
    if (repeats) {
      period_.resize(d);
      break;
    }
  }
  // A constant period is not really periodic.
  const bool all0 = std::all_of(period_.begin(), period_.end(),
                                [](Digit d) { return d == 0; });
  const bool all1 = std::all_of(period_.begin(), period_.end(),
                                [](Digit d) { return d == 1; });
  if (all0 || all1) {
    tail_ = all0 ? Tail::kZeros : Tail::kOnes;
    period_.clear();
    return;
  }
  // Roll the phase left: ...b(P) with b == last digit of P is the same
  // stream as ...(P rotated right) with b absorbed into the tail.
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    period_.pop_back();
    period_.insert(period_.begin(), prefix_.back());
    prefix_.pop_back();
  }
}

BinaryExpansion BinaryExpansion::from_dyadic(const Integer& k, int depth) {
  if (depth < 0) throw std::invalid_argument("from_dyadic: negative depth");
  Integer top = 1;
  mpz_mul_2exp(top.get_mpz_t(), top.get_mpz_t(), depth);
  if (k < 0 || k > top)
    throw std::out_of_range("from_dyadic: k outside [0, 2^depth]");
  if (k == top) return ones({});
  DigitWord w(static_cast<size_t>(depth));
  for (int j = 0; j < depth; ++j)
    w[static_cast<size_t>(j)] =
        static_cast<Digit>(mpz_tstbit(k.get_mpz_t(), depth - 1 - j));
  return zeros(std::move(w));
}

Digit BinaryExpansion::digit(int j) const {
  if (j < 1) throw std::out_of_range("digit index is 1-based");
  const int L = prefix_size();
  if (j <= L) return prefix_[static_cast<size_t>(j - 1)];
  switch (tail_) {
    case Tail::kZeros: return 0;
    case Tail::kOnes: return 1;
    case Tail::kPeriodic:
      return period_[static_cast<size_t>((j - L - 1) % static_cast<int>(period_.size()))];
  }
  return 0;
}

DigitWord BinaryExpansion::digits(int count) const {
  DigitWord w;
  w.reserve(static_cast<size_t>(count));
  for (int j = 1; j <= count; ++j) w.push_back(digit(j));
  return w;
}

Rational BinaryExpansion::value() const {
  const int L = prefix_size();
  const Integer P = word_value(prefix_);
  const Rational scale = Rational::pow2(-L);
  switch (tail_) {
    case Tail::kZeros: return Rational(P) * scale;
    case Tail::kOnes: return Rational(P + 1) * scale;
    case Tail::kPeriodic: {
      Integer den = 1;
      mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), period_.size());
      den -= 1;
      return (Rational(P) + Rational(word_value(period_), den)) * scale;
    }
  }
  return Rational();
}

BinaryExpansion BinaryExpansion::complement() const {
  switch (tail_) {
    case Tail::kZeros: return ones(flipped(prefix_));
    case Tail::kOnes: return zeros(flipped(prefix_));
    case Tail::kPeriodic: return periodic(flipped(prefix_), flipped(period_));
  }
  return {};
}

BinaryExpansion BinaryExpansion::shift_right() const {
  DigitWord p;
  p.reserve(prefix_.size() + 1);
  p.push_back(0);
  p.insert(p.end(), prefix_.begin(), prefix_.end());
  BinaryExpansion x = *this;
  x.prefix_ = std::move(p);
  return x;
}

BinaryExpansion BinaryExpansion::with_prefix(DigitWord front) const {
  front.insert(front.end(), prefix_.begin(), prefix_.end());
  switch (tail_) {
    case Tail::kZeros: return zeros(std::move(front));
    case Tail::kOnes: return ones(std::move(front));
    case Tail::kPeriodic: return periodic(std::move(front), period_);
  }
  return {};
}

BinaryExpansion BinaryExpansion::drop_digits(int count) const {
  if (count < 0) throw std::invalid_argument("drop_digits: negative count");
  const int L = prefix_size();
  if (count <= L) {
    DigitWord rest(prefix_.begin() + count, prefix_.end());
    switch (tail_) {
      case Tail::kZeros: return zeros(std::move(rest));
      case Tail::kOnes: return ones(std::move(rest));
      case Tail::kPeriodic: return periodic(std::move(rest), period_);
    }
  }
  switch (tail_) {
    case Tail::kZeros: return {};
    case Tail::kOnes: return ones({});
    case Tail::kPeriodic: {
      const int q = static_cast<int>(period_.size());
      const int shift = (count - L) % q;
      DigitWord rot(period_.begin() + shift, period_.end());
      rot.insert(rot.end(), period_.begin(), period_.begin() + shift);
      return periodic({}, std::move(rot));
    }
  }
  return {};
}

namespace {

int tail_period_size(const BinaryExpansion& x) {
  return x.tail() == Tail::kPeriodic ? static_cast<int>(x.period().size()) : 1;
}

}  // namespace

std::strong_ordering BinaryExpansion::operator<=>(const BinaryExpansion& o) const {
  // Two eventually periodic streams that agree past both prefixes for a
  // full common period agree everywhere.
  const int pa = tail_period_size(*this);
  const int pb = tail_period_size(o);
  const int horizon = std::max(prefix_size(), o.prefix_size()) + std::lcm(pa, pb);
  for (int j = 1; j <= horizon; ++j) {
    const Digit a = digit(j);
    const Digit b = o.digit(j);
    if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool BinaryExpansion::operator==(const BinaryExpansion& o) const {
  return (*this <=> o) == std::strong_ordering::equal;
}

std::string BinaryExpansion::str() const {
  std::string s = "0." + word_to_string(prefix_);
  if (tail_ == Tail::kOnes) s += "(1)";
  else if (tail_ == Tail::kPeriodic) s += "(" + word_to_string(period_) + ")";
  return s;
}

BinaryExpansion parse_expansion(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("parse_expansion: malformed literal '" +
                                 std::string(text) + "'");
  };
  if (text.size() < 2 || text[0] != '0' || text[1] != '.') throw bad();
  std::string_view body = text.substr(2);
  std::string_view prefix_part = body;
  std::string_view period_part;
  const auto open = body.find('(');
  if (open != std::string_view::npos) {
    if (body.back() != ')' || open + 2 > body.size() - 1) throw bad();
    prefix_part = body.substr(0, open);
    period_part = body.substr(open + 1, body.size() - open - 2);
    if (period_part.empty()) throw bad();
    if (period_part.find_first_of("()") != std::string_view::npos) throw bad();
  }
  DigitWord prefix, period;
  try {
    prefix = word_from_string(prefix_part);
    if (!period_part.empty()) period = word_from_string(period_part);
  } catch (const std::invalid_argument&) {
    throw bad();
  }
  if (period.empty()) return BinaryExpansion::zeros(std::move(prefix));
  const bool all0 = std::all_of(period.begin(), period.end(),
                                [](Digit d) { return d == 0; });
  const bool all1 = std::all_of(period.begin(), period.end(),
                                [](Digit d) { return d == 1; });
  if (all0) return BinaryExpansion::zeros(std::move(prefix));
  if (all1) return BinaryExpansion::ones(std::move(prefix));
  return BinaryExpansion::periodic(std::move(prefix), std::move(period));
}

DigitProfile digit_profile(const BinaryExpansion& x, int j) {
  if (j < 0) throw std::invalid_argument("digit_profile: negative index");
  DigitProfile p;
  p.j = j;
  for (int i = 1; i <= j; ++i) p.ones += x.digit(i);
  p.zeros = j - p.ones;
  p.deficiency = p.zeros - p.ones;
  return p;
}

int deficiency_at(const BinaryExpansion& x, int j) {
  return digit_profile(x, j).deficiency;
}

bool real_equal(const BinaryExpansion& a, const BinaryExpansion& b) {
  return a.value() == b.value();
}

std::pair<BinaryExpansion, BinaryExpansion> dyadic_expansions(const Rational& v) {
  if (v < Rational(0) || v > Rational(1))
    throw std::out_of_range("dyadic_expansions: value outside [0,1]");
  const Integer den = v.denominator();
  if (mpz_popcount(den.get_mpz_t()) != 1)
    throw std::invalid_argument("dyadic_expansions: not a dyadic rational");
  const int depth = static_cast<int>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
  const Integer num = v.numerator();
  const BinaryExpansion low = BinaryExpansion::from_dyadic(num, depth);
  if (v == Rational(0) || v == Rational(1)) return {low, low};
  BinaryExpansion high = BinaryExpansion::ones(
      BinaryExpansion::from_dyadic(num - 1, depth).digits(depth));
  return {low, high};
}

}  // namespace takagi
