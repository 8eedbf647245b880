#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "takagi/rational.hpp"

namespace takagi {

using Digit = std::uint8_t;  // 0 or 1
using DigitWord = std::vector<Digit>;

DigitWord word_from_string(std::string_view bits);
std::string word_to_string(const DigitWord& w);
DigitWord flipped(DigitWord w);

/// (#zeros - #ones) over the whole word.
int word_deficiency(const DigitWord& w);

/// The word read as an integer in base 2, b_1 most significant.
Integer word_value(const DigitWord& w);

enum class Tail { kZeros, kOnes, kPeriodic };

/// One binary expansion 0.b1 b2 b3 ... of a real in [0,1]: a finite prefix
/// followed by a tail rule.  A dyadic rational has two distinct expansions
/// (0111... and 1000...) and they stay distinct here; use real_equal() or
/// value() when only the real matters.
///
/// Periodic tails are canonicalized on construction: the period word is
/// primitive (no shorter repetend), the phase is rolled as far left into
/// the tail as possible, and a degenerate all-zero or all-one period turns
/// into a kZeros / kOnes tail.  Prefixes are stored as given, so parsing
/// "0.0110" keeps all four digits; comparisons work on the digit stream and
/// therefore ignore such representational slack.
class BinaryExpansion {
 public:
  BinaryExpansion() = default;  // 0.000... = 0

  static BinaryExpansion zeros(DigitWord prefix);
  static BinaryExpansion ones(DigitWord prefix);
  static BinaryExpansion periodic(DigitWord prefix, DigitWord period);

  /// Expansion of k/2^depth ending in zeros; k = 2^depth yields 0.(1).
  static BinaryExpansion from_dyadic(const Integer& k, int depth);

  const DigitWord& prefix() const { return prefix_; }
  Tail tail() const { return tail_; }
  const DigitWord& period() const { return period_; }
  int prefix_size() const { return static_cast<int>(prefix_.size()); }

  Digit digit(int j) const;        // 1-based index into the stream
  DigitWord digits(int count) const;

  Rational value() const;
  bool is_dyadic() const { return tail_ != Tail::kPeriodic; }

  /// Digit stream of 1 - x (every digit flipped).
  BinaryExpansion complement() const;
  /// Digit stream of x/2 (a zero prepended).
  BinaryExpansion shift_right() const;
  /// Digits `front` followed by this stream, i.e. front + x/2^|front|.
  BinaryExpansion with_prefix(DigitWord front) const;
  /// The stream with its first `count` digits dropped, i.e. frac(2^count x).
  BinaryExpansion drop_digits(int count) const;

  /// Digit-stream equality: 0.011 == 0.0110 but 0.0110 != 0.0101(1).
  bool operator==(const BinaryExpansion& o) const;
  /// Lexicographic order on digit streams (= numeric order, with the two
  /// expansions of a dyadic adjacent: the 0111... form sorts first).
  std::strong_ordering operator<=>(const BinaryExpansion& o) const;

  /// Literal form: "0.0110", "0.(01)", "0.01(1)".
  std::string str() const;

 private:
  DigitWord prefix_;
  Tail tail_ = Tail::kZeros;
  DigitWord period_;  // nonempty iff tail_ == kPeriodic

  void canonicalize_periodic();
};

/// Parses "0.<bits>" or "0.<bits>(<bits>)".  A period of all ones or all
/// zeros is folded into the corresponding constant tail.  Throws
/// std::invalid_argument on malformed input (including an empty period).
BinaryExpansion parse_expansion(std::string_view text);

struct DigitProfile {
  int j = 0;
  int ones = 0;
  int zeros = 0;
  int deficiency = 0;  // j - 2*ones = zeros - ones
};

DigitProfile digit_profile(const BinaryExpansion& x, int j);

/// D_j(x) = j - 2*(number of ones among the first j digits); D_0 = 0.
int deficiency_at(const BinaryExpansion& x, int j);

/// True when the two expansions denote the same real number, whether or
/// not the digit streams agree.
bool real_equal(const BinaryExpansion& a, const BinaryExpansion& b);

/// Both expansions of a dyadic rational in [0,1]: first the one ending in
/// zeros, then the one ending in ones.  For 0 and 1 there is only one, so
/// both entries coincide.
std::pair<BinaryExpansion, BinaryExpansion> dyadic_expansions(const Rational& v);

}  // namespace takagi
