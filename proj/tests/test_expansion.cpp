#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "takagi/expansion.hpp"
#include "takagi/random_gen.hpp"

using namespace takagi;

TEST_CASE("literal values") {
  CHECK(parse_expansion("0.").value() == Rational(0));
  CHECK(parse_expansion("0.0110").value() == Rational(3, 8));
  CHECK(parse_expansion("0.(01)").value() == Rational(1, 3));
  CHECK(parse_expansion("0.(10)").value() == Rational(2, 3));
  CHECK(parse_expansion("0.01(1)").value() == Rational(1, 2));
  CHECK(parse_expansion("0.(1)").value() == Rational(1));
  CHECK(parse_expansion("0.1(10)").value() == Rational(5, 6));
  CHECK(parse_expansion("0.0011(01)").value() == Rational(5, 24));
  CHECK(parse_expansion("0.(0011)").value() == Rational(1, 5));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_expansion(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_expansion("1.01"), std::invalid_argument);
  CHECK_THROWS_AS(parse_expansion("0.2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_expansion("0.01()"), std::invalid_argument);
  CHECK_THROWS_AS(parse_expansion("0.01(0x)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_expansion("0.(01"), std::invalid_argument);
}

TEST_CASE("canonical periodic form") {
  // Non-primitive periods reduce, constant periods fold into plain tails,
  // and the period is rolled as early as possible.
  CHECK(parse_expansion("0.(0101)").str() == "0.(01)");
  CHECK(parse_expansion("0.(11)").str() == "0.(1)");
  CHECK(parse_expansion("0.01(00)").str() == "0.01");
  CHECK(parse_expansion("0.010(10)").str() == "0.(01)");
  CHECK(parse_expansion("0.01(1)").str() == "0.01(1)");
  CHECK(parse_expansion("0.0(01)").str() == "0.0(01)");
  CHECK(parse_expansion("0.(01)") == parse_expansion("0.01(01)"));
  CHECK(parse_expansion("0.(01)") == parse_expansion("0.0(10)"));
  CHECK_THROWS_AS(BinaryExpansion::periodic({}, {}), std::invalid_argument);
}

TEST_CASE("digits across tail kinds") {
  const BinaryExpansion x = parse_expansion("0.0011(01)");
  const int want[] = {0, 0, 1, 1, 0, 1, 0, 1, 0, 1};
  for (int j = 1; j <= 10; ++j) CHECK(x.digit(j) == want[j - 1]);
  const BinaryExpansion ones = parse_expansion("0.01(1)");
  CHECK(ones.digit(2) == 1);
  CHECK(ones.digit(3) == 1);
  CHECK(ones.digit(90) == 1);
  const BinaryExpansion z = parse_expansion("0.01");
  CHECK(z.digit(90) == 0);
}

TEST_CASE("dyadic twins") {
  const auto [zeros, ones] = dyadic_expansions(Rational(7, 16));
  CHECK(zeros.str() == "0.0111");
  CHECK(ones.str() == "0.0110(1)");
  CHECK(zeros.value() == Rational(7, 16));
  CHECK(ones.value() == Rational(7, 16));
  CHECK(real_equal(zeros, ones));
  CHECK_FALSE(zeros == ones);
  // Stream order separates the twins: the ones-tail form has a 0 where the
  // finite form has its last 1, so it compares smaller digit by digit.
  CHECK(ones < zeros);

  const auto [z, o] = dyadic_expansions(Rational(0));
  CHECK(z == o);
  CHECK(z.value() == Rational(0));
  CHECK_THROWS_AS(dyadic_expansions(Rational(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(dyadic_expansions(Rational(-1, 4)), std::out_of_range);
}

TEST_CASE("from_dyadic endpoints") {
  CHECK(BinaryExpansion::from_dyadic(Integer(0), 4).value() == Rational(0));
  CHECK(BinaryExpansion::from_dyadic(Integer(16), 4).value() == Rational(1));
  CHECK(BinaryExpansion::from_dyadic(Integer(6), 4).str() == "0.0110");
}

TEST_CASE("structural operations track values") {
  Rng rng(901);
  for (int i = 0; i < 400; ++i) {
    const BinaryExpansion x = random_expansion(rng, 10, true);
    CHECK(x.complement().value() == Rational(1) - x.value());
    CHECK(x.shift_right().value() * 2 == x.value());
    CHECK(x.shift_right().digit(1) == 0);
    const BinaryExpansion front = x.with_prefix({1, 0});
    CHECK(front.value() == Rational(1, 2) + x.value() * Rational(1, 4));
    CHECK(front.drop_digits(2) == x);
  }
}

TEST_CASE("deficiency profile") {
  const BinaryExpansion x = parse_expansion("0.0110");
  const int d[] = {1, 0, -1, 0, 1, 2};
  for (int j = 1; j <= 6; ++j) CHECK(deficiency_at(x, j) == d[j - 1]);
  const DigitProfile p = digit_profile(x, 4);
  CHECK(p.ones == 2);
  CHECK(p.zeros == 2);
  CHECK(p.deficiency == 0);
}

TEST_CASE("stream order agrees with real order off the twins") {
  std::vector<BinaryExpansion> pts = {
      parse_expansion("0."),       parse_expansion("0.001"),
      parse_expansion("0.(0011)"), parse_expansion("0.0011(01)"),
      parse_expansion("0.(01)"),   parse_expansion("0.0110"),
      parse_expansion("0.1"),      parse_expansion("0.(10)"),
      parse_expansion("0.11"),     parse_expansion("0.(1)"),
  };
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      CHECK(pts[i] < pts[j]);
      CHECK(pts[i].value() < pts[j].value());
    }
}

TEST_CASE("word helpers") {
  CHECK(word_to_string({0, 1, 1, 0}) == "0110");
  CHECK(word_from_string("0110") == DigitWord{0, 1, 1, 0});
  CHECK(word_value({0, 1, 1, 0}) == Integer(6));
  CHECK(word_deficiency({0, 1, 1, 0}) == 0);
  CHECK(word_deficiency({0, 0, 1}) == 1);
  CHECK(flipped({0, 1, 1, 0}) == DigitWord{1, 0, 0, 1});
}

TEST_CASE("random roundtrip with value cross-check") {
  Rng rng(777);
  for (int i = 0; i < 2000; ++i) {
    const BinaryExpansion x = random_expansion(rng, 14, true);
    const BinaryExpansion back = parse_expansion(x.str());
    CHECK(back == x);
    CHECK(back.value() == x.value());
    // Value agrees with a direct digit expansion to 60 places.
    Rational acc(0);
    for (int j = 1; j <= 60; ++j)
      if (x.digit(j)) acc += Rational::pow2(-j);
    CHECK(acc <= x.value());
    CHECK(x.value() - acc <= Rational::pow2(-60));
  }
}
