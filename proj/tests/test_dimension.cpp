#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "takagi/dimension.hpp"
#include "takagi/expansion.hpp"
#include "takagi/log_interval.hpp"
#include "takagi/omega.hpp"
#include "takagi/takagi_eval.hpp"

using namespace takagi;

TEST_CASE("first-return alphabets") {
  CHECK(alphabet_X(1).words == std::vector<DigitWord>{{0, 1}});
  CHECK(alphabet_X(2).words == std::vector<DigitWord>{{0, 0, 1, 1}});
  CHECK(alphabet_X(3).words ==
        std::vector<DigitWord>{{0, 0, 0, 1, 1, 1}, {0, 0, 1, 0, 1, 1}});
  const long counts[] = {0, 1, 1, 2, 5, 14, 42};
  for (int r = 1; r <= 6; ++r) {
    CHECK(alphabet_size(r) == Integer(counts[r]));
    CHECK(alphabet_X(r).words.size() == static_cast<size_t>(counts[r]));
  }
  CHECK_THROWS_AS(alphabet_X(0), std::invalid_argument);
  CHECK_THROWS_AS(alphabet_X(13), std::invalid_argument);
}

TEST_CASE("grid points in the flat set") {
  const auto pts = enumerate_gamma_points(2, 2);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == parse_expansion("0.(0011)"));
  CHECK(in_gamma(2, pts[0]));

  const auto pts3 = enumerate_gamma_points(3, 2);
  REQUIRE(pts3.size() == 4);
  for (size_t i = 0; i < pts3.size(); ++i) {
    CHECK(in_gamma(3, pts3[i]));
    if (i > 0) CHECK(pts3[i - 1].value() < pts3[i].value());
  }
  CHECK(in_gamma(1, parse_expansion("0.(01)")));
  CHECK_FALSE(in_gamma(2, parse_expansion("0.(01)")));
  CHECK_FALSE(in_gamma(2, parse_expansion("0.0011")));
  CHECK(in_gamma(3, parse_expansion("0.(000111001011)")));
  CHECK_FALSE(in_gamma(3, parse_expansion("0.(010101000111)")));  // balances at 2
}

TEST_CASE("members of the flat set sit in the nonnegative-digit set") {
  for (const auto& p : enumerate_gamma_points(3, 3)) {
    int d = 0;
    for (int j = 1; j <= 36; ++j) {
      d += p.digit(j) ? -1 : 1;
      CHECK(d >= 0);
    }
  }
}

TEST_CASE("box dimension at r = 3 is exactly one sixth") {
  const DimensionEstimate e = box_dimension_gamma(3, 4);
  REQUIRE(e.scales.size() == 4);
  for (int k = 1; k <= 4; ++k) {
    CHECK(e.scales[static_cast<size_t>(k - 1)].first == 6 * k);
    Integer expect = 1;
    mpz_mul_2exp(expect.get_mpz_t(), expect.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    CHECK(e.scales[static_cast<size_t>(k - 1)].second == expect);
  }
  CHECK(e.dimension.exact);
  CHECK(e.dimension.lo == Rational(1, 6));
  CHECK(e.dimension.hi == Rational(1, 6));
  CHECK(local_dim_lower(3) == Rational(1, 6));
}

TEST_CASE("box dimension at r = 4 is a tight log2(5)/8 enclosure") {
  const DimensionEstimate e = box_dimension_gamma(4, 2);
  CHECK_FALSE(e.dimension.exact);
  CHECK(e.dimension.lo < e.dimension.hi);
  CHECK(e.dimension.lo > Rational(29, 100));
  CHECK(e.dimension.hi < Rational(2903, 10000));
}

TEST_CASE("certified logarithm enclosures") {
  const RatInterval three = log2_interval(Integer(8));
  CHECK(three.exact);
  CHECK(three.lo == Rational(3));
  const RatInterval five = log2_interval(Integer(5));
  CHECK_FALSE(five.exact);
  CHECK(five.lo < five.hi);
  CHECK(five.lo > Rational(23219, 10000));
  CHECK(five.hi < Rational(23220, 10000));
  const RatInterval zero = ln_interval(1);
  CHECK(zero.exact);
  CHECK(zero.lo == Rational(0));
  const RatInterval ln3 = ln_interval(3);
  CHECK(ln3.lo > Rational(10986, 10000));
  CHECK(ln3.hi < Rational(10987, 10000));
  CHECK_THROWS_AS(log2_interval(Integer(0)), std::domain_error);
}

TEST_CASE("certified comparison of enclosures") {
  const RatInterval a{Rational(1, 3), Rational(1, 2), false};
  const RatInterval b{Rational(3, 5), Rational(2, 3), false};
  CHECK(a.certified_less(b) == std::optional<bool>(true));
  CHECK(b.certified_less(a) == std::optional<bool>(false));
  const RatInterval c{Rational(2, 5), Rational(3, 5), false};
  CHECK_FALSE(a.certified_less(c).has_value());
}

TEST_CASE("distortion pairs stay within the squeeze bounds") {
  const auto pts = enumerate_gamma_points(3, 2);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      const BilipschitzResult b = bilipschitz_check(3, pts[i], pts[j]);
      CHECK(b.ok);
      CHECK(b.ratio >= b.bound_lo);
      CHECK(b.ratio <= b.bound_hi);
      CHECK(b.bound_lo == Rational::pow2(-6));
      CHECK(b.bound_hi == Rational::pow2(6));
    }
  CHECK_THROWS_AS(bilipschitz_check(3, parse_expansion("0.(01)"),
                                    parse_expansion("0.(10)")),
                  std::invalid_argument);
}

TEST_CASE("function values increase strictly along the grid") {
  const auto pts = enumerate_gamma_points(3, 3);
  Rational prev(-1);
  for (const auto& p : pts) {
    const Rational v = level_image_point(3, p);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("spectrum table shape and certification") {
  const SpectrumTable t = spectrum_table(12);
  REQUIRE(t.rows.size() == 12);
  CHECK(t.r0 == 5);
  for (const auto& row : t.rows) {
    CHECK(row.alpha == Rational(1, 2L * row.r));
    CHECK(row.count == alphabet_size(row.r));
    CHECK(row.catalan_r == catalan(row.r));
    REQUIRE(row.exceeds.has_value());
    CHECK(*row.exceeds == (row.r >= 5));
  }
  // The r = 5 row: dim > 0.38, bound < 0.357.
  const SpectrumRow& r5 = t.rows[4];
  CHECK(r5.gamma_dim.lo > Rational(38, 100));
  CHECK(r5.abscissa_bound.hi < Rational(357, 1000));
  CHECK_THROWS_AS(spectrum_table(1), std::invalid_argument);
}
