#pragma once

// Reference implementations for the tests, deliberately independent of the
// library's algorithms: straight series summation, brute-force word filters,
// digit scans.  Slow is fine here.

#include <vector>

#include "takagi/expansion.hpp"
#include "takagi/rational.hpp"

namespace oracle {

using takagi::Digit;
using takagi::DigitWord;
using takagi::Integer;
using takagi::Rational;

// Distance from y in [0,1) to the nearest integer.
inline Rational nearest_int_dist(const Rational& y) {
  return y <= Rational(1, 2) ? y : Rational(1) - y;
}

// The defining series at a dyadic k/2^n.  Terms vanish from j = n on, so
// the sum over j < n is exact.
inline Rational tau_series_dyadic(const Integer& k, int n) {
  Rational sum(0);
  Rational y = Rational(k) * Rational::pow2(-n);
  for (int j = 0; j < n; ++j) {
    sum += nearest_int_dist(y) * Rational::pow2(-j);
    y *= 2;
    if (y >= Rational(1)) y -= Rational(1);
  }
  return sum;
}

// Truncated series at an arbitrary rational in [0,1].  The tail it drops
// lies in [0, 2^-terms].
inline Rational tau_series_partial(const Rational& x, int terms) {
  Rational sum(0);
  Rational y = x;
  if (y == Rational(1)) y = Rational(0);
  for (int j = 0; j < terms; ++j) {
    sum += nearest_int_dist(y) * Rational::pow2(-j);
    y *= 2;
    if (y >= Rational(1)) y -= Rational(1);
  }
  return sum;
}

// Digit scan on the terminating (zeros-tail) expansion of k/2^n: member of
// the nonnegative-deficiency set iff the running excess of zeros never goes
// negative within the first n digits.
inline bool member_dyadic(const Integer& k, int n) {
  int d = 0;
  for (int j = n - 1; j >= 0; --j) {
    d += mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(j)) ? -1 : 1;
    if (d < 0) return false;
  }
  return true;
}

// All words of length 2m whose zero-excess stays nonnegative and ends at
// zero, by exhaustive filter over 4^m candidates.
inline std::vector<DigitWord> breakpoints_brute(int m, bool small_only) {
  std::vector<DigitWord> out;
  const unsigned long top = 1UL << (2 * m);
  for (unsigned long w = 0; w < top; ++w) {
    DigitWord word(static_cast<size_t>(2 * m));
    int d = 0;
    bool ok = true;
    for (int j = 0; j < 2 * m; ++j) {
      const Digit bit = static_cast<Digit>((w >> (2 * m - 1 - j)) & 1UL);
      word[static_cast<size_t>(j)] = bit;
      d += bit ? -1 : 1;
      if (d < 0) {
        ok = false;
        break;
      }
    }
    if (!ok || d != 0) continue;
    if (small_only && (m < 1 || word[word.size() - 1] != 1 || word[word.size() - 2] != 1))
      continue;
    out.push_back(word);
  }
  return out;
}

inline Integer binom(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace oracle
