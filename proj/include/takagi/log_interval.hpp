#pragma once

#include <optional>

#include "takagi/rational.hpp"

namespace takagi {

/// A certified enclosure lo <= v <= hi of a real by exact rationals.
/// `exact` means lo == hi == v.  Produced for logarithms by directed
/// rounding at more than enough precision; consumed by comparisons that
/// must never silently depend on floating point.
struct RatInterval {
  Rational lo, hi;
  bool exact = false;

  static RatInterval point(Rational v) { return {v, v, true}; }

  RatInterval operator+(const RatInterval& o) const {
    return {lo + o.lo, hi + o.hi, exact && o.exact};
  }
  RatInterval operator-(const RatInterval& o) const {
    return {lo - o.hi, hi - o.lo, exact && o.exact};
  }
  /// Scale by a nonnegative rational.
  RatInterval scaled(const Rational& c) const { return {lo * c, hi * c, exact}; }

  /// Certified strict comparison; nullopt when the enclosures overlap.
  std::optional<bool> certified_less(const RatInterval& o) const {
    if (hi < o.lo) return true;
    if (lo >= o.hi) return false;
    return std::nullopt;
  }

  std::string str() const {
    return exact ? lo.str() : "[" + lo.str() + ", " + hi.str() + "]";
  }
};

/// log2(n) for n >= 1.  Exact (a point interval) when n is a power of two;
/// otherwise an enclosure of width below 2^-96.
RatInterval log2_interval(const Integer& n);

/// Natural log of n >= 1, enclosure as above; exact only for n = 1.
RatInterval ln_interval(unsigned long n);

}  // namespace takagi
