#pragma once

#include <vector>

#include "takagi/expansion.hpp"
#include "takagi/rational.hpp"

namespace takagi {

/// tau(k/2^depth), exact.  Requires 0 <= k <= 2^depth.
Rational tau_dyadic(const Integer& k, int depth);

/// tau at any dyadic rational in [0,1] given as a Rational.
Rational tau_dyadic(const Rational& x);

/// tau at any eventually periodic expansion, exact.  Constant tails reduce
/// to the dyadic case; a periodic tail is resolved by solving the linear
/// self-similarity relation the tail satisfies.
Rational tau(const BinaryExpansion& x);

/// Exact range bounds for tau over the dyadic interval a digit prefix
/// spans.  With x0 = .prefix, n = |prefix|, D = deficiency(prefix):
/// every extension y of the prefix has lo <= tau(y) <= hi, with
///   lo = max(0, tau(x0) + min(0, D)/2^n)
///   hi = min(2/3, tau(x0) + (2/3 + max(0, D))/2^n).
struct TauBounds {
  Integer k;        // interval is [k/2^depth, (k+1)/2^depth]
  int depth = 0;
  int deficiency = 0;
  Rational lo, hi;
};

TauBounds tau_bounds(const DigitWord& prefix);

/// Checks tau(x) == tau(1-x) and 2*tau(x/2) == tau(x) + x, both exact.
bool verify_functional_equations(const BinaryExpansion& x);

/// tau(k/2^depth) * 2^depth for k = 0..2^depth, by midpoint refinement:
/// each level's new midpoint value is the mean of its neighbours plus the
/// current mesh width.  Exact in 64-bit integers for depth <= 40.
std::vector<unsigned long long> tau_grid_scaled(int depth);

}  // namespace takagi
