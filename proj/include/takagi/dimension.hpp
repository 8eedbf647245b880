#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "takagi/expansion.hpp"
#include "takagi/log_interval.hpp"
#include "takagi/rational.hpp"

namespace takagi {

/// The alphabet of first-return words at half-period r: balanced words of
/// length 2r whose deficiency is strictly positive at every interior
/// position.  The flat Cantor set at parameter r is the set of streams
/// spelled from this alphabet.
struct AlphabetX {
  int r = 0;
  std::vector<DigitWord> words;  // lexicographic
};

AlphabetX alphabet_X(int r);

/// |X_2r| without enumerating: the (r-1)-st Catalan number, the count of
/// first-return lattice loops of length 2r.
Integer alphabet_size(int r);

/// All purely periodic streams made of k alphabet blocks, the last block
/// repeating forever: prefix w_1..w_{k-1}, tail (w_k).  Ascending order.
std::vector<BinaryExpansion> enumerate_gamma_points(int r, int k);

/// Exact membership test for the flat Cantor set at parameter r: the
/// deficiency is zero exactly at the multiples of 2r.  Total for the
/// eventually periodic streams this library works with (constant tails
/// always fail; a periodic tail is checked over one combined period).
bool in_gamma(int r, const BinaryExpansion& x);

/// Box-counting data: at depth 2rk the set meets exactly |X_2r|^k dyadic
/// intervals, so log2(count)/depth is constant in k and equals
/// log2|X_2r| / (2r), the box dimension.
struct DimensionEstimate {
  int r = 0;
  std::vector<std::pair<int, Integer>> scales;  // (depth 2rk, box count)
  RatInterval dimension;                        // log2|X| / 2r
};

DimensionEstimate box_dimension_gamma(int r, int k_max);

/// Lower bound 1/(2r) for the local dimension of the level measure along
/// the flat Cantor set, read off the bi-Lipschitz distortion bound.
Rational local_dim_lower(int r);

/// Exact two-sided distortion check for tau restricted to the flat Cantor
/// set at parameter r:
///   2^-2r (x2 - x1) <= tau(x2) - tau(x1) <= 2^2r (x2 - x1).
/// Requires x1 < x2, both in the set.
struct BilipschitzResult {
  bool ok = false;
  Rational ratio;      // (tau(x2) - tau(x1)) / (x2 - x1)
  Rational bound_lo;   // 2^-2r
  Rational bound_hi;   // 2^2r
};

BilipschitzResult bilipschitz_check(int r, const BinaryExpansion& x1,
                                    const BinaryExpansion& x2);

/// The image tau(x) of a point of the flat Cantor set; the level whose
/// level set the distortion bound shows to have dimension >= 1/(2r).
Rational level_image_point(int r, const BinaryExpansion& x);

/// One row of the dimension spectrum summary.
struct SpectrumRow {
  int r = 0;
  Rational alpha;            // 1/(2r), the local dimension lower bound
  Integer count;             // |X_2r| by the first-return law
  Integer catalan_r;         // C_r, the coarser count kept for comparison
  RatInterval gamma_dim;     // log2(count)/(2r)
  RatInterval abscissa_bound;   // 1 - 2 ln(r)/r
  RatInterval ordinate_bound;   // 1 - ln(r)/r
  std::optional<bool> exceeds;  // certified gamma_dim > abscissa_bound
};

/// Rows for r = 1..r_max plus the least r0 from which every row exceeds
/// the abscissa bound (0 when no such r0 exists in range).
struct SpectrumTable {
  std::vector<SpectrumRow> rows;
  int r0 = 0;
};

SpectrumTable spectrum_table(int r_max);

}  // namespace takagi
