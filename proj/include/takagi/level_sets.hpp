#pragma once

#include <vector>

#include "takagi/expansion.hpp"
#include "takagi/rational.hpp"
#include "takagi/takagi_eval.hpp"

namespace takagi {

enum class BalanceTail {
  kFinite,    // only finitely many balanced positions exist
  kInfinite,  // balanced positions recur forever (periodically)
};

/// The balanced positions { j : D_j(x) = 0 } of an expansion, listed up to
/// j_max, plus a certified classification of whether more occur beyond any
/// bound.  blocks[i] holds the digits strictly after balance point i-1 and
/// up to balance point i (with 0 acting as balance point -1).
struct BlockDecomposition {
  std::vector<int> balance_points;  // ascending, all <= j_max
  BalanceTail tail_kind = BalanceTail::kFinite;
  std::vector<DigitWord> blocks;
};

BlockDecomposition balance_set(const BinaryExpansion& x, int j_max);

/// Complete balance structure, independent of any scan bound.  For the
/// finite kind, `points` is the whole balance set.  For the infinite kind,
/// `points` runs up to `anchor`, the first balanced position at or past
/// the end of the prefix (0 when the prefix is empty and balanced), after
/// which balanced positions recur with period `period` in lockstep with
/// the digit tail.
struct CompleteBalance {
  std::vector<int> points;
  BalanceTail kind = BalanceTail::kFinite;
  int anchor = 0;  // infinite kind only
  int period = 0;  // infinite kind only
};

CompleteBalance complete_balance(const BinaryExpansion& x);

/// Extends `points` of an infinite-kind structure until it holds at least
/// `count` entries.
void extend_balance_points(const BinaryExpansion& x, CompleteBalance& cb, int count);

/// The smallest digit stream reachable by flipping blocks between
/// consecutive balance points.  Each block may be complemented
/// independently without changing tau; the minimum flips every block that
/// starts with a 1.  The result lies in the closure of the deficient set:
/// D_j >= 0 for all j.
BinaryExpansion leftmost_equivalent(const BinaryExpansion& x);

struct LocalLevelSet {
  BinaryExpansion representative;  // leftmost member
  BlockDecomposition structure;
  bool finite = true;
  Integer expansion_count;  // 2^(blocks incl. the final infinite one); 0 when uncountable
};

LocalLevelSet local_level_set(const BinaryExpansion& x);

/// All members obtained by flipping any subset of the first `block_limit`
/// blocks (and, in the finite case, optionally the infinite tail block).
/// Finite case: block_limit >= #finite blocks required, enumeration is the
/// entire class.  Infinite case: 2^block_limit members of an uncountable
/// class.  Deterministic order: flip masks counted from 0 upward, bit i
/// flipping block i.
std::vector<BinaryExpansion> enumerate_local_level_set(const BinaryExpansion& x,
                                                       int block_limit);

struct DyadicInterval {
  Integer k;
  int depth = 0;
  Rational left() const { return Rational(k) * Rational::pow2(-depth); }
  Rational right() const { return Rational(k + 1) * Rational::pow2(-depth); }
};

struct ConfirmedPoint {
  BinaryExpansion point;
  Rational value;  // the real number, tau(point) equals the queried level
};

/// Exact branch-and-bound cover of a level set { x : tau(x) = y }.
/// `possible` lists the surviving depth-`depth` dyadic intervals in
/// left-to-right order; `confirmed` lists exact solutions found at interval
/// endpoints or as alternating-tail points, deduplicated by real value and
/// sorted ascending.  Soundness: every solution lies in some possible
/// interval or is confirmed.  A subtree is pruned when y falls outside its
/// exact range envelope, and when y equals an envelope edge that only
/// endpoints can attain.
struct LevelCover {
  Rational level;
  int depth = 0;
  bool in_range = true;  // false iff y outside [0, 2/3]; everything empty then
  std::vector<DyadicInterval> possible;
  std::vector<ConfirmedPoint> confirmed;
};

LevelCover enumerate_level_cover(const Rational& y, int depth);

/// True when x lies in one of the cover's possible intervals (endpoints
/// included) or matches a confirmed value.
bool cover_contains(const LevelCover& cover, const Rational& x);

/// Expected-size partial sum S_M = sum_{m<=M} binom(2m, m) 2^-(2m+1);
/// S_M -> 2 and the full-level-set expectation argument reads off of it.
Rational expected_cardinality_partial(int m_max);

/// Number of balanced positions of a balanced nonnegative word (deficiency
/// zero at the end, nonnegative throughout), the final position included:
/// equivalently the number of blocks the word splits into.  Throws if the
/// word is not of that shape.
int r_of(const DigitWord& balanced_word);

}  // namespace takagi
