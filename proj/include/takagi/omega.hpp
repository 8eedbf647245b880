#pragma once

#include <optional>
#include <string>
#include <vector>

#include "takagi/expansion.hpp"
#include "takagi/rational.hpp"

namespace takagi {

/// Decision for membership in the nonnegative-deficiency set
/// { x : D_j(x) >= 0 for all j >= 1 }.  Total: tails are classified
/// exactly, so the answer never depends on a scan bound.
struct OmegaResult {
  bool member = false;
  int first_violation = 0;  // least j with D_j < 0; meaningful iff !member
};

OmegaResult omega_membership(const BinaryExpansion& x);

/// True iff D_j(x) > threshold for every j > start, given that digits
/// 1..start are already accounted for in the caller's bookkeeping.  Used
/// with threshold 0 for strict interior conditions.
bool deficiency_stays_above(const BinaryExpansion& x, int start, int threshold);

enum class BreakpointKind {
  kFull,   // balanced nonnegative words: D_j >= 0 for j < 2m, D_2m = 0
  kSmall,  // the Full words ending in two ones (plus the empty word)
};

struct BreakpointWord {
  DigitWord word;  // length 2m; empty for the root breakpoint
  int m() const { return static_cast<int>(word.size()) / 2; }
};

/// All breakpoint words of length 2m in lexicographic order.  Full count
/// is the m-th Catalan number; Small count is C_m - C_{m-1} for m >= 2.
std::vector<BreakpointWord> enumerate_breakpoints(int m, BreakpointKind kind);

Integer catalan(int m);

/// An open interval of the complement of the nonnegative-deficiency set:
/// its Small word splits as b_1..b_l 0 1^k with k trailing ones, the left
/// endpoint is 0.b_1..b_l 0 1^k (01)^inf, the right endpoint is
/// 0.b_1..b_l 1 000..., and the length is 1/(3 * 2^(k+l)).  Both the
/// length identity and the equal-tau identity tau(left) - tau(right) =
/// length are checked when the interval is built.  The root interval
/// (1/3, 1) is the special case with no underlying word (l = k = -1 as
/// sentinels).
struct RemovedInterval {
  std::optional<BreakpointWord> breakpoint;  // nullopt for (1/3, 1)
  BinaryExpansion left, right;
  Rational length;
  int l = -1;
  int k = -1;
};

RemovedInterval removed_interval(const BreakpointWord& small_word);
RemovedInterval removed_interval_root();

/// Root interval plus every interval whose Small word has length <= max_len,
/// sorted by left endpoint.  Pairwise disjoint.
std::vector<RemovedInterval> removed_intervals_up_to(int max_len);

/// Total length of those intervals; approaches 1 as max_len grows, which is
/// how the nonnegative-deficiency set is seen to have measure zero.
Rational removed_length_partial_sum(int max_len);

/// One cell of the fine partition of the nonnegative-deficiency set: the
/// members whose first 2m digits spell the Full word `base` and whose
/// deficiency stays strictly positive afterwards.  The cell sits inside
/// [base, base + 2^-(2m+1)] and is a copy of the half-scaled whole set.
struct FinePartitionCell {
  BreakpointWord base;
  Rational scale;    // 2^-2m
  Rational hull_lo;  // value of base
  Rational hull_hi;  // hull_lo + 2^-(2m+1)

  bool contains(const BinaryExpansion& x) const;
};

FinePartitionCell fine_partition_cell(const BreakpointWord& full_word);

}  // namespace takagi
