#include "takagi/omega.hpp"

#include <algorithm>
#include <stdexcept>

#include "takagi/level_sets.hpp"
#include "takagi/takagi_eval.hpp"

namespace takagi {

namespace {

int step(Digit d) { return d ? -1 : 1; }

}  // namespace

OmegaResult omega_membership(const BinaryExpansion& x) {
  const int L = x.prefix_size();
  int D = 0;
  for (int j = 1; j <= L; ++j) {
    D += step(x.digit(j));
    if (D < 0) return {false, j};
  }
  switch (x.tail()) {
    case Tail::kZeros:
      return {true, 0};
    case Tail::kOnes:
      // D drops by one per digit from here on.
      return {false, L + D + 1};
    case Tail::kPeriodic:
      break;
  }
  const int q = static_cast<int>(x.period().size());
  const int delta = word_deficiency(x.period());
  if (delta >= 0) {
    // One clean period settles it: later periods ride a non-decreasing
    // baseline over the same dip pattern.
    int Dp = D;
    for (int i = 1; i <= q; ++i) {
      Dp += step(x.digit(L + i));
      if (Dp < 0) return {false, L + i};
    }
    return {true, 0};
  }
  int j = L;
  while (true) {
    ++j;
    D += step(x.digit(j));
    if (D < 0) return {false, j};
  }
}

bool deficiency_stays_above(const BinaryExpansion& x, int start, int threshold) {
  if (start < 0) throw std::invalid_argument("deficiency_stays_above: negative start");
  // Reduce to the suffix stream: D_j(x) = D_start(x) + D_{j-start}(suffix).
  int base = 0;
  for (int j = 1; j <= start; ++j) base += step(x.digit(j));
  const BinaryExpansion y = start == 0 ? x : x.drop_digits(start);
  const int t = threshold - base;
  const int L = y.prefix_size();
  int D = 0;
  for (int j = 1; j <= L; ++j) {
    D += step(y.digit(j));
    if (D <= t) return false;
  }
  switch (y.tail()) {
    case Tail::kZeros:
      return D + 1 > t;
    case Tail::kOnes:
      return false;
    case Tail::kPeriodic:
      break;
  }
  const int q = static_cast<int>(y.period().size());
  if (word_deficiency(y.period()) < 0) return false;
  int Dp = D;
  for (int i = 1; i <= q; ++i) {
    Dp += step(y.digit(L + i));
    if (Dp <= t) return false;
  }
  return true;
}

namespace {

void breakpoint_backtrack(int len, int target, DigitWord& word, int D,
                          BreakpointKind kind, std::vector<BreakpointWord>& out) {
  if (len == target) {
    if (D != 0) return;
    if (kind == BreakpointKind::kSmall && target > 0) {
      if (word[word.size() - 1] != 1 || word[word.size() - 2] != 1) return;
    }
    out.push_back(BreakpointWord{word});
    return;
  }
  for (Digit d : {Digit{0}, Digit{1}}) {
    const int nd = D + step(d);
    if (nd < 0) continue;              // deficiency must stay nonnegative
    if (nd > target - (len + 1)) continue;  // must be able to return to zero
    word.push_back(d);
    breakpoint_backtrack(len + 1, target, word, nd, kind, out);
    word.pop_back();
  }
}

}  // namespace

std::vector<BreakpointWord> enumerate_breakpoints(int m, BreakpointKind kind) {
  if (m < 0 || m > 12)
    throw std::invalid_argument("enumerate_breakpoints: m outside [0, 12]");
  std::vector<BreakpointWord> out;
  DigitWord word;
  breakpoint_backtrack(0, 2 * m, word, 0, kind, out);
  return out;
}

Integer catalan(int m) {
  if (m < 0) throw std::invalid_argument("catalan: negative index");
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * m),
               static_cast<unsigned long>(m));
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m + 1));
  return c;
}

namespace {

RemovedInterval finish_interval(RemovedInterval iv) {
  iv.length = iv.right.value() - iv.left.value();
  const Rational expected =
      iv.l < 0 ? Rational(2, 3) : Rational::pow2(-(iv.k + iv.l)) / Rational(3);
  if (iv.length != expected)
    throw std::logic_error("removed interval: length identity failed");
  if (tau(iv.left) - tau(iv.right) != iv.length)
    throw std::logic_error("removed interval: tau drop does not match length");
  return iv;
}

}  // namespace

RemovedInterval removed_interval_root() {
  RemovedInterval iv;
  iv.left = BinaryExpansion::periodic({}, {0, 1});
  iv.right = BinaryExpansion::ones({});
  return finish_interval(std::move(iv));
}

RemovedInterval removed_interval(const BreakpointWord& small_word) {
  const DigitWord& w = small_word.word;
  if (w.empty()) return removed_interval_root();
  r_of(w);  // validates the balanced nonnegative shape
  if (w.size() < 4 || w[w.size() - 1] != 1 || w[w.size() - 2] != 1)
    throw std::invalid_argument("removed_interval: word must end in two ones");
  int k = 0;
  while (k < static_cast<int>(w.size()) && w[w.size() - 1 - static_cast<size_t>(k)] == 1)
    ++k;
  const int l = static_cast<int>(w.size()) - k - 1;
  RemovedInterval iv;
  iv.breakpoint = small_word;
  iv.l = l;
  iv.k = k;
  // The word itself spells b_1..b_l 0 1^k, the left endpoint's prefix.
  iv.left = BinaryExpansion::periodic(w, {0, 1});
  DigitWord right_prefix(w.begin(), w.begin() + l);
  right_prefix.push_back(1);
  iv.right = BinaryExpansion::zeros(std::move(right_prefix));
  return finish_interval(std::move(iv));
}

std::vector<RemovedInterval> removed_intervals_up_to(int max_len) {
  if (max_len < 0 || max_len > 24)
    throw std::invalid_argument("removed_intervals_up_to: max_len outside [0, 24]");
  std::vector<RemovedInterval> out;
  out.push_back(removed_interval_root());
  for (int m = 2; 2 * m <= max_len; ++m)
    for (const BreakpointWord& b : enumerate_breakpoints(m, BreakpointKind::kSmall))
      out.push_back(removed_interval(b));
  std::sort(out.begin(), out.end(), [](const RemovedInterval& a, const RemovedInterval& b) {
    return a.left.value() < b.left.value();
  });
  return out;
}

Rational removed_length_partial_sum(int max_len) {
  Rational total(0);
  for (const RemovedInterval& iv : removed_intervals_up_to(max_len)) total += iv.length;
  return total;
}

FinePartitionCell fine_partition_cell(const BreakpointWord& full_word) {
  r_of(full_word.word);  // validates the balanced nonnegative shape
  const int m = full_word.m();
  FinePartitionCell cell;
  cell.base = full_word;
  cell.scale = Rational::pow2(-2 * m);
  cell.hull_lo = Rational(word_value(full_word.word)) * cell.scale;
  cell.hull_hi = cell.hull_lo + Rational::pow2(-(2 * m + 1));
  return cell;
}

bool FinePartitionCell::contains(const BinaryExpansion& x) const {
  const int n = static_cast<int>(base.word.size());
  for (int j = 1; j <= n; ++j)
    if (x.digit(j) != base.word[static_cast<size_t>(j - 1)]) return false;
  return deficiency_stays_above(x, n, 0);
}

}  // namespace takagi
