#include "takagi/level_sets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace takagi {

namespace {

int step(Digit d) { return d ? -1 : 1; }

// Prefix-sum extremes of one period of deficiency steps.
void period_profile(const DigitWord& period, int& sum, int& min_sum, int& max_sum) {
  sum = 0;
  min_sum = 0;
  max_sum = 0;
  int s = 0;
  for (Digit d : period) {
    s += step(d);
    min_sum = std::min(min_sum, s);
    max_sum = std::max(max_sum, s);
  }
  sum = s;
}

}  // namespace

CompleteBalance complete_balance(const BinaryExpansion& x) {
  CompleteBalance cb;
  const int L = x.prefix_size();
  int D = 0;
  for (int j = 1; j <= L; ++j) {
    D += step(x.digit(j));
    if (D == 0) cb.points.push_back(j);
  }
  switch (x.tail()) {
    case Tail::kZeros:
      if (D < 0) cb.points.push_back(L - D);
      return cb;
    case Tail::kOnes:
      if (D > 0) cb.points.push_back(L + D);
      return cb;
    case Tail::kPeriodic:
      break;
  }
  const DigitWord& W = x.period();
  const int q = static_cast<int>(W.size());
  int delta, smin, smax;
  period_profile(W, delta, smin, smax);
  if (delta == 0) {
    // D is q-periodic past the prefix: either some offset is balanced and
    // balance recurs forever, or none is and the prefix scan saw it all.
    int Dp = D;
    int first = 0;
    for (int i = 1; i <= q; ++i) {
      Dp += step(x.digit(L + i));
      if (Dp == 0) {
        first = L + i;
        break;
      }
    }
    if (D == 0 || first > 0) {
      cb.kind = BalanceTail::kInfinite;
      cb.period = q;
      if (D == 0) {
        cb.anchor = L;  // covers the empty-prefix case, anchor may be 0
      } else {
        cb.points.push_back(first);
        cb.anchor = first;
      }
    }
    return cb;
  }
  // Drifting tail: only finitely many balanced positions.  Walk period by
  // period while the deficiency can still touch zero inside one.
  int Dp = D;
  int j = L;
  while ((delta > 0 && Dp + smin <= 0) || (delta < 0 && Dp + smax >= 0)) {
    for (int i = 0; i < q; ++i) {
      Dp += step(W[static_cast<size_t>(i)]);
      ++j;
      if (Dp == 0) cb.points.push_back(j);
    }
  }
  return cb;
}

void extend_balance_points(const BinaryExpansion& x, CompleteBalance& cb, int count) {
  if (cb.kind != BalanceTail::kInfinite)
    throw std::logic_error("extend_balance_points: finite balance set");
  int j = cb.points.empty() ? cb.anchor : cb.points.back();
  int D = 0;  // zero at every recorded balance point and at the anchor
  while (static_cast<int>(cb.points.size()) < count) {
    ++j;
    D += step(x.digit(j));
    if (D == 0) cb.points.push_back(j);
  }
}

BlockDecomposition balance_set(const BinaryExpansion& x, int j_max) {
  if (j_max < 0) throw std::invalid_argument("balance_set: negative bound");
  BlockDecomposition bd;
  int D = 0;
  for (int j = 1; j <= j_max; ++j) {
    D += step(x.digit(j));
    if (D == 0) bd.balance_points.push_back(j);
  }
  bd.tail_kind = complete_balance(x).kind;
  int prev = 0;
  for (int c : bd.balance_points) {
    DigitWord block;
    block.reserve(static_cast<size_t>(c - prev));
    for (int j = prev + 1; j <= c; ++j) block.push_back(x.digit(j));
    bd.blocks.push_back(std::move(block));
    prev = c;
  }
  return bd;
}

namespace {

// Digits 1..anchor of x with every block complemented that starts with a 1.
DigitWord flipped_head(const BinaryExpansion& x, const std::vector<int>& points) {
  DigitWord head;
  int prev = 0;
  for (int c : points) {
    const bool flip = x.digit(prev + 1) == 1;
    for (int j = prev + 1; j <= c; ++j) {
      const Digit d = x.digit(j);
      head.push_back(flip ? static_cast<Digit>(1 - d) : d);
    }
    prev = c;
  }
  return head;
}

}  // namespace

BinaryExpansion leftmost_equivalent(const BinaryExpansion& x) {
  const CompleteBalance cb = complete_balance(x);
  if (cb.kind == BalanceTail::kFinite) {
    const int anchor = cb.points.empty() ? 0 : cb.points.back();
    DigitWord head = flipped_head(x, cb.points);
    BinaryExpansion suffix = x.drop_digits(anchor);
    if (suffix.digit(1) == 1) suffix = suffix.complement();
    return suffix.with_prefix(std::move(head));
  }
  DigitWord head = flipped_head(x, cb.points);
  // One full digit period past the anchor carries a whole number of
  // blocks; their flip pattern then repeats verbatim.
  DigitWord pword;
  pword.reserve(static_cast<size_t>(cb.period));
  int D = 0;
  bool flip = x.digit(cb.anchor + 1) == 1;
  for (int i = 1; i <= cb.period; ++i) {
    const int j = cb.anchor + i;
    const Digit d = x.digit(j);
    pword.push_back(flip ? static_cast<Digit>(1 - d) : d);
    D += step(d);
    if (D == 0 && i < cb.period) flip = x.digit(j + 1) == 1;
  }
  return BinaryExpansion::periodic(std::move(head), std::move(pword));
}

LocalLevelSet local_level_set(const BinaryExpansion& x) {
  CompleteBalance cb = complete_balance(x);
  LocalLevelSet s;
  s.representative = leftmost_equivalent(x);
  s.finite = cb.kind == BalanceTail::kFinite;
  const int horizon =
      s.finite ? (cb.points.empty() ? 0 : cb.points.back()) : cb.anchor + cb.period;
  s.structure = balance_set(x, std::max(horizon, x.prefix_size()));
  if (s.finite) {
    Integer c = 1;
    mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), cb.points.size() + 1);
    s.expansion_count = c;
  } else {
    s.expansion_count = 0;
  }
  return s;
}

std::vector<BinaryExpansion> enumerate_local_level_set(const BinaryExpansion& x,
                                                       int block_limit) {
  if (block_limit < 0 || block_limit > 20)
    throw std::invalid_argument("enumerate_local_level_set: block_limit outside [0, 20]");
  CompleteBalance cb = complete_balance(x);
  std::vector<BinaryExpansion> out;
  if (cb.kind == BalanceTail::kFinite) {
    const int n = static_cast<int>(cb.points.size());
    if (block_limit < n)
      throw std::invalid_argument(
          "enumerate_local_level_set: block_limit below the finite block count");
    const int anchor = cb.points.empty() ? 0 : cb.points.back();
    const unsigned long masks = 1UL << (n + 1);
    out.reserve(masks);
    for (unsigned long mask = 0; mask < masks; ++mask) {
      DigitWord head;
      head.reserve(static_cast<size_t>(anchor));
      int prev = 0;
      for (int b = 0; b < n; ++b) {
        const int c = cb.points[static_cast<size_t>(b)];
        const bool flip = (mask >> b) & 1U;
        for (int j = prev + 1; j <= c; ++j) {
          const Digit d = x.digit(j);
          head.push_back(flip ? static_cast<Digit>(1 - d) : d);
        }
        prev = c;
      }
      BinaryExpansion suffix = x.drop_digits(anchor);
      if ((mask >> n) & 1U) suffix = suffix.complement();
      out.push_back(suffix.with_prefix(std::move(head)));
    }
    return out;
  }
  extend_balance_points(x, cb, block_limit);
  const int last = block_limit == 0 ? 0 : cb.points[static_cast<size_t>(block_limit - 1)];
  const unsigned long masks = 1UL << block_limit;
  out.reserve(masks);
  for (unsigned long mask = 0; mask < masks; ++mask) {
    DigitWord head;
    head.reserve(static_cast<size_t>(last));
    int prev = 0;
    for (int b = 0; b < block_limit; ++b) {
      const int c = cb.points[static_cast<size_t>(b)];
      const bool flip = (mask >> b) & 1U;
      for (int j = prev + 1; j <= c; ++j) {
        const Digit d = x.digit(j);
        head.push_back(flip ? static_cast<Digit>(1 - d) : d);
      }
      prev = c;
    }
    out.push_back(x.drop_digits(last).with_prefix(std::move(head)));
  }
  return out;
}

namespace {

struct CoverBuild {
  Rational y;
  int target_depth = 0;
  std::vector<DyadicInterval> possible;
  std::map<Rational, ConfirmedPoint> confirmed;

  void confirm(const Rational& val, BinaryExpansion pt) {
    confirmed.emplace(val, ConfirmedPoint{std::move(pt), val});
  }

  void node(DigitWord& w, const Rational& tau0, int D) {
    const int n = static_cast<int>(w.size());
    const Rational scale = Rational::pow2(-n);
    const Rational two_thirds(2, 3);
    const Rational lo_raw = tau0 + scale * Rational(std::min(0, D));
    const Rational hi_raw = tau0 + scale * (two_thirds + Rational(std::max(0, D)));
    const Rational lo = lo_raw < Rational(0) ? Rational(0) : lo_raw;
    const Rational hi = hi_raw > two_thirds ? two_thirds : hi_raw;
    if (y < lo || y > hi) return;
    const Integer k = word_value(w);
    const Rational right_tau = tau0 + scale * Rational(D);
    if (y == lo_raw) {
      // The envelope floor is attained only at the interval's endpoints,
      // so confirm those and drop the whole subtree.
      if (tau0 == y) confirm(Rational(k) * scale, BinaryExpansion::from_dyadic(k, n));
      if (right_tau == y)
        confirm(Rational(k + 1) * scale, BinaryExpansion::from_dyadic(k + 1, n));
      return;
    }
    // Off balance the envelope ceiling is attained nowhere.
    if (y == hi_raw && D != 0) return;
    if (n == target_depth) {
      possible.push_back(DyadicInterval{k, n});
      if (tau0 == y) confirm(Rational(k) * scale, BinaryExpansion::from_dyadic(k, n));
      if (right_tau == y)
        confirm(Rational(k + 1) * scale, BinaryExpansion::from_dyadic(k + 1, n));
      for (DigitWord p : {DigitWord{0, 1}, DigitWord{1, 0}}) {
        BinaryExpansion cand = BinaryExpansion::periodic(w, std::move(p));
        if (tau(cand) == y) confirm(cand.value(), cand);
      }
      return;
    }
    w.push_back(0);
    node(w, tau0, D + 1);
    w.back() = 1;
    const Rational tau1 = tau0 + Rational::pow2(-(n + 1)) * Rational(D + 1);
    node(w, tau1, D - 1);
    w.pop_back();
  }
};

}  // namespace

LevelCover enumerate_level_cover(const Rational& y, int depth) {
  if (depth < 0 || depth > 64)
    throw std::invalid_argument("enumerate_level_cover: depth must be in [0, 64]");
  LevelCover cover;
  cover.level = y;
  cover.depth = depth;
  if (y < Rational(0) || y > Rational(2, 3)) {
    cover.in_range = false;
    return cover;
  }
  CoverBuild build;
  build.y = y;
  build.target_depth = depth;
  DigitWord w;
  build.node(w, Rational(0), 0);
  cover.possible = std::move(build.possible);
  cover.confirmed.reserve(build.confirmed.size());
  for (auto& [val, pt] : build.confirmed) cover.confirmed.push_back(std::move(pt));
  return cover;
}

bool cover_contains(const LevelCover& cover, const Rational& x) {
  const auto it = std::partition_point(
      cover.possible.begin(), cover.possible.end(),
      [&](const DyadicInterval& iv) { return iv.right() < x; });
  if (it != cover.possible.end() && it->left() <= x && x <= it->right()) return true;
  for (const ConfirmedPoint& c : cover.confirmed)
    if (c.value == x) return true;
  return false;
}

Rational expected_cardinality_partial(int m_max) {
  if (m_max < 0) throw std::invalid_argument("expected_cardinality_partial: negative bound");
  Integer num = 0;
  for (int m = 0; m <= m_max; ++m) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * m),
                 static_cast<unsigned long>(m));
    mpz_mul_2exp(binom.get_mpz_t(), binom.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(2 * (m_max - m)));
    num += binom;
  }
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(),
               static_cast<mp_bitcnt_t>(2 * m_max + 1));
  return Rational(num, den);
}

int r_of(const DigitWord& balanced_word) {
  int D = 0;
  int r = 0;
  for (Digit d : balanced_word) {
    D += step(d);
    if (D < 0) throw std::invalid_argument("r_of: word dips below balance");
    if (D == 0) ++r;
  }
  if (D != 0) throw std::invalid_argument("r_of: word does not end balanced");
  return r;
}

}  // namespace takagi
