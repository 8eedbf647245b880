#include "takagi/verify.hpp"

#include <atomic>
#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "takagi/dimension.hpp"
#include "takagi/expansion.hpp"
#include "takagi/level_sets.hpp"
#include "takagi/log_interval.hpp"
#include "takagi/omega.hpp"
#include "takagi/parallel.hpp"
#include "takagi/random_gen.hpp"
#include "takagi/singular.hpp"
#include "takagi/takagi_eval.hpp"

namespace takagi {

namespace {

using Check = CheckResult (*)(std::uint64_t);

CheckResult make(const char* suite, const char* name, bool pass, std::string detail) {
  return CheckResult{suite, name, pass, std::move(detail)};
}

// Partial sum of the defining series: sum_{n<N} <2^n x>/2^n.  The true
// value exceeds it by at most 2^-N.
Rational tau_partial(const Rational& x, int n_terms) {
  Rational s(0);
  Rational y = x;  // frac(2^n x)
  const Rational one(1);
  for (int n = 0; n < n_terms; ++n) {
    if (y == one) y = Rational(0);
    const Rational dist = y <= Rational(1, 2) ? y : one - y;
    s += dist * Rational::pow2(-n);
    y *= 2;
    if (y >= one) y -= one;
  }
  return s;
}

// ---- arith ----

CheckResult arith_profile(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 500; ++t) {
    const BinaryExpansion x = random_expansion(rng, 20, true);
    int ones = 0;
    for (int j = 1; j <= 40; ++j) {
      ones += x.digit(j);
      const DigitProfile p = digit_profile(x, j);
      if (p.ones != ones || p.zeros != j - ones || p.deficiency != j - 2 * ones ||
          p.ones + p.zeros != p.j)
        return make("arith", "digit-profile-consistency", false,
                    "mismatch at " + x.str() + " j=" + std::to_string(j));
    }
  }
  return make("arith", "digit-profile-consistency", true, "500 expansions x 40 digits");
}

CheckResult arith_roundtrip(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 10000; ++t) {
    const BinaryExpansion x = random_expansion(rng, 16, true);
    const BinaryExpansion back = parse_expansion(x.str());
    if (!(back == x) || back.value() != x.value())
      return make("arith", "parse-render-roundtrip", false, "failed for " + x.str());
  }
  const char* fixed[] = {"0.", "0.0110", "0.(01)", "0.01(1)", "0.0011(01)", "0.1(10)"};
  for (const char* lit : fixed) {
    const BinaryExpansion x = parse_expansion(lit);
    if (parse_expansion(x.str()).value() != x.value())
      return make("arith", "parse-render-roundtrip", false, std::string("literal ") + lit);
  }
  return make("arith", "parse-render-roundtrip", true, "10000 random + fixtures");
}

CheckResult arith_order(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 2000; ++t) {
    const BinaryExpansion a = random_expansion(rng, 12, true);
    const BinaryExpansion b = random_expansion(rng, 12, true);
    const auto cmp = a <=> b;
    if (cmp == std::strong_ordering::equal) {
      if (a.value() != b.value())
        return make("arith", "stream-order-vs-value", false, a.str() + " vs " + b.str());
    } else if (cmp == std::strong_ordering::less) {
      if (a.value() > b.value())
        return make("arith", "stream-order-vs-value", false, a.str() + " vs " + b.str());
    } else if (a.value() < b.value()) {
      return make("arith", "stream-order-vs-value", false, a.str() + " vs " + b.str());
    }
    if (a.complement().value() != Rational(1) - a.value())
      return make("arith", "stream-order-vs-value", false, "complement " + a.str());
    if (a.shift_right().value() * 2 != a.value())
      return make("arith", "stream-order-vs-value", false, "shift " + a.str());
    const int drop = rng.range(0, 10);
    const BinaryExpansion d = a.drop_digits(drop);
    if (!(d.with_prefix(a.digits(drop)) == a))
      return make("arith", "stream-order-vs-value", false, "drop/prepend " + a.str());
  }
  return make("arith", "stream-order-vs-value", true, "2000 pairs");
}

CheckResult arith_twins(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 2000; ++t) {
    BinaryExpansion x = random_dyadic(rng, 20);
    const auto [lo, hi] = dyadic_expansions(x.value());
    if (lo.value() != x.value() || hi.value() != x.value())
      return make("arith", "dyadic-twin-expansions", false, x.str());
    if (x.value() != Rational(0) && x.value() != Rational(1)) {
      if (lo == hi)
        return make("arith", "dyadic-twin-expansions", false, "streams merged " + x.str());
      if (lo.tail() != Tail::kZeros || hi.tail() != Tail::kOnes)
        return make("arith", "dyadic-twin-expansions", false, "tail kinds " + x.str());
    }
  }
  return make("arith", "dyadic-twin-expansions", true, "2000 dyadics");
}

// ---- takagi ----

CheckResult takagi_grid(std::uint64_t) {
  const int depth = 12;
  const auto grid = tau_grid_scaled(depth);
  const Rational scale = Rational::pow2(-depth);
  for (size_t k = 0; k < grid.size(); ++k) {
    if (tau_dyadic(Integer(static_cast<unsigned long>(k)), depth) !=
        Rational(Integer(static_cast<unsigned long>(grid[k]))) * scale)
      return make("takagi", "series-vs-midpoint-grid", false, "k=" + std::to_string(k));
  }
  return make("takagi", "series-vs-midpoint-grid", true,
              "all " + std::to_string(grid.size()) + " nodes at depth 12");
}

CheckResult takagi_functional(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<BinaryExpansion> xs;
  xs.reserve(10000);
  for (int t = 0; t < 10000; ++t) xs.push_back(random_expansion(rng, 24, true));
  std::atomic<bool> ok{true};
  parallel_for(xs.size(), [&](size_t i) {
    if (!verify_functional_equations(xs[i])) ok = false;
  });
  return make("takagi", "reflection-and-halving", ok, "10000 mixed-tail expansions");
}

CheckResult takagi_partial_sums(std::uint64_t seed) {
  Rng rng(seed);
  const Rational tol = Rational::pow2(-44);
  for (int t = 0; t < 300; ++t) {
    const BinaryExpansion x = random_expansion(rng, 12, true);
    const Rational exact = tau(x);
    const Rational approx = tau_partial(x.value(), 44);
    if (exact < approx || exact - approx > tol)
      return make("takagi", "series-partial-sum-bracket", false, x.str());
  }
  return make("takagi", "series-partial-sum-bracket", true, "300 expansions, 44 terms");
}

CheckResult takagi_range(std::uint64_t seed) {
  Rng rng(seed);
  const Rational two_thirds(2, 3);
  for (int t = 0; t < 10000; ++t) {
    const BinaryExpansion x = random_expansion(rng, 24, true);
    const Rational v = tau(x);
    if (v < Rational(0) || v > two_thirds)
      return make("takagi", "range", false, x.str());
    if (v == Rational(0) && x.value() != Rational(0) && x.value() != Rational(1))
      return make("takagi", "range", false, "interior zero at " + x.str());
  }
  if (tau(parse_expansion("0.(01)")) != two_thirds)
    return make("takagi", "range", false, "maximum not attained at 1/3");
  return make("takagi", "range", true, "10000 expansions; max attained");
}

CheckResult takagi_bounds(std::uint64_t seed) {
  Rng rng(seed);
  // Shared pool of extensions; each is combined with every prefix through
  // the exact self-similarity identity.
  struct Ext { Rational tau_e, val; };
  std::vector<Ext> pool;
  for (int i = 0; i < 100; ++i) {
    const BinaryExpansion e = random_expansion(rng, 12, true);
    pool.push_back({tau(e), e.value()});
  }
  pool.push_back({Rational(0), Rational(0)});           // endpoint w = 0
  pool.push_back({Rational(0), Rational(1)});           // endpoint w = 1
  pool.push_back({Rational(2, 3), Rational(1, 3)});     // the maximum
  const int max_len = 16;
  size_t total = 0;
  for (int l = 0; l <= max_len; ++l) total += 1ULL << l;
  std::atomic<bool> ok{true};
  parallel_for(total, [&](size_t idx) {
    if (!ok.load(std::memory_order_relaxed)) return;
    // Decode idx into a prefix length and value.
    size_t rem = idx;
    int len = 0;
    while (rem >= (1ULL << len)) {
      rem -= 1ULL << len;
      ++len;
    }
    DigitWord prefix(static_cast<size_t>(len));
    for (int j = 0; j < len; ++j)
      prefix[static_cast<size_t>(j)] = static_cast<Digit>((rem >> (len - 1 - j)) & 1U);
    const TauBounds b = tau_bounds(prefix);
    const Rational t0 = tau_dyadic(b.k, b.depth);
    const Rational scale = Rational::pow2(-b.depth);
    const Rational D(b.deficiency);
    for (const Ext& e : pool) {
      const Rational v = t0 + scale * (e.tau_e + D * e.val);
      if (v < b.lo || v > b.hi) {
        ok = false;
        return;
      }
    }
  });
  return make("takagi", "envelope-soundness", ok,
              "all prefixes to length 16 x 103 extensions");
}

// ---- levels ----

CheckResult levels_flip_equiv(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 400; ++t) {
    const BinaryExpansion x = random_expansion(rng, 14, true);
    const Rational v = tau(x);
    const CompleteBalance cb = complete_balance(x);
    const int limit = cb.kind == BalanceTail::kFinite
                          ? static_cast<int>(cb.points.size())
                          : 5;
    for (const BinaryExpansion& y : enumerate_local_level_set(x, limit)) {
      if (tau(y) != v)
        return make("levels", "flips-preserve-value", false,
                    x.str() + " -> " + y.str());
    }
  }
  return make("levels", "flips-preserve-value", true, "400 expansions, full masks");
}

CheckResult levels_leftmost(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 400; ++t) {
    const BinaryExpansion x = random_expansion(rng, 14, true);
    const BinaryExpansion lm = leftmost_equivalent(x);
    if (!omega_membership(lm).member)
      return make("levels", "leftmost-in-deficient-set", false, x.str());
    if (tau(lm) != tau(x))
      return make("levels", "leftmost-in-deficient-set", false, "value changed " + x.str());
    const CompleteBalance cb = complete_balance(x);
    const int limit =
        cb.kind == BalanceTail::kFinite ? static_cast<int>(cb.points.size()) : 5;
    for (const BinaryExpansion& y : enumerate_local_level_set(x, limit)) {
      if (y < lm)
        return make("levels", "leftmost-in-deficient-set", false,
                    "member below leftmost for " + x.str());
    }
    if (!(leftmost_equivalent(lm) == lm))
      return make("levels", "leftmost-in-deficient-set", false,
                  "not idempotent at " + x.str());
  }
  return make("levels", "leftmost-in-deficient-set", true, "400 expansions");
}

CheckResult levels_count_convention(std::uint64_t seed) {
  Rng rng(seed);
  int finite_seen = 0;
  for (int t = 0; t < 600; ++t) {
    const BinaryExpansion x = random_expansion(rng, 12, true);
    const LocalLevelSet s = local_level_set(x);
    if (!s.finite) continue;
    ++finite_seen;
    const CompleteBalance cb = complete_balance(x);
    const auto members =
        enumerate_local_level_set(x, static_cast<int>(cb.points.size()));
    Integer expect = 1;
    mpz_mul_2exp(expect.get_mpz_t(), expect.get_mpz_t(), cb.points.size() + 1);
    if (Integer(static_cast<long>(members.size())) != expect ||
        s.expansion_count != expect)
      return make("levels", "expansion-count-convention", false, x.str());
    std::map<Rational, int> reals;
    bool any_dyadic = false;
    for (const auto& y : members) {
      ++reals[y.value()];
      any_dyadic = any_dyadic || y.is_dyadic();
    }
    // A real has at most two expansions, and two members can share a value
    // only when both twins of a dyadic landed in the class.
    for (const auto& [v, n] : reals) {
      if (n > 2)
        return make("levels", "expansion-count-convention", false,
                    "triple value at " + x.str());
      if (n == 2 && !any_dyadic)
        return make("levels", "expansion-count-convention", false,
                    "twin collapse without a dyadic at " + x.str());
    }
  }
  return make("levels", "expansion-count-convention", true,
              std::to_string(finite_seen) + " finite classes");
}

CheckResult levels_cover_sound(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 25; ++t) {
    const BinaryExpansion x = random_expansion(rng, 12, true);
    const Rational y = tau(x);
    const Rational v = x.value();
    for (int depth = 1; depth <= 12; ++depth) {
      const LevelCover cover = enumerate_level_cover(y, depth);
      if (!cover_contains(cover, v))
        return make("levels", "cover-soundness", false,
                    x.str() + " escaped at depth " + std::to_string(depth));
    }
  }
  return make("levels", "cover-soundness", true, "25 expansions x depths 1..12");
}

CheckResult levels_cover_edges(std::uint64_t) {
  const LevelCover zero = enumerate_level_cover(Rational(0), 12);
  if (!zero.possible.empty() || zero.confirmed.size() != 2 ||
      zero.confirmed[0].value != Rational(0) || zero.confirmed[1].value != Rational(1))
    return make("levels", "cover-edge-levels", false, "level 0");
  const LevelCover top = enumerate_level_cover(Rational(2, 3), 12);
  if (top.possible.size() != 64)
    return make("levels", "cover-edge-levels", false,
                "level 2/3 intervals: " + std::to_string(top.possible.size()));
  bool third = false, two_thirds = false;
  for (const auto& c : top.confirmed) {
    third = third || c.value == Rational(1, 3);
    two_thirds = two_thirds || c.value == Rational(2, 3);
  }
  if (!third || !two_thirds)
    return make("levels", "cover-edge-levels", false, "level 2/3 confirmations");
  const LevelCover out = enumerate_level_cover(Rational(3, 4), 6);
  if (out.in_range || !out.possible.empty() || !out.confirmed.empty())
    return make("levels", "cover-edge-levels", false, "out-of-range level");
  return make("levels", "cover-edge-levels", true, "levels 0, 2/3, 3/4");
}

CheckResult levels_expected_size(std::uint64_t) {
  if (expected_cardinality_partial(0) != Rational(1, 2) ||
      expected_cardinality_partial(1) != Rational(3, 4) ||
      expected_cardinality_partial(2) != Rational(15, 16))
    return make("levels", "expected-size-partial-sums", false, "small cases");
  Rational prev(0);
  for (int m = 0; m <= 64; m += 8) {
    const Rational s = expected_cardinality_partial(m);
    if (s <= prev)
      return make("levels", "expected-size-partial-sums", false,
                  "m=" + std::to_string(m));
    prev = s;
  }
  // sqrt-divergence: quadrupling the cutoff roughly doubles the sum.
  const Rational ratio =
      expected_cardinality_partial(256) / expected_cardinality_partial(64);
  if (ratio <= Rational(9, 5) || ratio >= Rational(11, 5))
    return make("levels", "expected-size-partial-sums", false,
                "quadrupling ratio " + ratio.str());
  return make("levels", "expected-size-partial-sums", true,
              "monotone, sqrt-divergent");
}

// ---- omega ----

CheckResult omega_decisions(std::uint64_t seed) {
  struct Case { const char* lit; bool member; int violation; };
  const Case cases[] = {
      {"0.", true, 0},        {"0.(01)", true, 0},   {"0.0011(01)", true, 0},
      {"0.1", false, 1},      {"0.0110", false, 3},  {"0.01(1)", false, 3},
      {"0.(0011)", true, 0},  {"0.(1)", false, 1},   {"0.00(10)", true, 0},
      {"0.(011)", false, 3},
  };
  for (const Case& c : cases) {
    const OmegaResult r = omega_membership(parse_expansion(c.lit));
    if (r.member != c.member || (!c.member && r.first_violation != c.violation))
      return make("omega", "membership-decisions", false, c.lit);
  }
  Rng rng(seed);
  for (int t = 0; t < 2000; ++t) {
    const BinaryExpansion x = random_omega_member(rng, 24);
    if (!omega_membership(x).member)
      return make("omega", "membership-decisions", false, "generated member rejected");
    const OmegaResult r = omega_membership(x.complement());
    if (x.value() != Rational(0) && x.value() != Rational(1) && r.member)
      return make("omega", "membership-decisions", false,
                  "complement accepted for " + x.str());
  }
  return make("omega", "membership-decisions", true, "fixtures + 2000 members");
}

CheckResult omega_breakpoint_counts(std::uint64_t) {
  const long full_expect[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int m = 0; m <= 8; ++m) {
    const auto full = enumerate_breakpoints(m, BreakpointKind::kFull);
    if (Integer(full_expect[m]) != catalan(m) ||
        full.size() != static_cast<size_t>(full_expect[m]))
      return make("omega", "breakpoint-counts", false, "full m=" + std::to_string(m));
    for (size_t i = 0; i < full.size(); ++i) {
      r_of(full[i].word);  // throws if malformed
      if (i > 0 && !(full[i - 1].word < full[i].word))
        return make("omega", "breakpoint-counts", false, "order m=" + std::to_string(m));
    }
    const auto small = enumerate_breakpoints(m, BreakpointKind::kSmall);
    const Integer expect_small =
        m == 0 ? Integer(1) : (m == 1 ? Integer(0) : catalan(m) - catalan(m - 1));
    if (Integer(static_cast<long>(small.size())) != expect_small)
      return make("omega", "breakpoint-counts", false, "small m=" + std::to_string(m));
  }
  return make("omega", "breakpoint-counts", true, "m <= 8 against the Catalan law");
}

CheckResult omega_interval_geometry(std::uint64_t) {
  const auto ivs = removed_intervals_up_to(14);
  for (size_t i = 0; i < ivs.size(); ++i) {
    const auto& iv = ivs[i];
    if (!omega_membership(iv.left).member)
      return make("omega", "interval-geometry", false, "left endpoint not member");
    const bool right_member = omega_membership(iv.right).member;
    if (iv.breakpoint.has_value() ? !right_member : right_member)
      return make("omega", "interval-geometry", false, "right endpoint membership");
    if (i > 0 && ivs[i - 1].right.value() > iv.left.value())
      return make("omega", "interval-geometry", false, "overlap at index " + std::to_string(i));
    // A dyadic point near the middle must be a non-member.
    int d = 2;
    while (Rational::pow2(-d) * 4 > iv.length) ++d;
    const Rational mid = (iv.left.value() + iv.right.value()) * Rational(1, 2);
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(),
               Rational(mid * Rational::pow2(d)).numerator().get_mpz_t(),
               Rational(mid * Rational::pow2(d)).denominator().get_mpz_t());
    const BinaryExpansion probe = BinaryExpansion::from_dyadic(k + 1, d);
    if (probe.value() <= iv.left.value() || probe.value() >= iv.right.value())
      return make("omega", "interval-geometry", false, "probe landed outside");
    if (omega_membership(probe).member)
      return make("omega", "interval-geometry", false,
                  "member inside removed interval " + probe.str());
  }
  return make("omega", "interval-geometry", true,
              std::to_string(ivs.size()) + " intervals to length 14");
}

CheckResult omega_partial_sums(std::uint64_t) {
  if (removed_length_partial_sum(4) != Rational(17, 24))
    return make("omega", "removed-length-partial-sums", false, "value at 4");
  Rational prev(0);
  for (int len = 0; len <= 16; len += 2) {
    const Rational s = removed_length_partial_sum(len);
    if (s >= Rational(1))
      return make("omega", "removed-length-partial-sums", false,
                  "reached 1 at " + std::to_string(len));
    if (len >= 4 && s <= prev)
      return make("omega", "removed-length-partial-sums", false,
                  "not increasing at " + std::to_string(len));
    prev = s;
  }
  // The tail at word length 16 is (2/3) sum_{m>8} (C_m - C_{m-1}) 4^-m,
  // roughly 0.18, so a 1/4 bound leaves honest margin.
  if (Rational(1) - prev > Rational(1, 4))
    return make("omega", "removed-length-partial-sums", false, "limit too far from 1");
  return make("omega", "removed-length-partial-sums", true, "17/24 at 4; tail < 1/4 at 16");
}

CheckResult omega_cells(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<FinePartitionCell> cells;
  for (int m = 0; m <= 4; ++m)
    for (const auto& b : enumerate_breakpoints(m, BreakpointKind::kFull))
      cells.push_back(fine_partition_cell(b));
  for (int t = 0; t < 1500; ++t) {
    const BinaryExpansion x = random_omega_member(rng, 16);
    int hits = 0;
    for (const auto& c : cells) {
      if (c.contains(x)) {
        ++hits;
        if (x.value() < c.hull_lo || x.value() > c.hull_hi)
          return make("omega", "cell-partition", false, "outside hull " + x.str());
      }
    }
    if (hits > 1)
      return make("omega", "cell-partition", false, "two cells claim " + x.str());
  }
  // Constructed members of a specific cell must land in exactly it.
  for (int t = 0; t < 300; ++t) {
    const auto level = enumerate_breakpoints(rng.range(0, 4), BreakpointKind::kFull);
    const auto& b = level[static_cast<size_t>(rng.below(level.size()))];
    const BinaryExpansion member =
        random_omega_member(rng, 10).shift_right().with_prefix(b.word);
    if (!fine_partition_cell(b).contains(member))
      return make("omega", "cell-partition", false, "constructed member rejected");
  }
  return make("omega", "cell-partition", true, "1500 members against 65 cells");
}

// ---- measure ----

CheckResult measure_monotone(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<BinaryExpansion> xs;
  for (int t = 0; t < 10000; ++t) xs.push_back(random_expansion(rng, 18, true));
  std::vector<std::pair<Rational, size_t>> order;
  order.reserve(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) order.emplace_back(xs[i].value(), i);
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Rational> values(xs.size());
  parallel_for(xs.size(), [&](size_t i) { values[i] = tau_s(xs[i]).value; });
  for (size_t i = 1; i < order.size(); ++i) {
    if (values[order[i - 1].second] > values[order[i].second])
      return make("measure", "distribution-monotone", false,
                  "decrease near " + order[i].first.str());
  }
  return make("measure", "distribution-monotone", true, "10000 sorted points");
}

CheckResult measure_normalization(std::uint64_t) {
  const BinaryExpansion zero;
  const BinaryExpansion one = BinaryExpansion::ones({});
  const BinaryExpansion half = parse_expansion("0.1");
  if (tau_s(zero).value != Rational(0)) return make("measure", "normalization", false, "at 0");
  if (tau_s(one).value != Rational(1)) return make("measure", "normalization", false, "at 1");
  if (tau_s(half).value != Rational(1)) return make("measure", "normalization", false, "at 1/2");
  if (mu_s_interval(zero, one) != Rational(1))
    return make("measure", "normalization", false, "total mass");
  const SingularValue sv = tau_s(parse_expansion("0.0110"));
  if (sv.in_omega || !sv.witness.has_value() ||
      sv.witness->value() != Rational(1, 3) || sv.value != Rational(1))
    return make("measure", "normalization", false, "witness at 3/8");
  return make("measure", "normalization", true, "0 -> 0, 1 -> 1, sup witness at 3/8");
}

CheckResult measure_removed_flat(std::uint64_t) {
  for (const auto& iv : removed_intervals_up_to(12)) {
    if (mu_s_interval(iv.left, iv.right) != Rational(0))
      return make("measure", "flat-on-removed-intervals", false,
                  "positive mass on " + iv.left.str());
    // Interior points share the endpoint's value.
    int d = 2;
    while (Rational::pow2(-d) * 4 > iv.length) ++d;
    const Rational mid = (iv.left.value() + iv.right.value()) * Rational(1, 2);
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(),
               Rational(mid * Rational::pow2(d)).numerator().get_mpz_t(),
               Rational(mid * Rational::pow2(d)).denominator().get_mpz_t());
    const BinaryExpansion probe = BinaryExpansion::from_dyadic(k + 1, d);
    if (tau_s(probe).value != tau_s(iv.left).value)
      return make("measure", "flat-on-removed-intervals", false,
                  "interior value differs in " + iv.left.str());
  }
  return make("measure", "flat-on-removed-intervals", true, "all intervals to length 12");
}

CheckResult measure_selfsimilar(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 100; ++t) {
    const int m = rng.range(0, 5);
    const auto level = enumerate_breakpoints(m, BreakpointKind::kFull);
    const auto& b = level[static_cast<size_t>(rng.below(level.size()))];
    BinaryExpansion t1 = random_omega_member(rng, 12);
    BinaryExpansion t2 = random_omega_member(rng, 12);
    if (t2.value() < t1.value()) std::swap(t1, t2);
    if (!verify_selfsimilar_measure(b, t1, t2))
      return make("measure", "self-similarity", false,
                  "word " + word_to_string(b.word) + " t1=" + t1.str() + " t2=" + t2.str());
  }
  return make("measure", "self-similarity", true, "100 seeded cell checks");
}

CheckResult measure_masses(std::uint64_t) {
  if (mass_partial_sum(0) != Rational(1, 2) || mass_partial_sum(1) != Rational(5, 8) ||
      mass_partial_sum(2) != Rational(11, 16))
    return make("measure", "cell-mass-accounting", false, "small partial sums");
  for (int m = 0; m <= 6; ++m) {
    Rational level_total(0);
    for (const auto& b : enumerate_breakpoints(m, BreakpointKind::kFull))
      level_total += fine_partition_mass(b).mass;
    if (level_total != Rational(catalan(m)) * Rational::pow2(-(2 * m + 1)))
      return make("measure", "cell-mass-accounting", false, "level m=" + std::to_string(m));
    if (m > 0 && mass_partial_sum(m) - mass_partial_sum(m - 1) != level_total)
      return make("measure", "cell-mass-accounting", false,
                  "telescoping at m=" + std::to_string(m));
  }
  return make("measure", "cell-mass-accounting", true, "levels m <= 6 telescope");
}

CheckResult measure_tau_image(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 200; ++t) {
    const int m = rng.range(0, 5);
    const auto level = enumerate_breakpoints(m, BreakpointKind::kFull);
    const auto& b = level[static_cast<size_t>(rng.below(level.size()))];
    const FinePartitionMass fm = fine_partition_mass(b);
    const BinaryExpansion lo_pt = BinaryExpansion::zeros(b.word);
    const BinaryExpansion hi_pt =
        BinaryExpansion::ones({}).shift_right().with_prefix(b.word);
    if (tau(lo_pt) != fm.tau_lo || tau(hi_pt) != fm.tau_hi)
      return make("measure", "cell-image-endpoints", false, word_to_string(b.word));
    const BinaryExpansion inner =
        random_omega_member(rng, 10).shift_right().with_prefix(b.word);
    const Rational v = tau(inner);
    if (v < fm.tau_lo || v > fm.tau_hi)
      return make("measure", "cell-image-endpoints", false,
                  "image escaped for " + word_to_string(b.word));
  }
  return make("measure", "cell-image-endpoints", true, "200 cells with interior samples");
}

// ---- dim ----

CheckResult dim_alphabet(std::uint64_t) {
  const long expect[] = {0, 1, 1, 2, 5, 14, 42, 132};
  for (int r = 1; r <= 7; ++r) {
    const AlphabetX a = alphabet_X(r);
    if (Integer(expect[r]) != alphabet_size(r) ||
        a.words.size() != static_cast<size_t>(expect[r]))
      return make("dim", "alphabet-first-return-law", false, "r=" + std::to_string(r));
    for (size_t i = 0; i < a.words.size(); ++i) {
      const DigitWord& w = a.words[i];
      int D = 0;
      for (size_t j = 0; j < w.size(); ++j) {
        D += w[j] ? -1 : 1;
        if (j + 1 < w.size() ? D < 1 : D != 0)
          return make("dim", "alphabet-first-return-law", false,
                      "shape " + word_to_string(w));
      }
      if (i > 0 && !(a.words[i - 1] < w))
        return make("dim", "alphabet-first-return-law", false, "order r=" + std::to_string(r));
    }
  }
  return make("dim", "alphabet-first-return-law", true, "r <= 7 match shifted Catalan");
}

CheckResult dim_gamma_points(std::uint64_t) {
  for (int r = 1; r <= 4; ++r) {
    for (int k = 1; k <= 3; ++k) {
      const auto pts = enumerate_gamma_points(r, k);
      Integer expect = 1;
      for (int i = 0; i < k; ++i) expect *= alphabet_size(r);
      if (Integer(static_cast<long>(pts.size())) != expect)
        return make("dim", "gamma-point-grid", false,
                    "count r=" + std::to_string(r) + " k=" + std::to_string(k));
      std::set<Rational> cells;
      const Rational scale = Rational::pow2(2 * r * k);
      for (size_t i = 0; i < pts.size(); ++i) {
        if (!in_gamma(r, pts[i]))
          return make("dim", "gamma-point-grid", false, "membership " + pts[i].str());
        if (pts[i].is_dyadic())
          return make("dim", "gamma-point-grid", false, "dyadic point " + pts[i].str());
        if (i > 0 && !(pts[i - 1].value() < pts[i].value()))
          return make("dim", "gamma-point-grid", false, "order r=" + std::to_string(r));
        Integer cell;
        const Rational scaled = pts[i].value() * scale;
        mpz_fdiv_q(cell.get_mpz_t(), scaled.numerator().get_mpz_t(),
                   scaled.denominator().get_mpz_t());
        cells.insert(Rational(cell));
      }
      if (cells.size() != pts.size())
        return make("dim", "gamma-point-grid", false,
                    "shared box r=" + std::to_string(r) + " k=" + std::to_string(k));
    }
  }
  if (in_gamma(2, parse_expansion("0.(01)")) || !in_gamma(1, parse_expansion("0.(01)")))
    return make("dim", "gamma-point-grid", false, "1/3 classification");
  if (in_gamma(2, parse_expansion("0.0011")) || in_gamma(2, parse_expansion("0.(1)")))
    return make("dim", "gamma-point-grid", false, "constant tails");
  return make("dim", "gamma-point-grid", true, "r <= 4, k <= 3: counts, boxes, order");
}

CheckResult dim_box_counts(std::uint64_t) {
  const DimensionEstimate e3 = box_dimension_gamma(3, 5);
  for (int k = 1; k <= 5; ++k) {
    const auto& [depth, boxes] = e3.scales[static_cast<size_t>(k - 1)];
    Integer expect = 1;
    mpz_mul_2exp(expect.get_mpz_t(), expect.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    if (depth != 6 * k || boxes != expect)
      return make("dim", "box-dimension", false, "r=3 scale k=" + std::to_string(k));
  }
  if (!e3.dimension.exact || e3.dimension.lo != Rational(1, 6))
    return make("dim", "box-dimension", false, "r=3 slope");
  const DimensionEstimate e4 = box_dimension_gamma(4, 3);
  if (e4.dimension.exact || e4.dimension.lo >= e4.dimension.hi)
    return make("dim", "box-dimension", false, "r=4 enclosure shape");
  if (e4.dimension.lo <= Rational(29, 100) || e4.dimension.hi >= Rational(291, 1000))
    return make("dim", "box-dimension", false, "r=4 log2(5)/8 enclosure");
  return make("dim", "box-dimension", true, "r=3 exact 1/6; r=4 certified log2(5)/8");
}

CheckResult dim_bilipschitz(std::uint64_t) {
  for (int r = 3; r <= 4; ++r) {
    const auto pts = enumerate_gamma_points(r, r == 3 ? 2 : 1);
    for (size_t i = 0; i < pts.size(); ++i) {
      for (size_t j = i + 1; j < pts.size(); ++j) {
        const BilipschitzResult b = bilipschitz_check(r, pts[i], pts[j]);
        if (!b.ok)
          return make("dim", "bilipschitz-distortion", false,
                      pts[i].str() + " vs " + pts[j].str());
        if (b.ratio < b.bound_lo || b.ratio > b.bound_hi || b.ratio <= Rational(0))
          return make("dim", "bilipschitz-distortion", false, "ratio bounds");
      }
    }
  }
  return make("dim", "bilipschitz-distortion", true, "all pairs, r = 3 and 4");
}

CheckResult dim_spectrum(std::uint64_t) {
  const SpectrumTable t = spectrum_table(16);
  if (t.rows.size() != 16 || t.r0 != 5)
    return make("dim", "spectrum-table", false, "r0=" + std::to_string(t.r0));
  for (const SpectrumRow& row : t.rows) {
    if (row.alpha != Rational(1, 2L * row.r) || row.count != alphabet_size(row.r) ||
        row.catalan_r != catalan(row.r))
      return make("dim", "spectrum-table", false, "row r=" + std::to_string(row.r));
    const bool should_exceed = row.r >= 5;
    if (!row.exceeds.has_value() || *row.exceeds != should_exceed)
      return make("dim", "spectrum-table", false,
                  "certification at r=" + std::to_string(row.r));
    if (row.r >= 2) {
      const auto ord_above = row.abscissa_bound.certified_less(row.ordinate_bound);
      if (!ord_above.has_value() || !*ord_above)
        return make("dim", "spectrum-table", false,
                    "bound ordering at r=" + std::to_string(row.r));
    }
  }
  return make("dim", "spectrum-table", true, "r <= 16; certified from r0 = 5");
}

struct SuiteEntry {
  const char* suite;
  Check fn;
};

const SuiteEntry kChecks[] = {
    {"arith", arith_profile},
    {"arith", arith_roundtrip},
    {"arith", arith_order},
    {"arith", arith_twins},
    {"takagi", takagi_grid},
    {"takagi", takagi_functional},
    {"takagi", takagi_partial_sums},
    {"takagi", takagi_range},
    {"takagi", takagi_bounds},
    {"levels", levels_flip_equiv},
    {"levels", levels_leftmost},
    {"levels", levels_count_convention},
    {"levels", levels_cover_sound},
    {"levels", levels_cover_edges},
    {"levels", levels_expected_size},
    {"omega", omega_decisions},
    {"omega", omega_breakpoint_counts},
    {"omega", omega_interval_geometry},
    {"omega", omega_partial_sums},
    {"omega", omega_cells},
    {"measure", measure_monotone},
    {"measure", measure_normalization},
    {"measure", measure_removed_flat},
    {"measure", measure_selfsimilar},
    {"measure", measure_masses},
    {"measure", measure_tau_image},
    {"dim", dim_alphabet},
    {"dim", dim_gamma_points},
    {"dim", dim_box_counts},
    {"dim", dim_bilipschitz},
    {"dim", dim_spectrum},
};

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
  const bool all = suite == "all";
  bool known = all;
  std::vector<CheckResult> out;
  std::uint64_t salt = 0;
  for (const SuiteEntry& entry : kChecks) {
    ++salt;
    if (!all && suite != entry.suite) continue;
    known = true;
    out.push_back(entry.fn(seed + 1000003 * salt));
  }
  if (!known) throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace takagi
