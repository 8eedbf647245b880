#include "takagi/dimension.hpp"

#include <numeric>
#include <stdexcept>

#include "takagi/omega.hpp"
#include "takagi/takagi_eval.hpp"

namespace takagi {

namespace {

int step(Digit d) { return d ? -1 : 1; }

void first_return_backtrack(int len, int target, DigitWord& word, int D,
                            std::vector<DigitWord>& out) {
  if (len == target) {
    if (D == 0) out.push_back(word);
    return;
  }
  for (Digit d : {Digit{0}, Digit{1}}) {
    const int nd = D + step(d);
    const bool last = len + 1 == target;
    if (last ? nd != 0 : nd < 1) continue;  // interior strictly positive
    if (nd > target - (len + 1)) continue;
    word.push_back(d);
    first_return_backtrack(len + 1, target, word, nd, out);
    word.pop_back();
  }
}

}  // namespace

AlphabetX alphabet_X(int r) {
  if (r < 1 || r > 12)
    throw std::invalid_argument("alphabet_X: r outside [1, 12]");
  AlphabetX a;
  a.r = r;
  DigitWord word;
  first_return_backtrack(0, 2 * r, word, 0, a.words);
  return a;
}

Integer alphabet_size(int r) {
  if (r < 1) throw std::invalid_argument("alphabet_size: r must be >= 1");
  return catalan(r - 1);
}

std::vector<BinaryExpansion> enumerate_gamma_points(int r, int k) {
  if (k < 1) throw std::invalid_argument("enumerate_gamma_points: k must be >= 1");
  const AlphabetX a = alphabet_X(r);
  const size_t n = a.words.size();
  double total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<double>(n);
  if (total > (1 << 20))
    throw std::invalid_argument("enumerate_gamma_points: |X|^k too large");
  std::vector<BinaryExpansion> out;
  out.reserve(static_cast<size_t>(total));
  std::vector<size_t> idx(static_cast<size_t>(k), 0);
  while (true) {
    DigitWord prefix;
    prefix.reserve(static_cast<size_t>(2 * r * (k - 1)));
    for (int i = 0; i + 1 < k; ++i) {
      const DigitWord& w = a.words[idx[static_cast<size_t>(i)]];
      prefix.insert(prefix.end(), w.begin(), w.end());
    }
    out.push_back(BinaryExpansion::periodic(std::move(prefix),
                                            a.words[idx[static_cast<size_t>(k - 1)]]));
    int pos = k - 1;
    while (pos >= 0 && ++idx[static_cast<size_t>(pos)] == n) {
      idx[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

bool in_gamma(int r, const BinaryExpansion& x) {
  if (r < 1) throw std::invalid_argument("in_gamma: r must be >= 1");
  if (x.tail() != Tail::kPeriodic) return false;
  const int q = static_cast<int>(x.period().size());
  if (word_deficiency(x.period()) != 0) return false;
  const int L = x.prefix_size();
  // Past the prefix both the deficiency and the position residue repeat
  // with period lcm(q, 2r), so one combined period decides everything.
  const int horizon = L + std::lcm(q, 2 * r);
  int D = 0;
  for (int j = 1; j <= horizon; ++j) {
    D += step(x.digit(j));
    if (j % (2 * r) == 0 ? D != 0 : D <= 0) return false;
  }
  return true;
}

DimensionEstimate box_dimension_gamma(int r, int k_max) {
  if (k_max < 1) throw std::invalid_argument("box_dimension_gamma: k_max must be >= 1");
  const Integer count = r <= 12 ? Integer(alphabet_X(r).words.size()) : alphabet_size(r);
  DimensionEstimate est;
  est.r = r;
  Integer boxes = 1;
  for (int k = 1; k <= k_max; ++k) {
    boxes *= count;
    est.scales.emplace_back(2 * r * k, boxes);
  }
  est.dimension = log2_interval(count).scaled(Rational(1, 2L * r));
  return est;
}

Rational local_dim_lower(int r) {
  if (r < 1) throw std::invalid_argument("local_dim_lower: r must be >= 1");
  return Rational(1, 2L * r);
}

BilipschitzResult bilipschitz_check(int r, const BinaryExpansion& x1,
                                    const BinaryExpansion& x2) {
  if (!in_gamma(r, x1) || !in_gamma(r, x2))
    throw std::invalid_argument("bilipschitz_check: points must lie in the set");
  const Rational v1 = x1.value();
  const Rational v2 = x2.value();
  if (v1 >= v2)
    throw std::invalid_argument("bilipschitz_check: requires x1 < x2");
  const Rational dx = v2 - v1;
  const Rational dt = tau(x2) - tau(x1);
  BilipschitzResult res;
  res.bound_lo = Rational::pow2(-2 * r);
  res.bound_hi = Rational::pow2(2 * r);
  res.ok = dt >= res.bound_lo * dx && dt <= res.bound_hi * dx;
  res.ratio = dt / dx;
  return res;
}

Rational level_image_point(int r, const BinaryExpansion& x) {
  if (!in_gamma(r, x))
    throw std::invalid_argument("level_image_point: point must lie in the set");
  return tau(x);
}

SpectrumTable spectrum_table(int r_max) {
  if (r_max < 2) throw std::invalid_argument("spectrum_table: r_max must be >= 2");
  SpectrumTable table;
  table.rows.reserve(static_cast<size_t>(r_max));
  for (int r = 1; r <= r_max; ++r) {
    SpectrumRow row;
    row.r = r;
    row.alpha = Rational(1, 2L * r);
    row.count = alphabet_size(r);
    row.catalan_r = catalan(r);
    row.gamma_dim = log2_interval(row.count).scaled(Rational(1, 2L * r));
    const RatInterval lnr = ln_interval(static_cast<unsigned long>(r));
    row.abscissa_bound = RatInterval::point(Rational(1)) - lnr.scaled(Rational(2, r));
    row.ordinate_bound = RatInterval::point(Rational(1)) - lnr.scaled(Rational(1, r));
    row.exceeds = row.abscissa_bound.certified_less(row.gamma_dim);
    table.rows.push_back(std::move(row));
  }
  int r0 = 0;
  for (int i = r_max; i >= 1; --i) {
    const auto& e = table.rows[static_cast<size_t>(i - 1)].exceeds;
    if (e.has_value() && *e) r0 = i;
    else break;
  }
  table.r0 = r0;
  return table;
}

}  // namespace takagi
