#include "takagi/takagi_eval.hpp"

#include <stdexcept>

namespace takagi {

Rational tau_dyadic(const Integer& k, int depth) {
  if (depth < 0) throw std::invalid_argument("tau_dyadic: negative depth");
  Integer top = 1;
  mpz_mul_2exp(top.get_mpz_t(), top.get_mpz_t(), depth);
  if (k < 0 || k > top)
    throw std::out_of_range("tau_dyadic: k outside [0, 2^depth]");
  if (depth == 0) return Rational(0);
  // tau(x) = sum_{j<depth} <2^j x>/2^j; the sum stops because 2^depth x is
  // an integer.  Everything is carried over the common denominator
  // 2^(2*depth - 1).
  Integer m = k;
  if (m == top) m = 0;
  Integer num = 0;
  for (int j = 0; j < depth; ++j) {
    const Integer dist = std::min(Integer(m), Integer(top - m));
    Integer term = dist;
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(depth - 1 - j));
    num += term;
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), 1);
    if (m >= top) m -= top;
  }
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(),
               static_cast<mp_bitcnt_t>(2 * depth - 1));
  return Rational(num, den);
}

Rational tau_dyadic(const Rational& x) {
  if (x < Rational(0) || x > Rational(1))
    throw std::out_of_range("tau_dyadic: x outside [0,1]");
  const Integer den = x.denominator();
  if (mpz_popcount(den.get_mpz_t()) != 1)
    throw std::invalid_argument("tau_dyadic: not a dyadic rational");
  const int depth = static_cast<int>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
  return tau_dyadic(x.numerator(), depth);
}

Rational tau(const BinaryExpansion& x) {
  const int L = x.prefix_size();
  const Integer P = word_value(x.prefix());
  switch (x.tail()) {
    case Tail::kZeros:
      return tau_dyadic(P, L);
    case Tail::kOnes:
      return tau_dyadic(P + 1, L);
    case Tail::kPeriodic: {
      // Let w = .(W) with |W| = q.  Splitting off the first period gives
      // tau(w) = tau(W/2^q) + (tau(w) + D_q(W) w)/2^q, a linear equation
      // in tau(w).
      const DigitWord& W = x.period();
      const int q = static_cast<int>(W.size());
      Integer den = 1;
      mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(q));
      const Rational pow_q(den);  // 2^q
      den -= 1;                   // 2^q - 1
      const Rational w(word_value(W), den);
      const Rational tau_w =
          (tau_dyadic(word_value(W), q) + Rational(word_deficiency(W)) * w / pow_q) *
          pow_q / Rational(den);
      // Then splice the prefix back on with the self-similarity relation
      // tau(x0 + w/2^L) = tau(x0) + (tau(w) + D_L w)/2^L.
      return tau_dyadic(P, L) +
             Rational::pow2(-L) * (tau_w + Rational(word_deficiency(x.prefix())) * w);
    }
  }
  return Rational(0);
}

TauBounds tau_bounds(const DigitWord& prefix) {
  TauBounds b;
  b.k = word_value(prefix);
  b.depth = static_cast<int>(prefix.size());
  b.deficiency = word_deficiency(prefix);
  const Rational t0 = tau_dyadic(b.k, b.depth);
  const Rational scale = Rational::pow2(-b.depth);
  const Rational two_thirds(2, 3);
  b.lo = t0 + scale * Rational(std::min(0, b.deficiency));
  b.hi = t0 + scale * (two_thirds + Rational(std::max(0, b.deficiency)));
  if (b.lo < Rational(0)) b.lo = Rational(0);
  if (b.hi > two_thirds) b.hi = two_thirds;
  return b;
}

bool verify_functional_equations(const BinaryExpansion& x) {
  const Rational t = tau(x);
  if (tau(x.complement()) != t) return false;
  return Rational(2) * tau(x.shift_right()) == t + x.value();
}

std::vector<unsigned long long> tau_grid_scaled(int depth) {
  if (depth < 0 || depth > 24)
    throw std::invalid_argument("tau_grid_scaled: depth must be in [0, 24]");
  std::vector<unsigned long long> cur{0ULL, 0ULL};  // depth 0: tau(0), tau(1)
  for (int n = 0; n < depth; ++n) {
    const size_t size = cur.size();
    std::vector<unsigned long long> next(2 * size - 1);
    for (size_t k = 0; k + 1 < size; ++k) {
      next[2 * k] = 2 * cur[k];
      next[2 * k + 1] = cur[k] + cur[k + 1] + 1;
    }
    next[2 * (size - 1)] = 2 * cur[size - 1];
    cur = std::move(next);
  }
  return cur;
}

}  // namespace takagi
