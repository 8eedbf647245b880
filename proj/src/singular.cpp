#include "takagi/singular.hpp"

#include <stdexcept>

#include "takagi/takagi_eval.hpp"

namespace takagi {

BinaryExpansion sup_omega_below(const BinaryExpansion& x) {
  const OmegaResult r = omega_membership(x);
  if (r.member) return x;
  // At the first violation j: D_{j-1} = 0 and digit j is a 1.  Setting it
  // to 0 gives D_j = 1; the greedy maximal continuation alternates
  // 1,0,1,0,... holding D in {0,1}.  Nothing between that stream and x is
  // a member: any stream above it agreeing with x through j-1 digits
  // either repeats the violation or exceeds the greedy choice somewhere.
  DigitWord head = x.digits(r.first_violation - 1);
  head.push_back(0);
  return BinaryExpansion::periodic(std::move(head), {1, 0});
}

SingularValue tau_s(const BinaryExpansion& x) {
  SingularValue v;
  v.point = x;
  const BinaryExpansion w = sup_omega_below(x);
  v.value = tau(w) + w.value();
  v.in_omega = omega_membership(x).member;
  if (!v.in_omega) v.witness = w;
  return v;
}

Rational mu_s_interval(const BinaryExpansion& a, const BinaryExpansion& b) {
  if (a.value() > b.value())
    throw std::invalid_argument("mu_s_interval: endpoints out of order");
  return tau_s(b).value - tau_s(a).value;
}

FinePartitionMass fine_partition_mass(const BreakpointWord& full_word) {
  const FinePartitionCell cell = fine_partition_cell(full_word);
  const int m = full_word.m();
  FinePartitionMass out;
  out.mass = Rational::pow2(-(2 * m + 1));
  out.tau_lo = tau_dyadic(word_value(full_word.word), 2 * m);
  out.tau_hi = out.tau_lo + out.mass;
  (void)cell;
  return out;
}

bool verify_selfsimilar_measure(const BreakpointWord& full_word,
                                const BinaryExpansion& t1,
                                const BinaryExpansion& t2) {
  if (!omega_membership(t1).member || !omega_membership(t2).member)
    throw std::invalid_argument("verify_selfsimilar_measure: arguments must be members");
  if (t1.value() > t2.value())
    throw std::invalid_argument("verify_selfsimilar_measure: endpoints out of order");
  const int m = full_word.m();
  // phi(t) = base + (t/2)/2^2m: prepend the cell word and one 0.
  const BinaryExpansion x1 = t1.shift_right().with_prefix(full_word.word);
  const BinaryExpansion x2 = t2.shift_right().with_prefix(full_word.word);
  const Rational lhs = mu_s_interval(x1, x2);
  const Rational rhs = Rational::pow2(-(2 * m + 1)) *
                       (mu_s_interval(t1, t2) + (t2.value() - t1.value()));
  return lhs == rhs;
}

Rational mass_partial_sum(int m_max) {
  if (m_max < 0) throw std::invalid_argument("mass_partial_sum: negative bound");
  Integer num = 0;
  for (int m = 0; m <= m_max; ++m) {
    Integer term = catalan(m);
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(2 * (m_max - m)));
    num += term;
  }
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(),
               static_cast<mp_bitcnt_t>(2 * m_max + 1));
  return Rational(num, den);
}

}  // namespace takagi
