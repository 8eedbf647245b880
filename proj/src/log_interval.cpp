#include "takagi/log_interval.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace takagi {

namespace {

// Exact rational from an MPFR value: mantissa * 2^exp.
Rational from_mpfr_exact(mpfr_t v) {
  Integer mant;
  const long e = static_cast<long>(mpfr_get_z_2exp(mant.get_mpz_t(), v));
  return Rational(mant) * Rational::pow2(e);
}

RatInterval directed_log(const Integer& n, bool base2) {
  // Precision comfortably above the input's bit length keeps mpfr_set_z
  // exact, so the only rounding is the final directed one.
  const mpfr_prec_t prec =
      static_cast<mpfr_prec_t>(mpz_sizeinbase(n.get_mpz_t(), 2)) + 128;
  mpfr_t t, lo, hi;
  mpfr_init2(t, prec);
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  mpfr_set_z(t, n.get_mpz_t(), MPFR_RNDN);
  if (base2) {
    mpfr_log2(lo, t, MPFR_RNDD);
    mpfr_log2(hi, t, MPFR_RNDU);
  } else {
    mpfr_log(lo, t, MPFR_RNDD);
    mpfr_log(hi, t, MPFR_RNDU);
  }
  RatInterval out{from_mpfr_exact(lo), from_mpfr_exact(hi), false};
  mpfr_clear(t);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return out;
}

}  // namespace

RatInterval log2_interval(const Integer& n) {
  if (n < 1) throw std::domain_error("log2_interval: n must be >= 1");
  if (mpz_popcount(n.get_mpz_t()) == 1) {
    const long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
    return RatInterval::point(Rational(e));
  }
  return directed_log(n, true);
}

RatInterval ln_interval(unsigned long n) {
  if (n < 1) throw std::domain_error("ln_interval: n must be >= 1");
  if (n == 1) return RatInterval::point(Rational(0));
  return directed_log(Integer(n), false);
}

}  // namespace takagi
