#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace takagi {

using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in canonical form: the
/// denominator is positive and coprime to the numerator.  Every operation
/// in this library that produces a number produces one of these; nothing
/// outside the SVG plotting path ever rounds.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // implicit: lets `x + 1` read naturally
  Rational(const Integer& n) : q_(n) {}
  Rational(long num, long den) : q_(num, den) { canonicalize_checked(); }
  Rational(const Integer& num, const Integer& den) : q_(num, den) {
    canonicalize_checked();
  }

  /// 2^e, e of either sign.
  static Rational pow2(long e) {
    Integer p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e >= 0 ? e : -e));
    return e >= 0 ? Rational(p) : Rational(1, p);
  }

  /// Accepts "p" or "p/q" with optional leading minus on p.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  int sign() const { return mpq_sgn(q_.get_mpq_t()); }

  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// Canonical "p/q" form, denominator printed even when it is 1.
  std::string str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  /// Lossy conversion, used only when emitting plot coordinates.
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }

 private:
  void canonicalize_checked() {
    if (mpz_sgn(mpq_denref(q_.get_mpq_t())) == 0)
      throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }

  mpq_class q_;
};

inline Rational Rational::parse(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("Rational::parse: malformed literal '" +
                                 std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const auto check_int = [&](std::string_view part, bool allow_sign) {
    if (part.empty()) throw bad();
    size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
  };
  if (slash == std::string_view::npos) {
    check_int(text, true);
    return Rational(Integer(std::string(text)));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  check_int(num, true);
  check_int(den, false);
  return Rational(Integer(std::string(num)), Integer(std::string(den)));
}

}  // namespace takagi
