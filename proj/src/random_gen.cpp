#include "takagi/random_gen.hpp"

namespace takagi {

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

int Rng::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

DigitWord random_word(Rng& rng, int length) {
  DigitWord w(static_cast<size_t>(length));
  for (auto& d : w) d = static_cast<Digit>(rng.below(2));
  return w;
}

BinaryExpansion random_expansion(Rng& rng, int max_prefix, bool allow_periodic) {
  DigitWord prefix = random_word(rng, rng.range(0, max_prefix));
  const int kind = rng.range(0, allow_periodic ? 2 : 1);
  switch (kind) {
    case 0: return BinaryExpansion::zeros(std::move(prefix));
    case 1: return BinaryExpansion::ones(std::move(prefix));
    default: break;
  }
  // A constant candidate period degenerates via the parse-level rule; draw
  // until the word has both digits.
  DigitWord period;
  do {
    period = random_word(rng, rng.range(1, 8));
  } while (word_deficiency(period) == static_cast<int>(period.size()) ||
           word_deficiency(period) == -static_cast<int>(period.size()));
  return BinaryExpansion::periodic(std::move(prefix), std::move(period));
}

BinaryExpansion random_dyadic(Rng& rng, int max_depth) {
  const int depth = rng.range(0, max_depth);
  Integer k = 0;
  for (int i = 0; i < depth; ++i) {
    mpz_mul_2exp(k.get_mpz_t(), k.get_mpz_t(), 1);
    if (rng.flip()) k += 1;
  }
  return BinaryExpansion::from_dyadic(k, depth);
}

BinaryExpansion random_omega_member(Rng& rng, int max_prefix) {
  const int len = rng.range(0, max_prefix);
  DigitWord prefix;
  prefix.reserve(static_cast<size_t>(len));
  int D = 0;
  for (int i = 0; i < len; ++i) {
    const Digit d = D == 0 ? Digit{0} : static_cast<Digit>(rng.below(2));
    D += d ? -1 : 1;
    prefix.push_back(d);
  }
  if (rng.flip()) return BinaryExpansion::zeros(std::move(prefix));
  return BinaryExpansion::periodic(std::move(prefix), {0, 1});
}

}  // namespace takagi
