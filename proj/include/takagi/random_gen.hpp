#pragma once

#include <cstdint>
#include <random>

#include "takagi/expansion.hpp"

namespace takagi {

/// Deterministic random source.  Wraps the standard Mersenne engine (whose
/// output sequence the standard pins down exactly) and hand-rolls the
/// reductions, so identical seeds give identical streams on every platform
/// and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n), n >= 1, by rejection.
  std::uint64_t below(std::uint64_t n);

  /// Uniform in [lo, hi] inclusive.
  int range(int lo, int hi);

  bool flip() { return (next() & 1ULL) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Uniformly random digit word of the given length.
DigitWord random_word(Rng& rng, int length);

/// Random expansion: prefix length in [0, max_prefix]; tail drawn among
/// zeros / ones / a short random period when allow_periodic is set.
BinaryExpansion random_expansion(Rng& rng, int max_prefix, bool allow_periodic);

/// Random expansion of a dyadic k/2^depth with depth in [0, max_depth].
BinaryExpansion random_dyadic(Rng& rng, int max_depth);

/// Random member of the nonnegative-deficiency set: a walk that never
/// dips below zero, closed off with a member tail.
BinaryExpansion random_omega_member(Rng& rng, int max_prefix);

}  // namespace takagi
