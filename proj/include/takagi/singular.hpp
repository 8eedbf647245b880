#pragma once

#include <optional>

#include "takagi/expansion.hpp"
#include "takagi/omega.hpp"
#include "takagi/rational.hpp"

namespace takagi {

/// Largest member of the nonnegative-deficiency set at or below x (as a
/// digit stream).  For a member this is x itself.  Otherwise the first
/// deficiency violation is repaired: the offending 1 becomes a 0 and the
/// rest is filled greedily with the largest digits that keep D >= 0, which
/// settles into an alternating tail; the result is the left endpoint of
/// the removed interval containing x.
BinaryExpansion sup_omega_below(const BinaryExpansion& x);

/// The singular function value tau(w) + w at w = sup_omega_below(x).  On
/// members this is strictly increasing; elsewhere it is constant across
/// each removed interval, making it the distribution function of a
/// measure.
struct SingularValue {
  BinaryExpansion point;
  Rational value;
  bool in_omega = false;
  std::optional<BinaryExpansion> witness;  // the sup, when x is not a member
};

SingularValue tau_s(const BinaryExpansion& x);

/// Measure of [a, b]: tau_s(b) - tau_s(a).  Requires a <= b as reals.
Rational mu_s_interval(const BinaryExpansion& a, const BinaryExpansion& b);

/// Mass of one fine-partition cell, 2^-(2m+1), together with the exact
/// interval the Takagi function maps the cell onto (whose endpoints are
/// attained): [tau(base), tau(base) + 2^-(2m+1)].
struct FinePartitionMass {
  Rational mass;
  Rational tau_lo, tau_hi;
};

FinePartitionMass fine_partition_mass(const BreakpointWord& full_word);

/// Exact self-similarity of the measure under the cell map
/// phi(t) = base + (t/2)/2^2m that carries the whole set onto the cell of
/// `full_word`: checks
///   mu([phi(t1), phi(t2)]) == 2^-(2m+1) * (mu([t1, t2]) + (t2 - t1))
/// for members t1 <= t2.  Throws if the arguments are not members or are
/// out of order.
bool verify_selfsimilar_measure(const BreakpointWord& full_word,
                                const BinaryExpansion& t1,
                                const BinaryExpansion& t2);

/// sum_{m<=M} C_m 2^-(2m+1): the fine-partition masses by level; tends
/// to 1, certifying that the cells carry the entire measure.
Rational mass_partial_sum(int m_max);

}  // namespace takagi
