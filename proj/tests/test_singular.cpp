#include <doctest.h>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "takagi/expansion.hpp"
#include "takagi/omega.hpp"
#include "takagi/random_gen.hpp"
#include "takagi/singular.hpp"
#include "takagi/takagi_eval.hpp"

using namespace takagi;

TEST_CASE("supremum of members below a point") {
  CHECK(sup_omega_below(parse_expansion("0.1")).value() == Rational(1, 3));
  CHECK(sup_omega_below(parse_expansion("0.0110")).value() == Rational(1, 3));
  CHECK(sup_omega_below(parse_expansion("0.(1)")).value() == Rational(1, 3));
  CHECK(sup_omega_below(parse_expansion("0.01(1)")).value() == Rational(1, 3));
  CHECK(sup_omega_below(parse_expansion("0.0100111")).value() == Rational(29, 96));
  // Members are their own supremum.
  CHECK(sup_omega_below(parse_expansion("0.(01)")) == parse_expansion("0.(01)"));
  CHECK(sup_omega_below(parse_expansion("0.0011(01)")) ==
        parse_expansion("0.0011(01)"));
}

TEST_CASE("distribution fixtures") {
  CHECK(tau_s(parse_expansion("0.")).value == Rational(0));
  CHECK(tau_s(parse_expansion("0.(1)")).value == Rational(1));
  CHECK(tau_s(parse_expansion("0.1")).value == Rational(1));
  CHECK(tau_s(parse_expansion("0.(01)")).value == Rational(1));
  CHECK(tau_s(parse_expansion("0.01")).value == Rational(3, 4));
  CHECK(tau_s(parse_expansion("0.0011(01)")).value ==
        Rational(13, 24) + Rational(5, 24));
  CHECK(tau_s(parse_expansion("0.010(01)")).value ==
        tau(parse_expansion("0.010(01)")) + Rational(7, 24));
}

TEST_CASE("witness bookkeeping") {
  const SingularValue member = tau_s(parse_expansion("0.(01)"));
  CHECK(member.in_omega);
  CHECK_FALSE(member.witness.has_value());
  const SingularValue outside = tau_s(parse_expansion("0.0110"));
  CHECK_FALSE(outside.in_omega);
  REQUIRE(outside.witness.has_value());
  CHECK(outside.witness->value() == Rational(1, 3));
  CHECK(outside.value == Rational(1));
}

TEST_CASE("interval mass") {
  CHECK(mu_s_interval(parse_expansion("0."), parse_expansion("0.(1)")) == Rational(1));
  CHECK(mu_s_interval(parse_expansion("0.01"), parse_expansion("0.011")) ==
        Rational(1, 4));
  CHECK(mu_s_interval(parse_expansion("0.(01)"), parse_expansion("0.(1)")) ==
        Rational(0));
  CHECK_THROWS_AS(mu_s_interval(parse_expansion("0.1"), parse_expansion("0.01")),
                  std::invalid_argument);
}

TEST_CASE("flat exactly on the removed intervals") {
  for (const auto& iv : removed_intervals_up_to(10)) {
    CHECK(mu_s_interval(iv.left, iv.right) == Rational(0));
    CHECK(tau_s(iv.left).value == tau_s(iv.right).value);
  }
}

TEST_CASE("monotone along a sorted sample") {
  Rng rng(2718);
  std::vector<BinaryExpansion> xs;
  for (int t = 0; t < 1500; ++t) xs.push_back(random_expansion(rng, 14, true));
  std::sort(xs.begin(), xs.end(),
            [](const BinaryExpansion& a, const BinaryExpansion& b) {
              return a.value() < b.value();
            });
  Rational prev = tau_s(xs.front()).value;
  for (size_t i = 1; i < xs.size(); ++i) {
    const Rational cur = tau_s(xs[i]).value;
    CHECK(prev <= cur);
    prev = cur;
  }
}

TEST_CASE("cell masses") {
  CHECK(fine_partition_mass(BreakpointWord{}).mass == Rational(1, 2));
  const auto level1 = enumerate_breakpoints(1, BreakpointKind::kFull);
  const FinePartitionMass m1 = fine_partition_mass(level1[0]);
  CHECK(m1.mass == Rational(1, 8));
  CHECK(m1.tau_lo == Rational(1, 2));        // tau at 1/4
  CHECK(m1.tau_hi == Rational(5, 8));        // tau at 3/8
  CHECK(mass_partial_sum(0) == Rational(1, 2));
  CHECK(mass_partial_sum(1) == Rational(5, 8));
  CHECK(mass_partial_sum(2) == Rational(11, 16));
  // The hull holds the cell plus all deeper cells with the same prefix;
  // its total mass is twice the cell's own.
  const auto cell = fine_partition_cell(level1[0]);
  const auto [alo, ahi] = dyadic_expansions(cell.hull_lo);
  const auto [blo, bhi] = dyadic_expansions(cell.hull_hi);
  CHECK(mu_s_interval(alo, blo) == m1.mass * 2);
  (void)ahi;
  (void)bhi;
}

TEST_CASE("renormalization identity on fixtures") {
  const auto level1 = enumerate_breakpoints(1, BreakpointKind::kFull);
  // [0, 1/3] spans every member; 0.0(01) = 1/6 is an interior member.
  CHECK(verify_selfsimilar_measure(level1[0], parse_expansion("0."),
                                   parse_expansion("0.(01)")));
  CHECK(verify_selfsimilar_measure(level1[0], parse_expansion("0.0(01)"),
                                   parse_expansion("0.(01)")));
  CHECK(verify_selfsimilar_measure(BreakpointWord{}, parse_expansion("0.00(10)"),
                                   parse_expansion("0.0011(01)")));
  CHECK_THROWS_AS(verify_selfsimilar_measure(level1[0], parse_expansion("0.1"),
                                             parse_expansion("0.0110")),
                  std::invalid_argument);
}

TEST_CASE("mass never exceeds length plus drop") {
  // mu([a,b]) = tau(b) + b - tau(a) - a on member endpoints.
  Rng rng(90210);
  for (int t = 0; t < 300; ++t) {
    BinaryExpansion a = random_omega_member(rng, 12);
    BinaryExpansion b = random_omega_member(rng, 12);
    if (b.value() < a.value()) std::swap(a, b);
    const Rational mass = mu_s_interval(a, b);
    CHECK(mass == tau(b) + b.value() - tau(a) - a.value());
    CHECK(mass >= Rational(0));
  }
}
