// Copyright 2026 The hsearch Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <gtest/gtest.h>

#include "hsearch/quadratize.h"
#include "hsearch/williamson.h"
#include "test_util.h"

namespace hsearch {
namespace {

MultilinearPoly Q(VarId v) { return MultilinearPoly::variable(Domain::kBoolean, v); }

// Minimum of E_2 over all extensions; the ancilla-consistent minimum too.
struct ExtendedMin {
  Coeff overall;
  bool ground_consistent;
};

ExtendedMin extended_min(const Quadratization& qd, std::size_t n) {
  const std::size_t total = n + qd.ancillas.entries.size();
  Coeff best = 0;
  std::vector<std::uint64_t> ground;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << total); ++bits) {
    const Assignment a = spins_to_booleans(Assignment::spins_from_bits(bits, total));
    const Coeff e = evaluate(qd.poly, a);
    if (bits == 0 || e < best) {
      best = e;
      ground.assign(1, bits);
    } else if (e == best) {
      ground.push_back(bits);
    }
  }
  bool consistent = true;
  for (auto bits : ground) {
    consistent &= ancillas_consistent(
        qd.ancillas, spins_to_booleans(Assignment::spins_from_bits(bits, total)));
  }
  return {best, consistent};
}

TEST(Quadratize, DeltaIsTwiceAbsSum) {
  const MultilinearPoly p = 3 * (Q(0) * Q(1) * Q(2)) - 4 * Q(1) + MultilinearPoly::constant(Domain::kBoolean, 5);
  EXPECT_EQ(compute_delta(p), 24);
  EXPECT_THROW(compute_delta(MultilinearPoly(Domain::kSpin)), std::invalid_argument);
}

TEST(Quadratize, WilliamsonDelta) {
  EXPECT_EQ(compute_delta(spin_to_boolean(williamson_energy(3))), 53952);
  EXPECT_EQ(compute_delta(spin_to_boolean(williamson_energy(5))), 681600);
  EXPECT_EQ(compute_delta(spin_to_boolean(williamson_energy(7))), 3355968);
  EXPECT_EQ(compute_delta(spin_to_boolean(williamson_energy(9))), 10545408);
}

TEST(Quadratize, SelectPairRules) {
  MultilinearPoly p(Domain::kBoolean);
  p.add_term({0, 2, 3}, 1);
  p.add_term({1, 2, 3}, 1);
  p.add_term({0, 1}, 1);
  EXPECT_EQ(select_pair(p), (std::pair<VarId, VarId>{2, 3}));
  EXPECT_EQ(select_pair(p, PairSelection::kLexicographicFirst), (std::pair<VarId, VarId>{0, 2}));
  EXPECT_THROW(select_pair(Q(0) * Q(1)), std::invalid_argument);
}

TEST(Quadratize, SubstituteSingleCubic) {
  const MultilinearPoly p = 5 * (Q(0) * Q(1) * Q(2));
  const MultilinearPoly got = substitute_pair(p, 0, 1, 3, 10);
  MultilinearPoly expect = 5 * (Q(3) * Q(2));
  expect += 10 * (Q(0) * Q(1));
  expect += -20 * (Q(0) * Q(3));
  expect += -20 * (Q(1) * Q(3));
  expect += 30 * Q(3);
  EXPECT_EQ(got, expect);
  EXPECT_THROW(substitute_pair(p, 0, 0, 3, 10), std::invalid_argument);
  EXPECT_THROW(substitute_pair(p, 0, 1, 2, 10), std::invalid_argument);
}

TEST(Quadratize, WilliamsonK3MatchesReference) {
  const Quadratization qd = quadratize(spin_to_boolean(williamson_energy(3)));
  EXPECT_EQ(qd.poly, testing::load_fixture("w3_e2_q.poly"));
  EXPECT_EQ(boolean_to_spin(qd.poly), testing::load_fixture("w3_e2_s.poly"));
  const std::vector<AncillaEntry> expect = {
      {8, {0, 1}}, {9, {2, 3}}, {10, {4, 5}}, {11, {6, 7}}};
  EXPECT_EQ(qd.ancillas.entries, expect);
}

TEST(Quadratize, WilliamsonAncillaCounts) {
  const std::pair<int, std::size_t> cases[] = {{3, 4}, {5, 12}, {7, 24}, {9, 40}};
  for (auto [k, ancillas] : cases) {
    const Quadratization qd = quadratize(spin_to_boolean(williamson_energy(k)));
    EXPECT_EQ(qd.ancillas.entries.size(), ancillas) << k;
    EXPECT_LE(degree(qd.poly), 2u);
  }
}

TEST(Quadratize, ReferenceTurynFirstRound) {
  const MultilinearPoly ek = testing::load_fixture("tt4_printed_ek_q.poly");
  EXPECT_EQ(abs_coeff_sum(ek), 908);
  EXPECT_EQ(compute_delta(ek), 1816);
  const MultilinearPoly r = substitute_pair(ek, 0, 1, 5, 1816);
  EXPECT_EQ(r.coefficient({5}), 5464);
  EXPECT_EQ(r.coefficient({0, 5}), -3632);
  EXPECT_EQ(r.coefficient({0, 1}), 1816);
}

TEST(Quadratize, ReferenceTurynLexicographicSchedule) {
  const MultilinearPoly ek = testing::load_fixture("tt4_printed_ek_q.poly");
  const Quadratization qd = quadratize(ek, PairSelection::kLexicographicFirst);
  EXPECT_EQ(qd.poly, testing::load_fixture("tt4_printed_e2_q.poly"));
  EXPECT_EQ(boolean_to_spin(qd.poly), testing::load_fixture("tt4_printed_e2_s.poly"));
  EXPECT_EQ(qd.ancillas.entries.size(), 6u);
  EXPECT_EQ(quadratize(ek).ancillas.entries.size(), 2u);
}

TEST(Quadratize, RejectsBadInput) {
  EXPECT_THROW(quadratize(MultilinearPoly(Domain::kBoolean)), std::invalid_argument);
  EXPECT_THROW(quadratize(MultilinearPoly::variable(Domain::kSpin, 0)), std::invalid_argument);
}

TEST(Quadratize, QuadraticInputUnchanged) {
  const MultilinearPoly p = 3 * (Q(0) * Q(1)) - Q(2);
  const Quadratization qd = quadratize(p);
  EXPECT_EQ(qd.poly, p);
  EXPECT_TRUE(qd.ancillas.entries.empty());
}

TEST(Quadratize, ExtendWithAncillas) {
  AncillaMap map{{{3, {0, 1}}, {4, {3, 2}}}, 7};
  const Assignment a = extend_with_ancillas(map, Assignment({1, 1, 0}));
  EXPECT_EQ(a, Assignment({1, 1, 0, 1, 0}));
  EXPECT_TRUE(ancillas_consistent(map, a));
  EXPECT_FALSE(ancillas_consistent(map, Assignment({1, 0, 0, 1, 0})));
}

TEST(QuadratizeProperty, SpectrumPreservedOnRandomPolynomials) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = testing::random_poly(rng, Domain::kBoolean, 5, 4, -50, 50, 7);
    if (p.empty()) continue;
    for (auto rule : {PairSelection::kMostFrequent, PairSelection::kLexicographicFirst}) {
      const Quadratization qd = quadratize(p, rule);
      ASSERT_LE(degree(qd.poly), 2u);
      const ExtendedMin m = extended_min(qd, 5);
      ASSERT_EQ(m.overall, testing::brute_min(p, 5)) << to_string(p);
      ASSERT_TRUE(m.ground_consistent) << to_string(p);
      // Consistent extensions reproduce E_k pointwise.
      for (int k = 0; k < 8; ++k) {
        const Assignment a = testing::random_assignment(rng, Domain::kBoolean, 5);
        ASSERT_EQ(evaluate(qd.poly, extend_with_ancillas(qd.ancillas, a)), evaluate(p, a));
      }
    }
  }
}

}  // namespace
}  // namespace hsearch
