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
#include <sstream>

#include <gtest/gtest.h>

#include "hsearch/errors.h"
#include "hsearch/ising.h"
#include "hsearch/quadratize.h"
#include "hsearch/williamson.h"
#include "test_util.h"

namespace hsearch {
namespace {

MultilinearPoly S(VarId v) { return MultilinearPoly::variable(Domain::kSpin, v); }

TEST(Ising, FromQuadraticSplitsTerms) {
  const MultilinearPoly p = 3 * (S(0) * S(2)) - 2 * S(1) + MultilinearPoly::constant(Domain::kSpin, 7);
  const IsingModel m = from_quadratic(p);
  EXPECT_EQ(m.nvars(), 3u);
  EXPECT_EQ(m.offset(), 7);
  EXPECT_EQ(m.h().at(1), -2);
  EXPECT_EQ(m.J().at({0, 2}), 3);
  EXPECT_EQ(to_polynomial(m), p);
}

TEST(Ising, FromQuadraticRejectsCubicAndBoolean) {
  EXPECT_THROW(from_quadratic(S(0) * S(1) * S(2)), std::invalid_argument);
  EXPECT_THROW(from_quadratic(MultilinearPoly::variable(Domain::kBoolean, 0)),
               std::invalid_argument);
}

TEST(Ising, Conventions) {
  IsingModel m(2);
  m.add_coupling(1, 0, 1);
  m.add_field(0, 2);
  m.set_offset(5);
  const Assignment up({1, 1});
  EXPECT_EQ(energy(m, up), 8);
  const IsingModel neg = m.with_convention(Convention::kHamiltonianNegated);
  EXPECT_EQ(energy(neg, up), -3);
  EXPECT_EQ(m.max_abs_coefficient(), 2);
}

TEST(Ising, CouplingsCancelAway) {
  IsingModel m(2);
  m.add_coupling(0, 1, 4);
  m.add_coupling(1, 0, -4);
  EXPECT_TRUE(m.J().empty());
  EXPECT_THROW(m.add_coupling(1, 1, 2), std::invalid_argument);
}

TEST(Ising, EnergyMatchesPolynomial) {
  std::mt19937_64 rng(31);
  const auto qd = quadratize(spin_to_boolean(williamson_energy(3)));
  const MultilinearPoly e2s = boolean_to_spin(qd.poly);
  const IsingModel m = from_quadratic(e2s);
  for (int k = 0; k < 200; ++k) {
    const Assignment a = testing::random_assignment(rng, Domain::kSpin, m.nvars());
    ASSERT_EQ(energy(m, a), evaluate(e2s, a));
  }
}

TEST(Ising, EnergyValidatesAssignment) {
  IsingModel m(3);
  m.add_field(2, 1);
  EXPECT_THROW(energy(m, Assignment({1, 1})), std::out_of_range);
  EXPECT_THROW(energy(m, Assignment({1, 1, 0})), std::invalid_argument);
}

TEST(IsingIo, IntegerRoundTrip) {
  std::mt19937_64 rng(32);
  const IsingModel m = testing::random_ising(rng, 6, 40);
  std::stringstream s;
  write_ising(s, m);
  const ParsedIsing parsed = read_ising(s);
  EXPECT_EQ(parsed.denominator, 1);
  EXPECT_EQ(parsed.model, m);
}

TEST(IsingIo, UnusedVariablesSurviveThroughHeader) {
  IsingModel m(5);
  m.add_field(0, 1);
  std::stringstream s;
  write_ising(s, m);
  EXPECT_EQ(read_ising(s).model.nvars(), 5u);
}

TEST(IsingIo, NormalizedExportScalesByMaximum) {
  IsingModel m(3);
  m.add_field(0, 4);
  m.add_coupling(0, 1, -8);
  m.add_coupling(1, 2, 2);
  m.set_offset(100);
  const NormalizedIsing n = normalize_for_export(m);
  EXPECT_EQ(n.scale, 8);
  EXPECT_DOUBLE_EQ(n.h.at(0), 0.5);
  EXPECT_DOUBLE_EQ(n.J.at({0, 1}), -1.0);
  std::stringstream s;
  write_ising(s, n);
  EXPECT_EQ(s.str(), "# nvars 3\n# scale 8\nh 0 0.5\nJ 0 1 -1.0\nJ 1 2 0.25\n");
  const ParsedIsing back = read_ising(s);
  EXPECT_EQ(back.denominator, 100);
  EXPECT_EQ(back.model.J().at({1, 2}), 25);
  EXPECT_THROW(normalize_for_export(IsingModel(2)), std::invalid_argument);
}

TEST(IsingIo, RejectsMalformedLines) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_ising(in);
  };
  EXPECT_THROW(parse("J 1 0 3\n"), ParseError);
  EXPECT_THROW(parse("c 1\nc 2\n"), ParseError);
  EXPECT_THROW(parse("x 1\n"), ParseError);
  EXPECT_THROW(parse("h 0 abc\n"), ParseError);
}

}  // namespace
}  // namespace hsearch
