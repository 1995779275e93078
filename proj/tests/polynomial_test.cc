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
#include "hsearch/polynomial.h"
#include "hsearch/polynomial_io.h"
#include "test_util.h"

namespace hsearch {
namespace {

MultilinearPoly S(VarId v) { return MultilinearPoly::variable(Domain::kSpin, v); }
MultilinearPoly Q(VarId v) { return MultilinearPoly::variable(Domain::kBoolean, v); }
MultilinearPoly SC(Coeff c) { return MultilinearPoly::constant(Domain::kSpin, c); }

TEST(Polynomial, SpinSquareReducesToOne) {
  EXPECT_EQ(S(0) * S(0), SC(1));
  EXPECT_EQ(square(S(0) + S(1)), SC(2) + 2 * (S(0) * S(1)));
}

TEST(Polynomial, BooleanSquareIsIdempotent) {
  EXPECT_EQ(Q(0) * Q(0), Q(0));
  MultilinearPoly p(Domain::kBoolean);
  p.add_term({2, 0, 2, 0}, 5);
  EXPECT_EQ(p.coefficient({0, 2}), 5);
}

TEST(Polynomial, ZeroCoefficientsVanish) {
  MultilinearPoly p = S(0) - S(0);
  EXPECT_TRUE(p.empty());
  EXPECT_EQ(p.num_vars(), 0u);
}

TEST(Polynomial, CanonicalOrderIsLengthThenLex) {
  MultilinearPoly p(Domain::kSpin);
  p.add_term({0, 1, 2}, 1);
  p.add_term({3}, 1);
  p.add_term({0, 2}, 1);
  p.add_term({}, 1);
  p.add_term({0, 1}, 1);
  std::vector<Monomial> order;
  for (const auto& [m, c] : p.terms()) order.push_back(m);
  EXPECT_EQ(order, (std::vector<Monomial>{{}, {3}, {0, 1}, {0, 2}, {0, 1, 2}}));
}

TEST(Polynomial, DomainMismatchThrows) {
  EXPECT_THROW(S(0) + Q(0), std::invalid_argument);
  EXPECT_THROW(S(0) * Q(0), std::invalid_argument);
}

TEST(Polynomial, OverflowThrows) {
  MultilinearPoly p = MultilinearPoly::constant(Domain::kSpin, INT64_MAX);
  EXPECT_THROW(p += SC(1), std::overflow_error);
  EXPECT_THROW(p *= 2, std::overflow_error);
}

TEST(Polynomial, EvaluateChecksAssignment) {
  const MultilinearPoly p = 3 * (S(0) * S(2)) + SC(1);
  EXPECT_EQ(evaluate(p, Assignment({1, 7, -1})), -2);  // s1 unused
  EXPECT_THROW(evaluate(p, Assignment({1, 1})), std::out_of_range);
  EXPECT_THROW(evaluate(p, Assignment({1, 1, 0})), std::invalid_argument);
  EXPECT_THROW(evaluate(Q(0), Assignment({-1})), std::invalid_argument);
}

TEST(Polynomial, SingleSpinTransforms) {
  // s = 1 - 2q
  MultilinearPoly expect(Domain::kBoolean);
  expect.add_term({}, 1);
  expect.add_term({0}, -2);
  EXPECT_EQ(spin_to_boolean(S(0)), expect);
  EXPECT_EQ(boolean_to_spin(expect), S(0));
}

TEST(Polynomial, BooleanToSpinRejectsHalves) {
  EXPECT_THROW(boolean_to_spin(Q(0)), InternalError);
  EXPECT_EQ(boolean_to_spin(2 * Q(0)), SC(1) - S(0));
}

TEST(Polynomial, AssignmentImagesFollowConvention) {
  const Assignment s({1, -1, -1});
  EXPECT_EQ(spins_to_booleans(s), Assignment({0, 1, 1}));
  EXPECT_EQ(booleans_to_spins(Assignment({0, 1, 1})), s);
  EXPECT_EQ(Assignment::spins_from_bits(0b110, 3), s);
}

TEST(Polynomial, AbsCoeffSumAndDegree) {
  const MultilinearPoly p = 3 * (S(0) * S(1) * S(2)) - 4 * S(1) + SC(-5);
  EXPECT_EQ(abs_coeff_sum(p), 12);
  EXPECT_EQ(degree(p), 3u);
  EXPECT_EQ(degree(SC(4)), 0u);
}

TEST(Polynomial, ToStringRendersTerms) {
  const MultilinearPoly p = 96 * (S(0) * S(1)) + SC(192);
  EXPECT_EQ(to_string(p), "192 + 96*s0*s1");
  EXPECT_EQ(to_string(MultilinearPoly(Domain::kBoolean)), "0");
}

TEST(PolynomialProperty, TransformsRoundTripAndAgreePointwise) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const MultilinearPoly p = testing::random_poly(rng, Domain::kSpin, 6, 4, -30, 30, 8);
    const MultilinearPoly q = spin_to_boolean(p);
    ASSERT_EQ(boolean_to_spin(q), p);
    for (int k = 0; k < 20; ++k) {
      const Assignment s = testing::random_assignment(rng, Domain::kSpin, 6);
      ASSERT_EQ(evaluate(p, s), evaluate(q, spins_to_booleans(s)));
    }
  }
}

TEST(PolynomialProperty, MultiplicationMatchesPointwiseProduct) {
  std::mt19937_64 rng(12);
  for (Domain d : {Domain::kSpin, Domain::kBoolean}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto p = testing::random_poly(rng, d, 5, 3, -9, 9, 6);
      const auto q = testing::random_poly(rng, d, 5, 3, -9, 9, 6);
      const auto pq = p * q;
      for (int k = 0; k < 10; ++k) {
        const Assignment a = testing::random_assignment(rng, d, 5);
        ASSERT_EQ(evaluate(pq, a), evaluate(p, a) * evaluate(q, a));
      }
    }
  }
}

TEST(PolynomialIo, RoundTrip) {
  std::mt19937_64 rng(13);
  for (Domain d : {Domain::kSpin, Domain::kBoolean}) {
    const auto p = testing::random_poly(rng, d, 7, 4, -100, 100, 15);
    std::stringstream s;
    write_polynomial(s, p, 9);
    const PolynomialFile f = read_polynomial(s);
    EXPECT_EQ(f.poly, p);
    EXPECT_EQ(f.nvars, 9u);
  }
}

TEST(PolynomialIo, WriterFormat) {
  std::stringstream s;
  write_polynomial(s, 96 * (S(0) * S(1)) + SC(192) - 2 * S(1));
  EXPECT_EQ(s.str(), "domain spin\nnvars 2\n192\n-2 1\n96 0 1\n");
}

TEST(PolynomialIo, RejectsMalformedInput) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_polynomial(in);
  };
  EXPECT_THROW(parse("domain spin\nnvars 2\n3 1 0\n"), ParseError);
  EXPECT_THROW(parse("domain spin\nnvars 2\n3 2\n"), ParseError);
  EXPECT_THROW(parse("domain spin\nnvars 2\n3 1\n4 1\n"), ParseError);
  EXPECT_THROW(parse("domain qubit\nnvars 2\n"), ParseError);
  EXPECT_THROW(parse("domain spin\nnvars 2\n3x 1\n"), ParseError);
  EXPECT_NO_THROW(parse("# comment\ndomain boolean\nnvars 3\n\n-4 0 2\n"));
}

TEST(PolynomialIo, MissingFileIsIoError) {
  EXPECT_THROW(load_polynomial("/nonexistent/dir/x.poly"), IoError);
}

TEST(PolynomialFixtures, ReferenceSpinAndBooleanFormsAgree) {
  for (const char* k : {"w3", "w5", "w7", "w9", "tt4_printed", "tt6", "xt8"}) {
    const std::string base = k;
    const auto s = testing::load_fixture(base + "_ek_s.poly");
    const auto q = testing::load_fixture(base + "_ek_q.poly");
    EXPECT_EQ(spin_to_boolean(s), q) << base;
    EXPECT_EQ(boolean_to_spin(q), s) << base;
  }
  EXPECT_EQ(boolean_to_spin(testing::load_fixture("w3_e2_q.poly")),
            testing::load_fixture("w3_e2_s.poly"));
  EXPECT_EQ(boolean_to_spin(testing::load_fixture("tt4_printed_e2_q.poly")),
            testing::load_fixture("tt4_printed_e2_s.poly"));
}

}  // namespace
}  // namespace hsearch
