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

#ifndef HSEARCH_TURYN_H_
#define HSEARCH_TURYN_H_

#include <array>

#include "hsearch/polynomial.h"
#include "hsearch/sequences.h"

namespace hsearch {

// X, Y, Z of length n and W of length n - 1, possibly with spin variables.
struct TurynQuadruple {
  SymbolicSequence x, y, z, w;

  std::size_t length() const { return x.size(); }
  // One past the largest variable index used.
  std::size_t num_vars() const;
};

// Numeric (+/-1) quadruple.
struct TurynSequences {
  SignSeq x, y, z, w;

  friend bool operator==(const TurynSequences&, const TurynSequences&) = default;
};

// Normalized symbolic TT(n) quadruple:
//   x_0 = y_0 = z_0 = w_0 = 1, x_{n-1} = y_{n-1} = -1, z_{n-1} = 1,
//   x_1 = x_{n-2} = 1, y_{n-2} = -y_1.
// Free variables, in index order: x_2..x_{n-3}, y_1, y_2..y_{n-3},
// z_1..z_{n-2}, w_1..w_{n-2}; 4n - 11 in total. Requires even n >= 4.
TurynQuadruple turyn_quadruple(int n);

std::size_t turyn_num_vars(int n);

// sum_{r>=1} (N_X(r) + N_Y(r) + 2 N_Z(r) + 2 N_W(r))^2.
MultilinearPoly tt_energy(const TurynQuadruple& q);

// tt_energy(turyn_quadruple(n)).
MultilinearPoly turyn_energy(int n);

TurynSequences complete(const TurynQuadruple& q, const Assignment& spins);

// Lengths n, n, n, n-1 with +/-1 entries and zero weighted autocorrelation
// sum at every lag r >= 1.
bool is_turyn_type(const TurynSequences& s);

// Base sequences of lengths 2n-1, 2n-1, n, n.
struct BaseSequences {
  SignSeq a, b, c, d;
};

// A = Z|W, B = Z|-W, C = X, D = Y. Throws std::invalid_argument when the
// input is not Turyn-type; InternalError if the result fails the zero-sum
// check.
BaseSequences base_sequences(const TurynSequences& s);

// T1 = (A+B)/2 | 0_n, T2 = (A-B)/2 | 0_n, T3 = 0_{2n-1} | (C+D)/2,
// T4 = 0_{2n-1} | (C-D)/2; each of length 3n - 1.
std::array<SignSeq, 4> t_sequences(const BaseSequences& base);

// Signed sums of T-sequences with the sign rows (+ + + +), (+ + - -),
// (+ - + -), (+ - - +).
std::array<SignSeq, 4> seed_sequences(const std::array<SignSeq, 4>& t);

// True iff every position is nonzero in exactly one sequence.
bool supports_partition(const std::array<SignSeq, 4>& t);

// sum_i N_{seq_i}(r) over four sequences (lengths may differ).
long autocorrelation_sum(const std::array<SignSeq, 4>& seqs, std::size_t r);

}  // namespace hsearch

#endif  // HSEARCH_TURYN_H_
