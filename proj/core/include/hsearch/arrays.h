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

#ifndef HSEARCH_ARRAYS_H_
#define HSEARCH_ARRAYS_H_

#include <array>
#include <span>
#include <string_view>

#include "hsearch/sequences.h"
#include "hsearch/sign_matrix.h"
#include "hsearch/turyn.h"

namespace hsearch {

// Row i is the first row cyclically shifted right by i: C[i][j] = a[(j-i) mod k].
// Throws std::invalid_argument for an empty or non +/-1 row.
SignMatrix circulant(std::span<const int> first_row);

// R[i][j] = 1 iff i + j = k - 1.
IntMatrix back_diagonal(std::size_t k);

using Blocks = std::array<SignMatrix, 4>;

Blocks circulant_blocks(const std::array<SignSeq, 4>& first_rows);

//  A  B  C  D
// -B  A -D  C
// -C  D  A -B
// -D -C  B  A
SignMatrix williamson_array(const Blocks& abcd);

// Signed letter table of the 12 x 12 Baumert-Hall array, e.g. "-C".
const std::array<std::array<std::string_view, 12>, 12>& baumert_hall_table();

SignMatrix baumert_hall_array(const Blocks& abcd);

//   X1     X2 R    X3 R    X4 R
//  -X2 R   X1      X4' R  -X3' R
//  -X3 R  -X4' R   X1      X2' R
//  -X4 R   X3' R  -X2' R   X1
SignMatrix goethals_seidel(const Blocks& x);

// Turyn-type quadruple -> base, T- and seed sequences -> circulants ->
// Goethals-Seidel array of order 4(3n - 1).
SignMatrix turyn_hadamard(const TurynSequences& s);

// M in {1, 2} or M divisible by 4.
bool order_admissible(std::size_t m);

struct VerifyReport {
  std::size_t order = 0;
  bool hadamard = false;
  bool order_admissible = false;
  std::int64_t max_offdiag = 0;  // largest |D_ij|, i != j
  IntMatrix indicator;           // D = H' H
};

VerifyReport verify(const SignMatrix& h);

}  // namespace hsearch

#endif  // HSEARCH_ARRAYS_H_
