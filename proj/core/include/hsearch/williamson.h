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

#ifndef HSEARCH_WILLIAMSON_H_
#define HSEARCH_WILLIAMSON_H_

#include <array>

#include "hsearch/polynomial.h"
#include "hsearch/sequences.h"

namespace hsearch {

// Symmetric circulant parameterisation of the four k x k blocks A, B, C, D.
// Block b has first row (a_0, a_1, ..., a_h, a_h, ..., a_1) with h = (k-1)/2
// and a_t = s_{b(h+1) + t}: variables are numbered block-major, diagonal
// entry first. Requires odd k >= 3.

std::size_t williamson_num_vars(int k);

// First row of block b (0..3) as a symbolic sequence.
SymbolicSequence williamson_block_row(int k, int block);

// E(s) = sum_ij (V_ij - 4k delta_ij)^2 with V = A^T A + B^T B + C^T C + D^T D.
// Zero exactly at Williamson quadruples. Throws std::invalid_argument for
// even k or k < 3. The Baumert-Hall search uses the same energy.
MultilinearPoly williamson_energy(int k);

// Numeric first rows of A, B, C, D under a spin assignment.
std::array<SignSeq, 4> williamson_first_rows(int k, const Assignment& spins);

}  // namespace hsearch

#endif  // HSEARCH_WILLIAMSON_H_
