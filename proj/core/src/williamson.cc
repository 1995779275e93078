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

#include "hsearch/williamson.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsearch {

namespace {

void require_odd_order(int k) {
  if (k < 3 || k % 2 == 0) {
    throw std::invalid_argument("Williamson block order must be odd and >= 3, got " +
                                std::to_string(k));
  }
}

}  // namespace

std::size_t williamson_num_vars(int k) {
  require_odd_order(k);
  return 2 * static_cast<std::size_t>(k + 1);
}

SymbolicSequence williamson_block_row(int k, int block) {
  require_odd_order(k);
  if (block < 0 || block > 3) throw std::invalid_argument("block index must be 0..3");
  const int per_block = (k + 1) / 2;
  SymbolicSequence row;
  row.reserve(k);
  for (int j = 0; j < k; ++j) {
    const int t = std::min(j, k - j);
    row.push_back(SymEntry::plus_var(static_cast<VarId>(block * per_block + t)));
  }
  return row;
}

MultilinearPoly williamson_energy(int k) {
  require_odd_order(k);
  std::array<SymbolicSequence, 4> rows;
  for (int b = 0; b < 4; ++b) rows[b] = williamson_block_row(k, b);

  // Entry (t, i) of a circulant block is row[(i - t) mod k].
  auto at = [k](const SymbolicSequence& row, int t, int i) -> VarId {
    return *row[((i - t) % k + k) % k].var;
  };

  MultilinearPoly energy(Domain::kSpin);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      MultilinearPoly v(Domain::kSpin);
      for (const auto& row : rows) {
        for (int t = 0; t < k; ++t) v.add_term({at(row, t, i), at(row, t, j)}, 1);
      }
      if (i == j) v.add_term({}, -4 * k);
      energy += square(v);
    }
  }
  return energy;
}

std::array<SignSeq, 4> williamson_first_rows(int k, const Assignment& spins) {
  std::array<SignSeq, 4> out;
  for (int b = 0; b < 4; ++b) out[b] = instantiate(williamson_block_row(k, b), spins);
  return out;
}

}  // namespace hsearch
