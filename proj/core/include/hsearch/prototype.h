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

#ifndef HSEARCH_PROTOTYPE_H_
#define HSEARCH_PROTOTYPE_H_

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hsearch/polynomial.h"
#include "hsearch/turyn.h"

namespace hsearch {

// Partially filled Turyn quadruple. X, Y, Z have m filled entries at each
// end; W has m on the left and m - 1 on the right. Entries are +1, -1, or 0
// for an unknown middle position.
struct PrototypeSpec {
  int n = 0;
  int m = 0;
  std::array<SignSeq, 4> seqs;

  friend bool operator==(const PrototypeSpec&, const PrototypeSpec&) = default;
};

// Checks lengths, the filled/unknown layout and 1 <= m < n/2.
bool well_formed(const PrototypeSpec& p);

// Empty prototype (all unknown) of the given shape.
PrototypeSpec blank_prototype(int n, int m);

// "++****+-/+-****+-/+-****-+/+-****+". m is taken from the leading filled
// run of X. Throws ParseError for malformed text.
PrototypeSpec parse_prototype(std::string_view text);
std::string format_prototype(const PrototypeSpec& p);

// True iff the weighted autocorrelation sum vanishes at every lag in
// [n - m, n - 1]; only filled positions contribute at those lags.
bool prototype_filter(const PrototypeSpec& p);

// Number of free filled positions enumerated by for_each_prototype.
std::size_t prototype_free_bits(int n, int m, bool normalize);

struct PrototypeShard {
  std::uint64_t index = 0;
  std::uint64_t count = 1;
};

// Visits every filling of the end positions that passes prototype_filter.
// With `normalize`, the Turyn normalization fixes x_0, x_1, x_{n-2},
// x_{n-1}, y_0, y_{n-1}, z_0, z_{n-1}, w_0 and ties y_{n-2} = -y_1.
// Free positions are ordered X, Y, Z, W and left to right; '+' sorts before
// '-', and the first free position varies slowest. A shard visits a
// contiguous block of the candidate counter. The visitor returns false to
// stop early.
void for_each_prototype(int n, int m, bool normalize,
                        const std::function<bool(const PrototypeSpec&)>& visit,
                        PrototypeShard shard = {});

std::vector<PrototypeSpec> enumerate_prototypes(int n, int m, bool normalize = true);

// Symbolic quadruple with a fresh variable for every unknown position,
// numbered X, Y, Z, W and left to right: 4(n - 2m) variables.
TurynQuadruple extended_quadruple(const PrototypeSpec& p);

// tt_energy(extended_quadruple(p)). Throws std::invalid_argument when p is
// malformed or fails prototype_filter.
MultilinearPoly extended_energy(const PrototypeSpec& p);

}  // namespace hsearch

#endif  // HSEARCH_PROTOTYPE_H_
