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

#ifndef HSEARCH_QUADRATIZE_H_
#define HSEARCH_QUADRATIZE_H_

#include <utility>
#include <vector>

#include "hsearch/polynomial.h"

namespace hsearch {

struct AncillaEntry {
  VarId ancilla;
  std::pair<VarId, VarId> pair;  // first < second

  friend bool operator==(const AncillaEntry&, const AncillaEntry&) = default;
};

// Ancillas in substitution order together with the penalty weight used.
struct AncillaMap {
  std::vector<AncillaEntry> entries;
  Coeff delta = 0;
};

// How the next pair to substitute is chosen while degree >= 3.
enum class PairSelection {
  // Pair occurring in the most monomials of degree >= 3; ties go to the
  // lexicographically smallest pair.
  kMostFrequent,
  // Lexicographically smallest pair occurring in any monomial of
  // degree >= 3.
  kLexicographicFirst,
};

// 2 * abs_coeff_sum(p).
Coeff compute_delta(const MultilinearPoly& p);

// Throws std::invalid_argument when degree(p) < 3.
std::pair<VarId, VarId> select_pair(
    const MultilinearPoly& p, PairSelection rule = PairSelection::kMostFrequent);

// Replaces {i, j} by {a} in every monomial containing both (the bare q_i q_j
// term included) and adds delta * (q_i q_j - 2 q_i q_a - 2 q_j q_a + 3 q_a).
MultilinearPoly substitute_pair(const MultilinearPoly& p, VarId i, VarId j,
                                VarId a, Coeff delta);

struct Quadratization {
  MultilinearPoly poly;  // degree <= 2, boolean
  AncillaMap ancillas;
};

// Iterated pair substitution with a single delta computed from `p`.
// Ancillas are numbered from p.num_vars() upward in substitution order.
// Throws std::invalid_argument for an empty or non-boolean polynomial.
Quadratization quadratize(const MultilinearPoly& p,
                          PairSelection rule = PairSelection::kMostFrequent);

// True iff every ancilla equals the product of its pair under `a`
// (booleans; for spin assignments pass spins_to_booleans(a)).
bool ancillas_consistent(const AncillaMap& map, const Assignment& booleans);

// Extends an assignment of the original variables with q_a = q_i * q_j.
Assignment extend_with_ancillas(const AncillaMap& map, const Assignment& booleans);

}  // namespace hsearch

#endif  // HSEARCH_QUADRATIZE_H_
