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

#include "hsearch/quadratize.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "checked.h"

namespace hsearch {

using detail::checked_mul;

Coeff compute_delta(const MultilinearPoly& p) {
  if (p.domain() != Domain::kBoolean) {
    throw std::invalid_argument("compute_delta expects a boolean polynomial");
  }
  return checked_mul(2, abs_coeff_sum(p));
}

std::pair<VarId, VarId> select_pair(const MultilinearPoly& p,
                                    PairSelection rule) {
  if (degree(p) < 3) {
    throw std::invalid_argument("select_pair needs a polynomial of degree >= 3");
  }
  std::map<std::pair<VarId, VarId>, std::size_t> counts;
  for (const auto& [m, c] : p.terms()) {
    if (m.size() < 3) continue;
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b = a + 1; b < m.size(); ++b) ++counts[{m[a], m[b]}];
    }
  }
  if (rule == PairSelection::kLexicographicFirst) return counts.begin()->first;

  // std::map iterates in lexicographic order, so strict '>' keeps the
  // smallest pair among ties.
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  return best->first;
}

MultilinearPoly substitute_pair(const MultilinearPoly& p, VarId i, VarId j,
                                VarId a, Coeff delta) {
  if (p.domain() != Domain::kBoolean) {
    throw std::invalid_argument("substitute_pair expects a boolean polynomial");
  }
  if (i == j) throw std::invalid_argument("substitute_pair needs two distinct variables");
  if (i > j) std::swap(i, j);
  for (const auto& [m, c] : p.terms()) {
    if (std::binary_search(m.begin(), m.end(), a)) {
      throw std::invalid_argument("ancilla variable " + std::to_string(a) +
                                  " is already in use");
    }
  }
  MultilinearPoly r(Domain::kBoolean);
  for (const auto& [m, c] : p.terms()) {
    const bool has_i = std::binary_search(m.begin(), m.end(), i);
    const bool has_j = std::binary_search(m.begin(), m.end(), j);
    if (has_i && has_j) {
      Monomial reduced;
      reduced.reserve(m.size() - 1);
      for (VarId v : m) {
        if (v != i && v != j) reduced.push_back(v);
      }
      reduced.push_back(a);
      r.add_term(std::move(reduced), c);
    } else {
      r.add_term(m, c);
    }
  }
  r.add_term({i, j}, delta);
  r.add_term({i, a}, checked_mul(-2, delta));
  r.add_term({j, a}, checked_mul(-2, delta));
  r.add_term({a}, checked_mul(3, delta));
  return r;
}

Quadratization quadratize(const MultilinearPoly& p, PairSelection rule) {
  if (p.domain() != Domain::kBoolean) {
    throw std::invalid_argument("quadratize expects a boolean polynomial");
  }
  if (p.empty()) throw std::invalid_argument("cannot quadratize an empty polynomial");

  Quadratization out{p, AncillaMap{{}, compute_delta(p)}};
  VarId next = static_cast<VarId>(p.num_vars());
  while (degree(out.poly) > 2) {
    const auto [i, j] = select_pair(out.poly, rule);
    out.poly = substitute_pair(out.poly, i, j, next, out.ancillas.delta);
    out.ancillas.entries.push_back({next, {i, j}});
    ++next;
  }
  return out;
}

bool ancillas_consistent(const AncillaMap& map, const Assignment& booleans) {
  for (const auto& e : map.entries) {
    if (booleans[e.ancilla] != booleans[e.pair.first] * booleans[e.pair.second]) {
      return false;
    }
  }
  return true;
}

Assignment extend_with_ancillas(const AncillaMap& map, const Assignment& booleans) {
  std::vector<int> values = booleans.values();
  for (const auto& e : map.entries) {
    if (values.size() <= e.ancilla) values.resize(e.ancilla + 1, 0);
    values[e.ancilla] = values.at(e.pair.first) * values.at(e.pair.second);
  }
  return Assignment(std::move(values));
}

}  // namespace hsearch
