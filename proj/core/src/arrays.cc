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

#include "hsearch/arrays.h"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace hsearch {

namespace {

using Grid = std::vector<std::vector<IntMatrix>>;

IntMatrix assemble(const Grid& grid) {
  const std::size_t k = grid[0][0].rows();
  IntMatrix out(k * grid.size(), k * grid[0].size());
  for (std::size_t bi = 0; bi < grid.size(); ++bi) {
    for (std::size_t bj = 0; bj < grid[bi].size(); ++bj) {
      const IntMatrix& b = grid[bi][bj];
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) out(bi * k + i, bj * k + j) = b(i, j);
      }
    }
  }
  return out;
}

void require_equal_orders(const Blocks& b) {
  for (const auto& m : b) {
    if (m.order() == 0 || m.order() != b[0].order()) {
      throw std::invalid_argument("blocks must share a positive order");
    }
  }
}

constexpr std::array<std::array<std::string_view, 12>, 12> kBaumertHall = {{
    {"A", "A", "A", "B", "-B", "C", "-C", "-D", "B", "C", "-D", "-D"},
    {"A", "-A", "B", "-A", "-B", "-D", "D", "-C", "-B", "-D", "-C", "-C"},
    {"A", "-B", "-A", "A", "-D", "D", "-B", "B", "-C", "-D", "C", "-C"},
    {"B", "A", "-A", "-A", "D", "D", "D", "C", "C", "-B", "-B", "-C"},
    {"B", "-D", "D", "D", "A", "A", "A", "C", "-C", "B", "-C", "B"},
    {"B", "C", "-D", "D", "A", "-A", "C", "-A", "-D", "C", "B", "-B"},
    {"D", "-C", "B", "-B", "A", "-C", "-A", "A", "B", "C", "D", "-D"},
    {"-C", "-D", "-C", "-D", "C", "A", "-A", "-A", "-D", "B", "-B", "-B"},
    {"D", "-C", "-B", "-B", "-B", "C", "C", "-D", "A", "A", "A", "D"},
    {"-D", "-B", "C", "C", "C", "B", "B", "-D", "A", "-A", "D", "-A"},
    {"C", "-B", "-C", "C", "D", "-B", "-D", "-B", "A", "-D", "-A", "A"},
    {"-C", "-D", "-D", "C", "-C", "-B", "B", "B", "D", "A", "-A", "-A"},
}};

}  // namespace

SignMatrix circulant(std::span<const int> first_row) {
  const std::size_t k = first_row.size();
  if (k == 0) throw std::invalid_argument("circulant needs a nonempty first row");
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = first_row[(j + k - i) % k];
  }
  return SignMatrix(std::move(m));
}

IntMatrix back_diagonal(std::size_t k) {
  if (k == 0) throw std::invalid_argument("back_diagonal needs k >= 1");
  IntMatrix r(k, k);
  for (std::size_t i = 0; i < k; ++i) r(i, k - 1 - i) = 1;
  return r;
}

Blocks circulant_blocks(const std::array<SignSeq, 4>& first_rows) {
  return {circulant(first_rows[0]), circulant(first_rows[1]), circulant(first_rows[2]),
          circulant(first_rows[3])};
}

SignMatrix williamson_array(const Blocks& abcd) {
  require_equal_orders(abcd);
  const IntMatrix& a = abcd[0].matrix();
  const IntMatrix& b = abcd[1].matrix();
  const IntMatrix& c = abcd[2].matrix();
  const IntMatrix& d = abcd[3].matrix();
  return SignMatrix(assemble({{a, b, c, d},
                              {-b, a, -d, c},
                              {-c, d, a, -b},
                              {-d, -c, b, a}}));
}

const std::array<std::array<std::string_view, 12>, 12>& baumert_hall_table() {
  return kBaumertHall;
}

SignMatrix baumert_hall_array(const Blocks& abcd) {
  require_equal_orders(abcd);
  Grid grid(12);
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::string_view cell : kBaumertHall[i]) {
      const bool neg = cell.front() == '-';
      const IntMatrix& m = abcd[cell.back() - 'A'].matrix();
      grid[i].push_back(neg ? -m : m);
    }
  }
  return SignMatrix(assemble(grid));
}

SignMatrix goethals_seidel(const Blocks& x) {
  require_equal_orders(x);
  const IntMatrix r = back_diagonal(x[0].order());
  const IntMatrix& x1 = x[0].matrix();
  const IntMatrix x2r = x[1].matrix() * r;
  const IntMatrix x3r = x[2].matrix() * r;
  const IntMatrix x4r = x[3].matrix() * r;
  const IntMatrix x2tr = x[1].matrix().transpose() * r;
  const IntMatrix x3tr = x[2].matrix().transpose() * r;
  const IntMatrix x4tr = x[3].matrix().transpose() * r;
  return SignMatrix(assemble({{x1, x2r, x3r, x4r},
                              {-x2r, x1, x4tr, -x3tr},
                              {-x3r, -x4tr, x1, x2tr},
                              {-x4r, x3tr, -x2tr, x1}}));
}

SignMatrix turyn_hadamard(const TurynSequences& s) {
  const auto seeds = seed_sequences(t_sequences(base_sequences(s)));
  return goethals_seidel(circulant_blocks(seeds));
}

bool order_admissible(std::size_t m) { return m == 1 || m == 2 || (m > 0 && m % 4 == 0); }

VerifyReport verify(const SignMatrix& h) {
  VerifyReport rep;
  rep.order = h.order();
  rep.order_admissible = order_admissible(rep.order);
  rep.indicator = h.matrix().transpose() * h.matrix();
  bool diag_ok = true;
  for (std::size_t i = 0; i < rep.order; ++i) {
    for (std::size_t j = 0; j < rep.order; ++j) {
      const std::int64_t v = rep.indicator(i, j);
      if (i == j) {
        diag_ok = diag_ok && v == static_cast<std::int64_t>(rep.order);
      } else {
        rep.max_offdiag = std::max<std::int64_t>(rep.max_offdiag, std::llabs(v));
      }
    }
  }
  rep.hadamard = rep.order > 0 && diag_ok && rep.max_offdiag == 0;
  return rep;
}

}  // namespace hsearch
