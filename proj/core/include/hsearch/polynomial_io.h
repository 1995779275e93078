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

#ifndef HSEARCH_POLYNOMIAL_IO_H_
#define HSEARCH_POLYNOMIAL_IO_H_

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "hsearch/polynomial.h"

namespace hsearch {

// Text format, one polynomial per file:
//
//   domain spin|boolean
//   nvars <N>
//   <coeff> <i1> <i2> ...      one line per term, ascending indices
//
// The constant term has no indices. Lines starting with '#' are comments.
// Terms are written in canonical (length, lexicographic) order.

struct PolynomialFile {
  MultilinearPoly poly;
  std::size_t nvars = 0;
};

// `nvars` defaults to poly.num_vars(); it may be larger but never smaller.
void write_polynomial(std::ostream& out, const MultilinearPoly& poly,
                      std::optional<std::size_t> nvars = std::nullopt);
PolynomialFile read_polynomial(std::istream& in);

void save_polynomial(const std::filesystem::path& path,
                     const MultilinearPoly& poly,
                     std::optional<std::size_t> nvars = std::nullopt);
PolynomialFile load_polynomial(const std::filesystem::path& path);

}  // namespace hsearch

#endif  // HSEARCH_POLYNOMIAL_IO_H_
