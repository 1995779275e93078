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

#include "hsearch/sign_matrix.h"

#include <stdexcept>
#include <utility>

namespace hsearch {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not multiply");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(k, j);
    }
  }
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix n(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) n(i, j) = -a(i, j);
  }
  return n;
}

SignMatrix::SignMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!m_.square()) throw std::invalid_argument("sign matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      if (m_(i, j) != 1 && m_(i, j) != -1) {
        throw std::invalid_argument("sign matrix entries must be +/-1");
      }
    }
  }
}

SignMatrix SignMatrix::negated_row(std::size_t i) const {
  IntMatrix m = m_;
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
  return SignMatrix(std::move(m));
}

SignMatrix SignMatrix::negated_col(std::size_t j) const {
  IntMatrix m = m_;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
  return SignMatrix(std::move(m));
}

}  // namespace hsearch
