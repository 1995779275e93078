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

#ifndef HSEARCH_SIGN_MATRIX_H_
#define HSEARCH_SIGN_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hsearch {

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Throws std::invalid_argument on a shape mismatch.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);

// Square matrix with entries in {-1, +1}.
class SignMatrix {
 public:
  SignMatrix() = default;
  // Throws std::invalid_argument unless m is square with +/-1 entries.
  explicit SignMatrix(IntMatrix m);

  std::size_t order() const { return m_.rows(); }
  int operator()(std::size_t i, std::size_t j) const { return static_cast<int>(m_(i, j)); }
  const IntMatrix& matrix() const { return m_; }

  SignMatrix transpose() const { return SignMatrix(m_.transpose()); }
  SignMatrix negated_row(std::size_t i) const;
  SignMatrix negated_col(std::size_t j) const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  IntMatrix m_;
};

}  // namespace hsearch

#endif  // HSEARCH_SIGN_MATRIX_H_
