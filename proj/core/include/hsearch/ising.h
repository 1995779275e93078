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

#ifndef HSEARCH_ISING_H_
#define HSEARCH_ISING_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <utility>

#include "hsearch/polynomial.h"

namespace hsearch {

// How an IsingModel turns coefficients into an energy.
//
//   kDirect:             E(s) = offset + sum h_i s_i + sum J_ij s_i s_j
//   kHamiltonianNegated: E(s) = -sum J_ij s_i s_j - sum h_i s_i
//
// The energy functions built here are minimised at 0 under kDirect; the
// negated form is the transverse-field-annealer sign convention.
enum class Convention { kDirect, kHamiltonianNegated };

using Coupler = std::pair<VarId, VarId>;  // first < second

class IsingModel {
 public:
  IsingModel() = default;
  explicit IsingModel(std::size_t nvars,
                      Convention convention = Convention::kDirect)
      : nvars_(nvars), convention_(convention) {}

  // Accumulates into h_i; zero results are removed. Grows nvars if needed.
  void add_field(VarId i, Coeff value);
  // Accumulates into J_ij (order of i, j irrelevant; i != j).
  void add_coupling(VarId i, VarId j, Coeff value);
  void set_offset(Coeff c) { offset_ = c; }

  std::size_t nvars() const { return nvars_; }
  const std::map<VarId, Coeff>& h() const { return h_; }
  const std::map<Coupler, Coeff>& J() const { return J_; }
  Coeff offset() const { return offset_; }
  Convention convention() const { return convention_; }

  // Same coefficients read under another convention.
  IsingModel with_convention(Convention c) const;

  // Largest |h_i| or |J_ij|; 0 for a model without fields or couplers.
  Coeff max_abs_coefficient() const;

  friend bool operator==(const IsingModel&, const IsingModel&) = default;

 private:
  std::size_t nvars_ = 0;
  std::map<VarId, Coeff> h_;
  std::map<Coupler, Coeff> J_;
  Coeff offset_ = 0;
  Convention convention_ = Convention::kDirect;
};

// Lossless split of a quadratic spin polynomial. Throws std::invalid_argument
// for degree > 2 or a boolean polynomial.
IsingModel from_quadratic(const MultilinearPoly& p);

// Inverse of from_quadratic (kDirect only).
MultilinearPoly to_polynomial(const IsingModel& m);

// Throws std::out_of_range for a partial assignment and
// std::invalid_argument for values other than +/-1.
Coeff energy(const IsingModel& m, const Assignment& spins);

// Offset dropped, fields and couplers divided by the largest magnitude.
struct NormalizedIsing {
  std::size_t nvars = 0;
  std::map<VarId, double> h;
  std::map<Coupler, double> J;
  Coeff scale = 1;  // original coefficient = normalized * scale
};

// Throws std::invalid_argument for an all-zero model or a model not in
// kDirect convention.
NormalizedIsing normalize_for_export(const IsingModel& m);

// Ising text format:
//
//   # nvars <N>        optional; recovers variables without fields/couplers
//   c <int>
//   h <i> <value>
//   J <i> <j> <value>  i < j
//
// Values are integers or decimals. Other lines starting with '#' are
// comments. Writers emit sorted entries.
void write_ising(std::ostream& out, const IsingModel& m);
void write_ising(std::ostream& out, const NormalizedIsing& m);

// Integer model read from text. Decimal values are scaled exactly by
// `denominator` (a power of ten) so that every coefficient is integral;
// energies of `model` are then `denominator` times the file's energies.
struct ParsedIsing {
  IsingModel model;
  Coeff denominator = 1;
};
ParsedIsing read_ising(std::istream& in);

void save_ising(const std::filesystem::path& path, const IsingModel& m);
void save_ising(const std::filesystem::path& path, const NormalizedIsing& m);
ParsedIsing load_ising(const std::filesystem::path& path);

}  // namespace hsearch

#endif  // HSEARCH_ISING_H_
