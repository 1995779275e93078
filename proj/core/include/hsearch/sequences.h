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

#ifndef HSEARCH_SEQUENCES_H_
#define HSEARCH_SEQUENCES_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hsearch/polynomial.h"

namespace hsearch {

// One entry of a partially symbolic +/-1 sequence: +1, -1, +s_v or -s_v.
struct SymEntry {
  int sign = 1;
  std::optional<VarId> var;

  static SymEntry plus_one() { return {1, std::nullopt}; }
  static SymEntry minus_one() { return {-1, std::nullopt}; }
  static SymEntry plus_var(VarId v) { return {1, v}; }
  static SymEntry minus_var(VarId v) { return {-1, v}; }

  MultilinearPoly as_poly() const;
  // Numeric value under a spin assignment.
  int value(const Assignment& spins) const;

  friend bool operator==(const SymEntry&, const SymEntry&) = default;
};

using SymbolicSequence = std::vector<SymEntry>;

// +/-1 (or, for T-sequences, -1/0/+1) numeric sequence.
using SignSeq = std::vector<int>;

SymbolicSequence constant_sequence(std::span<const int> values);

// Non-periodic autocorrelation sum_t v_t v_{t+r}; zero polynomial when
// r >= length.
MultilinearPoly nac(const SymbolicSequence& v, std::size_t r);

// Numeric counterpart of nac.
long aperiodic_autocorrelation(std::span<const int> v, std::size_t r);

// sum_t v_t v_{(t+r) mod n}.
long periodic_autocorrelation(std::span<const int> v, std::size_t r);

SignSeq instantiate(const SymbolicSequence& v, const Assignment& spins);

// "+-+-" style rendering of a +/-1 sequence ('0' for zero entries).
std::string to_sign_string(std::span<const int> v);

}  // namespace hsearch

#endif  // HSEARCH_SEQUENCES_H_
