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

#include "hsearch/sequences.h"

#include <stdexcept>

namespace hsearch {

MultilinearPoly SymEntry::as_poly() const {
  if (var) return MultilinearPoly::variable(Domain::kSpin, *var, sign);
  return MultilinearPoly::constant(Domain::kSpin, sign);
}

int SymEntry::value(const Assignment& spins) const {
  if (!var) return sign;
  const int s = spins[*var];
  if (s != 1 && s != -1) throw std::invalid_argument("spin values must be +/-1");
  return sign * s;
}

SymbolicSequence constant_sequence(std::span<const int> values) {
  SymbolicSequence out;
  out.reserve(values.size());
  for (int v : values) {
    if (v != 1 && v != -1) throw std::invalid_argument("expected a +/-1 sequence");
    out.push_back(v > 0 ? SymEntry::plus_one() : SymEntry::minus_one());
  }
  return out;
}

MultilinearPoly nac(const SymbolicSequence& v, std::size_t r) {
  MultilinearPoly sum(Domain::kSpin);
  for (std::size_t t = 0; t + r < v.size(); ++t) {
    const SymEntry& a = v[t];
    const SymEntry& b = v[t + r];
    std::vector<VarId> vars;
    if (a.var) vars.push_back(*a.var);
    if (b.var) vars.push_back(*b.var);
    sum.add_term(std::move(vars), a.sign * b.sign);
  }
  return sum;
}

long aperiodic_autocorrelation(std::span<const int> v, std::size_t r) {
  long sum = 0;
  for (std::size_t t = 0; t + r < v.size(); ++t) sum += long{v[t]} * v[t + r];
  return sum;
}

long periodic_autocorrelation(std::span<const int> v, std::size_t r) {
  const std::size_t n = v.size();
  long sum = 0;
  for (std::size_t t = 0; t < n; ++t) sum += long{v[t]} * v[(t + r) % n];
  return sum;
}

SignSeq instantiate(const SymbolicSequence& v, const Assignment& spins) {
  SignSeq out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(e.value(spins));
  return out;
}

std::string to_sign_string(std::span<const int> v) {
  std::string s;
  s.reserve(v.size());
  for (int x : v) s.push_back(x > 0 ? '+' : (x < 0 ? '-' : '0'));
  return s;
}

}  // namespace hsearch
