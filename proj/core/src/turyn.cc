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

#include "hsearch/turyn.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hsearch/errors.h"

namespace hsearch {

namespace {

void require_turyn_length(int n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("Turyn length must be even and >= 4, got " +
                                std::to_string(n));
  }
}

long weighted_sum(const TurynSequences& s, std::size_t r) {
  return aperiodic_autocorrelation(s.x, r) + aperiodic_autocorrelation(s.y, r) +
         2 * aperiodic_autocorrelation(s.z, r) + 2 * aperiodic_autocorrelation(s.w, r);
}

bool is_sign_sequence(const SignSeq& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 1 || x == -1; });
}

bool has_zero_sum(const std::array<SignSeq, 4>& seqs) {
  std::size_t len = 0;
  for (const auto& s : seqs) len = std::max(len, s.size());
  for (std::size_t r = 1; r < len; ++r) {
    if (autocorrelation_sum(seqs, r) != 0) return false;
  }
  return true;
}

}  // namespace

std::size_t TurynQuadruple::num_vars() const {
  std::size_t n = 0;
  for (const auto* seq : {&x, &y, &z, &w}) {
    for (const auto& e : *seq) {
      if (e.var) n = std::max<std::size_t>(n, *e.var + 1);
    }
  }
  return n;
}

std::size_t turyn_num_vars(int n) {
  require_turyn_length(n);
  return 4 * static_cast<std::size_t>(n) - 11;
}

TurynQuadruple turyn_quadruple(int n) {
  require_turyn_length(n);
  const auto un = static_cast<std::size_t>(n);
  VarId next = 0;
  TurynQuadruple q;
  q.x.assign(un, SymEntry::plus_one());
  q.y.assign(un, SymEntry::plus_one());
  q.z.assign(un, SymEntry::plus_one());
  q.w.assign(un - 1, SymEntry::plus_one());

  q.x[un - 1] = SymEntry::minus_one();
  for (std::size_t t = 2; t + 2 < un; ++t) q.x[t] = SymEntry::plus_var(next++);

  const VarId y1 = next++;
  q.y[1] = SymEntry::plus_var(y1);
  q.y[un - 2] = SymEntry::minus_var(y1);
  q.y[un - 1] = SymEntry::minus_one();
  for (std::size_t t = 2; t + 2 < un; ++t) q.y[t] = SymEntry::plus_var(next++);

  for (std::size_t t = 1; t + 1 < un; ++t) q.z[t] = SymEntry::plus_var(next++);
  for (std::size_t t = 1; t + 1 < un; ++t) q.w[t] = SymEntry::plus_var(next++);

  if (next != turyn_num_vars(n)) throw InternalError("Turyn variable count mismatch");
  return q;
}

MultilinearPoly tt_energy(const TurynQuadruple& q) {
  const std::size_t n = q.length();
  if (q.y.size() != n || q.z.size() != n || q.w.size() + 1 != n) {
    throw std::invalid_argument("Turyn quadruple lengths must be n, n, n, n-1");
  }
  MultilinearPoly energy(Domain::kSpin);
  for (std::size_t r = 1; r < n; ++r) {
    MultilinearPoly c = nac(q.x, r) + nac(q.y, r);
    c += 2 * nac(q.z, r);
    c += 2 * nac(q.w, r);
    energy += square(c);
  }
  return energy;
}

MultilinearPoly turyn_energy(int n) { return tt_energy(turyn_quadruple(n)); }

TurynSequences complete(const TurynQuadruple& q, const Assignment& spins) {
  return {instantiate(q.x, spins), instantiate(q.y, spins), instantiate(q.z, spins),
          instantiate(q.w, spins)};
}

bool is_turyn_type(const TurynSequences& s) {
  const std::size_t n = s.x.size();
  if (n < 2 || s.y.size() != n || s.z.size() != n || s.w.size() + 1 != n) return false;
  for (const auto* v : {&s.x, &s.y, &s.z, &s.w}) {
    if (!is_sign_sequence(*v)) return false;
  }
  for (std::size_t r = 1; r < n; ++r) {
    if (weighted_sum(s, r) != 0) return false;
  }
  return true;
}

long autocorrelation_sum(const std::array<SignSeq, 4>& seqs, std::size_t r) {
  long sum = 0;
  for (const auto& s : seqs) sum += aperiodic_autocorrelation(s, r);
  return sum;
}

bool supports_partition(const std::array<SignSeq, 4>& t) {
  const std::size_t len = t[0].size();
  for (const auto& s : t) {
    if (s.size() != len) return false;
  }
  for (std::size_t i = 0; i < len; ++i) {
    int nonzero = 0;
    for (const auto& s : t) {
      if (s[i] < -1 || s[i] > 1) return false;
      if (s[i] != 0) ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  return true;
}

BaseSequences base_sequences(const TurynSequences& s) {
  if (!is_turyn_type(s)) throw std::invalid_argument("input is not a Turyn-type quadruple");
  BaseSequences b;
  b.a = s.z;
  b.b = s.z;
  for (int v : s.w) {
    b.a.push_back(v);
    b.b.push_back(-v);
  }
  b.c = s.x;
  b.d = s.y;
  if (!has_zero_sum({b.a, b.b, b.c, b.d})) {
    throw InternalError("base sequences fail the autocorrelation check");
  }
  return b;
}

std::array<SignSeq, 4> t_sequences(const BaseSequences& base) {
  const std::size_t n = base.c.size();
  if (n == 0 || base.d.size() != n || base.a.size() != 2 * n - 1 ||
      base.b.size() != 2 * n - 1) {
    throw std::invalid_argument("base sequence lengths must be 2n-1, 2n-1, n, n");
  }
  for (const auto* v : {&base.a, &base.b, &base.c, &base.d}) {
    if (!is_sign_sequence(*v)) throw std::invalid_argument("base sequences must be +/-1");
  }
  if (!has_zero_sum({base.a, base.b, base.c, base.d})) {
    throw std::invalid_argument("input does not have the base-sequence property");
  }
  const std::size_t len = 3 * n - 1;
  std::array<SignSeq, 4> t;
  for (auto& s : t) s.assign(len, 0);
  for (std::size_t i = 0; i < 2 * n - 1; ++i) {
    t[0][i] = (base.a[i] + base.b[i]) / 2;
    t[1][i] = (base.a[i] - base.b[i]) / 2;
  }
  for (std::size_t i = 0; i < n; ++i) {
    t[2][2 * n - 1 + i] = (base.c[i] + base.d[i]) / 2;
    t[3][2 * n - 1 + i] = (base.c[i] - base.d[i]) / 2;
  }
  if (!supports_partition(t) || !has_zero_sum(t)) {
    throw InternalError("T-sequences fail their postconditions");
  }
  return t;
}

std::array<SignSeq, 4> seed_sequences(const std::array<SignSeq, 4>& t) {
  if (!supports_partition(t)) {
    throw std::invalid_argument("T-sequences must have partitioning supports");
  }
  if (!has_zero_sum(t)) {
    throw std::invalid_argument("T-sequences must have zero autocorrelation sum");
  }
  static constexpr int kSigns[4][4] = {
      {1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  const std::size_t len = t[0].size();
  std::array<SignSeq, 4> seeds;
  for (int k = 0; k < 4; ++k) {
    seeds[k].assign(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
      for (int j = 0; j < 4; ++j) seeds[k][i] += kSigns[k][j] * t[j][i];
    }
  }
  for (const auto& s : seeds) {
    if (!is_sign_sequence(s)) throw InternalError("seed sequence has a non +/-1 entry");
  }
  if (!has_zero_sum(seeds)) throw InternalError("seed sequences fail the autocorrelation check");
  return seeds;
}

}  // namespace hsearch
