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

#include "hsearch/polynomial.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "checked.h"
#include "hsearch/errors.h"

namespace hsearch {

using detail::checked_add;
using detail::checked_mul;

const char* to_string(Domain d) {
  return d == Domain::kSpin ? "spin" : "boolean";
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

void require_same_domain(const MultilinearPoly& p, const MultilinearPoly& q) {
  if (p.domain() != q.domain()) {
    throw std::invalid_argument(std::string("domain mismatch: ") +
                                to_string(p.domain()) + " vs " +
                                to_string(q.domain()));
  }
}

// Product of two reduced monomials under the domain's idempotence rule.
Monomial multiply_monomials(Domain domain, const Monomial& a,
                            const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  if (domain == Domain::kSpin) {
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
  } else {
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
  }
  return out;
}

// Calls fn(subset, |subset|) for every subset of `vars`, in increasing
// bitmask order. Subsets preserve ascending order.
template <typename Fn>
void for_each_subset(const Monomial& vars, Fn&& fn) {
  const std::size_t d = vars.size();
  if (d >= 63) throw std::invalid_argument("monomial degree too large");
  Monomial subset;
  subset.reserve(d);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < d; ++i) {
      if (mask >> i & 1) subset.push_back(vars[i]);
    }
    fn(subset, subset.size());
  }
}

}  // namespace

MultilinearPoly MultilinearPoly::constant(Domain domain, Coeff c) {
  MultilinearPoly p(domain);
  p.add_term({}, c);
  return p;
}

MultilinearPoly MultilinearPoly::variable(Domain domain, VarId v, Coeff c) {
  MultilinearPoly p(domain);
  p.add_term({v}, c);
  return p;
}

void MultilinearPoly::add_term(std::vector<VarId> vars, Coeff c) {
  if (c == 0) return;
  std::sort(vars.begin(), vars.end());
  Monomial reduced;
  reduced.reserve(vars.size());
  for (std::size_t i = 0; i < vars.size();) {
    std::size_t j = i;
    while (j < vars.size() && vars[j] == vars[i]) ++j;
    const std::size_t multiplicity = j - i;
    // s^2 = 1 cancels pairs; q^k = q keeps one copy.
    if (domain_ == Domain::kBoolean || multiplicity % 2 == 1) {
      reduced.push_back(vars[i]);
    }
    i = j;
  }
  accumulate(std::move(reduced), c);
}

void MultilinearPoly::accumulate(Monomial m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Coeff MultilinearPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

std::size_t MultilinearPoly::num_vars() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) {
    if (!m.empty()) n = std::max<std::size_t>(n, m.back() + 1);
  }
  return n;
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& other) {
  require_same_domain(*this, other);
  for (const auto& [m, c] : other.terms_) accumulate(m, c);
  return *this;
}

MultilinearPoly& MultilinearPoly::operator-=(const MultilinearPoly& other) {
  require_same_domain(*this, other);
  for (const auto& [m, c] : other.terms_) accumulate(m, checked_mul(c, -1));
  return *this;
}

MultilinearPoly& MultilinearPoly::operator*=(Coeff c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff = checked_mul(coeff, c);
  return *this;
}

Assignment Assignment::spins_from_bits(std::uint64_t bits, std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (bits >> i & 1) ? -1 : 1;
  return Assignment(std::move(v));
}

Assignment spins_to_booleans(const Assignment& spins) {
  std::vector<int> v(spins.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int s = spins.values()[i];
    if (s != 1 && s != -1) throw std::invalid_argument("spin value must be +/-1");
    v[i] = (1 - s) / 2;
  }
  return Assignment(std::move(v));
}

Assignment booleans_to_spins(const Assignment& bools) {
  std::vector<int> v(bools.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int q = bools.values()[i];
    if (q != 0 && q != 1) throw std::invalid_argument("boolean value must be 0/1");
    v[i] = 1 - 2 * q;
  }
  return Assignment(std::move(v));
}

MultilinearPoly add(const MultilinearPoly& p, const MultilinearPoly& q) {
  MultilinearPoly r = p;
  r += q;
  return r;
}

MultilinearPoly mul(const MultilinearPoly& p, const MultilinearPoly& q) {
  require_same_domain(p, q);
  MultilinearPoly r(p.domain());
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) {
      r.add_term(multiply_monomials(p.domain(), a, b), checked_mul(ca, cb));
    }
  }
  return r;
}

MultilinearPoly square(const MultilinearPoly& p) { return mul(p, p); }

MultilinearPoly operator+(const MultilinearPoly& p, const MultilinearPoly& q) {
  return add(p, q);
}

MultilinearPoly operator-(const MultilinearPoly& p, const MultilinearPoly& q) {
  MultilinearPoly r = p;
  r -= q;
  return r;
}

MultilinearPoly operator*(const MultilinearPoly& p, const MultilinearPoly& q) {
  return mul(p, q);
}

MultilinearPoly operator*(Coeff c, const MultilinearPoly& p) {
  MultilinearPoly r = p;
  r *= c;
  return r;
}

Coeff evaluate(const MultilinearPoly& p, const Assignment& a) {
  const bool spin = p.domain() == Domain::kSpin;
  Coeff total = 0;
  for (const auto& [m, c] : p.terms()) {
    int sign = 1;
    for (VarId v : m) {
      if (!a.contains(v)) {
        throw std::out_of_range("assignment is missing variable " +
                                std::to_string(v));
      }
      const int x = a[v];
      if (spin ? (x != 1 && x != -1) : (x != 0 && x != 1)) {
        throw std::invalid_argument("value " + std::to_string(x) +
                                    " of variable " + std::to_string(v) +
                                    " is outside the " + to_string(p.domain()) +
                                    " domain");
      }
      sign *= x;
    }
    if (sign != 0) total = checked_add(total, sign > 0 ? c : checked_mul(c, -1));
  }
  return total;
}

MultilinearPoly spin_to_boolean(const MultilinearPoly& p) {
  if (p.domain() != Domain::kSpin) {
    throw std::invalid_argument("spin_to_boolean expects a spin polynomial");
  }
  // c * prod(1 - 2q_i) = c * sum_S (-2)^|S| prod_{i in S} q_i
  MultilinearPoly r(Domain::kBoolean);
  for (const auto& [m, c] : p.terms()) {
    for_each_subset(m, [&](const Monomial& s, std::size_t k) {
      Coeff term = c;
      for (std::size_t i = 0; i < k; ++i) term = checked_mul(term, -2);
      r.add_term(s, term);
    });
  }
  return r;
}

MultilinearPoly boolean_to_spin(const MultilinearPoly& p) {
  if (p.domain() != Domain::kBoolean) {
    throw std::invalid_argument("boolean_to_spin expects a boolean polynomial");
  }
  // Scale everything by 2^D so each c * prod((1 - s_i) / 2) becomes
  // c * 2^(D-d) * sum_S (-1)^|S| prod_{i in S} s_i, then divide at the end.
  const std::size_t d_max = degree(p);
  if (d_max >= 62) throw std::invalid_argument("polynomial degree too large");
  MultilinearPoly scaled(Domain::kSpin);
  for (const auto& [m, c] : p.terms()) {
    const Coeff lift = checked_mul(c, Coeff{1} << (d_max - m.size()));
    for_each_subset(m, [&](const Monomial& s, std::size_t k) {
      scaled.add_term(s, k % 2 == 0 ? lift : checked_mul(lift, -1));
    });
  }
  const Coeff denominator = Coeff{1} << d_max;
  MultilinearPoly r(Domain::kSpin);
  for (const auto& [m, c] : scaled.terms()) {
    if (c % denominator != 0) {
      throw InternalError("boolean_to_spin produced a non-integral coefficient");
    }
    r.add_term(m, c / denominator);
  }
  return r;
}

Coeff abs_coeff_sum(const MultilinearPoly& p) {
  Coeff total = 0;
  for (const auto& [m, c] : p.terms()) {
    total = checked_add(total, c < 0 ? checked_mul(c, -1) : c);
  }
  return total;
}

std::size_t degree(const MultilinearPoly& p) {
  // Terms are ordered by length, so the last one has maximal degree.
  return p.empty() ? 0 : p.terms().rbegin()->first.size();
}

std::string to_string(const MultilinearPoly& p) {
  if (p.empty()) return "0";
  const char var = p.domain() == Domain::kSpin ? 's' : 'q';
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.empty() || mag != 1) {
      out << mag;
      if (!m.empty()) out << '*';
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0) out << '*';
      out << var << m[i];
    }
  }
  return out.str();
}

}  // namespace hsearch
