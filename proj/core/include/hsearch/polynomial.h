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

#ifndef HSEARCH_POLYNOMIAL_H_
#define HSEARCH_POLYNOMIAL_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hsearch {

using VarId = std::uint32_t;
using Coeff = std::int64_t;

// Value space of the variables of a polynomial.
//
// Spin variables take values in {-1, +1} and satisfy s*s = 1. Boolean
// variables take values in {0, 1} and satisfy q*q = q. The two domains are
// related by s = 1 - 2q, i.e. s = +1 <-> q = 0 and s = -1 <-> q = 1.
enum class Domain { kSpin, kBoolean };

const char* to_string(Domain d);

// Strictly ascending list of variable indices. The empty list is the
// constant monomial.
using Monomial = std::vector<VarId>;

// Orders monomials by length first, then lexicographically. This is the
// canonical serialization order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Integer-coefficient multilinear polynomial over indexed spin or boolean
// variables. Zero coefficients are never stored; all arithmetic is exact
// and throws std::overflow_error instead of wrapping.
class MultilinearPoly {
 public:
  using TermMap = std::map<Monomial, Coeff, MonomialOrder>;

  explicit MultilinearPoly(Domain domain = Domain::kSpin) : domain_(domain) {}

  static MultilinearPoly constant(Domain domain, Coeff c);
  static MultilinearPoly variable(Domain domain, VarId v, Coeff c = 1);

  // Adds c times the product of `vars`. The list may be unsorted and may
  // repeat variables; it is reduced with s*s = 1 or q*q = q.
  void add_term(std::vector<VarId> vars, Coeff c);

  Domain domain() const { return domain_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Monomial& m) const;
  Coeff constant_term() const { return coefficient({}); }

  // One past the largest variable index used; 0 for a constant.
  std::size_t num_vars() const;

  MultilinearPoly& operator+=(const MultilinearPoly& other);
  MultilinearPoly& operator-=(const MultilinearPoly& other);
  MultilinearPoly& operator*=(Coeff c);

  friend bool operator==(const MultilinearPoly&,
                         const MultilinearPoly&) = default;

 private:
  void accumulate(Monomial m, Coeff c);

  Domain domain_;
  TermMap terms_;
};

// Total map from variable index to a value of the polynomial's domain.
// Index i holds the value of variable i.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<int> values) : values_(std::move(values)) {}

  // Spin assignment over n variables where bit i set means s_i = -1.
  static Assignment spins_from_bits(std::uint64_t bits, std::size_t n);

  std::size_t size() const { return values_.size(); }
  bool contains(VarId v) const { return v < values_.size(); }
  int operator[](VarId v) const { return values_.at(v); }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<int> values_;
};

// Image of a spin assignment under s -> q = (1 - s) / 2 and back.
Assignment spins_to_booleans(const Assignment& spins);
Assignment booleans_to_spins(const Assignment& bools);

MultilinearPoly add(const MultilinearPoly& p, const MultilinearPoly& q);
MultilinearPoly mul(const MultilinearPoly& p, const MultilinearPoly& q);
MultilinearPoly square(const MultilinearPoly& p);

MultilinearPoly operator+(const MultilinearPoly& p, const MultilinearPoly& q);
MultilinearPoly operator-(const MultilinearPoly& p, const MultilinearPoly& q);
MultilinearPoly operator*(const MultilinearPoly& p, const MultilinearPoly& q);
MultilinearPoly operator*(Coeff c, const MultilinearPoly& p);

// Exact value of p at a. Variables of `a` that p does not use are ignored.
// Throws std::out_of_range when a variable of p is unassigned and
// std::invalid_argument when a value is outside p's domain.
Coeff evaluate(const MultilinearPoly& p, const Assignment& a);

// Substitutes s_i = 1 - 2 q_i.
MultilinearPoly spin_to_boolean(const MultilinearPoly& p);

// Substitutes q_i = (1 - s_i) / 2. Throws InternalError if the result is
// not integral.
MultilinearPoly boolean_to_spin(const MultilinearPoly& p);

// Sum of |coefficient| over all terms, constant included.
Coeff abs_coeff_sum(const MultilinearPoly& p);

std::size_t degree(const MultilinearPoly& p);

// Human-readable rendering in canonical order, e.g.
// "192 + 96*s0*s1 + 48*s0*s1*s2*s3".
std::string to_string(const MultilinearPoly& p);

}  // namespace hsearch

#endif  // HSEARCH_POLYNOMIAL_H_
