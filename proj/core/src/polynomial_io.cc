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

#include "hsearch/polynomial_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hsearch/errors.h"
#include "text_util.h"

namespace hsearch {

void write_polynomial(std::ostream& out, const MultilinearPoly& poly,
                      std::optional<std::size_t> nvars) {
  const std::size_t n = nvars.value_or(poly.num_vars());
  if (n < poly.num_vars()) {
    throw std::invalid_argument("nvars is smaller than the polynomial's variable count");
  }
  out << "domain " << to_string(poly.domain()) << '\n';
  out << "nvars " << n << '\n';
  for (const auto& [m, c] : poly.terms()) {
    out << c;
    for (VarId v : m) out << ' ' << v;
    out << '\n';
  }
}

PolynomialFile read_polynomial(std::istream& in) {
  std::optional<Domain> domain;
  std::optional<std::size_t> nvars;
  PolynomialFile result;
  std::set<Monomial, MonomialOrder> seen;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = detail::split_tokens(line);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;

    if (!domain) {
      if (tokens.size() != 2 || tokens[0] != "domain") {
        throw ParseError("expected 'domain spin|boolean'", lineno);
      }
      if (tokens[1] == "spin") {
        domain = Domain::kSpin;
      } else if (tokens[1] == "boolean") {
        domain = Domain::kBoolean;
      } else {
        throw ParseError("unknown domain '" + std::string(tokens[1]) + "'", lineno);
      }
      result.poly = MultilinearPoly(*domain);
      continue;
    }
    if (!nvars) {
      if (tokens.size() != 2 || tokens[0] != "nvars") {
        throw ParseError("expected 'nvars <N>'", lineno);
      }
      nvars = detail::parse_int<std::size_t>(tokens[1], lineno);
      result.nvars = *nvars;
      continue;
    }

    const Coeff c = detail::parse_int<Coeff>(tokens[0], lineno);
    Monomial m;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const auto v = detail::parse_int<VarId>(tokens[i], lineno);
      if (v >= *nvars) {
        throw ParseError("variable index " + std::to_string(v) +
                             " is not below nvars", lineno);
      }
      if (!m.empty() && v <= m.back()) {
        throw ParseError("variable indices must be strictly ascending", lineno);
      }
      m.push_back(v);
    }
    if (!seen.insert(m).second) throw ParseError("duplicate monomial", lineno);
    result.poly.add_term(std::move(m), c);
  }
  if (!domain) throw ParseError("missing 'domain' header");
  if (!nvars) throw ParseError("missing 'nvars' header");
  return result;
}

void save_polynomial(const std::filesystem::path& path,
                     const MultilinearPoly& poly,
                     std::optional<std::size_t> nvars) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_polynomial(out, poly, nvars);
  if (!out) throw IoError("failed writing " + path.string());
}

PolynomialFile load_polynomial(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_polynomial(in);
}

}  // namespace hsearch
