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

#include "hsearch/ising.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "checked.h"
#include "hsearch/errors.h"
#include "text_util.h"

namespace hsearch {

using detail::checked_add;
using detail::checked_mul;

void IsingModel::add_field(VarId i, Coeff value) {
  if (i >= nvars_) nvars_ = i + 1;
  if (value == 0) return;
  Coeff& slot = h_[i];
  slot = checked_add(slot, value);
  if (slot == 0) h_.erase(i);
}

void IsingModel::add_coupling(VarId i, VarId j, Coeff value) {
  if (i == j) throw std::invalid_argument("coupler needs two distinct spins");
  if (i > j) std::swap(i, j);
  if (j >= nvars_) nvars_ = j + 1;
  if (value == 0) return;
  Coeff& slot = J_[{i, j}];
  slot = checked_add(slot, value);
  if (slot == 0) J_.erase({i, j});
}

IsingModel IsingModel::with_convention(Convention c) const {
  IsingModel m = *this;
  m.convention_ = c;
  return m;
}

Coeff IsingModel::max_abs_coefficient() const {
  Coeff best = 0;
  for (const auto& [i, v] : h_) best = std::max(best, v < 0 ? -v : v);
  for (const auto& [ij, v] : J_) best = std::max(best, v < 0 ? -v : v);
  return best;
}

IsingModel from_quadratic(const MultilinearPoly& p) {
  if (p.domain() != Domain::kSpin) {
    throw std::invalid_argument("from_quadratic expects a spin polynomial");
  }
  if (degree(p) > 2) {
    throw std::invalid_argument("from_quadratic expects degree <= 2, got " +
                                std::to_string(degree(p)));
  }
  IsingModel m(p.num_vars());
  for (const auto& [mono, c] : p.terms()) {
    switch (mono.size()) {
      case 0: m.set_offset(c); break;
      case 1: m.add_field(mono[0], c); break;
      default: m.add_coupling(mono[0], mono[1], c); break;
    }
  }
  return m;
}

MultilinearPoly to_polynomial(const IsingModel& m) {
  if (m.convention() != Convention::kDirect) {
    throw std::invalid_argument("to_polynomial expects a kDirect model");
  }
  MultilinearPoly p(Domain::kSpin);
  p.add_term({}, m.offset());
  for (const auto& [i, v] : m.h()) p.add_term({i}, v);
  for (const auto& [ij, v] : m.J()) p.add_term({ij.first, ij.second}, v);
  return p;
}

Coeff energy(const IsingModel& m, const Assignment& spins) {
  if (spins.size() < m.nvars()) {
    throw std::out_of_range("assignment covers " + std::to_string(spins.size()) +
                            " of " + std::to_string(m.nvars()) + " spins");
  }
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    const int s = spins.values()[i];
    if (s != 1 && s != -1) throw std::invalid_argument("spin values must be +/-1");
  }
  Coeff field = 0;
  for (const auto& [i, v] : m.h()) field = checked_add(field, v * spins[i]);
  Coeff coupling = 0;
  for (const auto& [ij, v] : m.J()) {
    coupling = checked_add(coupling, v * spins[ij.first] * spins[ij.second]);
  }
  if (m.convention() == Convention::kHamiltonianNegated) {
    return checked_mul(-1, checked_add(coupling, field));
  }
  return checked_add(m.offset(), checked_add(field, coupling));
}

NormalizedIsing normalize_for_export(const IsingModel& m) {
  if (m.convention() != Convention::kDirect) {
    throw std::invalid_argument("normalize_for_export expects a kDirect model");
  }
  const Coeff scale = m.max_abs_coefficient();
  if (scale == 0) throw std::invalid_argument("cannot normalize an all-zero model");
  NormalizedIsing out;
  out.nvars = m.nvars();
  out.scale = scale;
  for (const auto& [i, v] : m.h()) out.h[i] = static_cast<double>(v) / scale;
  for (const auto& [ij, v] : m.J()) out.J[ij] = static_cast<double>(v) / scale;
  return out;
}

namespace {

// Fixed-point rendering with trailing zeros trimmed, keeping one decimal.
std::string format_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  std::string s = buf;
  while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
  if (s == "-0.0") s = "0.0";
  return s;
}

// A decimal literal as mantissa * 10^-decimals.
struct Decimal {
  Coeff mantissa = 0;
  int decimals = 0;
};

Decimal parse_decimal(std::string_view token, int lineno) {
  const auto dot = token.find('.');
  if (dot == std::string_view::npos) {
    return {detail::parse_int<Coeff>(token, lineno), 0};
  }
  std::string digits(token.substr(0, dot));
  std::string frac(token.substr(dot + 1));
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("invalid decimal '" + std::string(token) + "'", lineno);
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (frac.size() > 15) {
    throw ParseError("too many decimal places in '" + std::string(token) + "'", lineno);
  }
  const bool negative = !digits.empty() && digits.front() == '-';
  if (digits.empty() || digits == "-" || digits == "+") digits += '0';
  const std::string joined = digits + frac;
  Coeff mantissa = detail::parse_int<Coeff>(joined, lineno);
  if (negative && mantissa > 0) mantissa = -mantissa;  // "-0.5"
  return {mantissa, static_cast<int>(frac.size())};
}

Coeff pow10(int e) {
  Coeff r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, 10);
  return r;
}

}  // namespace

void write_ising(std::ostream& out, const IsingModel& m) {
  out << "# nvars " << m.nvars() << '\n';
  out << "c " << m.offset() << '\n';
  for (const auto& [i, v] : m.h()) out << "h " << i << ' ' << v << '\n';
  for (const auto& [ij, v] : m.J()) {
    out << "J " << ij.first << ' ' << ij.second << ' ' << v << '\n';
  }
}

void write_ising(std::ostream& out, const NormalizedIsing& m) {
  out << "# nvars " << m.nvars << '\n';
  out << "# scale " << m.scale << '\n';
  for (const auto& [i, v] : m.h) out << "h " << i << ' ' << format_decimal(v) << '\n';
  for (const auto& [ij, v] : m.J) {
    out << "J " << ij.first << ' ' << ij.second << ' ' << format_decimal(v) << '\n';
  }
}

ParsedIsing read_ising(std::istream& in) {
  struct Entry {
    char kind;
    VarId i = 0, j = 0;
    Decimal value;
  };
  std::vector<Entry> entries;
  std::size_t nvars = 0;
  std::optional<Decimal> offset;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = detail::split_tokens(line);
    if (t.empty()) continue;
    if (t[0].starts_with('#')) {
      if (t.size() == 3 && t[0] == "#" && t[1] == "nvars") {
        nvars = detail::parse_int<std::size_t>(t[2], lineno);
      }
      continue;
    }
    if (t[0] == "c" && t.size() == 2) {
      if (offset) throw ParseError("duplicate offset line", lineno);
      offset = parse_decimal(t[1], lineno);
    } else if (t[0] == "h" && t.size() == 3) {
      entries.push_back({'h', detail::parse_int<VarId>(t[1], lineno), 0,
                         parse_decimal(t[2], lineno)});
    } else if (t[0] == "J" && t.size() == 4) {
      Entry e{'J', detail::parse_int<VarId>(t[1], lineno),
              detail::parse_int<VarId>(t[2], lineno), parse_decimal(t[3], lineno)};
      if (e.i >= e.j) throw ParseError("coupler indices must satisfy i < j", lineno);
      entries.push_back(e);
    } else {
      throw ParseError("unrecognised line '" + line + "'", lineno);
    }
  }

  int decimals = offset ? offset->decimals : 0;
  for (const auto& e : entries) decimals = std::max(decimals, e.value.decimals);
  auto lift = [&](const Decimal& d) {
    return checked_mul(d.mantissa, pow10(decimals - d.decimals));
  };

  ParsedIsing out{IsingModel(nvars), pow10(decimals)};
  if (offset) out.model.set_offset(lift(*offset));
  for (const auto& e : entries) {
    if (e.kind == 'h') {
      out.model.add_field(e.i, lift(e.value));
    } else {
      out.model.add_coupling(e.i, e.j, lift(e.value));
    }
  }
  return out;
}

void save_ising(const std::filesystem::path& path, const IsingModel& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_ising(out, m);
}

void save_ising(const std::filesystem::path& path, const NormalizedIsing& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_ising(out, m);
}

ParsedIsing load_ising(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_ising(in);
}

}  // namespace hsearch
