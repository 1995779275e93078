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

#include "hsearch/matrix_io.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>

#include "hsearch/errors.h"

namespace hsearch {

namespace {

template <typename Writer>
void save_with(const std::filesystem::path& path, Writer write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write(out);
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

void write_sign_matrix(std::ostream& out, const SignMatrix& h) {
  std::string row;
  for (std::size_t i = 0; i < h.order(); ++i) {
    row.clear();
    for (std::size_t j = 0; j < h.order(); ++j) row.push_back(h(i, j) > 0 ? '+' : '-');
    out << row << '\n';
  }
}

SignMatrix read_sign_matrix(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.find_first_not_of("+-") != std::string::npos) {
      throw ParseError("matrix rows may only contain '+' and '-'", lineno);
    }
    if (!rows.empty() && line.size() != rows[0].size()) {
      throw ParseError("row length " + std::to_string(line.size()) + " differs from " +
                           std::to_string(rows[0].size()),
                       lineno);
    }
    rows.push_back(line);
  }
  if (rows.empty()) throw ParseError("no matrix rows");
  if (rows.size() != rows[0].size()) {
    throw ParseError("matrix is " + std::to_string(rows.size()) + " x " +
                     std::to_string(rows[0].size()) + ", not square");
  }
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j] == '+' ? 1 : -1;
  }
  return SignMatrix(std::move(m));
}

void write_pbm(std::ostream& out, const SignMatrix& h) {
  out << "P1\n" << h.order() << ' ' << h.order() << '\n';
  for (std::size_t i = 0; i < h.order(); ++i) {
    for (std::size_t j = 0; j < h.order(); ++j) {
      if (j > 0) out << ' ';
      out << (h(i, j) < 0 ? 1 : 0);
    }
    out << '\n';
  }
}

void write_pgm(std::ostream& out, const IntMatrix& d) {
  std::int64_t maxval = 1;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) maxval = std::max<std::int64_t>(maxval, std::llabs(d(i, j)));
  }
  out << "P2\n" << d.cols() << ' ' << d.rows() << '\n' << maxval << '\n';
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (j > 0) out << ' ';
      out << std::llabs(d(i, j));
    }
    out << '\n';
  }
}

std::string format_report(const VerifyReport& r) {
  return "ORDER=" + std::to_string(r.order) + " HADAMARD=" + (r.hadamard ? "yes" : "no") +
         " MAX_OFFDIAG=" + std::to_string(r.max_offdiag);
}

void save_sign_matrix(const std::filesystem::path& path, const SignMatrix& h) {
  save_with(path, [&](std::ostream& out) { write_sign_matrix(out, h); });
}

SignMatrix load_sign_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_sign_matrix(in);
}

void save_pbm(const std::filesystem::path& path, const SignMatrix& h) {
  save_with(path, [&](std::ostream& out) { write_pbm(out, h); });
}

void save_pgm(const std::filesystem::path& path, const IntMatrix& d) {
  save_with(path, [&](std::ostream& out) { write_pgm(out, d); });
}

}  // namespace hsearch
