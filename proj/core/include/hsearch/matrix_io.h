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

#ifndef HSEARCH_MATRIX_IO_H_
#define HSEARCH_MATRIX_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hsearch/arrays.h"
#include "hsearch/sign_matrix.h"

namespace hsearch {

// One row per line of '+' / '-' characters.
void write_sign_matrix(std::ostream& out, const SignMatrix& h);
// Ignores blank lines and lines starting with '#'. Throws ParseError.
SignMatrix read_sign_matrix(std::istream& in);

// Plain PBM (P1); -1 entries are black (1).
void write_pbm(std::ostream& out, const SignMatrix& h);
// Plain PGM (P2) of |D_ij|, maxval = largest magnitude.
void write_pgm(std::ostream& out, const IntMatrix& d);

// "ORDER=<M> HADAMARD=<yes|no> MAX_OFFDIAG=<v>"
std::string format_report(const VerifyReport& r);

void save_sign_matrix(const std::filesystem::path& path, const SignMatrix& h);
SignMatrix load_sign_matrix(const std::filesystem::path& path);
void save_pbm(const std::filesystem::path& path, const SignMatrix& h);
void save_pgm(const std::filesystem::path& path, const IntMatrix& d);

}  // namespace hsearch

#endif  // HSEARCH_MATRIX_IO_H_
