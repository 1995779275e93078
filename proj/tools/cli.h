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

#ifndef HSEARCH_TOOLS_CLI_H_
#define HSEARCH_TOOLS_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "hsearch/hsearch.h"

namespace hsearch::cli {

enum ExitCode { kOk = 0, kNoSolution = 1, kUsage = 2, kIo = 3 };

enum class Method { kWilliamson, kBaumertHall, kTuryn, kExtendedTuryn };
enum class SolverChoice { kAuto, kExhaustive, kAnneal };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Method parse_method(const std::string& s);  // throws UsageError
const char* to_string(Method m);

struct RunConfig {
  Method method = Method::kWilliamson;
  int size = 0;  // k for Williamson/Baumert-Hall, n for Turyn
  int m = 2;     // extended Turyn filled count per side
  std::optional<std::string> prototype;
  SolverChoice solver = SolverChoice::kAuto;
  std::size_t auto_threshold = 22;  // logical variables solved exhaustively
  std::size_t cap = 26;
  std::uint64_t reads = 1000;
  std::uint64_t sweeps = 1000;
  double beta_start = 0.01;
  double beta_end = 10.0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::size_t bins = 20;
  PairSelection pairs = PairSelection::kMostFrequent;
  bool keep_failures = false;
  std::filesystem::path out = "out";
};

// Checks method/size combinations; throws UsageError.
void validate(const RunConfig& c);

// Every stage of the transform chain for one problem.
struct Problem {
  MultilinearPoly ek_s;
  MultilinearPoly ek_q;
  Quadratization e2_q;
  MultilinearPoly e2_s;  // spin form of spin_scale * e2_q
  Coeff spin_scale = 1;
  IsingModel ising;
  std::size_t logical = 0;
  std::optional<PrototypeSpec> prototype;
};

// Energy polynomial in spin variables for the configured method. Extended
// Turyn uses `proto`.
MultilinearPoly energy_for(const RunConfig& c, const std::optional<PrototypeSpec>& proto);

Problem build_problem(const RunConfig& c, const std::optional<PrototypeSpec>& proto);

// Prototype from --prototype, else the first filtered one for (n, m).
PrototypeSpec choose_prototype(const RunConfig& c);

int cmd_build(const RunConfig& c, std::ostream& out);
int cmd_search(const RunConfig& c, std::ostream& out);
int cmd_prototypes(const RunConfig& c, bool normalize, std::ostream& out);
int cmd_verify(const std::filesystem::path& matrix, const std::optional<std::filesystem::path>& pgm,
               std::ostream& out);
int cmd_solve(const RunConfig& c, const std::filesystem::path& input, std::ostream& out);
int cmd_quadratize(const RunConfig& c, const std::filesystem::path& input, std::ostream& out);

// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hsearch::cli

#endif  // HSEARCH_TOOLS_CLI_H_
