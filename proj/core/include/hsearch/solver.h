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

#ifndef HSEARCH_SOLVER_H_
#define HSEARCH_SOLVER_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hsearch/ising.h"
#include "hsearch/polynomial.h"

namespace hsearch {

// Samples are spin assignments. For boolean input read them through
// q = (1 - s) / 2.
struct Sample {
  Assignment spins;
  Coeff energy = 0;
  std::uint64_t occurrences = 0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct AnnealParams {
  std::uint64_t reads = 1000;
  std::uint64_t sweeps = 1000;
  // Effective inverse temperatures are beta_start / max|coefficient| and
  // beta_end / min nonzero |coefficient|.
  double beta_start = 0.01;
  double beta_end = 10.0;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Sorted by energy, then by the +/- rendering of the assignment.
struct SampleSet {
  std::vector<Sample> samples;
  std::uint64_t reads = 0;
  std::uint64_t seed = 0;
  std::optional<AnnealParams> schedule;  // set for annealing runs

  bool empty() const { return samples.empty(); }
  Coeff min_energy() const;  // throws std::logic_error when empty
  const Sample& best() const;
  // Reads that ended at min_energy().
  std::uint64_t ground_occurrences() const;
};

struct ExhaustiveOptions {
  std::size_t cap = 26;
  // Return every minimizer instead of the first in sample order.
  bool all_ground = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Exact minimum over all 2^n assignments of the variables 0..n-1. Throws
// std::invalid_argument when n exceeds options.cap.
SampleSet exhaustive_min(const MultilinearPoly& p, const ExhaustiveOptions& options = {});
SampleSet exhaustive_min(const IsingModel& m, const ExhaustiveOptions& options = {});

// Single-flip Metropolis from a uniform random start with a geometric
// inverse-temperature schedule; one permutation of the spins per sweep.
// Read r draws from a generator seeded by (seed, r), so the result does not
// depend on the thread count. Throws std::invalid_argument for zero reads
// or sweeps and for a model outside kDirect convention.
SampleSet anneal(const IsingModel& m, const AnnealParams& params = {});

struct HistogramBin {
  double lo = 0;
  double hi = 0;
  std::uint64_t count = 0;
};

// Equal-width bins over [min, max] energy, weighted by occurrences. Throws
// std::invalid_argument for an empty set or zero bins.
std::vector<HistogramBin> histogram(const SampleSet& s, std::size_t bins);

// "<energy> <occurrences> <+/- string>" per sample.
void write_samples(std::ostream& out, const SampleSet& s);
// "lo\thi\tcount" per bin.
void write_histogram(std::ostream& out, const std::vector<HistogramBin>& bins);

}  // namespace hsearch

#endif  // HSEARCH_SOLVER_H_
