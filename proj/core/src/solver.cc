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

#include "hsearch/solver.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "hsearch/sequences.h"

namespace hsearch {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i) for i in [0, count) on up to `threads` workers.
template <typename Body>
void parallel_for(std::uint64_t count, unsigned threads, Body body) {
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::uint64_t i = next++; i < count && !failed; i = next++) body(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
      (void)t;
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Polynomial over bit-packed states; bit i set means s_i = -1 (q_i = 1).
struct Compiled {
  std::size_t n = 0;
  bool spin = true;
  Coeff constant = 0;
  std::vector<std::uint64_t> masks;
  std::vector<Coeff> coeffs;
  std::vector<int> lens;
  std::vector<std::vector<std::uint32_t>> by_var;

  Coeff value(std::size_t t, int cnt) const {
    if (spin) return (cnt & 1) ? -coeffs[t] : coeffs[t];
    return cnt == lens[t] ? coeffs[t] : 0;
  }

  void add(const std::vector<VarId>& vars, Coeff c) {
    if (vars.empty()) {
      constant += c;
      return;
    }
    std::uint64_t mask = 0;
    for (VarId v : vars) mask |= std::uint64_t{1} << v;
    const auto t = static_cast<std::uint32_t>(masks.size());
    masks.push_back(mask);
    coeffs.push_back(c);
    lens.push_back(static_cast<int>(vars.size()));
    for (VarId v : vars) by_var[v].push_back(t);
  }
};

void check_cap(std::size_t n, std::size_t cap) {
  if (cap > 62) cap = 62;
  if (n > cap) {
    throw std::invalid_argument(std::to_string(n) + " variables exceed the exhaustive cap of " +
                                std::to_string(cap));
  }
}

Compiled compile(const MultilinearPoly& p) {
  Compiled c;
  c.n = p.num_vars();
  c.spin = p.domain() == Domain::kSpin;
  c.by_var.resize(c.n);
  abs_coeff_sum(p);  // throws if partial sums could overflow
  for (const auto& [m, coeff] : p.terms()) c.add(m, coeff);
  return c;
}

Compiled compile(const IsingModel& m) {
  Compiled c;
  c.n = m.nvars();
  c.by_var.resize(c.n);
  const Coeff sign = m.convention() == Convention::kDirect ? 1 : -1;
  if (m.convention() == Convention::kDirect) c.constant = m.offset();
  for (const auto& [i, v] : m.h()) c.add({i}, sign * v);
  for (const auto& [ij, v] : m.J()) c.add({ij.first, ij.second}, sign * v);
  return c;
}

// Sample order on states: var 0 first, '+' (bit clear) before '-'.
bool state_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int d = std::countr_zero(a ^ b);
  return ((a >> d) & 1) == 0;
}

struct ChunkResult {
  Coeff min = 0;
  bool any = false;
  std::vector<std::uint64_t> states;  // minimizers (all, or just the first)
};

SampleSet solve_exhaustive(const Compiled& c, const ExhaustiveOptions& opt) {
  check_cap(c.n, opt.cap);
  const std::size_t n = c.n;
  const std::size_t high = n >= 16 ? std::min<std::size_t>(6, n) : 0;
  const std::size_t low = n - high;
  const std::uint64_t chunks = std::uint64_t{1} << high;
  std::vector<ChunkResult> results(chunks);

  parallel_for(chunks, resolve_threads(opt.threads), [&](std::uint64_t chunk) {
    std::uint64_t state = chunk << low;
    std::vector<int> cnt(c.masks.size());
    Coeff e = c.constant;
    for (std::size_t t = 0; t < c.masks.size(); ++t) {
      cnt[t] = std::popcount(c.masks[t] & state);
      e += c.value(t, cnt[t]);
    }
    ChunkResult& r = results[chunk];
    auto consider = [&](Coeff energy, std::uint64_t s) {
      if (!r.any || energy < r.min) {
        r.any = true;
        r.min = energy;
        r.states.assign(1, s);
      } else if (energy == r.min) {
        if (opt.all_ground) {
          r.states.push_back(s);
        } else if (state_less(s, r.states[0])) {
          r.states[0] = s;
        }
      }
    };
    consider(e, state);
    const std::uint64_t steps = std::uint64_t{1} << low;
    for (std::uint64_t k = 1; k < steps; ++k) {
      const int bit = std::countr_zero(k);
      const std::uint64_t flip = std::uint64_t{1} << bit;
      const int delta = (state & flip) ? -1 : 1;
      state ^= flip;
      for (std::uint32_t t : c.by_var[bit]) {
        e -= c.value(t, cnt[t]);
        cnt[t] += delta;
        e += c.value(t, cnt[t]);
      }
      consider(e, state);
    }
  });

  Coeff best = results[0].min;
  for (const auto& r : results) best = std::min(best, r.min);
  std::vector<std::uint64_t> states;
  for (const auto& r : results) {
    if (r.min == best) states.insert(states.end(), r.states.begin(), r.states.end());
  }
  std::sort(states.begin(), states.end(), state_less);
  if (!opt.all_ground) states.resize(1);

  SampleSet out;
  for (std::uint64_t s : states) {
    out.samples.push_back({Assignment::spins_from_bits(s, n), best, 1});
  }
  out.reads = out.samples.size();
  return out;
}

}  // namespace

Coeff SampleSet::min_energy() const { return best().energy; }

const Sample& SampleSet::best() const {
  if (samples.empty()) throw std::logic_error("empty sample set");
  return samples.front();
}

std::uint64_t SampleSet::ground_occurrences() const {
  if (samples.empty()) return 0;
  std::uint64_t n = 0;
  for (const auto& s : samples) {
    if (s.energy == samples.front().energy) n += s.occurrences;
  }
  return n;
}

SampleSet exhaustive_min(const MultilinearPoly& p, const ExhaustiveOptions& options) {
  return solve_exhaustive(compile(p), options);
}

SampleSet exhaustive_min(const IsingModel& m, const ExhaustiveOptions& options) {
  return solve_exhaustive(compile(m), options);
}

SampleSet anneal(const IsingModel& m, const AnnealParams& params) {
  if (params.reads == 0 || params.sweeps == 0) {
    throw std::invalid_argument("reads and sweeps must be positive");
  }
  if (m.convention() != Convention::kDirect) {
    throw std::invalid_argument("annealing expects a kDirect model");
  }
  if (!(params.beta_start > 0) || !(params.beta_end > 0)) {
    throw std::invalid_argument("inverse temperatures must be positive");
  }
  const std::size_t n = m.nvars();
  std::vector<Coeff> h(n, 0);
  std::vector<std::vector<std::pair<std::uint32_t, Coeff>>> adj(n);
  Coeff max_c = 0;
  Coeff min_c = 0;
  auto note = [&](Coeff v) {
    const Coeff a = v < 0 ? -v : v;
    max_c = std::max(max_c, a);
    if (a != 0 && (min_c == 0 || a < min_c)) min_c = a;
  };
  for (const auto& [i, v] : m.h()) {
    h[i] = v;
    note(v);
  }
  for (const auto& [ij, v] : m.J()) {
    adj[ij.first].push_back({ij.second, v});
    adj[ij.second].push_back({ij.first, v});
    note(v);
  }
  const double b0 = max_c > 0 ? params.beta_start / static_cast<double>(max_c) : 0.0;
  const double b1 = min_c > 0 ? params.beta_end / static_cast<double>(min_c) : 0.0;
  const double ratio =
      params.sweeps > 1 && b0 > 0 ? std::pow(b1 / b0, 1.0 / double(params.sweeps - 1)) : 1.0;

  std::vector<std::string> finals(params.reads);
  std::vector<Coeff> energies(params.reads);

  parallel_for(params.reads, resolve_threads(params.threads), [&](std::uint64_t read) {
    std::mt19937_64 rng(splitmix64(params.seed ^ splitmix64(read)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<int> s(n);
    for (auto& v : s) v = (rng() & 1) ? -1 : 1;
    std::vector<Coeff> field(h);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [j, v] : adj[i]) field[i] += v * s[j];
    }
    std::vector<std::uint32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
    double beta = b0;
    for (std::uint64_t sweep = 0; sweep < params.sweeps; ++sweep) {
      std::shuffle(order.begin(), order.end(), rng);
      for (std::uint32_t i : order) {
        const Coeff de = -2 * s[i] * field[i];
        if (de > 0 && unit(rng) >= std::exp(-beta * static_cast<double>(de))) continue;
        s[i] = -s[i];
        for (const auto& [j, v] : adj[i]) field[j] += 2 * v * s[i];
      }
      beta *= ratio;
    }
    Assignment a(s);
    energies[read] = energy(m, a);
    finals[read] = to_sign_string(s);
  });

  std::map<std::pair<Coeff, std::string>, std::uint64_t> counts;
  for (std::uint64_t r = 0; r < params.reads; ++r) ++counts[{energies[r], finals[r]}];

  SampleSet out;
  out.reads = params.reads;
  out.seed = params.seed;
  out.schedule = params;
  for (const auto& [key, occ] : counts) {
    std::vector<int> spins;
    spins.reserve(key.second.size());
    for (char c : key.second) spins.push_back(c == '-' ? -1 : 1);
    out.samples.push_back({Assignment(std::move(spins)), key.first, occ});
  }
  return out;
}

std::vector<HistogramBin> histogram(const SampleSet& s, std::size_t bins) {
  if (s.samples.empty()) throw std::invalid_argument("histogram of an empty sample set");
  if (bins == 0) throw std::invalid_argument("histogram needs at least one bin");
  Coeff lo = s.samples.front().energy;
  Coeff hi = lo;
  for (const auto& x : s.samples) {
    lo = std::min(lo, x.energy);
    hi = std::max(hi, x.energy);
  }
  const double width = static_cast<double>(hi - lo) / static_cast<double>(bins);
  std::vector<HistogramBin> out(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].lo = static_cast<double>(lo) + width * static_cast<double>(b);
    out[b].hi = b + 1 == bins ? static_cast<double>(hi) : out[b].lo + width;
  }
  for (const auto& x : s.samples) {
    std::size_t b = 0;
    if (hi > lo) {
      const long double pos = static_cast<long double>(x.energy - lo) * bins / (hi - lo);
      b = std::min<std::size_t>(bins - 1, static_cast<std::size_t>(pos));
    }
    out[b].count += x.occurrences;
  }
  return out;
}

void write_samples(std::ostream& out, const SampleSet& s) {
  for (const auto& x : s.samples) {
    out << x.energy << ' ' << x.occurrences << ' ' << to_sign_string(x.spins.values()) << '\n';
  }
}

void write_histogram(std::ostream& out, const std::vector<HistogramBin>& bins) {
  for (const auto& b : bins) out << b.lo << '\t' << b.hi << '\t' << b.count << '\n';
}

}  // namespace hsearch
