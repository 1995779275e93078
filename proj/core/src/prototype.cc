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

#include "hsearch/prototype.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hsearch/errors.h"

namespace hsearch {

namespace {

struct Slot {
  int seq;
  std::size_t pos;
};

std::size_t seq_length(int n, int seq) { return static_cast<std::size_t>(seq == 3 ? n - 1 : n); }

bool is_filled(int n, int m, int seq, std::size_t pos) {
  const auto um = static_cast<std::size_t>(m);
  const std::size_t right = seq == 3 ? um - 1 : um;
  return pos < um || pos >= seq_length(n, seq) - right;
}

void require_shape(int n, int m) {
  if (n < 4 || n % 2 != 0 || m < 1 || 2 * m >= n) {
    throw std::invalid_argument("prototype shape requires even n >= 4 and 1 <= m < n/2");
  }
}

// Value forced by normalization, or 0 when the position stays free.
int normalized_value(int n, int seq, std::size_t pos) {
  const auto un = static_cast<std::size_t>(n);
  switch (seq) {
    case 0:
      if (pos == 0 || pos == 1 || pos == un - 2) return 1;
      if (pos == un - 1) return -1;
      return 0;
    case 1:
      if (pos == 0) return 1;
      if (pos == un - 1) return -1;
      return 0;
    case 2:
      return (pos == 0 || pos == un - 1) ? 1 : 0;
    default:
      return pos == 0 ? 1 : 0;
  }
}

struct Layout {
  PrototypeSpec base;
  std::vector<Slot> free;
  bool tie_y = false;  // y_{n-2} = -y_1
};

Layout make_layout(int n, int m, bool normalize) {
  Layout l{blank_prototype(n, m), {}, false};
  const auto un = static_cast<std::size_t>(n);
  l.tie_y = normalize && m >= 2;
  for (int s = 0; s < 4; ++s) {
    for (std::size_t pos = 0; pos < seq_length(n, s); ++pos) {
      if (!is_filled(n, m, s, pos)) continue;
      if (normalize) {
        if (const int v = normalized_value(n, s, pos); v != 0) {
          l.base.seqs[s][pos] = v;
          continue;
        }
        if (l.tie_y && s == 1 && pos == un - 2) continue;
      }
      l.free.push_back({s, pos});
    }
  }
  return l;
}

}  // namespace

bool well_formed(const PrototypeSpec& p) {
  if (p.n < 4 || p.n % 2 != 0 || p.m < 1 || 2 * p.m >= p.n) return false;
  for (int s = 0; s < 4; ++s) {
    const auto& v = p.seqs[s];
    if (v.size() != seq_length(p.n, s)) return false;
    for (std::size_t pos = 0; pos < v.size(); ++pos) {
      const bool filled = is_filled(p.n, p.m, s, pos);
      if (filled && v[pos] != 1 && v[pos] != -1) return false;
      if (!filled && v[pos] != 0) return false;
    }
  }
  return true;
}

PrototypeSpec blank_prototype(int n, int m) {
  require_shape(n, m);
  PrototypeSpec p;
  p.n = n;
  p.m = m;
  for (int s = 0; s < 4; ++s) p.seqs[s].assign(seq_length(n, s), 0);
  return p;
}

PrototypeSpec parse_prototype(std::string_view text) {
  while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  std::array<std::string_view, 4> parts;
  for (int s = 0; s < 4; ++s) {
    const auto slash = text.find('/');
    if ((slash == std::string_view::npos) != (s == 3)) {
      throw ParseError("prototype must have four '/'-separated parts");
    }
    parts[s] = text.substr(0, slash);
    text = s == 3 ? std::string_view{} : text.substr(slash + 1);
  }
  PrototypeSpec p;
  p.n = static_cast<int>(parts[0].size());
  p.m = static_cast<int>(std::min(parts[0].find('*'), parts[0].size()));
  for (int s = 0; s < 4; ++s) {
    for (char c : parts[s]) {
      if (c == '+') {
        p.seqs[s].push_back(1);
      } else if (c == '-') {
        p.seqs[s].push_back(-1);
      } else if (c == '*') {
        p.seqs[s].push_back(0);
      } else {
        throw ParseError(std::string("unexpected character '") + c + "' in prototype");
      }
    }
  }
  if (!well_formed(p)) throw ParseError("prototype has an invalid layout");
  return p;
}

std::string format_prototype(const PrototypeSpec& p) {
  std::string out;
  for (int s = 0; s < 4; ++s) {
    if (s > 0) out.push_back('/');
    for (int v : p.seqs[s]) out.push_back(v > 0 ? '+' : (v < 0 ? '-' : '*'));
  }
  return out;
}

bool prototype_filter(const PrototypeSpec& p) {
  if (!well_formed(p)) throw std::invalid_argument("malformed prototype");
  const TurynSequences s{p.seqs[0], p.seqs[1], p.seqs[2], p.seqs[3]};
  for (auto r = static_cast<std::size_t>(p.n - p.m); r < static_cast<std::size_t>(p.n); ++r) {
    const long sum = aperiodic_autocorrelation(s.x, r) + aperiodic_autocorrelation(s.y, r) +
                     2 * aperiodic_autocorrelation(s.z, r) +
                     2 * aperiodic_autocorrelation(s.w, r);
    if (sum != 0) return false;
  }
  return true;
}

std::size_t prototype_free_bits(int n, int m, bool normalize) {
  require_shape(n, m);
  return make_layout(n, m, normalize).free.size();
}

void for_each_prototype(int n, int m, bool normalize,
                        const std::function<bool(const PrototypeSpec&)>& visit,
                        PrototypeShard shard) {
  require_shape(n, m);
  if (shard.count == 0 || shard.index >= shard.count) {
    throw std::invalid_argument("shard index must be below shard count");
  }
  const Layout layout = make_layout(n, m, normalize);
  const std::size_t f = layout.free.size();
  if (f >= 63) throw std::invalid_argument("too many free prototype positions");
  const std::uint64_t total = std::uint64_t{1} << f;
  const std::uint64_t block = (total + shard.count - 1) / shard.count;
  const std::uint64_t lo = std::min(total, shard.index * block);
  const std::uint64_t hi = std::min(total, lo + block);
  const auto un = static_cast<std::size_t>(n);

  PrototypeSpec p = layout.base;
  for (std::uint64_t c = lo; c < hi; ++c) {
    for (std::size_t i = 0; i < f; ++i) {
      const bool minus = (c >> (f - 1 - i)) & 1;
      p.seqs[layout.free[i].seq][layout.free[i].pos] = minus ? -1 : 1;
    }
    if (layout.tie_y) p.seqs[1][un - 2] = -p.seqs[1][1];
    if (prototype_filter(p) && !visit(p)) return;
  }
}

std::vector<PrototypeSpec> enumerate_prototypes(int n, int m, bool normalize) {
  std::vector<PrototypeSpec> out;
  for_each_prototype(n, m, normalize, [&](const PrototypeSpec& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

TurynQuadruple extended_quadruple(const PrototypeSpec& p) {
  if (!well_formed(p)) throw std::invalid_argument("malformed prototype");
  std::array<SymbolicSequence, 4> seqs;
  VarId next = 0;
  for (int s = 0; s < 4; ++s) {
    for (int v : p.seqs[s]) {
      if (v == 0) {
        seqs[s].push_back(SymEntry::plus_var(next++));
      } else {
        seqs[s].push_back(v > 0 ? SymEntry::plus_one() : SymEntry::minus_one());
      }
    }
  }
  return {std::move(seqs[0]), std::move(seqs[1]), std::move(seqs[2]), std::move(seqs[3])};
}

MultilinearPoly extended_energy(const PrototypeSpec& p) {
  if (!well_formed(p)) throw std::invalid_argument("malformed prototype");
  if (!prototype_filter(p)) throw std::invalid_argument("prototype fails the high-lag filter");
  return tt_energy(extended_quadruple(p));
}

}  // namespace hsearch
