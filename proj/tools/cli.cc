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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace hsearch::cli {

namespace {

const char* to_string(SolverChoice s) {
  switch (s) {
    case SolverChoice::kExhaustive:
      return "exhaustive";
    case SolverChoice::kAnneal:
      return "anneal";
    default:
      return "auto";
  }
}

const char* to_string(PairSelection p) {
  return p == PairSelection::kMostFrequent ? "most-frequent" : "lexicographic";
}

bool is_williamson_family(Method m) {
  return m == Method::kWilliamson || m == Method::kBaumertHall;
}

// Flat key=value file; keys keep insertion order.
class Manifest {
 public:
  template <typename T>
  void set(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    entries_.emplace_back(key, s.str());
  }

  void save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    for (const auto& [k, v] : entries_) out << k << '=' << v << '\n';
    if (!out) throw IoError("failed writing " + path.string());
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write(out);
  if (!out) throw IoError("failed writing " + path.string());
}

std::size_t logical_count(const RunConfig& c, const std::optional<PrototypeSpec>& proto) {
  switch (c.method) {
    case Method::kWilliamson:
    case Method::kBaumertHall:
      return williamson_num_vars(c.size);
    case Method::kTuryn:
      return turyn_num_vars(c.size);
    case Method::kExtendedTuryn:
      return 4 * static_cast<std::size_t>(proto->n - 2 * proto->m);
  }
  return 0;
}

AnnealParams anneal_params(const RunConfig& c) {
  AnnealParams p;
  p.reads = c.reads;
  p.sweeps = c.sweeps;
  p.beta_start = c.beta_start;
  p.beta_end = c.beta_end;
  p.seed = c.seed;
  p.threads = c.threads;
  return p;
}

void add_problem_entries(Manifest& m, const Problem& p) {
  m.set("logical", p.logical);
  m.set("ancillas", p.e2_q.ancillas.entries.size());
  m.set("total", p.logical + p.e2_q.ancillas.entries.size());
  m.set("delta", p.e2_q.ancillas.delta);
  m.set("ek_q_abs_sum", abs_coeff_sum(p.ek_q));
  m.set("ek_s_terms", p.ek_s.size());
  m.set("ek_q_terms", p.ek_q.size());
  m.set("e2_q_terms", p.e2_q.poly.size());
  m.set("spin_scale", p.spin_scale);
  m.set("ising_fields", p.ising.h().size());
  m.set("ising_couplers", p.ising.J().size());
  m.set("ising_offset", p.ising.offset());
  for (const auto& e : p.e2_q.ancillas.entries) {
    m.set("ancilla." + std::to_string(e.ancilla),
          std::to_string(e.pair.first) + "," + std::to_string(e.pair.second));
  }
}

Problem quadratize_chain(MultilinearPoly ek_s, MultilinearPoly ek_q, PairSelection rule) {
  Problem p;
  p.ek_s = std::move(ek_s);
  p.ek_q = std::move(ek_q);
  if (degree(p.ek_q) > 2) {
    p.e2_q = quadratize(p.ek_q, rule);
  } else {
    p.e2_q = Quadratization{p.ek_q, AncillaMap{{}, 0}};
  }
  // q_i q_j = (1 - s_i)(1 - s_j) / 4 may leave quarters; scale up if so.
  try {
    p.e2_s = boolean_to_spin(p.e2_q.poly);
  } catch (const InternalError&) {
    p.spin_scale = 4;
    p.e2_s = boolean_to_spin(4 * p.e2_q.poly);
  }
  p.ising = from_quadratic(p.e2_s);
  return p;
}

std::optional<SignMatrix> assemble(const RunConfig& c, const std::optional<PrototypeSpec>& proto,
                                   const Assignment& spins) {
  switch (c.method) {
    case Method::kWilliamson:
      return williamson_array(circulant_blocks(williamson_first_rows(c.size, spins)));
    case Method::kBaumertHall:
      return baumert_hall_array(circulant_blocks(williamson_first_rows(c.size, spins)));
    case Method::kTuryn:
    case Method::kExtendedTuryn: {
      const TurynQuadruple q =
          c.method == Method::kTuryn ? turyn_quadruple(c.size) : extended_quadruple(*proto);
      const TurynSequences s = complete(q, spins);
      if (!is_turyn_type(s)) return std::nullopt;
      return turyn_hadamard(s);
    }
  }
  return std::nullopt;
}

Assignment truncate(const Assignment& a, std::size_t n) {
  std::vector<int> v = a.values();
  v.resize(std::min(n, v.size()));
  return Assignment(std::move(v));
}

struct Attempt {
  SampleSet samples;
  std::string solver;
  Coeff logical_energy = 0;
  std::optional<Assignment> ground;  // logical spins with E_k = 0
};

Attempt solve_one(const RunConfig& c, const std::optional<PrototypeSpec>& proto) {
  const MultilinearPoly ek_s = energy_for(c, proto);
  const std::size_t logical = logical_count(c, proto);
  SolverChoice choice = c.solver;
  if (choice == SolverChoice::kAuto) {
    choice = logical <= c.auto_threshold ? SolverChoice::kExhaustive : SolverChoice::kAnneal;
  }
  Attempt a;
  a.solver = to_string(choice);
  if (choice == SolverChoice::kExhaustive) {
    ExhaustiveOptions opt;
    opt.cap = c.cap;
    opt.threads = c.threads;
    a.samples = exhaustive_min(ek_s, opt);
  } else {
    const Problem p = build_problem(c, proto);
    a.samples = anneal(p.ising, anneal_params(c));
  }
  std::vector<int> spins = truncate(a.samples.best().spins, logical).values();
  spins.resize(logical, 1);
  const Assignment best(std::move(spins));
  a.logical_energy = evaluate(ek_s, best);
  if (a.logical_energy == 0) a.ground = best;
  return a;
}

std::string format_scaled(Coeff value, Coeff denominator) {
  if (denominator == 1) return std::to_string(value);
  const bool neg = value < 0;
  const std::uint64_t mag = neg ? 0 - static_cast<std::uint64_t>(value) : value;
  const auto den = static_cast<std::uint64_t>(denominator);
  std::string frac = std::to_string(mag % den);
  const std::size_t digits = std::to_string(den).size() - 1;
  frac.insert(0, digits - frac.size(), '0');
  return std::string(neg ? "-" : "") + std::to_string(mag / den) + "." + frac;
}

}  // namespace

Method parse_method(const std::string& s) {
  if (s == "williamson") return Method::kWilliamson;
  if (s == "baumert-hall") return Method::kBaumertHall;
  if (s == "turyn") return Method::kTuryn;
  if (s == "extended-turyn") return Method::kExtendedTuryn;
  throw UsageError("unknown method '" + s + "'");
}

const char* to_string(Method m) {
  switch (m) {
    case Method::kWilliamson:
      return "williamson";
    case Method::kBaumertHall:
      return "baumert-hall";
    case Method::kTuryn:
      return "turyn";
    case Method::kExtendedTuryn:
      return "extended-turyn";
  }
  return "?";
}

void validate(const RunConfig& c) {
  if (is_williamson_family(c.method)) {
    if (c.size < 3 || c.size % 2 == 0) {
      throw UsageError(std::string(to_string(c.method)) + " needs an odd --k >= 3, got " +
                       std::to_string(c.size));
    }
  } else {
    if (c.size < 4 || c.size % 2 != 0) {
      throw UsageError(std::string(to_string(c.method)) + " needs an even --n >= 4, got " +
                       std::to_string(c.size));
    }
    if (c.method == Method::kExtendedTuryn && !c.prototype && (c.m < 1 || 2 * c.m >= c.size)) {
      throw UsageError("--m must satisfy 1 <= m < n/2");
    }
  }
  if (c.reads == 0 || c.sweeps == 0) throw UsageError("--reads and --sweeps must be positive");
  if (c.bins == 0) throw UsageError("--bins must be positive");
  if (c.cap > 62) throw UsageError("--cap must be at most 62");
}

MultilinearPoly energy_for(const RunConfig& c, const std::optional<PrototypeSpec>& proto) {
  switch (c.method) {
    case Method::kWilliamson:
    case Method::kBaumertHall:
      return williamson_energy(c.size);
    case Method::kTuryn:
      return turyn_energy(c.size);
    case Method::kExtendedTuryn:
      if (!proto) throw UsageError("extended-turyn needs a prototype");
      return extended_energy(*proto);
  }
  throw UsageError("unknown method");
}

Problem build_problem(const RunConfig& c, const std::optional<PrototypeSpec>& proto) {
  MultilinearPoly ek_s = energy_for(c, proto);
  MultilinearPoly ek_q = spin_to_boolean(ek_s);
  Problem p = quadratize_chain(std::move(ek_s), std::move(ek_q), c.pairs);
  p.logical = logical_count(c, proto);
  p.prototype = proto;
  return p;
}

PrototypeSpec choose_prototype(const RunConfig& c) {
  if (c.prototype) {
    PrototypeSpec p;
    try {
      p = parse_prototype(*c.prototype);
    } catch (const ParseError& e) {
      throw UsageError(std::string("bad --prototype: ") + e.what());
    }
    if (p.n != c.size) throw UsageError("--prototype length does not match --n");
    if (!prototype_filter(p)) throw UsageError("--prototype fails the high-lag filter");
    return p;
  }
  std::optional<PrototypeSpec> first;
  for_each_prototype(c.size, c.m, true, [&](const PrototypeSpec& p) {
    first = p;
    return false;
  });
  if (!first) throw UsageError("no prototype passes the filter for this (n, m)");
  return *first;
}

int cmd_build(const RunConfig& c, std::ostream& out) {
  validate(c);
  std::optional<PrototypeSpec> proto;
  if (c.method == Method::kExtendedTuryn) proto = choose_prototype(c);
  const Problem p = build_problem(c, proto);

  ensure_dir(c.out);
  save_polynomial(c.out / "ek_s.poly", p.ek_s, p.logical);
  save_polynomial(c.out / "ek_q.poly", p.ek_q, p.logical);
  const std::size_t total = p.logical + p.e2_q.ancillas.entries.size();
  save_polynomial(c.out / "e2_q.poly", p.e2_q.poly, total);
  save_polynomial(c.out / "e2_s.poly", p.e2_s, total);
  save_ising(c.out / "model.ising", p.ising);
  if (p.ising.max_abs_coefficient() > 0) {
    save_ising(c.out / "model_normalized.ising", normalize_for_export(p.ising));
  }

  Manifest m;
  m.set("command", "build");
  m.set("method", to_string(c.method));
  m.set("size", c.size);
  if (proto) m.set("prototype", format_prototype(*proto));
  m.set("pair_selection", to_string(c.pairs));
  add_problem_entries(m, p);
  m.save(c.out / "manifest.txt");

  out << "method=" << to_string(c.method) << " size=" << c.size << " logical=" << p.logical
      << " ancillas=" << p.e2_q.ancillas.entries.size()
      << " delta=" << p.e2_q.ancillas.delta << '\n';
  return kOk;
}

int cmd_search(const RunConfig& c, std::ostream& out) {
  validate(c);
  std::vector<PrototypeSpec> candidates;
  if (c.method == Method::kExtendedTuryn) {
    if (c.prototype) {
      candidates.push_back(choose_prototype(c));
    } else {
      candidates = enumerate_prototypes(c.size, c.m);
      if (candidates.empty()) throw UsageError("no prototype passes the filter for this (n, m)");
    }
  }

  Attempt attempt;
  std::optional<PrototypeSpec> used;
  std::size_t tried = 0;
  if (candidates.empty()) {
    attempt = solve_one(c, std::nullopt);
  } else {
    for (const auto& p : candidates) {
      ++tried;
      used = p;
      attempt = solve_one(c, p);
      if (attempt.ground) break;
    }
  }

  ensure_dir(c.out);
  write_file(c.out / "samples.txt", [&](std::ostream& f) { write_samples(f, attempt.samples); });
  write_file(c.out / "histogram.tsv",
             [&](std::ostream& f) { write_histogram(f, histogram(attempt.samples, c.bins)); });

  Manifest m;
  m.set("command", "search");
  m.set("method", to_string(c.method));
  m.set("size", c.size);
  if (used) {
    m.set("prototype", format_prototype(*used));
    m.set("prototypes_tried", tried);
  }
  m.set("solver", attempt.solver);
  m.set("seed", c.seed);
  if (attempt.samples.schedule) {
    m.set("reads", c.reads);
    m.set("sweeps", c.sweeps);
    m.set("beta_start", c.beta_start);
    m.set("beta_end", c.beta_end);
  }
  m.set("min_energy", attempt.samples.min_energy());
  m.set("logical_energy", attempt.logical_energy);
  m.set("ground_reads", attempt.samples.ground_occurrences());

  std::optional<SignMatrix> h;
  if (attempt.ground) {
    h = assemble(c, used, *attempt.ground);
  } else if (c.keep_failures && c.method != Method::kTuryn &&
             c.method != Method::kExtendedTuryn) {
    std::vector<int> spins = attempt.samples.best().spins.values();
    spins.resize(logical_count(c, used), 1);
    h = assemble(c, used, Assignment(std::move(spins)));
  }

  int code = kNoSolution;
  if (h) {
    const VerifyReport rep = verify(*h);
    const std::string line = format_report(rep);
    m.set("order", rep.order);
    m.set("hadamard", rep.hadamard ? "yes" : "no");
    if (rep.hadamard || c.keep_failures) {
      save_sign_matrix(c.out / "matrix.txt", *h);
      save_pbm(c.out / "matrix.pbm", *h);
      save_pgm(c.out / "indicator.pgm", rep.indicator);
    }
    write_file(c.out / "report.txt", [&](std::ostream& f) { f << line << '\n'; });
    out << line << '\n';
    if (rep.hadamard) code = kOk;
  } else {
    m.set("hadamard", "no");
    out << "no ground state found (min energy " << attempt.logical_energy << ")\n";
  }
  m.save(c.out / "manifest.txt");
  return code;
}

int cmd_prototypes(const RunConfig& c, bool normalize, std::ostream& out) {
  if (c.size < 4 || c.size % 2 != 0) throw UsageError("--n must be even and >= 4");
  if (c.m < 1 || 2 * c.m >= c.size) throw UsageError("--m must satisfy 1 <= m < n/2");
  ensure_dir(c.out);
  const auto path = c.out / "prototypes.txt";
  std::uint64_t count = 0;
  write_file(path, [&](std::ostream& f) {
    for_each_prototype(c.size, c.m, normalize, [&](const PrototypeSpec& p) {
      f << format_prototype(p) << '\n';
      ++count;
      return true;
    });
    f << "# count " << count << '\n';
  });
  out << "count=" << count << " file=" << path.string() << '\n';
  return kOk;
}

int cmd_verify(const std::filesystem::path& matrix, const std::optional<std::filesystem::path>& pgm,
               std::ostream& out) {
  const SignMatrix h = load_sign_matrix(matrix);
  const VerifyReport rep = verify(h);
  if (pgm) save_pgm(*pgm, rep.indicator);
  out << format_report(rep) << '\n';
  if (!rep.order_admissible) out << "warning: order " << rep.order << " is not 1, 2 or 4k\n";
  return rep.hadamard ? kOk : kNoSolution;
}

int cmd_solve(const RunConfig& c, const std::filesystem::path& input, std::ostream& out) {
  if (c.reads == 0 || c.sweeps == 0) throw UsageError("--reads and --sweeps must be positive");
  if (c.bins == 0) throw UsageError("--bins must be positive");
  std::optional<IsingModel> model;
  std::optional<MultilinearPoly> poly;
  Coeff denominator = 1;
  std::size_t nvars = 0;
  if (input.extension() == ".ising") {
    ParsedIsing parsed = load_ising(input);
    denominator = parsed.denominator;
    nvars = parsed.model.nvars();
    model = std::move(parsed.model);
  } else {
    PolynomialFile f = load_polynomial(input);
    nvars = f.nvars;
    poly = std::move(f.poly);
  }
  SolverChoice choice = c.solver;
  if (choice == SolverChoice::kAuto) {
    choice = nvars <= c.auto_threshold ? SolverChoice::kExhaustive : SolverChoice::kAnneal;
  }
  SampleSet s;
  if (choice == SolverChoice::kExhaustive) {
    ExhaustiveOptions opt;
    opt.cap = c.cap;
    opt.threads = c.threads;
    if (nvars > opt.cap) {
      throw UsageError(std::to_string(nvars) + " variables exceed the exhaustive cap of " +
                       std::to_string(opt.cap));
    }
    if (model) {
      s = exhaustive_min(*model, opt);
    } else {
      // Pad to the declared variable count.
      MultilinearPoly p = *poly;
      s = exhaustive_min(p, opt);
      for (auto& sample : s.samples) {
        std::vector<int> v = sample.spins.values();
        v.resize(nvars, 1);
        sample.spins = Assignment(std::move(v));
      }
    }
  } else {
    if (!model) {
      if (degree(*poly) > 2 || poly->domain() != Domain::kSpin) {
        throw UsageError("anneal needs an Ising model or a quadratic spin polynomial");
      }
      model = from_quadratic(*poly);
    }
    s = anneal(*model, anneal_params(c));
  }
  ensure_dir(c.out);
  write_file(c.out / "samples.txt", [&](std::ostream& f) { write_samples(f, s); });
  write_file(c.out / "histogram.tsv",
             [&](std::ostream& f) { write_histogram(f, histogram(s, c.bins)); });
  Manifest m;
  m.set("command", "solve");
  m.set("input", input.filename().string());
  m.set("solver", to_string(choice));
  m.set("seed", c.seed);
  m.set("energy_denominator", denominator);
  m.set("min_energy", format_scaled(s.min_energy(), denominator));
  m.set("ground_reads", s.ground_occurrences());
  m.set("reads", s.reads);
  m.save(c.out / "manifest.txt");
  out << "MIN_ENERGY=" << format_scaled(s.min_energy(), denominator)
      << " GROUND_READS=" << s.ground_occurrences() << " READS=" << s.reads << '\n';
  return kOk;
}

int cmd_quadratize(const RunConfig& c, const std::filesystem::path& input, std::ostream& out) {
  PolynomialFile f = load_polynomial(input);
  MultilinearPoly ek_s(Domain::kSpin);
  MultilinearPoly ek_q(Domain::kBoolean);
  if (f.poly.domain() == Domain::kSpin) {
    ek_s = f.poly;
    ek_q = spin_to_boolean(f.poly);
  } else {
    ek_q = f.poly;
  }
  if (ek_q.empty()) throw UsageError("cannot quadratize an empty polynomial");
  Problem p = quadratize_chain(ek_s, ek_q, c.pairs);
  p.logical = std::max(f.nvars, ek_q.num_vars());
  const std::size_t total = p.logical + p.e2_q.ancillas.entries.size();

  ensure_dir(c.out);
  save_polynomial(c.out / "ek_q.poly", p.ek_q, p.logical);
  save_polynomial(c.out / "e2_q.poly", p.e2_q.poly, total);
  save_polynomial(c.out / "e2_s.poly", p.e2_s, total);
  save_ising(c.out / "model.ising", p.ising);
  Manifest m;
  m.set("command", "quadratize");
  m.set("input", input.filename().string());
  m.set("pair_selection", to_string(c.pairs));
  add_problem_entries(m, p);
  m.save(c.out / "manifest.txt");
  out << "logical=" << p.logical << " ancillas=" << p.e2_q.ancillas.entries.size()
      << " delta=" << p.e2_q.ancillas.delta << '\n';
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hadamard matrix search through spin-polynomial energies", "hsearch"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hsearch 0.1.0");

  RunConfig c;
  std::string out_dir = c.out.string();
  std::string method = "williamson";
  std::string solver = "auto";
  std::string pairs = "most-frequent";
  int k = 0;
  int n = 0;
  std::string prototype;
  bool no_normalize = false;
  std::string input;
  std::string pgm;

  app.add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--reads", c.reads, "Annealing reads")->capture_default_str();
  app.add_option("--sweeps", c.sweeps, "Sweeps per read")->capture_default_str();
  app.add_option("--cap", c.cap, "Largest variable count solved exhaustively")
      ->capture_default_str();
  app.add_option("--threads", c.threads, "Worker threads (0: all cores)")->capture_default_str();

  auto add_problem = [&](CLI::App* sub) {
    sub->add_option("--method", method, "williamson, baumert-hall, turyn, extended-turyn")
        ->check(CLI::IsMember({"williamson", "baumert-hall", "turyn", "extended-turyn"}))
        ->capture_default_str();
    sub->add_option("--k", k, "Block order (williamson, baumert-hall)");
    sub->add_option("--n", n, "Sequence length (turyn, extended-turyn)");
    sub->add_option("--m", c.m, "Filled entries per side (extended-turyn)")
        ->capture_default_str();
    sub->add_option("--prototype", prototype, "Prototype such as ++****+-/+-****+-/...");
    sub->add_option("--pairs", pairs, "Pair selection: most-frequent or lexicographic")
        ->check(CLI::IsMember({"most-frequent", "lexicographic"}))
        ->capture_default_str();
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--solver", solver, "auto, exhaustive or anneal")
        ->check(CLI::IsMember({"auto", "exhaustive", "anneal"}))
        ->capture_default_str();
    sub->add_option("--auto-threshold", c.auto_threshold,
                    "Largest logical count that auto solves exhaustively")
        ->capture_default_str();
    sub->add_option("--beta-start", c.beta_start,
                    "Initial inverse temperature, relative to max |coefficient|")
        ->capture_default_str();
    sub->add_option("--beta-end", c.beta_end,
                    "Final inverse temperature, relative to min nonzero |coefficient|")
        ->capture_default_str();
    sub->add_option("--bins", c.bins, "Histogram bins")->capture_default_str();
  };

  auto* build = app.add_subcommand("build", "Write the energy chain and Ising model");
  add_problem(build);
  auto* search = app.add_subcommand("search", "Solve, assemble and verify a Hadamard matrix");
  add_problem(search);
  add_solver(search);
  search->add_flag("--keep-failures", c.keep_failures, "Write matrices that fail verification");
  auto* solve = app.add_subcommand("solve", "Minimize a polynomial or Ising file");
  solve->add_option("input", input, "Polynomial (.poly) or Ising (.ising) file")->required();
  add_solver(solve);
  auto* protos = app.add_subcommand("prototypes", "Enumerate filtered extended-Turyn prototypes");
  protos->add_option("--n", n, "Sequence length")->required();
  protos->add_option("--m", c.m, "Filled entries per side")->required();
  protos->add_flag("--no-normalize", no_normalize, "Enumerate normalized positions too");
  auto* ver = app.add_subcommand("verify", "Check H'H = M I for a matrix file");
  ver->add_option("matrix", input, "Matrix file of +/- rows")->required();
  ver->add_option("--pgm", pgm, "Also write the indicator matrix as PGM");
  auto* quad = app.add_subcommand("quadratize", "Quadratize a polynomial file");
  quad->add_option("input", input, "Polynomial file")->required();
  quad->add_option("--pairs", pairs, "Pair selection: most-frequent or lexicographic")
      ->check(CLI::IsMember({"most-frequent", "lexicographic"}))
      ->capture_default_str();
  for (auto* sub : {build, search, solve, protos, ver, quad}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    c.out = out_dir;
    c.method = parse_method(method);
    c.size = is_williamson_family(c.method) ? k : n;
    if (!prototype.empty()) c.prototype = prototype;
    c.solver = solver == "exhaustive" ? SolverChoice::kExhaustive
               : solver == "anneal"   ? SolverChoice::kAnneal
                                      : SolverChoice::kAuto;
    c.pairs = pairs == "lexicographic" ? PairSelection::kLexicographicFirst
                                       : PairSelection::kMostFrequent;
    if (*build) return cmd_build(c, out);
    if (*search) return cmd_search(c, out);
    if (*solve) return cmd_solve(c, input, out);
    if (*protos) {
      c.size = n;
      return cmd_prototypes(c, !no_normalize, out);
    }
    if (*ver) {
      std::optional<std::filesystem::path> p;
      if (!pgm.empty()) p = pgm;
      return cmd_verify(input, p, out);
    }
    if (*quad) return cmd_quadratize(c, input, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kIo;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hsearch::cli
