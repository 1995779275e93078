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

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.h"
#include "test_util.h"

namespace hsearch::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hsearch");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::map<std::string, std::string> manifest(const std::filesystem::path& dir) {
  std::map<std::string, std::string> kv;
  std::istringstream in(slurp(dir / "manifest.txt"));
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

TEST(Cli, BuildWilliamsonManifest) {
  const auto dir = testing::scratch_dir("build-w3");
  const Result r = run_cli({"build", "--method", "williamson", "--k", "3", "--out", dir});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto m = manifest(dir);
  EXPECT_EQ(m["delta"], "53952");
  EXPECT_EQ(m["logical"], "8");
  EXPECT_EQ(m["ancillas"], "4");
  EXPECT_EQ(m["ancilla.8"], "0,1");
  for (const char* f : {"ek_s.poly", "ek_q.poly", "e2_q.poly", "e2_s.poly", "model.ising",
                        "model_normalized.ising"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  EXPECT_EQ(load_polynomial(dir / "ek_s.poly").poly, testing::load_fixture("w3_ek_s.poly"));
  EXPECT_EQ(load_polynomial(dir / "e2_s.poly").poly, testing::load_fixture("w3_e2_s.poly"));
}

TEST(Cli, BuildTurynManifest) {
  const auto dir = testing::scratch_dir("build-t4");
  ASSERT_EQ(run_cli({"build", "--method", "turyn", "--n", "4", "--out", dir}).code, kOk);
  auto m = manifest(dir);
  EXPECT_EQ(m["logical"], "5");
  EXPECT_EQ(m["delta"], std::to_string(compute_delta(spin_to_boolean(turyn_energy(4)))));
}

TEST(Cli, QuadratizeReferenceTurynPolynomial) {
  const auto dir = testing::scratch_dir("quad-t4");
  const Result r = run_cli({"quadratize", testing::data_path("tt4_printed_ek_q.poly"),
                            "--pairs", "lexicographic", "--out", dir});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto m = manifest(dir);
  EXPECT_EQ(m["delta"], "1816");
  EXPECT_EQ(m["total"], "11");
  EXPECT_EQ(load_polynomial(dir / "e2_q.poly").poly,
            testing::load_fixture("tt4_printed_e2_q.poly"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({"build", "--method", "williamson", "--k", "4"}).code, kUsage);
  EXPECT_EQ(run_cli({"build", "--method", "turyn", "--n", "5"}).code, kUsage);
  EXPECT_EQ(run_cli({"build", "--method", "nonsense", "--k", "3"}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"prototypes", "--n", "8", "--m", "0"}).code, kUsage);
  EXPECT_EQ(run_cli({"prototypes", "--n", "8", "--m", "4"}).code, kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST(Cli, SearchWilliamsonIsReproducible) {
  const auto a = testing::scratch_dir("search-a");
  const auto b = testing::scratch_dir("search-b");
  const Result r = run_cli({"search", "--method", "williamson", "--k", "3", "--out", a});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "ORDER=12 HADAMARD=yes MAX_OFFDIAG=0\n");
  ASSERT_EQ(run_cli({"search", "--method", "williamson", "--k", "3", "--out", b}).code, kOk);
  for (const auto& e : std::filesystem::directory_iterator(a)) {
    EXPECT_EQ(slurp(e.path()), slurp(b / e.path().filename())) << e.path();
  }
  EXPECT_EQ(run_cli({"verify", a / "matrix.txt"}).out, "ORDER=12 HADAMARD=yes MAX_OFFDIAG=0\n");
}

TEST(Cli, AnnealSearchIsReproducible) {
  const auto a = testing::scratch_dir("anneal-a");
  const auto b = testing::scratch_dir("anneal-b");
  const std::vector<std::string> args = {"search", "--method", "williamson", "--k", "3",
                                         "--solver", "anneal", "--reads", "50",
                                         "--sweeps", "200", "--seed", "7"};
  auto with_out = [&](const std::filesystem::path& d) {
    auto v = args;
    v.push_back("--out");
    v.push_back(d);
    return v;
  };
  ASSERT_EQ(run_cli(with_out(a)).code, kOk);
  ASSERT_EQ(run_cli(with_out(b)).code, kOk);
  EXPECT_EQ(slurp(a / "samples.txt"), slurp(b / "samples.txt"));
  EXPECT_EQ(slurp(a / "histogram.tsv"), slurp(b / "histogram.tsv"));
  EXPECT_EQ(manifest(a)["solver"], "anneal");
}

TEST(Cli, SearchTurynN6) {
  const auto dir = testing::scratch_dir("search-t6");
  const Result r = run_cli({"search", "--method", "turyn", "--n", "6", "--out", dir});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "ORDER=68 HADAMARD=yes MAX_OFFDIAG=0\n");
  EXPECT_TRUE(std::filesystem::exists(dir / "matrix.pbm"));
  EXPECT_TRUE(std::filesystem::exists(dir / "indicator.pgm"));
}

TEST(Cli, SearchWithoutGroundStateWritesNoMatrix) {
  const auto dir = testing::scratch_dir("search-fail");
  const Result r = run_cli({"search", "--method", "williamson", "--k", "9", "--solver",
                            "anneal", "--reads", "1", "--sweeps", "1", "--out", dir});
  EXPECT_EQ(r.code, kNoSolution);
  EXPECT_FALSE(std::filesystem::exists(dir / "matrix.txt"));
  EXPECT_TRUE(std::filesystem::exists(dir / "samples.txt"));
  const auto keep = testing::scratch_dir("search-keep");
  const Result k = run_cli({"search", "--method", "williamson", "--k", "9", "--solver",
                            "anneal", "--reads", "1", "--sweeps", "1", "--keep-failures",
                            "--out", keep});
  EXPECT_EQ(k.code, kNoSolution);
  EXPECT_TRUE(std::filesystem::exists(keep / "matrix.txt"));
  EXPECT_NE(k.out.find("HADAMARD=no"), std::string::npos);
}

TEST(Cli, SearchExtendedTurynWithPrototype) {
  const auto dir = testing::scratch_dir("search-x8");
  const Result r = run_cli({"search", "--method", "extended-turyn", "--n", "8", "--prototype",
                            "++****+-/+-****+-/+-****-+/+-****+", "--out", dir});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "ORDER=92 HADAMARD=yes MAX_OFFDIAG=0\n");
  EXPECT_EQ(run_cli({"search", "--method", "extended-turyn", "--n", "8", "--prototype",
                     "+******+/+******+/+******+/+******", "--out", dir})
                .code,
            kUsage);
}

TEST(Cli, PrototypesFile) {
  const auto dir = testing::scratch_dir("protos");
  const Result r = run_cli({"prototypes", "--n", "8", "--m", "2", "--out", dir});
  ASSERT_EQ(r.code, kOk) << r.err;
  const std::string text = slurp(dir / "prototypes.txt");
  EXPECT_NE(text.find("++****+-/+-****+-/+-****-+/+-****+\n"), std::string::npos);
  const std::size_t count = enumerate_prototypes(8, 2).size();
  EXPECT_NE(text.find("# count " + std::to_string(count) + "\n"), std::string::npos);
  ASSERT_EQ(run_cli({"prototypes", "--n", "8", "--m", "3", "--out", dir}).code, kOk);
  EXPECT_NE(slurp(dir / "prototypes.txt")
                .find("# count " + std::to_string(enumerate_prototypes(8, 3).size())),
            std::string::npos);
}

TEST(Cli, VerifyFiles) {
  const auto dir = testing::scratch_dir("verify");
  {
    std::ofstream(dir / "h2.txt") << "++\n+-\n";
    std::ofstream(dir / "bad.txt") << "++\n+x\n";
    std::ofstream(dir / "ones.txt") << "++\n++\n";
  }
  Result r = run_cli({"verify", dir / "h2.txt", "--pgm", dir / "d.pgm"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("HADAMARD=yes"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir / "d.pgm"));
  EXPECT_EQ(run_cli({"verify", dir / "bad.txt"}).code, kIo);
  EXPECT_EQ(run_cli({"verify", dir / "missing.txt"}).code, kIo);
  r = run_cli({"verify", dir / "ones.txt"});
  EXPECT_EQ(r.code, kNoSolution);
  EXPECT_EQ(r.out, "ORDER=2 HADAMARD=no MAX_OFFDIAG=2\n");
}

TEST(Cli, SolvePolynomialAndIsing) {
  const auto dir = testing::scratch_dir("solve");
  Result r = run_cli({"solve", testing::data_path("w3_ek_s.poly"), "--out", dir});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.substr(0, 13), "MIN_ENERGY=0 ");
  {
    std::ofstream(dir / "pair.ising") << "J 0 1 0.5\nc 0.25\n";
  }
  r = run_cli({"solve", dir / "pair.ising", "--out", dir});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "MIN_ENERGY=-0.25 GROUND_READS=1 READS=1\n");
  r = run_cli({"solve", dir / "pair.ising", "--solver", "anneal", "--reads", "20", "--out", dir});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.substr(0, 16), "MIN_ENERGY=-0.25");
  EXPECT_EQ(run_cli({"solve", testing::data_path("w3_ek_s.poly"), "--solver", "anneal"}).code,
            kUsage);
}

}  // namespace
}  // namespace hsearch::cli
