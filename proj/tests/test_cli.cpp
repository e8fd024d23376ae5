#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "baric/cli.hpp"
#include "baric/document.hpp"
#include "fixtures.hpp"

using namespace baric;
using namespace fixtures;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  bool has(const std::string& line) const { return ("\n" + out).find("\n" + line + "\n") != std::string::npos; }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    path = std::filesystem::temp_directory_path() / ("baric-cli-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }

  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("kpow then check") {
  TempDir dir;
  const auto made = run({"kpow", "3", "--field", "q", "-o", dir.file("k3.json")});
  CHECK(made.code == 0);
  const auto checked = run({"check", dir.file("k3.json")});
  CHECK(checked.code == 0);
  CHECK(checked.has("valid=true"));
  CHECK(checked.has("associative=true"));
  CHECK(checked.has("commutative=false"));
  CHECK(checked.has("center_dim=0"));
  CHECK(checked.has("nil_kernel=true"));
}

TEST_CASE("verify example") {
  TempDir dir;
  const auto r = run({"verify", "--props", "P4.1", "--field", "p3", "--maxdim", "3", "--trials", "100", "--seed", "1",
                      "--out", dir.file("cx")});
  CHECK(r.code == 0);
  CHECK(r.has("P4.1 trials=100 failures=0 seed=1"));
  CHECK(r.has("suites=1 passed=1 failed=0"));
}

TEST_CASE("verify reports a failing suite with a counterexample path") {
  TempDir dir;
  const auto r = run({"verify", "--props", "P4.1", "--trials", "2", "--cap", "2", "--out", dir.file("cx")});
  CHECK(r.code == 1);
  CHECK(r.out.find("counterexample=" + dir.file("cx")) != std::string::npos);
  CHECK(std::filesystem::exists(dir.file("cx/P4.1-seed1.json")));
}

TEST_CASE("decompose D2 bowtie D2 over F_2") {
  TempDir dir;
  save(dual_numbers(F2), dir.file("d2.json"));
  CHECK(run({"bowtie", dir.file("d2.json"), dir.file("d2.json"), "-o", dir.file("dd.json")}).code == 0);
  const auto r = run({"decompose", dir.file("dd.json")});
  CHECK(r.code == 0);
  CHECK(r.has("result=indecomposable"));
  const auto bij = run({"bijection", dir.file("dd.json")});
  CHECK(bij.code == 0);
  CHECK(bij.has("factor_pairs=4"));
  CHECK(bij.has("verified=true"));
}

TEST_CASE("weights, idempotents and classification") {
  TempDir dir;
  save(componentwise(F2, 2), dir.file("c.json"));
  const auto w = run({"weights", dir.file("c.json")});
  CHECK(w.code == 0);
  CHECK(w.has("count=2"));
  save(componentwise(F2, 3), dir.file("c3.json"));
  const auto i = run({"idempotents", dir.file("c3.json")});
  CHECK(i.has("count=4"));
  const auto d = run({"decompose", dir.file("c3.json")});
  CHECK(d.has("result=decomposable"));
  CHECK(d.has("first_dim=1"));
  save(scalar_action_algebra(WeightFunctional(vec(Q, {"1", "0"}))), dir.file("s.json"));
  const auto c = run({"classify", dir.file("s.json")});
  CHECK(c.code == 0);
  CHECK(c.has("classified=true"));
  CHECK(c.has("verified=true"));
  CHECK(c.has("new_basis=[1,1]"));
  save(dual_numbers(Q), dir.file("d2q.json"));
  CHECK(run({"classify", dir.file("d2q.json")}).has("scalar_action=false"));
  const auto wq = run({"weights", dir.file("d2q.json")});
  CHECK(wq.has("mode=verify"));
  CHECK(wq.has("stored_valid=true"));
}

TEST_CASE("ideal and project") {
  TempDir dir;
  save(kk(Q), dir.file("kk.json"));
  const auto r = run({"ideal", dir.file("kk.json"), "--gens", "1,-1"});
  CHECK(r.code == 0);
  CHECK(r.has("sidedness=two_sided"));
  CHECK(r.has("in_kernel=true"));
  CHECK(r.has("ideal_dim=1"));
  const auto right = run({"ideal", dir.file("kk.json"), "--gens", "1,0", "--side", "right"});
  CHECK(right.has("sidedness=right"));
  write_file(dir.file("i.json"), R"({"vectors": [["1", "-1"]]})");
  const auto p = run({"project", dir.file("kk.json"), "--ideal", dir.file("i.json")});
  CHECK(p.code == 0);
  CHECK(p.has("left_dim=1"));
  CHECK(p.has("right_dim=1"));
  CHECK(p.has("input_sidedness=two_sided"));
}

TEST_CASE("exit codes") {
  TempDir dir;
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", dir.file("missing.json")}).code == 2);
  CHECK(run({"verify", "--props", "P0.0"}).code == 2);
  CHECK(run({"ideal", dir.file("x.json"), "--gens", "1", "--side", "left"}).code == 2);
  write_file(dir.file("bad.json"), R"({"field": {"kind": "rational"}, "dim": 2,
    "mul": [[0,0,0,"1"],[0,1,0,"1"],[1,0,1,"1"],[1,1,1,"1"]], "weight": ["1","0"]})");
  const auto bad = run({"check", dir.file("bad.json")});
  CHECK(bad.code == 1);
  CHECK(bad.has("valid=false"));
  CHECK(run({"decompose", dir.file("bad.json")}).code == 2);
  write_file(dir.file("dup.json"), R"({"field": {"kind": "rational"}, "dim": 1,
    "mul": [[0,0,0,"1"],[0,0,0,"1"]], "weight": ["1"]})");
  const auto dup = run({"check", dir.file("dup.json")});
  CHECK(dup.code == 2);
  CHECK(dup.err.find("DuplicateTriple") != std::string::npos);
  save(dual_numbers(F2), dir.file("d2.json"));
  CHECK(run({"project", dir.file("d2.json"), "--ideal", dir.file("i.json")}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("report lines are key=value") {
  TempDir dir;
  save(d2d2(F3), dir.file("dd.json"));
  const auto r = run({"check", dir.file("dd.json")});
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    CHECK_MESSAGE(line.find('=') != std::string::npos, line);
    CHECK(line.find(' ') == std::string::npos);
  }
}
