#include "cyclift/cli.hpp"

#include <doctest.h>

#include <sstream>
#include <string>

using namespace cyclift;

namespace {

const char* kTakahashi =
    "genus 2\n"
    "rel a2 a1^-2 g a2^-1 g^-1\n"
    "rel a1 g a2^3 a1^-1 g^-1\n";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(RunConfig cfg, const std::string& input = "") {
  if (!input.empty()) {
    cfg.inline_text = input;
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(cfg, out, err);
  return Result{code, out.str(), err.str()};
}

RunConfig base(RunConfig::Command cmd) {
  RunConfig cfg;
  cfg.command = cmd;
  return cfg;
}

}  // namespace

TEST_CASE("analyze text report") {
  const Result r = run(base(RunConfig::Command::analyze), kTakahashi);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "genus: 2\n"
        "H: [[-2, 0], [0, 3]]\n"
        "b: [0, 0]\n"
        "invariant factors H: [1, 6]\n"
        "invariant factors H': [1, 6]\n"
        "H1(N) = Z_6\n"
        "H1(N-K) = Z + Z_6\n");
}

TEST_CASE("analyze json is byte-stable") {
  RunConfig cfg = base(RunConfig::Command::analyze);
  cfg.format = RunConfig::Format::json;
  const Result first = run(cfg, kTakahashi);
  const Result second = run(cfg, kTakahashi);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("\"invariant_factors\": [\n    \"1\",\n    \"6\"\n  ]") !=
        std::string::npos);
  CHECK(first.out.find("\"free_rank\": \"0\"") != std::string::npos);
  // integers travel as decimal strings
  CHECK(first.out.find("\"-2\"") != std::string::npos);
}

TEST_CASE("analyze reports parse errors on exit code 2") {
  const Result r = run(base(RunConfig::Command::analyze), "genus 2\nrel a9\nrel\n");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("a9") != std::string::npos);

  const Result syntax = run(base(RunConfig::Command::analyze), "genus x\n");
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("line 1") != std::string::npos);
}

TEST_CASE("missing input file is an input error") {
  RunConfig cfg = base(RunConfig::Command::analyze);
  cfg.input_path = "/nonexistent/path.knot";
  const Result r = run(cfg);
  CHECK(r.code == 2);
}

TEST_CASE("coverings command") {
  RunConfig cfg = base(RunConfig::Command::coverings);
  cfg.n = 4;
  const Result core = run(cfg, "genus 2\nrel g\nrel\n");
  CHECK(core.code == 0);  // "no covering" is an answer, not an error
  CHECK(core.out.find("exists: false") != std::string::npos);
  CHECK(core.out.find("count: 0") != std::string::npos);
  CHECK(core.out.find("monodromies: none") != std::string::npos);

  cfg.n = 3;
  const Result trivial = run(cfg, "genus 2\nrel\nrel\n");
  CHECK(trivial.out.find("count: 9") != std::string::npos);
  CHECK(trivial.out.find("(2, 2)") != std::string::npos);

  cfg.cap = 4;
  const Result capped = run(cfg, "genus 2\nrel\nrel\n");
  CHECK(capped.out.find("monodromies (4 of 9):") != std::string::npos);

  cfg.n = std::nullopt;
  const Result missing = run(cfg, "genus 2\nrel\nrel\n");
  CHECK(missing.code == 2);

  cfg.n = 1;
  const Result bad_n = run(cfg, "genus 2\nrel\nrel\n");
  CHECK(bad_n.code == 2);
}

TEST_CASE("coverings beyond the enumeration guard still reports the count") {
  RunConfig cfg = base(RunConfig::Command::coverings);
  cfg.n = 100;  // 100^4 = 10^8 monodromies
  const Result r = run(cfg, "genus 4\nrel\nrel\nrel\nrel\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("count: 100000000") != std::string::npos);
  CHECK(r.out.find("not materialized") != std::string::npos);

  cfg.format = RunConfig::Format::json;
  const Result j = run(cfg, "genus 4\nrel\nrel\nrel\nrel\n");
  CHECK(j.out.find("\"count\": \"100000000\"") != std::string::npos);
  CHECK(j.out.find("\"truncated\": true") != std::string::npos);
}

TEST_CASE("lift command text output") {
  RunConfig cfg = base(RunConfig::Command::lift);
  cfg.n = 2;
  cfg.monodromy = std::vector<long long>{0, 0};
  cfg.expand = true;
  const Result r = run(cfg, kTakahashi);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "n: 2\n"
        "monodromy: (0, 0)\n"
        "cyclic m=2 n=2\n"
        "word x2.1 x1.1^-2 x2.2^-1\n"
        "word x1.1 x2.2^3 x1.2^-1\n"
        "relators:\n"
        "  r1.1: x2.1 x1.1^-2 x2.2^-1\n"
        "  r1.2: x2.2 x1.2^-2 x2.1^-1\n"
        "  r2.1: x1.1 x2.2^3 x1.2^-1\n"
        "  r2.2: x1.2 x2.1^3 x1.1^-1\n"
        "H1(M) = Z_2 + Z_6\n");
}

TEST_CASE("lift monodromy selection") {
  RunConfig cfg = base(RunConfig::Command::lift);
  cfg.n = 3;

  // no monodromy given
  CHECK(run(cfg, "genus 1\nrel\n").code == 2);

  // negative entries are normalized mod n
  cfg.monodromy = std::vector<long long>{-1};
  const Result norm = run(cfg, "genus 1\nrel\n");
  CHECK(norm.code == 0);
  CHECK(norm.out.find("monodromy: (2)") != std::string::npos);

  // selection by index follows the lexicographic enumeration
  cfg.monodromy = std::nullopt;
  cfg.mono_index = 2;
  const Result indexed = run(cfg, "genus 1\nrel\n");
  CHECK(indexed.code == 0);
  CHECK(indexed.out.find("monodromy: (2)") != std::string::npos);

  cfg.mono_index = 7;
  CHECK(run(cfg, "genus 1\nrel\n").code == 2);

  // both selectors at once is an error
  cfg.monodromy = std::vector<long long>{0};
  CHECK(run(cfg, "genus 1\nrel\n").code == 2);

  // invalid monodromy for the core knot
  RunConfig core = base(RunConfig::Command::lift);
  core.n = 4;
  core.monodromy = std::vector<long long>{1, 2};
  const Result bad = run(core, "genus 2\nrel g\nrel\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("row 1") != std::string::npos);
}

TEST_CASE("lift json output") {
  RunConfig cfg = base(RunConfig::Command::lift);
  cfg.n = 2;
  cfg.monodromy = std::vector<long long>{0, 0};
  cfg.format = RunConfig::Format::json;
  const Result r = run(cfg, kTakahashi);
  CHECK(r.code == 0);
  CHECK(r.out.find("\"words\": [\n    \"x2.1 x1.1^-2 x2.2^-1\",\n    \"x1.1 x2.2^3 x1.2^-1\"\n  ]") !=
        std::string::npos);
  CHECK(r.out.find("\"homology\"") != std::string::npos);
  const Result again = run(cfg, kTakahashi);
  CHECK(again.out == r.out);
}

TEST_CASE("selftest command") {
  RunConfig cfg = base(RunConfig::Command::selftest);
  cfg.cases = 20;
  const Result ok = run(cfg);
  CHECK(ok.code == 0);
  CHECK(ok.out.find("suite snf: 20 passed, 0 failed") != std::string::npos);
  CHECK(ok.out.find("selftest passed") != std::string::npos);

  // identical case list for a fixed seed
  const Result repeat = run(cfg);
  CHECK(repeat.out == ok.out);

  cfg.seed = 7;
  const Result other_seed = run(cfg);
  CHECK(other_seed.code == 0);

  cfg.corrupt_snf = true;
  const Result corrupt = run(cfg);
  CHECK(corrupt.code == 3);
  CHECK(corrupt.out.find("suite snf: 0 passed, 20 failed") != std::string::npos);
  CHECK(corrupt.out.find("selftest FAILED") != std::string::npos);
}
