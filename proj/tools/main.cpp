// Command-line front end: parse flags into a RunConfig and dispatch.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclift/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "strongly-cyclic branched covering calculator for genus-g knot group presentations"};
  app.require_subcommand(1);

  cyclift::RunConfig cfg;
  std::string input_path;
  std::string format = "text";
  long long n = 0;
  std::vector<long long> mono;
  std::size_t mono_index = 0;

  const auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input) {
      cmd->add_option("-i,--input", input_path, "presentation file (default: stdin)");
    }
    cmd->add_option("-f,--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* analyze = app.add_subcommand(
      "analyze", "abelianize a presentation: H, b, invariant factors, homology");
  add_common(analyze, true);

  auto* coverings = app.add_subcommand(
      "coverings", "existence, count and enumeration of n-fold coverings");
  add_common(coverings, true);
  coverings->add_option("-n,--n", n, "covering order (>= 2)")->required();
  coverings->add_option("--cap", cfg.cap, "max monodromies to list")->capture_default_str();

  auto* lift = app.add_subcommand(
      "lift", "cyclic presentation of the covering group for one monodromy");
  add_common(lift, true);
  lift->add_option("-n,--n", n, "covering order (>= 2)")->required();
  auto* mono_opt =
      lift->add_option("-m,--monodromy", mono, "monodromy vector c1,c2,...")->delimiter(',');
  auto* index_opt = lift->add_option("--mono-index", mono_index,
                                     "pick the k-th enumerated monodromy (0-based)");
  lift->add_flag("--expand", cfg.expand, "emit the full m*n relator set");

  auto* selftest = app.add_subcommand("selftest", "run the built-in oracle suites");
  add_common(selftest, false);
  selftest->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  selftest->add_option("--cases", cfg.cases, "cases per suite")->capture_default_str();
  selftest->add_flag("--corrupt-snf", cfg.corrupt_snf)->group("");  // test hook, hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // flag errors are input errors
  }

  if (analyze->parsed()) {
    cfg.command = cyclift::RunConfig::Command::analyze;
  } else if (coverings->parsed()) {
    cfg.command = cyclift::RunConfig::Command::coverings;
    cfg.n = n;
  } else if (lift->parsed()) {
    cfg.command = cyclift::RunConfig::Command::lift;
    cfg.n = n;
    if (mono_opt->count() > 0) {
      cfg.monodromy = mono;
    }
    if (index_opt->count() > 0) {
      cfg.mono_index = mono_index;
    }
  } else {
    cfg.command = cyclift::RunConfig::Command::selftest;
  }
  if (!input_path.empty()) {
    cfg.input_path = input_path;
  }
  cfg.format = format == "json" ? cyclift::RunConfig::Format::json
                                : cyclift::RunConfig::Format::text;

  return cyclift::run_command(cfg, std::cout, std::cerr);
}
