#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cyclift {

/// Everything a command invocation needs, already parsed from flags.
struct RunConfig {
  enum class Command { analyze, coverings, lift, selftest };
  enum class Format { text, json };

  Command command = Command::analyze;
  std::optional<std::string> input_path;   // absent: read stdin
  std::optional<std::string> inline_text;  // takes precedence (tests)
  std::optional<long long> n;
  std::optional<std::vector<long long>> monodromy;
  std::optional<std::size_t> mono_index;  // pick from the enumeration instead
  Format format = Format::text;
  std::size_t cap = 1000;  // monodromy list cap for `coverings`
  bool expand = false;     // emit the full m*n relator set for `lift`

  // selftest knobs
  std::uint64_t seed = 42;
  int cases = 200;
  bool corrupt_snf = false;
};

/// Exit codes: 0 computed an answer (including "no covering exists"),
/// 2 bad input, 3 broken internal invariant.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace cyclift
