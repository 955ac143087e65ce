#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cyclift/presentation.hpp"

namespace cyclift {

struct SelftestOptions {
  std::uint64_t seed = 42;
  int cases_per_suite = 200;
  /// Test hook: perturb each Smith form before checking it, so every SNF
  /// case must fail. Proves the suite actually looks at the results.
  bool corrupt_snf = false;
};

struct SuiteOutcome {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few case descriptions
};

/// Runs the three oracle suites (Smith form properties, covering counts
/// vs. exhaustive scan, block lift vs. sheet walk) on seeded random
/// inputs. Deterministic for a fixed seed.
std::vector<SuiteOutcome> run_selftest(const SelftestOptions& options);

bool all_passed(const std::vector<SuiteOutcome>& outcomes);

/// Uniform integer in [lo, hi] from the shared test generator. Hand-rolled
/// so that case lists are reproducible across standard libraries.
long long rand_range(std::mt19937_64& rng, long long lo, long long hi);

/// Random presentation with genus in 1..max_genus, relators up to
/// max_syllables syllables, exponents in [-max_exp, max_exp].
KnotGroupPresentation random_presentation(std::mt19937_64& rng, int max_genus,
                                          int max_syllables, int max_exp);

/// Appends gamma powers to the relators of p so that a chosen monodromy
/// vector becomes valid mod n; returns that vector. Used to generate
/// (presentation, monodromy) pairs that are valid by construction.
std::pair<KnotGroupPresentation, std::vector<long long>> force_solvable(
    std::mt19937_64& rng, const KnotGroupPresentation& p, long long n);

}  // namespace cyclift
