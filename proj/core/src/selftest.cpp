#include "cyclift/selftest.hpp"

#include <algorithm>

#include "cyclift/coverings.hpp"
#include "cyclift/cyclic_lift.hpp"
#include "cyclift/errors.hpp"
#include "cyclift/int_linalg.hpp"

namespace cyclift {

long long rand_range(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

KnotGroupPresentation random_presentation(std::mt19937_64& rng, int max_genus,
                                          int max_syllables, int max_exp) {
  const int g = static_cast<int>(rand_range(rng, 1, max_genus));
  std::vector<Word> relators;
  relators.reserve(g);
  for (int i = 0; i < g; ++i) {
    const int len = static_cast<int>(rand_range(rng, 0, max_syllables));
    std::vector<Syllable> raw;
    raw.reserve(len);
    for (int k = 0; k < len; ++k) {
      const int which = static_cast<int>(rand_range(rng, 0, g));  // g means gamma
      Generator gen = which == g ? Generator::gamma() : Generator::alpha(which + 1);
      Int exp = rand_range(rng, 1, max_exp);
      if (rand_range(rng, 0, 1) == 1) {
        exp = -exp;
      }
      raw.push_back(Syllable{gen, std::move(exp)});
    }
    relators.push_back(Word(std::move(raw)));
  }
  return KnotGroupPresentation(g, std::move(relators));
}

std::pair<KnotGroupPresentation, std::vector<long long>> force_solvable(
    std::mt19937_64& rng, const KnotGroupPresentation& p, long long n) {
  const int g = p.genus();
  std::vector<long long> x(g);
  for (int i = 0; i < g; ++i) {
    x[i] = rand_range(rng, 0, n - 1);
  }
  const HomologyData h = abelianize(p);
  std::vector<Word> relators = p.relators();
  for (int i = 0; i < g; ++i) {
    Int acc = h.b[i];
    for (int j = 0; j < g; ++j) {
      acc += h.H(i, j) * x[j];
    }
    Int defect = ((-acc) % n + n) % n;  // gamma power making row i vanish mod n
    if (defect != 0) {
      relators[i] = concat(relators[i], Word({Syllable{Generator::gamma(), defect}}));
    }
  }
  return {KnotGroupPresentation(g, std::move(relators), p.labels()), std::move(x)};
}

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int max_dim, int max_abs) {
  const int rows = static_cast<int>(rand_range(rng, 1, max_dim));
  const int cols = static_cast<int>(rand_range(rng, 1, max_dim));
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = rand_range(rng, -max_abs, max_abs);
    }
  }
  return m;
}

void record(SuiteOutcome& outcome, bool ok, const std::string& description) {
  if (ok) {
    ++outcome.passed;
    return;
  }
  ++outcome.failed;
  if (outcome.failures.size() < 8) {
    outcome.failures.push_back(description);
  }
}

Int gcd_of_entries(const IntMatrix& m) {
  Int g = 0;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      g = gcd(g, m(i, j));
    }
  }
  return g;
}

SuiteOutcome snf_suite(std::mt19937_64& rng, const SelftestOptions& options) {
  SuiteOutcome outcome{"snf", 0, 0, {}};
  for (int c = 0; c < options.cases_per_suite; ++c) {
    const IntMatrix m = random_matrix(rng, 5, 15);
    bool ok = true;
    std::string why;
    try {
      SnfResult r = smith_normal_form(m);
      if (options.corrupt_snf) {
        r.D(0, 0) += 1;
      }
      if (!(r.U * m * r.V == r.D)) {
        ok = false;
        why = "U*M*V != D";
      }
      const Int du = determinant(r.U);
      const Int dv = determinant(r.V);
      if (ok && !((du == 1 || du == -1) && (dv == 1 || dv == -1))) {
        ok = false;
        why = "transforms not unimodular";
      }
      const auto diag = r.diagonal();
      for (std::size_t i = 0; ok && i + 1 < diag.size(); ++i) {
        if (diag[i] < 0 || (diag[i] == 0 ? diag[i + 1] != 0 : diag[i + 1] % diag[i] != 0)) {
          ok = false;
          why = "divisibility chain broken";
        }
      }
      // first factor must be the gcd of all entries
      if (ok && !diag.empty() && diag[0] != gcd_of_entries(m)) {
        ok = false;
        why = "first factor != gcd of entries";
      }
    } catch (const Error& e) {
      ok = false;
      why = e.what();
    }
    record(outcome, ok, "snf case " + std::to_string(c) + " on " + to_string(m) +
                            (ok ? "" : ": " + why));
  }
  return outcome;
}

SuiteOutcome covering_suite(std::mt19937_64& rng, const SelftestOptions& options) {
  SuiteOutcome outcome{"coverings", 0, 0, {}};
  for (int c = 0; c < options.cases_per_suite; ++c) {
    const KnotGroupPresentation p = random_presentation(rng, 3, 10, 4);
    const long long n = rand_range(rng, 2, 8);
    bool ok = true;
    std::string why;
    try {
      const HomologyData h = abelianize(p);
      const auto brute = brute_force_monodromies(h, n);
      if (covering_exists(h, n) != !brute.empty()) {
        ok = false;
        why = "existence criterion disagrees with scan";
      }
      if (ok && covering_count(h, n) != Int(brute.size())) {
        ok = false;
        why = "count formula disagrees with scan";
      }
      if (ok) {
        const auto enumerated = enumerate_monodromies(h, n);
        if (enumerated.monodromies != brute) {
          ok = false;
          why = "enumeration disagrees with scan";
        }
      }
    } catch (const Error& e) {
      ok = false;
      why = e.what();
    }
    record(outcome, ok,
           "covering case " + std::to_string(c) + " (n=" + std::to_string(n) + ") on \"" +
               to_text(p) + "\"" + (ok ? "" : ": " + why));
  }
  return outcome;
}

SuiteOutcome lift_suite(std::mt19937_64& rng, const SelftestOptions& options) {
  SuiteOutcome outcome{"lift", 0, 0, {}};
  for (int c = 0; c < options.cases_per_suite; ++c) {
    const long long n = rand_range(rng, 2, 6);
    const auto [p, x] = force_solvable(rng, random_presentation(rng, 3, 8, 3), n);
    bool ok = true;
    std::string why;
    try {
      const Monodromy mono{n, x};
      const LiftResult lift = lift_words(p, mono);
      const KnotGroupPresentation hat = hat_substitution(p, mono);
      for (int i = 0; ok && i < p.genus(); ++i) {
        if (lift.presentation.words()[i] != sheet_walk_lift(hat.relators()[i], n)) {
          ok = false;
          why = "block lift differs from sheet walk on relator " + std::to_string(i + 1);
        }
      }
    } catch (const Error& e) {
      ok = false;
      why = e.what();
    }
    record(outcome, ok,
           "lift case " + std::to_string(c) + " (n=" + std::to_string(n) + ") on \"" +
               to_text(p) + "\"" + (ok ? "" : ": " + why));
  }
  return outcome;
}

}  // namespace

std::vector<SuiteOutcome> run_selftest(const SelftestOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<SuiteOutcome> outcomes;
  outcomes.push_back(snf_suite(rng, options));
  outcomes.push_back(covering_suite(rng, options));
  outcomes.push_back(lift_suite(rng, options));
  return outcomes;
}

bool all_passed(const std::vector<SuiteOutcome>& outcomes) {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const SuiteOutcome& s) { return s.failed == 0; });
}

}  // namespace cyclift
