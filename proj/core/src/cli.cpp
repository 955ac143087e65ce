#include "cyclift/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "cyclift/coverings.hpp"
#include "cyclift/cyclic_lift.hpp"
#include "cyclift/errors.hpp"
#include "cyclift/presentation.hpp"
#include "cyclift/selftest.hpp"

namespace cyclift {

namespace {

using ordered_json = nlohmann::ordered_json;

// Exact homology of the covering is only computed automatically while the
// m*n relator matrix stays small.
constexpr long long kAutoHomologyLimit = 256;

std::string read_input(const RunConfig& cfg) {
  if (cfg.inline_text) {
    return *cfg.inline_text;
  }
  if (cfg.input_path) {
    std::ifstream file(*cfg.input_path, std::ios::binary);
    if (!file) {
      throw InputError("cannot open input file '" + *cfg.input_path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(file), {});
  }
  return std::string(std::istreambuf_iterator<char>(std::cin), {});
}

long long require_n(const RunConfig& cfg) {
  if (!cfg.n) {
    throw InputError("this command needs --n <int>");
  }
  if (*cfg.n < 2) {
    throw InputError("covering order n must be >= 2");
  }
  return *cfg.n;
}

std::string vector_text(const std::vector<long long>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += std::to_string(v[i]);
  }
  return out + ")";
}

ordered_json strings(const std::vector<Int>& values) {
  ordered_json arr = ordered_json::array();
  for (const Int& v : values) {
    arr.push_back(v.str());
  }
  return arr;
}

ordered_json strings_ll(const std::vector<long long>& values) {
  ordered_json arr = ordered_json::array();
  for (long long v : values) {
    arr.push_back(std::to_string(v));
  }
  return arr;
}

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) {
      row.push_back(m(i, j).str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json decomposition_json(const AbelianDecomposition& dec) {
  ordered_json obj;
  obj["free_rank"] = std::to_string(dec.free_rank);
  obj["torsion"] = strings(dec.torsion);
  return obj;
}

std::string factors_text(const std::vector<Int>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += values[i].str();
  }
  return out + "]";
}

void emit(std::ostream& out, const RunConfig& cfg, const std::string& text,
          const ordered_json& json) {
  if (cfg.format == RunConfig::Format::json) {
    out << json.dump(2) << '\n';
  } else {
    out << text;
  }
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const KnotGroupPresentation p = parse_presentation(read_input(cfg));
  const HomologyData h = abelianize(p);
  const AbelianDecomposition ambient{h.d, h.torsion};
  const AbelianDecomposition complement = homology_of_complement(p);

  std::ostringstream text;
  text << "genus: " << h.genus << '\n';
  text << "H: " << to_string(h.H) << '\n';
  text << "b: " << factors_text(h.b) << '\n';
  text << "invariant factors H: " << factors_text(h.e) << '\n';
  text << "invariant factors H': " << factors_text(h.eprime) << '\n';
  text << "H1(N) = " << to_string(ambient) << '\n';
  text << "H1(N-K) = " << to_string(complement) << '\n';

  ordered_json json;
  json["genus"] = std::to_string(h.genus);
  json["H"] = matrix_json(h.H);
  json["b"] = strings(h.b);
  json["invariant_factors"] = strings(h.e);
  json["invariant_factors_augmented"] = strings(h.eprime);
  json["free_rank"] = std::to_string(ambient.free_rank);
  json["torsion"] = strings(ambient.torsion);
  json["complement"] = decomposition_json(complement);

  emit(out, cfg, text.str(), json);
  return 0;
}

int cmd_coverings(const RunConfig& cfg, std::ostream& out) {
  const long long n = require_n(cfg);
  const KnotGroupPresentation p = parse_presentation(read_input(cfg));
  const HomologyData h = abelianize(p);
  const CoveringReport report = covering_report(h, n, cfg.cap);

  std::ostringstream text;
  text << "n: " << n << '\n';
  text << "exists: " << (report.exists ? "true" : "false") << '\n';
  text << "count: " << report.count.str() << '\n';
  text << "unique: " << (unique_covering(h, n) ? "true" : "false") << '\n';
  if (!report.monodromies) {
    text << "monodromies: not materialized (count exceeds the enumeration guard)\n";
  } else if (report.monodromies->empty()) {
    text << "monodromies: none\n";
  } else {
    text << "monodromies (" << report.monodromies->size() << " of " << report.count.str()
         << "):\n";
    for (const Monodromy& m : *report.monodromies) {
      text << "  " << vector_text(m.x) << '\n';
    }
  }

  ordered_json json;
  json["n"] = std::to_string(n);
  json["exists"] = report.exists;
  json["count"] = report.count.str();
  json["unique"] = unique_covering(h, n);
  ordered_json monos = ordered_json::array();
  if (report.monodromies) {
    for (const Monodromy& m : *report.monodromies) {
      monos.push_back(strings_ll(m.x));
    }
  }
  json["monodromies"] = std::move(monos);
  json["truncated"] = report.truncated;

  emit(out, cfg, text.str(), json);
  return 0;
}

Monodromy select_monodromy(const RunConfig& cfg, const HomologyData& h, long long n) {
  if (cfg.monodromy && cfg.mono_index) {
    throw InputError("give either --monodromy or --mono-index, not both");
  }
  if (cfg.monodromy) {
    if (static_cast<int>(cfg.monodromy->size()) != h.genus) {
      throw InputError("monodromy length " + std::to_string(cfg.monodromy->size()) +
                       " does not match genus " + std::to_string(h.genus));
    }
    std::vector<long long> x = *cfg.monodromy;
    for (long long& v : x) {
      v = (v % n + n) % n;
    }
    return Monodromy{n, std::move(x)};
  }
  if (cfg.mono_index) {
    const MonodromyEnumeration enumeration =
        enumerate_monodromies(h, n, *cfg.mono_index + 1);
    if (*cfg.mono_index >= enumeration.monodromies.size()) {
      throw InputError("monodromy index " + std::to_string(*cfg.mono_index) +
                       " out of range; only " + enumeration.total.str() + " exist");
    }
    return enumeration.monodromies[*cfg.mono_index];
  }
  throw InputError("lift needs --monodromy <c1,c2,...> or --mono-index <k>");
}

int cmd_lift(const RunConfig& cfg, std::ostream& out) {
  const long long n = require_n(cfg);
  const KnotGroupPresentation p = parse_presentation(read_input(cfg));
  const HomologyData h = abelianize(p);
  const Monodromy mono = select_monodromy(cfg, h, n);
  const LiftResult lift = lift_words(p, mono);
  const CyclicPresentation& cp = lift.presentation;

  std::ostringstream text;
  text << "n: " << n << '\n';
  text << "monodromy: " << vector_text(mono.x) << '\n';
  text << to_text(cp);
  for (std::size_t i = 0; i < lift.notes.size(); ++i) {
    const LiftNote& note = lift.notes[i];
    if (note.pure_gamma) {
      text << "note: relator " << i + 1 << " is a pure g-power; lifted to the empty word\n";
    } else if (note.rotated_gamma != 0) {
      text << "note: relator " << i + 1 << " rotated by g^" << note.rotated_gamma.str()
           << " before lifting\n";
    }
  }
  ordered_json json;
  json["n"] = std::to_string(n);
  json["monodromy"] = strings_ll(mono.x);
  json["m"] = std::to_string(cp.m());
  ordered_json words = ordered_json::array();
  for (const Word& w : cp.words()) {
    words.push_back(to_string(w));
  }
  json["words"] = std::move(words);
  ordered_json notes = ordered_json::array();
  for (std::size_t i = 0; i < lift.notes.size(); ++i) {
    const LiftNote& note = lift.notes[i];
    if (!note.pure_gamma && note.rotated_gamma == 0) {
      continue;
    }
    ordered_json nj;
    nj["relator"] = std::to_string(i + 1);
    nj["rotated_gamma"] = note.rotated_gamma.str();
    nj["pure_gamma"] = note.pure_gamma;
    notes.push_back(std::move(nj));
  }
  json["notes"] = std::move(notes);

  if (cfg.expand) {
    const std::vector<Word> relators = expand_relators(cp);
    text << "relators:\n";
    ordered_json rel = ordered_json::array();
    std::size_t idx = 0;
    for (int i = 1; i <= cp.m(); ++i) {
      for (long long j = 1; j <= cp.n(); ++j, ++idx) {
        text << "  r" << i << "." << j << ": " << to_string(relators[idx]) << '\n';
        rel.push_back(to_string(relators[idx]));
      }
    }
    json["relators"] = std::move(rel);
  }

  if (Int(cp.m()) * cp.n() <= kAutoHomologyLimit) {
    const AbelianDecomposition dec = covering_homology(cp);
    text << "H1(M) = " << to_string(dec) << '\n';
    json["homology"] = decomposition_json(dec);
  } else {
    text << "H1(M): skipped (m*n > " << kAutoHomologyLimit << ")\n";
    json["homology"] = nullptr;
  }

  emit(out, cfg, text.str(), json);
  return 0;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  SelftestOptions options;
  options.seed = cfg.seed;
  options.cases_per_suite = cfg.cases;
  options.corrupt_snf = cfg.corrupt_snf;
  const std::vector<SuiteOutcome> outcomes = run_selftest(options);

  std::ostringstream text;
  text << "seed: " << options.seed << '\n';
  int total_passed = 0;
  int total_failed = 0;
  for (const SuiteOutcome& suite : outcomes) {
    text << "suite " << suite.name << ": " << suite.passed << " passed, " << suite.failed
         << " failed\n";
    for (const std::string& failure : suite.failures) {
      text << "  FAIL " << failure << '\n';
    }
    total_passed += suite.passed;
    total_failed += suite.failed;
  }
  if (total_failed == 0) {
    text << "selftest passed (" << total_passed << " checks)\n";
  } else {
    text << "selftest FAILED (" << total_failed << " of " << total_passed + total_failed
         << " checks failed)\n";
  }

  ordered_json json;
  json["seed"] = std::to_string(options.seed);
  ordered_json suites = ordered_json::array();
  for (const SuiteOutcome& suite : outcomes) {
    ordered_json sj;
    sj["name"] = suite.name;
    sj["passed"] = std::to_string(suite.passed);
    sj["failed"] = std::to_string(suite.failed);
    sj["failures"] = suite.failures;
    suites.push_back(std::move(sj));
  }
  json["suites"] = std::move(suites);
  json["passed"] = total_failed == 0;

  emit(out, cfg, text.str(), json);
  return total_failed == 0 ? 0 : 3;
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case RunConfig::Command::analyze:
        return cmd_analyze(cfg, out);
      case RunConfig::Command::coverings:
        return cmd_coverings(cfg, out);
      case RunConfig::Command::lift:
        return cmd_lift(cfg, out);
      case RunConfig::Command::selftest:
        return cmd_selftest(cfg, out);
    }
    err << "error: unknown command\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace cyclift
