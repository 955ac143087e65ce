#include "cyclift/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "cyclift/errors.hpp"

namespace cyclift {

KnotGroupPresentation::KnotGroupPresentation(int genus, std::vector<Word> relators,
                                             std::vector<std::string> labels)
    : genus_(genus), relators_(std::move(relators)), labels_(std::move(labels)) {
  if (genus_ < 1) {
    throw InputError("genus must be >= 1");
  }
  if (static_cast<int>(relators_.size()) != genus_) {
    throw GenusMismatch("expected " + std::to_string(genus_) + " relators, got " +
                        std::to_string(relators_.size()));
  }
  labels_.resize(relators_.size());
  std::set<std::string> seen;
  for (const auto& label : labels_) {
    if (!label.empty() && !seen.insert(label).second) {
      throw DuplicateRelatorLabel("relator label '" + label + "' used twice");
    }
  }
  for (std::size_t r = 0; r < relators_.size(); ++r) {
    for (const auto& s : relators_[r].syllables()) {
      if (s.gen.kind == GenKind::X) {
        throw InputError("relator " + std::to_string(r + 1) +
                         " contains cyclic generator " + to_string(s.gen));
      }
      if (s.gen.kind == GenKind::Alpha && s.gen.i > genus_) {
        throw IndexOutOfRange("generator a" + std::to_string(s.gen.i) +
                              " exceeds genus " + std::to_string(genus_));
      }
    }
  }
}

namespace {

struct Line {
  std::string text;  // comment stripped, not trimmed (columns must survive)
  int number;
};

std::vector<Line> statement_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++number;
    if (!raw.empty() && raw.back() == '\r') {
      raw.remove_suffix(1);
    }
    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    if (raw.find_first_not_of(" \t") != std::string_view::npos) {
      lines.push_back(Line{std::string(raw), number});
    }
    if (eol == std::string_view::npos) {
      break;
    }
    pos = eol + 1;
  }
  return lines;
}

// The keyword at the start of the line plus the rest; keyword column is 1-based.
struct Statement {
  std::string keyword;
  int keyword_col = 0;
  std::string rest;
  int rest_col = 0;
};

Statement split_statement(const Line& line) {
  Statement st;
  std::size_t i = line.text.find_first_not_of(" \t");
  st.keyword_col = static_cast<int>(i) + 1;
  std::size_t end = line.text.find_first_of(" \t", i);
  if (end == std::string::npos) {
    st.keyword = line.text.substr(i);
    st.rest_col = static_cast<int>(line.text.size()) + 1;
    return st;
  }
  st.keyword = line.text.substr(i, end - i);
  std::size_t rest = line.text.find_first_not_of(" \t", end);
  if (rest == std::string::npos) {
    st.rest_col = static_cast<int>(line.text.size()) + 1;
  } else {
    const std::size_t last = line.text.find_last_not_of(" \t");
    st.rest = line.text.substr(rest, last - rest + 1);
    st.rest_col = static_cast<int>(rest) + 1;
  }
  return st;
}

bool valid_label(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

}  // namespace

KnotGroupPresentation parse_presentation(std::string_view text) {
  const std::vector<Line> lines = statement_lines(text);
  if (lines.empty()) {
    throw SyntaxError(1, 1, "'genus <g>' header");
  }

  const Statement header = split_statement(lines[0]);
  if (header.keyword != "genus") {
    throw SyntaxError(lines[0].number, header.keyword_col, "'genus' keyword");
  }
  int genus = 0;
  {
    const std::string& g = header.rest;
    if (g.empty() || !std::all_of(g.begin(), g.end(), [](unsigned char c) {
          return std::isdigit(c);
        })) {
      throw SyntaxError(lines[0].number, header.rest_col, "positive integer genus");
    }
    if (g.size() > 6) {
      throw SyntaxError(lines[0].number, header.rest_col, "a smaller genus");
    }
    genus = std::stoi(g);
    if (genus < 1) {
      throw SyntaxError(lines[0].number, header.rest_col, "positive integer genus");
    }
  }

  std::vector<Word> relators;
  std::vector<std::string> labels;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Statement st = split_statement(lines[k]);
    if (st.keyword != "rel") {
      throw SyntaxError(lines[k].number, st.keyword_col, "'rel' statement");
    }
    if (static_cast<int>(relators.size()) == genus) {
      throw GenusMismatch("more than " + std::to_string(genus) + " relators (line " +
                          std::to_string(lines[k].number) + ")");
    }
    std::string word_text = st.rest;
    int word_col = st.rest_col;
    std::string label;
    const std::size_t colon = word_text.find(':');
    if (colon != std::string::npos) {
      const std::string candidate = word_text.substr(0, colon);
      if (!valid_label(candidate)) {
        throw SyntaxError(lines[k].number, st.rest_col, "relator label before ':'");
      }
      label = candidate;
      std::size_t after = word_text.find_first_not_of(" \t", colon + 1);
      if (after == std::string::npos) {
        word_text.clear();
        word_col += static_cast<int>(colon) + 1;
      } else {
        word_col += static_cast<int>(after);
        word_text = word_text.substr(after);
      }
    }
    relators.push_back(parse_word(word_text, WordAlphabet::presentation, lines[k].number,
                                  word_col - 1));
    labels.push_back(std::move(label));
  }

  if (static_cast<int>(relators.size()) != genus) {
    throw GenusMismatch("expected " + std::to_string(genus) + " relators, got " +
                        std::to_string(relators.size()));
  }
  return KnotGroupPresentation(genus, std::move(relators), std::move(labels));
}

std::string to_text(const KnotGroupPresentation& p) {
  std::string out = "genus " + std::to_string(p.genus()) + "\n";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    out += "rel";
    if (!p.labels()[i].empty()) {
      out += ' ' + p.labels()[i] + ':';
    }
    const std::string w = to_string(p.relators()[i]);
    if (!w.empty()) {
      out += ' ' + w;
    }
    out += '\n';
  }
  return out;
}

HomologyData abelianize(const KnotGroupPresentation& p) {
  const int g = p.genus();
  HomologyData h;
  h.genus = g;
  h.H = IntMatrix(g, g);
  h.Hprime = IntMatrix(g, g + 1);
  h.b.assign(g, Int(0));
  for (int i = 0; i < g; ++i) {
    const Word& r = p.relators()[i];
    for (int j = 0; j < g; ++j) {
      h.H(i, j) = exponent_sum(r, Generator::alpha(j + 1));
      h.Hprime(i, j) = h.H(i, j);
    }
    h.b[i] = exponent_sum(r, Generator::gamma());
    h.Hprime(i, g) = h.b[i];
  }
  h.e = invariant_factors(h.H, g);
  h.eprime = invariant_factors(h.Hprime, g);
  h.d = 0;
  for (const Int& v : h.e) {
    if (v == 0) {
      ++h.d;
    } else if (v > 1) {
      h.torsion.push_back(v);
    }
  }
  return h;
}

AbelianDecomposition homology_of_complement(const KnotGroupPresentation& p) {
  const int g = p.genus();
  const HomologyData h = abelianize(p);
  AbelianDecomposition dec;
  int nonzero = 0;
  for (const Int& v : invariant_factors(h.Hprime, std::min(g, g + 1))) {
    if (v == 0) {
      continue;
    }
    ++nonzero;
    if (v > 1) {
      dec.torsion.push_back(v);
    }
  }
  dec.free_rank = (g + 1) - nonzero;
  return dec;
}

std::string to_string(const AbelianDecomposition& decomposition) {
  std::string out;
  if (decomposition.free_rank == 1) {
    out = "Z";
  } else if (decomposition.free_rank > 1) {
    out = "Z^" + std::to_string(decomposition.free_rank);
  }
  for (const Int& t : decomposition.torsion) {
    if (!out.empty()) {
      out += " + ";
    }
    out += "Z_" + t.str();
  }
  return out.empty() ? "0" : out;
}

}  // namespace cyclift
