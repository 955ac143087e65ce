#include "cyclift/cyclic_lift.hpp"

#include <cassert>
#include <map>
#include <utility>

#include "cyclift/errors.hpp"

namespace cyclift {

namespace {

// Letter budget for the sheet-walk oracle.
constexpr std::size_t kMaxWalkLetters = std::size_t{1} << 22;

int sheet_of(const Int& cumulative, long long n) {
  Int r = (cumulative % n + n) % n;  // 0..n-1
  return r.convert_to<int>() + 1;    // 1..n
}

}  // namespace

CyclicPresentation::CyclicPresentation(int m, long long n, std::vector<Word> words)
    : m_(m), n_(n), words_(std::move(words)) {
  if (m_ < 1) {
    throw InputError("cyclic presentation needs m >= 1");
  }
  if (n_ < 2) {
    throw InputError("cyclic presentation needs n >= 2");
  }
  if (static_cast<int>(words_.size()) != m_) {
    throw InputError("cyclic presentation needs exactly m words, got " +
                     std::to_string(words_.size()));
  }
  for (const Word& w : words_) {
    for (const auto& s : w.syllables()) {
      if (s.gen.kind != GenKind::X) {
        throw InputError("cyclic word contains non-x generator " + to_string(s.gen));
      }
      if (s.gen.i > m_ || s.gen.j > n_) {
        throw IndexOutOfRange("generator " + to_string(s.gen) + " outside x1.1..x" +
                              std::to_string(m_) + "." + std::to_string(n_));
      }
    }
  }
}

std::string to_text(const CyclicPresentation& cp) {
  std::string out = "cyclic m=" + std::to_string(cp.m()) + " n=" + std::to_string(cp.n()) + "\n";
  for (const Word& w : cp.words()) {
    const std::string s = to_string(w);
    out += "word";
    if (!s.empty()) {
      out += ' ' + s;
    }
    out += '\n';
  }
  return out;
}

KnotGroupPresentation hat_substitution(const KnotGroupPresentation& p,
                                       const Monodromy& mono) {
  const int g = p.genus();
  const long long n = mono.n;
  if (n < 2) {
    throw InputError("covering order n must be >= 2");
  }
  if (static_cast<int>(mono.x.size()) != g) {
    throw InvalidMonodromy(0, "vector length " + std::to_string(mono.x.size()) +
                                  " does not match genus " + std::to_string(g));
  }
  for (int i = 0; i < g; ++i) {
    if (mono.x[i] < 0 || mono.x[i] >= n) {
      throw InvalidMonodromy(i + 1, "entry " + std::to_string(mono.x[i]) +
                                        " outside 0.." + std::to_string(n - 1));
    }
  }

  const HomologyData h = abelianize(p);
  for (int i = 0; i < g; ++i) {
    Int acc = h.b[i];
    for (int j = 0; j < g; ++j) {
      acc += h.H(i, j) * mono.x[j];
    }
    if (acc % n != 0) {
      throw InvalidMonodromy(i + 1, "H x + b = " + acc.str() + " != 0 (mod " +
                                        std::to_string(n) + ")");
    }
  }

  std::map<Generator, Word> images;
  images[Generator::gamma()] = Word({Syllable{Generator::gamma(), 1}});
  for (int i = 1; i <= g; ++i) {
    std::vector<Syllable> img{Syllable{Generator::alpha(i), 1}};
    if (mono.x[i - 1] != 0) {
      img.push_back(Syllable{Generator::gamma(), mono.x[i - 1]});
    }
    images[Generator::alpha(i)] = Word(std::move(img));
  }

  std::vector<Word> rbar;
  rbar.reserve(g);
  for (const Word& r : p.relators()) {
    Word image = substitute(r, images);
    assert(exponent_sum(image, Generator::gamma()) % n == 0);
    rbar.push_back(std::move(image));
  }
  return KnotGroupPresentation(p.genus(), std::move(rbar), p.labels());
}

BlockForm block_normal_form(const Word& rbar, long long n) {
  if (n < 2) {
    throw InputError("covering order n must be >= 2");
  }
  const Int gamma_sum = exponent_sum(rbar, Generator::gamma());
  if (gamma_sum % n != 0) {
    throw GammaSumNotZeroModN("gamma exponent sum " + gamma_sum.str() +
                              " is not 0 mod " + std::to_string(n));
  }
  for (const auto& s : rbar.syllables()) {
    if (s.gen.kind == GenKind::X) {
      throw InputError("hat relator contains cyclic generator " + to_string(s.gen));
    }
  }

  BlockForm form;
  form.leading_gamma = 0;
  Word w = rbar;
  if (!w.empty() && w.syllables().front().gen.kind == GenKind::Gamma) {
    if (w.length() == 1) {
      // pure g-power; closure already checked above
      form.leading_gamma = w.syllables().front().exp;
      return form;
    }
    // conjugate by g^-c: the leading power moves to the tail
    const Int c = w.syllables().front().exp;
    form.leading_gamma = c;
    std::vector<Syllable> rotated(w.syllables().begin() + 1, w.syllables().end());
    rotated.push_back(Syllable{Generator::gamma(), c});
    w = Word(std::move(rotated));
  }

  for (const auto& s : w.syllables()) {
    if (s.gen.kind == GenKind::Alpha) {
      form.blocks.push_back(Block{s.gen.i, s.exp, Int(0)});
    } else {
      assert(!form.blocks.empty());  // leading gamma was rotated away
      form.blocks.back().eta += s.exp;
    }
  }
  return form;
}

LiftResult lift_words(const KnotGroupPresentation& p, const Monodromy& mono) {
  const KnotGroupPresentation hat = hat_substitution(p, mono);
  const long long n = mono.n;

  std::vector<Word> words;
  std::vector<LiftNote> notes;
  words.reserve(hat.relators().size());
  notes.reserve(hat.relators().size());

  for (const Word& rbar : hat.relators()) {
    const BlockForm form = block_normal_form(rbar, n);
    LiftNote note;
    note.rotated_gamma = form.leading_gamma;
    note.pure_gamma = form.blocks.empty() && form.leading_gamma != 0;

    std::vector<Syllable> raw;
    raw.reserve(form.blocks.size());
    Int eta_sum = 0;  // k_l = 1 + sum of preceding etas, mod n into 1..n
    for (const Block& blk : form.blocks) {
      const int sheet = sheet_of(eta_sum, n);
      raw.push_back(Syllable{Generator::x(blk.j, sheet), blk.epsilon});
      eta_sum += blk.eta;
    }
    words.push_back(Word(std::move(raw)));
    notes.push_back(std::move(note));
  }

  return LiftResult{CyclicPresentation(p.genus(), n, std::move(words)), std::move(notes)};
}

Word sheet_walk_lift(const Word& rbar, long long n) {
  if (n < 2) {
    throw InputError("covering order n must be >= 2");
  }
  const Int gamma_sum = exponent_sum(rbar, Generator::gamma());
  if (gamma_sum % n != 0) {
    throw GammaSumNotZeroModN("gamma exponent sum " + gamma_sum.str() +
                              " is not 0 mod " + std::to_string(n));
  }

  // Expand to single letters: +1 for a positive letter, -1 for negative.
  struct Letter {
    Generator gen;
    int sign;
  };
  std::vector<Letter> letters;
  Int total_letters = 0;
  for (const auto& s : rbar.syllables()) {
    total_letters += abs(s.exp);
  }
  if (total_letters > kMaxWalkLetters) {
    throw std::length_error("relator too long for the sheet-walk oracle");
  }
  letters.reserve(total_letters.convert_to<std::size_t>());
  bool has_alpha = false;
  for (const auto& s : rbar.syllables()) {
    if (s.gen.kind == GenKind::X) {
      throw InputError("hat relator contains cyclic generator " + to_string(s.gen));
    }
    has_alpha = has_alpha || s.gen.kind == GenKind::Alpha;
    const int sign = s.exp > 0 ? 1 : -1;
    const std::size_t count = abs(s.exp).convert_to<std::size_t>();
    for (std::size_t k = 0; k < count; ++k) {
      letters.push_back(Letter{s.gen, sign});
    }
  }
  if (!has_alpha) {
    return Word{};  // pure g-power (or empty); nothing to emit
  }
  // Rotate leading g letters to the end, one at a time (same conjugation
  // convention as block_normal_form).
  std::size_t start = 0;
  while (letters[start].gen.kind == GenKind::Gamma) {
    letters.push_back(letters[start]);
    ++start;
  }

  std::vector<Syllable> out;
  long long sheet = 1;
  for (std::size_t k = start; k < letters.size(); ++k) {
    const Letter& letter = letters[k];
    if (letter.gen.kind == GenKind::Gamma) {
      sheet = (sheet - 1 + letter.sign + n) % n + 1;
    } else {
      out.push_back(Syllable{Generator::x(letter.gen.i, static_cast<int>(sheet)),
                             Int(letter.sign)});
    }
  }
  if (sheet != 1) {
    throw InvariantViolation("sheet walk did not close at sheet 1");
  }
  return Word(std::move(out));
}

std::vector<Word> expand_relators(const CyclicPresentation& cp) {
  if (Int(cp.m()) * cp.n() > 1'000'000) {
    throw InputError("relator expansion limited to m*n <= 1000000");
  }
  std::vector<Word> relators;
  relators.reserve(static_cast<std::size_t>(cp.m()) * cp.n());
  for (const Word& w : cp.words()) {
    for (long long j = 0; j < cp.n(); ++j) {
      relators.push_back(theta_shift(w, j, static_cast<int>(cp.n())));
    }
  }
  return relators;
}

AbelianDecomposition covering_homology(const CyclicPresentation& cp) {
  if (Int(cp.m()) * cp.n() > 1024) {
    throw InputError("exact homology computation limited to m*n <= 1024");
  }
  const int m = cp.m();
  const int n = static_cast<int>(cp.n());
  const int size = m * n;
  IntMatrix exponents(size, size);
  const std::vector<Word> relators = expand_relators(cp);
  for (int row = 0; row < size; ++row) {
    for (const auto& s : relators[row].syllables()) {
      exponents(row, (s.gen.i - 1) * n + (s.gen.j - 1)) += s.exp;
    }
  }
  AbelianDecomposition dec;
  int nonzero = 0;
  for (const Int& v : invariant_factors(exponents, size)) {
    if (v == 0) {
      continue;
    }
    ++nonzero;
    if (v > 1) {
      dec.torsion.push_back(v);
    }
  }
  dec.free_rank = size - nonzero;
  return dec;
}

}  // namespace cyclift
