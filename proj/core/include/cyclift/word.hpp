#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cyclift {

/// Exact integer type used for word exponents and matrix entries.
using Int = boost::multiprecision::cpp_int;

/// Generator kinds, ordered Alpha < Gamma < X for canonical comparisons.
enum class GenKind : std::uint8_t { Alpha = 0, Gamma = 1, X = 2 };

/// A typed generator: a<i> (handlebody loop), g (meridian), or x<i>.<j>
/// (sheet copy of a<i> in an n-fold covering). Comparison is structural,
/// kind first, then indices.
struct Generator {
  GenKind kind = GenKind::Gamma;
  int i = 0;  // Alpha index, or first X index
  int j = 0;  // second X index (sheet), 1-based

  static Generator alpha(int index);
  static Generator gamma() noexcept { return Generator{GenKind::Gamma, 0, 0}; }
  static Generator x(int i, int j);

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

std::string to_string(const Generator& gen);

/// One run of a word: gen^exp with exp != 0 once reduced.
struct Syllable {
  Generator gen;
  Int exp;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A freely reduced word in syllable (run-length) form. The empty word is
/// the identity. Construction always reduces, so adjacent syllables carry
/// distinct generators and no exponent is zero. Immutable after
/// construction.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Syllable> raw);

  const std::vector<Syllable>& syllables() const noexcept { return syl_; }
  bool empty() const noexcept { return syl_.empty(); }
  std::size_t length() const noexcept { return syl_.size(); }

  Word inverse() const;

  friend bool operator==(const Word&, const Word&) = default;

private:
  struct reduced_tag {};
  Word(reduced_tag, std::vector<Syllable> s) : syl_(std::move(s)) {}
  friend Word free_reduce(std::vector<Syllable> raw);

  std::vector<Syllable> syl_;
};

/// Free-group normal form of a raw syllable list. Zero exponents are
/// absorbed. Idempotent.
Word free_reduce(std::vector<Syllable> raw);

/// Sum of exponents of the syllables of w carrying gen.
Int exponent_sum(const Word& w, const Generator& gen);

/// Concatenation followed by free reduction.
Word concat(const Word& a, const Word& b);

/// Homomorphic image of w under gen -> images[gen], freely reduced.
/// Respects inverses: the image of gen^-1 is the inverse of the image word.
/// Throws MissingImage if some generator of w has no entry.
Word substitute(const Word& w, const std::map<Generator, Word>& images);

/// The shift automorphism on X words: x<i>.<j> -> x<i>.<j+shift>, second
/// index kept in 1..n. Throws NonCyclicGenerator on Alpha or Gamma.
Word theta_shift(const Word& w, long long shift, int n);

/// Display syntax: syllables separated by single spaces, names a<i>, g,
/// x<i>.<j>, with the exponent suffix ^<int> omitted when +1. The empty
/// word prints as the empty string.
std::string to_string(const Word& w);

/// Alphabets accepted by parse_word.
enum class WordAlphabet {
  any,           // a<i>, g and x<i>.<j>
  presentation,  // a<i> and g only
  cyclic,        // x<i>.<j> only
};

/// Parses the display syntax back into a Word. line/column_offset locate
/// the text inside a larger document for error reporting.
Word parse_word(std::string_view text, WordAlphabet alphabet = WordAlphabet::any,
                int line = 1, int column_offset = 0);

}  // namespace cyclift
