#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cyclift/int_linalg.hpp"
#include "cyclift/word.hpp"

namespace cyclift {

/// A genus-g knot group presentation: g relator words over a1..ag and g.
/// Empty relators are legal and preserved, so the presentation always
/// stays balanced.
class KnotGroupPresentation {
public:
  /// Validates: exactly g relators, every Alpha index in 1..g, no X
  /// generators, labels unique among the non-empty ones.
  KnotGroupPresentation(int genus, std::vector<Word> relators,
                        std::vector<std::string> labels = {});

  int genus() const noexcept { return genus_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  /// Optional per-relator labels; empty string when a relator is unnamed.
  const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
  int genus_;
  std::vector<Word> relators_;
  std::vector<std::string> labels_;
};

/// Abelianized data of a presentation. H is the g x g exponent-sum matrix
/// over the a-generators, b the gamma column, Hprime the augmented g x (g+1)
/// matrix. e and eprime are the invariant factors padded with zeros to
/// length g. d and torsion give the canonical decomposition
/// Z^d + Z_t1 + ... + Z_ts of the group presented by H.
struct HomologyData {
  int genus = 0;
  IntMatrix H{0, 0};
  std::vector<Int> b;
  IntMatrix Hprime{0, 0};
  std::vector<Int> e;
  std::vector<Int> eprime;
  int d = 0;
  std::vector<Int> torsion;
};

/// Free rank plus torsion coefficients (each > 1, in divisibility order).
struct AbelianDecomposition {
  int free_rank = 0;
  std::vector<Int> torsion;

  friend bool operator==(const AbelianDecomposition&, const AbelianDecomposition&) = default;
};

/// "Z^d + Z_t1 + ..." rendering; the trivial group prints as "0".
std::string to_string(const AbelianDecomposition& decomposition);

/// Parses the line-oriented presentation format:
///
///   genus <g>
///   rel [label:] <word>        (exactly g of these; <word> may be empty)
///
/// '#' starts a comment; blank lines are skipped.
KnotGroupPresentation parse_presentation(std::string_view text);

/// Inverse of parse_presentation up to comments and spacing:
/// parse(print(parse(t))) == parse(t).
std::string to_text(const KnotGroupPresentation& p);

/// Exponent-sum matrices of the relators and their invariant factors.
HomologyData abelianize(const KnotGroupPresentation& p);

/// Canonical decomposition of the group presented by the augmented matrix
/// Hprime on g+1 generators (the first homology of the knot complement).
AbelianDecomposition homology_of_complement(const KnotGroupPresentation& p);

}  // namespace cyclift
