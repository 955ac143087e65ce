#pragma once

#include <string>
#include <vector>

#include "cyclift/coverings.hpp"
#include "cyclift/presentation.hpp"

namespace cyclift {

/// One block of a hat-relator: a<j>^epsilon followed by g^eta.
struct Block {
  int j = 0;
  Int epsilon;  // != 0
  Int eta;

  friend bool operator==(const Block&, const Block&) = default;
};

/// A hat-relator parsed as alternating a-power / g-power blocks, starting
/// with an a block. A leading g-power is removed by cyclic rotation
/// (relator conjugation) and recorded in leading_gamma; a pure g-power
/// relator has no blocks and its whole exponent recorded there.
struct BlockForm {
  std::vector<Block> blocks;
  Int leading_gamma;

  std::size_t length() const noexcept { return blocks.size(); }
};

/// A cyclic presentation on m*n generators x<i>.<j>: m words whose full
/// relator set is the orbit under the shift x<i>.<j> -> x<i>.<j+1 mod n>.
/// Empty words are legal (they contribute trivial relators).
class CyclicPresentation {
public:
  CyclicPresentation(int m, long long n, std::vector<Word> words);

  int m() const noexcept { return m_; }
  long long n() const noexcept { return n_; }
  const std::vector<Word>& words() const noexcept { return words_; }

private:
  int m_;
  long long n_;
  std::vector<Word> words_;
};

/// Serialization: "cyclic m=<m> n=<n>" then one "word <w_i>" line per word.
std::string to_text(const CyclicPresentation& cp);

/// Rewrites the presentation on the hat generators a<i> := a<i> g^-x_i
/// under which the monodromy vanishes on every a. Each relator has a<i>
/// replaced by a<i> g^x_i and is freely reduced; the resulting gamma
/// exponent sums are all 0 mod n. Throws InvalidMonodromy when
/// H x + b != 0 (mod n).
KnotGroupPresentation hat_substitution(const KnotGroupPresentation& p,
                                       const Monodromy& mono);

/// Parses a hat-relator into block form. Requires the gamma exponent sum
/// to vanish mod n (GammaSumNotZeroModN otherwise).
BlockForm block_normal_form(const Word& rbar, long long n);

/// Per-relator conventions applied while lifting, surfaced rather than
/// silently applied.
struct LiftNote {
  Int rotated_gamma;        // leading g-power rotated away; 0 when none
  bool pure_gamma = false;  // relator was a pure g-power, lift is empty
};

/// A cyclic presentation of the covering group plus per-relator notes.
struct LiftResult {
  CyclicPresentation presentation;
  std::vector<LiftNote> notes;
};

/// The lifting algorithm: from the block form of each hat-relator build
///   w_i = x<j_1>.<1>^eps_1 x<j_2>.<k_2>^eps_2 ...
/// with k_l = 1 + eta_1 + ... + eta_(l-1) reduced into 1..n. The first
/// block always starts on sheet 1.
LiftResult lift_words(const KnotGroupPresentation& p, const Monodromy& mono);

/// Independent letter-level implementation of the same lift: walk the
/// relator from sheet 1, each g^+-1 stepping the sheet, each a-letter
/// emitting its x copy on the current sheet. Leading g letters are
/// cyclically rotated to the end first (same convention as lift_words).
/// The walk must close at sheet 1.
Word sheet_walk_lift(const Word& rbar, long long n);

/// The full m*n relator set, in (i, j) order: shift j-1 applied to w_i.
std::vector<Word> expand_relators(const CyclicPresentation& cp);

/// Abelianization of the cyclic presentation: canonical decomposition of
/// the group presented by the m*n square exponent-sum matrix.
AbelianDecomposition covering_homology(const CyclicPresentation& cp);

}  // namespace cyclift
