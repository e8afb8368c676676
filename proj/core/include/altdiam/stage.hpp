#pragma once

#include <string>
#include <vector>

#include "altdiam/grid.hpp"

namespace altdiam {

/// The two stage families: L permutes rows within each column (the column
/// projection is preserved), R permutes columns within each row.
enum class Letter { L, R };

inline char letter_char(Letter l) { return l == Letter::L ? 'L' : 'R'; }

/// Classification of a grid permutation relative to the two families.
/// Both is reported exactly for the identity.
enum class StageKind { L, R, Both, Neither };

const char* stage_kind_name(StageKind k);

/// One stage of a decomposition.
/// kind L: perms holds n permutations of {0..m-1}, one per column; the stage
/// maps (a,b) to (perms[b][a], b).
/// kind R: perms holds m permutations of {0..n-1}, one per row; the stage
/// maps (a,b) to (a, perms[a][b]).
struct Stage {
  Letter kind = Letter::L;
  std::vector<std::vector<int>> perms;
};

/// Realizes the stage on a concrete grid. Throws DimensionMismatch if the
/// perms shape is inconsistent with (m, n), NotInjective if an entry is not
/// a permutation.
GridPermutation as_grid_permutation(const Stage& s, int m, int n);

Stage identity_stage(Letter kind, int m, int n);

/// A word over {L, R}. The empty word denotes the trivial product {id}.
class AlternationWord {
 public:
  AlternationWord() = default;
  explicit AlternationWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Accepts strings like "RL", "lrl". "1" denotes the empty word.
  /// Throws InvalidInput on any other character.
  static AlternationWord parse(const std::string& text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  std::string str() const;

  /// Maximal runs of equal letters collapsed to single letters.
  AlternationWord collapsed() const;

 private:
  std::vector<Letter> letters_;
};

/// An ordered list of stages, first applied first: the represented
/// permutation is stages[k-1] o ... o stages[0]. Adjacent stages are
/// expected to differ in kind; verify_decomposition checks that.
struct Decomposition {
  std::vector<Stage> stages;

  /// Kind letters in application order, e.g. "RLR". Empty decomposition: "1".
  std::string order() const;
};

/// Composes the stages on an (m, n) grid.
GridPermutation composed(const Decomposition& d, int m, int n);

/// Classifies p: which stage families contain it.
StageKind stage_kind(const GridPermutation& p);

/// Membership of p in the product set G_w = G_{w1} . G_{w2} ... G_{wk}
/// (each factor ranges over its stage family; the first letter is the
/// outermost factor). Decidable for every word over {L, R}: words whose
/// collapsed form has length >= 3 yield the full symmetric group, and
/// shorter words have projection-based tests:
///   RL: for every column b, the map a -> row of p(a,b) must be a bijection;
///   LR: for every row a, the map b -> column of p(a,b) must be a bijection.
bool in_word(const GridPermutation& p, const AlternationWord& w);

}  // namespace altdiam
