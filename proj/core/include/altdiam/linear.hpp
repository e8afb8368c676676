#pragma once

#include <vector>

#include "altdiam/field_matrix.hpp"
#include "altdiam/stage.hpp"

namespace altdiam {

/// Block split of a square (m+n) x (m+n) matrix into a leading m-block and
/// trailing n-block (m, n >= 1).
struct BlockSplit {
  int m = 1;
  int n = 1;
};

/// The linear stage families relative to a split:
///   kind L: [[P, Q], [0, I]] with P invertible (acts on the leading block,
///           reads the trailing one);
///   kind R: [[I, 0], [R, S]] with S invertible.
/// Both is reported exactly for the identity; singular matrices are Neither.
struct LinearStage {
  Letter kind = Letter::L;
  FieldMatrix matrix;
};

StageKind linear_stage_kind(const FieldMatrix& a, BlockSplit split);

/// Exactly three invertible stages with stages[0] * stages[1] * stages[2]
/// == a (matrix product; the rightmost factor acts first on vectors).
/// Order LRL gives kinds L,R,L; order RLR gives kinds R,L,R.
struct LinearDecomposition {
  BlockSplit split;
  std::vector<LinearStage> stages;
};

/// Three-phase elimination, all pivot choices deterministic:
///   phase 1 turns the top-left block into the identity using row operations
///   that only write to the top m rows (a pivot may be fetched from a bottom
///   row by adding it, coefficient 1, to the top row being processed);
///   phase 2 clears the bottom-left block and turns the bottom-right into
///   the identity, writing only to bottom rows;
///   phase 3 clears the top-right block, writing only to top rows.
/// The inverses of the three accumulated elimination products are the
/// stages. Throws NotInvertible for singular input.
LinearDecomposition decompose_linear(const FieldMatrix& a, BlockSplit split);

/// Same factorization conjugated by the permutation that swaps the two
/// blocks, yielding kinds R,L,R for the original split.
LinearDecomposition decompose_linear_rlr(const FieldMatrix& a, BlockSplit split);

/// True iff the coordinate swap [[0,1],[1,0]] over F_p is NOT a product
/// (L-stage) * (R-stage) for the 1+1 split; checked by enumerating all stage
/// pairs. Throws FieldTooLarge for p > 5.
bool in_LR_linear_counterexample_check(const PrimeField& field);

}  // namespace altdiam
