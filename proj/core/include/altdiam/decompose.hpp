#pragma once

#include <optional>
#include <string>

#include "altdiam/grid.hpp"
#include "altdiam/stage.hpp"

namespace altdiam {

enum class StageOrder { RLR, LRL };

inline const char* stage_order_name(StageOrder o) { return o == StageOrder::RLR ? "RLR" : "LRL"; }

/// Factors p into exactly three alternating stages, first applied first:
/// order RLR gives kinds R,L,R and order LRL gives kinds L,R,L, with
/// composed(result) == p. Deterministic for equal inputs.
///
/// The RLR construction works on the matrix picture X[a][b] = p(a,b):
///   1. columns are filled left to right; for each column a perfect matching
///      on the multiplicity matrix of the remaining columns picks one row
///      value per row, and the chosen occurrence (lowest column index not
///      yet frozen) is moved in by one transposition inside its row;
///   2. after that every column holds each row value exactly once (checked),
///      so one permutation per column sorts the rows;
///   3. one permutation per row then sorts the columns.
/// LRL runs RLR on the transposed grid and transposes the stages back.
Decomposition decompose_two(const GridPermutation& p, StageOrder order);

/// Outcome of checking a decomposition against a target permutation.
struct VerifyResult {
  bool ok = false;
  std::string reason;                 // empty when ok
  std::optional<Point> failing_cell;  // first cell (lexicographic) that composes wrong
};

/// True iff the stages alternate in kind, every stage is shape-valid, and
/// their composition equals p. Dimension disagreement between d and p is an
/// error (DimensionMismatch), not a false result.
VerifyResult verify_decomposition(const Decomposition& d, const GridPermutation& p);

}  // namespace altdiam
