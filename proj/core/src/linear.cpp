#include "altdiam/linear.hpp"

#include <string>

namespace altdiam {

namespace {

void check_split(const FieldMatrix& a, BlockSplit split) {
  if (split.m < 1 || split.n < 1)
    throw Error(ErrorCode::DimensionMismatch, "both split blocks must be nonempty");
  if (a.rows() != a.cols() || a.rows() != split.m + split.n)
    throw Error(ErrorCode::DimensionMismatch,
                "matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    ", split needs " + std::to_string(split.m + split.n) + " square");
}

FieldMatrix block(const FieldMatrix& a, int r0, int c0, int rows, int cols) {
  FieldMatrix out(a.field(), rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out.set(r, c, a.at(r0 + r, c0 + c));
  return out;
}

bool is_zero_block(const FieldMatrix& a, int r0, int c0, int rows, int cols) {
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (a.at(r0 + r, c0 + c) != 0) return false;
  return true;
}

bool is_identity_block(const FieldMatrix& a, int r0, int c0, int size) {
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c)
      if (a.at(r0 + r, c0 + c) != (r == c ? 1u : 0u)) return false;
  return true;
}

}  // namespace

StageKind linear_stage_kind(const FieldMatrix& a, BlockSplit split) {
  check_split(a, split);
  const int m = split.m;
  const int n = split.n;
  const bool l_shape = is_zero_block(a, m, 0, n, m) && is_identity_block(a, m, m, n);
  const bool r_shape = is_identity_block(a, 0, 0, m) && is_zero_block(a, 0, m, m, n);
  if (l_shape && r_shape) return StageKind::Both;
  if (l_shape)
    return is_invertible(block(a, 0, 0, m, m)) ? StageKind::L : StageKind::Neither;
  if (r_shape)
    return is_invertible(block(a, m, m, n, n)) ? StageKind::R : StageKind::Neither;
  return StageKind::Neither;
}

LinearDecomposition decompose_linear(const FieldMatrix& a, BlockSplit split) {
  check_split(a, split);
  if (!is_invertible(a)) throw Error(ErrorCode::NotInvertible, "input matrix is singular");
  const PrimeField& f = a.field();
  const int m = split.m;
  const int n = split.n;
  const int s = m + n;

  FieldMatrix w = a;
  FieldMatrix e1 = FieldMatrix::identity(f, s);
  FieldMatrix e2 = FieldMatrix::identity(f, s);
  FieldMatrix e3 = FieldMatrix::identity(f, s);

  // Every operation is applied to the working matrix and mirrored into the
  // accumulator of the current phase.
  const auto swap_rows = [&](FieldMatrix& e, int r1, int r2) {
    w.row_swap(r1, r2);
    e.row_swap(r1, r2);
  };
  const auto scale_row = [&](FieldMatrix& e, int r, std::uint32_t v) {
    w.row_scale(r, v);
    e.row_scale(r, v);
  };
  const auto addmul_row = [&](FieldMatrix& e, int target, int source, std::uint32_t v) {
    w.row_addmul(target, source, v);
    e.row_addmul(target, source, v);
  };

  // Phase 1: identity on the top-left block, writing to top rows only.
  // Processed top rows hold exact unit prefixes over the first j columns, so
  // unprocessed top rows have zero prefixes.
  for (int j = 0; j < m; ++j) {
    int pivot_top = -1;
    for (int i = j; i < m; ++i)
      if (w.at(i, j) != 0) {
        pivot_top = i;
        break;
      }
    if (pivot_top != -1) {
      swap_rows(e1, j, pivot_top);
    } else {
      // Fetch a pivot from a bottom row. The value that survives at (j,j)
      // after the unit prefix of row j is restored is the reduced entry, so
      // pick the first bottom row whose reduced entry is nonzero.
      int pivot_bottom = -1;
      for (int i = m; i < s; ++i) {
        std::uint32_t reduced = w.at(i, j);
        for (int t = 0; t < j; ++t)
          reduced = f.sub(reduced, f.mul(w.at(i, t), w.at(t, j)));
        if (reduced != 0) {
          pivot_bottom = i;
          break;
        }
      }
      if (pivot_bottom == -1)
        throw Error(ErrorCode::ConsistencyViolation,
                    "no pivot for column " + std::to_string(j) +
                        " although the matrix is invertible");
      addmul_row(e1, j, pivot_bottom, 1);
      for (int t = 0; t < j; ++t)
        if (w.at(j, t) != 0) addmul_row(e1, j, t, f.neg(w.at(j, t)));
    }
    if (w.at(j, j) == 0)
      throw Error(ErrorCode::ConsistencyViolation,
                  "pivot vanished in column " + std::to_string(j));
    if (w.at(j, j) != 1) scale_row(e1, j, f.inv(w.at(j, j)));
    for (int i = 0; i < m; ++i)
      if (i != j && w.at(i, j) != 0) addmul_row(e1, i, j, f.neg(w.at(i, j)));
  }

  // Phase 2: clear the bottom-left block against the fresh unit top rows,
  // then identity on the bottom-right, writing to bottom rows only.
  for (int j = 0; j < m; ++j)
    for (int i = m; i < s; ++i)
      if (w.at(i, j) != 0) addmul_row(e2, i, j, f.neg(w.at(i, j)));
  for (int j = 0; j < n; ++j) {
    const int col = m + j;
    int pivot = -1;
    for (int i = m + j; i < s; ++i)
      if (w.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot == -1)
      throw Error(ErrorCode::ConsistencyViolation,
                  "bottom-right block singular at column " + std::to_string(j));
    swap_rows(e2, m + j, pivot);
    if (w.at(m + j, col) != 1) scale_row(e2, m + j, f.inv(w.at(m + j, col)));
    for (int i = m; i < s; ++i)
      if (i != m + j && w.at(i, col) != 0) addmul_row(e2, i, m + j, f.neg(w.at(i, col)));
  }

  // Phase 3: clear the top-right block against the unit bottom rows.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (w.at(i, m + j) != 0) addmul_row(e3, i, m + j, f.neg(w.at(i, m + j)));

  if (!(w == FieldMatrix::identity(f, s)))
    throw Error(ErrorCode::ConsistencyViolation, "elimination did not reach the identity");

  LinearDecomposition out{split, {}};
  out.stages.push_back(LinearStage{Letter::L, inverse(e1)});
  out.stages.push_back(LinearStage{Letter::R, inverse(e2)});
  out.stages.push_back(LinearStage{Letter::L, inverse(e3)});
  const StageKind expected[3] = {StageKind::L, StageKind::R, StageKind::L};
  for (int i = 0; i < 3; ++i) {
    const StageKind k = linear_stage_kind(out.stages[i].matrix, split);
    if (k != expected[i] && k != StageKind::Both)
      throw Error(ErrorCode::ConsistencyViolation,
                  "stage " + std::to_string(i) + " has kind " + stage_kind_name(k));
  }
  return out;
}

LinearDecomposition decompose_linear_rlr(const FieldMatrix& a, BlockSplit split) {
  check_split(a, split);
  const PrimeField& f = a.field();
  const int m = split.m;
  const int n = split.n;
  const int s = m + n;
  // Conjugate by the block swap sigma: leading index j -> n + j, trailing
  // index m + i -> i. The conjugated matrix splits as (n, m).
  std::vector<int> sigma(s);
  for (int j = 0; j < m; ++j) sigma[j] = n + j;
  for (int i = 0; i < n; ++i) sigma[m + i] = i;
  FieldMatrix conj(f, s, s);
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) conj.set(sigma[r], sigma[c], a.at(r, c));

  LinearDecomposition inner = decompose_linear(conj, BlockSplit{n, m});

  LinearDecomposition out{split, {}};
  for (const LinearStage& st : inner.stages) {
    FieldMatrix back(f, s, s);
    for (int r = 0; r < s; ++r)
      for (int c = 0; c < s; ++c) back.set(r, c, st.matrix.at(sigma[r], sigma[c]));
    out.stages.push_back(
        LinearStage{st.kind == Letter::L ? Letter::R : Letter::L, std::move(back)});
  }
  return out;
}

bool in_LR_linear_counterexample_check(const PrimeField& field) {
  if (field.p() > 5)
    throw Error(ErrorCode::FieldTooLarge,
                "exhaustive stage-pair enumeration is limited to p <= 5");
  const std::uint32_t p = field.p();
  FieldMatrix swap = FieldMatrix::from_rows(field, {{0, 1}, {1, 0}});
  // L-stages [[a,b],[0,1]] with a != 0; R-stages [[1,0],[c,d]] with d != 0.
  for (std::uint32_t a = 1; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 1; d < p; ++d) {
          FieldMatrix l = FieldMatrix::from_rows(field, {{a, b}, {0, 1}});
          FieldMatrix r = FieldMatrix::from_rows(field, {{1, 0}, {c, d}});
          if (multiply(l, r) == swap) return false;
        }
  return true;
}

}  // namespace altdiam
