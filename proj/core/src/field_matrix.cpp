#include "altdiam/field_matrix.hpp"

#include <string>
#include <utility>

namespace altdiam {

FieldMatrix::FieldMatrix(PrimeField field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1)
    throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
  entries_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

FieldMatrix FieldMatrix::from_rows(PrimeField field,
                                   const std::vector<std::vector<long long>>& rows) {
  if (rows.empty())
    throw Error(ErrorCode::DimensionMismatch, "matrix needs at least one row");
  FieldMatrix m(field, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols())
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix row " + std::to_string(r));
    for (int c = 0; c < m.cols(); ++c) m.set(r, c, field.reduce(rows[r][c]));
  }
  return m;
}

FieldMatrix FieldMatrix::identity(PrimeField field, int size) {
  FieldMatrix m(field, size, size);
  for (int i = 0; i < size; ++i) m.set(i, i, 1);
  return m;
}

void FieldMatrix::row_swap(int r1, int r2) {
  if (r1 == r2) return;
  for (int c = 0; c < cols_; ++c)
    std::swap(entries_[r1 * cols_ + c], entries_[r2 * cols_ + c]);
}

void FieldMatrix::row_scale(int r, std::uint32_t factor) {
  for (int c = 0; c < cols_; ++c)
    entries_[r * cols_ + c] = field_.mul(entries_[r * cols_ + c], factor);
}

void FieldMatrix::row_addmul(int target, int source, std::uint32_t factor) {
  for (int c = 0; c < cols_; ++c)
    entries_[target * cols_ + c] = field_.add(
        entries_[target * cols_ + c], field_.mul(entries_[source * cols_ + c], factor));
}

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.field() != b.field())
    throw Error(ErrorCode::DimensionMismatch, "matrices over different fields");
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.cols()) + " columns times " + std::to_string(b.rows()) +
                    " rows");
  const PrimeField& f = a.field();
  FieldMatrix out(f, a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      const std::uint32_t arc = a.at(r, k);
      if (arc == 0) continue;
      for (int c = 0; c < b.cols(); ++c)
        out.set(r, c, f.add(out.at(r, c), f.mul(arc, b.at(k, c))));
    }
  return out;
}

int rank(const FieldMatrix& a) {
  FieldMatrix w = a;
  const PrimeField& f = a.field();
  int r = 0;
  for (int c = 0; c < w.cols() && r < w.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < w.rows(); ++i)
      if (w.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot == -1) continue;
    w.row_swap(r, pivot);
    const std::uint32_t scale = f.inv(w.at(r, c));
    w.row_scale(r, scale);
    for (int i = 0; i < w.rows(); ++i)
      if (i != r && w.at(i, c) != 0) w.row_addmul(i, r, f.neg(w.at(i, c)));
    ++r;
  }
  return r;
}

bool is_invertible(const FieldMatrix& a) {
  return a.rows() == a.cols() && rank(a) == a.rows();
}

FieldMatrix inverse(const FieldMatrix& a) {
  if (a.rows() != a.cols())
    throw Error(ErrorCode::NotInvertible, "non-square matrix");
  const PrimeField& f = a.field();
  FieldMatrix w = a;
  FieldMatrix inv = FieldMatrix::identity(f, a.rows());
  for (int c = 0; c < w.cols(); ++c) {
    int pivot = -1;
    for (int i = c; i < w.rows(); ++i)
      if (w.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot == -1) throw Error(ErrorCode::NotInvertible, "rank deficient at column " + std::to_string(c));
    w.row_swap(c, pivot);
    inv.row_swap(c, pivot);
    const std::uint32_t scale = f.inv(w.at(c, c));
    w.row_scale(c, scale);
    inv.row_scale(c, scale);
    for (int i = 0; i < w.rows(); ++i)
      if (i != c && w.at(i, c) != 0) {
        const std::uint32_t factor = f.neg(w.at(i, c));
        w.row_addmul(i, c, factor);
        inv.row_addmul(i, c, factor);
      }
  }
  return inv;
}

}  // namespace altdiam
