#pragma once

#include <cstdint>
#include <vector>

#include "altdiam/field.hpp"

namespace altdiam {

/// A dense rows x cols matrix over a prime field, entries row-major and
/// reduced to {0..p-1}.
class FieldMatrix {
 public:
  FieldMatrix(PrimeField field, int rows, int cols);
  static FieldMatrix from_rows(PrimeField field,
                               const std::vector<std::vector<long long>>& rows);
  static FieldMatrix identity(PrimeField field, int size);

  const PrimeField& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint32_t at(int r, int c) const { return entries_[r * cols_ + c]; }
  void set(int r, int c, std::uint32_t v) { entries_[r * cols_ + c] = v; }

  bool operator==(const FieldMatrix&) const = default;

  // Elementary row operations (in place).
  void row_swap(int r1, int r2);
  void row_scale(int r, std::uint32_t factor);
  /// row[target] += factor * row[source]
  void row_addmul(int target, int source, std::uint32_t factor);

 private:
  PrimeField field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint32_t> entries_;
};

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b);

/// Rank by Gaussian elimination on a working copy.
int rank(const FieldMatrix& a);

bool is_invertible(const FieldMatrix& a);

/// Throws NotInvertible for singular or non-square input.
FieldMatrix inverse(const FieldMatrix& a);

}  // namespace altdiam
