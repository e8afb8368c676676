#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "altdiam/errors.hpp"

namespace altdiam {

/// A cell of an m x n grid: row a in {0..m-1}, column b in {0..n-1}.
struct Point {
  int a = 0;
  int b = 0;
  auto operator<=>(const Point&) const = default;
};

std::string to_string(const Point& p);

/// A permutation of the cells of an m x n grid (m, n >= 1).
/// Internally the cells are flattened in lexicographic order: (a,b) -> a*n+b.
class GridPermutation {
 public:
  /// Builds from explicit source -> image pairs. Every cell must appear
  /// exactly once as a source and once as an image.
  /// Throws RangeViolation / DuplicateSource / NotInjective / MissingSource,
  /// naming the offending point.
  static GridPermutation from_pairs(int m, int n,
                                    const std::vector<std::pair<Point, Point>>& pairs);

  /// Builds from a flat image table: table[a*n+b] = flat image of (a,b).
  static GridPermutation from_table(int m, int n, std::vector<int> table);

  static GridPermutation identity(int m, int n);

  /// The transposition-of-coordinates map (a,b) -> (b,a); requires m == n.
  static GridPermutation flip(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int cells() const { return m_ * n_; }

  int apply_flat(int idx) const { return table_[idx]; }
  Point apply(Point p) const;

  int flat(Point p) const { return p.a * n_ + p.b; }
  Point unflat(int idx) const { return Point{idx / n_, idx % n_}; }

  const std::vector<int>& table() const { return table_; }

  GridPermutation inverse() const;
  bool is_identity() const;

  bool operator==(const GridPermutation&) const = default;

 private:
  GridPermutation(int m, int n, std::vector<int> table)
      : m_(m), n_(n), table_(std::move(table)) {}

  int m_ = 1;
  int n_ = 1;
  std::vector<int> table_;
};

/// (f o g): apply g first, then f. Throws DimensionMismatch if grids differ.
GridPermutation compose(const GridPermutation& f, const GridPermutation& g);

}  // namespace altdiam
