#pragma once

#include <map>
#include <vector>

#include "altdiam/decompose.hpp"
#include "altdiam/grid.hpp"

namespace altdiam {

/// A permutation of N x N with finite support: the mapping lists every
/// non-fixed point (fixed points may be listed too); identity elsewhere.
class SparsePermutation {
 public:
  /// Validates bijectivity: sources distinct (DuplicateSource), images
  /// distinct (NotInjective), set of sources = set of images
  /// (MissingSource), coordinates nonnegative (RangeViolation).
  static SparsePermutation from_pairs(const std::vector<std::pair<Point, Point>>& pairs);

  static SparsePermutation identity() { return SparsePermutation({}); }

  const std::map<Point, Point>& support() const { return support_; }
  bool empty() const { return support_.empty(); }

  Point apply(Point p) const;

 private:
  explicit SparsePermutation(std::map<Point, Point> support)
      : support_(std::move(support)) {}

  std::map<Point, Point> support_;
};

/// A three-stage factorization over the smallest grid {0..m-1} x {0..n-1}
/// containing the support; all stages are the identity outside that grid.
/// Empty support yields m = n = 0 and zero stages.
struct SparseDecomposition {
  int m = 0;
  int n = 0;
  Decomposition decomposition;
};

SparseDecomposition decompose_finite_support(const SparsePermutation& p, StageOrder order);

/// Embeds p into its bounding grid (identity outside the support).
GridPermutation embed_in_grid(const SparsePermutation& p, int m, int n);

}  // namespace altdiam
