#include "altdiam/sparse.hpp"

#include <algorithm>
#include <set>

namespace altdiam {

SparsePermutation SparsePermutation::from_pairs(
    const std::vector<std::pair<Point, Point>>& pairs) {
  std::map<Point, Point> support;
  std::set<Point> images;
  for (const auto& [src, img] : pairs) {
    if (src.a < 0 || src.b < 0)
      throw Error(ErrorCode::RangeViolation, "source " + to_string(src) + " has negative coordinate");
    if (img.a < 0 || img.b < 0)
      throw Error(ErrorCode::RangeViolation, "image " + to_string(img) + " has negative coordinate");
    if (support.contains(src))
      throw Error(ErrorCode::DuplicateSource, "source " + to_string(src) + " listed twice");
    if (images.contains(img))
      throw Error(ErrorCode::NotInjective, "image " + to_string(img) + " hit twice");
    support.emplace(src, img);
    images.insert(img);
  }
  // Sources and images must coincide as sets, else some point maps in but
  // never out (or vice versa) and the mapping is not a bijection of N x N.
  for (const Point& img : images)
    if (!support.contains(img))
      throw Error(ErrorCode::MissingSource,
                  "image " + to_string(img) + " never occurs as a source");
  return SparsePermutation(std::move(support));
}

Point SparsePermutation::apply(Point p) const {
  auto it = support_.find(p);
  return it == support_.end() ? p : it->second;
}

GridPermutation embed_in_grid(const SparsePermutation& p, int m, int n) {
  std::vector<int> table(static_cast<std::size_t>(m) * n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) {
      const Point q = p.apply(Point{a, b});
      if (q.a >= m || q.b >= n)
        throw Error(ErrorCode::RangeViolation,
                    "image " + to_string(q) + " outside the " + std::to_string(m) + "x" +
                        std::to_string(n) + " grid");
      table[a * n + b] = q.a * n + q.b;
    }
  return GridPermutation::from_table(m, n, std::move(table));
}

SparseDecomposition decompose_finite_support(const SparsePermutation& p, StageOrder order) {
  if (p.empty()) return SparseDecomposition{0, 0, Decomposition{}};
  int max_a = 0;
  int max_b = 0;
  for (const auto& [src, img] : p.support()) {
    max_a = std::max({max_a, src.a, img.a});
    max_b = std::max({max_b, src.b, img.b});
  }
  const int m = max_a + 1;
  const int n = max_b + 1;
  return SparseDecomposition{m, n, decompose_two(embed_in_grid(p, m, n), order)};
}

}  // namespace altdiam
