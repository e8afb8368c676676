#include "altdiam/grid.hpp"

#include "altdiam/small_perm.hpp"

namespace altdiam {

std::string to_string(const Point& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

GridPermutation GridPermutation::from_pairs(
    int m, int n, const std::vector<std::pair<Point, Point>>& pairs) {
  if (m < 1 || n < 1)
    throw Error(ErrorCode::RangeViolation, "grid dimensions must be positive");
  const int cells = m * n;
  std::vector<int> table(cells, -1);
  std::vector<char> image_seen(cells, 0);
  auto in_range = [&](const Point& p) {
    return p.a >= 0 && p.a < m && p.b >= 0 && p.b < n;
  };
  for (const auto& [src, img] : pairs) {
    if (!in_range(src))
      throw Error(ErrorCode::RangeViolation, "source " + to_string(src) +
                      " outside " + std::to_string(m) + "x" + std::to_string(n) + " grid");
    if (!in_range(img))
      throw Error(ErrorCode::RangeViolation, "image " + to_string(img) +
                      " outside " + std::to_string(m) + "x" + std::to_string(n) + " grid");
    const int s = src.a * n + src.b;
    const int t = img.a * n + img.b;
    if (table[s] != -1)
      throw Error(ErrorCode::DuplicateSource, "source " + to_string(src) + " listed twice");
    if (image_seen[t])
      throw Error(ErrorCode::NotInjective, "image " + to_string(img) + " hit twice");
    table[s] = t;
    image_seen[t] = 1;
  }
  for (int idx = 0; idx < cells; ++idx)
    if (table[idx] == -1)
      throw Error(ErrorCode::MissingSource,
                  "no pair for source " + to_string(Point{idx / n, idx % n}));
  return GridPermutation(m, n, std::move(table));
}

GridPermutation GridPermutation::from_table(int m, int n, std::vector<int> table) {
  if (m < 1 || n < 1)
    throw Error(ErrorCode::RangeViolation, "grid dimensions must be positive");
  if (static_cast<int>(table.size()) != m * n)
    throw Error(ErrorCode::DimensionMismatch,
                "table has " + std::to_string(table.size()) + " entries, expected " +
                    std::to_string(m * n));
  if (!is_perm_table(table))
    throw Error(ErrorCode::NotInjective, "table is not a permutation of the cells");
  return GridPermutation(m, n, std::move(table));
}

GridPermutation GridPermutation::identity(int m, int n) {
  if (m < 1 || n < 1)
    throw Error(ErrorCode::RangeViolation, "grid dimensions must be positive");
  return GridPermutation(m, n, identity_perm(m * n));
}

GridPermutation GridPermutation::flip(int m, int n) {
  if (m != n)
    throw Error(ErrorCode::DimensionMismatch,
                "(a,b) -> (b,a) is a self-map only for square grids");
  std::vector<int> table(m * n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = b * n + a;
  return GridPermutation(m, n, std::move(table));
}

Point GridPermutation::apply(Point p) const { return unflat(table_[flat(p)]); }

GridPermutation GridPermutation::inverse() const {
  return GridPermutation(m_, n_, invert_perm(table_));
}

bool GridPermutation::is_identity() const {
  for (int i = 0; i < cells(); ++i)
    if (table_[i] != i) return false;
  return true;
}

GridPermutation compose(const GridPermutation& f, const GridPermutation& g) {
  if (f.m() != g.m() || f.n() != g.n())
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(f.m()) + "x" + std::to_string(f.n()) + " composed with " +
                    std::to_string(g.m()) + "x" + std::to_string(g.n()));
  return GridPermutation::from_table(f.m(), f.n(), compose_perm(f.table(), g.table()));
}

}  // namespace altdiam
