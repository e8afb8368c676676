#include "altdiam/decompose.hpp"

#include <utility>

#include "altdiam/matching.hpp"
#include "altdiam/small_perm.hpp"

namespace altdiam {

namespace {

Decomposition decompose_rlr(const GridPermutation& p) {
  const int m = p.m();
  const int n = p.n();

  // X[a][b] = flat image of (a,b); row_of extracts the row value.
  std::vector<std::vector<int>> X(m, std::vector<int>(n));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) X[a][b] = p.apply_flat(a * n + b);
  const auto row_of = [n](int flat) { return flat / n; };
  const auto col_of = [n](int flat) { return flat % n; };

  // source_col[a][c] = original column of the entry now at (a,c); the first
  // stage is read off from it once all columns are placed.
  std::vector<std::vector<int>> source_col(m, identity_perm(n));

  std::vector<std::vector<int>> counts(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) ++counts[a][row_of(X[a][b])];
  MultiplicityMatrix N = MultiplicityMatrix::from_entries(std::move(counts));

  for (int c = 0; c < n; ++c) {
    const Matching match = hall_matching(N);
    for (int a = 0; a < m; ++a) {
      const int wanted = match.match_of_row[a];
      int j = c;
      while (row_of(X[a][j]) != wanted) ++j;  // exists: N[a][wanted] >= 1
      std::swap(X[a][c], X[a][j]);
      std::swap(source_col[a][c], source_col[a][j]);
    }
    N.decrement(match.match_of_row);
  }

  // Mid-run invariant: each column now holds every row value exactly once.
  for (int b = 0; b < n; ++b) {
    std::vector<char> seen(m, 0);
    for (int a = 0; a < m; ++a) {
      const int v = row_of(X[a][b]);
      if (seen[v])
        throw Error(ErrorCode::ConsistencyViolation,
                    "row value " + std::to_string(v) + " repeated in column " +
                        std::to_string(b) + " after the first stage");
      seen[v] = 1;
    }
  }

  Stage first{Letter::R, std::vector<std::vector<int>>(m, std::vector<int>(n))};
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < n; ++c) first.perms[a][source_col[a][c]] = c;

  // Sort rows within each column: the entry holding row value v moves to row v.
  Stage middle{Letter::L, std::vector<std::vector<int>>(n, std::vector<int>(m))};
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < m; ++a) middle.perms[b][a] = row_of(X[a][b]);
  std::vector<std::vector<int>> Y(m, std::vector<int>(n));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) Y[middle.perms[b][a]][b] = X[a][b];

  // Sort columns within each row: the entry holding column value b' moves there.
  Stage last{Letter::R, std::vector<std::vector<int>>(m, std::vector<int>(n))};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) last.perms[a][b] = col_of(Y[a][b]);

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b)
      if (Y[a][b] / n != a)
        throw Error(ErrorCode::ConsistencyViolation, "grid not sorted after middle stage");

  return Decomposition{{std::move(first), std::move(middle), std::move(last)}};
}

GridPermutation transposed(const GridPermutation& p) {
  const int m = p.m();
  const int n = p.n();
  std::vector<int> table(static_cast<std::size_t>(m) * n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) {
      const Point q = p.apply(Point{a, b});
      table[b * m + a] = q.b * m + q.a;
    }
  return GridPermutation::from_table(n, m, std::move(table));
}

}  // namespace

Decomposition decompose_two(const GridPermutation& p, StageOrder order) {
  if (order == StageOrder::RLR) return decompose_rlr(p);
  // Transposing swaps the two families, so run RLR across the diagonal and
  // flip each stage's kind back.
  Decomposition t = decompose_rlr(transposed(p));
  for (Stage& s : t.stages) s.kind = s.kind == Letter::L ? Letter::R : Letter::L;
  return t;
}

VerifyResult verify_decomposition(const Decomposition& d, const GridPermutation& p) {
  const int m = p.m();
  const int n = p.n();
  for (std::size_t i = 0; i + 1 < d.stages.size(); ++i)
    if (d.stages[i].kind == d.stages[i + 1].kind)
      return VerifyResult{false,
                          "stages " + std::to_string(i) + " and " + std::to_string(i + 1) +
                              " have equal kind " +
                              std::string(1, letter_char(d.stages[i].kind)),
                          std::nullopt};
  GridPermutation acc = GridPermutation::identity(m, n);
  for (std::size_t i = 0; i < d.stages.size(); ++i) {
    try {
      acc = compose(as_grid_permutation(d.stages[i], m, n), acc);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DimensionMismatch) throw;
      return VerifyResult{false, "stage " + std::to_string(i) + " invalid: " + e.what(),
                          std::nullopt};
    }
  }
  for (int idx = 0; idx < p.cells(); ++idx)
    if (acc.apply_flat(idx) != p.apply_flat(idx)) {
      const Point cell = p.unflat(idx);
      return VerifyResult{false,
                          "composition sends " + to_string(cell) + " to " +
                              to_string(p.unflat(acc.apply_flat(idx))) + ", target expects " +
                              to_string(p.unflat(p.apply_flat(idx))),
                          cell};
    }
  return VerifyResult{true, "", std::nullopt};
}

}  // namespace altdiam
