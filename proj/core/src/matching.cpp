#include "altdiam/matching.hpp"

#include <algorithm>
#include <string>

namespace altdiam {

MultiplicityMatrix MultiplicityMatrix::from_entries(std::vector<std::vector<int>> entries) {
  const int size = static_cast<int>(entries.size());
  if (size == 0)
    throw Error(ErrorCode::NotBalanced, "multiplicity matrix must be nonempty");
  for (int a = 0; a < size; ++a)
    if (static_cast<int>(entries[a].size()) != size)
      throw Error(ErrorCode::NotBalanced,
                  "row " + std::to_string(a) + " has " + std::to_string(entries[a].size()) +
                      " entries in a " + std::to_string(size) + "-row matrix");
  for (int a = 0; a < size; ++a)
    for (int v = 0; v < size; ++v)
      if (entries[a][v] < 0)
        throw Error(ErrorCode::NotBalanced, "negative entry at (" + std::to_string(a) +
                                                "," + std::to_string(v) + ")");
  long long reg = 0;
  for (int v = 0; v < size; ++v) reg += entries[0][v];
  for (int a = 1; a < size; ++a) {
    long long s = 0;
    for (int v = 0; v < size; ++v) s += entries[a][v];
    if (s != reg)
      throw Error(ErrorCode::NotBalanced,
                  "row " + std::to_string(a) + " sums to " + std::to_string(s) +
                      ", row 0 sums to " + std::to_string(reg));
  }
  for (int v = 0; v < size; ++v) {
    long long s = 0;
    for (int a = 0; a < size; ++a) s += entries[a][v];
    if (s != reg)
      throw Error(ErrorCode::NotBalanced,
                  "column " + std::to_string(v) + " sums to " + std::to_string(s) +
                      ", rows sum to " + std::to_string(reg));
  }
  return MultiplicityMatrix(std::move(entries), static_cast<int>(reg));
}

void MultiplicityMatrix::decrement(const std::vector<int>& match) {
  if (static_cast<int>(match.size()) != size_)
    throw Error(ErrorCode::DimensionMismatch, "match size differs from matrix size");
  for (int a = 0; a < size_; ++a) {
    if (entries_[a][match[a]] <= 0)
      throw Error(ErrorCode::ConsistencyViolation,
                  "decrement of zero entry at (" + std::to_string(a) + "," +
                      std::to_string(match[a]) + ")");
    --entries_[a][match[a]];
  }
  --regularity_;
}

namespace {

struct Searcher {
  const std::vector<std::vector<int>>& adj;
  int cols;
  std::vector<int> owner_of_col;   // -1 while free
  std::vector<char> visited;

  /// Augmenting search from `row`. Free columns are tried first, lowest
  /// index first; only then do we displace current owners.
  bool augment(int row) {
    for (int b = 0; b < cols; ++b)
      if (adj[row][b] && !visited[b] && owner_of_col[b] == -1) {
        visited[b] = 1;
        owner_of_col[b] = row;
        return true;
      }
    for (int b = 0; b < cols; ++b)
      if (adj[row][b] && !visited[b]) {
        visited[b] = 1;
        if (augment(owner_of_col[b])) {
          owner_of_col[b] = row;
          return true;
        }
      }
    return false;
  }
};

}  // namespace

BipartiteResult bipartite_row_matching(const std::vector<std::vector<int>>& adj) {
  const int rows = static_cast<int>(adj.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(adj[0].size());
  Searcher s{adj, cols, std::vector<int>(cols, -1), std::vector<char>(cols, 0)};
  BipartiteResult result;
  result.match_of_row.assign(rows, -1);
  for (int row = 0; row < rows; ++row) {
    std::fill(s.visited.begin(), s.visited.end(), 0);
    if (!s.augment(row)) {
      // Every column reachable from `row` is visited and owned, so the
      // start row plus the owners of the visited columns form a violator.
      result.violator_rows.push_back(row);
      for (int b = 0; b < cols; ++b)
        if (s.visited[b]) result.violator_rows.push_back(s.owner_of_col[b]);
      std::sort(result.violator_rows.begin(), result.violator_rows.end());
      return result;
    }
  }
  for (int b = 0; b < cols; ++b)
    if (s.owner_of_col[b] != -1) result.match_of_row[s.owner_of_col[b]] = b;
  result.perfect = rows > 0 &&
                   std::none_of(result.match_of_row.begin(), result.match_of_row.end(),
                                [](int b) { return b == -1; });
  return result;
}

MultiplicityMatrix multiplicity_matrix(const std::vector<std::vector<int>>& proj) {
  const int m = static_cast<int>(proj.size());
  if (m == 0) throw Error(ErrorCode::NotBalanced, "projection must be nonempty");
  const int n = static_cast<int>(proj[0].size());
  std::vector<long long> occurrences(m, 0);
  std::vector<std::vector<int>> entries(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a) {
    if (static_cast<int>(proj[a].size()) != n)
      throw Error(ErrorCode::DimensionMismatch, "ragged projection row " + std::to_string(a));
    for (int j = 0; j < n; ++j) {
      const int v = proj[a][j];
      if (v < 0 || v >= m)
        throw Error(ErrorCode::RangeViolation,
                    "projection value " + std::to_string(v) + " outside {0.." +
                        std::to_string(m - 1) + "}");
      ++occurrences[v];
      ++entries[a][v];
    }
  }
  for (int v = 0; v < m; ++v)
    if (occurrences[v] != n)
      throw Error(ErrorCode::NotBalanced,
                  "value " + std::to_string(v) + " occurs " + std::to_string(occurrences[v]) +
                      " times, expected " + std::to_string(n));
  return MultiplicityMatrix::from_entries(std::move(entries));
}

Matching hall_matching(const MultiplicityMatrix& N) {
  BipartiteResult r = bipartite_row_matching(N.entries());
  if (!r.perfect) {
    std::string rows;
    for (std::size_t i = 0; i < r.violator_rows.size(); ++i)
      rows += (i ? "," : "") + std::to_string(r.violator_rows[i]);
    throw NoPerfectMatchingError(r.violator_rows, "rows {" + rows + "} violate Hall's condition");
  }
  return Matching{std::move(r.match_of_row)};
}

}  // namespace altdiam
