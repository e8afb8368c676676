#pragma once

#include <vector>

#include "altdiam/errors.hpp"

namespace altdiam {

/// Square nonnegative integer matrix whose rows and columns all sum to the
/// same regularity. Entry (a, v) counts how often value v occurs in row a of
/// some balanced projection.
class MultiplicityMatrix {
 public:
  /// Validates double regularity. Throws NotBalanced naming the first row or
  /// column whose sum differs.
  static MultiplicityMatrix from_entries(std::vector<std::vector<int>> entries);

  int size() const { return size_; }
  int regularity() const { return regularity_; }
  int at(int row, int col) const { return entries_[row][col]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  /// Subtracts 1 at (a, match[a]) for every row; regularity drops by one.
  /// Throws ConsistencyViolation if an entry would go negative.
  void decrement(const std::vector<int>& match);

 private:
  MultiplicityMatrix(std::vector<std::vector<int>> entries, int regularity)
      : entries_(std::move(entries)),
        size_(static_cast<int>(entries_.size())),
        regularity_(regularity) {}

  std::vector<std::vector<int>> entries_;
  int size_ = 0;
  int regularity_ = 0;
};

/// A perfect matching rows -> columns: match_of_row[a] = matched column.
struct Matching {
  std::vector<int> match_of_row;
};

/// Row-by-row augmenting search over an explicit bipartite adjacency
/// (adj[a][b] != 0 means row a may take column b). Deterministic: rows are
/// processed in increasing order and each search prefers the lowest-index
/// free column before trying to displace, so equal inputs give equal
/// matchings. If some row cannot be matched, perfect is false and
/// violator_rows certifies it: |neighborhood(violator_rows)| < |violator_rows|.
struct BipartiteResult {
  bool perfect = false;
  std::vector<int> match_of_row;
  std::vector<int> violator_rows;
};

BipartiteResult bipartite_row_matching(const std::vector<std::vector<int>>& adj);

/// Multiplicity matrix of a balanced projection: proj is m x n with values
/// in {0..m-1}, each value occurring exactly n times. Throws NotBalanced
/// naming the offending value.
MultiplicityMatrix multiplicity_matrix(const std::vector<std::vector<int>>& proj);

/// A system of distinct representatives for the rows of N: a permutation
/// match with N[a][match[a]] >= 1 for all a. Every doubly regular matrix
/// with positive regularity admits one; NoPerfectMatching (with a Hall
/// violator attached) therefore signals a bug upstream, not a math event.
Matching hall_matching(const MultiplicityMatrix& N);

}  // namespace altdiam
