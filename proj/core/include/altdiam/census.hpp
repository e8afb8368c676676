#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altdiam/stage.hpp"

namespace altdiam {

/// A set of permutations of {0..degree-1}, stored as a bitset over Lehmer
/// ranks (degree! bits). Desk scale only: degree <= 10.
class PermutationSet {
 public:
  explicit PermutationSet(int degree);

  int degree() const { return degree_; }
  std::uint64_t universe() const { return universe_; }
  std::uint64_t size() const { return count_; }
  bool full() const { return count_ == universe_; }

  bool contains_rank(std::uint64_t rank) const;
  bool contains(const std::vector<int>& table) const;
  /// Inserts (idempotent); returns true if the rank was new.
  bool insert_rank(std::uint64_t rank);
  void insert(const std::vector<int>& table);
  void fill_all();

  std::optional<std::uint64_t> first_missing_rank() const;
  std::uint64_t intersection_size(const PermutationSet& other) const;

 private:
  int degree_ = 0;
  std::uint64_t universe_ = 1;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// The exact product set G_{w1} . G_{w2} ... G_{wl} over the m x n grid,
/// where G_L permutes rows within columns and G_R columns within rows; the
/// first letter is the outermost factor. The empty word gives {identity}.
/// Requires m*n <= 9.
PermutationSet product_set(const AlternationWord& w, int m, int n);

/// Same over a k-fold product: schedule lists axes (1-based), axis i's group
/// changes only coordinate i. Requires product(dims) <= 9 for k <= 2 and
/// <= 8 for k >= 3.
PermutationSet product_set(const std::vector<int>& schedule, const std::vector<int>& dims);

struct HierarchyRow {
  int level = 0;
  std::uint64_t sigma_size = 0;
  std::uint64_t pi_size = 0;
  std::uint64_t delta_size = 0;
};

/// Levels of the alternation hierarchy over the m x n grid:
/// Sigma_1 = G_L, Pi_1 = G_R, Sigma_{i+1} = G_L . Pi_i, Pi_{i+1} = G_R . Sigma_i,
/// Delta_i = Sigma_i intersect Pi_i. Rows stop at the first level whose
/// Sigma is the full group (collapse) or at level 6, whichever comes first.
struct HierarchyReport {
  std::vector<HierarchyRow> rows;
  int collapse_level = -1;  // -1 if no collapse by level 6
};

HierarchyReport hierarchy(int m, int n);

/// Exhaustive counts over the m x n grid (m*n <= 9). Word sizes are listed
/// in the fixed order 1, L, R, LR, RL, LRL, RLR. The computation cross
/// checks itself: closed-form counts for every word, and the projection
/// membership tests against true set membership for all permutations; any
/// disagreement throws ConsistencyViolation.
struct CensusReport {
  int m = 0;
  int n = 0;
  std::uint64_t total = 0;
  std::vector<std::pair<std::string, std::uint64_t>> sizes;
  std::uint64_t intersection_lr_rl = 0;
  std::vector<HierarchyRow> hierarchy_rows;
  int collapse_level = -1;

  std::uint64_t size_of(const std::string& word) const;
};

/// threads parallelizes the full-permutation cross-check sweep by rank
/// ranges; the report itself is identical for every thread count.
CensusReport census(int m, int n, int threads = 1);

/// Does the stage product over `schedule` cover the full symmetric group of
/// the dims-product (product(dims) <= 8)? If not, `witness_table` holds one
/// permutation verifiably outside the product set. If every axis has size
/// >= 2 and two or more axes occur at most once in the schedule, coverage
/// would contradict the alternation lower bound, so covered == true then
/// throws ConsistencyViolation.
struct LowerBoundReport {
  std::vector<int> dims;
  std::vector<int> schedule;
  std::uint64_t universe = 0;
  std::uint64_t product_size = 0;
  bool covered = false;
  std::optional<std::vector<int>> witness_table;
};

LowerBoundReport lower_bound_check(const std::vector<int>& dims,
                                   const std::vector<int>& schedule);

}  // namespace altdiam
