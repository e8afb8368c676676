#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altdiam/errors.hpp"

namespace altdiam {

/// A permutation of a product A_1 x ... x A_k with |A_i| = dims[i-1] >= 1.
/// Cells are flattened lexicographically, axis 1 most significant.
class MultiGridPermutation {
 public:
  static MultiGridPermutation from_table(std::vector<int> dims, std::vector<int> table);
  static MultiGridPermutation identity(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  int axes() const { return static_cast<int>(dims_.size()); }
  int cells() const { return cells_; }
  int apply_flat(int idx) const { return table_[idx]; }
  const std::vector<int>& table() const { return table_; }

  std::vector<int> unflat(int idx) const;
  int flat(const std::vector<int>& coords) const;

  bool operator==(const MultiGridPermutation&) const = default;

 private:
  MultiGridPermutation(std::vector<int> dims, std::vector<int> table, int cells)
      : dims_(std::move(dims)), table_(std::move(table)), cells_(cells) {}

  std::vector<int> dims_;
  std::vector<int> table_;
  int cells_ = 1;
};

/// A stage that changes only coordinate `axis` (1-based). perms holds one
/// permutation of {0..dims[axis-1]-1} per assignment of the remaining
/// coordinates, indexed by flattening those coordinates in axis order.
struct MultiStage {
  int axis = 1;
  std::vector<std::vector<int>> perms;
};

MultiGridPermutation as_multi_permutation(const MultiStage& s, const std::vector<int>& dims);

/// The stage schedule used by decompose_multi for k axes:
/// (k, k-1, ..., 2, 1, 2, ..., k-1, k), of length 2k-1.
std::vector<int> multi_schedule(int k);

/// Factors p into exactly 2k-1 stages following multi_schedule(k), first
/// applied first. k = 1 yields a single stage equal to p. For k >= 2 the
/// grid is split into (axes 1..k-1) x (axis k), the three-stage grid
/// factorization supplies the outer stages, and the middle stage splits
/// into one independent permutation per value of axis k; those fibers are
/// factored recursively and merged back stage by stage.
std::vector<MultiStage> decompose_multi(const MultiGridPermutation& p);

struct MultiVerifyResult {
  bool ok = false;
  std::string reason;
  std::optional<std::vector<int>> failing_cell;
};

/// True iff the stage axes follow multi_schedule, every stage is
/// shape-valid, and the composition equals p.
MultiVerifyResult verify_multi_decomposition(const std::vector<MultiStage>& stages,
                                             const MultiGridPermutation& p);

}  // namespace altdiam
