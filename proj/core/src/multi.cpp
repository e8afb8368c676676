#include "altdiam/multi.hpp"

#include <numeric>
#include <utility>

#include "altdiam/decompose.hpp"
#include "altdiam/grid.hpp"
#include "altdiam/small_perm.hpp"

namespace altdiam {

namespace {

int checked_cells(const std::vector<int>& dims) {
  if (dims.empty())
    throw Error(ErrorCode::RangeViolation, "product needs at least one axis");
  long long cells = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 1)
      throw Error(ErrorCode::RangeViolation,
                  "axis " + std::to_string(i + 1) + " has size " + std::to_string(dims[i]));
    cells *= dims[i];
    if (cells > 1'000'000'000)
      throw Error(ErrorCode::InstanceTooLarge, "product has more than 10^9 cells");
  }
  return static_cast<int>(cells);
}

std::string coords_string(const std::vector<int>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

}  // namespace

MultiGridPermutation MultiGridPermutation::from_table(std::vector<int> dims,
                                                      std::vector<int> table) {
  const int cells = checked_cells(dims);
  if (static_cast<int>(table.size()) != cells)
    throw Error(ErrorCode::DimensionMismatch,
                "table has " + std::to_string(table.size()) + " entries, expected " +
                    std::to_string(cells));
  if (!is_perm_table(table))
    throw Error(ErrorCode::NotInjective, "table is not a permutation of the cells");
  return MultiGridPermutation(std::move(dims), std::move(table), cells);
}

MultiGridPermutation MultiGridPermutation::identity(std::vector<int> dims) {
  const int cells = checked_cells(dims);
  return MultiGridPermutation(std::move(dims), identity_perm(cells), cells);
}

std::vector<int> MultiGridPermutation::unflat(int idx) const {
  std::vector<int> coords(dims_.size());
  for (int i = axes() - 1; i >= 0; --i) {
    coords[i] = idx % dims_[i];
    idx /= dims_[i];
  }
  return coords;
}

int MultiGridPermutation::flat(const std::vector<int>& coords) const {
  int idx = 0;
  for (int i = 0; i < axes(); ++i) idx = idx * dims_[i] + coords[i];
  return idx;
}

MultiGridPermutation as_multi_permutation(const MultiStage& s, const std::vector<int>& dims) {
  const int k = static_cast<int>(dims.size());
  if (s.axis < 1 || s.axis > k)
    throw Error(ErrorCode::RangeViolation,
                "axis " + std::to_string(s.axis) + " outside 1.." + std::to_string(k));
  const int cells = checked_cells(dims);
  const int d = dims[s.axis - 1];
  const int complement = cells / d;
  if (static_cast<int>(s.perms.size()) != complement)
    throw Error(ErrorCode::DimensionMismatch,
                "stage on axis " + std::to_string(s.axis) + " has " +
                    std::to_string(s.perms.size()) + " perms, expected " +
                    std::to_string(complement));
  for (const auto& p : s.perms) {
    if (static_cast<int>(p.size()) != d)
      throw Error(ErrorCode::DimensionMismatch,
                  "stage perm over " + std::to_string(p.size()) + " indices, expected " +
                      std::to_string(d));
    if (!is_perm_table(p))
      throw Error(ErrorCode::NotInjective, "stage entry is not a permutation");
  }

  // stride between consecutive values of the stage axis; complement index =
  // flattening of the remaining coordinates in axis order.
  int stride = 1;
  for (int i = s.axis; i < k; ++i) stride *= dims[i];

  std::vector<int> table(cells);
  for (int idx = 0; idx < cells; ++idx) {
    const int value = (idx / stride) % d;
    const int high = idx / (stride * d);
    const int low = idx % stride;
    const int comp = high * stride + low;
    table[idx] = (high * d + s.perms[comp][value]) * stride + low;
  }
  return MultiGridPermutation::from_table(dims, std::move(table));
}

std::vector<int> multi_schedule(int k) {
  std::vector<int> schedule;
  for (int i = k; i >= 1; --i) schedule.push_back(i);
  for (int i = 2; i <= k; ++i) schedule.push_back(i);
  return schedule;
}

std::vector<MultiStage> decompose_multi(const MultiGridPermutation& p) {
  const int k = p.axes();
  if (k == 1) {
    MultiStage only{1, {p.table()}};
    return {std::move(only)};
  }

  const std::vector<int>& dims = p.dims();
  const int last_dim = dims[k - 1];
  const int rows = p.cells() / last_dim;  // axes 1..k-1 flattened

  // The flattening agrees with the (rows x last_dim) grid flattening, so the
  // table carries over unchanged.
  GridPermutation grid = GridPermutation::from_table(rows, last_dim, p.table());
  Decomposition three = decompose_two(grid, StageOrder::RLR);

  std::vector<MultiStage> stages;
  stages.push_back(MultiStage{k, std::move(three.stages[0].perms)});

  // Middle stage: one permutation of the leading block per value of axis k.
  // Each is itself a product permutation; recurse and merge fiber by fiber.
  std::vector<int> lead_dims(dims.begin(), dims.end() - 1);
  std::vector<std::vector<MultiStage>> fiber_stages(last_dim);
  for (int b = 0; b < last_dim; ++b) {
    MultiGridPermutation fiber =
        MultiGridPermutation::from_table(lead_dims, three.stages[1].perms[b]);
    fiber_stages[b] = decompose_multi(fiber);
  }
  const std::size_t inner_count = fiber_stages[0].size();
  const std::vector<int> inner_schedule = multi_schedule(k - 1);
  for (std::size_t t = 0; t < inner_count; ++t) {
    MultiStage merged;
    merged.axis = inner_schedule[t];
    const std::size_t sub_comp = fiber_stages[0][t].perms.size();
    merged.perms.resize(sub_comp * last_dim);
    for (int b = 0; b < last_dim; ++b)
      for (std::size_t c = 0; c < sub_comp; ++c)
        merged.perms[c * last_dim + b] = std::move(fiber_stages[b][t].perms[c]);
    stages.push_back(std::move(merged));
  }

  stages.push_back(MultiStage{k, std::move(three.stages[2].perms)});
  return stages;
}

namespace {

MultiGridPermutation compose_multi(const MultiGridPermutation& f,
                                   const MultiGridPermutation& g) {
  std::vector<int> table(g.cells());
  for (int i = 0; i < g.cells(); ++i) table[i] = f.apply_flat(g.apply_flat(i));
  return MultiGridPermutation::from_table(f.dims(), std::move(table));
}

}  // namespace

MultiVerifyResult verify_multi_decomposition(const std::vector<MultiStage>& stages,
                                             const MultiGridPermutation& p) {
  const std::vector<int> schedule = multi_schedule(p.axes());
  if (stages.size() != schedule.size())
    return MultiVerifyResult{false,
                             std::to_string(stages.size()) + " stages, schedule needs " +
                                 std::to_string(schedule.size()),
                             std::nullopt};
  for (std::size_t i = 0; i < stages.size(); ++i)
    if (stages[i].axis != schedule[i])
      return MultiVerifyResult{false,
                               "stage " + std::to_string(i) + " acts on axis " +
                                   std::to_string(stages[i].axis) + ", schedule expects " +
                                   std::to_string(schedule[i]),
                               std::nullopt};
  MultiGridPermutation acc = MultiGridPermutation::identity(p.dims());
  for (std::size_t i = 0; i < stages.size(); ++i) {
    try {
      acc = compose_multi(as_multi_permutation(stages[i], p.dims()), acc);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DimensionMismatch || e.code() == ErrorCode::RangeViolation)
        throw;
      return MultiVerifyResult{false, "stage " + std::to_string(i) + " invalid: " + e.what(),
                               std::nullopt};
    }
  }
  for (int idx = 0; idx < p.cells(); ++idx)
    if (acc.apply_flat(idx) != p.apply_flat(idx))
      return MultiVerifyResult{false,
                               "composition disagrees with target at cell " +
                                   coords_string(p.unflat(idx)),
                               p.unflat(idx)};
  return MultiVerifyResult{true, "", std::nullopt};
}

}  // namespace altdiam
