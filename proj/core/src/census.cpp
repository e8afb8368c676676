#include "altdiam/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "altdiam/small_perm.hpp"

namespace altdiam {

namespace {

constexpr int kMaxDegree = 10;

/// Flat list of permutations of {0..k-1}, k bytes per element.
struct FlatPerms {
  int k = 0;
  std::vector<std::uint8_t> data;

  std::size_t count() const { return k ? data.size() / static_cast<std::size_t>(k) : 0; }
  const std::uint8_t* at(std::size_t i) const { return data.data() + i * k; }
  void push(const std::uint8_t* p) { data.insert(data.end(), p, p + k); }
};

std::uint32_t rank_flat(const std::uint8_t* p, int k) {
  std::uint32_t rank = 0;
  for (int i = 0; i < k; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < k; ++j)
      if (p[j] < p[i]) ++smaller;
    rank = rank * static_cast<std::uint32_t>(k - i) + static_cast<std::uint32_t>(smaller);
  }
  return rank;
}

void unrank_flat(std::uint64_t rank, int k, std::uint8_t* out) {
  int digits[kMaxDegree];
  for (int i = k - 1; i >= 0; --i) {
    const std::uint64_t base = static_cast<std::uint64_t>(k - i);
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::uint8_t pool[kMaxDegree];
  for (int i = 0; i < k; ++i) pool[i] = static_cast<std::uint8_t>(i);
  int left = k;
  for (int i = 0; i < k; ++i) {
    const int d = digits[i];
    out[i] = pool[d];
    for (int j = d; j < left - 1; ++j) pool[j] = pool[j + 1];
    --left;
  }
}

int checked_cells(const std::vector<int>& dims, int cap) {
  if (dims.empty()) throw Error(ErrorCode::RangeViolation, "at least one axis required");
  long long cells = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 1)
      throw Error(ErrorCode::RangeViolation,
                  "axis " + std::to_string(i + 1) + " has size " + std::to_string(dims[i]));
    cells *= dims[i];
  }
  if (cells > cap)
    throw Error(ErrorCode::InstanceTooLarge,
                std::to_string(cells) + " cells; exhaustive enumeration is capped at " +
                    std::to_string(cap));
  return static_cast<int>(cells);
}

/// All elements of the group that permutes coordinate `axis` (1-based)
/// independently for each assignment of the other coordinates.
FlatPerms enumerate_axis_group(const std::vector<int>& dims, int axis, int cells) {
  const int k = static_cast<int>(dims.size());
  if (axis < 1 || axis > k)
    throw Error(ErrorCode::RangeViolation,
                "axis " + std::to_string(axis) + " outside 1.." + std::to_string(k));
  const int d = dims[axis - 1];
  const int complement = cells / d;

  int stride = 1;
  for (int i = axis; i < k; ++i) stride *= dims[i];

  // All d! permutations of the axis values, then an odometer over one digit
  // per complement assignment.
  FlatPerms axis_perms{d, {}};
  {
    std::vector<int> p = identity_perm(d);
    do {
      std::uint8_t buf[kMaxDegree];
      for (int i = 0; i < d; ++i) buf[i] = static_cast<std::uint8_t>(p[i]);
      axis_perms.push(buf);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  const std::size_t choices = axis_perms.count();

  FlatPerms out{cells, {}};
  std::vector<std::size_t> digit(complement, 0);
  std::vector<std::uint8_t> table(cells);
  while (true) {
    for (int idx = 0; idx < cells; ++idx) {
      const int value = (idx / stride) % d;
      const int high = idx / (stride * d);
      const int low = idx % stride;
      const int comp = high * stride + low;
      table[idx] = static_cast<std::uint8_t>(
          (high * d + axis_perms.at(digit[comp])[value]) * stride + low);
    }
    out.push(table.data());
    int pos = complement - 1;
    while (pos >= 0 && digit[pos] + 1 == choices) digit[pos--] = 0;
    if (pos < 0) break;
    ++digit[pos];
  }
  return out;
}

struct SetWithElems {
  PermutationSet set;
  FlatPerms elems;  // dropped (empty) once the set is full

  explicit SetWithElems(int degree) : set(degree), elems{degree, {}} {}
};

SetWithElems singleton_identity(int cells) {
  SetWithElems s(cells);
  std::vector<std::uint8_t> id(cells);
  for (int i = 0; i < cells; ++i) id[i] = static_cast<std::uint8_t>(i);
  s.set.insert_rank(0);
  s.elems.push(id.data());
  return s;
}

/// result = {g o s : g in group, s in base}; stops early once full.
SetWithElems left_multiply(const FlatPerms& group, const SetWithElems& base, int cells) {
  SetWithElems out(cells);
  if (base.set.full()) {
    out.set.fill_all();
    return out;
  }
  std::uint8_t buf[kMaxDegree];
  const std::size_t gs = group.count();
  const std::size_t bs = base.elems.count();
  for (std::size_t si = 0; si < bs; ++si) {
    const std::uint8_t* s = base.elems.at(si);
    for (std::size_t gi = 0; gi < gs; ++gi) {
      const std::uint8_t* g = group.at(gi);
      for (int i = 0; i < cells; ++i) buf[i] = g[s[i]];
      if (out.set.insert_rank(rank_flat(buf, cells))) {
        if (out.set.full()) {
          out.elems.data.clear();
          return out;
        }
        out.elems.push(buf);
      }
    }
  }
  return out;
}

SetWithElems group_as_set(const FlatPerms& group, int cells) {
  SetWithElems out(cells);
  for (std::size_t i = 0; i < group.count(); ++i) {
    const std::uint8_t* g = group.at(i);
    if (out.set.insert_rank(rank_flat(g, cells)) && !out.set.full()) out.elems.push(g);
  }
  if (out.set.full()) out.elems.data.clear();
  return out;
}

SetWithElems product_over_axes(const std::vector<int>& schedule, const std::vector<int>& dims,
                               int cells) {
  SetWithElems acc = singleton_identity(cells);
  // Innermost factor first: walk the word right to left.
  for (auto it = schedule.rbegin(); it != schedule.rend(); ++it) {
    if (acc.set.full()) break;  // absorbing: the product stays everything
    const FlatPerms group = enumerate_axis_group(dims, *it, cells);
    acc = left_multiply(group, acc, cells);
  }
  return acc;
}

std::vector<int> word_to_axes(const AlternationWord& w) {
  std::vector<int> axes;
  axes.reserve(w.size());
  for (Letter l : w.letters()) axes.push_back(l == Letter::L ? 1 : 2);
  return axes;
}

}  // namespace

PermutationSet::PermutationSet(int degree) : degree_(degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw Error(ErrorCode::InstanceTooLarge,
                "permutation sets support degree 1.." + std::to_string(kMaxDegree));
  universe_ = factorial(degree);
  bits_.assign((universe_ + 63) / 64, 0);
}

bool PermutationSet::contains_rank(std::uint64_t rank) const {
  return (bits_[rank >> 6] >> (rank & 63)) & 1;
}

bool PermutationSet::contains(const std::vector<int>& table) const {
  return contains_rank(lehmer_rank(table));
}

bool PermutationSet::insert_rank(std::uint64_t rank) {
  std::uint64_t& word = bits_[rank >> 6];
  const std::uint64_t mask = std::uint64_t{1} << (rank & 63);
  if (word & mask) return false;
  word |= mask;
  ++count_;
  return true;
}

void PermutationSet::insert(const std::vector<int>& table) { insert_rank(lehmer_rank(table)); }

void PermutationSet::fill_all() {
  std::fill(bits_.begin(), bits_.end(), ~std::uint64_t{0});
  // Clear the padding bits past the universe.
  const std::uint64_t tail = universe_ & 63;
  if (tail) bits_.back() &= (std::uint64_t{1} << tail) - 1;
  count_ = universe_;
}

std::optional<std::uint64_t> PermutationSet::first_missing_rank() const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    std::uint64_t inv = ~bits_[i];
    if (i + 1 == bits_.size()) {
      const std::uint64_t tail = universe_ & 63;
      if (tail) inv &= (std::uint64_t{1} << tail) - 1;
    }
    if (inv) {
      const std::uint64_t rank = (static_cast<std::uint64_t>(i) << 6) +
                                 static_cast<std::uint64_t>(std::countr_zero(inv));
      if (rank < universe_) return rank;
    }
  }
  return std::nullopt;
}

std::uint64_t PermutationSet::intersection_size(const PermutationSet& other) const {
  if (degree_ != other.degree_)
    throw Error(ErrorCode::DimensionMismatch, "sets over different degrees");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    total += static_cast<std::uint64_t>(std::popcount(bits_[i] & other.bits_[i]));
  return total;
}

PermutationSet product_set(const AlternationWord& w, int m, int n) {
  const std::vector<int> dims{m, n};
  const int cells = checked_cells(dims, 9);
  return product_over_axes(word_to_axes(w), dims, cells).set;
}

PermutationSet product_set(const std::vector<int>& schedule, const std::vector<int>& dims) {
  const int cells = checked_cells(dims, dims.size() <= 2 ? 9 : 8);
  return product_over_axes(schedule, dims, cells).set;
}

HierarchyReport hierarchy(int m, int n) {
  const std::vector<int> dims{m, n};
  const int cells = checked_cells(dims, 9);
  const FlatPerms left = enumerate_axis_group(dims, 1, cells);
  const FlatPerms right = enumerate_axis_group(dims, 2, cells);

  HierarchyReport report;
  SetWithElems sigma = group_as_set(left, cells);
  SetWithElems pi = group_as_set(right, cells);
  const std::uint64_t total = factorial(cells);
  for (int level = 1; level <= 6; ++level) {
    report.rows.push_back(HierarchyRow{level, sigma.set.size(), pi.set.size(),
                                       sigma.set.intersection_size(pi.set)});
    if (sigma.set.size() == total) {
      report.collapse_level = level;
      break;
    }
    SetWithElems next_sigma = left_multiply(left, pi, cells);
    SetWithElems next_pi = left_multiply(right, sigma, cells);
    sigma = std::move(next_sigma);
    pi = std::move(next_pi);
  }
  return report;
}

namespace {

void membership_cross_check(int m, int n, const PermutationSet& lr, const PermutationSet& rl,
                            int threads) {
  const std::uint64_t total = lr.universe();
  const int cells = m * n;
  const AlternationWord word_lr = AlternationWord::parse("LR");
  const AlternationWord word_rl = AlternationWord::parse("RL");
  threads = std::max(1, std::min({threads, 16, static_cast<int>(total)}));

  std::atomic<std::int64_t> first_bad{-1};
  const auto sweep = [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint8_t buf[kMaxDegree];
    for (std::uint64_t r = lo; r < hi; ++r) {
      unrank_flat(r, cells, buf);
      std::vector<int> table(buf, buf + cells);
      const GridPermutation p = GridPermutation::from_table(m, n, std::move(table));
      if (in_word(p, word_lr) != lr.contains_rank(r) ||
          in_word(p, word_rl) != rl.contains_rank(r)) {
        std::int64_t expected = -1;
        first_bad.compare_exchange_strong(expected, static_cast<std::int64_t>(r));
        return;
      }
    }
  };

  if (threads == 1) {
    sweep(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t lo = chunk * t;
      const std::uint64_t hi = std::min(total, lo + chunk);
      if (lo < hi) pool.emplace_back(sweep, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  if (first_bad.load() != -1)
    throw Error(ErrorCode::ConsistencyViolation,
                "projection membership test disagrees with the enumerated set at rank " +
                    std::to_string(first_bad.load()));
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

std::uint64_t CensusReport::size_of(const std::string& word) const {
  for (const auto& [w, s] : sizes)
    if (w == word) return s;
  throw Error(ErrorCode::InvalidInput, "no census entry for word " + word);
}

CensusReport census(int m, int n, int threads) {
  const std::vector<int> dims{m, n};
  const int cells = checked_cells(dims, 9);

  CensusReport report;
  report.m = m;
  report.n = n;
  report.total = factorial(cells);

  const char* words[] = {"1", "L", "R", "LR", "RL", "LRL", "RLR"};
  std::optional<PermutationSet> set_lr;
  std::optional<PermutationSet> set_rl;
  for (const char* w : words) {
    PermutationSet s = product_set(AlternationWord::parse(w), m, n);
    report.sizes.emplace_back(w, s.size());
    if (std::string(w) == "LR") set_lr.emplace(std::move(s));
    else if (std::string(w) == "RL") set_rl.emplace(std::move(s));
  }
  report.intersection_lr_rl = set_lr->intersection_size(*set_rl);

  HierarchyReport h = hierarchy(m, n);
  report.hierarchy_rows = std::move(h.rows);
  report.collapse_level = h.collapse_level;

  // Closed-form counts; disagreement means the enumeration is broken.
  const std::uint64_t size_l = pow_u64(factorial(m), n);
  const std::uint64_t size_r = pow_u64(factorial(n), m);
  const struct { const char* word; std::uint64_t value; } expected[] = {
      {"1", 1},
      {"L", size_l},
      {"R", size_r},
      {"LR", size_l * size_r},
      {"RL", size_l * size_r},
      {"LRL", report.total},
      {"RLR", report.total},
  };
  for (const auto& e : expected)
    if (report.size_of(e.word) != e.value)
      throw Error(ErrorCode::ConsistencyViolation,
                  "word " + std::string(e.word) + " has " +
                      std::to_string(report.size_of(e.word)) + " elements, formula gives " +
                      std::to_string(e.value));
  if (!report.hierarchy_rows.empty() && report.hierarchy_rows[0].delta_size != 1)
    throw Error(ErrorCode::ConsistencyViolation,
                "the two stage groups intersect in more than the identity");

  membership_cross_check(m, n, *set_lr, *set_rl, threads);
  return report;
}

LowerBoundReport lower_bound_check(const std::vector<int>& dims,
                                   const std::vector<int>& schedule) {
  const int cells = checked_cells(dims, 8);
  const int k = static_cast<int>(dims.size());
  for (int axis : schedule)
    if (axis < 1 || axis > k)
      throw Error(ErrorCode::RangeViolation,
                  "schedule axis " + std::to_string(axis) + " outside 1.." + std::to_string(k));

  LowerBoundReport report;
  report.dims = dims;
  report.schedule = schedule;
  report.universe = factorial(cells);

  const PermutationSet set = product_set(schedule, dims);
  report.product_size = set.size();
  report.covered = set.full();
  if (!report.covered) {
    const std::uint64_t missing = *set.first_missing_rank();
    std::vector<int> table = lehmer_unrank(missing, cells);
    if (set.contains(table))
      throw Error(ErrorCode::ConsistencyViolation, "witness rank is inside the product set");
    report.witness_table = std::move(table);
  }

  // A schedule in which two or more axes appear at most once cannot cover
  // the full group when every axis has at least two values.
  bool all_at_least_two = std::all_of(dims.begin(), dims.end(), [](int d) { return d >= 2; });
  if (all_at_least_two) {
    int rare = 0;
    for (int axis = 1; axis <= k; ++axis)
      if (std::count(schedule.begin(), schedule.end(), axis) <= 1) ++rare;
    if (rare >= 2 && report.covered)
      throw Error(ErrorCode::ConsistencyViolation,
                  "schedule with two rarely used axes covered the full group");
  }
  return report;
}

}  // namespace altdiam
