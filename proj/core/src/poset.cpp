#include "altdiam/poset.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "altdiam/census.hpp"
#include "altdiam/small_perm.hpp"

namespace altdiam {

namespace {

void check_size(int size) {
  if (size < 1 || size > 4096)
    throw Error(ErrorCode::InvalidInput,
                "poset size must be between 1 and 4096, got " + std::to_string(size));
}

void validate_order(int size, const std::vector<std::uint8_t>& leq) {
  for (int x = 0; x < size; ++x)
    if (!leq[x * size + x])
      throw Error(ErrorCode::InvalidPoset, "relation is not reflexive at " + std::to_string(x));
  for (int x = 0; x < size; ++x)
    for (int y = x + 1; y < size; ++y)
      if (leq[x * size + y] && leq[y * size + x])
        throw Error(ErrorCode::InvalidPoset, "antisymmetry fails: " + std::to_string(x) +
                                                 " <= " + std::to_string(y) + " and conversely");
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      if (!leq[x * size + y]) continue;
      for (int z = 0; z < size; ++z)
        if (leq[y * size + z] && !leq[x * size + z])
          throw Error(ErrorCode::InvalidPoset,
                      "transitivity fails: " + std::to_string(x) + " <= " + std::to_string(y) +
                          " <= " + std::to_string(z) + " but not " + std::to_string(x) +
                          " <= " + std::to_string(z));
    }
}

}  // namespace

FinitePoset FinitePoset::from_relation(int size, const std::vector<std::vector<bool>>& leq) {
  check_size(size);
  if (static_cast<int>(leq.size()) != size)
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(size) + " relation rows, got " +
                    std::to_string(leq.size()));
  std::vector<std::uint8_t> flat(static_cast<std::size_t>(size) * size, 0);
  for (int x = 0; x < size; ++x) {
    if (static_cast<int>(leq[x].size()) != size)
      throw Error(ErrorCode::DimensionMismatch,
                  "relation row " + std::to_string(x) + " has " + std::to_string(leq[x].size()) +
                      " entries, expected " + std::to_string(size));
    for (int y = 0; y < size; ++y) flat[x * size + y] = leq[x][y] ? 1 : 0;
  }
  validate_order(size, flat);
  return FinitePoset(size, std::move(flat));
}

FinitePoset FinitePoset::from_cover_pairs(int size,
                                          const std::vector<std::pair<int, int>>& pairs) {
  check_size(size);
  std::vector<std::uint8_t> flat(static_cast<std::size_t>(size) * size, 0);
  for (int x = 0; x < size; ++x) flat[x * size + x] = 1;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= size || b < 0 || b >= size)
      throw Error(ErrorCode::RangeViolation, "pair (" + std::to_string(a) + ", " +
                                                 std::to_string(b) + ") outside 0.." +
                                                 std::to_string(size - 1));
    if (a == b)
      throw Error(ErrorCode::InvalidPoset, "strict pair " + std::to_string(a) + " < itself");
    flat[a * size + b] = 1;
  }
  // Transitive closure, then the standard validation catches any cycle
  // as an antisymmetry failure.
  for (int k = 0; k < size; ++k)
    for (int x = 0; x < size; ++x) {
      if (!flat[x * size + k]) continue;
      for (int y = 0; y < size; ++y)
        if (flat[k * size + y]) flat[x * size + y] = 1;
    }
  validate_order(size, flat);
  return FinitePoset(size, std::move(flat));
}

FinitePoset FinitePoset::chain(int n) {
  check_size(n);
  std::vector<std::uint8_t> flat(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) flat[x * n + y] = 1;
  return FinitePoset(n, std::move(flat));
}

FinitePoset FinitePoset::antichain(int n) {
  check_size(n);
  std::vector<std::uint8_t> flat(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) flat[x * n + x] = 1;
  return FinitePoset(n, std::move(flat));
}

FinitePoset FinitePoset::diamond() { return product(chain(2), chain(2)); }

FinitePoset FinitePoset::product(const FinitePoset& p, const FinitePoset& q) {
  int np = p.size(), nq = q.size();
  if (np > 4096 / nq)
    throw Error(ErrorCode::InstanceTooLarge, "product poset would have " + std::to_string(np) +
                                                 " * " + std::to_string(nq) + " elements");
  int n = np * nq;
  std::vector<std::uint8_t> flat(static_cast<std::size_t>(n) * n, 0);
  for (int x1 = 0; x1 < np; ++x1)
    for (int y1 = 0; y1 < nq; ++y1)
      for (int x2 = 0; x2 < np; ++x2)
        for (int y2 = 0; y2 < nq; ++y2)
          flat[(x1 * nq + y1) * n + (x2 * nq + y2)] =
              (p.leq(x1, x2) && q.leq(y1, y2)) ? 1 : 0;
  return FinitePoset(n, std::move(flat));
}

bool FinitePoset::trivial() const {
  for (int x = 0; x < size_; ++x)
    for (int y = 0; y < size_; ++y)
      if (x != y && leq(x, y)) return false;
  return true;
}

bool is_order_automorphism(const FinitePoset& p, const std::vector<int>& perm) {
  int n = p.size();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> used(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || used[v]) return false;
    used[v] = 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.leq(x, y) != p.leq(perm[x], perm[y])) return false;
  return true;
}

namespace {

constexpr std::size_t kMaxAutomorphisms = 1000000;

struct AutSearch {
  const FinitePoset& p;
  int n;
  std::vector<std::pair<int, int>> sig;  // (|down-set|, |up-set|) per element
  std::vector<int> img;
  std::vector<char> used;
  std::vector<MonotoneBijection>& out;

  void run(int x) {
    if (x == n) {
      if (out.size() == kMaxAutomorphisms)
        throw Error(ErrorCode::InstanceTooLarge, "more than 10^6 automorphisms");
      out.push_back({img});
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (used[y] || sig[x] != sig[y]) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z)
        ok = p.leq(z, x) == p.leq(img[z], y) && p.leq(x, z) == p.leq(y, img[z]);
      if (!ok) continue;
      img[x] = y;
      used[y] = 1;
      run(x + 1);
      used[y] = 0;
    }
  }
};

}  // namespace

std::vector<MonotoneBijection> automorphisms(const FinitePoset& p) {
  int n = p.size();
  if (n > 16)
    throw Error(ErrorCode::InstanceTooLarge,
                "automorphism search supports up to 16 elements, got " + std::to_string(n));
  std::vector<std::pair<int, int>> sig(n, {0, 0});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (p.leq(y, x)) ++sig[x].first;
      if (p.leq(x, y)) ++sig[x].second;
    }
  std::vector<MonotoneBijection> out;
  AutSearch search{p, n, std::move(sig), std::vector<int>(n, -1), std::vector<char>(n, 0), out};
  search.run(0);
  return out;
}

StageSubgroups stage_subgroups(const FinitePoset& p, const FinitePoset& q) {
  int np = p.size(), nq = q.size();
  FinitePoset prod = FinitePoset::product(p, q);
  StageSubgroups groups;
  groups.ambient = automorphisms(prod);
  for (const auto& a : groups.ambient) {
    bool keeps_q = true, keeps_p = true;
    for (int i = 0; i < prod.size(); ++i) {
      if (a.perm[i] % nq != i % nq) keeps_q = false;
      if (a.perm[i] / nq != i / nq) keeps_p = false;
    }
    if (keeps_q) groups.left.push_back(a);
    if (keeps_p) groups.right.push_back(a);
  }
  for (const auto& g : automorphisms(p)) {
    MonotoneBijection a{std::vector<int>(prod.size())};
    for (int x = 0; x < np; ++x)
      for (int y = 0; y < nq; ++y) a.perm[x * nq + y] = g.perm[x] * nq + y;
    groups.pure_left.push_back(std::move(a));
  }
  for (const auto& h : automorphisms(q)) {
    MonotoneBijection a{std::vector<int>(prod.size())};
    for (int x = 0; x < np; ++x)
      for (int y = 0; y < nq; ++y) a.perm[x * nq + y] = x * nq + h.perm[y];
    groups.pure_right.push_back(std::move(a));
  }
  return groups;
}

namespace {

// Greedily thins a subgroup listing to a generating subset: an element is
// kept only if the elements kept so far do not already generate it. Keeps
// the closure BFS below proportional to |closure| * |kept|.
std::vector<std::vector<int>> reduce_generators(const std::vector<std::vector<int>>& list,
                                                int n) {
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::set<std::vector<int>> closed{id};
  std::vector<std::vector<int>> gens;
  std::vector<int> buf(n);
  for (const auto& g : list) {
    if (closed.contains(g)) continue;
    gens.push_back(g);
    std::vector<std::vector<int>> frontier(closed.begin(), closed.end());
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& f : frontier)
        for (const auto& h : gens) {
          for (int i = 0; i < n; ++i) buf[i] = h[f[i]];
          if (closed.insert(buf).second) next.push_back(buf);
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

}  // namespace

FlipReport flip_generated(const FinitePoset& p) {
  int s = p.size();
  StageSubgroups groups = stage_subgroups(p, p);
  int n = s * s;

  // In a finite group the set reachable by repeated left multiplication
  // from the identity is the generated subgroup; no explicit inverses
  // are needed.
  std::vector<std::vector<int>> raw_left, raw_right;
  for (const auto& a : groups.left) raw_left.push_back(a.perm);
  for (const auto& a : groups.right) raw_right.push_back(a.perm);
  auto gens = reduce_generators(raw_left, n);
  for (auto& g : reduce_generators(raw_right, n)) gens.push_back(std::move(g));

  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::vector<int> flip(n);
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y) flip[x * s + y] = y * s + x;

  FlipReport report;
  report.left_size = groups.left.size();
  report.right_size = groups.right.size();
  report.aut_size = groups.ambient.size();

  std::vector<int> buf(n);
  if (n <= 10) {
    // Rank-bitset closure; the closure can be the whole symmetric group
    // (trivial orders), which a comparison-based set would not absorb fast.
    PermutationSet seen(n);
    seen.insert(id);
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& f : frontier)
        for (const auto& g : gens) {
          for (int i = 0; i < n; ++i) buf[i] = g[f[i]];
          if (seen.insert_rank(lehmer_rank(buf))) next.push_back(buf);
        }
      frontier = std::move(next);
    }
    report.flip_in_closure = seen.contains(flip);
    report.closure_size = seen.size();
  } else {
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& f : frontier)
        for (const auto& g : gens) {
          for (int i = 0; i < n; ++i) buf[i] = g[f[i]];
          if (seen.insert(buf).second) next.push_back(buf);
        }
      frontier = std::move(next);
    }
    report.flip_in_closure = seen.contains(flip);
    report.closure_size = seen.size();
  }
  return report;
}

std::vector<FinitePoset> all_posets(int size) {
  if (size < 1 || size > 3)
    throw Error(ErrorCode::InstanceTooLarge,
                "labeled poset sweep supports sizes 1 to 3, got " + std::to_string(size));
  std::vector<std::pair<int, int>> slots;
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      if (x != y) slots.emplace_back(x, y);

  std::vector<FinitePoset> out;
  for (std::uint32_t bits = 0; bits < (1u << slots.size()); ++bits) {
    std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
    for (int x = 0; x < size; ++x) leq[x][x] = true;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (bits & (1u << k)) leq[slots[k].first][slots[k].second] = true;
    try {
      out.push_back(FinitePoset::from_relation(size, leq));
    } catch (const Error&) {
      // not antisymmetric or not transitive; skip
    }
  }
  return out;
}

}  // namespace altdiam
