#pragma once

#include <cstdint>
#include <vector>

namespace altdiam {

/// Helpers for permutations of {0..k-1} stored as image tables:
/// p[i] is the image of i.

inline std::vector<int> identity_perm(int k) {
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  return p;
}

inline bool is_perm_table(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

/// (f then g backwards): result[i] = f[g[i]], i.e. the composite f after g.
inline std::vector<int> compose_perm(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
  return r;
}

inline std::vector<int> invert_perm(const std::vector<int>& p) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// Lehmer rank in [0, k!): identity ranks 0, the reversed table ranks k!-1.
/// Ranks follow the lexicographic order of image tables.
inline std::uint64_t lehmer_rank(const std::vector<int>& p) {
  const int k = static_cast<int>(p.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < k; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < k; ++j)
      if (p[j] < p[i]) ++smaller;
    rank = rank * static_cast<std::uint64_t>(k - i) + static_cast<std::uint64_t>(smaller);
  }
  return rank;
}

inline std::vector<int> lehmer_unrank(std::uint64_t rank, int k) {
  std::vector<int> digits(k, 0);
  for (int i = k - 1; i >= 0; --i) {
    const std::uint64_t base = static_cast<std::uint64_t>(k - i);
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool = identity_perm(k);
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) {
    p[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return p;
}

}  // namespace altdiam
