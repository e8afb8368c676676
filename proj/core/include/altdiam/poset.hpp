#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "altdiam/errors.hpp"

namespace altdiam {

/// A finite partial order on {0..size-1}, stored as the full relation
/// matrix. Construction validates reflexivity, antisymmetry, transitivity.
class FinitePoset {
 public:
  static FinitePoset from_relation(int size, const std::vector<std::vector<bool>>& leq);

  /// Reflexive-transitive closure of the given strict pairs a < b.
  /// Throws InvalidPoset if the closure is not antisymmetric.
  static FinitePoset from_cover_pairs(int size, const std::vector<std::pair<int, int>>& pairs);

  static FinitePoset chain(int n);
  static FinitePoset antichain(int n);
  /// The four-element lattice {0,1}^2 ordered componentwise: bottom 00,
  /// incomparable 01 and 10, top 11; elements indexed lexicographically.
  static FinitePoset diamond();
  /// Componentwise order on pairs; (x,y) has index x*|Q|+y.
  static FinitePoset product(const FinitePoset& p, const FinitePoset& q);

  int size() const { return size_; }
  bool leq(int x, int y) const { return leq_[x * size_ + y]; }
  /// True iff no two distinct elements are comparable.
  bool trivial() const;

  bool operator==(const FinitePoset&) const = default;

 private:
  FinitePoset(int size, std::vector<std::uint8_t> leq)
      : size_(size), leq_(std::move(leq)) {}

  int size_ = 0;
  std::vector<std::uint8_t> leq_;
};

/// A bijection of poset elements preserving order in both directions.
struct MonotoneBijection {
  std::vector<int> perm;
};

bool is_order_automorphism(const FinitePoset& p, const std::vector<int>& perm);

/// All order automorphisms in lexicographic order of their image tables.
/// Backtracking with (down-set, up-set) signature pruning; size <= 16.
std::vector<MonotoneBijection> automorphisms(const FinitePoset& p);

/// The stage subgroups of Aut(product(P,Q)):
///   left: automorphisms preserving the Q-coordinate of every element;
///   right: automorphisms preserving the P-coordinate;
///   pure_left: maps (x,y) -> (g(x),y) for g in Aut(P);
///   pure_right: maps (x,y) -> (x,h(y)) for h in Aut(Q).
struct StageSubgroups {
  std::vector<MonotoneBijection> ambient;
  std::vector<MonotoneBijection> left;
  std::vector<MonotoneBijection> right;
  std::vector<MonotoneBijection> pure_left;
  std::vector<MonotoneBijection> pure_right;
};

StageSubgroups stage_subgroups(const FinitePoset& p, const FinitePoset& q);

/// Is the coordinate swap (x,y) -> (y,x) of product(P,P) generated by the
/// two stage subgroups? closure_size is the size of the subgroup generated
/// by left and right inside Aut(product(P,P)).
struct FlipReport {
  bool flip_in_closure = false;
  std::uint64_t left_size = 0;
  std::uint64_t right_size = 0;
  std::uint64_t closure_size = 0;
  std::uint64_t aut_size = 0;
};

FlipReport flip_generated(const FinitePoset& p);

/// Every labeled poset on {0..size-1}; size <= 3 enforced (the sweep is
/// exponential in size^2).
std::vector<FinitePoset> all_posets(int size);

}  // namespace altdiam
