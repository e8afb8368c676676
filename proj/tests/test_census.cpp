#include "doctest.h"

#include <vector>

#include "altdiam/census.hpp"
#include "altdiam/small_perm.hpp"

using altdiam::AlternationWord;
using altdiam::CensusReport;
using altdiam::Error;
using altdiam::ErrorCode;
using altdiam::GridPermutation;
using altdiam::PermutationSet;

namespace {

// independent enumeration of the column-preserving (kind L) permutations
PermutationSet brute_left(int m, int n) {
  PermutationSet out(m * n);
  const auto total = altdiam::factorial(m * n);
  for (std::uint64_t r = 0; r < total; ++r) {
    const auto table = altdiam::lehmer_unrank(r, m * n);
    bool left = true;
    for (int idx = 0; idx < m * n && left; ++idx) left = table[idx] % n == idx % n;
    if (left) out.insert_rank(r);
  }
  return out;
}

}  // namespace

TEST_CASE("permutation set basics") {
  PermutationSet s(3);
  CHECK(s.universe() == 6);
  CHECK(s.size() == 0);
  CHECK(s.insert_rank(4));
  CHECK(!s.insert_rank(4));
  CHECK(s.contains_rank(4));
  CHECK(!s.contains_rank(5));
  CHECK(s.size() == 1);
  REQUIRE(s.first_missing_rank().has_value());
  CHECK(*s.first_missing_rank() == 0);
  s.fill_all();
  CHECK(s.full());
  CHECK(!s.first_missing_rank().has_value());
  CHECK_THROWS_AS(PermutationSet(11), Error);

  PermutationSet a(3), b(3);
  a.insert_rank(0);
  a.insert_rank(1);
  b.insert_rank(1);
  b.insert_rank(2);
  CHECK(a.intersection_size(b) == 1);
  CHECK_THROWS_AS(a.intersection_size(PermutationSet(4)), Error);
}

TEST_CASE("insert by table agrees with ranks") {
  PermutationSet s(4);
  s.insert({0, 1, 3, 2});
  CHECK(s.contains({0, 1, 3, 2}));
  CHECK(s.contains_rank(1));
  CHECK(!s.contains({1, 0, 2, 3}));
}

TEST_CASE("product sets of the standard words") {
  const auto empty = altdiam::product_set(AlternationWord::parse("1"), 2, 2);
  CHECK(empty.size() == 1);
  CHECK(empty.contains_rank(0));

  const auto left = altdiam::product_set(AlternationWord::parse("L"), 2, 2);
  CHECK(left.size() == 4);
  const auto expected = brute_left(2, 2);
  CHECK(left.intersection_size(expected) == 4);

  CHECK(altdiam::product_set(AlternationWord::parse("R"), 2, 2).size() == 4);
  CHECK(altdiam::product_set(AlternationWord::parse("LR"), 2, 2).size() == 16);
  CHECK(altdiam::product_set(AlternationWord::parse("RL"), 2, 2).size() == 16);
  CHECK(altdiam::product_set(AlternationWord::parse("LRL"), 2, 2).size() == 24);
  CHECK(altdiam::product_set(AlternationWord::parse("RLR"), 2, 2).size() == 24);

  // repeated letters collapse: LLR behaves like LR
  CHECK(altdiam::product_set(AlternationWord::parse("LLR"), 2, 2).size() == 16);

  const auto left23 = brute_left(2, 3);
  CHECK(altdiam::product_set(AlternationWord::parse("L"), 2, 3).intersection_size(left23) ==
        left23.size());
}

TEST_CASE("census of the 2x2 grid matches the frozen numbers") {
  const CensusReport r = altdiam::census(2, 2);
  CHECK(r.total == 24);
  CHECK(r.size_of("1") == 1);
  CHECK(r.size_of("L") == 4);
  CHECK(r.size_of("R") == 4);
  CHECK(r.size_of("LR") == 16);
  CHECK(r.size_of("RL") == 16);
  CHECK(r.size_of("LRL") == 24);
  CHECK(r.size_of("RLR") == 24);
  CHECK(r.intersection_lr_rl == 12);
  CHECK_THROWS_AS(r.size_of("LRLR"), Error);

  REQUIRE(r.hierarchy_rows.size() == 3);
  CHECK(r.hierarchy_rows[0].sigma_size == 4);
  CHECK(r.hierarchy_rows[0].pi_size == 4);
  CHECK(r.hierarchy_rows[0].delta_size == 1);
  CHECK(r.hierarchy_rows[1].sigma_size == 16);
  CHECK(r.hierarchy_rows[1].pi_size == 16);
  CHECK(r.hierarchy_rows[1].delta_size == 12);
  CHECK(r.hierarchy_rows[2].sigma_size == 24);
  CHECK(r.hierarchy_rows[2].pi_size == 24);
  CHECK(r.hierarchy_rows[2].delta_size == 24);
  CHECK(r.collapse_level == 3);
}

TEST_CASE("census counting formulas hold on small grids") {
  const struct {
    int m, n;
  } shapes[] = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {1, 4}, {4, 1}};
  for (const auto& [m, n] : shapes) {
    const CensusReport r = altdiam::census(m, n);
    const auto mf = altdiam::factorial(m), nf = altdiam::factorial(n);
    std::uint64_t l = 1, rr = 1;
    for (int i = 0; i < n; ++i) l *= mf;
    for (int i = 0; i < m; ++i) rr *= nf;
    CHECK(r.size_of("L") == l);
    CHECK(r.size_of("R") == rr);
    CHECK(r.size_of("LR") == l * rr);
    CHECK(r.size_of("RL") == l * rr);
    CHECK(r.size_of("LRL") == altdiam::factorial(m * n));
    CHECK(r.size_of("RLR") == altdiam::factorial(m * n));
  }
}

TEST_CASE("census is identical across thread counts") {
  const CensusReport a = altdiam::census(2, 3, 1);
  const CensusReport b = altdiam::census(2, 3, 4);
  const CensusReport c = altdiam::census(2, 3, 16);
  CHECK(a.sizes == b.sizes);
  CHECK(a.sizes == c.sizes);
  CHECK(a.intersection_lr_rl == b.intersection_lr_rl);
  CHECK(a.collapse_level == b.collapse_level);
  REQUIRE(a.hierarchy_rows.size() == b.hierarchy_rows.size());
  for (std::size_t i = 0; i < a.hierarchy_rows.size(); ++i) {
    CHECK(a.hierarchy_rows[i].sigma_size == b.hierarchy_rows[i].sigma_size);
    CHECK(a.hierarchy_rows[i].pi_size == b.hierarchy_rows[i].pi_size);
    CHECK(a.hierarchy_rows[i].delta_size == b.hierarchy_rows[i].delta_size);
  }
}

TEST_CASE("degenerate grids collapse immediately") {
  const CensusReport r = altdiam::census(1, 3);
  CHECK(r.total == 6);
  CHECK(r.size_of("L") == 1);
  CHECK(r.size_of("R") == 6);
  // G_R alone is everything, so Sigma_2 = L.Pi_1 is already full
  CHECK(r.collapse_level == 2);
}

TEST_CASE("hierarchy of 2x3 collapses at level 3") {
  const auto h = altdiam::hierarchy(2, 3);
  REQUIRE(h.rows.size() == 3);
  CHECK(h.rows[0].sigma_size == 8);    // 2!^3
  CHECK(h.rows[0].pi_size == 36);      // 3!^2
  CHECK(h.rows[0].delta_size == 1);
  CHECK(h.rows[1].sigma_size == 288);
  CHECK(h.rows[1].pi_size == 288);
  CHECK(h.rows[2].sigma_size == 720);
  CHECK(h.rows[2].pi_size == 720);
  CHECK(h.rows[2].delta_size == 720);
  CHECK(h.collapse_level == 3);
}

TEST_CASE("in_word agrees with set membership everywhere (small grids)") {
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {1, 4}}) {
    for (const char* word : {"LR", "RL"}) {
      const auto w = AlternationWord::parse(word);
      const auto set = altdiam::product_set(w, m, n);
      const auto total = altdiam::factorial(m * n);
      for (std::uint64_t r = 0; r < total; ++r) {
        const auto p =
            GridPermutation::from_table(m, n, altdiam::lehmer_unrank(r, m * n));
        CHECK(altdiam::in_word(p, w) == set.contains_rank(r));
      }
    }
  }
}

TEST_CASE("multi-axis product sets and the lower bound report") {
  // two-axis schedules agree with the word construction
  const auto grid_rl = altdiam::product_set(AlternationWord::parse("RL"), 2, 2);
  const auto multi_rl = altdiam::product_set(std::vector<int>{2, 1}, {2, 2});
  CHECK(grid_rl.intersection_size(multi_rl) == grid_rl.size());
  CHECK(multi_rl.size() == grid_rl.size());

  const auto full = altdiam::lower_bound_check({2, 2, 2}, {3, 2, 1, 2, 3});
  CHECK(full.covered);
  CHECK(full.product_size == full.universe);
  CHECK(!full.witness_table.has_value());

  const auto missing = altdiam::lower_bound_check({2, 2, 2}, {3, 2, 1, 2});
  CHECK(!missing.covered);
  CHECK(missing.product_size < missing.universe);
  REQUIRE(missing.witness_table.has_value());
  // the witness is a valid permutation outside the product set
  const auto witness_rank = altdiam::lehmer_rank(*missing.witness_table);
  const auto set = altdiam::product_set(std::vector<int>{3, 2, 1, 2}, {2, 2, 2});
  CHECK(!set.contains_rank(witness_rank));

  const auto two_d = altdiam::lower_bound_check({2, 2}, {1, 2});
  CHECK(!two_d.covered);
  CHECK(two_d.product_size == 16);
  CHECK(two_d.universe == 24);
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(altdiam::census(2, 5), Error);                       // 10 cells
  CHECK_THROWS_AS(altdiam::product_set(AlternationWord::parse("L"), 2, 5), Error);
  CHECK_THROWS_AS(altdiam::lower_bound_check({3, 3}, {1, 2}), Error);  // 9 > 8 cells
  CHECK_THROWS_AS(altdiam::lower_bound_check({2, 2}, {3}), Error);     // axis out of range
}
