#include "doctest.h"

#include <functional>

#include "altdiam/grid.hpp"
#include "altdiam/small_perm.hpp"
#include "test_rng.hpp"

using altdiam::Error;
using altdiam::ErrorCode;
using altdiam::GridPermutation;
using altdiam::Point;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an altdiam::Error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("from_pairs builds the expected mapping") {
  const auto p = GridPermutation::from_pairs(
      2, 2, {{{0, 0}, {1, 1}}, {{0, 1}, {0, 1}}, {{1, 0}, {1, 0}}, {{1, 1}, {0, 0}}});
  CHECK(p.apply(Point{0, 0}) == Point{1, 1});
  CHECK(p.apply(Point{1, 1}) == Point{0, 0});
  CHECK(p.apply(Point{0, 1}) == Point{0, 1});
  CHECK(p.m() == 2);
  CHECK(p.n() == 2);
}

TEST_CASE("from_pairs validation errors") {
  CHECK(code_of([] {
          GridPermutation::from_pairs(2, 2, {{{0, 0}, {2, 0}},
                                             {{0, 1}, {0, 1}},
                                             {{1, 0}, {1, 0}},
                                             {{1, 1}, {1, 1}}});
        }) == ErrorCode::RangeViolation);
  CHECK(code_of([] {
          GridPermutation::from_pairs(2, 2, {{{0, 0}, {0, 0}},
                                             {{0, 0}, {0, 1}},
                                             {{1, 0}, {1, 0}},
                                             {{1, 1}, {1, 1}}});
        }) == ErrorCode::DuplicateSource);
  CHECK(code_of([] {
          GridPermutation::from_pairs(2, 2, {{{0, 0}, {0, 0}},
                                             {{0, 1}, {0, 0}},
                                             {{1, 0}, {1, 0}},
                                             {{1, 1}, {1, 1}}});
        }) == ErrorCode::NotInjective);
  CHECK(code_of([] {
          GridPermutation::from_pairs(2, 2, {{{0, 0}, {0, 0}},
                                             {{0, 1}, {0, 1}},
                                             {{1, 1}, {1, 1}}});
        }) == ErrorCode::MissingSource);
}

TEST_CASE("from_table validation") {
  CHECK(code_of([] { GridPermutation::from_table(2, 2, {0, 1, 2}); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(code_of([] { GridPermutation::from_table(2, 2, {0, 1, 2, 2}); }) ==
        ErrorCode::NotInjective);
  // an out-of-range entry means the table is not a permutation of the cells
  CHECK(code_of([] { GridPermutation::from_table(2, 2, {0, 1, 2, 4}); }) ==
        ErrorCode::NotInjective);
  CHECK(code_of([] { GridPermutation::from_table(0, 2, {}); }) == ErrorCode::RangeViolation);
}

TEST_CASE("identity and is_identity") {
  const auto id = GridPermutation::identity(3, 4);
  CHECK(id.is_identity());
  for (int idx = 0; idx < 12; ++idx) CHECK(id.apply_flat(idx) == idx);
  auto t = id.table();
  std::swap(t[0], t[1]);
  CHECK(!GridPermutation::from_table(3, 4, t).is_identity());
}

TEST_CASE("flip transposes coordinates") {
  const auto f = GridPermutation::flip(3, 3);
  CHECK(f.apply(Point{0, 1}) == Point{1, 0});
  CHECK(f.apply(Point{2, 1}) == Point{1, 2});
  CHECK(f.apply(Point{1, 1}) == Point{1, 1});
  CHECK(compose(f, f).is_identity());
  CHECK(code_of([] { GridPermutation::flip(2, 3); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("compose applies the right factor first") {
  // g: swap the two columns of row 0 only; f: flip.
  const auto g = GridPermutation::from_table(2, 2, {1, 0, 2, 3});
  const auto f = GridPermutation::flip(2, 2);
  const auto fg = compose(f, g);
  for (int idx = 0; idx < 4; ++idx)
    CHECK(fg.apply_flat(idx) == f.apply_flat(g.apply_flat(idx)));
  CHECK(fg.apply(Point{0, 0}) == Point{1, 0});  // g: (0,0)->(0,1), f: ->(1,0)
  CHECK(code_of([&] { compose(f, GridPermutation::identity(3, 3)); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("inverse undoes the permutation") {
  testrng::Xorshift rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + rng.below(5), n = 1 + rng.below(5);
    const auto p = GridPermutation::from_table(m, n, testrng::random_table(m * n, rng));
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p.inverse(), p).is_identity());
  }
}

TEST_CASE("flat and unflat are lexicographic") {
  const auto p = GridPermutation::identity(3, 5);
  CHECK(p.flat(Point{2, 3}) == 13);
  CHECK(p.unflat(13) == Point{2, 3});
  for (int idx = 0; idx < 15; ++idx) CHECK(p.flat(p.unflat(idx)) == idx);
}

TEST_CASE("point printing") {
  CHECK(altdiam::to_string(Point{3, 7}) == "(3,7)");
}

TEST_CASE("lehmer rank and unrank") {
  CHECK(altdiam::lehmer_rank({0, 1, 2, 3}) == 0);
  CHECK(altdiam::lehmer_rank({3, 2, 1, 0}) == 23);
  CHECK(altdiam::factorial(4) == 24);
  CHECK(altdiam::factorial(10) == 3628800);
  for (std::uint64_t r = 0; r < 24; ++r)
    CHECK(altdiam::lehmer_rank(altdiam::lehmer_unrank(r, 4)) == r);
  // ranks are lexicographic: unrank(1) swaps the last two entries
  CHECK(altdiam::lehmer_unrank(1, 4) == std::vector<int>{0, 1, 3, 2});
}
