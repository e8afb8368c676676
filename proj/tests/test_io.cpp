#include "doctest.h"

#include <string>
#include <vector>

#include "altdiam/io.hpp"
#include "test_rng.hpp"

using altdiam::BlockSplit;
using altdiam::Error;
using altdiam::ErrorCode;
using altdiam::FieldMatrix;
using altdiam::FinitePoset;
using altdiam::GridPermutation;
using altdiam::MultiGridPermutation;
using altdiam::Point;
using altdiam::PrimeField;
using altdiam::SparsePermutation;
using altdiam::StageOrder;

TEST_CASE("grid permutation json is pinned and byte stable") {
  const auto p = GridPermutation::identity(1, 2);
  const std::string j = altdiam::grid_permutation_to_json(p);
  CHECK(j == R"({"m":1,"n":2,"map":[[[0,0],[0,0]],[[0,1],[0,1]]]})");
  CHECK(altdiam::grid_permutation_to_json(altdiam::grid_permutation_from_json(j)) == j);

  const std::string t = altdiam::grid_permutation_to_text(p);
  CHECK(t == "1 2\n0 0 -> 0 0\n0 1 -> 0 1\n");
  CHECK(altdiam::grid_permutation_from_text(t).table() == p.table());

  // the sniffing parser accepts either surface form
  CHECK(altdiam::parse_grid_permutation(j).table() == p.table());
  CHECK(altdiam::parse_grid_permutation("  \n" + t).table() == p.table());
}

TEST_CASE("grid permutation round trips on random tables") {
  testrng::Xorshift rng(0x10aull);
  for (int iter = 0; iter < 20; ++iter) {
    const int m = 1 + static_cast<int>(rng.below(4));
    const int n = 1 + static_cast<int>(rng.below(4));
    const auto p = GridPermutation::from_table(m, n, testrng::random_table(m * n, rng));
    const auto via_json =
        altdiam::grid_permutation_from_json(altdiam::grid_permutation_to_json(p));
    const auto via_text =
        altdiam::grid_permutation_from_text(altdiam::grid_permutation_to_text(p));
    CHECK(via_json.table() == p.table());
    CHECK(via_text.table() == p.table());
    CHECK(via_json.m() == m);
    CHECK(via_text.n() == n);
  }
}

TEST_CASE("malformed grid documents are rejected") {
  auto code_of = [](const char* doc) {
    try {
      altdiam::parse_grid_permutation(doc);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ConsistencyViolation;  // marker: nothing thrown
  };
  CHECK(code_of("{") == ErrorCode::InvalidInput);                        // truncated JSON
  CHECK(code_of(R"({"m":1,"map":[]})") == ErrorCode::InvalidInput);      // missing key
  CHECK(code_of(R"({"m":1,"n":"x","map":[]})") == ErrorCode::InvalidInput);
  CHECK(code_of("1 1\n0 0 -> 0 0\nextra") == ErrorCode::InvalidInput);   // trailing tokens
  CHECK(code_of("1 1\n0 0 -> 0") == ErrorCode::InvalidInput);            // truncated line
  CHECK(code_of("") == ErrorCode::InvalidInput);
  // structurally valid text, invalid mapping
  CHECK(code_of("1 2\n0 0 -> 0 0\n0 1 -> 0 0\n") == ErrorCode::NotInjective);
}

TEST_CASE("decomposition json round trips and validates its order tag") {
  const auto p = GridPermutation::from_table(2, 2, {3, 2, 1, 0});
  const auto d = altdiam::decompose_two(p, StageOrder::RLR);
  const std::string j = altdiam::decomposition_to_json(d);
  CHECK(j.find("\"order\":\"RLR\"") != std::string::npos);
  const auto back = altdiam::decomposition_from_json(j);
  CHECK(back.order() == "RLR");
  CHECK(altdiam::decomposition_to_json(back) == j);
  CHECK(altdiam::verify_decomposition(back, p).ok);

  // flipping the order tag without touching the stages must fail the parse
  std::string wrong = j;
  wrong.replace(wrong.find("RLR"), 3, "LRL");
  bool threw = false;
  try {
    altdiam::decomposition_from_json(wrong);
  } catch (const Error& e) {
    threw = true;
    CHECK(std::string(e.what()).find("disagrees") != std::string::npos);
  }
  CHECK(threw);

  // the empty decomposition is order "1"
  const std::string empty = R"({"order":"1","stages":[]})";
  CHECK(altdiam::decomposition_from_json(empty).stages.empty());
}

TEST_CASE("multi permutation and decomposition round trips") {
  const std::vector<int> dims{2, 3, 2};
  std::vector<int> table(12);
  for (int i = 0; i < 12; ++i) table[i] = (i + 5) % 12;
  const auto p = MultiGridPermutation::from_table(dims, table);

  const std::string j = altdiam::multi_permutation_to_json(p);
  CHECK(altdiam::multi_permutation_from_json(j) == p);
  CHECK(altdiam::multi_permutation_to_json(altdiam::multi_permutation_from_json(j)) == j);
  const std::string t = altdiam::multi_permutation_to_text(p);
  CHECK(altdiam::multi_permutation_from_text(t) == p);
  CHECK(altdiam::parse_multi_permutation(j) == p);
  CHECK(altdiam::parse_multi_permutation(t) == p);

  const auto stages = altdiam::decompose_multi(p);
  const altdiam::MultiDecomposition md{dims, stages};
  const std::string dj = altdiam::multi_decomposition_to_json(md);
  const auto mback = altdiam::multi_decomposition_from_json(dj);
  CHECK(mback.dims == dims);
  REQUIRE(mback.stages.size() == stages.size());
  for (std::size_t i = 0; i < mback.stages.size(); ++i) {
    CHECK(mback.stages[i].axis == stages[i].axis);
    CHECK(mback.stages[i].perms == stages[i].perms);
  }
  CHECK(altdiam::multi_decomposition_to_json(mback) == dj);
}

TEST_CASE("sparse permutation serialization") {
  CHECK(altdiam::sparse_permutation_from_text("").empty());
  CHECK(altdiam::sparse_permutation_from_text("  \n \n").empty());

  const auto p = SparsePermutation::from_pairs(
      {{Point{0, 0}, Point{1, 1}}, {Point{1, 1}, Point{2, 0}}, {Point{2, 0}, Point{0, 0}}});
  const std::string j = altdiam::sparse_permutation_to_json(p);
  const std::string t = altdiam::sparse_permutation_to_text(p);
  CHECK(altdiam::sparse_permutation_from_json(j).support() == p.support());
  CHECK(altdiam::sparse_permutation_from_text(t).support() == p.support());
  CHECK(altdiam::sparse_permutation_to_json(altdiam::sparse_permutation_from_json(j)) == j);
  CHECK(altdiam::parse_sparse_permutation(t).support() == p.support());

  const auto d = altdiam::decompose_finite_support(p, StageOrder::RLR);
  const std::string dj = altdiam::sparse_decomposition_to_json(d);
  const auto back = altdiam::sparse_decomposition_from_json(dj);
  CHECK(back.m == d.m);
  CHECK(back.n == d.n);
  CHECK(back.decomposition.order() == d.decomposition.order());
  CHECK(altdiam::sparse_decomposition_to_json(back) == dj);

  // identity: zero stages, zero-by-zero bounding grid
  const auto id = altdiam::decompose_finite_support(SparsePermutation::identity(),
                                                    StageOrder::LRL);
  const auto id_back =
      altdiam::sparse_decomposition_from_json(altdiam::sparse_decomposition_to_json(id));
  CHECK(id_back.m == 0);
  CHECK(id_back.decomposition.stages.empty());
}

TEST_CASE("field matrix serialization") {
  const PrimeField f7(7);
  const auto a = FieldMatrix::from_rows(f7, {{1, 2, 3}, {4, 5, 6}});
  const std::string j = altdiam::field_matrix_to_json(a);
  CHECK(j == R"({"p":7,"rows":[[1,2,3],[4,5,6]]})");
  CHECK(altdiam::field_matrix_from_json(j) == a);
  const std::string t = altdiam::field_matrix_to_text(a);
  CHECK(t == "7 2 3\n1 2 3\n4 5 6\n");
  CHECK(altdiam::field_matrix_from_text(t) == a);
  CHECK(altdiam::parse_field_matrix(j) == a);
  CHECK(altdiam::parse_field_matrix(t) == a);

  // entries reduce modulo p on load
  CHECK(altdiam::field_matrix_from_text("7 1 2\n-1 9\n") ==
        FieldMatrix::from_rows(f7, {{6, 2}}));

  CHECK_THROWS_AS(altdiam::field_matrix_from_text("6 1 1\n0\n"), Error);  // p not prime
  CHECK_THROWS_AS(altdiam::field_matrix_from_text("7 1 2\n1\n"), Error);  // short row
  CHECK_THROWS_AS(altdiam::field_matrix_from_json(R"({"p":7,"rows":[[1],[2,3]]})"), Error);
}

TEST_CASE("linear decomposition serialization") {
  const PrimeField f2(2);
  const auto swap = FieldMatrix::from_rows(f2, {{0, 1}, {1, 0}});
  const auto d = altdiam::decompose_linear(swap, BlockSplit{1, 1});
  const std::string j = altdiam::linear_decomposition_to_json(d);
  CHECK(j.find("\"split\":{\"m\":1,\"n\":1}") != std::string::npos);
  CHECK(j.find("\"kind\":\"L\"") != std::string::npos);

  const auto back = altdiam::linear_decomposition_from_json(j);
  CHECK(back.split.m == 1);
  CHECK(back.split.n == 1);
  REQUIRE(back.stages.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back.stages[i].kind == d.stages[i].kind);
    CHECK(back.stages[i].matrix == d.stages[i].matrix);
  }
  CHECK(altdiam::linear_decomposition_to_json(back) == j);

  // stage split must match the outer split
  CHECK_THROWS_AS(altdiam::linear_decomposition_from_json(R"({"split":{"m":1,"n":1},)"
                      R"("stages":[{"p":2,"rows":[[1,0],[0,1]],"kind":"L",)"
                      R"("split":{"m":2,"n":1}}]})"),
                  Error);
  // stages over different fields cannot mix
  CHECK_THROWS_AS(altdiam::linear_decomposition_from_json(R"({"split":{"m":1,"n":1},)"
                      R"("stages":[{"p":2,"rows":[[1,0],[0,1]],"kind":"L",)"
                      R"("split":{"m":1,"n":1}},{"p":3,"rows":[[1,0],[0,1]],"kind":"R",)"
                      R"("split":{"m":1,"n":1}}]})"),
                  Error);
  // at least one stage required
  CHECK_THROWS_AS(
      altdiam::linear_decomposition_from_json(R"({"split":{"m":1,"n":1},"stages":[]})"),
      Error);

  const std::string sj = altdiam::linear_stage_to_json(d.stages[0], d.split);
  CHECK(sj.find("\"p\":2") != std::string::npos);
  CHECK(sj.find("\"kind\"") != std::string::npos);
}

TEST_CASE("census report serialization") {
  const auto r = altdiam::census(2, 2);
  const std::string csv = altdiam::census_report_to_csv(r);
  CHECK(csv == "word,size\n1,1\nL,4\nR,4\nLR,16\nRL,16\nLRL,24\nRLR,24\n");

  const std::string j = altdiam::census_report_to_json(r);
  CHECK(j == altdiam::census_report_to_json(altdiam::census(2, 2, 4)));
  CHECK(j.find("\"intersection_LR_RL\":12") != std::string::npos);
  CHECK(j.find("\"collapse_level\":3") != std::string::npos);
  CHECK(j.find("\"hierarchy\"") != std::string::npos);
}

TEST_CASE("lower bound report serialization") {
  const auto covered = altdiam::lower_bound_check({2, 2, 2}, {3, 2, 1, 2, 3});
  const std::string cj = altdiam::lower_bound_report_to_json(covered);
  CHECK(cj.find("\"covered\":true") != std::string::npos);
  CHECK(cj.find("\"witness\":null") != std::string::npos);

  const auto missing = altdiam::lower_bound_check({2, 2, 2}, {3, 2, 1, 2});
  const std::string mj = altdiam::lower_bound_report_to_json(missing);
  CHECK(mj.find("\"covered\":false") != std::string::npos);
  CHECK(mj.find("\"witness\":[") != std::string::npos);
}

TEST_CASE("flip report serialization") {
  const auto p = FinitePoset::diamond();
  const auto rep = altdiam::flip_generated(p);
  const auto auts = altdiam::automorphisms(p);
  const std::string j = altdiam::flip_report_to_json(p.size(), auts.size(), rep);
  CHECK(j.find("\"size\":4") != std::string::npos);
  CHECK(j.find("\"poset_automorphisms\":2") != std::string::npos);
  CHECK(j.find("\"product_automorphisms\":24") != std::string::npos);
  CHECK(j.find("\"flip_in_closure\":false") != std::string::npos);
}

TEST_CASE("poset text form") {
  const auto d = FinitePoset::diamond();
  const std::string t = altdiam::poset_to_text(d);
  CHECK(t == "4\n0 < 1\n0 < 2\n1 < 3\n2 < 3\n");  // covers only, closure implied
  CHECK(altdiam::poset_from_text(t) == d);

  CHECK(altdiam::poset_from_text("3\n0 < 1\n1 < 2\n") == FinitePoset::chain(3));
  CHECK(altdiam::poset_from_text("2\n") == FinitePoset::antichain(2));
  CHECK(altdiam::poset_to_text(FinitePoset::antichain(2)) == "2\n");

  CHECK_THROWS_AS(altdiam::poset_from_text("2\n0 > 1\n"), Error);
  CHECK_THROWS_AS(altdiam::poset_from_text(""), Error);
  CHECK_THROWS_AS(altdiam::poset_from_text("3\n0 < 1\n1 < 0\n"), Error);  // cycle
}
