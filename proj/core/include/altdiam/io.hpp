#pragma once

#include <string>
#include <vector>

#include "altdiam/census.hpp"
#include "altdiam/decompose.hpp"
#include "altdiam/linear.hpp"
#include "altdiam/multi.hpp"
#include "altdiam/poset.hpp"
#include "altdiam/sparse.hpp"

namespace altdiam {

// All *_to_json functions emit compact JSON with a fixed key order, so equal
// values serialize to equal bytes. Parsers throw altdiam::Error
// (InvalidInput for malformed documents, or the constructing type's own
// validation errors). parse_* helpers sniff the format: JSON when the first
// non-space byte is '{', the text form otherwise.

// Grid permutations.
// JSON {"m":int,"n":int,"map":[[[a,b],[a2,b2]],...]}, sources in
// lexicographic order. Text: "m n" on line 1, then m*n lines "a b -> a2 b2".
std::string grid_permutation_to_json(const GridPermutation& p);
std::string grid_permutation_to_text(const GridPermutation& p);
GridPermutation grid_permutation_from_json(const std::string& text);
GridPermutation grid_permutation_from_text(const std::string& text);
GridPermutation parse_grid_permutation(const std::string& text);

// Grid decompositions: {"order":"RLR","stages":[{"kind":"R","perms":[[..],..]},..]}.
std::string decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const std::string& text);

// Multi-axis permutations.
// JSON {"dims":[d1,..,dk],"map":[[[c1..ck],[e1..ek]],...]}, sources in
// lexicographic order. Text: "d1 d2 .. dk" on line 1, then one line
// "c1 .. ck -> e1 .. ek" per cell.
std::string multi_permutation_to_json(const MultiGridPermutation& p);
std::string multi_permutation_to_text(const MultiGridPermutation& p);
MultiGridPermutation multi_permutation_from_json(const std::string& text);
MultiGridPermutation multi_permutation_from_text(const std::string& text);
MultiGridPermutation parse_multi_permutation(const std::string& text);

// Multi-axis decompositions: {"dims":[...],"stages":[{"axis":k,"perms":[[..],..]},..]}.
struct MultiDecomposition {
  std::vector<int> dims;
  std::vector<MultiStage> stages;
};
std::string multi_decomposition_to_json(const MultiDecomposition& d);
MultiDecomposition multi_decomposition_from_json(const std::string& text);

// Finite-support permutations of N x N.
// JSON {"support":[[[a,b],[a2,b2]],...]}. Text: one line "a b -> a2 b2" per
// support point (no header; the empty string is the identity).
std::string sparse_permutation_to_json(const SparsePermutation& p);
std::string sparse_permutation_to_text(const SparsePermutation& p);
SparsePermutation sparse_permutation_from_json(const std::string& text);
SparsePermutation sparse_permutation_from_text(const std::string& text);
SparsePermutation parse_sparse_permutation(const std::string& text);

// Finite-support decompositions carry their bounding grid:
// {"m":int,"n":int,"order":...,"stages":[...]}.
std::string sparse_decomposition_to_json(const SparseDecomposition& d);
SparseDecomposition sparse_decomposition_from_json(const std::string& text);

// Matrices over prime fields.
// JSON {"p":int,"rows":[[..],..]}. Text: "p rows cols" on line 1, then one
// line of entries per row (entries reduced mod p on load).
std::string field_matrix_to_json(const FieldMatrix& a);
std::string field_matrix_to_text(const FieldMatrix& a);
FieldMatrix field_matrix_from_json(const std::string& text);
FieldMatrix field_matrix_from_text(const std::string& text);
FieldMatrix parse_field_matrix(const std::string& text);

// Linear stages serialize as a matrix plus "kind" and "split"; a linear
// decomposition is {"split":{"m":..,"n":..},"stages":[<stage>,...]}.
std::string linear_stage_to_json(const LinearStage& s, BlockSplit split);
std::string linear_decomposition_to_json(const LinearDecomposition& d);
LinearDecomposition linear_decomposition_from_json(const std::string& text);

// Reports.
std::string census_report_to_json(const CensusReport& r);
/// Header "word,size", then one row per word in the report's order.
std::string census_report_to_csv(const CensusReport& r);
std::string lower_bound_report_to_json(const LowerBoundReport& r);
std::string flip_report_to_json(int poset_size, std::uint64_t poset_aut_size,
                                const FlipReport& r);

// Posets. Text: size on line 1, then covering pairs "a < b" one per line;
// the relation is closed transitively on load.
std::string poset_to_text(const FinitePoset& p);
FinitePoset poset_from_text(const std::string& text);

}  // namespace altdiam
