#include "altdiam/io.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace altdiam {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_document(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

const ordered_json& member(const ordered_json& j, const char* key) {
  if (!j.is_object())
    throw Error(ErrorCode::InvalidInput, std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end())
    throw Error(ErrorCode::InvalidInput, std::string("missing key \"") + key + "\"");
  return *it;
}

long long as_int(const ordered_json& j, const char* what) {
  if (!j.is_number_integer())
    throw Error(ErrorCode::InvalidInput, std::string(what) + " must be an integer");
  return j.get<long long>();
}

const ordered_json& as_array(const ordered_json& j, const char* what) {
  if (!j.is_array())
    throw Error(ErrorCode::InvalidInput, std::string(what) + " must be an array");
  return j;
}

std::vector<int> int_vector(const ordered_json& j, const char* what) {
  std::vector<int> out;
  for (const auto& e : as_array(j, what)) out.push_back(static_cast<int>(as_int(e, what)));
  return out;
}

Point point_from(const ordered_json& j, const char* what) {
  const auto& arr = as_array(j, what);
  if (arr.size() != 2)
    throw Error(ErrorCode::InvalidInput, std::string(what) + " must hold two integers");
  return Point{static_cast<int>(as_int(arr[0], what)), static_cast<int>(as_int(arr[1], what))};
}

std::vector<std::pair<Point, Point>> point_pairs(const ordered_json& j, const char* what) {
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& entry : as_array(j, what)) {
    const auto& pair = as_array(entry, what);
    if (pair.size() != 2)
      throw Error(ErrorCode::InvalidInput, std::string(what) + " entries must be [source, image]");
    pairs.emplace_back(point_from(pair[0], what), point_from(pair[1], what));
  }
  return pairs;
}

ordered_json point_json(Point p) { return ordered_json::array({p.a, p.b}); }

// --- text-stream helpers ---

long long read_int(std::istream& in, const char* what) {
  long long v;
  if (!(in >> v))
    throw Error(ErrorCode::InvalidInput, std::string("expected ") + what);
  return v;
}

void expect_token(std::istream& in, const char* expected) {
  std::string tok;
  if (!(in >> tok))
    throw Error(ErrorCode::InvalidInput, std::string("expected \"") + expected + "\"");
  if (tok != expected)
    throw Error(ErrorCode::InvalidInput,
                std::string("expected \"") + expected + "\", got \"" + tok + "\"");
}

void expect_end(std::istream& in) {
  std::string tok;
  if (in >> tok)
    throw Error(ErrorCode::InvalidInput, "unexpected trailing input: \"" + tok + "\"");
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

// --- shared stage encoding ---

ordered_json stage_to_json(const Stage& s) {
  ordered_json j;
  j["kind"] = std::string(1, letter_char(s.kind));
  j["perms"] = s.perms;
  return j;
}

Letter letter_from(const ordered_json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "L") return Letter::L;
    if (s == "R") return Letter::R;
  }
  throw Error(ErrorCode::InvalidInput, "stage kind must be \"L\" or \"R\"");
}

std::vector<std::vector<int>> perms_from(const ordered_json& j) {
  std::vector<std::vector<int>> perms;
  for (const auto& row : as_array(j, "\"perms\"")) perms.push_back(int_vector(row, "permutation entry"));
  return perms;
}

std::vector<Stage> stages_from(const ordered_json& j) {
  std::vector<Stage> stages;
  for (const auto& sj : as_array(j, "\"stages\"")) {
    Stage s;
    s.kind = letter_from(member(sj, "kind"));
    s.perms = perms_from(member(sj, "perms"));
    stages.push_back(std::move(s));
  }
  return stages;
}

void check_order_tag(const ordered_json& doc, const Decomposition& d) {
  const auto& tag = member(doc, "order");
  if (!tag.is_string() || tag.get<std::string>() != d.order())
    throw Error(ErrorCode::InvalidInput, "\"order\" disagrees with the stage kinds");
}

}  // namespace

// --- grid permutations ---

std::string grid_permutation_to_json(const GridPermutation& p) {
  ordered_json j;
  j["m"] = p.m();
  j["n"] = p.n();
  auto map = ordered_json::array();
  for (int idx = 0; idx < p.cells(); ++idx)
    map.push_back(ordered_json::array(
        {point_json(p.unflat(idx)), point_json(p.unflat(p.apply_flat(idx)))}));
  j["map"] = std::move(map);
  return j.dump();
}

std::string grid_permutation_to_text(const GridPermutation& p) {
  std::ostringstream out;
  out << p.m() << ' ' << p.n() << '\n';
  for (int idx = 0; idx < p.cells(); ++idx) {
    Point s = p.unflat(idx), t = p.unflat(p.apply_flat(idx));
    out << s.a << ' ' << s.b << " -> " << t.a << ' ' << t.b << '\n';
  }
  return out.str();
}

GridPermutation grid_permutation_from_json(const std::string& text) {
  ordered_json doc = parse_document(text);
  int m = static_cast<int>(as_int(member(doc, "m"), "\"m\""));
  int n = static_cast<int>(as_int(member(doc, "n"), "\"n\""));
  return GridPermutation::from_pairs(m, n, point_pairs(member(doc, "map"), "\"map\""));
}

GridPermutation grid_permutation_from_text(const std::string& text) {
  std::istringstream in(text);
  int m = static_cast<int>(read_int(in, "grid rows"));
  int n = static_cast<int>(read_int(in, "grid columns"));
  if (m < 1 || n < 1)
    throw Error(ErrorCode::InvalidInput, "grid dimensions must be positive");
  if (m > 100000 || n > 100000 || static_cast<long long>(m) * n > 10000000)
    throw Error(ErrorCode::InstanceTooLarge, "text form supports up to 10^7 cells");
  std::vector<std::pair<Point, Point>> pairs;
  for (int k = 0; k < m * n; ++k) {
    Point s{static_cast<int>(read_int(in, "source row")),
            static_cast<int>(read_int(in, "source column"))};
    expect_token(in, "->");
    Point t{static_cast<int>(read_int(in, "image row")),
            static_cast<int>(read_int(in, "image column"))};
    pairs.emplace_back(s, t);
  }
  expect_end(in);
  return GridPermutation::from_pairs(m, n, pairs);
}

GridPermutation parse_grid_permutation(const std::string& text) {
  return looks_like_json(text) ? grid_permutation_from_json(text)
                               : grid_permutation_from_text(text);
}

// --- grid decompositions ---

std::string decomposition_to_json(const Decomposition& d) {
  ordered_json j;
  j["order"] = d.order();
  auto stages = ordered_json::array();
  for (const auto& s : d.stages) stages.push_back(stage_to_json(s));
  j["stages"] = std::move(stages);
  return j.dump();
}

Decomposition decomposition_from_json(const std::string& text) {
  ordered_json doc = parse_document(text);
  Decomposition d;
  d.stages = stages_from(member(doc, "stages"));
  check_order_tag(doc, d);
  return d;
}

// --- multi-axis permutations ---

std::string multi_permutation_to_json(const MultiGridPermutation& p) {
  ordered_json j;
  j["dims"] = p.dims();
  auto map = ordered_json::array();
  for (int idx = 0; idx < p.cells(); ++idx)
    map.push_back(ordered_json::array({p.unflat(idx), p.unflat(p.apply_flat(idx))}));
  j["map"] = std::move(map);
  return j.dump();
}

std::string multi_permutation_to_text(const MultiGridPermutation& p) {
  std::ostringstream out;
  for (int i = 0; i < p.axes(); ++i) out << (i ? " " : "") << p.dims()[i];
  out << '\n';
  for (int idx = 0; idx < p.cells(); ++idx) {
    auto src = p.unflat(idx), img = p.unflat(p.apply_flat(idx));
    for (std::size_t i = 0; i < src.size(); ++i) out << (i ? " " : "") << src[i];
    out << " ->";
    for (int v : img) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

namespace {

int flat_index(const std::vector<int>& dims, const std::vector<int>& coords, const char* what) {
  if (coords.size() != dims.size())
    throw Error(ErrorCode::InvalidInput,
                std::string(what) + " must list " + std::to_string(dims.size()) + " coordinates");
  long long idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= dims[i])
      throw Error(ErrorCode::RangeViolation,
                  std::string(what) + " coordinate " + std::to_string(coords[i]) +
                      " outside 0.." + std::to_string(dims[i] - 1));
    idx = idx * dims[i] + coords[i];
  }
  return static_cast<int>(idx);
}

std::string coord_string(const std::vector<int>& coords) {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i)
    s += (i ? ", " : "") + std::to_string(coords[i]);
  return s + ")";
}

MultiGridPermutation multi_from_cells(
    std::vector<int> dims, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& cells) {
  long long total = 1;
  for (int d : dims) {
    if (d < 1) throw Error(ErrorCode::InvalidInput, "axis sizes must be positive");
    total *= d;
    if (total > 10000000) throw Error(ErrorCode::InstanceTooLarge, "more than 10^7 cells");
  }
  std::vector<int> table(static_cast<std::size_t>(total), -1);
  for (const auto& [src, img] : cells) {
    int s = flat_index(dims, src, "source");
    int t = flat_index(dims, img, "image");
    if (table[s] != -1)
      throw Error(ErrorCode::DuplicateSource, "source " + coord_string(src) + " listed twice");
    table[s] = t;
  }
  for (long long i = 0; i < total; ++i)
    if (table[i] == -1) {
      // reconstruct the coordinates for the message
      std::vector<int> c(dims.size());
      long long rest = i;
      for (int ax = static_cast<int>(dims.size()) - 1; ax >= 0; --ax) {
        c[ax] = static_cast<int>(rest % dims[ax]);
        rest /= dims[ax];
      }
      throw Error(ErrorCode::MissingSource, "no entry for source " + coord_string(c));
    }
  return MultiGridPermutation::from_table(std::move(dims), std::move(table));
}

}  // namespace

MultiGridPermutation multi_permutation_from_json(const std::string& text) {
  ordered_json doc = parse_document(text);
  std::vector<int> dims = int_vector(member(doc, "dims"), "\"dims\"");
  std::vector<std::pair<std::vector<int>, std::vector<int>>> cells;
  for (const auto& entry : as_array(member(doc, "map"), "\"map\"")) {
    const auto& pair = as_array(entry, "\"map\"");
    if (pair.size() != 2)
      throw Error(ErrorCode::InvalidInput, "\"map\" entries must be [source, image]");
    cells.emplace_back(int_vector(pair[0], "source"), int_vector(pair[1], "image"));
  }
  return multi_from_cells(std::move(dims), cells);
}

MultiGridPermutation multi_permutation_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string first_line;
  while (std::getline(in, first_line)) {
    if (first_line.find_first_not_of(" \t\r") != std::string::npos) break;
    first_line.clear();
  }
  std::istringstream head(first_line);
  std::vector<int> dims;
  long long d;
  while (head >> d) dims.push_back(static_cast<int>(d));
  if (dims.empty())
    throw Error(ErrorCode::InvalidInput, "expected axis sizes on the first line");
  long long total = 1;
  for (int v : dims) {
    if (v < 1) throw Error(ErrorCode::InvalidInput, "axis sizes must be positive");
    total *= v;
    if (total > 10000000) throw Error(ErrorCode::InstanceTooLarge, "more than 10^7 cells");
  }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> cells;
  const int k = static_cast<int>(dims.size());
  for (long long c = 0; c < total; ++c) {
    std::vector<int> src(k), img(k);
    for (int i = 0; i < k; ++i) src[i] = static_cast<int>(read_int(in, "source coordinate"));
    expect_token(in, "->");
    for (int i = 0; i < k; ++i) img[i] = static_cast<int>(read_int(in, "image coordinate"));
    cells.emplace_back(std::move(src), std::move(img));
  }
  expect_end(in);
  return multi_from_cells(std::move(dims), cells);
}

MultiGridPermutation parse_multi_permutation(const std::string& text) {
  return looks_like_json(text) ? multi_permutation_from_json(text)
                               : multi_permutation_from_text(text);
}

// --- multi-axis decompositions ---

std::string multi_decomposition_to_json(const MultiDecomposition& d) {
  ordered_json j;
  j["dims"] = d.dims;
  auto stages = ordered_json::array();
  for (const auto& s : d.stages) {
    ordered_json sj;
    sj["axis"] = s.axis;
    sj["perms"] = s.perms;
    stages.push_back(std::move(sj));
  }
  j["stages"] = std::move(stages);
  return j.dump();
}

MultiDecomposition multi_decomposition_from_json(const std::string& text) {
  ordered_json doc = parse_document(text);
  MultiDecomposition d;
  d.dims = int_vector(member(doc, "dims"), "\"dims\"");
  for (const auto& sj : as_array(member(doc, "stages"), "\"stages\"")) {
    MultiStage s;
    s.axis = static_cast<int>(as_int(member(sj, "axis"), "\"axis\""));
    s.perms = perms_from(member(sj, "perms"));
    d.stages.push_back(std::move(s));
  }
  return d;
}

// --- finite-support permutations ---

std::string sparse_permutation_to_json(const SparsePermutation& p) {
  ordered_json j;
  auto support = ordered_json::array();
  for (const auto& [src, img] : p.support())
    support.push_back(ordered_json::array({point_json(src), point_json(img)}));
  j["support"] = std::move(support);
  return j.dump();
}

std::string sparse_permutation_to_text(const SparsePermutation& p) {
  std::ostringstream out;
  for (const auto& [src, img] : p.support())
    out << src.a << ' ' << src.b << " -> " << img.a << ' ' << img.b << '\n';
  return out.str();
}

SparsePermutation sparse_permutation_from_json(const std::string& text) {
  ordered_json doc = parse_document(text);
  return SparsePermutation::from_pairs(point_pairs(member(doc, "support"), "\"support\""));
}

SparsePermutation sparse_permutation_from_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::pair<Point, Point>> pairs;
  long long a;
  while (in >> a) {
    Point s{static_cast<int>(a), static_cast<int>(read_int(in, "source column"))};
    expect_token(in, "->");
    Point t{static_cast<int>(read_int(in, "image row")),
            static_cast<int>(read_int(in, "image column"))};
    pairs.emplace_back(s, t);
  }
  return SparsePermutation::from_pairs(pairs);
}

SparsePermutation parse_sparse_permutation(const std::string& text) {
  return looks_like_json(text) ? sparse_permutation_from_json(text)
                               : sparse_permutation_from_text(text);
}

std::string sparse_decomposition_to_json(const SparseDecomposition& d) {
  ordered_json j;
  j["m"] = d.m;
  j["n"] = d.n;
  j["order"] = d.decomposition.order();
  auto stages = ordered_json::array();
  for (const auto& s : d.decomposition.stages) stages.push_back(stage_to_json(s));
  j["stages"] = std::move(stages);
  return j.dump();
}

SparseDecomposition sparse_decomposition_from_json(const std::string& text) {
  ordered_json doc = parse_document(text);
  SparseDecomposition d;
  d.m = static_cast<int>(as_int(member(doc, "m"), "\"m\""));
  d.n = static_cast<int>(as_int(member(doc, "n"), "\"n\""));
  d.decomposition.stages = stages_from(member(doc, "stages"));
  check_order_tag(doc, d.decomposition);
  if (d.m < 0 || d.n < 0 || (d.m == 0) != (d.n == 0))
    throw Error(ErrorCode::InvalidInput, "bounding grid must be empty or positive in both axes");
  return d;
}

// --- field matrices ---

std::string field_matrix_to_json(const FieldMatrix& a) {
  ordered_json j;
  j["p"] = a.field().p();
  auto rows = ordered_json::array();
  for (int r = 0; r < a.rows(); ++r) {
    auto row = ordered_json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(a.at(r, c));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

std::string field_matrix_to_text(const FieldMatrix& a) {
  std::ostringstream out;
  out << a.field().p() << ' ' << a.rows() << ' ' << a.cols() << '\n';
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out << (c ? " " : "") << a.at(r, c);
    out << '\n';
  }
  return out.str();
}

namespace {

FieldMatrix matrix_from_parts(long long p, const std::vector<std::vector<long long>>& rows) {
  if (p < 0 || p > 0xFFFF) throw Error(ErrorCode::NotPrime, "field size out of range");
  if (rows.empty()) throw Error(ErrorCode::InvalidInput, "matrix needs at least one row");
  return FieldMatrix::from_rows(PrimeField(static_cast<std::uint32_t>(p)), rows);
}

}  // namespace

FieldMatrix field_matrix_from_json(const std::string& text) {
  ordered_json doc = parse_document(text);
  long long p = as_int(member(doc, "p"), "\"p\"");
  std::vector<std::vector<long long>> rows;
  for (const auto& row : as_array(member(doc, "rows"), "\"rows\"")) {
    rows.emplace_back();
    for (const auto& e : as_array(row, "matrix row")) rows.back().push_back(as_int(e, "entry"));
  }
  return matrix_from_parts(p, rows);
}

FieldMatrix field_matrix_from_text(const std::string& text) {
  std::istringstream in(text);
  long long p = read_int(in, "field size");
  long long r = read_int(in, "row count");
  long long c = read_int(in, "column count");
  if (r < 1 || c < 1 || r > 4096 || c > 4096)
    throw Error(ErrorCode::InvalidInput, "matrix dimensions must be in 1..4096");
  std::vector<std::vector<long long>> rows(static_cast<std::size_t>(r),
                                           std::vector<long long>(static_cast<std::size_t>(c)));
  for (auto& row : rows)
    for (auto& e : row) e = read_int(in, "matrix entry");
  expect_end(in);
  return matrix_from_parts(p, rows);
}

FieldMatrix parse_field_matrix(const std::string& text) {
  return looks_like_json(text) ? field_matrix_from_json(text) : field_matrix_from_text(text);
}

// --- linear decompositions ---

namespace {

ordered_json linear_stage_json(const LinearStage& s, BlockSplit split) {
  ordered_json j;
  j["kind"] = std::string(1, letter_char(s.kind));
  j["split"] = ordered_json{{"m", split.m}, {"n", split.n}};
  j["p"] = s.matrix.field().p();
  auto rows = ordered_json::array();
  for (int r = 0; r < s.matrix.rows(); ++r) {
    auto row = ordered_json::array();
    for (int c = 0; c < s.matrix.cols(); ++c) row.push_back(s.matrix.at(r, c));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace

std::string linear_stage_to_json(const LinearStage& s, BlockSplit split) {
  return linear_stage_json(s, split).dump();
}

std::string linear_decomposition_to_json(const LinearDecomposition& d) {
  ordered_json j;
  j["split"] = ordered_json{{"m", d.split.m}, {"n", d.split.n}};
  auto stages = ordered_json::array();
  for (const auto& s : d.stages) stages.push_back(linear_stage_json(s, d.split));
  j["stages"] = std::move(stages);
  return j.dump();
}

LinearDecomposition linear_decomposition_from_json(const std::string& text) {
  ordered_json doc = parse_document(text);
  const auto& sj = member(doc, "split");
  BlockSplit split{static_cast<int>(as_int(member(sj, "m"), "split \"m\"")),
                   static_cast<int>(as_int(member(sj, "n"), "split \"n\""))};
  std::vector<LinearStage> stages;
  long long p = -1;
  for (const auto& stage_doc : as_array(member(doc, "stages"), "\"stages\"")) {
    Letter kind = letter_from(member(stage_doc, "kind"));
    const auto& ssj = member(stage_doc, "split");
    if (as_int(member(ssj, "m"), "stage split \"m\"") != split.m ||
        as_int(member(ssj, "n"), "stage split \"n\"") != split.n)
      throw Error(ErrorCode::InvalidInput, "stage split disagrees with the decomposition split");
    long long stage_p = as_int(member(stage_doc, "p"), "\"p\"");
    if (p == -1) p = stage_p;
    if (stage_p != p)
      throw Error(ErrorCode::InvalidInput, "stages disagree on the field size");
    std::vector<std::vector<long long>> rows;
    for (const auto& row : as_array(member(stage_doc, "rows"), "\"rows\"")) {
      rows.emplace_back();
      for (const auto& e : as_array(row, "matrix row")) rows.back().push_back(as_int(e, "entry"));
    }
    stages.push_back(LinearStage{kind, matrix_from_parts(p, rows)});
  }
  if (stages.empty()) throw Error(ErrorCode::InvalidInput, "a linear decomposition needs stages");
  return LinearDecomposition{split, std::move(stages)};
}

// --- reports ---

std::string census_report_to_json(const CensusReport& r) {
  ordered_json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["total"] = r.total;
  ordered_json sizes;
  for (const auto& [word, size] : r.sizes) sizes[word] = size;
  j["sizes"] = std::move(sizes);
  j["intersection_LR_RL"] = r.intersection_lr_rl;
  auto rows = ordered_json::array();
  for (const auto& row : r.hierarchy_rows) {
    ordered_json rj;
    rj["level"] = row.level;
    rj["sigma"] = row.sigma_size;
    rj["pi"] = row.pi_size;
    rj["delta"] = row.delta_size;
    rows.push_back(std::move(rj));
  }
  j["hierarchy"] = std::move(rows);
  j["collapse_level"] = r.collapse_level;
  return j.dump();
}

std::string census_report_to_csv(const CensusReport& r) {
  std::ostringstream out;
  out << "word,size\n";
  for (const auto& [word, size] : r.sizes) out << word << ',' << size << '\n';
  return out.str();
}

std::string lower_bound_report_to_json(const LowerBoundReport& r) {
  ordered_json j;
  j["dims"] = r.dims;
  j["schedule"] = r.schedule;
  j["universe"] = r.universe;
  j["product_size"] = r.product_size;
  j["covered"] = r.covered;
  j["witness"] = r.witness_table ? ordered_json(*r.witness_table) : ordered_json(nullptr);
  return j.dump();
}

std::string flip_report_to_json(int poset_size, std::uint64_t poset_aut_size,
                                const FlipReport& r) {
  ordered_json j;
  j["size"] = poset_size;
  j["poset_automorphisms"] = poset_aut_size;
  j["product_automorphisms"] = r.aut_size;
  j["left_size"] = r.left_size;
  j["right_size"] = r.right_size;
  j["closure_size"] = r.closure_size;
  j["flip_in_closure"] = r.flip_in_closure;
  return j.dump();
}

// --- posets ---

std::string poset_to_text(const FinitePoset& p) {
  std::ostringstream out;
  out << p.size() << '\n';
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (x == y || !p.leq(x, y)) continue;
      bool covering = true;
      for (int z = 0; z < p.size() && covering; ++z)
        if (z != x && z != y && p.leq(x, z) && p.leq(z, y)) covering = false;
      if (covering) out << x << " < " << y << '\n';
    }
  return out.str();
}

FinitePoset poset_from_text(const std::string& text) {
  std::istringstream in(text);
  int size = static_cast<int>(read_int(in, "poset size"));
  std::vector<std::pair<int, int>> pairs;
  long long a;
  while (in >> a) {
    expect_token(in, "<");
    long long b = read_int(in, "right side of \"<\"");
    pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return FinitePoset::from_cover_pairs(size, pairs);
}

}  // namespace altdiam
