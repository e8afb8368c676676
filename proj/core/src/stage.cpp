#include "altdiam/stage.hpp"

#include "altdiam/small_perm.hpp"

namespace altdiam {

const char* stage_kind_name(StageKind k) {
  switch (k) {
    case StageKind::L: return "L";
    case StageKind::R: return "R";
    case StageKind::Both: return "Both";
    case StageKind::Neither: return "Neither";
  }
  return "?";
}

GridPermutation as_grid_permutation(const Stage& s, int m, int n) {
  const std::size_t outer = s.kind == Letter::L ? static_cast<std::size_t>(n)
                                                : static_cast<std::size_t>(m);
  const std::size_t inner = s.kind == Letter::L ? static_cast<std::size_t>(m)
                                                : static_cast<std::size_t>(n);
  if (s.perms.size() != outer)
    throw Error(ErrorCode::DimensionMismatch,
                "stage " + std::string(1, letter_char(s.kind)) + " has " +
                    std::to_string(s.perms.size()) + " perms, expected " +
                    std::to_string(outer));
  for (const auto& p : s.perms) {
    if (p.size() != inner)
      throw Error(ErrorCode::DimensionMismatch,
                  "stage perm over " + std::to_string(p.size()) +
                      " indices, expected " + std::to_string(inner));
    if (!is_perm_table(p))
      throw Error(ErrorCode::NotInjective, "stage entry is not a permutation");
  }
  std::vector<int> table(static_cast<std::size_t>(m) * n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b)
      table[a * n + b] = s.kind == Letter::L ? s.perms[b][a] * n + b
                                             : a * n + s.perms[a][b];
  return GridPermutation::from_table(m, n, std::move(table));
}

Stage identity_stage(Letter kind, int m, int n) {
  Stage s;
  s.kind = kind;
  const int outer = kind == Letter::L ? n : m;
  const int inner = kind == Letter::L ? m : n;
  s.perms.assign(outer, identity_perm(inner));
  return s;
}

AlternationWord AlternationWord::parse(const std::string& text) {
  if (text == "1") return AlternationWord{};
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c == 'L' || c == 'l')
      letters.push_back(Letter::L);
    else if (c == 'R' || c == 'r')
      letters.push_back(Letter::R);
    else
      throw Error(ErrorCode::InvalidInput,
                  "word may only contain L and R, got '" + std::string(1, c) + "'");
  }
  return AlternationWord(std::move(letters));
}

std::string AlternationWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (Letter l : letters_) s += letter_char(l);
  return s;
}

AlternationWord AlternationWord::collapsed() const {
  std::vector<Letter> out;
  for (Letter l : letters_)
    if (out.empty() || out.back() != l) out.push_back(l);
  return AlternationWord(std::move(out));
}

std::string Decomposition::order() const {
  if (stages.empty()) return "1";
  std::string s;
  for (const Stage& st : stages) s += letter_char(st.kind);
  return s;
}

GridPermutation composed(const Decomposition& d, int m, int n) {
  GridPermutation acc = GridPermutation::identity(m, n);
  for (const Stage& st : d.stages) acc = compose(as_grid_permutation(st, m, n), acc);
  return acc;
}

StageKind stage_kind(const GridPermutation& p) {
  bool col_preserving = true;  // candidate for L: (a,b) -> (?,b)
  bool row_preserving = true;  // candidate for R: (a,b) -> (a,?)
  for (int a = 0; a < p.m() && (col_preserving || row_preserving); ++a)
    for (int b = 0; b < p.n(); ++b) {
      const Point q = p.apply(Point{a, b});
      if (q.b != b) col_preserving = false;
      if (q.a != a) row_preserving = false;
    }
  if (col_preserving && row_preserving) return StageKind::Both;
  if (col_preserving) return StageKind::L;
  if (row_preserving) return StageKind::R;
  return StageKind::Neither;
}

namespace {

bool columns_bijective_on_rows(const GridPermutation& p) {
  for (int b = 0; b < p.n(); ++b) {
    std::vector<char> seen(p.m(), 0);
    for (int a = 0; a < p.m(); ++a) {
      const int row = p.apply(Point{a, b}).a;
      if (seen[row]) return false;
      seen[row] = 1;
    }
  }
  return true;
}

bool rows_bijective_on_columns(const GridPermutation& p) {
  for (int a = 0; a < p.m(); ++a) {
    std::vector<char> seen(p.n(), 0);
    for (int b = 0; b < p.n(); ++b) {
      const int col = p.apply(Point{a, b}).b;
      if (seen[col]) return false;
      seen[col] = 1;
    }
  }
  return true;
}

}  // namespace

bool in_word(const GridPermutation& p, const AlternationWord& w) {
  const AlternationWord c = w.collapsed();
  // Any word whose collapsed form still alternates three letters covers the
  // whole symmetric group of the grid.
  if (c.size() >= 3) return true;
  if (c.size() == 0) return p.is_identity();
  if (c.size() == 1) {
    const StageKind k = stage_kind(p);
    if (k == StageKind::Both) return true;
    return c.letters()[0] == Letter::L ? k == StageKind::L : k == StageKind::R;
  }
  if (c.letters()[0] == Letter::R && c.letters()[1] == Letter::L)
    return columns_bijective_on_rows(p);
  if (c.letters()[0] == Letter::L && c.letters()[1] == Letter::R)
    return rows_bijective_on_columns(p);
  throw Error(ErrorCode::UnsupportedWord, "no membership test for word " + w.str());
}

}  // namespace altdiam
