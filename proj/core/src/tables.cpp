#include "sphflex/tables.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sphflex/error.hpp"

namespace sphflex {

std::string_view to_string(Subcase s) {
  switch (s) {
    case Subcase::none: return "-";
    case Subcase::coincide: return "coincide";
    case Subcase::antipodal: return "antipodal";
    case Subcase::type1: return "Type 1";
    case Subcase::type2: return "Type 2";
    case Subcase::type3: return "Type 3";
    case Subcase::type4: return "Type 4";
  }
  return "-";
}

int MuRow::at(QuadCut d) const {
  switch (d) {
    case QuadCut::om: return om;
    case QuadCut::ou: return ou;
    case QuadCut::em: return em;
    case QuadCut::eu: return eu;
  }
  return 0;
}

const std::vector<std::pair<MuRowKey, MuRow>>& mu_table() {
  static const std::vector<std::pair<MuRowKey, MuRow>> rows{
      {{QuadTag::general, Subcase::none}, {1, 1, 1, 1}},
      {{QuadTag::odd_deltoid, Subcase::coincide}, {1, 1, 1, 0}},
      {{QuadTag::odd_deltoid, Subcase::antipodal}, {1, 1, 0, 1}},
      {{QuadTag::even_deltoid, Subcase::coincide}, {1, 0, 1, 1}},
      {{QuadTag::even_deltoid, Subcase::antipodal}, {0, 1, 1, 1}},
      {{QuadTag::rhomboid, Subcase::type1}, {1, 0, 1, 0}},
      {{QuadTag::rhomboid, Subcase::type2}, {0, 1, 1, 0}},
      {{QuadTag::rhomboid, Subcase::type3}, {1, 0, 0, 1}},
      {{QuadTag::rhomboid, Subcase::type4}, {0, 1, 0, 1}},
      {{QuadTag::lozenge, Subcase::type1}, {1, 0, 1, 0}},
      {{QuadTag::lozenge, Subcase::type2}, {0, 1, 1, 0}},
      {{QuadTag::lozenge, Subcase::type3}, {1, 0, 0, 1}},
      {{QuadTag::lozenge, Subcase::type4}, {0, 1, 0, 1}},
  };
  return rows;
}

MuRow mu_lookup(QuadTag tag, Subcase subcase) {
  for (const auto& [key, row] : mu_table())
    if (key.tag == tag && key.subcase == subcase) return row;
  fail(ErrorCode::UnknownRow, std::string(to_string(tag)) + " / " + std::string(to_string(subcase)));
}

int theta(int d1, int d2, int d3) {
  for (int d : {d1, d2, d3})
    if (d != 1 && d != 2) fail(ErrorCode::OutOfRange, "degrees must be 1 or 2");
  if (d1 == 1 && d2 == 1 && d3 == 1) return 1;
  if (d1 == 2 && d2 == 2 && d3 == 2) return 4;
  return 2;
}

int DegreeTable::row_margin(int i) const { return theta(deg[i][0], deg[i][1], deg[i][2]); }

int DegreeTable::col_margin(int j) const { return theta(deg[0][j], deg[1][j], deg[2][j]); }

std::string DegreeTable::to_string() const {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (i) s += "/";
    for (int j = 0; j < 3; ++j) s += std::to_string(deg[i][j]);
  }
  return s;
}

std::string_view to_string(TypeSymbol s) {
  switch (s) {
    case TypeSymbol::g: return "g";
    case TypeSymbol::o: return "o";
    case TypeSymbol::e: return "e";
    case TypeSymbol::r: return "r";
    case TypeSymbol::l: return "l";
    case TypeSymbol::rl: return "r/l";
  }
  return "?";
}

std::string TypeTable::to_string() const {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (i) s += " / ";
    for (int j = 0; j < 3; ++j) {
      if (j) s += " ";
      s += sphflex::to_string(t[i][j]);
    }
  }
  return s;
}

TypeTable parse_type_table(const std::string& rows) {
  TypeTable tt;
  int i = 0;
  int j = 0;
  for (char ch : rows) {
    if (ch == '/') {
      if (j != 3) fail(ErrorCode::ParseError, "type table rows need three entries");
      ++i;
      j = 0;
      continue;
    }
    if (ch == ' ') continue;
    if (i > 2 || j > 2) fail(ErrorCode::ParseError, "type table is 3x3");
    TypeSymbol s{};
    switch (ch) {
      case 'g': s = TypeSymbol::g; break;
      case 'o': s = TypeSymbol::o; break;
      case 'e': s = TypeSymbol::e; break;
      case 'r': s = TypeSymbol::r; break;
      case 'l': s = TypeSymbol::l; break;
      default: fail(ErrorCode::ParseError, std::string("unknown type symbol '") + ch + "'");
    }
    tt.t[i][j++] = s;
  }
  if (i != 2 || j != 3) fail(ErrorCode::ParseError, "type table is 3x3");
  return tt;
}

namespace {

TypeSymbol type_of(int entry, int row_margin, int col_margin) {
  if (entry == 2) {
    if (row_margin == 4 && col_margin == 4) return TypeSymbol::g;
    if (row_margin == 2 && col_margin == 4) return TypeSymbol::e;
    if (row_margin == 4 && col_margin == 2) return TypeSymbol::o;
    return TypeSymbol::rl;
  }
  if (row_margin == 2 && col_margin == 2) return TypeSymbol::g;
  if (row_margin == 1 && col_margin == 2) return TypeSymbol::e;
  if (row_margin == 2 && col_margin == 1) return TypeSymbol::o;
  return TypeSymbol::rl;
}

bool same_multiset(std::array<TypeSymbol, 3> a, std::array<TypeSymbol, 3> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Shared rule: two g's and anything, or one of the listed triples.
bool triple_allowed(const std::array<TypeSymbol, 3>& x,
                    const std::vector<std::array<TypeSymbol, 3>>& listed) {
  if (std::count(x.begin(), x.end(), TypeSymbol::rl) > 0) return false;
  if (std::count(x.begin(), x.end(), TypeSymbol::g) >= 2) return true;
  for (const auto& y : listed)
    if (same_multiset(x, y)) return true;
  return false;
}

}  // namespace

TypeTable type_table(const DegreeTable& dt) {
  for (const auto& row : dt.deg)
    for (int d : row)
      if (d != 1 && d != 2) fail(ErrorCode::OutOfRange, "degree table entries must be 1 or 2");
  TypeTable tt;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) tt.t[i][j] = type_of(dt.deg[i][j], dt.row_margin(i), dt.col_margin(j));
  return tt;
}

std::vector<TypeTable> resolutions(const TypeTable& tt) {
  std::vector<std::pair<int, int>> open;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (tt.t[i][j] == TypeSymbol::rl) open.emplace_back(i, j);
  std::vector<TypeTable> out;
  for (unsigned mask = 0; mask < (1U << open.size()); ++mask) {
    TypeTable r = tt;
    for (std::size_t k = 0; k < open.size(); ++k)
      r.t[open[k].first][open[k].second] = (mask >> k & 1U) ? TypeSymbol::l : TypeSymbol::r;
    out.push_back(r);
  }
  return out;
}

bool row_allowed(const std::array<TypeSymbol, 3>& row) {
  using T = TypeSymbol;
  return triple_allowed(row, {{T::r, T::r, T::e}, {T::o, T::o, T::o}, {T::o, T::o, T::l}, {T::o, T::o, T::g}});
}

bool column_allowed(const std::array<TypeSymbol, 3>& col) {
  using T = TypeSymbol;
  return triple_allowed(col, {{T::r, T::r, T::o}, {T::e, T::e, T::e}, {T::e, T::e, T::l}, {T::e, T::e, T::g}});
}

bool row_col_allowed(const TypeTable& tt) {
  for (const auto& r : resolutions(tt)) {
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) ok = row_allowed(r.t[i]);
    for (int j = 0; j < 3 && ok; ++j) ok = column_allowed({r.t[0][j], r.t[1][j], r.t[2][j]});
    if (ok) return true;
  }
  return false;
}

std::vector<TableSymmetry> table_symmetries() {
  std::vector<TableSymmetry> out;
  std::array<int, 3> rows{0, 1, 2};
  do {
    std::array<int, 3> cols{0, 1, 2};
    do {
      for (bool tr : {false, true}) out.push_back({rows, cols, tr});
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return out;
}

namespace {

template <typename Cell>
std::array<std::array<Cell, 3>, 3> permute(const TableSymmetry& s,
                                           const std::array<std::array<Cell, 3>, 3>& in) {
  std::array<std::array<Cell, 3>, 3> src = in;
  if (s.transpose)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) src[i][j] = in[j][i];
  std::array<std::array<Cell, 3>, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = src[s.rows[i]][s.cols[j]];
  return out;
}

TypeSymbol transpose_symbol(TypeSymbol s) {
  if (s == TypeSymbol::o) return TypeSymbol::e;
  if (s == TypeSymbol::e) return TypeSymbol::o;
  return s;
}

}  // namespace

DegreeTable apply_symmetry(const TableSymmetry& s, const DegreeTable& dt) {
  return DegreeTable{permute(s, dt.deg)};
}

TypeTable apply_symmetry(const TableSymmetry& s, const TypeTable& tt) {
  TypeTable out{permute(s, tt.t)};
  // Exchanging the two sides exchanges odd and even deltoids.
  if (s.transpose)
    for (auto& row : out.t)
      for (auto& x : row) x = transpose_symbol(x);
  return out;
}

DegreeTable canonical_degree_table(const DegreeTable& dt) {
  DegreeTable best = dt;
  for (const auto& s : table_symmetries()) best = std::min(best, apply_symmetry(s, dt));
  return best;
}

std::vector<DegreeTable> all_degree_tables() {
  std::vector<DegreeTable> out;
  for (int mask = 0; mask < 512; ++mask) {
    DegreeTable dt;
    for (int k = 0; k < 9; ++k) dt.deg[k / 3][k % 3] = (mask >> (8 - k) & 1) ? 2 : 1;
    out.push_back(dt);
  }
  return out;
}

std::vector<std::vector<DegreeTable>> degree_table_orbits() {
  std::map<DegreeTable, std::vector<DegreeTable>> by_canon;
  for (const auto& dt : all_degree_tables()) by_canon[canonical_degree_table(dt)].push_back(dt);
  std::vector<std::vector<DegreeTable>> out;
  for (auto& [canon, members] : by_canon) out.push_back(std::move(members));
  return out;
}

int count_degree_table_orbits() { return static_cast<int>(degree_table_orbits().size()); }

int burnside_orbit_count() {
  int total = 0;
  const auto group = table_symmetries();
  for (const auto& s : group) {
    // The symmetry permutes the nine cells; fixed tables are constant on its cycles.
    std::array<std::array<int, 3>, 3> cells{};
    for (int k = 0; k < 9; ++k) cells[k / 3][k % 3] = k;
    auto image = permute(s, cells);
    std::array<int, 9> next{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) next[3 * i + j] = image[i][j];
    std::array<bool, 9> seen{};
    int cycles = 0;
    for (int k = 0; k < 9; ++k) {
      if (seen[k]) continue;
      ++cycles;
      for (int x = k; !seen[x]; x = next[x]) seen[x] = true;
    }
    total += 1 << cycles;
  }
  return total / static_cast<int>(group.size());
}

std::vector<AdmissibleCase> admissible_cases() {
  std::vector<AdmissibleCase> out;
  for (const auto& dt : all_degree_tables())
    for (const auto& r : resolutions(type_table(dt)))
      if (row_col_allowed(r)) out.push_back({dt, r});
  return out;
}

const std::array<AdmissibleCase, 4>& reference_cases() {
  static const std::array<AdmissibleCase, 4> cases{{
      {DegreeTable{{{{2, 2, 2}, {2, 2, 2}, {2, 2, 2}}}}, parse_type_table("ggg/ggg/ggg")},
      {DegreeTable{{{{1, 1, 1}, {1, 1, 1}, {1, 1, 2}}}}, parse_type_table("rre/rre/ool")},
      {DegreeTable{{{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}}}, parse_type_table("rgg/grg/ggr")},
      {DegreeTable{{{{1, 1, 2}, {1, 1, 2}, {2, 2, 2}}}}, parse_type_table("gge/gge/oog")},
  }};
  return cases;
}

}  // namespace sphflex
