#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "sphflex/cuts.hpp"
#include "sphflex/quad.hpp"

namespace sphflex {

// Subcases of Table 1: deltoid companions ("1,3 coincide"/"1,3 antipodal" for odd,
// "2,4 ..." for even) and rhomboid/lozenge component types.
enum class Subcase { none, coincide, antipodal, type1, type2, type3, type4 };

std::string_view to_string(Subcase s);

struct MuRowKey {
  QuadTag tag = QuadTag::general;
  Subcase subcase = Subcase::none;

  auto operator<=>(const MuRowKey&) const = default;
};

struct MuRow {
  int om = 0;
  int ou = 0;
  int em = 0;
  int eu = 0;

  int at(QuadCut d) const;
  auto operator<=>(const MuRow&) const = default;
};

// The 13 rows of Table 1 in display order.
const std::vector<std::pair<MuRowKey, MuRow>>& mu_table();
MuRow mu_lookup(QuadTag tag, Subcase subcase);

// 1 if all ones, 4 if all twos, 2 otherwise.
int theta(int d1, int d2, int d3);

// Rows are odd vertices 1,3,5, columns even vertices 2,4,6; entry (i,j) is deg p_ij,
// the forgetful map to the quad on the other four vertices.
struct DegreeTable {
  std::array<std::array<int, 3>, 3> deg{};

  int row_margin(int i) const;
  int col_margin(int j) const;
  std::string to_string() const;

  auto operator<=>(const DegreeTable&) const = default;
};

enum class TypeSymbol { g, o, e, r, l, rl };

std::string_view to_string(TypeSymbol s);

struct TypeTable {
  std::array<std::array<TypeSymbol, 3>, 3> t{};

  std::string to_string() const;
  auto operator<=>(const TypeTable&) const = default;
};

TypeTable parse_type_table(const std::string& rows);  // "rre/rre/ool"

TypeTable type_table(const DegreeTable& dt);
// Every way of replacing r/l cells by r or l.
std::vector<TypeTable> resolutions(const TypeTable& tt);
bool row_allowed(const std::array<TypeSymbol, 3>& row);
bool column_allowed(const std::array<TypeSymbol, 3>& col);
// True when some resolution has only allowed rows and columns.
bool row_col_allowed(const TypeTable& tt);

// Element of (S3 x S3) x| Z2: optional transpose, then permute rows and columns.
struct TableSymmetry {
  std::array<int, 3> rows{0, 1, 2};
  std::array<int, 3> cols{0, 1, 2};
  bool transpose = false;
};

std::vector<TableSymmetry> table_symmetries();  // all 72
DegreeTable apply_symmetry(const TableSymmetry& s, const DegreeTable& dt);
TypeTable apply_symmetry(const TableSymmetry& s, const TypeTable& tt);
DegreeTable canonical_degree_table(const DegreeTable& dt);

std::vector<DegreeTable> all_degree_tables();
// Explicit orbit partition.
std::vector<std::vector<DegreeTable>> degree_table_orbits();
int count_degree_table_orbits();
// Burnside count over the 72 group elements.
int burnside_orbit_count();

struct AdmissibleCase {
  DegreeTable degrees;
  TypeTable types;  // fully resolved
};

// Every degree table with an allowed resolution, once per allowed resolution.
std::vector<AdmissibleCase> admissible_cases();
// The four displayed cases (1)-(4).
const std::array<AdmissibleCase, 4>& reference_cases();

}  // namespace sphflex
