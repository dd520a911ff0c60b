#include <set>

#include "sphflex/coloring.hpp"
#include "sphflex/corpus.hpp"
#include "sphflex/motions.hpp"
#include "sphflex/mu_system.hpp"
#include "sphflex/tables.hpp"
#include "sphflex_cli/cli.hpp"

namespace sphflex::cli {

namespace {

SuiteEntry entry(std::string name, const std::string& computed, const std::string& expected) {
  return {std::move(name), computed, expected, computed == expected};
}

std::string solution_string(const MuSolution& s) {
  if (!s.feasible) return "infeasible";
  std::string out = s.unique ? "unique" : "multiple";
  for (const auto& [cut, v] : s.values) out += " " + cut.to_string() + "=" + std::to_string(v);
  return out;
}

}  // namespace

std::vector<SuiteEntry> verify_suite() {
  std::vector<SuiteEntry> out;
  out.push_back(entry("degree table orbits", std::to_string(count_degree_table_orbits()), "26"));
  out.push_back(entry("degree table orbits (Burnside)", std::to_string(burnside_orbit_count()), "26"));

  std::set<DegreeTable> found;
  for (const auto& c : admissible_cases()) found.insert(canonical_degree_table(c.degrees));
  std::set<DegreeTable> expected;
  for (const auto& c : reference_cases()) expected.insert(canonical_degree_table(c.degrees));
  out.push_back(entry("admissible cases up to symmetry", std::to_string(found.size()), "4"));
  out.push_back(entry("admissible cases match the displayed tables", found == expected ? "yes" : "no", "yes"));

  const auto& ref = reference_cases();
  const std::vector<QuadCut> all{QuadCut::om, QuadCut::ou, QuadCut::em, QuadCut::eu};
  const std::vector<QuadCut> odd{QuadCut::om, QuadCut::ou};
  out.push_back(entry("case (1) mu system",
                      solution_string(mu_system_feasible(build_pullback_system(ref[0], {}, all))),
                      "infeasible"));
  out.push_back(entry(
      "case (3) all Type 1",
      solution_string(mu_system_feasible(
          build_pullback_system(ref[2], case3_rhomboid_subcases(RhomboidType::type1), odd))),
      "unique (1,PQQ)=1 (3,PQP)=1 (5,PPQ)=1"));
  out.push_back(entry(
      "case (3) all Type 2",
      solution_string(mu_system_feasible(
          build_pullback_system(ref[2], case3_rhomboid_subcases(RhomboidType::type2), odd))),
      "infeasible"));

  auto [num, den] = cda_relation_exact(3, 5, 3, 4);
  out.push_back(entry("relation a^3 e^2 + a^3 - a e^2 at (3/5, 3/4)",
                      std::to_string(num) + "/" + std::to_string(den), "0/1"));

  out.push_back(entry("K3,3 NAP-colorings modulo swap",
                      std::to_string(enumerate_nap(corpus::k33(), true).colorings.size()), "6"));
  out.push_back(entry("K3,3 NAP-colorings",
                      std::to_string(enumerate_nap(corpus::k33(), false).colorings.size()), "12"));

  int violations = 0;
  int disagreements = 0;
  for (const auto& [name, g] : corpus::named_graphs()) {
    auto naps = enumerate_nap(g, false).colorings;
    for (const auto& c : naps)
      if (!is_nac(c)) ++violations;
    if (flexibility_certificate(g).has_value() != !naps.empty()) ++disagreements;
  }
  out.push_back(entry("NAP implies NAC over the corpus (violations)", std::to_string(violations), "0"));
  out.push_back(entry("certificate agrees with enumeration (disagreements)", std::to_string(disagreements), "0"));
  out.push_back(entry("triangle flexible", flexibility_certificate(corpus::triangle()) ? "yes" : "no", "no"));
  return out;
}

}  // namespace sphflex::cli
