#include "sphflex/mu_system.hpp"

#include <algorithm>
#include <numeric>

#include "sphflex/error.hpp"

namespace sphflex {

std::string PullbackEquation::to_string() const {
  std::string s;
  for (const auto& [cut, coef] : terms) {
    if (!s.empty()) s += " + ";
    if (coef != 1) s += std::to_string(coef) + "*";
    s += "mu" + cut.to_string();
  }
  s += " = " + std::to_string(rhs);
  s += "  [p" + std::to_string(quad.first) + std::to_string(quad.second) + ", " +
       std::string(sphflex::to_string(divisor)) + "]";
  return s;
}

namespace {

int table_index(Vertex v) { return (v - 1) / 2; }

MuRow row_for(TypeSymbol sym, std::optional<Subcase> sub, const QuadKey& q) {
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::InconsistentTypes, "quad p" + std::to_string(q.first) +
                                           std::to_string(q.second) + ": " + why);
  };
  switch (sym) {
    case TypeSymbol::g:
      if (sub && *sub != Subcase::none) bad("general quads take no subcase");
      return mu_lookup(QuadTag::general, Subcase::none);
    case TypeSymbol::o:
    case TypeSymbol::e:
      if (!sub || (*sub != Subcase::coincide && *sub != Subcase::antipodal))
        bad("deltoids need a coincide or antipodal subcase");
      return mu_lookup(sym == TypeSymbol::o ? QuadTag::odd_deltoid : QuadTag::even_deltoid, *sub);
    case TypeSymbol::r:
    case TypeSymbol::l:
      if (!sub || *sub < Subcase::type1) bad("rhomboids and lozenges need a component type");
      return mu_lookup(sym == TypeSymbol::r ? QuadTag::rhomboid : QuadTag::lozenge, *sub);
    case TypeSymbol::rl:
      bad("unresolved r/l entry");
  }
  fail(ErrorCode::InconsistentTypes, "unknown type");
}

std::array<Vertex, 2> others(const std::array<Vertex, 3>& side, Vertex removed) {
  std::array<Vertex, 2> out{};
  int k = 0;
  for (Vertex v : side)
    if (v != removed) out[k++] = v;
  return out;
}

}  // namespace

std::vector<PullbackEquation> build_pullback_system(const AdmissibleCase& c,
                                                    const std::map<QuadKey, Subcase>& subcases,
                                                    const std::vector<QuadCut>& divisors) {
  for (const auto& [q, s] : subcases)
    if (q.first % 2 != 1 || q.second % 2 != 0 || q.first < 1 || q.first > 5 || q.second < 2 ||
        q.second > 6)
      fail(ErrorCode::InconsistentTypes, "subcase given for a quad that does not exist");

  std::vector<std::pair<NormalCut, Cut>> normal;
  for (Vertex apex = 1; apex <= 6; ++apex)
    for (int bits = 0; bits < 8; ++bits) {
      NormalCut n;
      n.apex = apex;
      for (int k = 0; k < 3; ++k) n.pattern[k] = (bits >> (2 - k) & 1) ? Mark::Q : Mark::P;
      normal.emplace_back(n, n.to_cut());
    }

  std::vector<PullbackEquation> eqs;
  for (Vertex k : {1, 3, 5})
    for (Vertex l : {2, 4, 6}) {
      QuadKey q{k, l};
      auto it = subcases.find(q);
      std::optional<Subcase> sub;
      if (it != subcases.end()) sub = it->second;
      MuRow row = row_for(c.types.t[table_index(k)][table_index(l)], sub, q);
      int deg = c.degrees.deg[table_index(k)][table_index(l)];
      auto [o1, o2] = others({1, 3, 5}, k);
      auto [e1, e2] = others({2, 4, 6}, l);
      std::set<MarkedLabel> labels;
      for (Vertex v : {o1, o2, e1, e2})
        for (Mark m : {Mark::P, Mark::Q}) labels.insert({m, v});
      for (QuadCut d : divisors) {
        Cut local = quad_cut(d, o1, e1, o2, e2);
        std::map<NormalCut, int> coef;
        for (const auto& [n, cut] : normal) {
          std::set<MarkedLabel> restricted;
          for (const auto& lab : cut.I())
            if (labels.count(lab)) restricted.insert(lab);
          if (restricted == local.I() || restricted == local.J()) ++coef[n.canonical()];
        }
        PullbackEquation eq;
        eq.terms.assign(coef.begin(), coef.end());
        eq.rhs = row.at(d) * deg;
        eq.quad = q;
        eq.divisor = d;
        eqs.push_back(std::move(eq));
      }
    }
  return eqs;
}

namespace {

struct Search {
  std::vector<NormalCut> unknowns;
  // Per equation: (unknown index, coefficient), rhs.
  std::vector<std::vector<std::pair<int, int>>> rows;
  std::vector<int> rhs;
  std::vector<std::vector<int>> rows_of;  // equations touching each unknown
  std::vector<int> upper;
  std::vector<int> value;
  std::vector<int> sum;     // assigned part of each equation
  std::vector<int> slack;   // max contribution still available from unassigned unknowns
  int found = 0;
  std::vector<int> first;

  void run(std::size_t idx) {
    if (found >= 2) return;
    if (idx == unknowns.size()) {
      if (found == 0) first = value;
      ++found;
      return;
    }
    int u = static_cast<int>(idx);
    for (int v = 0; v <= upper[u] && found < 2; ++v) {
      bool ok = true;
      for (int e : rows_of[u]) {
        int c = coef(e, u);
        sum[e] += c * v;
        slack[e] -= c * upper[u];
      }
      for (int e : rows_of[u])
        if (sum[e] > rhs[e] || sum[e] + slack[e] < rhs[e]) ok = false;
      value[u] = v;
      if (ok) run(idx + 1);
      for (int e : rows_of[u]) {
        int c = coef(e, u);
        sum[e] -= c * v;
        slack[e] += c * upper[u];
      }
    }
    value[u] = 0;
  }

  int coef(int e, int u) const {
    for (const auto& [x, c] : rows[e])
      if (x == u) return c;
    return 0;
  }
};

}  // namespace

MuSolution mu_system_feasible(const std::vector<PullbackEquation>& eqs) {
  Search s;
  std::map<NormalCut, int> index;
  for (const auto& eq : eqs)
    for (const auto& [n, c] : eq.terms)
      if (!index.count(n)) {
        index[n] = static_cast<int>(s.unknowns.size());
        s.unknowns.push_back(n);
      }
  const int n = static_cast<int>(s.unknowns.size());
  s.upper.assign(n, 4);
  s.rows_of.assign(n, {});
  for (const auto& eq : eqs) {
    std::vector<std::pair<int, int>> row;
    for (const auto& [cut, c] : eq.terms) {
      if (c <= 0) continue;
      int u = index[cut];
      row.emplace_back(u, c);
      s.upper[u] = std::min(s.upper[u], eq.rhs / c);
      s.rows_of[u].push_back(static_cast<int>(s.rows.size()));
    }
    if (row.empty() && eq.rhs != 0) return {};
    s.rows.push_back(std::move(row));
    s.rhs.push_back(eq.rhs);
  }
  s.value.assign(n, 0);
  s.sum.assign(s.rows.size(), 0);
  s.slack.assign(s.rows.size(), 0);
  for (std::size_t e = 0; e < s.rows.size(); ++e)
    for (const auto& [u, c] : s.rows[e]) s.slack[e] += c * s.upper[u];
  for (std::size_t e = 0; e < s.rows.size(); ++e)
    if (s.slack[e] < s.rhs[e]) return {};
  s.run(0);

  MuSolution out;
  out.feasible = s.found > 0;
  out.unique = s.found == 1;
  if (out.feasible)
    for (int u = 0; u < n; ++u)
      if (s.first[u] != 0) out.values[s.unknowns[u]] = s.first[u];
  return out;
}

std::map<QuadKey, Subcase> case3_rhomboid_subcases(RhomboidType type) {
  Subcase sub = static_cast<Subcase>(static_cast<int>(Subcase::type1) + static_cast<int>(type) - 1);
  return {{{1, 2}, sub}, {{3, 4}, sub}, {{5, 6}, sub}};
}

bool is_rhomboid_quad_of_case3(const QuadKey& q) {
  return q == QuadKey{1, 2} || q == QuadKey{3, 4} || q == QuadKey{5, 6};
}

}  // namespace sphflex
