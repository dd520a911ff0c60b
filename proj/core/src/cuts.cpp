#include "sphflex/cuts.hpp"

#include <algorithm>
#include <sstream>

#include "sphflex/error.hpp"

namespace sphflex {

Mark other(Mark m) { return m == Mark::P ? Mark::Q : Mark::P; }

namespace {

char mark_char(Mark m) { return m == Mark::P ? 'P' : 'Q'; }

std::string label_string(const MarkedLabel& l) {
  return std::string(1, mark_char(l.kind)) + std::to_string(l.vertex);
}

}  // namespace

Cut Cut::from_side(std::vector<Vertex> vertices, const std::set<MarkedLabel>& side) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  Cut c;
  c.vertices_ = vertices;
  for (const auto& l : side)
    if (!std::binary_search(vertices.begin(), vertices.end(), l.vertex))
      fail(ErrorCode::InvalidCut, "label " + label_string(l) + " outside the vertex set");
  c.i_ = side;
  for (Vertex v : vertices)
    for (Mark m : {Mark::P, Mark::Q})
      if (!side.count({m, v})) c.j_.insert({m, v});
  if (c.i_.size() < 2 || c.j_.size() < 2) fail(ErrorCode::InvalidCut, "each side needs two labels");
  return c;
}

Cut Cut::parse(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos) fail(ErrorCode::ParseError, "cut needs a '|' separator");
  auto read = [](const std::string& part, std::set<MarkedLabel>& out, std::vector<Vertex>& vs) {
    std::istringstream in(part);
    std::string tok;
    while (in >> tok) {
      if (tok.size() < 2 || (tok[0] != 'P' && tok[0] != 'Q'))
        fail(ErrorCode::ParseError, "bad label '" + tok + "'");
      Vertex v = 0;
      try {
        v = std::stoi(tok.substr(1));
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad label '" + tok + "'");
      }
      if (!out.insert({tok[0] == 'P' ? Mark::P : Mark::Q, v}).second)
        fail(ErrorCode::ParseError, "repeated label '" + tok + "'");
      vs.push_back(v);
    }
  };
  std::set<MarkedLabel> i;
  std::set<MarkedLabel> j;
  std::vector<Vertex> vs;
  read(text.substr(0, bar), i, vs);
  read(text.substr(bar + 1), j, vs);
  Cut c = from_side(vs, i);
  if (c.j_ != j) fail(ErrorCode::ParseError, "the two sides do not partition the labels");
  return c;
}

int Cut::count_in_I(Vertex a, Vertex b) const {
  return int(in_I(Mark::P, a)) + int(in_I(Mark::Q, a)) + int(in_I(Mark::P, b)) +
         int(in_I(Mark::Q, b));
}

Cut Cut::swapped() const { return from_side(vertices_, j_); }

Cut Cut::conjugated() const {
  std::set<MarkedLabel> side;
  for (const auto& l : i_) side.insert({other(l.kind), l.vertex});
  return from_side(vertices_, side);
}

bool Cut::same_partition(const Cut& other) const {
  return vertices_ == other.vertices_ && (i_ == other.i_ || i_ == other.j_);
}

std::string Cut::to_string() const {
  std::string out;
  for (const auto& l : i_) out += label_string(l) + " ";
  out += "|";
  for (const auto& l : j_) out += " " + label_string(l);
  return out;
}

bool cut_valid_for_bond(const Graph& g, const Cut& c) {
  for (const auto& e : g.edges())
    if (c.count_in_I(e.a, e.b) == 2) return false;
  return true;
}

EdgeColoring coloring_from_cut(const Graph& g, const Cut& c) {
  if (!cut_valid_for_bond(g, c)) fail(ErrorCode::InvalidCut, "an edge meets I in exactly two labels");
  std::vector<Color> colors;
  for (const auto& e : g.edges()) colors.push_back(c.count_in_I(e.a, e.b) >= 3 ? Color::red : Color::blue);
  return EdgeColoring(g, std::move(colors));
}

SeparationVerdict nap_iff_separated_nonedge(const Graph& g, const Cut& c) {
  SeparationVerdict out;
  out.is_nap = is_nap(coloring_from_cut(g, c));
  for (const auto& p : nonedges(g)) {
    bool a_in = c.in_I(Mark::P, p.a) && c.in_I(Mark::Q, p.a);
    bool a_out = !c.in_I(Mark::P, p.a) && !c.in_I(Mark::Q, p.a);
    bool b_in = c.in_I(Mark::P, p.b) && c.in_I(Mark::Q, p.b);
    bool b_out = !c.in_I(Mark::P, p.b) && !c.in_I(Mark::Q, p.b);
    if ((a_in && b_out) || (a_out && b_in)) {
      out.witness = p;
      break;
    }
  }
  return out;
}

namespace {

// Bit 2k is P of the k-th vertex, bit 2k+1 is Q.
std::uint32_t conjugate_mask(std::uint32_t m) {
  return ((m & 0x55555555U) << 1) | ((m & 0xAAAAAAAAU) >> 1);
}

Cut cut_from_mask(const std::vector<Vertex>& vs, std::uint32_t mask) {
  std::set<MarkedLabel> side;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (mask >> (2 * k) & 1U) side.insert({Mark::P, vs[k]});
    if (mask >> (2 * k + 1) & 1U) side.insert({Mark::Q, vs[k]});
  }
  return Cut::from_side(vs, side);
}

}  // namespace

std::vector<Cut> enumerate_valid_cuts(const Graph& g, bool modulo_symmetry) {
  const std::size_t n = g.num_vertices();
  if (n > 8) fail(ErrorCode::BudgetExceeded, "cut enumeration limited to 8 vertices");
  const std::uint32_t full = (std::uint32_t{1} << (2 * n)) - 1;
  std::vector<std::pair<int, int>> ends;
  for (const auto& e : g.edges()) ends.emplace_back(g.index_of(e.a), g.index_of(e.b));
  std::vector<Cut> out;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    int size = __builtin_popcount(mask);
    if (size < 2 || size > static_cast<int>(2 * n) - 2) continue;
    bool ok = true;
    bool red = false;
    bool blue = false;
    for (const auto& [a, b] : ends) {
      int k = __builtin_popcount(mask >> (2 * a) & 3U) + __builtin_popcount(mask >> (2 * b) & 3U);
      if (k == 2) {
        ok = false;
        break;
      }
      (k >= 3 ? red : blue) = true;
    }
    if (!ok || !red || !blue) continue;
    if (modulo_symmetry) {
      std::uint32_t conj = conjugate_mask(mask);
      std::uint32_t least = std::min({mask, full & ~mask, conj, full & ~conj});
      if (least != mask) continue;
    }
    out.push_back(cut_from_mask(g.vertices(), mask));
  }
  return out;
}

Cut canonical_cut(const Cut& c) {
  std::vector<Cut> variants{c, c.swapped(), c.conjugated(), c.conjugated().swapped()};
  return *std::min_element(variants.begin(), variants.end(),
                           [](const Cut& x, const Cut& y) { return x.I() < y.I(); });
}

std::string_view to_string(QuadCut d) {
  switch (d) {
    case QuadCut::om: return "T_om";
    case QuadCut::ou: return "T_ou";
    case QuadCut::em: return "T_em";
    case QuadCut::eu: return "T_eu";
  }
  return "T_om";
}

Cut quad_cut(QuadCut d, Vertex o1, Vertex e1, Vertex o2, Vertex e2) {
  std::set<MarkedLabel> side;
  switch (d) {
    case QuadCut::om: side = {{Mark::P, o1}, {Mark::Q, o1}, {Mark::P, e1}, {Mark::Q, e2}}; break;
    case QuadCut::ou: side = {{Mark::P, o1}, {Mark::Q, o1}, {Mark::P, e1}, {Mark::P, e2}}; break;
    case QuadCut::em: side = {{Mark::P, e1}, {Mark::Q, e1}, {Mark::P, o1}, {Mark::Q, o2}}; break;
    case QuadCut::eu: side = {{Mark::P, e1}, {Mark::Q, e1}, {Mark::P, o1}, {Mark::P, o2}}; break;
  }
  return Cut::from_side({o1, e1, o2, e2}, side);
}

std::array<Vertex, 3> opposite_side(Vertex apex) {
  if (apex < 1 || apex > 6) fail(ErrorCode::UnknownVertex, "K3,3 apex must be in 1..6");
  return apex % 2 == 1 ? std::array<Vertex, 3>{2, 4, 6} : std::array<Vertex, 3>{1, 3, 5};
}

NormalCut NormalCut::parse(Vertex apex, const std::string& pattern) {
  if (pattern.size() != 3) fail(ErrorCode::ParseError, "pattern needs three letters");
  NormalCut n;
  opposite_side(apex);
  n.apex = apex;
  for (int k = 0; k < 3; ++k) {
    if (pattern[k] != 'P' && pattern[k] != 'Q') fail(ErrorCode::ParseError, "pattern letters are P or Q");
    n.pattern[k] = pattern[k] == 'P' ? Mark::P : Mark::Q;
  }
  return n;
}

Cut NormalCut::to_cut() const {
  auto opp = opposite_side(apex);
  std::set<MarkedLabel> side{{Mark::P, apex}, {Mark::Q, apex}};
  for (int k = 0; k < 3; ++k) side.insert({pattern[k], opp[k]});
  return Cut::from_side({1, 2, 3, 4, 5, 6}, side);
}

NormalCut NormalCut::conjugate() const {
  NormalCut n = *this;
  for (auto& m : n.pattern) m = other(m);
  return n;
}

NormalCut NormalCut::canonical() const { return pattern[0] == Mark::P ? *this : conjugate(); }

std::string NormalCut::to_string() const {
  std::string s = "(" + std::to_string(apex) + ",";
  for (Mark m : pattern) s += mark_char(m);
  return s + ")";
}

std::optional<NormalCut> normal_form(const Cut& c) {
  if (c.vertices() != std::vector<Vertex>{1, 2, 3, 4, 5, 6}) return std::nullopt;
  for (const auto* side : {&c.I(), &c.J()}) {
    if (side->size() != 5) continue;
    for (Vertex apex = 1; apex <= 6; ++apex) {
      if (!side->count({Mark::P, apex}) || !side->count({Mark::Q, apex})) continue;
      NormalCut n;
      n.apex = apex;
      auto opp = opposite_side(apex);
      bool ok = true;
      for (int k = 0; k < 3 && ok; ++k) {
        bool p = side->count({Mark::P, opp[k]}) != 0;
        bool q = side->count({Mark::Q, opp[k]}) != 0;
        ok = p != q;
        n.pattern[k] = p ? Mark::P : Mark::Q;
      }
      if (ok) return n;
    }
  }
  return std::nullopt;
}

std::vector<NormalCut> merged_normal_cuts() {
  std::vector<NormalCut> out;
  for (Vertex apex = 1; apex <= 6; ++apex)
    for (int bits = 0; bits < 4; ++bits) {
      NormalCut n;
      n.apex = apex;
      n.pattern = {Mark::P, (bits & 2) ? Mark::Q : Mark::P, (bits & 1) ? Mark::Q : Mark::P};
      out.push_back(n);
    }
  return out;
}

}  // namespace sphflex
