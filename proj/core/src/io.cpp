#include "sphflex/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sphflex/error.hpp"

namespace sphflex::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

json graph_json(const Graph& g) {
  json j;
  j["vertices"] = g.vertices();
  j["edges"] = json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({e.a, e.b});
  return j;
}

Graph graph_of(const json& j) {
  return guarded([&] {
    std::vector<Vertex> vs = j.at("vertices").get<std::vector<Vertex>>();
    std::vector<std::pair<Vertex, Vertex>> es;
    for (const auto& e : j.at("edges")) {
      if (e.size() != 2) fail(ErrorCode::ParseError, "edges are pairs");
      es.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    return Graph::build(vs, es);
  });
}

json placement_json(const SphericalRealization& rho) {
  json p = json::object();
  for (const auto& [v, pt] : rho.placement()) p[std::to_string(v)] = {pt.x(), pt.y(), pt.z()};
  return p;
}

SphericalRealization placement_of(const json& p) {
  return guarded([&] {
    SphericalRealization rho;
    for (const auto& [key, xyz] : p.items()) {
      if (xyz.size() != 3) fail(ErrorCode::ParseError, "placements are [x, y, z]");
      Vertex v = 0;
      try {
        v = std::stoi(key);
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad vertex key '" + key + "'");
      }
      rho.set(v, SpherePoint(xyz[0].get<double>(), xyz[1].get<double>(), xyz[2].get<double>()));
    }
    return rho;
  });
}

json lengths_json(const LengthAssignment& lam) {
  json l = json::array();
  for (const auto& [e, v] : lam.values()) l.push_back({e.a, e.b, v});
  return l;
}

LengthAssignment lengths_of(const json& j) {
  return guarded([&] {
    bool use_delta = !j.contains("lambda");
    const json& rows = use_delta ? j.at("delta") : j.at("lambda");
    std::map<VertexPair, double> m;
    for (const auto& r : rows) {
      if (r.size() != 3) fail(ErrorCode::ParseError, "length rows are [a, b, value]");
      m[VertexPair::make(r[0].get<Vertex>(), r[1].get<Vertex>())] = r[2].get<double>();
    }
    return use_delta ? LengthAssignment::from_delta(m) : LengthAssignment::from_lambda(m);
  });
}

MotionKind kind_of(const std::string& s) {
  for (MotionKind k : {MotionKind::polar_nap, MotionKind::dixon1, MotionKind::dixon2,
                       MotionKind::const_diag_angle, MotionKind::traced, MotionKind::unclassified})
    if (to_string(k) == s) return k;
  fail(ErrorCode::ParseError, "unknown motion kind '" + s + "'");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string graph_to_text(const Graph& g) { return graph_json(g).dump(2) + "\n"; }

Graph graph_from_text(const std::string& text) { return graph_of(parse_json(text)); }

Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Vertex> vs;
  std::vector<std::pair<Vertex, Vertex>> es;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long a = 0;
    long long b = 0;
    if (!(ls >> a)) continue;
    std::string rest;
    if (!(ls >> b) || (ls >> rest) || a < 0 || b < 0)
      fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'a b'");
    es.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    for (Vertex v : {static_cast<Vertex>(a), static_cast<Vertex>(b)})
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
  }
  if (es.empty()) fail(ErrorCode::ParseError, "edge list is empty");
  return Graph::build(vs, es);
}

Graph parse_graph(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return graph_from_text(text);
  return graph_from_edge_list(text);
}

std::string coloring_to_text(const EdgeColoring& c) {
  json j = graph_json(c.graph());
  j["coloring"] = json::array();
  const auto& es = c.graph().edges();
  for (std::size_t k = 0; k < es.size(); ++k)
    j["coloring"].push_back({es[k].a, es[k].b, c.at(static_cast<int>(k)) == Color::red ? "red" : "blue"});
  return j.dump(2) + "\n";
}

EdgeColoring coloring_from_text(const std::string& text) {
  json j = parse_json(text);
  Graph g = graph_of(j);
  return guarded([&] {
    std::vector<Color> colors(g.num_edges(), Color::red);
    std::vector<bool> seen(g.num_edges(), false);
    for (const auto& r : j.at("coloring")) {
      int e = g.edge_index(r.at(0).get<Vertex>(), r.at(1).get<Vertex>());
      if (e < 0) fail(ErrorCode::ParseError, "colored pair is not an edge");
      std::string col = r.at(2).get<std::string>();
      if (col != "red" && col != "blue") fail(ErrorCode::ParseError, "colors are red or blue");
      colors[e] = col == "red" ? Color::red : Color::blue;
      seen[e] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      fail(ErrorCode::ParseError, "every edge needs a color");
    return EdgeColoring(g, colors);
  });
}

std::string lengths_to_text(const LengthAssignment& lam) {
  json j;
  j["lambda"] = lengths_json(lam);
  return j.dump(2) + "\n";
}

LengthAssignment lengths_from_text(const std::string& text) { return lengths_of(parse_json(text)); }

std::string realization_to_text(const SphericalRealization& rho) {
  json j;
  j["placement"] = placement_json(rho);
  return j.dump(2) + "\n";
}

SphericalRealization realization_from_text(const std::string& text) {
  json j = parse_json(text);
  return placement_of(guarded([&] { return j.at("placement"); }));
}

std::string trajectory_to_text(const MotionTrajectory& traj) {
  json j;
  j["kind"] = std::string(to_string(traj.kind));
  j["graph"] = graph_json(traj.graph);
  j["lambda"] = lengths_json(traj.lengths);
  j["samples"] = json::array();
  for (const auto& s : traj.samples)
    j["samples"].push_back({{"parameter", s.parameter},
                            {"placement", placement_json(s.rho)},
                            {"injective", s.injective},
                            {"antipodal_free", s.antipodal_free}});
  return j.dump(2) + "\n";
}

MotionTrajectory trajectory_from_text(const std::string& text) {
  json j = parse_json(text);
  return guarded([&] {
    MotionTrajectory t;
    t.kind = kind_of(j.at("kind").get<std::string>());
    t.graph = graph_of(j.at("graph"));
    t.lengths = lengths_of(j);
    for (const auto& s : j.at("samples")) {
      MotionSample m{s.at("parameter").get<double>(), placement_of(s.at("placement"))};
      m.injective = s.value("injective", true);
      m.antipodal_free = s.value("antipodal_free", true);
      t.samples.push_back(std::move(m));
    }
    return t;
  });
}

std::string trajectory_to_csv(const MotionTrajectory& traj) {
  std::string out = "parameter";
  for (Vertex v : traj.graph.vertices())
    for (const char* c : {"x", "y", "z"}) out += std::string(",") + c + std::to_string(v);
  out += ",residual\n";
  for (const auto& s : traj.samples) {
    out += fmt(s.parameter);
    for (Vertex v : traj.graph.vertices()) {
      const auto& p = s.rho.at(v);
      out += "," + fmt(p.x()) + "," + fmt(p.y()) + "," + fmt(p.z());
    }
    out += "," + fmt(max_edge_residual(traj.graph, s.rho, traj.lengths)) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << content;
}

}  // namespace sphflex::io
