#include "sphflex_cli/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphflex/continuation.hpp"
#include "sphflex/corpus.hpp"
#include "sphflex/error.hpp"
#include "sphflex/io.hpp"
#include "sphflex/motions.hpp"
#include "sphflex/mu_system.hpp"
#include "sphflex/quad.hpp"
#include "sphflex/tables.hpp"

namespace sphflex::cli {

namespace {

using nlohmann::json;

struct GraphSource {
  std::string file;
  std::string name;

  void attach(CLI::App* app) {
    auto* f = app->add_option("--graph", file, "graph file (structured text or edge list)");
    auto* n = app->add_option("--name", name, "embedded graph: k3 k4 k22 k32 k33 k44 nap254 prism3 star3 path4");
    f->excludes(n);
  }

  Graph load() const {
    if (!file.empty()) return io::parse_graph(io::read_file(file));
    if (!name.empty()) return corpus::by_name(name);
    throw CLI::RequiredError("--graph or --name");
  }
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SPHFLEX_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("SPHFLEX_SEED", "must be a nonnegative integer");
    }
  }
  return kDefaultSeed;
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << content;
  else
    io::write_file(path, content);
}

std::string coloring_line(const EdgeColoring& c) {
  std::string red;
  std::string blue;
  const auto& es = c.graph().edges();
  for (std::size_t k = 0; k < es.size(); ++k) {
    std::string e = std::to_string(es[k].a) + "-" + std::to_string(es[k].b);
    std::string& dst = c.at(static_cast<int>(k)) == Color::red ? red : blue;
    dst += (dst.empty() ? "" : " ") + e;
  }
  return "red: " + red + " | blue: " + blue;
}

std::string trajectory_output(const MotionTrajectory& t, const std::string& format) {
  if (format == "tabular") return io::trajectory_to_csv(t);
  if (format == "structured") return io::trajectory_to_text(t);
  std::ostringstream s;
  s << "kind: " << to_string(t.kind) << "\n"
    << "samples: " << t.samples.size() << "\n"
    << "max edge residual: " << std::setprecision(3) << t.max_residual() << "\n"
    << "non-injective samples: " << t.non_injective_samples() << "\n";
  return s.str();
}

std::vector<double> parse_list(const std::string& text, std::size_t n, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "expected comma-separated numbers");
    }
  }
  if (out.size() != n) throw CLI::ValidationError(flag, "expected " + std::to_string(n) + " values");
  return out;
}

std::string mu_rows_for(QuadTag tag) {
  std::string s;
  for (const auto& [key, row] : mu_table())
    if (key.tag == tag) {
      s += "  " + std::string(to_string(key.subcase)) + ": om=" + std::to_string(row.om) +
           " ou=" + std::to_string(row.ou) + " em=" + std::to_string(row.em) +
           " eu=" + std::to_string(row.eu) + "\n";
    }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical flexibility of graphs: NAP-colorings, motions and K3,3 combinatorics", "sphflex"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string out_path;
  std::optional<std::uint64_t> seed_flag;
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
  };

  // colorings
  auto* colorings = app.add_subcommand("colorings", "list NAP-colorings");
  GraphSource col_src;
  col_src.attach(colorings);
  bool modulo_swap = false;
  colorings->add_flag("--modulo-swap", modulo_swap, "one coloring per red/blue swap class");
  add_format(colorings, {"text", "structured"});

  // certify
  auto* certify = app.add_subcommand("certify", "decide flexibility on the sphere");
  GraphSource cert_src;
  cert_src.attach(certify);
  add_format(certify, {"text", "structured"});

  // realize
  auto* realize = app.add_subcommand("realize", "polar motion from a NAP-coloring");
  GraphSource real_src;
  real_src.attach(realize);
  std::string coloring_file;
  std::size_t samples = 100;
  realize->add_option("--coloring", coloring_file, "coloring file; default is a certificate");
  realize->add_option("--samples", samples, "number of samples")->check(CLI::PositiveNumber);
  realize->add_option("--seed", seed_flag, "random seed for generic positions");
  realize->add_option("--out", out_path, "output path");
  add_format(realize, {"text", "structured", "tabular"});

  // trace
  auto* tracecmd = app.add_subcommand("trace", "numerically trace a configuration curve");
  GraphSource trace_src;
  trace_src.attach(tracecmd);
  std::string lengths_file;
  std::string seed_file;
  TraceConfig cfg;
  GaugeFix gauge;
  int gauge_axis = 2;
  tracecmd->add_option("--lengths", lengths_file, "lengths file")->required();
  tracecmd->add_option("--seed-realization", seed_file, "seed realization file")->required();
  tracecmd->add_option("--step", cfg.step_size, "step size")->check(CLI::PositiveNumber);
  tracecmd->add_option("--tol", cfg.newton_tol, "Newton tolerance")->check(CLI::Range(1e-13, 1e-3));
  tracecmd->add_option("--max-steps", cfg.max_steps, "maximum steps")->check(CLI::PositiveNumber);
  tracecmd->add_option("--anchor", gauge.anchor, "vertex pinned at (1,0,0)");
  tracecmd->add_option("--meridian", gauge.meridian, "vertex with one zero coordinate");
  tracecmd->add_option("--axis", gauge_axis, "meridian coordinate: 1 for y, 2 for z")->check(CLI::IsMember({1, 2}));
  tracecmd->add_option("--out", out_path, "output path");
  add_format(tracecmd, {"text", "structured", "tabular"});

  // classify-quad
  auto* quad = app.add_subcommand("classify-quad", "classify a quadrilateral from d12 d23 d34 d14");
  std::vector<double> quad_values;
  bool as_lambda = false;
  double quad_tol = kQuadTolerance;
  quad->add_option("values", quad_values, "four values around the cycle 1-2-3-4")->required()->expected(4);
  quad->add_flag("--lambda", as_lambda, "values are spherical distances instead of cosines");
  quad->add_option("--tol", quad_tol, "matching tolerance")->check(CLI::PositiveNumber);
  add_format(quad, {"text", "structured"});

  // k33
  auto* k33 = app.add_subcommand("k33", "sample a classified K3,3 motion");
  std::string kind;
  std::string c_list = "0.2,0.4,0.6";
  std::string d_list = "0.3,0.5,0.7";
  Dixon2Params d2p;
  double e_value = 0.75;
  double t_min = 7.5;
  double t_max = 40.0;
  double s_min = 1.0;
  double s_max = 1.2;
  double p_min = 0.5;
  double p_max = 0.6;
  CdaBranch branch;
  bool keep_k44 = false;
  k33->add_option("--kind", kind, "dixon1, dixon2 or cda")->required()->check(CLI::IsMember({"dixon1", "dixon2", "cda"}));
  k33->add_option("--samples", samples, "number of samples")->check(CLI::PositiveNumber);
  k33->add_option("--c", c_list, "dixon1 odd constants c1,c3,c5");
  k33->add_option("--d", d_list, "dixon1 even constants d2,d4,d6");
  k33->add_option("--s-min", s_min, "dixon1 parameter range start");
  k33->add_option("--s-max", s_max, "dixon1 parameter range end");
  k33->add_option("--alpha", d2p.alpha, "dixon2 product p1 q1");
  k33->add_option("--beta", d2p.beta, "dixon2 product p2 q2");
  k33->add_option("--gamma", d2p.gamma, "dixon2 product p3 q3");
  k33->add_option("--p-min", p_min, "dixon2 parameter range start");
  k33->add_option("--p-max", p_max, "dixon2 parameter range end");
  k33->add_flag("--k44", keep_k44, "dixon2: keep vertices 7 and 8");
  k33->add_option("--e", e_value, "cda: cosine of edge 56");
  k33->add_option("--t-min", t_min, "cda parameter range start");
  k33->add_option("--t-max", t_max, "cda parameter range end");
  k33->add_option("--s2", branch.s2, "cda sign of y2")->check(CLI::IsMember({-1, 1}));
  k33->add_option("--s5", branch.s5, "cda sign of the z5 radical")->check(CLI::IsMember({-1, 1}));
  k33->add_option("--out", out_path, "output path");
  add_format(k33, {"text", "structured", "tabular"});

  // tables
  auto* tables = app.add_subcommand("tables", "degree tables, type tables and mu-system verdicts");
  add_format(tables, {"text", "structured"});

  // verify
  auto* verify = app.add_subcommand("verify", "run the embedded fact suite");
  std::string suite = "facts";
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember({"facts"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (colorings->parsed()) {
      Graph g = col_src.load();
      auto set = enumerate_nap(g, modulo_swap);
      if (format == "structured") {
        json j = json::array();
        for (const auto& c : set.colorings) j.push_back(json::parse(io::coloring_to_text(c)));
        out << j.dump(2) << "\n";
      } else {
        out << set.colorings.size() << " NAP-colorings" << (modulo_swap ? " modulo swap" : "") << "\n";
        for (const auto& c : set.colorings) out << coloring_line(c) << "\n";
      }
    } else if (certify->parsed()) {
      Graph g = cert_src.load();
      auto cert = flexibility_certificate(g);
      if (format == "structured") {
        json j{{"flexible", cert.has_value()}};
        if (cert) j["certificate"] = json::parse(io::coloring_to_text(*cert));
        out << j.dump(2) << "\n";
      } else if (cert) {
        out << "flexible on the sphere\n" << coloring_line(*cert) << "\n";
      } else {
        out << "not flexible on the sphere\n";
      }
    } else if (realize->parsed()) {
      Graph g = real_src.load();
      std::optional<EdgeColoring> c;
      if (!coloring_file.empty()) {
        c = io::coloring_from_text(io::read_file(coloring_file));
        if (!(c->graph() == g)) fail(ErrorCode::NotNap, "coloring is for a different graph");
      } else {
        c = flexibility_certificate(g);
        if (!c) fail(ErrorCode::NotNap, "graph has no NAP-coloring");
      }
      std::vector<double> angles;
      for (std::size_t k = 0; k < samples; ++k) angles.push_back(2.0 * M_PI * double(k) / double(samples));
      auto traj = polar_nap_motion(g, *c, angles, resolve_seed(seed_flag));
      emit(trajectory_output(traj, format), out_path, out);
    } else if (tracecmd->parsed()) {
      Graph g = trace_src.load();
      auto lam = io::lengths_from_text(io::read_file(lengths_file));
      auto seed = io::realization_from_text(io::read_file(seed_file));
      GaugeFix gf = default_gauge(g, seed);
      if (gauge.anchor != 0 || gauge.meridian != 0) {
        gf.anchor = gauge.anchor != 0 ? gauge.anchor : gf.anchor;
        gf.meridian = gauge.meridian != 0 ? gauge.meridian : gf.meridian;
      }
      gf.axis = gauge_axis;
      cfg.min_step = std::min(cfg.min_step, cfg.step_size);
      try {
        auto res = trace(g, lam, seed, gf, cfg);
        if (format == "text")
          out << "stop: " << to_string(res.stop) << "\narclength: " << res.arclength << "\n";
        emit(trajectory_output(res.trajectory, format), out_path, out);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::RankDeficient) throw;
        out << (std::string(e.what()).find("corank 0") != std::string::npos ? "rigid: " : "singular: ")
            << e.what() << "\n";
        return 1;
      }
    } else if (quad->parsed()) {
      QuadLengths q{quad_values[0], quad_values[1], quad_values[2], quad_values[3]};
      if (as_lambda) q = {delta_from_lambda(q.d12), delta_from_lambda(q.d23), delta_from_lambda(q.d34),
                          delta_from_lambda(q.d14)};
      QuadType t = classify(q, quad_tol);
      if (format == "structured") {
        json j{{"type", std::string(to_string(t.tag))}, {"sign_profile", t.sign_profile},
               {"sign_ambiguous", t.sign_ambiguous}};
        json rows = json::array();
        for (const auto& [key, row] : mu_table())
          if (key.tag == t.tag)
            rows.push_back({{"subcase", std::string(to_string(key.subcase))},
                            {"om", row.om}, {"ou", row.ou}, {"em", row.em}, {"eu", row.eu}});
        j["mu_rows"] = rows;
        out << j.dump(2) << "\n";
      } else {
        out << "type: " << to_string(t.tag) << "\n";
        if (!t.sign_profile.empty()) {
          out << "signs:";
          for (int s : t.sign_profile) out << " " << (s > 0 ? "+1" : "-1");
          out << (t.sign_ambiguous ? " (ambiguous)" : "") << "\n";
        }
        out << "mu rows:\n" << mu_rows_for(t.tag);
      }
    } else if (k33->parsed()) {
      MotionTrajectory traj;
      if (kind == "dixon1") {
        auto c = parse_list(c_list, 3, "--c");
        auto d = parse_list(d_list, 3, "--d");
        Dixon1Params p{{c[0], c[1], c[2]}, {d[0], d[1], d[2]}};
        traj = dixon1_motion(p, evenly_spaced(s_min, s_max, samples));
      } else if (kind == "dixon2") {
        traj = dixon2_motion(d2p, evenly_spaced(p_min, p_max, samples));
        if (!keep_k44) traj = drop_vertices(traj, {7, 8});
      } else {
        traj = cda_motion(cda_params_from_e(e_value), evenly_spaced(t_min, t_max, samples), branch);
      }
      std::string body = trajectory_output(traj, format);
      if (format == "text" && traj.graph.num_vertices() == 6 && samples >= 3)
        body += "detected: " + std::string(to_string(detect_k33_motion_kind(traj))) + "\n";
      emit(body, out_path, out);
    } else if (tables->parsed()) {
      const auto& ref = reference_cases();
      const std::vector<QuadCut> all{QuadCut::om, QuadCut::ou, QuadCut::em, QuadCut::eu};
      const std::vector<QuadCut> odd{QuadCut::om, QuadCut::ou};
      std::set<DegreeTable> orbits;
      auto adm = admissible_cases();
      for (const auto& c : adm) orbits.insert(canonical_degree_table(c.degrees));
      auto verdict = [](const MuSolution& s) {
        return std::string(!s.feasible ? "infeasible" : s.unique ? "unique" : "multiple");
      };
      std::vector<std::pair<std::string, std::string>> verdicts{
          {"case (1), all divisors", verdict(mu_system_feasible(build_pullback_system(ref[0], {}, all)))},
          {"case (2)", "excluded geometrically"}};
      for (int ty = 1; ty <= 4; ++ty)
        verdicts.emplace_back(
            "case (3), rhomboids Type " + std::to_string(ty) + ", T_om and T_ou",
            verdict(mu_system_feasible(
                build_pullback_system(ref[2], case3_rhomboid_subcases(RhomboidType(ty)), odd))));
      if (format == "structured") {
        json j;
        j["orbits"] = count_degree_table_orbits();
        j["admissible_tables"] = adm.size();
        j["admissible_orbits"] = orbits.size();
        j["cases"] = json::array();
        for (const auto& c : ref)
          j["cases"].push_back({{"degrees", c.degrees.to_string()}, {"types", c.types.to_string()}});
        j["verdicts"] = json::object();
        for (const auto& [k, v] : verdicts) j["verdicts"][k] = v;
        out << j.dump(2) << "\n";
      } else {
        out << "degree table orbits: " << count_degree_table_orbits() << "\n"
            << "admissible resolved tables: " << adm.size() << " in " << orbits.size() << " orbits\n";
        for (std::size_t k = 0; k < ref.size(); ++k)
          out << "case (" << k + 1 << "): degrees " << ref[k].degrees.to_string() << "  types "
              << ref[k].types.to_string() << "\n";
        for (const auto& [k, v] : verdicts) out << k << ": " << v << "\n";
      }
    } else if (verify->parsed()) {
      bool ok = true;
      for (const auto& e : verify_suite()) {
        out << (e.pass ? "PASS " : "FAIL ") << e.name << ": computed " << e.computed << ", expected "
            << e.expected << "\n";
        ok = ok && e.pass;
      }
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace sphflex::cli
