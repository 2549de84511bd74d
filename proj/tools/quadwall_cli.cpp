// quadwall: wall-and-chamber computations on P1 x P1 from the command line.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quadwall/quadwall.hpp"

using namespace quadwall;

namespace {

constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Output {
  bool json = false;
  std::string out;

  // Writes the document to --out when given, and to stdout when --json is
  // set or no human text is available.
  void emit(const Json& doc, const std::string& text) const {
    if (!out.empty()) {
      std::ofstream f(out);
      if (!f) throw std::runtime_error("cannot write " + out);
      f << doc.dump(2) << '\n';
    }
    if (json) std::cout << doc.dump(2) << '\n';
    else std::cout << text;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

// Accepts a list of vanishings or an object with an "assume" list.
std::vector<AssertedVanishing> load_assumptions(const std::string& path) {
  const Json j = parse_json_file(path);
  const Json& list = j.is_array() ? j : j.at("assume");
  std::vector<AssertedVanishing> out;
  for (const auto& a : list) out.push_back(vanishing_from(a));
  return out;
}

Scenario load_scenario(const std::string& name_or_file) {
  if (name_or_file == "M" || name_or_file == "N" || name_or_file == "S") return builtin_scenario(name_or_file);
  return scenario_from(parse_json_file(name_or_file));
}

std::string describe_wall(const WallResult& w) {
  std::ostringstream o;
  o << to_string(w) << '\n';
  if (const auto* s = std::get_if<Wall>(&w)) {
    const auto [lo, hi] = endpoints(*s);
    o << "  endpoints: " << lo.to_string() << " .. " << hi.to_string() << '\n'
      << "  top point: (alpha^2, beta) = (" << to_string(s->radius_sq) << ", " << to_string(s->center_beta) << ")\n";
  }
  return o.str();
}

std::string candidate_table(const std::vector<Candidate>& cs) {
  std::ostringstream o;
  if (cs.empty()) o << "no candidates\n";
  for (const auto& c : cs) {
    o << "(" << to_string(c.invariants) << ")  radius_sq " << to_string(c.wall.radius_sq) << "  complement ("
      << to_string(c.complement) << ")";
    if (!c.lifts.empty()) {
      o << "  lifts";
      for (Divisor l : c.lifts) o << ' ' << format_line_bundle(l);
    }
    o << '\n';
  }
  return o.str();
}

Json candidates_json(const std::vector<Candidate>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return a;
}

std::string ext_table(const ExtDims& e, const std::string& what) {
  std::ostringstream o;
  for (int i = e.lowest_degree; i <= e.highest_degree(); ++i) {
    const DimRange r = e.degree(i);
    o << "Ext^" << i << what << " = " << to_string(r) << (r.exact() ? "" : "  (interval)") << '\n';
  }
  o << "euler = " << e.euler << '\n';
  return o.str();
}

struct Args {
  std::string u, v, h, min_r2, collapse, scenario, probe, target, side = "probe-to-target", assume, from, to;
  std::vector<std::string> subs;
  bool include_equal = false;
  std::int64_t box_r = 10, box_d = 30, box_c = 30;
};

SearchProblem search_problem(const Args& a) {
  const Polarization h = parse_polarization(a.h);
  const ChernCharacter v = parse_class(a.v);
  Rational r2;
  if (!a.min_r2.empty() == !a.collapse.empty())
    throw std::invalid_argument("give exactly one of --min-r2 and --collapse");
  if (!a.min_r2.empty()) {
    r2 = parse_rational(a.min_r2);
  } else {
    const WallResult w = wall_between(parse_object(a.collapse).chern(), v, h);
    const auto* s = std::get_if<Wall>(&w);
    if (s == nullptr) throw std::invalid_argument("--collapse object gives no semicircular wall: " + to_string(w));
    r2 = s->radius_sq;
  }
  return {invariants(v, h), h, r2, a.include_equal};
}

Json problem_json(const SearchProblem& p) {
  return {{"v", to_json(p.v)},
          {"H", to_string(p.h.divisor())},
          {"min_radius_sq", rational_json(p.min_radius_sq)},
          {"include_equal", p.include_equal_radius}};
}

// Fills v/H/min-r2 from a scenario when one is named.
void apply_scenario(Args& a) {
  if (a.scenario.empty()) return;
  const Scenario s = load_scenario(a.scenario);
  if (a.v.empty()) a.v = format_class(s.v);
  if (a.h.empty()) a.h = to_string(s.h.divisor());
  if (a.min_r2.empty() && a.collapse.empty()) a.collapse = format_object(s.collapsing_subobject);
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw std::invalid_argument(std::string("missing ") + flag);
}

int cmd_walls(const Args& a, const Output& out) {
  require(a.u, "--u");
  require(a.v, "--v");
  require(a.h, "--H");
  const ChernCharacter u = parse_class(a.u);
  const ChernCharacter v = parse_class(a.v);
  const Polarization h = parse_polarization(a.h);
  const WallResult w = wall_between(u, v, h);
  Json result = to_json(w);
  std::string text = describe_wall(w);
  if (u.rank != 0 || v.rank != 0) {
    const PairReport pr = verify_pair(u, v, h);
    result["pair"] = to_json(pr);
    text += std::string("  pair check: ") + (pr.verdict ? "pass" : "fail") + '\n';
    for (const auto& r : pr.reasons) text += "    " + r + '\n';
  }
  out.emit(document("walls", {{"u", a.u}, {"v", a.v}, {"H", a.h}}, result), text);
  return 0;
}

int cmd_candidates(Args a, const Output& out) {
  apply_scenario(a);
  require(a.v, "--v");
  require(a.h, "--H");
  const SearchProblem p = search_problem(a);
  const auto cs = enumerate_candidates(p);
  out.emit(document("candidates", problem_json(p), candidates_json(cs)),
           "threshold radius_sq " + to_string(p.min_radius_sq) + "\n" + candidate_table(cs));
  return 0;
}

int cmd_oracle(Args a, const Output& out) {
  apply_scenario(a);
  require(a.v, "--v");
  require(a.h, "--H");
  const SearchProblem p = search_problem(a);
  const auto fast = enumerate_candidates(p);
  const auto slow = brute_force_oracle(p, {a.box_r, a.box_d, -a.box_c, a.box_c});
  const bool agree = fast == slow;
  Json q = problem_json(p);
  q["box"] = {{"r_max", a.box_r}, {"d_max", a.box_d}, {"c_abs_max", a.box_c}};
  out.emit(document("oracle", q,
                    {{"agree", agree}, {"search", candidates_json(fast)}, {"oracle", candidates_json(slow)}}),
           std::string(agree ? "agree" : "MISMATCH") + ": search " + std::to_string(fast.size()) + ", oracle " +
               std::to_string(slow.size()) + "\n" + (agree ? "" : "search:\n" + candidate_table(fast) +
                                                                  "oracle:\n" + candidate_table(slow)));
  return agree ? 0 : kMismatch;
}

int cmd_ext(const Args& a, const Output& out) {
  ExtDims e;
  std::string what;
  Json q;
  if (!a.from.empty() || !a.to.empty()) {
    require(a.from, "--from");
    require(a.to, "--to");
    TwoTermComplex x = parse_object(a.from);
    TwoTermComplex y = parse_object(a.to);
    if (!a.assume.empty()) {
      const auto as = load_assumptions(a.assume);
      (x.is_sum() || x.is_shifted_sum() ? y : x).assumptions = as;
    }
    e = ext_objects(x, y);
    what = "(" + format_object(x) + ", " + format_object(y) + ")";
    q = {{"from", to_json(x)}, {"to", to_json(y)}};
  } else {
    require(a.probe, "--probe (or --from/--to)");
    require(a.target, "--target");
    const LineBundleSum probe = parse_sum(a.probe);
    TwoTermComplex target = parse_object(a.target);
    if (!a.assume.empty()) target.assumptions = load_assumptions(a.assume);
    const Side side = parse_side(a.side);
    e = hyperext(probe, target, side);
    what = side == Side::ProbeToTarget ? "(" + format_sum(probe) + ", " + format_object(target) + ")"
                                       : "(" + format_object(target) + ", " + format_sum(probe) + ")";
    q = {{"probe", format_sum(probe)}, {"target", to_json(target)}, {"side", to_string(side)}};
  }
  out.emit(document("ext", q, to_json(e)), ext_table(e, what));
  return 0;
}

int cmd_cohom(const Args& a, const Output& out) {
  require(a.from, "--L");
  const LineBundleSum l = parse_sum(a.from);
  CohomologyDims d{0, 0, 0};
  if (!a.to.empty()) {
    d = ext_sums(l, parse_sum(a.to));
  } else {
    d = ext_sums({{Divisor{0, 0}}}, l);
  }
  std::ostringstream o;
  const std::string what = a.to.empty() ? "h^" : "Ext^";
  for (int i = 0; i < 3; ++i) o << what << i << " = " << d[static_cast<std::size_t>(i)] << '\n';
  Json q = {{"L", format_sum(l)}};
  if (!a.to.empty()) q["to"] = a.to;
  out.emit(document("cohom", q, Json::array({d[0], d[1], d[2]})), o.str());
  return 0;
}

int cmd_report(const Args& a, const Output& out) {
  require(a.scenario, "scenario");
  const Scenario s = load_scenario(a.scenario);
  const WallReport r = run_report(s);
  std::ostringstream o;
  o << s.name << " = " << s.label << ", H = " << to_string(s.h.divisor()) << '\n';
  for (const auto& c : r.checks) o << (c.passed ? "  ok    " : "  FAIL  ") << c.name << ": " << c.detail << '\n';
  for (const auto& n : s.annotations) o << "  note  " << n << '\n';
  o << (r.passed() ? "PASS\n" : "FAIL\n");
  out.emit(document("report", {{"scenario", a.scenario}}, to_json(r, s)), o.str());
  return r.passed() ? 0 : kMismatch;
}

int cmd_plot(Args a, const std::string& path) {
  PlotSpec spec;
  if (!a.scenario.empty()) {
    spec = plot_spec(load_scenario(a.scenario));
  } else {
    require(a.v, "--v or --scenario");
    require(a.h, "--H");
    if (a.subs.empty()) throw std::invalid_argument("missing --u");
    const ChernCharacter v = parse_class(a.v);
    const Polarization h = parse_polarization(a.h);
    spec.title = "Walls for " + format_class(v) + ", H = " + a.h;
    for (const auto& s : a.subs) {
      const WallResult w = wall_between(parse_class(s), v, h);
      const auto* wall = std::get_if<Wall>(&w);
      if (wall == nullptr) throw std::invalid_argument(s + ": " + to_string(w));
      spec.walls.push_back({*wall, s});
    }
    const Invariants vi = invariants(v, h);
    if (vi.r == 0 && vi.d != 0) spec.nu_zero_beta = make_rational(vi.c, vi.d);
  }
  const std::string svg = render_svg(spec);
  if (path.empty() || path == "-") {
    std::cout << svg;
  } else {
    std::ofstream f(path);
    if (!f || !(f << svg)) throw std::runtime_error("cannot write " + path);
  }
  return 0;
}

int cmd_fixtures(const std::string& dir) {
  for (const Scenario& s : builtin_scenarios()) {
    const std::string path = dir + "/" + s.name + ".json";
    std::ofstream f(path);
    if (!f || !(f << to_json(s).dump(2) << '\n')) throw std::runtime_error("cannot write " + path);
    std::cout << path << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tilt-stability walls, destabilizer search and Ext dimensions on P1 x P1"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  Output out;
  app.add_flag("--json", out.json, "print the JSON report document");
  app.add_option("--out", out.out, "also write the JSON document (plot: the SVG) to this path");

  auto* walls = app.add_subcommand("walls", "numerical wall between --u and --v");
  walls->add_option("--u", a.u, "class r,(a,b),c")->required();
  walls->add_option("--v", a.v, "class r,(a,b),c")->required();
  walls->add_option("--H", a.h, "polarization (h1,h2)")->required();

  auto search_flags = [&](CLI::App* c) {
    c->add_option("--scenario", a.scenario, "M, N, S or a fixture file");
    c->add_option("--v", a.v, "torsion class 0,(a,b),c");
    c->add_option("--H", a.h, "polarization (h1,h2)");
    c->add_option("--min-r2", a.min_r2, "threshold radius_sq p/q");
    c->add_option("--collapse", a.collapse, "object whose wall is the threshold");
    c->add_flag("--include-equal", a.include_equal, "keep walls of radius exactly the threshold");
  };
  auto* cands = app.add_subcommand("candidates", "destabilizer candidates above a threshold wall");
  search_flags(cands);
  auto* oracle = app.add_subcommand("oracle", "compare the search with a brute-force box scan");
  search_flags(oracle);
  oracle->add_option("--box-r", a.box_r, "rank bound of the box")->capture_default_str();
  oracle->add_option("--box-d", a.box_d, "|d| bound of the box")->capture_default_str();
  oracle->add_option("--box-c", a.box_c, "|c| bound of the box")->capture_default_str();

  auto* ext = app.add_subcommand("ext", "Ext dimensions via the long exact sequence");
  ext->add_option("--probe", a.probe, "sum of line bundles");
  ext->add_option("--target", a.target, "object [A -> B], sum or sum[1]");
  ext->add_option("--side", a.side, "probe-to-target or target-to-probe")->capture_default_str();
  ext->add_option("--from", a.from, "first argument of Ext (object)");
  ext->add_option("--to", a.to, "second argument of Ext (object)");
  ext->add_option("--assume", a.assume, "JSON file of asserted vanishings")->check(CLI::ExistingFile);

  auto* cohom = app.add_subcommand("cohom", "line bundle cohomology, or Ext between sums with --to");
  cohom->add_option("--L", a.from, "sum of line bundles")->required();
  cohom->add_option("--to", a.to, "second sum");

  auto* report = app.add_subcommand("report", "re-derive a scenario's wall table");
  report->add_option("scenario", a.scenario, "M, N, S or a fixture file")->required();

  std::string plot_out;
  auto* plot = app.add_subcommand("plot", "SVG wall diagram");
  plot->add_option("--scenario", a.scenario, "M, N, S or a fixture file");
  plot->add_option("--v", a.v, "class");
  plot->add_option("--H", a.h, "polarization");
  plot->add_option("--u", a.subs, "destabilizing class (repeatable)");
  plot->add_option("--out", plot_out, "SVG path, '-' for stdout");

  std::string fixture_dir;
  auto* fixtures = app.add_subcommand("fixtures", "write the built-in scenarios as JSON fixture files");
  fixtures->add_option("dir", fixture_dir, "target directory")->required()->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*walls) return cmd_walls(a, out);
    if (*cands) return cmd_candidates(a, out);
    if (*oracle) return cmd_oracle(a, out);
    if (*ext) return cmd_ext(a, out);
    if (*cohom) return cmd_cohom(a, out);
    if (*report) return cmd_report(a, out);
    if (*plot) return cmd_plot(a, plot_out.empty() ? out.out : plot_out);
    if (*fixtures) return cmd_fixtures(fixture_dir);
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
