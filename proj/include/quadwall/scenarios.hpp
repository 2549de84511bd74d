#pragma once

/**
 * @file scenarios.hpp
 * @brief Fixtures for three moduli spaces of torsion sheaves on P1 x P1 and
 * the report that re-derives their wall tables.
 *
 *   M = M(0,(2,3),5m+2), H = (1,2)
 *   N = M(0,(2,3),5m+1), H = (1,1)
 *   S = M(0,(2,2),4m+2), H = (1,2)
 *
 * Which numerical walls are actual walls, and for which strata, rests on
 * sheaf-theoretic arguments; that information is fixture data carrying a
 * citation. Everything numerical about it (Chern additivity, wall position,
 * Bogomolov, Ext dimensions) is recomputed by run_report.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadwall/cohom.hpp"
#include "quadwall/io.hpp"
#include "quadwall/lattice.hpp"
#include "quadwall/search.hpp"
#include "quadwall/walls.hpp"

namespace quadwall {

/// An expected Ext^1 dimension at a wall crossing.
struct ExtExpectation {
  DimRange expected;
  std::string citation;
};

struct WallFixture {
  std::string name;
  TwoTermComplex subobject;
  TwoTermComplex quotient;
  Wall wall;
  std::optional<ExtExpectation> forward;   // Ext^1(Q, F): extensions on the outer side
  std::optional<ExtExpectation> backward;  // Ext^1(F, Q): extensions on the inner side
  std::string citation;
};

struct Stratum {
  std::string name;
  TwoTermComplex resolution;
  std::string description;  // cited geometry, not computed
};

struct HomExpectation {
  Divisor probe;
  std::string stratum;
  DimRange expected;
  std::string citation;
};

struct Scenario {
  std::string name;
  std::string label;
  ChernCharacter v;
  Polarization h;
  HilbertPolynomial hilbert;
  TwoTermComplex collapsing_subobject;
  std::vector<Invariants> expected_candidates;  // radius descending
  std::vector<WallFixture> walls;               // outermost first
  std::vector<Stratum> strata;
  std::vector<HomExpectation> hom_table;
  std::vector<std::string> annotations;  // cited birational geometry
};

// ---- built-in fixtures ----------------------------------------------------

namespace detail {

inline TwoTermComplex obj(std::string_view s) { return parse_object(s); }
inline Wall wall(std::int64_t cn, std::int64_t cd, std::int64_t rn, std::int64_t rd) {
  return {make_rational(cn, cd), make_rational(rn, rd)};
}
inline ExtExpectation exact(std::int64_t n, std::string cite) { return {{n, n}, std::move(cite)}; }
inline ExtExpectation range(std::int64_t lo, std::int64_t hi, std::string cite) {
  return {{lo, hi}, std::move(cite)};
}

}  // namespace detail

inline Scenario scenario_m() {
  using namespace detail;
  Scenario s{"M", "M(0,(2,3),5m+2)", parse_class("0,(2,3),-3"), Polarization({1, 2}), {5, 2},
             obj("[O(-1,-1) -> O^2]"), {{1, 2, 0}, {1, 1, 0}}, {}, {}, {}, {}};

  TwoTermComplex q1 = obj("[O(-1,-2)+O(-2,-1) -> O(-1,-1)]");
  q1.assumptions.push_back({0, Side::TargetToProbe,
                            "Hom(Q,O(0,1)) = 0: Q lies in F[1] and O(0,1) in T along the wall"});

  s.walls = {
      {"W2", obj("O(1,0)"), obj("O(-1,-3)[1]"), wall(-3, 7, 30, 49),
       exact(12, "M2 ~ P^11 is the space of extensions of O(-1,-3)[1] by O(1,0)"),
       exact(2, "M2' = P(Hom(O(-1,-3),O(-1,-2))) ~ P^1"),
       "outermost wall; actual for the stratum M2 only"},
      {"W1", obj("O(0,1)"), q1, wall(-3, 7, 39, 98),
       exact(11, "Ext^1(Q,O(0,1)) = C^11, so M1 is a P^10-bundle over P^1 x P^1"),
       exact(1, "Ext^1(O(0,1),Q) = C: the P^10-bundle is contracted onto its base"),
       "actual for the stratum M1"},
      {"W0", obj("[O(-1,-1) -> O^2]"), obj("O(-1,-2)[1]"), wall(-3, 7, 16, 49),
       range(10, 12, "Hom(O(-1,-2), I_{p,q}(1,1)) from the resolution; not claimed in the source"),
       exact(0, "Ext^1(I_{p,q}(1,1),O(-1,-2)[1]) = 0: collapsing wall"),
       "collapsing wall: I_{p,q}(1,1) destabilizes the open stratum"},
  };
  s.strata = {
      {"M0", obj("[O(-1,-2)+O(-1,-1) -> O^2]"), "open stratum; phi_12, phi_22 linearly independent"},
      {"M1", obj("[O(-1,-2)+O(-2,-1) -> O(-1,-1)+O(0,1)]"), "codimension 1; phi_11 != 0, phi_12 != 0"},
      {"M2", obj("[O(-1,-3) -> O(1,0)]"), "codimension 2, isomorphic to P^11; E = O_C(1,0)"},
  };
  const char* hom_cite = "Hom vanishings (i)-(iii) via the resolutions";
  s.hom_table = {
      {{0, 2}, "M0", {0, 0}, hom_cite}, {{0, 2}, "M1", {0, 0}, hom_cite}, {{0, 2}, "M2", {0, 0}, hom_cite},
      {{1, 0}, "M0", {0, 0}, hom_cite}, {{1, 0}, "M1", {0, 0}, hom_cite},
      {{1, 0}, "M2", {1, 1}, "O(1,0) is the second term of the resolution of M2"},
      {{0, 1}, "M0", {0, 0}, hom_cite},
      {{0, 1}, "M1", {1, 1}, "O(0,1) is a summand of the second term of the resolution of M1"},
      {{0, 1}, "M2", {0, 0}, "no map of sheaves between O(1,0) and O(0,1)"},
  };
  s.annotations = {
      "M is a projective variety of dimension 13",
      "chamber 1: the Simpson moduli space M",
      "chamber 2: M' obtained by contracting M2 and replacing it with M2' ~ P^1",
      "chamber 3: M'' ~ GIT quotient, obtained by contracting a P^10-bundle over P^1 x P^1",
      "chamber 4: empty",
  };
  return s;
}

inline Scenario scenario_n() {
  using namespace detail;
  Scenario s{"N", "M(0,(2,3),5m+1)", parse_class("0,(2,3),-4"), Polarization({1, 1}), {5, 1},
             obj("O"), {{1, 1, 0}}, {}, {}, {}, {}};
  s.walls = {
      {"W'1", obj("O(0,1)"), obj("O(-2,-2)[1]"), wall(-4, 5, 36, 25),
       exact(12, "N2 ~ P^11 is the space of extensions of O(-2,-2)[1] by O(0,1)"),
       exact(2, "Ext^1(O(0,1),O(-2,-2)[1]) = Hom(O,O(0,1)) = C^2"),
       "outermost wall; actual for the stratum N2"},
      {"W'0", obj("O"), obj("[O(-1,-2)^2 -> O(0,-1)]"), wall(-4, 5, 16, 25),
       range(10, 12, "Ext^1(Q',O) from the resolution; not claimed in the source"),
       exact(0, "Ext^1(O,Q') = 0: collapsing wall"),
       "collapsing wall: O destabilizes the open stratum"},
  };
  s.strata = {
      {"N0", obj("[O(-1,-2)^2 -> O(0,-1)+O]"), "open stratum"},
      {"N1", obj("[O(-2,-1)+O(-1,-3) -> O(-1,-1)+O]"), "codimension 1, a P^9-bundle over P^2 x P^1"},
      {"N2", obj("[O(-2,-2) -> O(0,1)]"), "codimension 2, isomorphic to P^11; E = O_C(0,1)"},
      {"N3", obj("[O(-2,-2)+O(0,-1) -> O^2]"), "codimension 3, a P^1-bundle over P^8 x P^1; meets N2"},
  };
  const char* hom_cite = "Hom(O(1,0),E) = 0 for all E in N";
  s.hom_table = {
      {{1, 0}, "N0", {0, 0}, hom_cite}, {{1, 0}, "N1", {0, 0}, hom_cite},
      {{1, 0}, "N2", {0, 0}, hom_cite}, {{1, 0}, "N3", {0, 0}, hom_cite},
      {{0, 1}, "N0", {0, 0}, "Hom(O(0,1),E) = 0 off N2"},
      {{0, 1}, "N1", {0, 0}, "Hom(O(0,1),E) = 0 off N2"},
      {{0, 1}, "N2", {1, 1}, "O(0,1) is the second term of the resolution of N2"},
      {{0, 1}, "N3", {1, 1}, "N3 meets N2 and is affected by the first wall crossing"},
  };
  s.annotations = {
      "N is a projective variety of dimension 13",
      "chamber 1: the Simpson moduli space N",
      "chamber 2: N', a projective bundle over a blow-up of Gr(2,4); N2 replaced by N2' ~ P^1",
      "chamber 3: empty",
  };
  return s;
}

inline Scenario scenario_s() {
  using namespace detail;
  Scenario s{"S", "M(0,(2,2),4m+2)", parse_class("0,(2,2),-2"), Polarization({1, 2}), {4, 2},
             obj("O^2"), {{1, 2, 0}, {1, 1, 0}}, {}, {}, {}, {}};
  s.walls = {
      {"W''2", obj("O(1,0)"), obj("O(-1,-2)[1]"), wall(-1, 3, 4, 9),
       exact(9, "S2 ~ P^8 is the space of extensions of O(-1,-2)[1] by O(1,0)"),
       exact(1, "Ext^1(O(1,0),O(-1,-2)[1]) = Hom(O(-1,-2),O(-1,-2)) = C"),
       "outermost wall; actual for the divisor S2"},
      {"W''1", obj("O(0,1)"), obj("O(-2,-1)[1]"), wall(-1, 3, 5, 18),
       exact(9, "S1 ~ P^8 is the space of extensions of O(-2,-1)[1] by O(0,1)"),
       exact(1, "symmetric to the first wall: S1 contracts to a point"),
       "actual for the divisor S1"},
      {"W''0", obj("O^2"), obj("O(-1,-1)^2[1]"), wall(-1, 3, 1, 9),
       exact(16, "Hom(O(-1,-1)^2, O^2) from Kunneth; not claimed in the source"),
       exact(0, "Ext^1(O,O(-1,-1)[1]) = Hom(O(-1,-1),O(-2,-2)) = 0: collapsing wall"),
       "collapsing wall: O^2 destabilizes the open stratum"},
  };
  s.strata = {
      {"S0", obj("[O(-1,-1)^2 -> O^2]"), "open stratum"},
      {"S1", obj("[O(-2,-1) -> O(0,1)]"), "divisor isomorphic to P^8"},
      {"S2", obj("[O(-1,-2) -> O(1,0)]"), "divisor isomorphic to P^8"},
  };
  const char* hom_cite = "Hom(O(0,2),E) = 0 for all E in S";
  s.hom_table = {
      {{0, 2}, "S0", {0, 0}, hom_cite}, {{0, 2}, "S1", {0, 0}, hom_cite}, {{0, 2}, "S2", {0, 0}, hom_cite},
      {{1, 0}, "S0", {0, 0}, "Hom(O(1,0),E) = 0 off S2"},
      {{1, 0}, "S1", {0, 0}, "Hom(O(1,0),E) = 0 off S2"},
      {{1, 0}, "S2", {1, 1}, "O(1,0) is the second term of the resolution of S2"},
      {{0, 1}, "S0", {0, 0}, "symmetric to O(1,0)"},
      {{0, 1}, "S1", {1, 1}, "O(0,1) is the second term of the resolution of S1"},
      {{0, 1}, "S2", {0, 0}, "no map of sheaves between O(1,0) and O(0,1)"},
  };
  s.annotations = {
      "S is a projective variety of dimension 9, singular along strictly semistable sheaves",
      "chamber 1: the Simpson moduli space S",
      "chamber 2: S' obtained by contracting the divisor S2 to a smooth point",
      "chamber 3: S'' ~ GIT quotient, obtained by contracting the divisor S1 to a smooth point",
      "chamber 4: empty",
  };
  return s;
}

inline std::vector<Scenario> builtin_scenarios() { return {scenario_m(), scenario_n(), scenario_s()}; }

inline Scenario builtin_scenario(std::string_view name) {
  for (Scenario& s : builtin_scenarios())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown scenario '" + std::string(name) + "' (expected M, N or S)");
}

// ---- JSON -------------------------------------------------------------------

inline Json to_json(const ExtExpectation& e) {
  Json j;
  j["expected"] = to_json(e.expected);
  j["citation"] = e.citation;
  return j;
}

inline Json to_json(const Scenario& s) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = s.name;
  j["label"] = s.label;
  j["v"] = format_class(s.v);
  j["H"] = to_string(s.h.divisor());
  j["hilbert"] = {{"leading", s.hilbert.leading}, {"constant", s.hilbert.constant}};
  j["collapsing_subobject"] = to_json(s.collapsing_subobject);
  Json cands = Json::array();
  for (const auto& c : s.expected_candidates) cands.push_back(to_json(c));
  j["expected_candidates"] = cands;
  Json walls = Json::array();
  for (const auto& w : s.walls) {
    Json wj;
    wj["name"] = w.name;
    wj["subobject"] = to_json(w.subobject);
    wj["quotient"] = to_json(w.quotient);
    wj["center_beta"] = rational_json(w.wall.center_beta);
    wj["radius_sq"] = rational_json(w.wall.radius_sq);
    if (w.forward) wj["forward_ext1"] = to_json(*w.forward);
    if (w.backward) wj["backward_ext1"] = to_json(*w.backward);
    wj["citation"] = w.citation;
    walls.push_back(wj);
  }
  j["walls"] = walls;
  Json strata = Json::array();
  for (const auto& st : s.strata)
    strata.push_back({{"name", st.name}, {"resolution", to_json(st.resolution)}, {"description", st.description}});
  j["strata"] = strata;
  Json homs = Json::array();
  for (const auto& h : s.hom_table)
    homs.push_back({{"probe", format_line_bundle(h.probe)},
                    {"stratum", h.stratum},
                    {"expected", to_json(h.expected)},
                    {"citation", h.citation}});
  j["hom_table"] = homs;
  j["annotations"] = s.annotations;
  return j;
}

inline ExtExpectation ext_expectation_from(const Json& j) {
  return {dim_range_from(j.at("expected")), j.value("citation", std::string{})};
}

inline Scenario scenario_from(const Json& j) {
  Scenario s{j.at("name").get<std::string>(),
             j.at("label").get<std::string>(),
             parse_class(j.at("v").get<std::string>()),
             parse_polarization(j.at("H").get<std::string>()),
             {j.at("hilbert").at("leading").get<std::int64_t>(), j.at("hilbert").at("constant").get<std::int64_t>()},
             object_from(j.at("collapsing_subobject")),
             {}, {}, {}, {}, {}};
  for (const auto& c : j.at("expected_candidates")) s.expected_candidates.push_back(invariants_from(c));
  for (const auto& wj : j.at("walls")) {
    WallFixture w{wj.at("name").get<std::string>(),
                  object_from(wj.at("subobject")),
                  object_from(wj.at("quotient")),
                  {rational_from(wj.at("center_beta")), rational_from(wj.at("radius_sq"))},
                  std::nullopt,
                  std::nullopt,
                  wj.value("citation", std::string{})};
    if (wj.contains("forward_ext1")) w.forward = ext_expectation_from(wj.at("forward_ext1"));
    if (wj.contains("backward_ext1")) w.backward = ext_expectation_from(wj.at("backward_ext1"));
    s.walls.push_back(std::move(w));
  }
  for (const auto& st : j.at("strata"))
    s.strata.push_back({st.at("name").get<std::string>(), object_from(st.at("resolution")),
                        st.value("description", std::string{})});
  for (const auto& h : j.at("hom_table")) {
    const LineBundleSum probe = parse_sum(h.at("probe").get<std::string>());
    if (probe.summands.size() != 1) throw std::invalid_argument("hom_table probe must be a single line bundle");
    s.hom_table.push_back({probe.summands.front(), h.at("stratum").get<std::string>(),
                           dim_range_from(h.at("expected")), h.value("citation", std::string{})});
  }
  if (j.contains("annotations")) s.annotations = j.at("annotations").get<std::vector<std::string>>();
  return s;
}

// ---- reports ----------------------------------------------------------------

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct HomRow {
  Divisor probe;
  std::string stratum;
  ExtDims dims;
};

struct WallReport {
  std::string scenario;
  Rational threshold_radius_sq{0};
  std::vector<Candidate> candidates;            // strictly above the threshold
  std::vector<Candidate> candidates_with_equal;  // threshold wall included
  std::vector<HomRow> hom_rows;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Hom^*(probe, E) for every probe of the hom table against every stratum.
inline std::vector<HomRow> strata_hom_table(const Scenario& s) {
  std::vector<Divisor> probes;
  for (const auto& h : s.hom_table)
    if (std::find(probes.begin(), probes.end(), h.probe) == probes.end()) probes.push_back(h.probe);
  std::vector<HomRow> rows;
  for (Divisor p : probes)
    for (const Stratum& st : s.strata)
      rows.push_back({p, st.name, hom_sheaf_with_resolution(LineBundleSum{{p}}, st.resolution)});
  return rows;
}

namespace detail {

inline std::string invariants_list(const std::vector<Invariants>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " ") + std::string("(") + to_string(x) + ")";
  return out.empty() ? "none" : out;
}

}  // namespace detail

inline WallReport run_report(const Scenario& s) {
  WallReport rep;
  rep.scenario = s.name;
  auto check = [&rep](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const HilbertPolynomial hp = hilbert_polynomial(s.v);
  check("hilbert polynomial", hp == s.hilbert,
        "computed " + to_string(hp) + ", fixture " + to_string(s.hilbert) + " (" + s.label + ")");

  const Invariants vi = invariants(s.v, s.h);
  const WallResult collapse = wall_between(s.collapsing_subobject.chern(), s.v, s.h);
  const auto* collapse_wall = std::get_if<Wall>(&collapse);
  check("collapsing wall", collapse_wall != nullptr,
        format_object(s.collapsing_subobject) + ": " + to_string(collapse));
  if (collapse_wall == nullptr) return rep;
  rep.threshold_radius_sq = collapse_wall->radius_sq;

  rep.candidates = enumerate_candidates({vi, s.h, rep.threshold_radius_sq, false});
  rep.candidates_with_equal = enumerate_candidates({vi, s.h, rep.threshold_radius_sq, true});
  std::vector<Invariants> found;
  for (const auto& c : rep.candidates) found.push_back(c.invariants);
  check("candidates above threshold", found == s.expected_candidates,
        "computed " + detail::invariants_list(found) + ", fixture " +
            detail::invariants_list(s.expected_candidates));

  const Invariants collapse_inv = invariants(s.collapsing_subobject.chern(), s.h);
  const bool surfaced =
      std::any_of(rep.candidates_with_equal.begin(), rep.candidates_with_equal.end(), [&](const Candidate& c) {
        return c.invariants == collapse_inv && c.wall.radius_sq == rep.threshold_radius_sq;
      });
  check("collapsing subobject at threshold", surfaced,
        "(" + to_string(collapse_inv) + ") with radius_sq " + to_string(rep.threshold_radius_sq));

  for (std::size_t i = 0; i < s.walls.size(); ++i) {
    const WallFixture& w = s.walls[i];
    const std::string tag = "wall " + w.name + ": ";
    const ChernCharacter f = w.subobject.chern();
    const ChernCharacter q = w.quotient.chern();
    check(tag + "ch additivity", f + q == s.v, format_class(f) + " + " + format_class(q) + " vs " + format_class(s.v));

    const WallResult from_sub = wall_between(f, s.v, s.h);
    const WallResult from_quot = wall_between(q, s.v, s.h);
    check(tag + "position", from_sub == WallResult{w.wall} && from_quot == WallResult{w.wall},
          "subobject " + to_string(from_sub) + ", quotient " + to_string(from_quot) + ", fixture " +
              to_string(WallResult{w.wall}));

    const PairReport pr = verify_pair(f, s.v, s.h);
    std::string reasons;
    for (const auto& r : pr.reasons) reasons += r + "; ";
    check(tag + "pair", pr.verdict, pr.verdict ? "heart window and Bogomolov hold" : reasons);

    if (i + 1 < s.walls.size()) {
      check(tag + "ordering", cmp(w.wall.radius_sq, s.walls[i + 1].wall.radius_sq) > 0,
            "radius_sq " + to_string(w.wall.radius_sq) + " vs next " + to_string(s.walls[i + 1].wall.radius_sq));
      const Invariants fi = invariants(f, s.h);
      const bool listed = std::any_of(rep.candidates.begin(), rep.candidates.end(), [&](const Candidate& c) {
        return c.invariants == fi && c.wall == w.wall;
      });
      check(tag + "among candidates", listed, "(" + to_string(fi) + ")");
    } else {
      check(tag + "is the threshold wall", w.wall.radius_sq == rep.threshold_radius_sq,
            "radius_sq " + to_string(w.wall.radius_sq) + " vs threshold " + to_string(rep.threshold_radius_sq));
    }

    auto ext_check = [&](const std::string& label, const std::optional<ExtExpectation>& e, const TwoTermComplex& x,
                         const TwoTermComplex& y) {
      if (!e) return;
      try {
        const DimRange got = ext_objects(x, y).degree(1);
        check(tag + label, got == e->expected,
              "Ext^1(" + format_object(x) + ", " + format_object(y) + ") = " + to_string(got) + ", fixture " +
                  to_string(e->expected));
      } catch (const std::exception& ex) {
        check(tag + label, false, ex.what());
      }
    };
    ext_check("forward ext1", w.forward, w.quotient, w.subobject);
    ext_check("backward ext1", w.backward, w.subobject, w.quotient);
  }

  rep.hom_rows = strata_hom_table(s);
  for (const HomExpectation& h : s.hom_table) {
    const auto row = std::find_if(rep.hom_rows.begin(), rep.hom_rows.end(),
                                  [&](const HomRow& r) { return r.probe == h.probe && r.stratum == h.stratum; });
    const std::string name = "hom " + format_line_bundle(h.probe) + " -> " + h.stratum;
    if (row == rep.hom_rows.end()) {
      check(name, false, "unknown stratum");
      continue;
    }
    const DimRange got = row->dims.degree(0);
    check(name, got == h.expected, "computed " + to_string(got) + ", fixture " + to_string(h.expected));
  }
  return rep;
}

inline Json to_json(const WallReport& r, const Scenario& s) {
  Json j;
  j["scenario"] = r.scenario;
  j["label"] = s.label;
  j["passed"] = r.passed();
  j["threshold_radius_sq"] = rational_json(r.threshold_radius_sq);
  Json cands = Json::array();
  for (const auto& c : r.candidates) cands.push_back(to_json(c));
  j["candidates"] = cands;
  Json eq = Json::array();
  for (const auto& c : r.candidates_with_equal) eq.push_back(to_json(c));
  j["candidates_with_threshold"] = eq;
  Json walls = Json::array();
  for (const auto& w : s.walls)
    walls.push_back({{"name", w.name},
                     {"subobject", format_object(w.subobject)},
                     {"quotient", format_object(w.quotient)},
                     {"wall", to_json(w.wall)},
                     {"citation", w.citation}});
  j["walls"] = walls;
  Json homs = Json::array();
  for (const auto& h : r.hom_rows)
    homs.push_back({{"probe", format_line_bundle(h.probe)}, {"stratum", h.stratum}, {"ext", to_json(h.dims)}});
  j["hom_table"] = homs;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  j["annotations"] = s.annotations;
  return j;
}

}  // namespace quadwall
