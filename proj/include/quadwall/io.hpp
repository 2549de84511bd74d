#pragma once

// Text grammar and JSON encoding for the command line and fixture files.
//
//   class        r,(a,b),c            e.g. "0,(2,3),-3"
//   polarization (h1,h2)
//   line bundle  O | O(a,b) | O(a,b)^k
//   sum          bundle + bundle + ...   ("0" is the zero object)
//   object       sum | sum[1] | [sum -> sum]
//
// Rationals are encoded as exact "p/q" strings; nothing here emits floats.

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "quadwall/arith.hpp"
#include "quadwall/cohom.hpp"
#include "quadwall/lattice.hpp"
#include "quadwall/search.hpp"
#include "quadwall/walls.hpp"

namespace quadwall {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "quadwall-report/1";

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool peek(std::string_view tok) {
    skip_ws();
    return s_.substr(pos_, tok.size()) == tok;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect(std::string_view tok) {
    if (!peek(tok)) fail("expected '" + std::string(tok) + "'");
    pos_ += tok.size();
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    try {
      return std::stoll(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer out of range");
    }
  }

  Rational rational() {
    skip_ws();
    const std::size_t start = pos_;
    integer();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      integer();
    }
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  Divisor divisor() {
    expect('(');
    const std::int64_t a = integer();
    expect(',');
    const std::int64_t b = integer();
    expect(')');
    return {a, b};
  }

  ChernCharacter chern_class() {
    const std::int64_t r = integer();
    expect(',');
    const Divisor c1 = divisor();
    expect(',');
    return {r, c1, rational()};
  }

  void line_bundles(std::vector<Divisor>& out) {
    expect('O');
    Divisor l{0, 0};
    if (peek('(')) l = divisor();
    std::int64_t k = 1;
    if (accept('^')) {
      k = integer();
      if (k < 0) fail("negative multiplicity");
    }
    for (std::int64_t i = 0; i < k; ++i) out.push_back(l);
  }

  LineBundleSum sum() {
    LineBundleSum out;
    skip_ws();
    if (peek('0')) {
      ++pos_;
      return out;
    }
    line_bundles(out.summands);
    while (accept('+')) line_bundles(out.summands);
    return out;
  }

  TwoTermComplex object() {
    if (accept('[')) {
      LineBundleSum a = sum();
      expect("->");
      LineBundleSum b = sum();
      expect(']');
      return {std::move(a), std::move(b), {}};
    }
    LineBundleSum s = sum();
    if (peek("[1]")) {
      expect("[1]");
      return TwoTermComplex::shifted(std::move(s));
    }
    return TwoTermComplex::sum(std::move(s));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ChernCharacter parse_class(std::string_view text) {
  detail::Parser p(text);
  ChernCharacter v = p.chern_class();
  p.finish();
  return v;
}

inline Polarization parse_polarization(std::string_view text) {
  detail::Parser p(text);
  const Divisor h = p.divisor();
  p.finish();
  if (!is_ample(h)) throw ParseError("polarization " + to_string(h) + " is not ample", 0);
  return Polarization(h);
}

inline LineBundleSum parse_sum(std::string_view text) {
  detail::Parser p(text);
  LineBundleSum s = p.sum();
  p.finish();
  return s;
}

inline TwoTermComplex parse_object(std::string_view text) {
  detail::Parser p(text);
  TwoTermComplex x = p.object();
  p.finish();
  return x;
}

inline Side parse_side(std::string_view text) {
  if (text == "probe-to-target" || text == "from-probe") return Side::ProbeToTarget;
  if (text == "target-to-probe" || text == "to-probe") return Side::TargetToProbe;
  throw ParseError("unknown direction '" + std::string(text) + "'", 0);
}

// ---- formatting -----------------------------------------------------------

inline std::string format_line_bundle(Divisor l) {
  if (l == Divisor{0, 0}) return "O";
  return "O" + to_string(l);
}

inline std::string format_sum(const LineBundleSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < s.summands.size();) {
    std::size_t j = i;
    while (j < s.summands.size() && s.summands[j] == s.summands[i]) ++j;
    if (!out.empty()) out += "+";
    out += format_line_bundle(s.summands[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

inline std::string format_object(const TwoTermComplex& x) {
  if (x.is_sum()) return format_sum(x.deg_0);
  if (x.is_shifted_sum()) return format_sum(x.deg_minus_1) + "[1]";
  return "[" + format_sum(x.deg_minus_1) + " -> " + format_sum(x.deg_0) + "]";
}

inline std::string format_class(const ChernCharacter& v) { return to_string(v); }

// ---- JSON -----------------------------------------------------------------

inline Json rational_json(const Rational& q) { return to_string(q); }
inline Rational rational_from(const Json& j) { return parse_rational(j.get<std::string>()); }

inline Json to_json(const Invariants& i) { return Json::array({i.r, i.d, i.c}); }
inline Invariants invariants_from(const Json& j) {
  return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>(), j.at(2).get<std::int64_t>()};
}

inline Json to_json(Divisor l) { return Json::array({l.a, l.b}); }
inline Divisor divisor_from(const Json& j) { return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()}; }

inline Json to_json(const QuadraticSurd& x) {
  Json j;
  j["value"] = x.to_string();
  j["rational_part"] = rational_json(x.rational_part());
  j["surd_coefficient"] = rational_json(x.surd_coefficient());
  j["radicand"] = rational_json(x.radicand());
  return j;
}
inline QuadraticSurd surd_from(const Json& j) {
  return {rational_from(j.at("rational_part")), rational_from(j.at("surd_coefficient")),
          rational_from(j.at("radicand"))};
}

inline Json to_json(const Wall& w) {
  Json j;
  j["kind"] = "semicircle";
  j["center_beta"] = rational_json(w.center_beta);
  j["radius_sq"] = rational_json(w.radius_sq);
  const auto [lo, hi] = endpoints(w);
  j["endpoints"] = {{"beta_minus", to_json(lo)}, {"beta_plus", to_json(hi)}};
  j["top_point"] = {{"beta", rational_json(w.center_beta)}, {"alpha_sq", rational_json(w.radius_sq)}};
  return j;
}

inline Json to_json(const WallResult& w) {
  if (const auto* s = std::get_if<Wall>(&w)) return to_json(*s);
  if (const auto* v = std::get_if<VerticalWall>(&w)) {
    Json j;
    j["kind"] = "vertical";
    j["beta"] = rational_json(v->beta);
    return j;
  }
  Json j;
  j["kind"] = "degenerate";
  j["reason"] = to_string(std::get<Degenerate>(w).kind);
  return j;
}

inline WallResult wall_from(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "semicircle") return Wall{rational_from(j.at("center_beta")), rational_from(j.at("radius_sq"))};
  if (kind == "vertical") return VerticalWall{rational_from(j.at("beta"))};
  if (kind == "degenerate") {
    const std::string reason = j.at("reason").get<std::string>();
    for (auto k : {Degenerate::Kind::Proportional, Degenerate::Kind::Empty, Degenerate::Kind::NoLocus})
      if (reason == to_string(k)) return Degenerate{k};
    throw std::invalid_argument("unknown degenerate reason '" + reason + "'");
  }
  throw std::invalid_argument("unknown wall kind '" + kind + "'");
}

inline Json to_json(const Candidate& c) {
  Json j;
  j["invariants"] = to_json(c.invariants);
  j["wall"] = to_json(c.wall);
  Json lifts = Json::array();
  for (Divisor l : c.lifts) lifts.push_back(format_line_bundle(l));
  j["lifts"] = lifts;
  j["complement"] = to_json(c.complement);
  return j;
}

inline Candidate candidate_from(const Json& j) {
  Candidate c{invariants_from(j.at("invariants")), std::get<Wall>(wall_from(j.at("wall"))), {},
              invariants_from(j.at("complement"))};
  for (const auto& l : j.at("lifts")) {
    const LineBundleSum s = parse_sum(l.get<std::string>());
    c.lifts.insert(c.lifts.end(), s.summands.begin(), s.summands.end());
  }
  return c;
}

inline Json to_json(const DimRange& r) {
  if (r.exact()) return r.lo;
  return Json::array({r.lo, r.hi});
}
inline DimRange dim_range_from(const Json& j) {
  if (j.is_number_integer()) return {j.get<std::int64_t>(), j.get<std::int64_t>()};
  return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()};
}

inline Json to_json(const ExtDims& e) {
  Json j;
  j["lowest_degree"] = e.lowest_degree;
  Json dims = Json::array();
  for (const DimRange& r : e.dims) dims.push_back(to_json(r));
  j["dims"] = dims;
  j["euler"] = e.euler;
  return j;
}
inline ExtDims ext_dims_from(const Json& j) {
  ExtDims e;
  e.lowest_degree = j.at("lowest_degree").get<int>();
  for (const auto& d : j.at("dims")) e.dims.push_back(dim_range_from(d));
  e.euler = j.at("euler").get<std::int64_t>();
  return e;
}

inline Json to_json(const AssertedVanishing& a) {
  Json j;
  j["degree"] = a.degree;
  j["direction"] = a.direction == Side::ProbeToTarget ? "from-probe" : "to-probe";
  j["justification"] = a.justification;
  return j;
}
inline AssertedVanishing vanishing_from(const Json& j) {
  return {j.at("degree").get<int>(), parse_side(j.at("direction").get<std::string>()),
          j.value("justification", std::string{})};
}

inline Json to_json(const TwoTermComplex& x) {
  if (x.assumptions.empty()) return format_object(x);
  Json j;
  j["object"] = format_object(x);
  Json as = Json::array();
  for (const auto& a : x.assumptions) as.push_back(to_json(a));
  j["assume"] = as;
  return j;
}
inline TwoTermComplex object_from(const Json& j) {
  if (j.is_string()) return parse_object(j.get<std::string>());
  TwoTermComplex x = parse_object(j.at("object").get<std::string>());
  for (const auto& a : j.at("assume")) x.assumptions.push_back(vanishing_from(a));
  return x;
}

inline Json to_json(const PairReport& r) {
  Json j;
  j["wall"] = to_json(r.wall);
  j["heart_window"] = r.heart_window;
  j["discriminant_sub"] = rational_json(r.discriminant_sub);
  j["discriminant_quotient"] = rational_json(r.discriminant_quotient);
  j["euler_sub_quotient"] = r.euler_sub_quotient;
  j["euler_quotient_sub"] = r.euler_quotient_sub;
  j["verdict"] = r.verdict;
  j["reasons"] = r.reasons;
  return j;
}

inline Json document(const std::string& command, Json query, Json result) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["query"] = std::move(query);
  j["result"] = std::move(result);
  return j;
}

}  // namespace quadwall
