#pragma once

/**
 * @file walls.hpp
 * @brief Numerical walls between two classes in the (alpha, beta) slice.
 *
 * Writing W_rd, W_rc, W_dc for the 2x2 minors of the invariant triples
 * (r_u d_v - r_v d_u, etc.), the locus where Z(u) and Z(v) are aligned is
 *
 *     (H^2/2) W_rd (beta^2 + alpha^2) - H^2 W_rc beta + W_dc = 0.
 *
 * With W_rd != 0 this is a semicircle centered at W_rc / W_rd with squared
 * radius center^2 - 2 W_dc / (H^2 W_rd). For v = (0, d', c') and u = (r, d, c)
 * that is (c'/d')^2 - 2c'd/(H^2 d' r) + 2c/(H^2 r). Note the plus sign on the
 * last term: with a minus there, I_{p,q}(1,1) against (0,(2,3),-3) at
 * H = (1,2) would give 65/49 instead of 16/49.
 */

#include <string>
#include <utility>
#include <variant>

#include "quadwall/arith.hpp"
#include "quadwall/lattice.hpp"
#include "quadwall/tilt.hpp"

namespace quadwall {

/// Semicircle (beta - center_beta)^2 + alpha^2 = radius_sq, alpha > 0.
struct Wall {
  Rational center_beta;
  Rational radius_sq;

  friend bool operator==(const Wall& x, const Wall& y) {
    return x.center_beta == y.center_beta && x.radius_sq == y.radius_sq;
  }
};

struct VerticalWall {
  Rational beta;

  friend bool operator==(const VerticalWall& x, const VerticalWall& y) { return x.beta == y.beta; }
};

struct Degenerate {
  enum class Kind {
    Proportional,  // all minors vanish
    Empty,         // circle with radius_sq <= 0
    NoLocus        // W_rd = W_rc = 0 but W_dc != 0
  };
  Kind kind = Kind::Proportional;

  friend bool operator==(const Degenerate&, const Degenerate&) = default;
};

using WallResult = std::variant<Wall, VerticalWall, Degenerate>;

inline const char* to_string(Degenerate::Kind k) {
  switch (k) {
    case Degenerate::Kind::Proportional: return "proportional";
    case Degenerate::Kind::Empty: return "empty";
    case Degenerate::Kind::NoLocus: return "no-locus";
  }
  return "?";
}

struct WallMinors {
  Integer rd;
  Integer rc;
  Integer dc;
};

inline WallMinors wall_minors(const Invariants& u, const Invariants& v) {
  auto z = [](std::int64_t x) { return Integer(static_cast<long>(x)); };
  return {z(u.r) * z(v.d) - z(v.r) * z(u.d), z(u.r) * z(v.c) - z(v.r) * z(u.c),
          z(u.d) * z(v.c) - z(v.d) * z(u.c)};
}

inline WallResult wall_between(const Invariants& u, const Invariants& v, const Polarization& h) {
  const WallMinors m = wall_minors(u, v);
  const Rational h2 = to_rational(h.squared());
  if (m.rd != 0) {
    Rational center{m.rc, m.rd};
    center.canonicalize();
    const Rational radius_sq = center * center - 2 * Rational(m.dc) / (h2 * Rational(m.rd));
    if (sgn(radius_sq) <= 0) return Degenerate{Degenerate::Kind::Empty};
    return Wall{center, radius_sq};
  }
  if (m.rc != 0) return VerticalWall{Rational(Rational(m.dc) / (h2 * Rational(m.rc)))};
  if (m.dc != 0) return Degenerate{Degenerate::Kind::NoLocus};
  return Degenerate{Degenerate::Kind::Proportional};
}

inline WallResult wall_between(const ChernCharacter& u, const ChernCharacter& v, const Polarization& h) {
  return wall_between(invariants(u, h), invariants(v, h), h);
}

/// beta = H ch1 / (H^2 ch0); torsion classes have none.
inline VerticalWall vertical_wall(const Invariants& v, const Polarization& h) {
  if (v.r == 0) throw std::invalid_argument("a class of rank 0 has no vertical wall");
  return {make_rational(v.d, h.squared() * v.r)};
}

inline VerticalWall vertical_wall(const ChernCharacter& v, const Polarization& h) {
  return vertical_wall(invariants(v, h), h);
}

/// The point right above the center.
inline StabilityPoint top_point(const Wall& w) { return StabilityPoint(w.radius_sq, w.center_beta); }

/// (center - R, center + R) where the semicircle meets alpha = 0.
inline std::pair<QuadraticSurd, QuadraticSurd> endpoints(const Wall& w) {
  if (sgn(w.radius_sq) <= 0) throw std::domain_error("wall with non-positive radius_sq");
  return {QuadraticSurd(w.center_beta, -1, w.radius_sq), QuadraticSurd(w.center_beta, 1, w.radius_sq)};
}

inline std::string to_string(const WallResult& w) {
  if (const auto* s = std::get_if<Wall>(&w))
    return "wall(center=" + to_string(s->center_beta) + ", radius_sq=" + to_string(s->radius_sq) + ")";
  if (const auto* vw = std::get_if<VerticalWall>(&w)) return "vertical(beta=" + to_string(vw->beta) + ")";
  return std::string("degenerate(") + to_string(std::get<Degenerate>(w).kind) + ")";
}

}  // namespace quadwall
