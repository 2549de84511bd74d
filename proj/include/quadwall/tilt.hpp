#pragma once

// Tilt stability on the (alpha, beta) slice: omega = alpha*H, B = beta*H.
// alpha is carried as alpha^2 and Im Z is stored divided by alpha, so every
// predicate here is rational.

#include <optional>
#include <stdexcept>

#include "quadwall/arith.hpp"
#include "quadwall/lattice.hpp"

namespace quadwall {

struct StabilityPoint {
  Rational alpha_sq;
  Rational beta;

  StabilityPoint(Rational alpha_sq_, Rational beta_) : alpha_sq(std::move(alpha_sq_)), beta(std::move(beta_)) {
    if (sgn(alpha_sq) <= 0) throw std::domain_error("alpha^2 must be positive");
  }
};

/// Z = re + i * alpha * im_over_alpha.
struct ChargeValue {
  Rational re;
  Rational im_over_alpha;

  friend bool operator==(const ChargeValue& x, const ChargeValue& y) {
    return x.re == y.re && x.im_over_alpha == y.im_over_alpha;
  }
};

inline ChargeValue central_charge(const ChernCharacter& v, const StabilityPoint& p, const Polarization& h) {
  const TwistedChern t = twist(v, p.beta, h);
  return {Rational(-t.ch2 + p.alpha_sq * t.h2_ch0 / 2), t.h_ch1};
}

/// nu = (ch2^b - (alpha^2 H^2 / 2) r) / (H ch1^b). std::nullopt stands for +infinity.
inline std::optional<Rational> slope(const ChernCharacter& v, const StabilityPoint& p, const Polarization& h) {
  const TwistedChern t = twist(v, p.beta, h);
  if (sgn(t.h_ch1) == 0) return std::nullopt;
  return Rational((t.ch2 - p.alpha_sq * t.h2_ch0 / 2) / t.h_ch1);
}

enum class HeartPosition { TorsionSheaf, SheafInT, ShiftedInF, Boundary };

inline const char* to_string(HeartPosition pos) {
  switch (pos) {
    case HeartPosition::TorsionSheaf: return "torsion-sheaf";
    case HeartPosition::SheafInT: return "sheaf-in-T";
    case HeartPosition::ShiftedInF: return "shifted-in-F";
    case HeartPosition::Boundary: return "boundary";
  }
  return "?";
}

/**
 * Where an object sits relative to the torsion pair (T^beta, F^beta).
 *
 * Only certifiable for torsion sheaves and mu-stable sheaves (line bundles in
 * particular), where membership reduces to the sign of H.ch1^beta. A class of
 * negative rank is read as E[1] and the position of the sheaf E is reported.
 */
inline HeartPosition heart_position(const ChernCharacter& v, const Rational& beta, const Polarization& h) {
  if (v.rank == 0) {
    if (h.degree(v.c1) <= 0) throw std::invalid_argument("torsion class must have positive degree");
    return HeartPosition::TorsionSheaf;
  }
  if (v.rank < 0) return heart_position(-v, beta, h);
  const int mu = sgn(twist(v, beta, h).h_ch1);
  if (mu > 0) return HeartPosition::SheafInT;
  if (mu < 0) return HeartPosition::ShiftedInF;
  return HeartPosition::Boundary;
}

/// Im Z(f) Re Z(e) == Im Z(e) Re Z(f) at p.
inline bool on_wall(const ChernCharacter& f, const ChernCharacter& e, const StabilityPoint& p, const Polarization& h) {
  const ChargeValue zf = central_charge(f, p, h);
  const ChargeValue ze = central_charge(e, p, h);
  return zf.re * ze.im_over_alpha == ze.re * zf.im_over_alpha;
}

}  // namespace quadwall
