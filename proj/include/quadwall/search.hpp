#pragma once

/**
 * @file search.hpp
 * @brief Enumeration of the invariant triples that can destabilize a torsion
 * class along a wall larger than a threshold circle.
 *
 * Fix a torsion class v = (0, d_v, c_v) with d_v > 0. All of its walls are
 * concentric at C = c_v / d_v. A subobject F = (r, d, c), r >= 1, defining a
 * wall of squared radius R^2 > R0^2 stays a subobject along the whole wall, so
 * in particular at beta_+- = C +- R0, where it must satisfy
 *
 *     0 < d - H^2 beta r < d_v.
 *
 * Together with Bogomolov for F and for Q = v - F and the radius condition
 * this leaves a finite set:
 *
 *   (a) 2 H^2 r R0 < d_v                      (the two degree windows overlap)
 *   (b) H^2 beta_+ r < d < d_v + H^2 beta_- r
 *   (c) (H^2 r / 2)(R0^2 - C^2) + C d < c <= min(d^2 / (2H^2 r),
 *                                               c_v + (d_v - d)^2 / (2H^2 r))
 *
 * A wall of radius exactly R0 (include_equal_radius) only reaches beta_+- in
 * the limit alpha -> 0, so for it the window inequalities in (b) are closed.
 */

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadwall/arith.hpp"
#include "quadwall/lattice.hpp"
#include "quadwall/walls.hpp"

namespace quadwall {

struct SearchProblem {
  Invariants v;
  Polarization h;
  Rational min_radius_sq;
  bool include_equal_radius = false;
};

struct Candidate {
  Invariants invariants;
  Wall wall;
  std::vector<Divisor> lifts;  // line bundles with these invariants (rank 1 only)
  Invariants complement;       // v - invariants

  friend bool operator==(const Candidate& x, const Candidate& y) {
    return x.invariants == y.invariants && x.wall == y.wall && x.lifts == y.lifts &&
           x.complement == y.complement;
  }
};

struct SearchBox {
  std::int64_t r_max = 0;
  std::int64_t d_max = 0;
  std::int64_t c_min = 0;
  std::int64_t c_max = -1;
};

namespace detail {

inline void validate(const SearchProblem& p) {
  if (p.v.r != 0 || p.v.d <= 0)
    throw std::invalid_argument("search needs a torsion class (r = 0) of positive degree, got " + to_string(p.v));
  // With R0 = 0 the rank is unbounded and so is the candidate set.
  if (sgn(p.min_radius_sq) <= 0) throw std::invalid_argument("threshold radius_sq must be positive");
}

/// Radius-based classification of a candidate wall against the threshold.
enum class RadiusClass { Below, Equal, Above };

inline RadiusClass classify_radius(const Rational& radius_sq, const SearchProblem& p) {
  const int c = cmp(radius_sq, p.min_radius_sq);
  if (c > 0) return RadiusClass::Above;
  if (c == 0) return RadiusClass::Equal;
  return RadiusClass::Below;
}

/// H^2 * r * beta_{+-} as surds.
inline QuadraticSurd scaled_endpoint(const SearchProblem& p, std::int64_t r, int side) {
  const Rational center = make_rational(p.v.c, p.v.d);
  const Rational k = to_rational(p.h.squared() * r);
  return QuadraticSurd(Rational(k * center), Rational(side * k), p.min_radius_sq);
}

inline std::int64_t narrow(const Integer& z) { return to_int64(z); }

inline Candidate make_candidate(const Invariants& f, const Wall& w, const SearchProblem& p) {
  Candidate out{f, w, {}, p.v - f};
  if (f.r == 1) out.lifts = line_bundle_lifts(f, p.h);
  return out;
}

inline void sort_candidates(std::vector<Candidate>& cs) {
  std::sort(cs.begin(), cs.end(), [](const Candidate& x, const Candidate& y) {
    const int c = cmp(x.wall.radius_sq, y.wall.radius_sq);
    if (c != 0) return c > 0;
    return x.invariants < y.invariants;
  });
}

}  // namespace detail

/// All positive-rank triples defining a wall for p.v above the threshold,
/// sorted by radius_sq descending (ties broken by (r,d,c) ascending).
inline std::vector<Candidate> enumerate_candidates(const SearchProblem& p) {
  using namespace detail;
  validate(p);
  const Rational h2 = to_rational(p.h.squared());
  const Rational center = make_rational(p.v.c, p.v.d);
  const Rational dv = to_rational(p.v.d);
  const Rational dv_sq = dv * dv;

  std::vector<Candidate> out;
  for (std::int64_t r = 1;; ++r) {
    const Rational rr = to_rational(r);
    // (a), closed so that the equal-radius wall is not cut off.
    if (cmp(Rational(4 * h2 * h2 * rr * rr * p.min_radius_sq), dv_sq) > 0) break;

    const QuadraticSurd lo_edge = scaled_endpoint(p, r, +1);  // H^2 r beta_+
    const QuadraticSurd hi_edge = QuadraticSurd(dv) + scaled_endpoint(p, r, -1);  // d_v + H^2 r beta_-
    const std::int64_t d_lo = narrow(lo_edge.ceil());
    const std::int64_t d_hi = narrow(hi_edge.floor());

    for (std::int64_t d = d_lo; d <= d_hi; ++d) {
      const Rational dd = to_rational(d);
      // Radius condition R^2 >= R0^2, rearranged for c.
      const Rational c_floor_bound = h2 * rr / 2 * (p.min_radius_sq - center * center) + center * dd;
      const std::int64_t c_lo = narrow(ceil(c_floor_bound));
      const Rational bog_f = dd * dd / (2 * h2 * rr);
      const Rational bog_q = to_rational(p.v.c) + (dv - dd) * (dv - dd) / (2 * h2 * rr);
      const std::int64_t c_hi = std::min(narrow(floor(bog_f)), narrow(floor(bog_q)));

      for (std::int64_t c = c_lo; c <= c_hi; ++c) {
        const Invariants f{r, d, c};
        const WallResult wr = wall_between(f, p.v, p.h);
        const auto* w = std::get_if<Wall>(&wr);
        if (w == nullptr) continue;
        const RadiusClass rc = classify_radius(w->radius_sq, p);
        if (rc == RadiusClass::Below) continue;
        if (rc == RadiusClass::Equal && !p.include_equal_radius) continue;
        const bool strict = rc == RadiusClass::Above;
        const int s_lo = (QuadraticSurd(dd) - lo_edge).sign();
        const int s_hi = (hi_edge - QuadraticSurd(dd)).sign();
        if (strict ? (s_lo <= 0 || s_hi <= 0) : (s_lo < 0 || s_hi < 0)) continue;
        out.push_back(make_candidate(f, *w, p));
      }
    }
  }
  sort_candidates(out);
  return out;
}

/**
 * Independent check of enumerate_candidates: tests every triple of the box
 * against the wall, degree-window and Bogomolov predicates evaluated
 * directly, with no rank bound and no rearranged inequalities.
 */
inline std::vector<Candidate> brute_force_oracle(const SearchProblem& p, const SearchBox& box) {
  using namespace detail;
  validate(p);
  const auto [beta_minus, beta_plus] =
      endpoints(Wall{make_rational(p.v.c, p.v.d), p.min_radius_sq});
  const Rational h2 = to_rational(p.h.squared());
  const QuadraticSurd dv{to_rational(p.v.d)};

  std::vector<Candidate> out;
  for (std::int64_t r = 1; r <= box.r_max; ++r) {
    for (std::int64_t d = -box.d_max; d <= box.d_max; ++d) {
      for (std::int64_t c = box.c_min; c <= box.c_max; ++c) {
        const Invariants f{r, d, c};
        const WallResult wr = wall_between(f, p.v, p.h);
        const auto* w = std::get_if<Wall>(&wr);
        if (w == nullptr) continue;
        const RadiusClass rc = classify_radius(w->radius_sq, p);
        if (rc == RadiusClass::Below || (rc == RadiusClass::Equal && !p.include_equal_radius)) continue;
        const bool strict = rc == RadiusClass::Above;

        bool window = true;
        for (const QuadraticSurd& beta : {beta_minus, beta_plus}) {
          // H ch1^beta(F) against 0 and against H ch1^beta(v) = d_v.
          const QuadraticSurd twisted = QuadraticSurd(to_rational(d)) - Rational(h2 * to_rational(r)) * beta;
          const int lower = twisted.sign();
          const int upper = (dv - twisted).sign();
          window = window && (strict ? (lower > 0 && upper > 0) : (lower >= 0 && upper >= 0));
        }
        if (!window) continue;
        if (sgn(discriminant(f, p.h)) < 0) continue;
        if (sgn(discriminant(p.v - f, p.h)) < 0) continue;
        out.push_back(make_candidate(f, *w, p));
      }
    }
  }
  sort_candidates(out);
  return out;
}

/// Numerical sanity data for a proposed destabilizing pair (F, Q = v - F).
struct PairReport {
  WallResult wall;
  bool heart_window = false;
  Rational discriminant_sub{0};
  Rational discriminant_quotient{0};
  std::int64_t euler_sub_quotient = 0;  // chi(F, Q)
  std::int64_t euler_quotient_sub = 0;  // chi(Q, F)
  bool verdict = false;
  std::vector<std::string> reasons;  // empty iff verdict
};

inline PairReport verify_pair(const ChernCharacter& f, const ChernCharacter& v, const Polarization& h) {
  const ChernCharacter q = v - f;
  const Invariants fi = invariants(f, h);
  const Invariants vi = invariants(v, h);
  PairReport rep;
  rep.wall = wall_between(fi, vi, h);
  rep.discriminant_sub = discriminant(fi, h);
  rep.discriminant_quotient = discriminant(vi - fi, h);
  rep.euler_sub_quotient = euler_pairing(f, q);
  rep.euler_quotient_sub = euler_pairing(q, f);

  if (const auto* w = std::get_if<Wall>(&rep.wall)) {
    // Top point and the two points halfway to the ends.
    const Rational h2 = to_rational(h.squared());
    const QuadraticSurd half_left(w->center_beta, make_rational(-1, 2), w->radius_sq);
    const QuadraticSurd half_right(w->center_beta, make_rational(1, 2), w->radius_sq);
    rep.heart_window = true;
    for (const QuadraticSurd& beta : {QuadraticSurd(w->center_beta), half_left, half_right}) {
      const QuadraticSurd tf = QuadraticSurd(to_rational(fi.d)) - Rational(h2 * to_rational(fi.r)) * beta;
      const QuadraticSurd tv = QuadraticSurd(to_rational(vi.d)) - Rational(h2 * to_rational(vi.r)) * beta;
      if (tf.sign() <= 0 || (tv - tf).sign() <= 0) {
        rep.heart_window = false;
        rep.reasons.push_back("H.ch1^beta window fails at beta = " + beta.to_string());
      }
    }
  } else {
    rep.reasons.push_back("no semicircular wall: " + to_string(rep.wall));
  }
  if (sgn(rep.discriminant_sub) < 0)
    rep.reasons.push_back("Bogomolov fails for subobject: Delta = " + to_string(rep.discriminant_sub));
  if (sgn(rep.discriminant_quotient) < 0)
    rep.reasons.push_back("Bogomolov fails for quotient: Delta = " + to_string(rep.discriminant_quotient));
  rep.verdict = rep.reasons.empty();
  return rep;
}

}  // namespace quadwall
