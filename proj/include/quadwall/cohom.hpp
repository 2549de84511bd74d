#pragma once

/**
 * @file cohom.hpp
 * @brief Ext dimensions between line bundles, sums of line bundles and
 * two-term complexes on P1 x P1.
 *
 * Line bundle cohomology comes from Kunneth. For a complex [A -> B] (A in
 * degree -1, B in degree 0) the Ext groups against a probe sum P are read off
 * the long exact sequence of the triangle A -> B -> cone:
 *
 *   ... -> Ext^i(P,A) --f_i--> Ext^i(P,B) -> Ext^i(P,cone) -> Ext^{i+1}(P,A) --f_{i+1}--> ...
 *
 * so dim Ext^i(P,cone) = coker(f_i) + ker(f_{i+1}). The ranks of the f_i are
 * never guessed: each ranges over [0, min(dim source, dim target)] unless an
 * asserted vanishing pins it. The output is exact exactly where the
 * sequence forces it.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadwall/lattice.hpp"

namespace quadwall {

/// (h0, h1) of O(a) on P1.
inline std::pair<std::int64_t, std::int64_t> cohomology_p1(std::int64_t a) {
  return {std::max<std::int64_t>(0, a + 1), std::max<std::int64_t>(0, -a - 1)};
}

using CohomologyDims = std::array<std::int64_t, 3>;

/// h^k(O(a,b)) = sum_{i+j=k} h^i(O(a)) h^j(O(b)).
inline CohomologyDims cohomology(Divisor l) {
  const auto [a0, a1] = cohomology_p1(l.a);
  const auto [b0, b1] = cohomology_p1(l.b);
  return {a0 * b0, a0 * b1 + a1 * b0, a1 * b1};
}

/// Ext^i(O(L1), O(L2)) = H^i(O(L2 - L1)).
inline CohomologyDims ext_line_bundles(Divisor from, Divisor to) { return cohomology(to - from); }

struct LineBundleSum {
  std::vector<Divisor> summands;

  bool empty() const { return summands.empty(); }
  ChernCharacter chern() const {
    ChernCharacter out;
    for (Divisor l : summands) out = out + line_bundle(l);
    return out;
  }
  friend bool operator==(const LineBundleSum&, const LineBundleSum&) = default;
};

inline CohomologyDims ext_sums(const LineBundleSum& from, const LineBundleSum& to) {
  CohomologyDims out{0, 0, 0};
  for (Divisor x : from.summands)
    for (Divisor y : to.summands) {
      const CohomologyDims e = ext_line_bundles(x, y);
      for (std::size_t k = 0; k < 3; ++k) out[k] += e[k];
    }
  return out;
}

/// Ext(probe, target) or Ext(target, probe).
enum class Side { ProbeToTarget, TargetToProbe };

inline const char* to_string(Side s) {
  return s == Side::ProbeToTarget ? "probe-to-target" : "target-to-probe";
}

/// A group forced to vanish by an argument outside linear algebra.
struct AssertedVanishing {
  int degree = 0;
  Side direction = Side::ProbeToTarget;
  std::string justification;

  friend bool operator==(const AssertedVanishing&, const AssertedVanishing&) = default;
};

/// [A -> B] with A in degree -1 and B in degree 0, generic map. A sheaf with
/// resolution 0 -> A -> B -> E -> 0 is the same complex; [0 -> B] is the sum B
/// and [A -> 0] is A[1].
struct TwoTermComplex {
  LineBundleSum deg_minus_1;
  LineBundleSum deg_0;
  std::vector<AssertedVanishing> assumptions;

  ChernCharacter chern() const { return deg_0.chern() - deg_minus_1.chern(); }
  bool is_sum() const { return deg_minus_1.empty(); }
  bool is_shifted_sum() const { return deg_0.empty() && !deg_minus_1.empty(); }

  static TwoTermComplex sum(LineBundleSum b) { return {{}, std::move(b), {}}; }
  static TwoTermComplex shifted(LineBundleSum a) { return {std::move(a), {}, {}}; }

  friend bool operator==(const TwoTermComplex&, const TwoTermComplex&) = default;
};

struct DimRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool exact() const { return lo == hi; }
  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
  bool contains(const DimRange& o) const { return lo <= o.lo && o.hi <= hi; }
  friend bool operator==(const DimRange&, const DimRange&) = default;
};

inline std::string to_string(const DimRange& r) {
  if (r.exact()) return std::to_string(r.lo);
  return "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]";
}

/// Per-degree dimensions; degrees outside the stored range are exactly zero.
struct ExtDims {
  int lowest_degree = 0;
  std::vector<DimRange> dims;
  std::int64_t euler = 0;

  DimRange degree(int i) const {
    const int k = i - lowest_degree;
    if (k < 0 || k >= static_cast<int>(dims.size())) return {0, 0};
    return dims[static_cast<std::size_t>(k)];
  }
  int highest_degree() const { return lowest_degree + static_cast<int>(dims.size()) - 1; }

  /// The result re-indexed so that shifted(k).degree(i) == degree(i + k).
  ExtDims shifted(int k) const {
    return {lowest_degree - k, dims, (k % 2 == 0) ? euler : -euler};
  }

  friend bool operator==(const ExtDims&, const ExtDims&) = default;
};

/// A Hom/Ext group named by its degree and its two line bundles.
struct HomDescriptor {
  int degree = 0;
  Divisor source;
  Divisor target;
  std::int64_t dim = 0;

  friend bool operator==(const HomDescriptor&, const HomDescriptor&) = default;
};

/// Ext^i(A, B) = Ext^{2-i}(B, A (x) K)^dual with K = O(-2,-2).
inline HomDescriptor serre_dual(int i, Divisor a, Divisor b) {
  if (i < 0 || i > 2) throw std::invalid_argument("Ext degree must be 0, 1 or 2");
  const Divisor twisted = a + kCanonical;
  const int j = 2 - i;
  return {j, b, twisted, ext_line_bundles(b, twisted)[static_cast<std::size_t>(j)]};
}

namespace detail {

/// One map m_k : src_k -> dst_k per cohomological degree k = 0, 1, 2, with
/// its rank constrained to [rank_lo, rank_hi].
struct LesMaps {
  std::array<std::int64_t, 3> src{};
  std::array<std::int64_t, 3> dst{};
  std::array<std::int64_t, 3> rank_lo{};
  std::array<std::int64_t, 3> rank_hi{};

  void pin(int k, std::int64_t value, const std::string& why) {
    if (k < 0 || k > 2) {
      if (value != 0) throw std::invalid_argument("asserted vanishing is inconsistent: " + why);
      return;
    }
    const auto i = static_cast<std::size_t>(k);
    if (value < rank_lo[i] || value > rank_hi[i])
      throw std::invalid_argument("asserted vanishing is inconsistent with the long exact sequence: " + why);
    rank_lo[i] = rank_hi[i] = value;
  }
  std::int64_t src_at(int k) const { return (k < 0 || k > 2) ? 0 : src[static_cast<std::size_t>(k)]; }
  std::int64_t dst_at(int k) const { return (k < 0 || k > 2) ? 0 : dst[static_cast<std::size_t>(k)]; }
  std::int64_t lo_at(int k) const { return (k < 0 || k > 2) ? 0 : rank_lo[static_cast<std::size_t>(k)]; }
  std::int64_t hi_at(int k) const { return (k < 0 || k > 2) ? 0 : rank_hi[static_cast<std::size_t>(k)]; }
};

}  // namespace detail

/**
 * Ext^*(probe, target) (ProbeToTarget) or Ext^*(target, probe)
 * (TargetToProbe) for a generic two-term complex. Only the target's
 * assumptions whose direction matches `side` are used.
 */
inline ExtDims hyperext(const LineBundleSum& probe, const TwoTermComplex& target, Side side) {
  const LineBundleSum& a = target.deg_minus_1;
  const LineBundleSum& b = target.deg_0;

  detail::LesMaps maps;
  // Ext^i(cone) = coker(m_j) + ker(m_{j+1}) with j = i - offset.
  int offset = 0;
  if (side == Side::ProbeToTarget) {
    maps.src = ext_sums(probe, a);
    maps.dst = ext_sums(probe, b);
    offset = 0;
  } else {
    maps.src = ext_sums(b, probe);
    maps.dst = ext_sums(a, probe);
    offset = 1;
  }
  for (std::size_t k = 0; k < 3; ++k) maps.rank_hi[k] = std::min(maps.src[k], maps.dst[k]);

  for (const AssertedVanishing& v : target.assumptions) {
    if (v.direction != side) continue;
    const int j = v.degree - offset;
    maps.pin(j, maps.dst_at(j), v.justification);
    maps.pin(j + 1, maps.src_at(j + 1), v.justification);
  }

  ExtDims out;
  out.lowest_degree = side == Side::ProbeToTarget ? -1 : 0;
  std::int64_t alternating = 0;
  for (int i = out.lowest_degree; i < out.lowest_degree + 4; ++i) {
    const int j = i - offset;
    const std::int64_t lo = (maps.dst_at(j) - maps.hi_at(j)) + (maps.src_at(j + 1) - maps.hi_at(j + 1));
    const std::int64_t hi = (maps.dst_at(j) - maps.lo_at(j)) + (maps.src_at(j + 1) - maps.lo_at(j + 1));
    out.dims.push_back({lo, hi});
    // Ranks cancel in the alternating sum, so evaluate at rank 0.
    alternating += ((i % 2 == 0) ? 1 : -1) * (maps.dst_at(j) + maps.src_at(j + 1));
  }

  const ChernCharacter p = probe.chern();
  const ChernCharacter t = target.chern();
  out.euler = side == Side::ProbeToTarget ? euler_pairing(p, t) : euler_pairing(t, p);
  if (alternating != out.euler)
    throw std::logic_error("Ext alternating sum " + std::to_string(alternating) +
                           " disagrees with the Euler pairing " + std::to_string(out.euler));
  return out;
}

/// Hom^*(probe, E) for a sheaf E given by its resolution [A -> B].
inline ExtDims hom_sheaf_with_resolution(const LineBundleSum& probe, const TwoTermComplex& e) {
  return hyperext(probe, e, Side::ProbeToTarget);
}

/**
 * Ext^*(x, y) where at least one side is a sum of line bundles or a shifted
 * sum A[1]; uses Ext^i(A[1], Y) = Ext^{i-1}(A, Y) and
 * Ext^i(X, A[1]) = Ext^{i+1}(X, A).
 */
inline ExtDims ext_objects(const TwoTermComplex& x, const TwoTermComplex& y) {
  if (x.is_sum()) return hyperext(x.deg_0, y, Side::ProbeToTarget);
  if (x.is_shifted_sum()) return hyperext(x.deg_minus_1, y, Side::ProbeToTarget).shifted(-1);
  if (y.is_sum()) return hyperext(y.deg_0, x, Side::TargetToProbe);
  if (y.is_shifted_sum()) return hyperext(y.deg_minus_1, x, Side::TargetToProbe).shifted(1);
  throw std::invalid_argument("Ext between two genuine two-term complexes is not supported");
}

}  // namespace quadwall
