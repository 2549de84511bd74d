#pragma once

// Intersection theory and Chern character bookkeeping on P1 x P1.
//
// Divisors are written (a,b) = a*D1 + b*D2 in terms of the two rulings, with
// D1^2 = D2^2 = 0 and D1.D2 = 1. The canonical class is (-2,-2).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadwall/arith.hpp"

namespace quadwall {

struct Divisor {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const Divisor&, const Divisor&) = default;
  friend auto operator<=>(const Divisor&, const Divisor&) = default;

  friend Divisor operator+(Divisor x, Divisor y) { return {x.a + y.a, x.b + y.b}; }
  friend Divisor operator-(Divisor x, Divisor y) { return {x.a - y.a, x.b - y.b}; }
  friend Divisor operator-(Divisor x) { return {-x.a, -x.b}; }
  friend Divisor operator*(std::int64_t k, Divisor x) { return {k * x.a, k * x.b}; }
};

inline constexpr Divisor kCanonical{-2, -2};

/// (a,b).(c,d) = ad + bc.
inline std::int64_t intersect(Divisor x, Divisor y) { return x.a * y.b + x.b * y.a; }

inline bool is_ample(Divisor h) { return h.a > 0 && h.b > 0; }

inline std::string to_string(Divisor x) {
  return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
}

/// An ample class H fixing the (alpha, beta) slice.
class Polarization {
 public:
  explicit Polarization(Divisor h) : h_(h) {
    if (!is_ample(h)) throw std::invalid_argument("polarization " + to_string(h) + " is not ample");
  }
  Divisor divisor() const { return h_; }
  std::int64_t squared() const { return intersect(h_, h_); }
  std::int64_t degree(Divisor c1) const { return intersect(h_, c1); }

  friend bool operator==(const Polarization&, const Polarization&) = default;

 private:
  Divisor h_;
};

/// ch = (rank, c1, ch2). ch2 is integral for honest objects; the type allows
/// rationals so that intermediate values can be carried.
struct ChernCharacter {
  std::int64_t rank = 0;
  Divisor c1{};
  Rational ch2{0};

  friend bool operator==(const ChernCharacter& x, const ChernCharacter& y) {
    return x.rank == y.rank && x.c1 == y.c1 && x.ch2 == y.ch2;
  }
  friend ChernCharacter operator+(const ChernCharacter& x, const ChernCharacter& y) {
    return {x.rank + y.rank, x.c1 + y.c1, Rational(x.ch2 + y.ch2)};
  }
  friend ChernCharacter operator-(const ChernCharacter& x) { return {-x.rank, -x.c1, Rational(-x.ch2)}; }
  friend ChernCharacter operator-(const ChernCharacter& x, const ChernCharacter& y) { return x + (-y); }
  friend ChernCharacter operator*(std::int64_t k, const ChernCharacter& x) {
    return {k * x.rank, k * x.c1, Rational(to_rational(k) * x.ch2)};
  }
};

inline std::string to_string(const ChernCharacter& v) {
  return std::to_string(v.rank) + "," + to_string(v.c1) + "," + to_string(v.ch2);
}

/// ch(O(a,b)) = (1, (a,b), ab).
inline ChernCharacter line_bundle(Divisor l) { return {1, l, to_rational(l.a * l.b)}; }

/// (r, d, c) = (rank, H.ch1, ch2). Integral by construction.
struct Invariants {
  std::int64_t r = 0;
  std::int64_t d = 0;
  std::int64_t c = 0;

  friend bool operator==(const Invariants&, const Invariants&) = default;
  friend auto operator<=>(const Invariants&, const Invariants&) = default;
  friend Invariants operator-(const Invariants& x, const Invariants& y) {
    return {x.r - y.r, x.d - y.d, x.c - y.c};
  }
};

inline std::string to_string(const Invariants& i) {
  return std::to_string(i.r) + "," + std::to_string(i.d) + "," + std::to_string(i.c);
}

/// (H^2 ch0^b, H.ch1^b, ch2^b).
struct TwistedChern {
  Rational h2_ch0{0};
  Rational h_ch1{0};
  Rational ch2{0};

  friend bool operator==(const TwistedChern& x, const TwistedChern& y) {
    return x.h2_ch0 == y.h2_ch0 && x.h_ch1 == y.h_ch1 && x.ch2 == y.ch2;
  }
};

/// A Chern character with rational entries throughout; the result of
/// twisting by a rational multiple of H.
struct RationalChern {
  Rational ch0{0};
  Rational c1a{0};
  Rational c1b{0};
  Rational ch2{0};

  static RationalChern from(const ChernCharacter& v) {
    return {to_rational(v.rank), to_rational(v.c1.a), to_rational(v.c1.b), v.ch2};
  }
  friend bool operator==(const RationalChern& x, const RationalChern& y) {
    return x.ch0 == y.ch0 && x.c1a == y.c1a && x.c1b == y.c1b && x.ch2 == y.ch2;
  }
};

inline std::int64_t integral_ch2(const ChernCharacter& v) {
  if (!is_integer(v.ch2))
    throw std::invalid_argument("ch2 = " + to_string(v.ch2) + " is not an integer");
  return to_int64(v.ch2.get_num());
}

inline Invariants invariants(const ChernCharacter& v, const Polarization& h) {
  return {v.rank, h.degree(v.c1), integral_ch2(v)};
}

/// ch . exp(-beta H), all components kept.
inline RationalChern twist_full(const RationalChern& v, const Rational& beta, const Polarization& h) {
  const Divisor hd = h.divisor();
  const Rational ba = beta * to_rational(hd.a);
  const Rational bb = beta * to_rational(hd.b);
  // B.c1 and B^2 for B = beta*H
  const Rational b_dot_c1 = ba * v.c1b + bb * v.c1a;
  const Rational b_sq = beta * beta * to_rational(h.squared());
  return {v.ch0, Rational(v.c1a - ba * v.ch0), Rational(v.c1b - bb * v.ch0),
          Rational(v.ch2 - b_dot_c1 + b_sq * v.ch0 / 2)};
}

inline TwistedChern project(const RationalChern& v, const Polarization& h) {
  const Divisor hd = h.divisor();
  return {Rational(to_rational(h.squared()) * v.ch0),
          Rational(to_rational(hd.a) * v.c1b + to_rational(hd.b) * v.c1a), v.ch2};
}

/// (H^2 r, d - H^2 beta r, ch2 - beta d + H^2 (beta^2/2) r).
inline TwistedChern twist(const ChernCharacter& v, const Rational& beta, const Polarization& h) {
  const Rational h2 = to_rational(h.squared());
  const Rational r = to_rational(v.rank);
  const Rational d = to_rational(h.degree(v.c1));
  return {Rational(h2 * r), Rational(d - h2 * beta * r),
          Rational(v.ch2 - beta * d + h2 * beta * beta * r / 2)};
}

/// Delta = (H ch1)^2 - 2 H^2 ch0 ch2.
inline Rational discriminant(const Invariants& i, const Polarization& h) {
  return to_rational(i.d * i.d) - 2 * to_rational(h.squared()) * to_rational(i.r) * to_rational(i.c);
}

/// Same form on a twisted triple; its h2_ch0 already carries the H^2 factor.
inline Rational discriminant(const TwistedChern& t) { return t.h_ch1 * t.h_ch1 - 2 * t.h2_ch0 * t.ch2; }

/// Riemann-Roch on P1 x P1: chi = r + a + b + ch2.
inline std::int64_t euler_char(const ChernCharacter& v) {
  return v.rank + v.c1.a + v.c1.b + integral_ch2(v);
}

/// chi(E, F) = chi(E^dual (x) F).
inline std::int64_t euler_pairing(const ChernCharacter& e, const ChernCharacter& f) {
  const std::int64_t ce = integral_ch2(e);
  const std::int64_t cf = integral_ch2(f);
  return e.rank * f.rank + (e.rank * (f.c1.a + f.c1.b) - f.rank * (e.c1.a + e.c1.b)) +
         e.rank * cf + f.rank * ce - intersect(e.c1, f.c1);
}

struct HilbertPolynomial {
  std::int64_t leading = 0;   // coefficient of m
  std::int64_t constant = 0;  // Euler characteristic

  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;
};

inline std::string to_string(const HilbertPolynomial& p) {
  std::string out = std::to_string(p.leading) + "m";
  if (p.constant > 0) out += "+" + std::to_string(p.constant);
  if (p.constant < 0) out += std::to_string(p.constant);
  return out;
}

/// Hilbert polynomial of a torsion class with respect to O(1,1).
inline HilbertPolynomial hilbert_polynomial(const ChernCharacter& v) {
  if (v.rank != 0) throw std::invalid_argument("Hilbert polynomial requested for a class of nonzero rank");
  return {v.c1.a + v.c1.b, euler_char(v)};
}

/// v (x) O(L).
inline ChernCharacter tensor_line_bundle(const ChernCharacter& v, Divisor l) {
  const Rational l_sq_half = make_rational(intersect(l, l), 2);
  return {v.rank, v.c1 + v.rank * l,
          Rational(v.ch2 + to_rational(intersect(v.c1, l)) + to_rational(v.rank) * l_sq_half)};
}

/// All (a,b) with H.(a,b) = d and ab = c: the line bundles carrying the
/// rank-one invariants (1, d, c). Sorted ascending.
inline std::vector<Divisor> line_bundle_lifts(const Invariants& i, const Polarization& h) {
  if (i.r != 1) throw std::invalid_argument("line bundle lifts need rank 1");
  const Divisor hd = h.divisor();
  std::vector<Divisor> out;
  auto consider = [&](std::int64_t a, std::int64_t b) {
    if (hd.b * a + hd.a * b == i.d && a * b == i.c) out.push_back({a, b});
  };
  if (i.c == 0) {
    // a = 0 axis: h_a * b = d; b = 0 axis: h_b * a = d.
    if (i.d % hd.a == 0) consider(0, i.d / hd.a);
    if (i.d % hd.b == 0) consider(i.d / hd.b, 0);
  } else {
    const std::int64_t m = std::llabs(i.c);
    for (std::int64_t k = 1; k * k <= m; ++k) {
      if (m % k != 0) continue;
      for (std::int64_t a : {k, -k, m / k, -(m / k)}) consider(a, i.c / a);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace quadwall
