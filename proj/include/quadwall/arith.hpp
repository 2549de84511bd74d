#pragma once

/**
 * @file arith.hpp
 * @brief Exact scalars: GMP-backed rationals and quadratic surds p + q*sqrt(D).
 *
 * Every quantity in the wall computations (alpha^2, beta, slopes, squared
 * radii, discriminants) is a rational. Wall endpoints C +- R need one square
 * root, so comparisons against them live in a single quadratic extension.
 * Nothing in here touches floating point.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quadwall {

using Integer = mpz_class;
/// Always canonical (lowest terms, positive denominator) as long as values
/// are built through make_rational/parse_rational or GMP arithmetic.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

inline Rational to_rational(std::int64_t n) { return Rational(static_cast<long>(n)); }

inline int sign(const Rational& x) { return sgn(x); }
inline int sign(const Integer& x) { return sgn(x); }

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline Integer floor(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

inline Integer ceil(const Rational& x) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

/// Narrow an Integer to int64, throwing if it does not fit.
inline std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(z.get_si());
}

/// Exact square root when x is the square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(x.get_den_mpz_t()) == 0)
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  Rational r{n, d};
  r.canonicalize();
  return r;
}

/// "p/q", or "p" for integers.
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s{text};
  auto valid = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n{num}, d{den};
  if (d == 0) throw std::domain_error("rational with zero denominator");
  Rational q{n, d};
  q.canonicalize();
  return q;
}

/**
 * p + q*sqrt(D) with p, q, D rational and D >= 0.
 *
 * Stored normalized: if q == 0 or D is a rational square the value collapses
 * to a plain rational (q = 0, D = 0). Two irrational surds can only be
 * combined when their radicands agree exactly.
 */
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational p)  // NOLINT(google-explicit-constructor)
      : p_(std::move(p)) {}
  QuadraticSurd(Rational p, Rational q, Rational radicand)
      : p_(std::move(p)), q_(std::move(q)), d_(std::move(radicand)) {
    if (sgn(d_) < 0) throw std::domain_error("negative radicand " + quadwall::to_string(d_));
    normalize();
  }

  const Rational& rational_part() const { return p_; }
  const Rational& surd_coefficient() const { return q_; }
  const Rational& radicand() const { return d_; }
  bool is_rational() const { return sgn(q_) == 0; }

  /// Exact sign of the represented real number.
  int sign() const {
    const int sp = sgn(p_);
    const int sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // Opposite signs: the larger magnitude wins.
    const int cmp = ::cmp(Rational(p_ * p_), Rational(q_ * q_ * d_));
    if (cmp > 0) return sp;
    if (cmp < 0) return sq;
    return 0;
  }

  QuadraticSurd operator-() const { return QuadraticSurd(-p_, -q_, d_); }

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    const Rational& d = common_radicand(x, y);
    return QuadraticSurd(x.p_ + y.p_, x.q_ + y.q_, d);
  }
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x + (-y);
  }
  friend QuadraticSurd operator*(const Rational& k, const QuadraticSurd& x) {
    return QuadraticSurd(k * x.p_, k * x.q_, x.d_);
  }
  friend QuadraticSurd operator*(const QuadraticSurd& x, const Rational& k) { return k * x; }

  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return compare(x, y) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) {
    return compare(x, y);
  }

  /// Ordering via the sign of the difference; also exact across distinct radicands.
  friend std::strong_ordering compare(const QuadraticSurd& x, const QuadraticSurd& y) {
    const bool mixed = !x.is_rational() && !y.is_rational() && x.d_ != y.d_;
    const int s = mixed ? mixed_sign(x.p_ - y.p_, x.q_, x.d_, -y.q_, y.d_) : (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Largest integer n with n <= value.
  Integer floor() const {
    if (is_rational()) return quadwall::floor(p_);
    // isqrt(floor(t)) == floor(sqrt(t)) for rational t >= 0.
    Integer s;
    Integer t = quadwall::floor(Rational(q_ * q_ * d_));
    mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    // |q*sqrt(D) - sgn(q)*s| < 1, so the approximation is within one unit.
    Rational approx = p_ + (sgn(q_) > 0 ? Rational(s) : Rational(-s));
    Integer n = quadwall::floor(approx) - 2;
    while ((*this - QuadraticSurd(Rational(n + 1))).sign() >= 0) ++n;
    return n;
  }

  /// Smallest integer n with n >= value.
  Integer ceil() const { return -(-*this).floor(); }

  std::string to_string() const {
    if (is_rational()) return quadwall::to_string(p_);
    std::string out = quadwall::to_string(p_);
    out += sgn(q_) < 0 ? " - " : " + ";
    Rational mag = abs(q_);
    if (mag != 1) out += quadwall::to_string(mag) + "*";
    out += "sqrt(" + quadwall::to_string(d_) + ")";
    return out;
  }

 private:
  // sign(a + b sqrt(d1) + c sqrt(d2)), b, c nonzero, d1, d2 > 0.
  static int mixed_sign(const Rational& a, const Rational& b, const Rational& d1, const Rational& c,
                        const Rational& d2) {
    const int t = sign_of_sum(b, d1, c, d2);
    const int sa = sgn(a);
    if (sa == 0) return t;
    if (t == 0 || t == sa) return sa;
    // Opposite signs: a^2 - (b^2 d1 + c^2 d2) - 2bc sqrt(d1 d2) decides.
    const QuadraticSurd gap(Rational(a * a - b * b * d1 - c * c * d2), Rational(-2 * b * c), Rational(d1 * d2));
    const int g = gap.sign();
    return g > 0 ? sa : (g < 0 ? t : 0);
  }
  // sign(b sqrt(d1) + c sqrt(d2)).
  static int sign_of_sum(const Rational& b, const Rational& d1, const Rational& c, const Rational& d2) {
    const int sb = sgn(b), sc = sgn(c);
    if (sb == sc) return sb;
    const int m = ::cmp(Rational(b * b * d1), Rational(c * c * d2));
    return m > 0 ? sb : (m < 0 ? sc : 0);
  }

  static const Rational& common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.is_rational()) return y.d_;
    if (y.is_rational()) return x.d_;
    if (x.d_ != y.d_)
      throw std::invalid_argument("surds with distinct radicands " + quadwall::to_string(x.d_) +
                                  " and " + quadwall::to_string(y.d_));
    return x.d_;
  }

  void normalize() {
    if (sgn(q_) == 0 || sgn(d_) == 0) {
      q_ = 0;
      d_ = 0;
      return;
    }
    if (auto root = exact_sqrt(d_)) {
      p_ += q_ * *root;
      q_ = 0;
      d_ = 0;
    }
  }

  Rational p_{0};
  Rational q_{0};
  Rational d_{0};
};

inline int surd_sign(const QuadraticSurd& x) { return x.sign(); }

}  // namespace quadwall
