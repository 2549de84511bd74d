#pragma once

#include <cstdint>
#include <random>

#include "quadwall/quadwall.hpp"

namespace qw_test {

using namespace quadwall;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }
  Rational rational(std::int64_t num_abs, std::int64_t den_max) {
    return make_rational(integer(-num_abs, num_abs), integer(1, den_max));
  }
  Rational positive_rational(std::int64_t num_max, std::int64_t den_max) {
    return make_rational(integer(1, num_max), integer(1, den_max));
  }
  Divisor divisor(std::int64_t abs_max) { return {integer(-abs_max, abs_max), integer(-abs_max, abs_max)}; }
  Polarization polarization(std::int64_t max = 3) { return Polarization({integer(1, max), integer(1, max)}); }

  // Integral classes: ch2 = ab-like value plus noise, always an integer.
  ChernCharacter chern(std::int64_t rank_abs, std::int64_t abs_max) {
    return {integer(-rank_abs, rank_abs), divisor(abs_max), to_rational(integer(-abs_max * abs_max, abs_max * abs_max))};
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qw_test
