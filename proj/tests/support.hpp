// Shared helpers for the unit tests: deterministic generators and
// brute-force oracles that do not go through the library's fast paths.

#pragma once

#include "dmap/exact.hpp"
#include "dmap/word.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace dmap::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed'd0b1'e5ULL);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

// p/q in [0,1] with 1 <= q <= max_den.
inline Rational random_unit_rational(std::int64_t max_den) {
  const std::int64_t q = uniform(1, max_den);
  return Rational(uniform(0, q), q);
}

inline Word random_word(std::size_t min_len, std::size_t max_len) {
  const auto len = static_cast<std::size_t>(uniform(static_cast<std::int64_t>(min_len),
                                                    static_cast<std::int64_t>(max_len)));
  std::string bits;
  for (std::size_t i = 0; i < len; ++i)
    bits.push_back(uniform(0, 1) ? '1' : '0');
  return Word(bits);
}

// Truncated dyadic sum of the first `terms` symbols.
inline Rational partial_sum(const EventuallyPeriodicWord& w, std::size_t terms) {
  BigInt num = 0;
  for (std::size_t i = 0; i < terms; ++i)
    num = num * 2 + w.symbol(i);
  return Rational(num, pow2(terms));
}

// Every rotation, every pair of equal-length factors.
inline bool naive_cyclically_balanced(const std::string& w) {
  const std::size_t n = w.size();
  for (std::size_t rot = 0; rot < n; ++rot) {
    const std::string r = w.substr(rot) + w.substr(0, rot);
    for (std::size_t len = 1; len < n; ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        for (std::size_t j = 0; j + len <= n; ++j) {
          long ci = 0;
          long cj = 0;
          for (std::size_t k = 0; k < len; ++k) {
            ci += r[i + k] - '0';
            cj += r[j + k] - '0';
          }
          if (ci - cj > 1 || cj - ci > 1)
            return false;
        }
      }
    }
  }
  return true;
}

}  // namespace dmap::testing
