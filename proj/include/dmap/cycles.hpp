//
// cycles.hpp
//
// Prime cycles of the doubling map as binary necklaces. A prime n-cycle is
// the orbit of w^∞ for an aperiodic word w of length n; its points are
// k / (2^n - 1) for the n rotations k of w.
//
// Enumeration walks Lyndon words (least rotations) directly with the
// Fredricksen-Kessler-Maiorana algorithm, in lexicographic order.
//

#pragma once

#include "dmap/exact.hpp"
#include "dmap/word.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace dmap {

inline constexpr int kDefaultMaxCycleLength = 28;
// Hard limit of the 64-bit necklace enumerator.
inline constexpr int kEnumerationLimit = 62;

// The open interval (a, b), 0 <= a < b <= 1.
class Hole {
 public:
  Hole(Rational a, Rational b);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  bool contains(const Rational& x) const { return a_ < x && x < b_; }
  // Image under x -> 1 - x.
  Hole mirrored() const { return Hole(Rational(1) - b_, Rational(1) - a_); }

 private:
  Rational a_;
  Rational b_;
};

class Cycle {
 public:
  // Any rotation of a primitive word; throws std::invalid_argument otherwise.
  static Cycle from_word(const Word& w);

  std::size_t length() const noexcept { return rep_.size(); }
  // Lexicographically least rotation.
  const Word& representative() const noexcept { return rep_; }
  // The n points, ascending.
  std::vector<Rational> points() const;
  Rational min_point() const;
  Rational max_point() const;
  // Image of the cycle under x -> 1 - x.
  Cycle complemented() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle& x, const Cycle& y) {
    if (x.length() != y.length())
      return x.length() <=> y.length();
    return x.rep_ <=> y.rep_;
  }

 private:
  explicit Cycle(Word rep) : rep_(std::move(rep)) {}
  Word rep_;
};

// (1/n) Σ_{d|n} μ(d) 2^{n/d}
std::uint64_t prime_cycle_count(int n);

// All prime n-cycles, sorted by representative. Throws std::out_of_range
// when n exceeds `cap` (or the 62-bit enumerator limit).
std::vector<Cycle> enumerate_cycles(int n, int cap = kDefaultMaxCycleLength);

bool avoids(const Cycle& c, const Hole& h);

// First n-cycle (in representative order) avoiding h.
std::optional<Cycle> find_avoiding_cycle(const Hole& h, int n, int cap = kDefaultMaxCycleLength);
std::uint64_t count_avoiding_cycles(const Hole& h, int n, int cap = kDefaultMaxCycleLength);

// { n in [3, nmax] : every prime n-cycle meets h }, ascending.
std::vector<int> bad_set(const Hole& h, int nmax, int cap = kDefaultMaxCycleLength);

// Prime cycles of length 1..nmax avoiding h, ordered by length then
// representative.
std::vector<Cycle> survivor_cycles(const Hole& h, int nmax, int cap = kDefaultMaxCycleLength);

// The n-cycle through (2^{n-1} - 1)/(2^n - 1), lying in [that point, 1].
Cycle high_cycle(int n);

// Some rotation of the cycle word is a concatenation of the blocks s and t.
bool factorizes_over(const Cycle& c, const Word& s, const Word& t);

// log2(n · A(n)) / n with A(n) the number of prime n-cycles avoiding h;
// empty when A(n) = 0.
std::optional<double> growth_exponent(const Hole& h, int n, int cap = kDefaultMaxCycleLength);

}  // namespace dmap
