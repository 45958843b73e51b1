//
// exact.hpp
//
// Exact rationals, eventually periodic binary words, and the doubling map
//
//   T x = 2x       for x in [0, 1/2]
//   T x = 2x - 1   for x in (1/2, 1]
//
// All arithmetic is exact. Big integers are GMP (mpz_class); values of
// eventually periodic words have denominators of the form 2^k (2^l - 1) and
// outgrow machine words quickly.
//

#pragma once

#include "dmap/word.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dmap {

using BigInt = mpz_class;

BigInt pow2(std::size_t k);

// A fraction in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT: integers convert implicitly
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  // "p/q" or an integer, optionally signed.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  std::string str() const;
  double to_double() const { return q_.get_d(); }

  friend Rational operator+(const Rational& x, const Rational& y) { return from_mpq(x.q_ + y.q_); }
  friend Rational operator-(const Rational& x, const Rational& y) { return from_mpq(x.q_ - y.q_); }
  friend Rational operator*(const Rational& x, const Rational& y) { return from_mpq(x.q_ * y.q_); }
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const { return from_mpq(-q_); }

  friend bool operator==(const Rational& x, const Rational& y) { return cmp(x.q_, y.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return cmp(x.q_, y.q_) <=> 0;
  }

  const mpq_class& raw() const noexcept { return q_; }

 private:
  static Rational from_mpq(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
  }
  mpq_class q_{0};
};

// A right-infinite binary word  preperiod · period^∞.
//
// Stored canonically: the period is primitive and the preperiod is as short
// as possible. Words ending in 1^∞ are legal words; expansion_of never
// produces one except for the point 1.
class EventuallyPeriodicWord {
 public:
  EventuallyPeriodicWord(Word preperiod, Word period);
  explicit EventuallyPeriodicWord(Word period) : EventuallyPeriodicWord(Word{}, std::move(period)) {}

  // Text form PRE(PER), e.g. "01(10)" or "(011)".
  static EventuallyPeriodicWord parse(std::string_view text);

  const Word& preperiod() const noexcept { return pre_; }
  const Word& period() const noexcept { return per_; }
  bool purely_periodic() const noexcept { return pre_.empty(); }

  int symbol(std::size_t i) const noexcept {
    return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
  }
  Word prefix(std::size_t length) const;
  EventuallyPeriodicWord shifted(std::size_t k = 1) const;

  std::string str() const;

  friend bool operator==(const EventuallyPeriodicWord&, const EventuallyPeriodicWord&) = default;

 private:
  Word pre_;
  Word per_;
};

// π(w) = Σ w_j 2^{-j}.
Rational value_of(const EventuallyPeriodicWord& w);

// Canonical binary expansion of x in [0,1]. The point 1 is (1)^∞; every other
// x gets the expansion that does not end in 1^∞ (so 1/2 is 1(0)^∞).
EventuallyPeriodicWord expansion_of(const Rational& x);

Rational doubling(const Rational& x);

// [x, Tx, ..., T^n x]
std::vector<Rational> orbit(const Rational& x, std::size_t n);

// Lexicographic order of the infinite words. This orders words, not values:
// w01^∞ precedes w10^∞ although both have the same value.
std::strong_ordering lex_compare(const EventuallyPeriodicWord& u, const EventuallyPeriodicWord& v);

}  // namespace dmap
