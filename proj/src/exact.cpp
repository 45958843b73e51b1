#include "dmap/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace dmap {

namespace {

// Periods longer than this are refused by expansion_of.
constexpr std::size_t kMaxPeriod = std::size_t{1} << 26;

BigInt word_value(const Word& w) {
  if (w.empty())
    return 0;
  return BigInt(w.str(), 2);
}

Word to_word(const BigInt& value, std::size_t width) {
  std::string bits = value.get_str(2);
  if (value == 0)
    bits.clear();
  if (bits.size() > width)
    throw std::logic_error("integer does not fit the requested width");
  return Word(std::string(width - bits.size(), '0') + bits);
}

// Multiplicative order of 2 modulo an odd m > 1.
std::size_t order_of_two(const BigInt& m) {
  if (m.fits_ulong_p() && m.get_ui() < (std::uint64_t{1} << 62)) {
    const std::uint64_t mod = m.get_ui();
    std::uint64_t r = 2 % mod;
    std::size_t ord = 1;
    while (r != 1) {
      r = (r << 1) % mod;
      if (++ord > kMaxPeriod)
        throw std::length_error("binary period too long");
    }
    return ord;
  }
  BigInt r = 2;
  std::size_t ord = 1;
  while (r != 1) {
    r = (r * 2) % m;
    if (++ord > kMaxPeriod)
      throw std::length_error("binary period too long");
  }
  return ord;
}

void require_unit_interval(const Rational& x) {
  if (x < Rational(0) || x > Rational(1))
    throw std::domain_error("point " + x.str() + " is outside [0,1]");
}

}  // namespace

BigInt pow2(std::size_t k) {
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), k);
  return r;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0)
    throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.q_ == 0)
    throw std::domain_error("division by zero");
  return Rational::from_mpq(x.q_ / y.q_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::string s(part);
    const std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == digits_from ||
        !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(digits_from), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    if (s[0] == '+')
      s.erase(0, 1);
    return BigInt(s, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(text), 1);
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den <= 0)
    throw std::invalid_argument("denominator must be positive: '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::str() const {
  if (q_.get_den() == 1)
    return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

EventuallyPeriodicWord::EventuallyPeriodicWord(Word preperiod, Word period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty())
    throw std::invalid_argument("period must be nonempty");
  per_ = per_.substr(0, per_.primitive_period());
  // Absorb trailing preperiod symbols into the period: x·(u y)^∞ with x == y
  // equals (y u)^∞ after the shortened preperiod.
  while (!pre_.empty() && pre_.back() == per_.back()) {
    per_ = per_.rotated(per_.size() - 1);
    pre_.pop_back();
  }
}

EventuallyPeriodicWord EventuallyPeriodicWord::parse(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.size() < open + 3 || text.back() != ')')
    throw std::invalid_argument("word literal must look like PRE(PER): '" + std::string(text) + "'");
  return EventuallyPeriodicWord(Word(text.substr(0, open)),
                                Word(text.substr(open + 1, text.size() - open - 2)));
}

Word EventuallyPeriodicWord::prefix(std::size_t length) const {
  Word w;
  for (std::size_t i = 0; i < length; ++i)
    w.push_back(symbol(i));
  return w;
}

EventuallyPeriodicWord EventuallyPeriodicWord::shifted(std::size_t k) const {
  if (k <= pre_.size())
    return EventuallyPeriodicWord(pre_.substr(k), per_);
  return EventuallyPeriodicWord(per_.rotated((k - pre_.size()) % per_.size()));
}

std::string EventuallyPeriodicWord::str() const {
  return pre_.str() + "(" + per_.str() + ")";
}

Rational value_of(const EventuallyPeriodicWord& w) {
  const BigInt cycle = pow2(w.period().size()) - 1;
  const BigInt num = word_value(w.preperiod()) * cycle + word_value(w.period());
  return Rational(num, pow2(w.preperiod().size()) * cycle);
}

EventuallyPeriodicWord expansion_of(const Rational& x) {
  require_unit_interval(x);
  if (x == Rational(1))
    return EventuallyPeriodicWord(Word("1"));

  const BigInt p = x.numerator();
  BigInt q = x.denominator();
  const std::size_t e = mpz_scan1(q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), e);  // odd part

  // 2^e x = p / q = integer part + (p mod q) / q, the fraction purely periodic.
  const BigInt whole = p / q;
  const BigInt frac = p % q;
  if (q == 1)
    return EventuallyPeriodicWord(to_word(whole, e), Word("0"));
  const std::size_t len = order_of_two(q);
  const BigInt block = frac * ((pow2(len) - 1) / q);
  return EventuallyPeriodicWord(to_word(whole, e), to_word(block, len));
}

Rational doubling(const Rational& x) {
  require_unit_interval(x);
  if (x <= Rational(1, 2))
    return x * Rational(2);
  return x * Rational(2) - Rational(1);
}

std::vector<Rational> orbit(const Rational& x, std::size_t n) {
  std::vector<Rational> out;
  out.reserve(n + 1);
  out.push_back(x);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(doubling(out.back()));
  return out;
}

std::strong_ordering lex_compare(const EventuallyPeriodicWord& u, const EventuallyPeriodicWord& v) {
  // Two eventually periodic words agreeing on this many symbols agree forever
  // (Fine and Wilf applied to the periodic tails).
  const std::size_t horizon = std::max(u.preperiod().size(), v.preperiod().size()) +
                              u.period().size() + v.period().size();
  for (std::size_t i = 0; i < horizon; ++i) {
    const int a = u.symbol(i);
    const int b = v.symbol(i);
    if (a != b)
      return a <=> b;
  }
  return std::strong_ordering::equal;
}

}  // namespace dmap
