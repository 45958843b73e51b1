#include "dmap/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dmap {

namespace {

void check_length(int n, int cap) {
  if (n < 1)
    throw std::invalid_argument("cycle length must be positive");
  if (n > cap || n > kEnumerationLimit)
    throw std::out_of_range("cycle length " + std::to_string(n) + " exceeds the enumeration cap " +
                            std::to_string(std::min(cap, kEnumerationLimit)));
}

// Codes k with k/(2^n - 1) strictly inside the hole form the range [lo, hi].
struct Window {
  std::uint64_t lo = 1;
  std::uint64_t hi = 0;

  bool empty() const noexcept { return lo > hi; }
  bool contains(std::uint64_t k) const noexcept { return lo <= k && k <= hi; }
};

Window window_for(const Hole& h, int n) {
  const BigInt m = pow2(static_cast<std::size_t>(n)) - 1;
  BigInt lo;
  BigInt hi;
  const BigInt an = h.a().numerator() * m;
  const BigInt bn = h.b().numerator() * m;
  const BigInt ad = h.a().denominator();
  const BigInt bd = h.b().denominator();
  mpz_fdiv_q(lo.get_mpz_t(), an.get_mpz_t(), ad.get_mpz_t());
  lo += 1;
  mpz_cdiv_q(hi.get_mpz_t(), bn.get_mpz_t(), bd.get_mpz_t());
  hi -= 1;
  Window w;
  if (hi < lo || hi < 0 || lo > m)
    return w;
  w.lo = lo.get_ui();
  w.hi = hi.get_ui();
  return w;
}

inline std::uint64_t rotate_left(std::uint64_t code, int n, std::uint64_t mask) {
  return ((code << 1) | (code >> (n - 1))) & mask;
}

bool code_avoids(std::uint64_t code, int n, const Window& w) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (int i = 0; i < n; ++i) {
    if (w.contains(code))
      return false;
    code = rotate_left(code, n, mask);
  }
  return true;
}

// Binary Lyndon words of length n in lexicographic order (FKM). `visit`
// returns false to stop early; the function then returns false as well.
template <class Visit>
bool for_each_lyndon(int n, Visit&& visit) {
  std::vector<int> a(static_cast<std::size_t>(n) + 1, 0);
  int p = 1;
  while (true) {
    if (p == n) {
      std::uint64_t code = 0;
      for (int i = 1; i <= n; ++i)
        code = (code << 1) | static_cast<std::uint64_t>(a[static_cast<std::size_t>(i)]);
      if (!visit(code))
        return false;
    }
    int j = n;
    while (j > 0 && a[static_cast<std::size_t>(j)] == 1)
      --j;
    if (j == 0)
      return true;
    a[static_cast<std::size_t>(j)] = 1;
    for (int i = j + 1; i <= n; ++i)
      a[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i - j)];
    p = j;
  }
}

int mobius(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0)
        return 0;
      result = -result;
    }
  }
  if (n > 1)
    result = -result;
  return result;
}

Word least_rotation(const Word& w) {
  Word best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word r = w.rotated(k);
    if (r < best)
      best = std::move(r);
  }
  return best;
}

}  // namespace

Hole::Hole(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ < Rational(0) || b_ > Rational(1))
    throw std::domain_error("hole must lie in [0,1]");
  if (!(a_ < b_))
    throw std::domain_error("degenerate hole (" + a_.str() + ", " + b_.str() + ")");
}

Cycle Cycle::from_word(const Word& w) {
  if (!w.is_primitive())
    throw std::invalid_argument("'" + w.str() + "' is not a primitive word");
  return Cycle(least_rotation(w));
}

std::vector<Rational> Cycle::points() const {
  const std::size_t n = rep_.size();
  const BigInt m = pow2(n) - 1;
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    out.emplace_back(BigInt(rep_.rotated(k).str(), 2), m);
  std::sort(out.begin(), out.end());
  return out;
}

Rational Cycle::min_point() const {
  const BigInt m = pow2(rep_.size()) - 1;
  return Rational(BigInt(rep_.str(), 2), m);
}

Rational Cycle::max_point() const {
  Word best = rep_;
  for (std::size_t k = 1; k < rep_.size(); ++k)
    best = std::max(best, rep_.rotated(k));
  return Rational(BigInt(best.str(), 2), pow2(rep_.size()) - 1);
}

Cycle Cycle::complemented() const {
  Word flipped;
  for (std::size_t i = 0; i < rep_.size(); ++i)
    flipped.push_back(1 - rep_[i]);
  return from_word(flipped);
}

std::uint64_t prime_cycle_count(int n) {
  if (n < 1 || n > 62)
    throw std::out_of_range("prime_cycle_count supports 1 <= n <= 62");
  std::int64_t total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0)
      total += mobius(d) * (std::int64_t{1} << (n / d));
  }
  return static_cast<std::uint64_t>(total / n);
}

std::vector<Cycle> enumerate_cycles(int n, int cap) {
  check_length(n, cap);
  std::vector<Cycle> out;
  for_each_lyndon(n, [&](std::uint64_t code) {
    out.push_back(Cycle::from_word(Word::from_code(code, static_cast<std::size_t>(n))));
    return true;
  });
  return out;
}

bool avoids(const Cycle& c, const Hole& h) {
  const auto n = static_cast<int>(c.length());
  if (n <= kEnumerationLimit)
    return code_avoids(c.representative().to_code(), n, window_for(h, n));
  for (const Rational& x : c.points()) {
    if (h.contains(x))
      return false;
  }
  return true;
}

std::optional<Cycle> find_avoiding_cycle(const Hole& h, int n, int cap) {
  check_length(n, cap);
  const Window w = window_for(h, n);
  std::optional<Cycle> found;
  for_each_lyndon(n, [&](std::uint64_t code) {
    if (!code_avoids(code, n, w))
      return true;
    found = Cycle::from_word(Word::from_code(code, static_cast<std::size_t>(n)));
    return false;
  });
  return found;
}

std::uint64_t count_avoiding_cycles(const Hole& h, int n, int cap) {
  check_length(n, cap);
  const Window w = window_for(h, n);
  if (w.empty())
    return prime_cycle_count(n);
  std::uint64_t count = 0;
  for_each_lyndon(n, [&](std::uint64_t code) {
    count += code_avoids(code, n, w) ? 1 : 0;
    return true;
  });
  return count;
}

std::vector<int> bad_set(const Hole& h, int nmax, int cap) {
  if (nmax < 3)
    throw std::invalid_argument("bad_set needs nmax >= 3");
  check_length(nmax, cap);
  std::vector<int> bad;
  for (int n = 3; n <= nmax; ++n) {
    const Window w = window_for(h, n);
    if (w.empty())
      continue;
    const bool all_hit = for_each_lyndon(n, [&](std::uint64_t code) { return !code_avoids(code, n, w); });
    if (all_hit)
      bad.push_back(n);
  }
  return bad;
}

std::vector<Cycle> survivor_cycles(const Hole& h, int nmax, int cap) {
  check_length(nmax, cap);
  std::vector<Cycle> out;
  for (int n = 1; n <= nmax; ++n) {
    const Window w = window_for(h, n);
    for_each_lyndon(n, [&](std::uint64_t code) {
      if (code_avoids(code, n, w))
        out.push_back(Cycle::from_word(Word::from_code(code, static_cast<std::size_t>(n))));
      return true;
    });
  }
  return out;
}

Cycle high_cycle(int n) {
  if (n < 2)
    throw std::invalid_argument("high_cycle needs n >= 2");
  return Cycle::from_word(Word("0") + Word("1").power(static_cast<std::size_t>(n - 1)));
}

bool factorizes_over(const Cycle& c, const Word& s, const Word& t) {
  if (s.size() != t.size())
    throw std::invalid_argument("blocks must have equal length");
  if (s.empty())
    throw std::invalid_argument("blocks must be nonempty");
  const std::size_t q = s.size();
  const std::size_t n = c.length();
  if (n % q != 0)
    return false;
  for (std::size_t offset = 0; offset < q; ++offset) {
    const Word w = c.representative().rotated(offset);
    bool parsed = true;
    for (std::size_t i = 0; i < n && parsed; i += q) {
      const Word block = w.substr(i, q);
      parsed = block == s || block == t;
    }
    if (parsed)
      return true;
  }
  return false;
}

std::optional<double> growth_exponent(const Hole& h, int n, int cap) {
  const std::uint64_t count = count_avoiding_cycles(h, n, cap);
  if (count == 0)
    return std::nullopt;
  return std::log2(static_cast<double>(n) * static_cast<double>(count)) / n;
}

}  // namespace dmap
