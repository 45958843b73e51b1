#include "dmap/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dmap {

namespace {

void require_interior(const RotationNumber& r) {
  if (!r.interior())
    throw std::domain_error("rotation number " + r.str() + " must lie strictly inside (0,1)");
}

// Extremal ones-count over the cyclic factors of each length must differ by
// at most one. `cyclic` reads w as a circular word.
bool balanced_impl(const Word& w, bool cyclic) {
  const std::size_t n = w.size();
  if (n < 2)
    return true;
  std::vector<std::size_t> prefix(2 * n + 1, 0);
  for (std::size_t i = 0; i < 2 * n; ++i)
    prefix[i + 1] = prefix[i] + static_cast<std::size_t>(w[i % n]);
  const std::size_t max_len = cyclic ? n : n - 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t starts = cyclic ? n : n - len + 1;
    std::size_t lo = len;
    std::size_t hi = 0;
    for (std::size_t i = 0; i < starts; ++i) {
      const std::size_t c = prefix[i + len] - prefix[i];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > 1)
      return false;
  }
  return true;
}

}  // namespace

RotationNumber::RotationNumber(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (q <= 0 || p < 0 || p > q)
    throw std::domain_error("rotation number needs 0 <= p <= q, q > 0");
  if (std::gcd(p, q) != 1)
    throw std::domain_error("rotation number must be in lowest terms");
}

RotationNumber RotationNumber::parse(std::string_view text) {
  const Rational x = Rational::parse(text);
  if (!x.numerator().fits_slong_p() || !x.denominator().fits_slong_p())
    throw std::out_of_range("rotation number too large: " + std::string(text));
  return RotationNumber(x.numerator().get_si(), x.denominator().get_si());
}

std::string RotationNumber::str() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

RotationNumber ratio_of(const Word& w) {
  if (w.empty())
    throw std::invalid_argument("1-ratio of the empty word is undefined");
  const auto ones = static_cast<std::int64_t>(w.ones());
  const auto len = static_cast<std::int64_t>(w.size());
  const std::int64_t g = std::gcd(ones, len);
  return RotationNumber(ones / g, len / g);
}

bool is_balanced(const Word& w) { return balanced_impl(w, false); }

bool is_cyclically_balanced(const Word& w) { return balanced_impl(w, true); }

bool is_zero_max(const Word& w) {
  if (w.empty() || w[0] != 0)
    return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w[k] == 0 && w.rotated(k) > w)
      return false;
  }
  return true;
}

bool is_one_min(const Word& w) {
  if (w.empty() || w[0] != 1)
    return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w[k] == 1 && w.rotated(k) < w)
      return false;
  }
  return true;
}

Word complement(const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i)
    out.push_back(1 - w[i]);
  return out;
}

std::vector<std::int64_t> continued_fraction(const RotationNumber& r) {
  require_interior(r);
  std::vector<std::int64_t> out;
  std::int64_t num = r.q();
  std::int64_t den = r.p();
  while (den != 0) {
    out.push_back(num / den);
    num %= den;
    std::swap(num, den);
  }
  return out;
}

Word standard_word(const RotationNumber& r) {
  require_interior(r);
  if (r > RotationNumber(1, 2))
    throw std::domain_error("standard words are defined for r <= 1/2; got " + r.str());
  const auto cf = continued_fraction(r);
  Word older("1");  // u_{k-1}
  Word newer("0");  // u_k
  for (std::size_t k = 0; k < cf.size(); ++k) {
    const auto d = static_cast<std::size_t>(k == 0 ? cf[0] - 1 : cf[k]);
    Word next = newer.power(d) + older;
    older = std::move(newer);
    newer = std::move(next);
  }
  return newer;
}

SturmianPair sturmian_pair(const RotationNumber& r) {
  require_interior(r);
  if (r > RotationNumber(1, 2)) {
    const SturmianPair mirror = sturmian_pair(RotationNumber(r.q() - r.p(), r.q()));
    return SturmianPair{r, complement(mirror.t), complement(mirror.s)};
  }
  const Word u = standard_word(r);
  const Word tail = u.substr(0, u.size() - 2);
  return SturmianPair{r, Word("01") + tail, Word("10") + tail};
}

std::optional<Word> lower_word(const RotationNumber& r) {
  if (r.p() == 0)
    return Word("0");
  if (r.p() == r.q())
    return std::nullopt;
  return sturmian_pair(r).s;
}

std::optional<Word> upper_word(const RotationNumber& r) {
  if (r.p() == r.q())
    return Word("1");
  if (r.p() == 0)
    return std::nullopt;
  return sturmian_pair(r).t;
}

RotationNumber mediant(const RotationNumber& r1, const RotationNumber& r2) {
  return RotationNumber(r1.p() + r2.p(), r1.q() + r2.q());
}

bool are_farey_neighbours(const RotationNumber& r1, const RotationNumber& r2) {
  return static_cast<detail::wide_int>(r2.p()) * r1.q() - static_cast<detail::wide_int>(r1.p()) * r2.q() == 1;
}

std::pair<RotationNumber, RotationNumber> farey_parents(const RotationNumber& r) {
  require_interior(r);
  RotationNumber lo(0, 1);
  RotationNumber hi(1, 1);
  while (true) {
    const RotationNumber m = mediant(lo, hi);
    if (m == r)
      return {lo, hi};
    if (r < m)
      hi = m;
    else
      lo = m;
  }
}

bool FareyIdentities::all_hold() const noexcept {
  for (const auto& id : {s3_eq_s2s1, t3_eq_t1t2, s3_eq_s1t2, t3_eq_t2s1}) {
    if (id.has_value() && !*id)
      return false;
  }
  return true;
}

FareyIdentities farey_identities(const RotationNumber& r1, const RotationNumber& r2) {
  if (!are_farey_neighbours(r1, r2))
    throw std::invalid_argument(r1.str() + " and " + r2.str() + " are not Farey neighbours");
  const SturmianPair third = sturmian_pair(mediant(r1, r2));
  const auto s1 = lower_word(r1);
  const auto t1 = upper_word(r1);
  const auto s2 = lower_word(r2);
  const auto t2 = upper_word(r2);

  auto check = [](const Word& lhs, const std::optional<Word>& x, const std::optional<Word>& y) {
    return (x && y) ? std::optional<bool>(lhs == *x + *y) : std::nullopt;
  };
  FareyIdentities out;
  out.s3_eq_s2s1 = check(third.s, s2, s1);
  out.t3_eq_t1t2 = check(third.t, t1, t2);
  out.s3_eq_s1t2 = check(third.s, s1, t2);
  out.t3_eq_t2s1 = check(third.t, t2, s1);
  return out;
}

bool verify_farey_identities(const RotationNumber& r1, const RotationNumber& r2) {
  return farey_identities(r1, r2).all_hold();
}

BlockPair block_factorization(const RotationNumber& r) {
  const auto [left, right] = farey_parents(r);
  BlockPair blocks{*lower_word(left), *upper_word(right)};
  const SturmianPair pair = sturmian_pair(r);
  if (blocks.u + blocks.v != pair.s || blocks.v + blocks.u != pair.t)
    throw std::logic_error("block factorization failed for " + r.str());
  return blocks;
}

Word characteristic_prefix(std::span<const std::int64_t> quotients, std::size_t length) {
  if (length == 0)
    return Word{};
  if (!quotients.empty() && quotients[0] < 2)
    throw std::invalid_argument("first partial quotient must be >= 2 (slope below 1/2)");
  for (std::size_t k = 1; k < quotients.size(); ++k) {
    if (quotients[k] < 1)
      throw std::invalid_argument("partial quotients must be positive");
  }
  Word older("1");
  Word newer("0");
  for (std::size_t k = 0; k < quotients.size(); ++k) {
    const auto d = static_cast<std::size_t>(k == 0 ? quotients[0] - 1 : quotients[k]);
    Word next = newer.power(d) + older;
    older = std::move(newer);
    newer = std::move(next);
  }
  // Whatever the next quotient, the limit starts with u_n u_{n-1}. With no
  // quotients only the leading 0 is known.
  const Word known = quotients.empty() ? Word("0") : newer + older;
  if (length > known.size())
    throw std::out_of_range("quotients determine only " + std::to_string(known.size()) +
                            " symbols of the characteristic word");
  return known.substr(0, length);
}

bool limit_word_check(const RotationNumber& r, Side side, int depth) {
  require_interior(r);
  const SturmianPair base = sturmian_pair(r);
  const auto [left, right] = farey_parents(r);
  RotationNumber current = side == Side::Left ? left : right;
  for (int n = 1; n <= depth; ++n) {
    current = side == Side::Left ? mediant(current, r) : mediant(r, current);
    const SturmianPair pn = sturmian_pair(current);
    const auto k = static_cast<std::size_t>(n);
    const bool ok = side == Side::Left
                        ? pn.s.starts_with(base.s.power(k)) &&
                              pn.t.starts_with(base.t + base.s.power(k - 1))
                        : pn.s.starts_with(base.s + base.t.power(k - 1)) &&
                              pn.t.starts_with(base.t.power(k));
    if (!ok)
      return false;
  }
  return true;
}

}  // namespace dmap
