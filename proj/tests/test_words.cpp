#include "dmap/words.hpp"

#include "doctest.h"
#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

using namespace dmap;
using dmap::testing::naive_cyclically_balanced;

namespace {

RotationNumber R(std::int64_t p, std::int64_t q) { return RotationNumber(p, q); }

Rational value(const Word& pre, const Word& per) {
  return value_of(EventuallyPeriodicWord(pre, per));
}

// Interior rotation numbers with denominator at most max_q.
std::vector<RotationNumber> interior_rotations(std::int64_t max_q) {
  std::vector<RotationNumber> out;
  for (std::int64_t q = 2; q <= max_q; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) == 1)
        out.emplace_back(p, q);
    }
  }
  return out;
}

bool rotations_of_each_other(const Word& x, const Word& y) {
  if (x.size() != y.size())
    return false;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x.rotated(k) == y)
      return true;
  }
  return x.empty();
}

}  // namespace

TEST_CASE("rotation numbers") {
  CHECK(RotationNumber::parse("2/5") == R(2, 5));
  CHECK(RotationNumber::parse("0/1") == R(0, 1));
  CHECK_THROWS_AS(R(2, 4), std::domain_error);
  CHECK_THROWS_AS(R(3, 2), std::domain_error);
  CHECK_THROWS_AS(R(1, 0), std::domain_error);
  CHECK(R(1, 3) < R(2, 5));
  CHECK(R(3, 5).str() == "3/5");
}

TEST_CASE("ratio_of") {
  CHECK(ratio_of(Word("01010")) == R(2, 5));
  CHECK(ratio_of(Word("000")) == R(0, 1));
  CHECK(ratio_of(Word("10010")) == R(2, 5));
  CHECK(ratio_of(Word("1111")) == R(1, 1));
  CHECK_THROWS_AS(ratio_of(Word()), std::invalid_argument);
}

TEST_CASE("balanced words") {
  CHECK(is_balanced(Word("01010")));
  CHECK(is_cyclically_balanced(Word("01010")));
  // 00 only appears across the seam
  CHECK(is_balanced(Word("0110")));
  CHECK_FALSE(is_cyclically_balanced(Word("0110")));
  CHECK(is_balanced(Word()));
  CHECK(is_cyclically_balanced(Word()));
  // balanced as a line, not as a circle: 1·1 across the seam
  CHECK_FALSE(is_cyclically_balanced(Word("10100101")));
  CHECK(is_balanced(Word("10100101")));

  SUBCASE("cyclic check agrees with brute force over all rotations") {
    for (std::size_t n = 1; n <= 9; ++n) {
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        const Word w = Word::from_code(code, n);
        REQUIRE(is_cyclically_balanced(w) == naive_cyclically_balanced(w.str()));
      }
    }
  }
}

TEST_CASE("0-max and 1-min") {
  CHECK(is_zero_max(Word("010")));
  CHECK(is_one_min(Word("100")));
  CHECK_FALSE(is_zero_max(Word("001")));
  CHECK_FALSE(is_zero_max(Word("101")));
  CHECK_FALSE(is_one_min(Word("011")));
  CHECK_FALSE(is_one_min(Word("101101110")));
}

TEST_CASE("complement") {
  CHECK(complement(Word("011")) == Word("100"));
  CHECK(complement(Word()) == Word());
  CHECK(complement(Word("01101")) == Word("10010"));
}

TEST_CASE("continued fractions") {
  CHECK(continued_fraction(R(1, 3)) == std::vector<std::int64_t>{3});
  CHECK(continued_fraction(R(2, 5)) == std::vector<std::int64_t>{2, 2});
  CHECK(continued_fraction(R(3, 7)) == std::vector<std::int64_t>{2, 3});
  CHECK(continued_fraction(R(1, 2)) == std::vector<std::int64_t>{2});
  CHECK_THROWS_AS(continued_fraction(R(0, 1)), std::domain_error);
  CHECK_THROWS_AS(continued_fraction(R(1, 1)), std::domain_error);

  for (const RotationNumber& r : interior_rotations(60)) {
    const auto cf = continued_fraction(r);
    REQUIRE(!cf.empty());
    CHECK(cf.back() >= 2);
    // fold back: 1/(c1 + 1/(c2 + ...))
    Rational x(0);
    for (auto it = cf.rbegin(); it != cf.rend(); ++it)
      x = Rational(1) / (Rational(*it) + x);
    CHECK(x == r.value());
  }
}

TEST_CASE("standard words") {
  CHECK(standard_word(R(1, 3)) == Word("001"));
  CHECK(standard_word(R(1, 2)) == Word("01"));
  // [2, 2]: u_1 = 01, u_2 = u_1^2 u_0
  CHECK(standard_word(R(2, 5)) == Word("01010"));
  CHECK(standard_word(R(3, 7)) == Word("0101010"));
  CHECK_THROWS_AS(standard_word(R(3, 5)), std::domain_error);

  for (const RotationNumber& r : interior_rotations(40)) {
    if (r > R(1, 2))
      continue;
    const Word u = standard_word(r);
    CHECK(u.size() == static_cast<std::size_t>(r.q()));
    CHECK(u.ones() == static_cast<std::size_t>(r.p()));
    CHECK(is_cyclically_balanced(u));
  }
}

TEST_CASE("sturmian pairs") {
  CHECK(sturmian_pair(R(2, 5)).s == Word("01010"));
  CHECK(sturmian_pair(R(2, 5)).t == Word("10010"));
  CHECK(sturmian_pair(R(3, 5)).s == Word("01101"));
  CHECK(sturmian_pair(R(3, 5)).t == Word("10101"));
  CHECK(sturmian_pair(R(1, 2)).s == Word("01"));
  CHECK(sturmian_pair(R(1, 2)).t == Word("10"));
  CHECK(sturmian_pair(R(1, 3)).s == Word("010"));
  CHECK(sturmian_pair(R(1, 3)).t == Word("100"));
  CHECK_THROWS_AS(sturmian_pair(R(0, 1)), std::domain_error);

  SUBCASE("invariants for q <= 34") {
    for (const RotationNumber& r : interior_rotations(34)) {
      CAPTURE(r.str());
      const auto [rr, s, t] = sturmian_pair(r);
      const auto q = static_cast<std::size_t>(r.q());
      const auto p = static_cast<std::size_t>(r.p());
      CHECK(s.size() == q);
      CHECK(t.size() == q);
      CHECK(s.ones() == p);
      CHECK(t.ones() == p);
      CHECK(rotations_of_each_other(s, t));
      CHECK(is_cyclically_balanced(s));
      CHECK(is_cyclically_balanced(t));
      CHECK(s.starts_with(Word("01")));
      CHECK(t.starts_with(Word("10")));
      if (q >= 3)
        CHECK(s.substr(2) == t.substr(2));
      CHECK(is_zero_max(s));
      CHECK(is_one_min(t));
      CHECK(s < t);

      // complement duality
      const SturmianPair dual = sturmian_pair(R(r.q() - r.p(), r.q()));
      CHECK(dual.s == complement(t));
      CHECK(dual.t == complement(s));

      // the four staircase values and their exact gaps
      const Rational lo = value(Word(), s);
      const Rational st = value(s, t);
      const Rational ts = value(t, s);
      const Rational hi = value(Word(), t);
      CHECK(lo < st);
      CHECK(st < ts);
      CHECK(ts < hi);
      CHECK(ts - lo == Rational(1, 4));
      const BigInt m = pow2(q);
      CHECK(ts - st == Rational(m - 2, 4 * (m - 1)));
    }
  }

  SUBCASE("uniqueness by exhaustive search for q <= 16") {
    for (const RotationNumber& r : interior_rotations(16)) {
      CAPTURE(r.str());
      const auto q = static_cast<std::size_t>(r.q());
      const auto p = static_cast<std::size_t>(r.p());
      std::vector<Word> found;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << q); ++code) {
        if (static_cast<std::size_t>(__builtin_popcountll(code)) != p)
          continue;
        const Word w = Word::from_code(code, q);
        if (is_cyclically_balanced(w))
          found.push_back(w);
      }
      REQUIRE(found.size() == q);
      for (const Word& w : found)
        CHECK(rotations_of_each_other(w, found.front()));
      const auto [rr, s, t] = sturmian_pair(r);
      Word largest_zero;
      Word smallest_one;
      for (const Word& w : found) {
        if (w[0] == 0 && (largest_zero.empty() || w > largest_zero))
          largest_zero = w;
        if (w[0] == 1 && (smallest_one.empty() || w < smallest_one))
          smallest_one = w;
      }
      CHECK(s == largest_zero);
      CHECK(t == smallest_one);
    }
  }

  SUBCASE("the fast balance check agrees with brute force on the pairs") {
    for (const RotationNumber& r : interior_rotations(13)) {
      const auto [rr, s, t] = sturmian_pair(r);
      CHECK(naive_cyclically_balanced(s.str()));
      CHECK(naive_cyclically_balanced(t.str()));
    }
  }
}

TEST_CASE("endpoint words") {
  CHECK(lower_word(R(0, 1)) == Word("0"));
  CHECK(upper_word(R(1, 1)) == Word("1"));
  CHECK_FALSE(upper_word(R(0, 1)).has_value());
  CHECK_FALSE(lower_word(R(1, 1)).has_value());
  CHECK(lower_word(R(2, 5)) == Word("01010"));
}

TEST_CASE("Farey navigation") {
  CHECK(mediant(R(1, 3), R(1, 2)) == R(2, 5));
  CHECK(mediant(R(0, 1), R(1, 1)) == R(1, 2));
  CHECK(mediant(R(2, 5), R(1, 2)) == R(3, 7));
  CHECK(are_farey_neighbours(R(1, 3), R(2, 5)));
  CHECK_FALSE(are_farey_neighbours(R(1, 3), R(3, 5)));

  CHECK(farey_parents(R(2, 5)) == std::pair{R(1, 3), R(1, 2)});
  CHECK(farey_parents(R(1, 2)) == std::pair{R(0, 1), R(1, 1)});
  CHECK(farey_parents(R(3, 7)) == std::pair{R(2, 5), R(1, 2)});
  CHECK_THROWS_AS(farey_parents(R(1, 1)), std::domain_error);

  for (const RotationNumber& r : interior_rotations(50)) {
    const auto [lo, hi] = farey_parents(r);
    CHECK(lo < r);
    CHECK(r < hi);
    CHECK(are_farey_neighbours(lo, hi));
    CHECK(mediant(lo, hi) == r);
  }
}

TEST_CASE("Farey concatenation identities") {
  CHECK(verify_farey_identities(R(1, 3), R(1, 2)));
  CHECK(verify_farey_identities(R(2, 5), R(1, 2)));
  CHECK(verify_farey_identities(R(1, 3), R(2, 5)));
  CHECK_THROWS_AS(verify_farey_identities(R(1, 3), R(3, 5)), std::invalid_argument);

  const FareyIdentities root = farey_identities(R(0, 1), R(1, 1));
  CHECK_FALSE(root.s3_eq_s2s1.has_value());
  CHECK(root.s3_eq_s1t2 == true);

  SUBCASE("every neighbour pair with q1 + q2 <= 34") {
    // Walk the Stern-Brocot tree; each node is the mediant of its parents.
    std::vector<std::pair<RotationNumber, RotationNumber>> stack{{R(0, 1), R(1, 1)}};
    std::size_t pairs = 0;
    std::size_t checked = 0;
    std::set<std::size_t> parities;
    while (!stack.empty()) {
      const auto [lo, hi] = stack.back();
      stack.pop_back();
      if (lo.q() + hi.q() > 34)
        continue;
      const FareyIdentities ids = farey_identities(lo, hi);
      CHECK(ids.all_hold());
      for (const auto& id : {ids.s3_eq_s2s1, ids.t3_eq_t1t2, ids.s3_eq_s1t2, ids.t3_eq_t2s1})
        checked += id.has_value() ? 1 : 0;
      const RotationNumber mid = mediant(lo, hi);
      if (mid <= R(1, 2))
        parities.insert(continued_fraction(mid).size() % 2);
      ++pairs;
      stack.emplace_back(lo, mid);
      stack.emplace_back(mid, hi);
    }
    CHECK(pairs > 100);
    CHECK(checked > 3 * pairs);
    // both continued-fraction parities of the mediant are exercised
    CHECK(parities.size() == 2);
  }
}

TEST_CASE("block factorization") {
  const BlockPair b25 = block_factorization(R(2, 5));
  CHECK(b25.u == Word("010"));
  CHECK(b25.v == Word("10"));
  const BlockPair b12 = block_factorization(R(1, 2));
  CHECK(b12.u == Word("0"));
  CHECK(b12.v == Word("1"));
  const BlockPair b37 = block_factorization(R(3, 7));
  CHECK(b37.u == Word("01010"));
  CHECK(b37.v == Word("10"));

  for (const RotationNumber& r : interior_rotations(34)) {
    const BlockPair b = block_factorization(r);
    const auto q = static_cast<std::size_t>(r.q());
    CHECK(std::gcd(b.u.size(), q) == 1);
    CHECK(std::gcd(b.v.size(), q) == 1);
  }
}

TEST_CASE("characteristic prefixes") {
  const std::vector<std::int64_t> golden{2, 1, 1, 1, 1, 1};
  CHECK(characteristic_prefix(golden, 8) == Word("01001010"));
  CHECK(characteristic_prefix(golden, 0) == Word());
  CHECK(characteristic_prefix({}, 0) == Word());
  CHECK(characteristic_prefix({}, 1) == Word("0"));

  const std::vector<std::int64_t> q322{3, 2, 2};
  // u_1 = 001, u_2 = 0010010, u_3 = u_2^2 u_1
  CHECK(characteristic_prefix(q322, 6) == Word("001001"));

  SUBCASE("prefix consistent as the length grows") {
    // u_6 u_5 with |u_6| = 21, |u_5| = 13
    const Word full = characteristic_prefix(golden, 34);
    for (std::size_t len = 0; len <= 34; ++len)
      CHECK(characteristic_prefix(golden, len) == full.substr(0, len));
    // more quotients extend, never contradict
    const std::vector<std::int64_t> longer{2, 1, 1, 1, 1, 1, 1, 1};
    CHECK(characteristic_prefix(longer, 89).starts_with(full));
  }

  CHECK_THROWS_AS(characteristic_prefix(golden, 35), std::out_of_range);
  const std::vector<std::int64_t> slope_too_large{1, 2};
  CHECK_THROWS_AS(characteristic_prefix(slope_too_large, 3), std::invalid_argument);
}

TEST_CASE("one-sided limits") {
  CHECK(limit_word_check(R(1, 2), Side::Left, 4));
  CHECK(limit_word_check(R(1, 3), Side::Right, 3));
  CHECK(limit_word_check(R(1, 2), Side::Right, 1));

  for (const RotationNumber& r : interior_rotations(12)) {
    CHECK(limit_word_check(r, Side::Left, 6));
    CHECK(limit_word_check(r, Side::Right, 6));
  }
}
