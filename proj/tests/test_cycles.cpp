#include "dmap/cycles.hpp"
#include "dmap/words.hpp"

#include "doctest.h"
#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace dmap;
using dmap::testing::random_unit_rational;

namespace {

Rational R(long p, long q) { return Rational(p, q); }

Cycle C(const char* bits) { return Cycle::from_word(Word(bits)); }

std::vector<Rational> points(std::initializer_list<std::pair<long, long>> fractions) {
  std::vector<Rational> out;
  for (const auto& [p, q] : fractions)
    out.emplace_back(p, q);
  std::sort(out.begin(), out.end());
  return out;
}

// Every word of length n, without touching the necklace enumerator, reduced
// to the set of aperiodic least rotations.
std::set<Word> brute_force_necklaces(int n) {
  std::set<Word> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    const Word w = Word::from_code(code, static_cast<std::size_t>(n));
    if (!w.is_primitive())
      continue;
    Word least = w;
    for (std::size_t k = 1; k < w.size(); ++k)
      least = std::min(least, w.rotated(k));
    out.insert(least);
  }
  return out;
}

// Orbit-based avoidance through exact point lists only.
bool brute_avoids(const Cycle& c, const Hole& h) {
  for (const Rational& x : c.points()) {
    if (h.contains(x))
      return false;
  }
  return true;
}

std::vector<int> brute_bad_set(const Hole& h, int nmax) {
  std::vector<int> bad;
  for (int n = 3; n <= nmax; ++n) {
    bool all_hit = true;
    for (const Word& w : brute_force_necklaces(n))
      all_hit = all_hit && !brute_avoids(Cycle::from_word(w), h);
    if (all_hit)
      bad.push_back(n);
  }
  return bad;
}

Hole random_hole(std::int64_t max_den) {
  while (true) {
    Rational a = random_unit_rational(max_den);
    Rational b = random_unit_rational(max_den);
    if (b < a)
      std::swap(a, b);
    if (a < b)
      return Hole(a, b);
  }
}

bool subset(const std::vector<int>& x, const std::vector<int>& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

}  // namespace

TEST_CASE("holes") {
  CHECK_THROWS_AS(Hole(R(1, 2), R(1, 2)), std::domain_error);
  CHECK_THROWS_AS(Hole(R(2, 3), R(1, 2)), std::domain_error);
  CHECK_THROWS_AS(Hole(R(-1, 2), R(1, 2)), std::domain_error);
  const Hole h(R(2, 7), R(3, 7));
  CHECK_FALSE(h.contains(R(2, 7)));
  CHECK_FALSE(h.contains(R(3, 7)));
  CHECK(h.contains(R(1, 3)));
  CHECK(h.mirrored().a() == R(4, 7));
  CHECK(h.mirrored().b() == R(5, 7));
}

TEST_CASE("cycle representation") {
  const Cycle c = C("100");
  CHECK(c.representative() == Word("001"));
  CHECK(c.points() == points({{1, 7}, {2, 7}, {4, 7}}));
  CHECK(c.min_point() == R(1, 7));
  CHECK(c.max_point() == R(4, 7));
  CHECK(c.complemented() == C("011"));
  CHECK_THROWS_AS(C("0101"), std::invalid_argument);
  CHECK_THROWS_AS(C(""), std::invalid_argument);
  CHECK(C("0").points() == points({{0, 1}}));
  CHECK(C("1").points() == points({{1, 1}}));
}

TEST_CASE("enumeration") {
  const auto three = enumerate_cycles(3);
  REQUIRE(three.size() == 2);
  CHECK(three[0].points() == points({{1, 7}, {2, 7}, {4, 7}}));
  CHECK(three[1].points() == points({{3, 7}, {5, 7}, {6, 7}}));

  const auto six = enumerate_cycles(6);
  CHECK(six.size() == 9);
  const auto ninths = points({{1, 9}, {2, 9}, {4, 9}, {5, 9}, {7, 9}, {8, 9}});
  CHECK(std::any_of(six.begin(), six.end(), [&](const Cycle& c) { return c.points() == ninths; }));

  const auto one = enumerate_cycles(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].points() == points({{0, 1}}));
  CHECK(one[1].points() == points({{1, 1}}));

  CHECK(enumerate_cycles(4).size() == 3);
  CHECK(enumerate_cycles(5).size() == 6);
  CHECK_THROWS_AS(enumerate_cycles(29), std::out_of_range);
  CHECK(enumerate_cycles(22, 22).size() == prime_cycle_count(22));
  CHECK_THROWS_AS(enumerate_cycles(63, 100), std::out_of_range);
  CHECK_THROWS_AS(enumerate_cycles(0), std::invalid_argument);

  SUBCASE("counts match the Mobius formula and brute force") {
    const std::map<int, std::uint64_t> known{{1, 2}, {2, 1}, {3, 2}, {4, 3}, {5, 6},
                                             {6, 9}, {7, 18}, {8, 30}, {12, 335}, {20, 52377}};
    for (const auto& [n, count] : known)
      CHECK(prime_cycle_count(n) == count);
    for (int n = 1; n <= 20; ++n)
      CHECK(enumerate_cycles(n).size() == prime_cycle_count(n));
    for (int n = 1; n <= 14; ++n) {
      const auto listed = enumerate_cycles(n);
      std::set<Word> reps;
      for (const Cycle& c : listed)
        reps.insert(c.representative());
      CHECK(reps == brute_force_necklaces(n));
      CHECK(std::is_sorted(listed.begin(), listed.end()));
    }
  }

  SUBCASE("orbit closure and point structure") {
    for (int n = 1; n <= 10; ++n) {
      const BigInt m = pow2(static_cast<std::size_t>(n)) - 1;
      for (const Cycle& c : enumerate_cycles(n)) {
        const auto pts = c.points();
        REQUIRE(pts.size() == static_cast<std::size_t>(n));
        CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
        std::vector<Rational> image;
        for (const Rational& x : pts) {
          CHECK(m % x.denominator() == 0);
          image.push_back(doubling(x));
        }
        std::sort(image.begin(), image.end());
        CHECK(image == pts);
      }
    }
  }
}

TEST_CASE("avoidance") {
  CHECK(avoids(C("01"), Hole(R(3, 7), R(4, 7))));
  CHECK_FALSE(avoids(C("001"), Hole(R(2, 7) - R(1, 64), R(3, 7) + R(1, 64))));
  CHECK(avoids(C("011"), Hole(R(2, 7), R(3, 7))));

  SUBCASE("window fast path agrees with exact point checks") {
    for (int trial = 0; trial < 200; ++trial) {
      const Hole h = random_hole(200);
      const int n = static_cast<int>(dmap::testing::uniform(1, 12));
      for (const Cycle& c : enumerate_cycles(n))
        REQUIRE(avoids(c, h) == brute_avoids(c, h));
    }
  }

  SUBCASE("long cycles beyond the 64-bit window") {
    const Cycle c = Cycle::from_word(Word("0") + Word("1").power(69));
    CHECK(avoids(c, Hole(Rational(0), R(1, 2) - R(1, 1000))));
    CHECK_FALSE(avoids(c, Hole(R(1, 3), R(2, 3))));
  }
}

TEST_CASE("bad sets") {
  const auto widened = bad_set(Hole(R(2, 7) - R(1, 64), R(3, 7) + R(1, 64)), 8);
  CHECK(std::find(widened.begin(), widened.end(), 3) != widened.end());
  CHECK(bad_set(Hole(R(3, 7), R(4, 7)), 12).empty());
  std::vector<int> all(10);
  std::iota(all.begin(), all.end(), 3);
  CHECK(bad_set(Hole(R(1, 3), R(7, 12)), 12) == all);
  CHECK_THROWS_AS(bad_set(Hole(R(1, 3), R(1, 2)), 2), std::invalid_argument);

  SUBCASE("agrees with the brute-force census") {
    for (int trial = 0; trial < 40; ++trial) {
      const Hole h = random_hole(64);
      CHECK(bad_set(h, 11) == brute_bad_set(h, 11));
    }
  }

  SUBCASE("monotone under hole inclusion") {
    for (int trial = 0; trial < 200; ++trial) {
      const Hole inner = random_hole(300);
      const Rational a = inner.a() * random_unit_rational(50);
      const Rational b = inner.b() + (Rational(1) - inner.b()) * random_unit_rational(50);
      const Hole outer(a, b);
      CHECK(subset(bad_set(inner, 14), bad_set(outer, 14)));
    }
  }

  SUBCASE("invariant under x -> 1 - x") {
    for (int trial = 0; trial < 50; ++trial) {
      const Hole h = random_hole(300);
      CHECK(bad_set(h, 14) == bad_set(h.mirrored(), 14));
    }
  }
}

TEST_CASE("survivors") {
  const auto wide = survivor_cycles(Hole(R(1, 4), R(3, 4)), 10);
  REQUIRE(wide.size() == 2);
  CHECK(wide[0] == C("0"));
  CHECK(wide[1] == C("1"));

  const auto q2 = survivor_cycles(Hole(R(5, 12), R(7, 12)), 4);
  CHECK(std::find(q2.begin(), q2.end(), C("01")) != q2.end());
  for (const Cycle& c : q2)
    CHECK(avoids(c, Hole(R(5, 12), R(7, 12))));
  // 4/7, 3/7, 8/15 and 7/15 knock out 001, 011, 0001 and 0111
  CHECK(q2 == std::vector<Cycle>{C("0"), C("1"), C("01"), C("0011")});

  const auto anti = survivor_cycles(Hole(R(2, 7), R(32, 63)), 7);
  CHECK(std::find(anti.begin(), anti.end(), C("0100100")) != anti.end());
}

TEST_CASE("high cycles") {
  CHECK(high_cycle(3).points() == points({{3, 7}, {5, 7}, {6, 7}}));
  CHECK(high_cycle(4).points() == points({{7, 15}, {11, 15}, {13, 15}, {14, 15}}));
  CHECK(high_cycle(5).points() == points({{15, 31}, {23, 31}, {27, 31}, {29, 31}, {30, 31}}));
  CHECK_THROWS_AS(high_cycle(1), std::invalid_argument);

  for (int n = 2; n <= 30; ++n) {
    const Cycle c = high_cycle(n);
    const BigInt m = pow2(static_cast<std::size_t>(n)) - 1;
    const Rational low(pow2(static_cast<std::size_t>(n - 1)) - 1, m);
    CHECK(c.min_point() == low);
    for (int trial = 0; trial < 10; ++trial) {
      const Rational b = low * random_unit_rational(1000);
      if (b > Rational(0))
        CHECK(avoids(c, Hole(Rational(0), b)));
    }
    CHECK(avoids(c, Hole(low * Rational(1, 3), low)));
  }
}

TEST_CASE("block factorization of cycles") {
  CHECK(factorizes_over(C("0110"), Word("01"), Word("10")));
  CHECK_FALSE(factorizes_over(C("011"), Word("01"), Word("10")));
  CHECK(factorizes_over(C("010100"), Word("010"), Word("100")));
  CHECK_FALSE(factorizes_over(C("000111"), Word("010"), Word("100")));
  CHECK_THROWS_AS(factorizes_over(C("0110"), Word("01"), Word("100")), std::invalid_argument);
}

TEST_CASE("survivor lemma for the plateau corner holes") {
  for (const RotationNumber r : {RotationNumber(1, 2), RotationNumber(1, 3), RotationNumber(2, 5)}) {
    CAPTURE(r.str());
    const auto [rr, s, t] = sturmian_pair(r);
    const Hole h(value_of(EventuallyPeriodicWord(s, t)), value_of(EventuallyPeriodicWord(t, s)));
    const Hole band(value_of(EventuallyPeriodicWord(s)), value_of(EventuallyPeriodicWord(t)));
    const auto q = static_cast<std::size_t>(r.q());

    // Independent census of {s,t}-block necklaces.
    std::set<Cycle> block_cycles;
    for (std::size_t blocks = 1; blocks * q <= 18; ++blocks) {
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << blocks); ++pick) {
        Word w;
        for (std::size_t i = 0; i < blocks; ++i)
          w += (pick >> i) & 1 ? t : s;
        if (w.is_primitive())
          block_cycles.insert(Cycle::from_word(w));
      }
    }

    std::size_t inside = 0;
    for (int n = 1; n <= 18; ++n) {
      for (const Cycle& c : enumerate_cycles(n)) {
        const bool factors = block_cycles.count(c) > 0;
        CHECK(factors == factorizes_over(c, s, t));
        if (factors)
          CHECK(avoids(c, h));
        const auto pts = c.points();
        const bool some_in_band =
            std::any_of(pts.begin(), pts.end(), [&](const Rational& x) { return band.contains(x); });
        const bool all_in_band =
            std::all_of(pts.begin(), pts.end(), [&](const Rational& x) { return band.contains(x); });
        if (avoids(c, h) && some_in_band) {
          CHECK(factors);
          ++inside;
        }
        if (avoids(c, h) && all_in_band)
          CHECK(factors);
      }
    }
    CHECK(inside > 0);
  }
}

TEST_CASE("growth exponents") {
  const auto half = growth_exponent(Hole(R(5, 12), R(7, 12)), 24);
  REQUIRE(half.has_value());
  CHECK(*half == doctest::Approx(0.5).epsilon(0.1));
  CHECK_FALSE(growth_exponent(Hole(R(1, 4), R(3, 4)), 12).has_value());
  CHECK(count_avoiding_cycles(Hole(R(1, 4), R(3, 4)), 12) == 0);
  CHECK(count_avoiding_cycles(Hole(R(1, 2), R(1, 2) + R(1, 1 << 20)), 6) == prime_cycle_count(6));
  const auto third = growth_exponent(Hole(R(9, 28), R(15, 28)), 18);
  REQUIRE(third.has_value());
  CHECK(*third > 0.25);
  CHECK(*third < 0.5);
}
