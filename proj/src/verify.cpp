#include "dmap/verify.hpp"

#include "dmap/cycles.hpp"
#include "dmap/regions.hpp"
#include "dmap/words.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dmap {

namespace {

// Collects failed expectations; keeps the first few for the report.
class Checker {
 public:
  bool expect(bool condition, const std::string& what) {
    ++checks_;
    if (!condition) {
      if (failures_.size() < 5)
        failures_.push_back(what);
      ++failed_;
    }
    return condition;
  }
  bool ok() const noexcept { return failed_ == 0; }
  std::size_t checks() const noexcept { return checks_; }

  std::string failures() const {
    std::string out = std::to_string(failed_) + " of " + std::to_string(checks_) + " failed";
    for (const auto& f : failures_)
      out += "; " + f;
    return out;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome finish(const Checker& c, const std::string& summary) {
  return {c.ok(), c.ok() ? summary : c.failures()};
}

Rational R(long p, long q) { return Rational(p, q); }
Rational dyadic(std::size_t k) { return Rational(BigInt(1), pow2(k)); }

Rational value(const Word& pre, const Word& per) {
  return value_of(EventuallyPeriodicWord(pre, per));
}

std::string join(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

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

using PointSet = std::vector<Rational>;

PointSet fractions(std::initializer_list<std::pair<long, long>> list) {
  PointSet out;
  for (const auto& [p, q] : list)
    out.emplace_back(p, q);
  std::sort(out.begin(), out.end());
  return out;
}

// Every prime n-cycle for n = 3..6, grouped by the corner that
// uses them.
const std::map<int, std::vector<PointSet>>& table1_cycles() {
  static const std::map<int, std::vector<PointSet>> table{
      {3, {fractions({{1, 7}, {2, 7}, {4, 7}}), fractions({{3, 7}, {5, 7}, {6, 7}})}},
      {4,
       {fractions({{1, 5}, {2, 5}, {3, 5}, {4, 5}}),
        fractions({{7, 15}, {11, 15}, {13, 15}, {14, 15}}),
        fractions({{1, 15}, {2, 15}, {4, 15}, {8, 15}})}},
      {5,
       {fractions({{5, 31}, {9, 31}, {10, 31}, {18, 31}, {20, 31}}),
        fractions({{3, 31}, {6, 31}, {12, 31}, {17, 31}, {24, 31}}),
        fractions({{11, 31}, {13, 31}, {21, 31}, {22, 31}, {26, 31}}),
        fractions({{7, 31}, {14, 31}, {19, 31}, {25, 31}, {28, 31}}),
        fractions({{15, 31}, {23, 31}, {27, 31}, {29, 31}, {30, 31}}),
        fractions({{1, 31}, {2, 31}, {4, 31}, {8, 31}, {16, 31}})}},
      {6,
       {fractions({{5, 63}, {10, 63}, {17, 63}, {20, 63}, {34, 63}, {40, 63}}),
        fractions({{11, 63}, {22, 63}, {25, 63}, {37, 63}, {44, 63}, {50, 63}}),
        fractions({{1, 21}, {2, 21}, {4, 21}, {8, 21}, {11, 21}, {16, 21}}),
        fractions({{13, 63}, {19, 63}, {26, 63}, {38, 63}, {41, 63}, {52, 63}}),
        fractions({{1, 9}, {2, 9}, {4, 9}, {5, 9}, {7, 9}, {8, 9}}),
        fractions({{23, 63}, {29, 63}, {43, 63}, {46, 63}, {53, 63}, {58, 63}}),
        fractions({{5, 21}, {10, 21}, {13, 21}, {17, 21}, {19, 21}, {20, 21}}),
        fractions({{31, 63}, {47, 63}, {55, 63}, {59, 63}, {61, 63}, {62, 63}}),
        fractions({{1, 63}, {2, 63}, {4, 63}, {8, 63}, {16, 63}, {32, 63}})}},
  };
  return table;
}

Outcome criterion_table1() {
  Checker c;
  std::vector<std::string> counts;
  for (const auto& [n, listed] : table1_cycles()) {
    std::set<PointSet> enumerated;
    for (const Cycle& cyc : enumerate_cycles(n))
      enumerated.insert(cyc.points());
    const std::set<PointSet> expected(listed.begin(), listed.end());
    c.expect(enumerated == expected, "n=" + std::to_string(n) + " point sets differ");
    counts.push_back(std::to_string(enumerated.size()));
  }
  // corner i uses n = 3, 6, 5, 4, 3 for i = 1..5
  const std::array<int, 5> corner_n{3, 6, 5, 4, 3};
  for (std::size_t i = 0; i < corner_n.size(); ++i) {
    const auto& [a, b] = d3_table().corners[i];
    const int n = corner_n[i];
    for (const PointSet& pts : table1_cycles().at(n)) {
      const bool hit = std::any_of(pts.begin(), pts.end(),
                                   [&](const Rational& x) { return a <= x && x <= b; });
      c.expect(hit, "corner " + std::to_string(i + 1) + " misses an " + std::to_string(n) + "-cycle");
    }
    const auto bad = bad_set(Hole(a - dyadic(12), b + dyadic(12)), n);
    c.expect(std::binary_search(bad.begin(), bad.end(), n),
             "widened corner " + std::to_string(i + 1) + " not bad at " + std::to_string(n));
  }
  return finish(c, counts[0] + "+" + counts[1] + "+" + counts[2] + "+" + counts[3] +
                       " cycles matched; corners 1-5 hit every listed cycle");
}

Outcome criterion_table2() {
  Checker c;
  std::size_t witnesses = 0;
  for (int i = 0; i <= 9; ++i) {
    const auto& [a, b] = d3_table().anti_corners[static_cast<std::size_t>(i)];
    const Hole h(a, b);
    for (int n = 3; n <= 40; ++n) {
      try {
        const Cycle w = anti_corner_witness(i, n);
        c.expect(w.length() == static_cast<std::size_t>(n) && avoids(w, h),
                 "witness i=" + std::to_string(i) + " n=" + std::to_string(n));
        ++witnesses;
      } catch (const std::exception& e) {
        c.expect(false, e.what());
      }
    }
    const auto bad = bad_set(h, 20);
    c.expect(bad.empty(), "bad_set of anti-corner " + std::to_string(i) + " = " + join(bad));
  }
  return finish(c, std::to_string(witnesses) +
                       " verified witnesses (10 anti-corners x n=3..40); all bad sets to 20 empty");
}

Outcome criterion_exit() {
  Checker c;
  std::set<int> all;
  for (int i = 1; i <= 9; ++i) {
    const auto ep = exit_periods(i, dyadic(12), 12);
    all.insert(ep.begin(), ep.end());
  }
  const std::vector<int> got(all.begin(), all.end());
  c.expect(got == std::vector<int>{3, 4, 5, 6}, "union = " + join(got));
  return finish(c, "EP = " + join(got));
}

Outcome criterion_d3const() {
  Checker c;
  const Rational width(2, 15);
  const Rational lo(11, 30);  // b = a + 2/15 > 1/2
  for (long k = 1; k <= 50; ++k) {
    const Rational a = lo + (R(1, 2) - lo) * R(k, 51);
    const Rational b = a + width;
    c.expect(d3_classify(a, b) != RegionClass::Exterior, "(" + a.str() + ", " + b.str() + ") outside");
    if (k % 10 == 0)
      c.expect(bad_set(Hole(a, b), 16).empty(), "bad periods at (" + a.str() + ", " + b.str() + ")");
  }
  const Rational delta = dyadic(16);
  c.expect(d3_classify(R(2, 5) - delta, R(8, 15) + delta) == RegionClass::Exterior,
           "widened (2/5, 8/15) not Exterior");
  Rational min_width(1);
  for (const auto& [a, b] : d3_table().corners)
    min_width = std::min(min_width, b - a);
  c.expect(min_width == width, "min corner width " + min_width.str());
  Rational max_anti(0);
  for (const auto& [a, b] : d3_table().anti_corners)
    max_anti = std::max(max_anti, b - a);
  c.expect(max_anti == R(3, 7), "max anti-corner width " + max_anti.str());
  return finish(c, "50 holes of width 2/15 in D3; widened corner 4 Exterior; min width " +
                       min_width.str() + ", max anti-corner width " + max_anti.str());
}

Outcome criterion_farey() {
  Checker c;
  std::vector<std::pair<RotationNumber, RotationNumber>> stack{{RotationNumber(0, 1), RotationNumber(1, 1)}};
  std::size_t pairs = 0;
  std::size_t identities = 0;
  std::array<std::size_t, 2> parity{0, 0};
  while (!stack.empty()) {
    const auto [lo, hi] = stack.back();
    stack.pop_back();
    if (lo.q() + hi.q() > 34)
      continue;
    const FareyIdentities ids = farey_identities(lo, hi);
    c.expect(ids.all_hold(), "identities fail for " + lo.str() + ", " + hi.str());
    for (const auto& id : {ids.s3_eq_s2s1, ids.t3_eq_t1t2, ids.s3_eq_s1t2, ids.t3_eq_t2s1})
      identities += id.has_value() ? 1 : 0;
    const RotationNumber mid = mediant(lo, hi);
    const RotationNumber low_side = mid <= RotationNumber(1, 2) ? mid : RotationNumber(mid.q() - mid.p(), mid.q());
    ++parity[continued_fraction(low_side).size() % 2];
    ++pairs;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  c.expect(parity[0] > 0 && parity[1] > 0, "a continued-fraction parity is never exercised");
  return finish(c, std::to_string(pairs) + " neighbour pairs, " + std::to_string(identities) +
                       " identities; CF length even " + std::to_string(parity[0]) + ", odd " +
                       std::to_string(parity[1]));
}

void check_sturmian(Checker& c, const RotationNumber& r) {
  const auto [rr, s, t] = sturmian_pair(r);
  const auto q = static_cast<std::size_t>(r.q());
  const auto p = static_cast<std::size_t>(r.p());
  const std::string tag = " at " + r.str();
  c.expect(s.size() == q && t.size() == q, "length" + tag);
  c.expect(s.ones() == p && t.ones() == p, "1-count" + tag);
  bool rotation = false;
  for (std::size_t k = 0; k < q; ++k)
    rotation = rotation || s.rotated(k) == t;
  c.expect(rotation, "not cyclic permutations" + tag);
  c.expect(is_cyclically_balanced(s) && is_cyclically_balanced(t), "not balanced" + tag);
  c.expect(s.starts_with(Word("01")) && t.starts_with(Word("10")), "prefixes" + tag);
  if (q >= 3)
    c.expect(s.substr(2) == t.substr(2), "tails differ" + tag);
  c.expect(is_zero_max(s) && is_one_min(t), "not 0-max / 1-min" + tag);
  c.expect(s < t, "s not below t" + tag);
  const SturmianPair dual = sturmian_pair(RotationNumber(r.q() - r.p(), r.q()));
  c.expect(dual.s == complement(t), "complement duality" + tag);
  const Rational lo = value(Word{}, s);
  const Rational st = value(s, t);
  const Rational ts = value(t, s);
  const Rational hi = value(Word{}, t);
  c.expect(lo < st && st < ts && ts < hi, "value order" + tag);
  c.expect(ts - lo == R(1, 4), "ts - s != 1/4" + tag);
  const BigInt m = pow2(q);
  c.expect(ts - st == Rational(m - 2, 4 * (m - 1)), "plateau width" + tag);
}

Outcome criterion_sturmian() {
  Checker c;
  const auto rs = interior_rotations(34);
  for (const RotationNumber& r : rs)
    check_sturmian(c, r);
  return finish(c, std::to_string(rs.size()) + " rotation numbers with q <= 34, " +
                       std::to_string(c.checks()) + " checks");
}

Outcome criterion_survivors() {
  Checker c;
  std::vector<std::string> notes;
  for (const RotationNumber r : {RotationNumber(1, 2), RotationNumber(1, 3), RotationNumber(2, 5)}) {
    const auto [rr, s, t] = sturmian_pair(r);
    const Hole h(value(s, t), value(t, s));
    const Hole band(value(Word{}, s), value(Word{}, t));
    std::size_t avoiding_in_band = 0;
    std::size_t factoring = 0;
    for (int n = 1; n <= 18; ++n) {
      for (const Cycle& cyc : enumerate_cycles(n)) {
        const bool factors = factorizes_over(cyc, s, t);
        const bool avoid = avoids(cyc, h);
        const auto pts = cyc.points();
        const bool some = std::any_of(pts.begin(), pts.end(), [&](const Rational& x) { return band.contains(x); });
        const bool all = std::all_of(pts.begin(), pts.end(), [&](const Rational& x) { return band.contains(x); });
        const std::string tag = cyc.representative().str() + " at " + r.str();
        if (factors)
          c.expect(avoid, "block cycle " + tag + " meets the hole");
        if (avoid && some)
          c.expect(factors, "survivor " + tag + " in the band does not factor");
        if (avoid && all)
          c.expect(factors, "survivor " + tag + " inside the band does not factor");
        avoiding_in_band += avoid && some ? 1 : 0;
        factoring += factors ? 1 : 0;
      }
    }
    notes.push_back(r.str() + ": " + std::to_string(avoiding_in_band) + " survivors meet the band, " +
                    std::to_string(factoring) + " block cycles");
  }
  return finish(c, notes[0] + "; " + notes[1] + "; " + notes[2]);
}

Outcome criterion_d2corner() {
  Checker c;
  const Hole corner(R(5, 12), R(7, 12));
  const auto bad = bad_set(corner, 18);
  std::vector<int> odd;
  for (int n = 3; n <= 18; n += 2)
    odd.push_back(n);
  c.expect(bad == odd, "bad_set = " + join(bad));
  const Rational delta = dyadic(10);
  const Hole inner(R(5, 12) + delta, R(7, 12));
  for (int n = 7; n <= 18; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    c.expect(find_avoiding_cycle(inner, n).has_value(), "brute force finds nothing at " + tag);
    try {
      const Cycle w = construct_avoiding_cycle(RotationNumber(1, 2), delta, n, Shrink::Bottom);
      c.expect(w.length() == static_cast<std::size_t>(n) && avoids(w, inner),
               "construction does not avoid at " + tag);
    } catch (const std::exception& e) {
      c.expect(false, std::string("construction failed at ") + tag + ": " + e.what());
    }
  }
  return finish(c, "B(5/12,7/12) = odd n in [3,18]; a + 2^-10 admits constructed and brute-force "
                   "n-cycles for n = 7..18");
}

Outcome criterion_d2const() {
  Checker c;
  for (long k = 1; k <= 50; ++k) {
    const Rational w = R(1, 6) - R(1, 100 * k);
    const Rational a = R(1, 2) - w * R(k, 51);
    const Rational b = a + w;
    c.expect(d2_classify(a, b) == RegionClass::Interior, "(" + a.str() + ", " + b.str() + ") not Interior");
  }
  const Rational delta = dyadic(16);
  c.expect(d2_classify(R(5, 12) - delta, R(7, 12) + delta) == RegionClass::Exterior,
           "widened (5/12, 7/12) not Exterior");
  std::size_t widths = 0;
  for (const RotationNumber& r : interior_rotations(12)) {
    const Plateau p = plateau_of(r);
    c.expect(p.kappa - p.left == R(1, 4), "staircase width at " + r.str());
    ++widths;
  }
  return finish(c, "50 holes of width < 1/6 Interior; widened q=2 corner Exterior; " +
                       std::to_string(widths) + " plateaus with ts - s = 1/4");
}

Outcome criterion_staircase() {
  Checker c;
  Rational prev(0);
  for (long i = 1; i <= 200; ++i) {
    const Rational a = R(1, 4) + R(i, 4 * 201);
    const Rational k = kappa(a);
    c.expect(prev <= k, "kappa decreases at " + a.str());
    prev = k;
    if (a < R(5, 12))
      c.expect(phi(a) > k, "phi <= kappa at " + a.str());
  }
  for (long i = 0; i < 20; ++i) {
    const Rational a = R(1, 3) + R(1, 12) * R(i, 19);
    c.expect(kappa(a) == R(7, 12), "kappa(" + a.str() + ") != 7/12");
  }
  const Rational delta = dyadic(20);
  c.expect(kappa(R(9, 28) + delta) - kappa(R(9, 28)) > Rational(0), "no jump at 9/28");
  c.expect(kappa(R(5, 12) + delta) - kappa(R(5, 12)) > Rational(0), "no jump at 5/12");
  return finish(c, "kappa monotone on 200 samples, 7/12 on [1/3, 5/12], phi > kappa, jumps at 9/28 "
                   "and 5/12");
}

Outcome criterion_growth() {
  Checker c;
  const auto g2 = growth_exponent(Hole(R(5, 12), R(7, 12)), 24, 24);
  const auto g3 = growth_exponent(Hole(R(9, 28), R(15, 28)), 24, 24);
  auto show = [](const std::optional<double>& g) {
    std::ostringstream os;
    os.precision(6);
    if (g)
      os << std::fixed << *g;
    else
      os << "undefined";
    return os.str();
  };
  c.expect(g2 && *g2 >= 0.45 && *g2 <= 0.55, "q=2 estimate " + show(g2) + " outside [0.45, 0.55]");
  c.expect(g3 && *g3 >= 0.28 && *g3 <= 0.39, "q=3 estimate " + show(g3) + " outside [0.28, 0.39]");
  return finish(c, "q=2: " + show(g2) + ", q=3: " + show(g3));
}

Outcome criterion_gap() {
  Checker c;
  const GapResult g = boundary_gap_experiment(8);
  c.expect(g.d3_point == ParameterPoint{R(10, 31), R(8, 15)},
           "D3 point (" + g.d3_point.first.str() + ", " + g.d3_point.second.str() + ")");
  c.expect(g.d2_point == ParameterPoint{R(9, 28), R(15, 28)},
           "D2 point (" + g.d2_point.first.str() + ", " + g.d2_point.second.str() + ")");
  const Rational expected(BigInt(1186), BigInt(13020) * 13020);
  c.expect(g.distance_squared == expected, "distance^2 = " + g.distance_squared.str());
  c.expect(std::abs(g.distance - 0.002645) <= 1e-6, "distance " + std::to_string(g.distance));
  std::ostringstream os;
  os.precision(8);
  os << "min at (10/31, 8/15) vs (9/28, 15/28), distance^2 = " << g.distance_squared.str()
     << " = 1186/13020^2, distance = " << std::fixed << g.distance;
  return finish(c, os.str());
}

Outcome criterion_symmetry() {
  Checker c;
  std::mt19937_64 gen(20260914);
  auto unit = [&](long max_den) {
    const long q = std::uniform_int_distribution<long>(1, max_den)(gen);
    return Rational(std::uniform_int_distribution<long>(0, q)(gen), q);
  };
  auto hole = [&]() {
    while (true) {
      Rational a = unit(300);
      Rational b = unit(300);
      if (b < a)
        std::swap(a, b);
      if (a < b)
        return Hole(a, b);
    }
  };
  std::size_t nonempty = 0;
  for (int i = 0; i < 50; ++i) {
    const Hole h = hole();
    const auto bad = bad_set(h, 14);
    c.expect(bad == bad_set(h.mirrored(), 14), "asymmetric bad set for (" + h.a().str() + ", " + h.b().str() + ")");
    nonempty += bad.empty() ? 0 : 1;
  }
  for (int i = 0; i < 200; ++i) {
    const Hole inner = hole();
    const Hole outer(inner.a() * unit(40), inner.b() + (Rational(1) - inner.b()) * unit(40));
    const auto small = bad_set(inner, 14);
    const auto large = bad_set(outer, 14);
    c.expect(std::includes(large.begin(), large.end(), small.begin(), small.end()),
             "monotonicity fails for (" + inner.a().str() + ", " + inner.b().str() + ")");
  }
  return finish(c, "50 mirrored holes (" + std::to_string(nonempty) +
                       " with bad periods) and 200 nested pairs at N = 14");
}

// Extras beyond the acceptance list.

Outcome extra_limits() {
  Checker c;
  c.expect(limit_word_check(RotationNumber(1, 2), Side::Left, 4), "1/2 left");
  c.expect(limit_word_check(RotationNumber(1, 3), Side::Right, 3), "1/3 right");
  c.expect(limit_word_check(RotationNumber(1, 2), Side::Right, 1), "1/2 right");
  for (const RotationNumber& r : interior_rotations(12)) {
    c.expect(limit_word_check(r, Side::Left, 6), "left limit at " + r.str());
    c.expect(limit_word_check(r, Side::Right, 6), "right limit at " + r.str());
  }
  return finish(c, "one-sided limits s^n, t s^{n-1}, s t^{n-1}, t^n for q <= 12, depth 6");
}

Outcome extra_stretch() {
  Checker c;
  const StretchCase a = final_stretch(R(1, 3), 14);
  c.expect(a.kind == StretchKind::AllOfTail && a.tail_start == 3, "a = 1/3");
  const StretchCase b = final_stretch(R(5, 12), 14);
  c.expect(b.kind == StretchKind::MultiplesRemoved && b.q == 2 && b.tail_start == 3, "a = 5/12");
  const StretchCase d = final_stretch(R(9, 28), 15);
  c.expect(d.kind == StretchKind::MultiplesRemoved && d.q == 3 && d.tail_start.has_value(), "a = 9/28");
  return finish(c, "1/3: all of [3,14]; 5/12: odd n from 3; 9/28: non-multiples of 3 from " +
                       std::to_string(d.tail_start.value_or(-1)));
}

Outcome extra_d3grid() {
  Checker c;
  std::size_t exterior = 0;
  for (long i = 1; i <= 40; ++i) {
    for (long j = 1; j <= 40; ++j) {
      const Rational a = R(1, 4) + R(i, 164);
      const Rational b = R(1, 2) + R(j, 164);
      const bool outside = d3_classify(a, b) == RegionClass::Exterior;
      exterior += outside ? 1 : 0;
      c.expect(outside == !bad_set(Hole(a, b), 15).empty(), "(" + a.str() + ", " + b.str() + ")");
    }
  }
  return finish(c, "40x40 grid agrees with brute force to n = 15 (" + std::to_string(exterior) +
                       " Exterior cells)");
}

Outcome extra_construct() {
  Checker c;
  c.expect(construct_avoiding_cycle(RotationNumber(1, 2), R(1, 100), 9) ==
               Cycle::from_word(Word("010101010")),
           "r=1/2, n=9");
  c.expect(construct_avoiding_cycle(RotationNumber(1, 2), R(1, 372) + R(1, 1000), 5) ==
               Cycle::from_word(Word("01010")),
           "r=1/2, n=5");
  for (const RotationNumber& r : interior_rotations(7)) {
    const Rational eps = R(1, 40);
    const int from = construction_length_bound(r, eps);
    const Plateau p = plateau_of(r);
    for (int n = from; n <= std::min(from + 12, 60); ++n) {
      const std::string tag = r.str() + " n=" + std::to_string(n);
      try {
        c.expect(avoids(construct_avoiding_cycle(r, eps, n), Hole(p.right, p.kappa - eps)), tag);
        c.expect(avoids(construct_avoiding_cycle(r, eps, n, Shrink::Bottom), Hole(p.right + eps, p.kappa)),
                 "mirror " + tag);
      } catch (const std::exception& e) {
        c.expect(false, tag + ": " + e.what());
      }
    }
  }
  return finish(c, "corner witnesses past the analytic length bound for q <= 7, both sides");
}

struct Suite {
  SuiteInfo info;
  std::function<Outcome()> run;
  double time_limit;  // seconds; 0 for none
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {{"table1", 1, "short cycles and corner hits"}, criterion_table1, 1.0},
      {{"table2", 2, "anti-corner witness families"}, criterion_table2, 30.0},
      {{"exit", 3, "exit periods EP = {3,4,5,6}"}, criterion_exit, 0.0},
      {{"d3const", 4, "sharp D3 constants 2/15 and 3/7"}, criterion_d3const, 0.0},
      {{"farey", 5, "Farey concatenation identities"}, criterion_farey, 0.0},
      {{"sturmian", 6, "Sturmian pair structure"}, criterion_sturmian, 0.0},
      {{"survivors", 7, "{s,t}-survivor lemma"}, criterion_survivors, 0.0},
      {{"d2corner", 8, "D2 corner dichotomy"}, criterion_d2corner, 60.0},
      {{"d2const", 9, "sharp D2 constants 1/6 and 1/4"}, criterion_d2const, 0.0},
      {{"staircase", 10, "staircase shape"}, criterion_staircase, 0.0},
      {{"growth", 11, "dimension growth 1/q"}, criterion_growth, 300.0},
      {{"gap", 12, "boundary gap sqrt(1186)/13020"}, criterion_gap, 0.0},
      {{"symmetry", 13, "bad-set symmetry and monotonicity"}, criterion_symmetry, 0.0},
      {{"limits", 0, "one-sided word limits"}, extra_limits, 0.0},
      {{"stretch", 0, "final-stretch dichotomy"}, extra_stretch, 0.0},
      {{"d3grid", 0, "D3 classifier against brute force"}, extra_d3grid, 0.0},
      {{"construct", 0, "constructive corner witnesses"}, extra_construct, 0.0},
  };
  return all;
}

CriterionResult run(const Suite& s) {
  CriterionResult out{s.info.id, s.info.name, false, "", 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = s.run();
    out.passed = o.passed;
    out.detail = o.detail;
  } catch (const std::exception& e) {
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.passed && s.time_limit > 0 && out.seconds > s.time_limit) {
    out.passed = false;
    out.detail += "; exceeded " + std::to_string(static_cast<int>(s.time_limit)) + " s";
  }
  return out;
}

}  // namespace

const std::vector<SuiteInfo>& verify_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> v;
    for (const Suite& s : suites())
      v.push_back(s.info);
    return v;
  }();
  return infos;
}

CriterionResult run_suite(std::string_view name) {
  for (const Suite& s : suites()) {
    if (s.info.name == name)
      return run(s);
  }
  throw std::invalid_argument("unknown verify suite '" + std::string(name) + "'");
}

std::vector<CriterionResult> run_suites(std::string_view selector) {
  std::vector<CriterionResult> out;
  if (selector == "all" || selector == "acceptance") {
    for (const Suite& s : suites()) {
      if (selector == "all" || s.info.id > 0)
        out.push_back(run(s));
    }
    return out;
  }
  out.push_back(run_suite(selector));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " [";
  if (r.id > 0)
    os << r.id;
  else
    os << "+";
  os << "] " << r.name << ": " << r.detail << " (";
  os.precision(2);
  os << std::fixed << r.seconds << " s)";
  return os.str();
}

}  // namespace dmap
