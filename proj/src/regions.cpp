#include "dmap/regions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dmap {

namespace {

Rational value(const Word& pre, const Word& per) {
  return value_of(EventuallyPeriodicWord(pre, per));
}

Word repeat(const char* block, int times) {
  return Word(block).power(static_cast<std::size_t>(std::max(times, 0)));
}

// Anti-corner families for i = 0..4; the rest are complements.
Word anti_corner_family(int i, int n) {
  if (i >= 5)
    return complement(anti_corner_family(9 - i, n));
  if (i == 0)
    return Word("0") + repeat("1", n - 1);
  if (i == 4)
    return n % 2 == 1 ? repeat("01", 1 + (n - 3) / 2) + Word("0")
                      : repeat("01", 1 + (n - 4) / 2) + Word("10");
  if (n == 3)
    return Word("010");
  switch (n % 3) {
    case 1:
      return repeat("010", 1 + (n - 4) / 3) + Word("0");
    case 2:
      return repeat("010", 1 + (n - 5) / 3) + Word(i == 3 ? "10" : "00");
    default:
      // The 000 tail meets (20/63, 16/31) at 32/63, so row 2 borrows row 3's.
      return repeat("010", 1 + (n - 6) / 3) + Word(i == 1 ? "000" : "100");
  }
}

struct Segment {
  // Closed box [x0, x1] x [y0, y1]; one side is degenerate.
  Rational x0, x1, y0, y1;
};

Segment horizontal(const Rational& y, const Rational& xa, const Rational& xb) {
  return {std::min(xa, xb), std::max(xa, xb), y, y};
}

Segment vertical(const Rational& x, const Rational& ya, const Rational& yb) {
  return {x, x, std::min(ya, yb), std::max(ya, yb)};
}

// Gap between [a0, a1] and [b0, b1] with the facing coordinates.
struct AxisGap {
  Rational gap;
  Rational on_first;
  Rational on_second;
};

AxisGap axis_gap(const Rational& a0, const Rational& a1, const Rational& b0, const Rational& b1) {
  if (a1 < b0)
    return {b0 - a1, a1, b0};
  if (b1 < a0)
    return {a0 - b1, a0, b1};
  const Rational shared = std::max(a0, b0);
  return {Rational(0), shared, shared};
}

std::vector<Segment> d3_segments() {
  const D3Table& t = d3_table();
  std::vector<Segment> out;
  for (int i = 0; i < 9; ++i) {
    const auto& [a, b] = t.corners[static_cast<std::size_t>(i)];
    const Rational& left = t.anti_corners[static_cast<std::size_t>(i)].first;
    const Rational& top = t.anti_corners[static_cast<std::size_t>(i + 1)].second;
    out.push_back(horizontal(b, left, a));
    out.push_back(vertical(a, b, top));
  }
  return out;
}

std::vector<Segment> d2_segments(int max_q) {
  std::vector<Segment> out;
  const Rational one(1);
  for (std::int64_t q = 2; q <= max_q; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1)
        continue;
      const Plateau pl = plateau_of(RotationNumber(p, q));
      out.push_back(horizontal(pl.kappa, pl.left, pl.right));
      out.push_back(vertical(pl.right, pl.kappa, pl.phi));
      out.push_back(vertical(one - pl.kappa, one - pl.right, one - pl.left));
      out.push_back(horizontal(one - pl.right, one - pl.phi, one - pl.kappa));
    }
  }
  // Edges of the square where the staircase meets the trivial regions.
  out.push_back(horizontal(Rational(1, 2), Rational(0), Rational(1, 4)));
  out.push_back(vertical(Rational(1, 2), Rational(3, 4), Rational(1)));
  return out;
}

enum class Side2 { Below, On, Above };

// Position of (a, b), 1/4 < a < 1/2 < b < 3/4, relative to the closed graph
// of the κ staircase including its vertical jumps.
Side2 against_staircase(const Rational& a, const Rational& b) {
  const Plateau pl = plateau_find(a);
  if (b < pl.kappa)
    return Side2::Below;
  if (b == pl.kappa)
    return Side2::On;
  if (a == pl.right && b <= pl.phi)
    return Side2::On;
  return Side2::Above;
}

}  // namespace

std::string_view to_string(RegionClass c) noexcept {
  switch (c) {
    case RegionClass::Interior:
      return "Interior";
    case RegionClass::Boundary:
      return "Boundary";
    case RegionClass::Exterior:
      return "Exterior";
  }
  return "?";
}

const D3Table& d3_table() {
  static const D3Table table = [] {
    D3Table t{};
    const std::array<std::pair<long, long>, 18> raw{{{2, 7},   {3, 7},   {20, 63}, {32, 63},
                                                     {10, 31}, {16, 31}, {2, 5},   {8, 15},
                                                     {3, 7},   {4, 7},   {7, 15},  {3, 5},
                                                     {15, 31}, {21, 31}, {31, 63}, {43, 63},
                                                     {4, 7},   {5, 7}}};
    for (std::size_t i = 0; i < 9; ++i) {
      t.corners[i] = {Rational(raw[2 * i].first, raw[2 * i].second),
                      Rational(raw[2 * i + 1].first, raw[2 * i + 1].second)};
    }
    for (std::size_t i = 0; i < 10; ++i) {
      const Rational a = i == 0 ? Rational(0) : t.corners[i - 1].first;
      const Rational b = i == 9 ? Rational(1) : t.corners[i].second;
      t.anti_corners[i] = {a, b};
    }
    return t;
  }();
  return table;
}

RegionClass d3_classify(const Rational& a, const Rational& b) {
  if (a >= b)
    return RegionClass::Interior;
  bool touches = false;
  for (const auto& [ai, bi] : d3_table().corners) {
    if (a < ai && b > bi)
      return RegionClass::Exterior;
    touches = touches || (a <= ai && b >= bi);
  }
  return touches ? RegionClass::Boundary : RegionClass::Interior;
}

std::vector<int> exit_periods(int i, const Rational& eps, int nmax) {
  if (i < 1 || i > 9)
    throw std::out_of_range("corner index must be in 1..9");
  if (eps <= Rational(0))
    throw std::domain_error("epsilon must be positive");
  const auto& [a, b] = d3_table().corners[static_cast<std::size_t>(i - 1)];
  const Rational lo = std::max(a - eps, Rational(0));
  const Rational hi = std::min(b + eps, Rational(1));
  return bad_set(Hole(lo, hi), nmax, std::max(nmax, kDefaultMaxCycleLength));
}

Cycle anti_corner_witness(int i, int n) {
  if (i < 0 || i > 9)
    throw std::out_of_range("anti-corner index must be in 0..9");
  if (n < 3)
    throw std::invalid_argument("anti-corner witnesses start at n = 3");
  const Cycle c = Cycle::from_word(anti_corner_family(i, n));
  const auto& [a, b] = d3_table().anti_corners[static_cast<std::size_t>(i)];
  if (c.length() != static_cast<std::size_t>(n) || !avoids(c, Hole(a, b)))
    throw std::logic_error("anti-corner family failed for i=" + std::to_string(i) +
                           ", n=" + std::to_string(n));
  return c;
}

Plateau plateau_of(const RotationNumber& r) {
  SturmianPair pair = sturmian_pair(r);
  const Word& s = pair.s;
  const Word& t = pair.t;
  Plateau p{r, pair, value(Word{}, s), value(s, t), value(t, s), value(Word{}, t)};
  return p;
}

Plateau plateau_find(const Rational& a, int max_steps) {
  if (!(Rational(1, 4) < a && a < Rational(1, 2)))
    throw std::domain_error("plateau search needs 1/4 < a < 1/2; got " + a.str());
  RotationNumber lo(0, 1);
  RotationNumber hi(1, 1);
  for (int step = 0; step < max_steps; ++step) {
    const RotationNumber mid = mediant(lo, hi);
    Plateau p = plateau_of(mid);
    if (a < p.left)
      hi = mid;
    else if (a > p.right)
      lo = mid;
    else
      return p;
  }
  throw PlateauSearchError("no plateau found for " + a.str() + " within " +
                           std::to_string(max_steps) + " Stern-Brocot steps");
}

Rational kappa(const Rational& a) { return plateau_find(a).kappa; }

Rational phi(const Rational& a) {
  if (!(Rational(1, 4) < a && a < Rational(5, 12)))
    throw std::domain_error("phi is only defined for 1/4 < a < 5/12; got " + a.str());
  return plateau_find(a).phi;
}

RegionClass d2_classify(const Rational& a, const Rational& b) {
  const Rational half(1, 2);
  if (a >= b)
    return RegionClass::Interior;
  if (b < half || a > half)
    return RegionClass::Interior;
  if ((a <= Rational(1, 4) && b >= half) || (a <= half && b >= Rational(3, 4)))
    return RegionClass::Exterior;
  if (a == half || b == half)
    throw UnsupportedRegion("D2 membership with an endpoint at 1/2 is not determined: (" +
                            a.str() + ", " + b.str() + ")");
  const Side2 direct = against_staircase(a, b);
  const Side2 mirror = against_staircase(Rational(1) - b, Rational(1) - a);
  if (direct == Side2::Above || mirror == Side2::Above)
    return RegionClass::Exterior;
  if (direct == Side2::Below && mirror == Side2::Below)
    return RegionClass::Interior;
  return RegionClass::Boundary;
}

ParameterPoint d2_corner(const RotationNumber& r) {
  const Plateau p = plateau_of(r);
  return {p.right, p.kappa};
}

namespace {

// Smallest m >= 1 with 2^{1 - mq} < eps.
std::int64_t block_exponent_bound(std::int64_t q, const Rational& eps) {
  std::int64_t m = 1;
  while (!(Rational(BigInt(2), pow2(static_cast<std::size_t>(m * q))) < eps))
    ++m;
  return m;
}

void check_epsilon(const Plateau& p, const Rational& eps) {
  if (eps <= Rational(0))
    throw std::domain_error("epsilon must be positive");
  if (eps >= p.kappa - p.right)
    throw std::domain_error("epsilon " + eps.str() + " closes the corner hole of " + p.r.str());
}

// Number of u-blocks k in 1..q-1 with k |u| = n (mod q).
std::int64_t block_count(std::int64_t n, std::int64_t j, std::int64_t q) {
  for (std::int64_t k = 1; k < q; ++k) {
    if ((k * j - n) % q == 0)
      return k;
  }
  throw std::logic_error("block length not invertible modulo q");
}

Cycle construct_top(const RotationNumber& r, const Rational& eps, int n) {
  const Plateau p = plateau_of(r);
  check_epsilon(p, eps);
  const std::int64_t q = r.q();
  const Word& s = p.pair.s;
  const Word& t = p.pair.t;
  Word w;
  if (n % q == 0) {
    w = s.power(static_cast<std::size_t>(n / q - 1)) + t;
  } else {
    const BlockPair blocks = block_factorization(r);
    const auto j = static_cast<std::int64_t>(blocks.u.size());
    const std::int64_t k = block_count(n, j, q);
    const std::int64_t total = n - k * j;
    const std::int64_t spread = k * (k - 1) / 2;
    if (total < 0 || total / q < spread)
      throw std::domain_error("no " + std::to_string(n) + "-cycle of this block form for " +
                              r.str());
    // k distinct exponents summing to total / q, as equal as possible.
    const std::int64_t free = total / q - spread;
    const std::int64_t base = free / k;
    const std::int64_t extra = free % k;
    const Word vu = blocks.v + blocks.u;
    for (std::int64_t i = 0; i < k; ++i) {
      const std::int64_t m = base + i + (i >= k - extra ? 1 : 0);
      w += blocks.u + vu.power(static_cast<std::size_t>(m));
    }
  }
  if (!w.is_primitive())
    throw std::domain_error("block word for n=" + std::to_string(n) + " is not primitive");
  const Cycle c = Cycle::from_word(w);
  if (!avoids(c, Hole(p.right, p.kappa - eps)))
    throw std::domain_error("n=" + std::to_string(n) + " is too short for epsilon " + eps.str() +
                            " at " + r.str() + "; guaranteed from n=" +
                            std::to_string(construction_length_bound(r, eps)));
  return c;
}

}  // namespace

int construction_length_bound(const RotationNumber& r, const Rational& eps) {
  const Plateau p = plateau_of(r);
  check_epsilon(p, eps);
  const std::int64_t q = r.q();
  const std::int64_t m = block_exponent_bound(q, eps);
  const auto j = static_cast<std::int64_t>(block_factorization(r).u.size());
  std::int64_t bound = q;
  for (std::int64_t k = 1; k < q; ++k)
    bound = std::max(bound, k * j + q * (k * m + k * (k - 1) / 2));
  return static_cast<int>(bound);
}

Cycle construct_avoiding_cycle(const RotationNumber& r, const Rational& eps, int n, Shrink side) {
  if (n < 1)
    throw std::invalid_argument("cycle length must be positive");
  if (side == Shrink::Top)
    return construct_top(r, eps, n);
  // x -> 1 - x maps (st^∞ + ε, ts^∞) at r onto (st^∞, ts^∞ - ε) at 1 - r.
  const Cycle c = construct_top(RotationNumber(r.q() - r.p(), r.q()), eps, n).complemented();
  const Plateau p = plateau_of(r);
  if (!avoids(c, Hole(p.right + eps, p.kappa)))
    throw std::logic_error("mirrored construction failed for " + r.str());
  return c;
}

StretchCase final_stretch(const Rational& a, int nmax) {
  const Plateau p = plateau_find(a);
  const Rational sts = value(p.pair.s + p.pair.t, p.pair.s);
  StretchCase out{a <= sts ? StretchKind::AllOfTail : StretchKind::MultiplesRemoved,
                  std::nullopt,
                  std::nullopt,
                  p.kappa,
                  bad_set(Hole(a, p.kappa), nmax, std::max(nmax, kDefaultMaxCycleLength))};
  if (out.kind == StretchKind::MultiplesRemoved)
    out.q = p.r.q();
  auto predicted_bad = [&](int n) {
    return out.kind == StretchKind::AllOfTail || n % p.r.q() != 0;
  };
  auto is_bad = [&](int n) { return std::binary_search(out.bad.begin(), out.bad.end(), n); };
  for (int start = nmax; start >= 3 && predicted_bad(start) == is_bad(start); --start)
    out.tail_start = start;
  return out;
}

GapResult boundary_gap_experiment(int max_q) {
  const std::vector<Segment> d3 = d3_segments();
  const std::vector<Segment> d2 = d2_segments(max_q);
  std::optional<GapResult> best;
  for (const Segment& x : d3) {
    for (const Segment& y : d2) {
      const AxisGap gx = axis_gap(x.x0, x.x1, y.x0, y.x1);
      const AxisGap gy = axis_gap(x.y0, x.y1, y.y0, y.y1);
      const Rational d2sq = gx.gap * gx.gap + gy.gap * gy.gap;
      if (!best || d2sq < best->distance_squared)
        best = GapResult{{gx.on_first, gy.on_first}, {gx.on_second, gy.on_second}, d2sq, 0.0};
    }
  }
  best->distance = std::sqrt(best->distance_squared.to_double());
  return *best;
}

}  // namespace dmap
