//
// regions.hpp
//
// Where in the (a, b) parameter square a hole stops admitting cycles.
//
//   D3  holes with no bad period at all. A closed staircase with 9 corners.
//   D2  holes with finitely many bad periods. Open; its boundary is the
//       Devil's staircase b = κ(a) made of Sturmian plateaus, together with
//       its image under (a, b) -> (1 - b, 1 - a).
//

#pragma once

#include "dmap/cycles.hpp"
#include "dmap/exact.hpp"
#include "dmap/words.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace dmap {

enum class RegionClass { Interior, Boundary, Exterior };

std::string_view to_string(RegionClass c) noexcept;

using ParameterPoint = std::pair<Rational, Rational>;

struct D3Table {
  // (a_i, b_i) for i = 1..9, stored at index i - 1.
  std::array<ParameterPoint, 9> corners;
  // (a_i, b_{i+1}) for i = 0..9 with a_0 = 0 and b_10 = 1.
  std::array<ParameterPoint, 10> anti_corners;
};

const D3Table& d3_table();

// Degenerate holes (a >= b) are Interior.
RegionClass d3_classify(const Rational& a, const Rational& b);

// bad_set((a_i - eps, b_i + eps), nmax) for corner i in 1..9.
std::vector<int> exit_periods(int i, const Rational& eps, int nmax = 12);

// An n-cycle avoiding the open anti-corner hole (a_i, b_{i+1}), 0 <= i <= 9,
// n >= 3. The families come from explicit block words; the result is checked
// before it is returned.
Cycle anti_corner_witness(int i, int n);

// The constant piece of the staircase over [value(s^∞), value(st^∞)].
struct Plateau {
  RotationNumber r;
  SturmianPair pair;
  Rational left;   // s^∞
  Rational right;  // s t^∞
  Rational kappa;  // t s^∞
  Rational phi;    // t^∞
};

Plateau plateau_of(const RotationNumber& r);

inline constexpr int kDefaultPlateauSteps = 64;

// Raised when the Stern-Brocot descent needs more than the allowed steps.
class PlateauSearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The plateau containing a, for rational 1/4 < a < 1/2.
Plateau plateau_find(const Rational& a, int max_steps = kDefaultPlateauSteps);

// κ(a) = value(t s^∞) on the plateau of a. At a jump point a = st^∞ this is
// the lower (left) value.
Rational kappa(const Rational& a);

// φ(a) = value(t^∞) on the plateau of a, for 1/4 < a < 5/12.
Rational phi(const Rational& a);

// Raised for holes with an endpoint exactly at 1/2 inside the D2 square.
class UnsupportedRegion : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

RegionClass d2_classify(const Rational& a, const Rational& b);

// (value(st^∞), value(ts^∞))
ParameterPoint d2_corner(const RotationNumber& r);

// Which endpoint of the corner hole (st^∞, ts^∞) is pulled in by ε.
enum class Shrink {
  Top,     // (st^∞, ts^∞ - ε)
  Bottom,  // (st^∞ + ε, ts^∞)
};

// Length from which the explicit construction is guaranteed by the bound
// 2^{1 - mq} < ε on every block exponent m.
int construction_length_bound(const RotationNumber& r, const Rational& eps);

// A prime n-cycle avoiding the shrunken corner hole, built from the blocks
// u, v of block_factorization(r): (s^{n/q-1} t)^∞ when q divides n, else
// (u (vu)^{m_1} ... u (vu)^{m_k})^∞ with distinct m_i as large as n allows.
// Throws std::domain_error if ε <= 0, ε is at least the plateau width, or
// the cycle of that length still meets the hole.
Cycle construct_avoiding_cycle(const RotationNumber& r, const Rational& eps, int n,
                               Shrink side = Shrink::Top);

enum class StretchKind { AllOfTail, MultiplesRemoved };

struct StretchCase {
  StretchKind kind;
  std::optional<std::int64_t> q;  // MultiplesRemoved only
  // Smallest L >= 3 from which the computed bad set follows the predicted
  // pattern up to nmax; empty if even nmax breaks it.
  std::optional<int> tail_start;
  Rational b;  // κ(a)
  std::vector<int> bad;
};

// The tail of B(a, κ(a)) for a on a plateau: all of it when a <= sts^∞,
// all non-multiples of q beyond that.
StretchCase final_stretch(const Rational& a, int nmax);

struct GapResult {
  ParameterPoint d3_point;
  ParameterPoint d2_point;
  Rational distance_squared;
  double distance;
};

// Smallest distance between the D3 staircase and the D2 staircase segments of
// plateaus with q <= max_q (and their mirror images), with one pair of
// closest points.
GapResult boundary_gap_experiment(int max_q = 8);

}  // namespace dmap
