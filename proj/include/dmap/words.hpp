//
// words.hpp
//
// Combinatorics on binary words: balancedness, 0-max / 1-min words, standard
// words built from continued fractions, the Sturmian pair s(r), t(r), and
// navigation of the Farey (Stern-Brocot) tree.
//

#pragma once

#include "dmap/exact.hpp"
#include "dmap/word.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dmap {

namespace detail {
__extension__ typedef __int128 wide_int;
}

// p/q in lowest terms with 0 <= p <= q. The endpoints 0/1 and 1/1 only occur
// as Farey parents; every word construction requires 0 < p < q.
class RotationNumber {
 public:
  RotationNumber(std::int64_t p, std::int64_t q);
  static RotationNumber parse(std::string_view text);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  bool interior() const noexcept { return p_ > 0 && p_ < q_; }
  Rational value() const { return Rational(p_, q_); }
  std::string str() const;

  friend bool operator==(const RotationNumber&, const RotationNumber&) = default;
  friend std::strong_ordering operator<=>(const RotationNumber& x, const RotationNumber& y) {
    return static_cast<detail::wide_int>(x.p_) * y.q_ <=> static_cast<detail::wide_int>(y.p_) * x.q_;
  }

 private:
  std::int64_t p_;
  std::int64_t q_;
};

struct SturmianPair {
  RotationNumber r;
  Word s;  // largest cyclically balanced word of slope r starting with 0
  Word t;  // smallest cyclically balanced word of slope r starting with 1
};

RotationNumber ratio_of(const Word& w);

bool is_balanced(const Word& w);
bool is_cyclically_balanced(const Word& w);
bool is_zero_max(const Word& w);
bool is_one_min(const Word& w);

Word complement(const Word& w);

// [c_1, ..., c_n] with r = 1/(c_1 + 1/(c_2 + ...)) and c_n >= 2.
std::vector<std::int64_t> continued_fraction(const RotationNumber& r);

// u_n from u_{-1} = 1, u_0 = 0, u_{k+1} = u_k^{d_{k+1}} u_{k-1}, where
// [d_1 + 1, d_2, ..., d_n] is the continued fraction of r. Only 0 < r <= 1/2.
Word standard_word(const RotationNumber& r);

SturmianPair sturmian_pair(const RotationNumber& r);

// s(r) and t(r) extended to the Stern-Brocot roots: s(0/1) = 0, t(1/1) = 1.
// Empty for t(0/1) and s(1/1), which have no meaning.
std::optional<Word> lower_word(const RotationNumber& r);
std::optional<Word> upper_word(const RotationNumber& r);

RotationNumber mediant(const RotationNumber& r1, const RotationNumber& r2);
bool are_farey_neighbours(const RotationNumber& r1, const RotationNumber& r2);

// The neighbours r1 < r2 whose mediant is r.
std::pair<RotationNumber, RotationNumber> farey_parents(const RotationNumber& r);

// Outcome of each concatenation identity for r3 = r1 ⊕ r2. An identity that
// involves an undefined endpoint word is reported as std::nullopt.
struct FareyIdentities {
  std::optional<bool> s3_eq_s2s1;
  std::optional<bool> t3_eq_t1t2;
  std::optional<bool> s3_eq_s1t2;
  std::optional<bool> t3_eq_t2s1;

  bool all_hold() const noexcept;
};

FareyIdentities farey_identities(const RotationNumber& r1, const RotationNumber& r2);
bool verify_farey_identities(const RotationNumber& r1, const RotationNumber& r2);

// s(r) = u v and t(r) = v u with u = s(r1), v = t(r2) for the Farey parents.
struct BlockPair {
  Word u;
  Word v;
};
BlockPair block_factorization(const RotationNumber& r);

// First `length` symbols of the characteristic word of an irrational with
// continued fraction prefix `quotients` = [d_1 + 1, d_2, ...]. Throws
// std::out_of_range when the supplied quotients do not determine that many
// symbols.
Word characteristic_prefix(std::span<const std::int64_t> quotients, std::size_t length);

enum class Side { Left, Right };

// Walks r_n = r ⊕ r_{n-1} from the Farey parent of r on `side` and checks
// that s(r_n), t(r_n) start with the blocks of their one-sided limits:
//   left:  s(r)^n and t(r) s(r)^{n-1}
//   right: s(r) t(r)^{n-1} and t(r)^n
bool limit_word_check(const RotationNumber& r, Side side, int depth);

}  // namespace dmap
