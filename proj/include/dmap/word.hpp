//
// word.hpp
//
// Finite words over {0,1}. Shared by the exact-arithmetic layer (expansions)
// and the combinatorics-on-words layer.
//

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace dmap {

class Word {
 public:
  Word() = default;

  // Accepts a string of '0'/'1' characters; throws std::invalid_argument on
  // any other character.
  explicit Word(std::string_view bits);

  // The low `length` bits of `code`, most significant first.
  static Word from_code(std::uint64_t code, std::size_t length);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  int operator[](std::size_t i) const noexcept { return bits_[i] - '0'; }
  int back() const noexcept { return bits_.back() - '0'; }

  std::size_t ones() const noexcept;
  const std::string& str() const noexcept { return bits_; }

  // Requires size() <= 64.
  std::uint64_t to_code() const;

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  // Cyclic left rotation by k symbols.
  Word rotated(std::size_t k) const;
  Word power(std::size_t m) const;
  bool starts_with(const Word& prefix) const noexcept;

  // Length of the shortest root u with this == u^k; size() for primitive
  // words, 0 for the empty word.
  std::size_t primitive_period() const noexcept;
  bool is_primitive() const noexcept { return !empty() && primitive_period() == size(); }

  Word& operator+=(const Word& rhs) {
    bits_ += rhs.bits_;
    return *this;
  }
  void push_back(int bit) { bits_.push_back(bit ? '1' : '0'); }
  void pop_back() { bits_.pop_back(); }

  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
  friend bool operator==(const Word&, const Word&) = default;
  // Plain lexicographic order; for equal lengths this is the order on words.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.bits_.compare(b.bits_) <=> 0;
  }

 private:
  std::string bits_;
};

}  // namespace dmap
