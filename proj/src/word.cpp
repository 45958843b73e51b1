#include "dmap/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmap {

Word::Word(std::string_view bits) : bits_(bits) {
  for (const char c : bits_) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("word contains a non-binary symbol: '" + std::string(bits) + "'");
  }
}

Word Word::from_code(std::uint64_t code, std::size_t length) {
  if (length > 64)
    throw std::length_error("word code limited to 64 bits");
  Word w;
  w.bits_.resize(length);
  for (std::size_t i = 0; i < length; ++i)
    w.bits_[i] = ((code >> (length - 1 - i)) & 1U) ? '1' : '0';
  return w;
}

std::size_t Word::ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
}

std::uint64_t Word::to_code() const {
  if (bits_.size() > 64)
    throw std::length_error("word too long for a 64-bit code");
  std::uint64_t code = 0;
  for (const char c : bits_)
    code = (code << 1) | static_cast<std::uint64_t>(c - '0');
  return code;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  Word w;
  w.bits_ = bits_.substr(pos, len);
  return w;
}

Word Word::rotated(std::size_t k) const {
  if (bits_.empty())
    return *this;
  k %= bits_.size();
  Word w;
  w.bits_.reserve(bits_.size());
  w.bits_.append(bits_, k, std::string::npos);
  w.bits_.append(bits_, 0, k);
  return w;
}

Word Word::power(std::size_t m) const {
  Word w;
  w.bits_.reserve(bits_.size() * m);
  for (std::size_t i = 0; i < m; ++i)
    w.bits_ += bits_;
  return w;
}

bool Word::starts_with(const Word& prefix) const noexcept {
  return bits_.size() >= prefix.bits_.size() &&
         std::equal(prefix.bits_.begin(), prefix.bits_.end(), bits_.begin());
}

std::size_t Word::primitive_period() const noexcept {
  const std::size_t n = bits_.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0)
      continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i)
      periodic = bits_[i] == bits_[i - d];
    if (periodic)
      return d;
  }
  return n;
}

}  // namespace dmap
