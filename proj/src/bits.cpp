#include "tq/bits.hpp"

#include <algorithm>
#include <stdexcept>

namespace tq {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw std::invalid_argument("BitString: entries must be 0 or 1");
  }
}

BitString BitString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0') {
      bits.push_back(0);
    } else if (c == '1') {
      bits.push_back(1);
    } else {
      throw std::invalid_argument("BitString: invalid character in \"" + std::string(text) + "\"");
    }
  }
  return BitString(std::move(bits));
}

BitString BitString::from_index(std::uint64_t value, std::size_t width) {
  if (width < 64 && (value >> width) != 0) {
    throw std::out_of_range("BitString: value does not fit in width");
  }
  std::vector<std::uint8_t> bits(width, 0);
  for (std::size_t i = 0; i < width; ++i) {
    bits[width - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1U);
  }
  return BitString(std::move(bits));
}

BitString BitString::ones(std::size_t width) { return BitString(std::vector<std::uint8_t>(width, 1)); }

BitString BitString::zeros(std::size_t width) { return BitString(std::vector<std::uint8_t>(width, 0)); }

std::uint64_t BitString::to_index() const {
  if (bits_.size() > 63) throw std::out_of_range("BitString: too wide for an index");
  std::uint64_t value = 0;
  for (auto b : bits_) value = (value << 1) | b;
  return value;
}

std::size_t BitString::hamming_weight() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BitString BitString::complement() const {
  std::vector<std::uint8_t> out(bits_.size());
  std::transform(bits_.begin(), bits_.end(), out.begin(), [](std::uint8_t b) { return static_cast<std::uint8_t>(b ^ 1U); });
  return BitString(std::move(out));
}

std::string BitString::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace tq
