#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tq {

// Fixed-width bit string. Text form is big-endian: the leftmost character is
// x_1, which is also the most significant bit of to_index().
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);

  static BitString parse(std::string_view text);
  static BitString from_index(std::uint64_t value, std::size_t width);
  static BitString ones(std::size_t width);
  static BitString zeros(std::size_t width);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  std::uint64_t to_index() const;
  std::size_t hamming_weight() const;
  BitString complement() const;
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// A kickback mask X selects which machine qubits sit on the excited side of
// the exchanged level pair |0_S X> <-> |1_S X^1>.
using QueryMask = BitString;

}  // namespace tq
