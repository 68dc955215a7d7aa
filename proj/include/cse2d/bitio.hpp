#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cse2d {

/// Appends bits most-significant first; the final byte is zero-padded.
class BitWriter {
 public:
  void put(bool bit);
  void put_bits(std::uint64_t value, int width);
  void put_byte(std::uint8_t byte) { put_bits(byte, 8); }
  std::size_t bit_length() const noexcept { return bits_; }
  /// Drops trailing zero bits; a reader that zero-fills sees the same stream.
  void trim_trailing_zeros();
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bits_ = 0;
};

class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}
  /// Throws TruncatedStream past the end.
  bool get();
  std::uint64_t get_bits(int width);
  /// Past the end reads zeros instead of throwing.
  std::uint8_t get_byte_or_zero();
  std::size_t position() const noexcept { return pos_; }
  std::size_t bit_length() const noexcept { return bytes_.size() * 8; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

/// Elias delta code.
void elias_encode(std::uint64_t value, BitWriter& out);
std::uint64_t elias_decode(BitReader& in);
int elias_length(std::uint64_t value);
/// The code as a string of '0' and '1'.
std::string elias_bits(std::uint64_t value);

int ceil_log2(std::uint64_t x);

}  // namespace cse2d
