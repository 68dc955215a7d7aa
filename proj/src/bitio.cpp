#include "cse2d/bitio.hpp"

#include <bit>

#include "cse2d/error.hpp"

namespace cse2d {

void BitWriter::put(bool bit) {
  if (bits_ % 8 == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bits_ % 8));
  ++bits_;
}

void BitWriter::put_bits(std::uint64_t value, int width) {
  for (int i = width - 1; i >= 0; --i) put(((value >> i) & 1u) != 0);
}

void BitWriter::trim_trailing_zeros() {
  while (bits_ > 0) {
    const std::size_t last = bits_ - 1;
    if (bytes_[last / 8] & (0x80u >> (last % 8))) break;
    bits_ = last;
    if (bits_ % 8 == 0) bytes_.pop_back();
  }
}

bool BitReader::get() {
  if (pos_ >= bit_length()) throw Error(Errc::truncated_stream, "read past end of payload");
  const bool bit = (bytes_[pos_ / 8] & (0x80u >> (pos_ % 8))) != 0;
  ++pos_;
  return bit;
}

std::uint64_t BitReader::get_bits(int width) {
  std::uint64_t v = 0;
  for (int i = 0; i < width; ++i) v = (v << 1) | static_cast<std::uint64_t>(get());
  return v;
}

std::uint8_t BitReader::get_byte_or_zero() {
  std::uint8_t v = 0;
  for (int i = 0; i < 8; ++i) {
    bool bit = false;
    if (pos_ < bit_length()) bit = (bytes_[pos_ / 8] & (0x80u >> (pos_ % 8))) != 0;
    ++pos_;
    v = static_cast<std::uint8_t>((v << 1) | (bit ? 1 : 0));
  }
  return v;
}

void elias_encode(std::uint64_t value, BitWriter& out) {
  if (value == 0) throw Error(Errc::non_positive, "Elias delta needs a positive integer");
  const int n = std::bit_width(value);
  const int nn = std::bit_width(static_cast<std::uint64_t>(n));
  out.put_bits(0, nn - 1);
  out.put_bits(static_cast<std::uint64_t>(n), nn);
  out.put_bits(value, n - 1);
}

std::uint64_t elias_decode(BitReader& in) {
  int zeros = 0;
  while (!in.get()) {
    if (++zeros > 6) throw Error(Errc::bad_format, "Elias delta prefix too long");
  }
  const std::uint64_t n = (std::uint64_t{1} << zeros) | in.get_bits(zeros);
  if (n > 64) throw Error(Errc::bad_format, "Elias delta length too large");
  return (std::uint64_t{1} << (n - 1)) | in.get_bits(static_cast<int>(n - 1));
}

int elias_length(std::uint64_t value) {
  if (value == 0) throw Error(Errc::non_positive, "Elias delta needs a positive integer");
  const int n = std::bit_width(value);
  return n - 1 + 2 * (std::bit_width(static_cast<std::uint64_t>(n)) - 1) + 1;
}

std::string elias_bits(std::uint64_t value) {
  BitWriter w;
  elias_encode(value, w);
  BitReader r(w.bytes());
  std::string s;
  for (std::size_t i = 0; i < w.bit_length(); ++i) s.push_back(r.get() ? '1' : '0');
  return s;
}

int ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : std::bit_width(x - 1); }

}  // namespace cse2d
