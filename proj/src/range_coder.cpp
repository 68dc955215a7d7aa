#include "cse2d/range_coder.hpp"

#include "cse2d/error.hpp"

namespace cse2d {

namespace {
constexpr std::uint32_t kTop = 1u << 24;
constexpr std::uint64_t kSmall = 1u << 16;
}  // namespace

void RangeEncoder::encode(std::uint64_t value, std::uint64_t width) {
  if (width == 0 || value >= width) throw Error(Errc::value_out_of_interval, "range coder value outside width");
  if (width <= kSmall) {
    encode_small(static_cast<std::uint32_t>(value), static_cast<std::uint32_t>(width));
    return;
  }
  encode((value >> 16), ((width - 1) >> 16) + 1);
  encode_small(static_cast<std::uint32_t>(value & 0xFFFF), kSmall);
}

void RangeEncoder::encode_small(std::uint32_t value, std::uint32_t width) {
  if (width == 1) return;
  const std::uint32_t r = range_ / width;
  low_ += static_cast<std::uint64_t>(r) * value;
  range_ = r;
  while (range_ < kTop) {
    range_ <<= 8;
    shift_low();
  }
}

void RangeEncoder::shift_low() {
  if (static_cast<std::uint32_t>(low_) < 0xFF000000u || (low_ >> 32) != 0) {
    const auto carry = static_cast<std::uint8_t>(low_ >> 32);
    std::uint8_t temp = cache_;
    do {
      out_.push_back(static_cast<std::uint8_t>(temp + carry));
      temp = 0xFF;
    } while (--cache_size_ != 0);
    cache_ = static_cast<std::uint8_t>(low_ >> 24);
  }
  ++cache_size_;
  low_ = (low_ & 0x00FFFFFFu) << 8;
}

std::vector<std::uint8_t> RangeEncoder::finish() {
  // Any value in [low, low + range) decodes identically; take the one with
  // the most trailing zero bits so the tail can be trimmed.
  const std::uint64_t high = low_ + range_ - 1;
  for (int t = 40; t >= 0; --t) {
    const std::uint64_t mask = (std::uint64_t{1} << t) - 1;
    const std::uint64_t v = (low_ + mask) & ~mask;
    if (v >= low_ && v <= high) {
      low_ = v;
      break;
    }
  }
  for (int i = 0; i < 5; ++i) shift_low();
  std::vector<std::uint8_t> bytes(out_.begin() + 1, out_.end());  // leading byte is always zero
  while (!bytes.empty() && bytes.back() == 0) bytes.pop_back();
  return bytes;
}

RangeDecoder::RangeDecoder(BitReader& in) : in_(in) {
  for (int i = 0; i < 4; ++i) code_ = (code_ << 8) | in_.get_byte_or_zero();
}

std::uint64_t RangeDecoder::decode(std::uint64_t width) {
  if (width == 0) throw Error(Errc::inconsistent_counts, "empty coding interval");
  if (width <= kSmall) return decode_small(static_cast<std::uint32_t>(width));
  const std::uint64_t hi = decode(((width - 1) >> 16) + 1);
  const std::uint64_t v = (hi << 16) | decode_small(static_cast<std::uint32_t>(kSmall));
  if (v >= width) throw Error(Errc::inconsistent_counts, "decoded value outside interval");
  return v;
}

std::uint32_t RangeDecoder::decode_small(std::uint32_t width) {
  if (width == 1) return 0;
  const std::uint32_t r = range_ / width;
  const std::uint32_t v = code_ / r;
  if (v >= width) throw Error(Errc::inconsistent_counts, "decoded value outside interval");
  code_ -= r * v;
  range_ = r;
  while (range_ < kTop) {
    range_ <<= 8;
    code_ = (code_ << 8) | in_.get_byte_or_zero();
  }
  return v;
}

}  // namespace cse2d
