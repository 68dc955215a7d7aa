#pragma once

#include <cstdint>
#include <vector>

#include "cse2d/bitio.hpp"

namespace cse2d {

/// 32-bit range coder for values drawn uniformly from [0, width).
///
/// The carry is resolved with a cached byte plus a run of pending 0xFF
/// bytes. Widths above 2^16 are coded as a high part followed by a 16-bit
/// low part. Width 1 costs nothing on either side.
class RangeEncoder {
 public:
  void encode(std::uint64_t value, std::uint64_t width);
  /// Emits the shortest tail that still pins the final interval and returns
  /// the coded bytes; a decoder must treat bytes past the end as zero.
  std::vector<std::uint8_t> finish();

 private:
  void encode_small(std::uint32_t value, std::uint32_t width);
  void shift_low();

  std::uint64_t low_ = 0;
  std::uint32_t range_ = 0xFFFFFFFFu;
  std::uint8_t cache_ = 0;
  std::uint64_t cache_size_ = 1;
  std::vector<std::uint8_t> out_;
};

class RangeDecoder {
 public:
  explicit RangeDecoder(BitReader& in);
  /// Throws InconsistentCounts when the code value falls outside [0, width).
  std::uint64_t decode(std::uint64_t width);

 private:
  std::uint32_t decode_small(std::uint32_t width);

  BitReader& in_;
  std::uint32_t code_ = 0;
  std::uint32_t range_ = 0xFFFFFFFFu;
};

}  // namespace cse2d
