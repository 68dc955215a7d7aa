#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cse2d/block.hpp"
#include "cse2d/counting.hpp"

namespace cse2d {

inline constexpr std::string_view kMagic = "2DCSE1";
inline constexpr std::uint8_t kVersion = 0x01;
inline constexpr std::size_t kHeaderBytes = 9;

struct Container {
  std::uint8_t version = kVersion;
  bool escape = false;
  Alphabet alphabet{};
  std::vector<std::uint8_t> payload;  // MSB-first, zero padded
  std::size_t payload_bits = 0;       // meaningful bits before padding, 0 when unknown

  std::vector<std::uint8_t> to_bytes() const;
  static Container from_bytes(std::span<const std::uint8_t> bytes);
};

struct CodewordStats {
  bool escape = false;
  int m = 0;
  int n = 0;
  int J = 2;
  double l0 = 0;  // E(m), E(n) and the rank
  double l1 = 0;  // singles
  double l2 = 0;  // blocks up to K x L
  double l3 = 0;  // larger blocks
  std::int64_t transmitted_b1 = 0;
  std::int64_t transmitted_b2 = 0;
  std::int64_t transmitted_b3 = 0;
  std::vector<std::pair<SizeKey, std::int64_t>> transmitted_per_size;  // sizes with at least one
  std::size_t payload_bits = 0;  // actual payload length after trimming

  double total() const noexcept { return l0 + l1 + l2 + l3; }
  /// Payload bits beyond the ideal codeword length.
  double flush_slack() const noexcept { return static_cast<double>(payload_bits) - total(); }
  double bits_per_symbol() const noexcept { return static_cast<double>(payload_bits) / (static_cast<double>(m) * n); }
};

struct CompressOptions {
  bool strict = false;  // throw NotPrimitive instead of escaping
};

Container compress(const Block& p, const CompressOptions& options = {}, CodewordStats* stats = nullptr);
Block decompress(const Container& c);
std::vector<std::uint8_t> compress_bytes(const Block& p, const CompressOptions& options = {},
                                         CodewordStats* stats = nullptr);
Block decompress_bytes(std::span<const std::uint8_t> bytes);

/// Length breakdown of the coded path; p must be primitive and at least 2x2.
CodewordStats stats(const Block& p);

}  // namespace cse2d
