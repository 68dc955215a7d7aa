#pragma once

#include <cstdint>

#include "cse2d/block.hpp"
#include "cse2d/codec.hpp"
#include "cse2d/counting.hpp"

namespace cse2d {

/// Ideal codeword length of one-dimensional CSE run over the columns of p,
/// each column read as one symbol of an alphabet of size J^m. Nothing is
/// emitted; only lengths and transmission counts are measured.
struct BaselineReport {
  int m = 0;
  int n = 0;
  int middle_limit = 0;  // floor(log2 log2 n); lengths 2..limit use 1/I
  double e_n = 0;        // |E(n)|
  double single_bits = 0;
  double middle_bits = 0;
  double long_bits = 0;
  double rank_bits = 0;
  std::int64_t transmitted_singles = 0;
  std::int64_t transmitted_middle = 0;
  std::int64_t transmitted_long = 0;
  Count single_count_sum = 0;

  bool middle_regime_empty() const noexcept { return middle_limit < 2; }
  double total() const noexcept { return e_n + single_bits + middle_bits + long_bits + rank_bits; }
};

BaselineReport conv_lengths(const Block& p, int m_cap = 8);

struct Comparison {
  BaselineReport conventional;
  CodewordStats proposed;
  double ratio = 0;  // conventional total over proposed total
};

Comparison compare(const Block& p, int m_cap = 8);

}  // namespace cse2d
