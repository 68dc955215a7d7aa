#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cse2d/block.hpp"

namespace cse2d {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const noexcept { return failures == 0 && checked > 0; }
  void fail(const std::string& what);
};

/// Uniform random block, dimensions uniform in [min_size, max_size].
Block random_block(std::uint64_t seed, int min_size, int max_size, int J);
/// Random block that is primitive, resampling from the same seed stream.
Block random_primitive_block(std::uint64_t seed, int min_size, int max_size, int J);

/// decompress(compress(p)) == p for all J^(mn) blocks.
SuiteResult roundtrip_exhaustive(int m, int n, int J = 2);
/// Sizes 1..max_size per side, alphabets cycled from the list.
SuiteResult roundtrip_random(int count, int max_size, std::uint64_t seed, const std::vector<int>& alphabets = {2, 4, 16});

/// Sum and extension identities on the full ledger of random primitive blocks.
SuiteResult identity_suite(int count, int max_size, std::uint64_t seed);
/// Every candidate's true count lies in both feasible intervals, and equals
/// the forced value whenever a condition fails.
SuiteResult interval_suite(int count, int max_size, std::uint64_t seed);

struct LemmaSweep {
  SuiteResult lemma1;
  SuiteResult lemma2;
};
/// All primitive binary m x n blocks, all 1 <= k <= m, 1 <= l <= n.
LemmaSweep lemma_sweep(int m, int n);

}  // namespace cse2d
