#include "cse2d/verify.hpp"

#include <random>

#include "cse2d/codec.hpp"
#include "cse2d/counting.hpp"
#include "cse2d/error.hpp"
#include "cse2d/inference.hpp"
#include "cse2d/oracle.hpp"

namespace cse2d {

void SuiteResult::fail(const std::string& what) {
  if (failures++ == 0) first_failure = what;
}

Block random_block(std::uint64_t seed, int min_size, int max_size, int J) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(min_size, max_size);
  std::uniform_int_distribution<int> sym(0, J - 1);
  const int m = dim(rng), n = dim(rng);
  std::vector<Symbol> cells(static_cast<std::size_t>(m) * n);
  for (auto& c : cells) c = static_cast<Symbol>(sym(rng));
  return Block(m, n, std::move(cells), Alphabet{J});
}

Block random_primitive_block(std::uint64_t seed, int min_size, int max_size, int J) {
  std::mt19937_64 seeds(seed);
  for (;;) {
    Block b = random_block(seeds(), min_size, max_size, J);
    if (is_primitive(b)) return b;
  }
}

namespace {

void check_roundtrip(const Block& p, SuiteResult& r) {
  ++r.checked;
  try {
    if (decompress_bytes(compress_bytes(p)) != p) r.fail("mismatch on " + p.to_string());
  } catch (const std::exception& e) {
    r.fail(p.to_string() + ": " + e.what());
  }
}

}  // namespace

SuiteResult roundtrip_exhaustive(int m, int n, int J) {
  SuiteResult r;
  r.name = "roundtrip exhaustive " + std::to_string(m) + "x" + std::to_string(n);
  oracle::check_enumerable(m, n, Alphabet{J});
  std::uint64_t total = 1;
  for (int i = 0; i < m * n; ++i) total *= static_cast<std::uint64_t>(J);
  for (std::uint64_t code = 0; code < total; ++code) {
    check_roundtrip(oracle::block_from_code(static_cast<std::uint32_t>(code), m, n, Alphabet{J}), r);
  }
  return r;
}

SuiteResult roundtrip_random(int count, int max_size, std::uint64_t seed, const std::vector<int>& alphabets) {
  SuiteResult r;
  r.name = "roundtrip random";
  std::mt19937_64 seeds(seed);
  for (int t = 0; t < count; ++t) {
    const int J = alphabets[static_cast<std::size_t>(t) % alphabets.size()];
    check_roundtrip(random_block(seeds(), 1, max_size, J), r);
  }
  return r;
}

SuiteResult identity_suite(int count, int max_size, std::uint64_t seed) {
  SuiteResult r;
  r.name = "count identities";
  std::mt19937_64 seeds(seed);
  for (int t = 0; t < count; ++t) {
    const Block p = random_primitive_block(seeds(), 1, max_size, 2);
    const auto report = verify_identities(build_ledger(p));
    ++r.checked;
    if (!report.ok()) r.fail(p.to_string() + ": " + report.violations.front().describe());
  }
  return r;
}

SuiteResult interval_suite(int count, int max_size, std::uint64_t seed) {
  SuiteResult r;
  r.name = "interval soundness";
  std::mt19937_64 seeds(seed);
  for (int t = 0; t < count; ++t) {
    const Block p = random_primitive_block(seeds(), 1, max_size, 2);
    const CountLedger ledger = build_ledger(p);
    const CodingOrder order = coding_order(p.rows(), p.cols(), p.alphabet());
    for (const auto& [k, l] : order.sizes) {
      for (const auto& cand : candidates(k, l, ledger, order)) {
        const Block& b = cand.block;
        const Count truth = ledger.count(b);
        for (Axis axis : {Axis::columns, Axis::rows}) {
          if ((axis == Axis::columns ? b.cols() : b.rows()) < 2) continue;
          ++r.checked;
          const Interval iv = feasible_interval(b, axis, ledger);
          if (!iv.contains(truth)) {
            r.fail(b.to_string() + " count " + std::to_string(truth) + " outside interval");
          } else if (!condition(b, axis, ledger) && truth != iv.hi) {
            r.fail(b.to_string() + " condition fails but count is not the forced minimum");
          }
        }
      }
    }
  }
  return r;
}

LemmaSweep lemma_sweep(int m, int n) {
  LemmaSweep s;
  s.lemma1.name = "class-size bound sweep";
  s.lemma2.name = "forced-step class sweep";
  oracle::Universe u(m, n, Alphabet{2});
  for (const auto& p : u.primitive()) {
    for (int k = 1; k <= m; ++k) {
      for (int l = 1; l <= n; ++l) {
        ++s.lemma1.checked;
        const auto res = oracle::lemma1(p, k, l);
        if (!res.holds) {
          s.lemma1.fail(p.to_string() + " at " + std::to_string(k) + "x" + std::to_string(l));
        }
      }
    }
    const auto l2 = oracle::lemma2_check(p);
    s.lemma2.checked += l2.steps_checked;
    for (std::size_t i = 0; i < l2.violations; ++i) s.lemma2.fail(p.to_string());
  }
  return s;
}

}  // namespace cse2d
