#include <algorithm>
#include <random>

#include "cse2d/counting.hpp"
#include "cse2d/error.hpp"
#include "cse2d/oracle.hpp"
#include "cse2d/verify.hpp"
#include "doctest.h"

using namespace cse2d;

namespace {

const Block p2 = make_block({{0, 1}, {1, 1}});
const Block p4 = make_block({{0, 1, 1}, {1, 1, 1}});

std::map<std::string, Count> table_of(const CountLedger& ledger, int k, int l) {
  std::map<std::string, Count> out;
  for (const auto& b : ledger.positive(k, l)) out[b.to_string()] = ledger.count(b);
  return out;
}

// Oracle-side table: every k x l block with a positive anchor-scan count.
std::map<std::string, Count> brute_table(const Block& p, int k, int l) {
  std::map<std::string, Count> out;
  for (std::uint32_t code = 0; code < (1u << (k * l)); ++code) {
    const Block u = oracle::block_from_code(code, k, l, p.alphabet());
    if (const Count c = oracle::brute_count(u, p)) out[u.to_string()] = c;
  }
  return out;
}

}  // namespace

TEST_CASE("count by anchor scan") {
  CHECK(count(Block::empty(0, 0, Alphabet{2}), p2) == 4);
  CHECK(count(make_block({{1, 1}}), p2) == 2);
  CHECK(count(make_block({{0, 0}}), p2) == 0);
  CHECK(count(make_block({{1, 0, 1}}), p4) == oracle::brute_count(make_block({{1, 0, 1}}), p4));
  CHECK(count(make_block({{1, 0, 1}}), p4) == 1);
  CHECK_THROWS_AS(count(make_block({{0, 0, 0}}), p2), Error);
}

TEST_CASE("build_ledger tables agree with the oracle") {
  const auto l2 = build_ledger(p2);
  CHECK(l2.count(make_block({{0}})) == 1);
  CHECK(l2.count(make_block({{1}})) == 3);
  const auto full = l2.positive(2, 2);
  CHECK(full.size() == 4);
  for (const auto& b : full) CHECK(l2.count(b) == 1);

  // The 1x2 table of p4 has three positive blocks: [0,1]:1, [1,0]:1, [1,1]:4.
  const auto l4 = build_ledger(p4);
  CHECK(table_of(l4, 1, 2) == brute_table(p4, 1, 2));
  CHECK(l4.count(make_block({{0, 1}})) == 1);
  CHECK(l4.count(make_block({{1, 0}})) == 1);
  CHECK(l4.count(make_block({{1, 1}})) == 4);
  CHECK(l4.count(make_block({{0, 0}})) == 0);
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 3; ++l) CHECK(table_of(l4, k, l) == brute_table(p4, k, l));

  try {
    build_ledger(make_block({{0, 1}, {0, 1}}));
    FAIL("expected NotPrimitive");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_primitive);
  }
}

TEST_CASE("ledger lookups on unfinished sizes fail") {
  CountLedger ledger(2, 2, Alphabet{2});
  ledger.open_size(1, 1);
  ledger.set_count(make_block({{0}}), 1);
  ledger.set_pending(make_block({{1}}));
  CHECK_FALSE(ledger.peek(make_block({{1}})).has_value());
  CHECK_THROWS_AS(ledger.count(make_block({{0}})), Error);
  CHECK_THROWS_AS(ledger.finalize(1, 1), Error);
}

TEST_CASE("identities hold and a corrupted count is reported") {
  const auto report = verify_identities(build_ledger(p2));
  CHECK(report.ok());

  auto ledger = build_ledger(p2);
  ledger.mutable_table(1, 1)[make_block({{1}})] = 2;
  const auto bad = verify_identities(ledger);
  REQUIRE_FALSE(bad.ok());
  bool sum_at_singles = false;
  for (const auto& v : bad.violations) {
    if (v.kind == IdentityViolation::Kind::sum && v.size == SizeKey{1, 1}) sum_at_singles = true;
  }
  CHECK(sum_at_singles);
}

TEST_CASE("candidates and B membership") {
  const auto l2 = build_ledger(p2);
  const auto order = coding_order(2, 2, Alphabet{2});
  CHECK(candidates(1, 2, l2, order).size() == 4);
  // Every candidate has positive parts along each available axis, and no
  // positive block is missing.
  const auto c22 = candidates(2, 2, l2, order);
  for (const auto& b : l2.positive(2, 2)) {
    CHECK(std::any_of(c22.begin(), c22.end(), [&](const Candidate& c) { return c.block == b; }));
  }

  const auto l4 = build_ledger(p4);
  const auto c13 = candidates(1, 3, l4, coding_order(2, 3, Alphabet{2}));
  CHECK(std::any_of(c13.begin(), c13.end(), [](const Candidate& c) { return c.block == make_block({{1, 0, 1}}); }));

  CHECK(in_b(make_block({{0}}), l2));
  CHECK(in_b(make_block({{0, 0}}), l2));
}

TEST_CASE("cores") {
  const auto l2 = build_ledger(p2);
  CHECK(is_core(Block::empty(1, 0, Alphabet{2}), Axis::columns, l2));
  // In p4 the only left extension of [0] is [1,0].
  const auto l4 = build_ledger(p4);
  CHECK_FALSE(is_core(make_block({{0}}), Axis::columns, l4));
  CHECK(is_core(make_block({{1}}), Axis::columns, l4));
}

TEST_CASE("coding order") {
  CHECK(block_size_limit(16, Alphabet{2}) == 1);
  CHECK(block_size_limit(65536, Alphabet{2}) == 2);
  CHECK(block_size_limit(65535, Alphabet{2}) == 1);
  CHECK(block_size_limit(2, Alphabet{2}) == 1);
  const auto o = coding_order(2, 2, Alphabet{2});
  REQUIRE(o.sizes.size() == 4);
  CHECK(o.sizes[0] == SizeKey{1, 1});
  CHECK(o.sizes[1] == SizeKey{1, 2});
  CHECK(o.sizes[2] == SizeKey{2, 1});
  CHECK(o.sizes[3] == SizeKey{2, 2});

  const auto big = coding_order(7, 5, Alphabet{3});
  for (std::size_t i = 0; i < big.sizes.size(); ++i) {
    const auto [k, l] = big.sizes[i];
    for (SizeKey dep : {SizeKey{k - 1, l}, SizeKey{k, l - 1}, SizeKey{k - 2, l}, SizeKey{k, l - 2}}) {
      if (dep.rows < 1 || dep.cols < 1) continue;
      const auto at = std::find(big.sizes.begin(), big.sizes.end(), dep);
      CHECK(static_cast<std::size_t>(at - big.sizes.begin()) < i);
    }
  }
}

TEST_CASE("anchor scan agrees with shift-class prefixes") {
  std::vector<Block> sources{p2, p4};
  for (int t = 0; t < 50; ++t) sources.push_back(random_primitive_block(100 + t, 4, 4, 2));
  for (const auto& p : sources) {
    for (int k = 0; k <= std::min(3, p.rows()); ++k) {
      for (int l = 0; l <= std::min(3, p.cols()); ++l) {
        for (std::uint32_t code = 0; code < (1u << (k * l)); ++code) {
          const Block u = k * l == 0 ? Block::empty(k, l, Alphabet{2}) : oracle::block_from_code(code, k, l, Alphabet{2});
          REQUIRE(count(u, p) == oracle::count_by_shift_class(u, p));
        }
      }
    }
  }
}

TEST_CASE("candidate lists stay polynomial") {
  for (int t = 0; t < 10; ++t) {
    const Block p = random_primitive_block(500 + t, 3, 7, t % 2 ? 4 : 2);
    const auto ledger = build_ledger(p);
    const auto order = coding_order(p.rows(), p.cols(), p.alphabet());
    const auto mn = static_cast<std::size_t>(p.area());
    const auto J = static_cast<std::size_t>(p.alphabet().size);
    for (const auto& [k, l] : order.sizes) {
      const auto c = candidates(k, l, ledger, order);
      CHECK(c.size() <= mn * mn + 2 * J * J * mn);
      for (const auto& b : ledger.positive(k, l)) {
        REQUIRE(std::any_of(c.begin(), c.end(), [&](const Candidate& x) { return x.block == b; }));
      }
    }
  }
}
