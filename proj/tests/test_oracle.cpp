#include <algorithm>
#include <cmath>

#include "cse2d/error.hpp"
#include "cse2d/oracle.hpp"
#include "doctest.h"

using namespace cse2d;

namespace {

const Block p2 = make_block({{0, 1}, {1, 1}});

}  // namespace

TEST_CASE("block codes round trip") {
  for (std::uint32_t c = 0; c < 81; ++c) {
    const Block b = oracle::block_from_code(c, 2, 2, Alphabet{3});
    REQUIRE(oracle::block_code(b) == c);
  }
  // Column-major, first cell most significant, so codes sort like blocks.
  CHECK(oracle::block_from_code(1, 2, 2, Alphabet{2}) == make_block({{0, 0}, {0, 1}}));
  CHECK(oracle::block_from_code(2, 2, 2, Alphabet{2}) == make_block({{0, 1}, {0, 0}}));
  CHECK(oracle::block_from_code(4, 2, 2, Alphabet{2}) == make_block({{0, 0}, {1, 0}}));
}

TEST_CASE("primitive 2x2 binary blocks") {
  oracle::Universe u(2, 2, Alphabet{2});
  // Independent count: a 2x2 block is fixed by a row swap iff both columns
  // are constant, by a column swap iff both rows are constant.
  std::size_t expect = 0;
  for (std::uint32_t c = 0; c < 16; ++c) {
    const Block b = oracle::block_from_code(c, 2, 2, Alphabet{2});
    const bool cols_const = b.at(0, 0) == b.at(1, 0) && b.at(0, 1) == b.at(1, 1);
    const bool rows_const = b.at(0, 0) == b.at(0, 1) && b.at(1, 0) == b.at(1, 1);
    const bool diag = b.at(0, 0) == b.at(1, 1) && b.at(0, 1) == b.at(1, 0);
    if (!cols_const && !rows_const && !diag) ++expect;
  }
  CHECK(u.primitive().size() == expect);
  CHECK(expect == 8);
}

TEST_CASE("type classes") {
  CHECK(oracle::type_class(p2, 2, 2).members.size() == 4);
  CHECK(oracle::type_class(p2, 0, 0).members.size() == 8);
  const auto t11 = oracle::type_class(p2, 1, 1);
  CHECK(t11.members.size() == 4);  // three ones, one zero
  CHECK(std::binary_search(t11.members.begin(), t11.members.end(), p2, BlockLess{}));

  const Block q = make_block({{0, 1, 1}, {1, 0, 1}, {0, 0, 1}});
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      const auto a = oracle::type_class(q, k, l).members;
      if (k < 3) {
        const auto b = oracle::type_class(q, k + 1, l).members;
        CHECK(std::includes(a.begin(), a.end(), b.begin(), b.end(), BlockLess{}));
      }
      if (l < 3) {
        const auto b = oracle::type_class(q, k, l + 1).members;
        CHECK(std::includes(a.begin(), a.end(), b.begin(), b.end(), BlockLess{}));
      }
    }
  CHECK(oracle::type_class(q, 3, 3).members.size() == 9);
  CHECK_THROWS_AS(oracle::type_class(make_block({{0, 1, 0, 1, 1}, {1, 1, 0, 0, 0}, {0, 0, 0, 0, 0},
                                                 {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}),
                                     1, 1),
                  Error);
}

TEST_CASE("prefix classes shrink to the shift class") {
  const Block q = make_block({{0, 1, 1}, {1, 0, 1}});
  const auto order = oracle::b_order(q);
  CHECK(order.front().empty());
  const auto sizes = oracle::prefix_class_sizes(q, order);
  REQUIRE(sizes.size() == order.size() + 1);
  for (std::size_t i = 1; i < sizes.size(); ++i) CHECK(sizes[i] <= sizes[i - 1]);
  CHECK(sizes.back() == 6);
  auto full = oracle::prefix_class(q, order.size()).members;
  const auto shifts = shift_class(q).members;
  CHECK(full == shifts);
  const auto mid = oracle::prefix_class(q, order.size() / 2).members;
  CHECK(std::includes(mid.begin(), mid.end(), full.begin(), full.end(), BlockLess{}));
}

TEST_CASE("class-size bound is tight at full size") {
  const Block q = make_block({{0, 1, 1}, {1, 0, 1}});
  const auto r = oracle::lemma1(q, 2, 3);
  CHECK(r.log2_class_size == doctest::Approx(std::log2(6.0)));
  CHECK(r.bound == doctest::Approx(std::log2(6.0)));
  CHECK(r.holds);
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 3; ++l) CHECK(oracle::lemma1_check(q, k, l));
}

TEST_CASE("forced steps and telescoping on small sources") {
  for (const auto& q : {p2, make_block({{0, 1, 1}, {1, 0, 1}}), make_block({{0, 0, 1}, {0, 1, 1}, {1, 0, 1}})}) {
    CHECK(oracle::lemma2_check(q).violations == 0);
    const auto r = oracle::exact_ratio_lengths(q);
    CHECK(r.l3_coded == doctest::Approx(r.expected).epsilon(1e-9));
    CHECK(r.l3_all == doctest::Approx(r.expected).epsilon(1e-9));
    const auto rev = oracle::exact_ratio_lengths(q, true);
    CHECK(rev.l3_all == doctest::Approx(r.l3_all).epsilon(1e-9));
  }
}
