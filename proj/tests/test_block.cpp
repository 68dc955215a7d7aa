#include <algorithm>
#include <random>

#include "cse2d/block.hpp"
#include "cse2d/error.hpp"
#include "cse2d/oracle.hpp"
#include "doctest.h"

using namespace cse2d;

namespace {

const Block p2 = make_block({{0, 1}, {1, 1}});
const Block p4 = make_block({{0, 1, 1}, {1, 1, 1}});

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::bad_format;
}

std::string col_major(const Block& b) {
  std::string s;
  for (Symbol c : b.column_major()) s.push_back(static_cast<char>('0' + c));
  return s;
}

}  // namespace

TEST_CASE("make_block validates rows and symbols") {
  CHECK(p2.rows() == 2);
  CHECK(p2.cols() == 2);
  CHECK(p2.at(0, 1) == 1);
  CHECK(code_of([] { make_block({{0, 1}, {1}}); }) == Errc::ragged_rows);
  CHECK(code_of([] { make_block({{0, 2}}, Alphabet{2}); }) == Errc::symbol_out_of_range);
  CHECK(code_of([] { make_alphabet(1); }) == Errc::bad_spec);
}

TEST_CASE("torus_subblock wraps around both edges") {
  CHECK(torus_subblock(p2, 1, 1, 2, 2) == make_block({{1, 1}, {1, 0}}));
  CHECK(torus_subblock(p2, 0, 0, 0, 3).empty());
  CHECK(torus_subblock(p4, 0, 2, 1, 3) == make_block({{1, 0, 1}}));
  CHECK(torus_subblock(p2, 0, 0, 4, 4).rows() == 4);
  CHECK(code_of([] { torus_subblock(p2, 2, 0, 1, 1); }) == Errc::anchor_out_of_range);
  CHECK(code_of([] { torus_subblock(p2, 0, 0, 5, 1); }) == Errc::anchor_out_of_range);
}

TEST_CASE("concat and trim") {
  CHECK(concat(make_block({{0}, {1}}), make_block({{1}, {1}}), Axis::columns) == p2);
  CHECK(concat(make_block({{0, 1}}), make_block({{1, 1}}), Axis::rows) == p2);
  CHECK(code_of([] { concat(make_block({{0, 1}}), make_block({{1}, {1}}), Axis::columns); }) ==
        Errc::dimension_mismatch);

  CHECK(trim(p2, TrimSide::first_col) == make_block({{1}, {1}}));
  const Block e = trim(trim(p4, TrimSide::first_row), TrimSide::last_row);
  CHECK(e.empty());
  CHECK(e.rows() == 0);
  CHECK(e.cols() == 3);
  CHECK(trim(p4, TrimSide::last_col) == make_block({{0, 1}, {1, 1}}));
  CHECK(code_of([&] { trim(e, TrimSide::first_row); }) == Errc::empty_block);
}

TEST_CASE("shift class, primitivity and rank") {
  const auto cls = shift_class(p2);
  REQUIRE(cls.members.size() == 4);
  CHECK(col_major(cls.members[0]) == "0111");
  CHECK(col_major(cls.members[1]) == "1011");
  CHECK(col_major(cls.members[2]) == "1101");
  CHECK(col_major(cls.members[3]) == "1110");
  CHECK(shift_class(make_block({{0, 1}, {0, 1}})).members.size() == 2);
  CHECK(shift_class(make_block({{0}})).members.size() == 1);

  CHECK(is_primitive(p2));
  CHECK_FALSE(is_primitive(make_block({{0, 1}, {0, 1}})));
  CHECK(is_primitive(p4));

  CHECK(rank_of(p2) == 0);
  CHECK(select_by_rank(p2, 3) == make_block({{1, 1}, {1, 0}}));
  CHECK(code_of([] { select_by_rank(p2, 4); }) == Errc::rank_out_of_range);
  CHECK(code_of([] { rank_of(make_block({{0, 1}, {0, 1}})); }) == Errc::not_primitive);
}

TEST_CASE("rank round trip over every binary block up to 3x4") {
  std::size_t primitive = 0;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (std::uint32_t code = 0; code < (1u << (m * n)); ++code) {
        const Block p = oracle::block_from_code(code, m, n, Alphabet{2});
        const auto cls = shift_class(p);
        const bool prim = cls.members.size() == p.area();
        REQUIRE(is_primitive(p) == prim);
        if (!prim) continue;
        ++primitive;
        const auto r = rank_of(p);
        for (const auto& q : cls.members) {
          REQUIRE(select_by_rank(q, r) == p);
          REQUIRE(is_primitive(q));
        }
      }
    }
  }
  CHECK(primitive > 0);
}

TEST_CASE("anchored windows of a primitive block enumerate its class once each") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    std::vector<Symbol> cells(12);
    for (auto& c : cells) c = static_cast<Symbol>(rng() % 3);
    const Block p(3, 4, cells, Alphabet{3});
    if (!is_primitive(p)) continue;
    std::vector<Block> windows;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) windows.push_back(torus_subblock(p, i, j, 3, 4));
    std::sort(windows.begin(), windows.end(), BlockLess{});
    CHECK(windows == shift_class(p).members);
  }
}

TEST_CASE("concatenating the trimmed block and its last column restores it") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const int m = 1 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 4);
    std::vector<Symbol> cells(static_cast<std::size_t>(m) * n);
    for (auto& c : cells) c = static_cast<Symbol>(rng() % 2);
    const Block b(m, n, cells, Alphabet{2});
    CHECK(concat(trim(b, TrimSide::last_col), last_column(b), Axis::columns) == b);
    CHECK(concat(first_row(b), trim(b, TrimSide::first_row), Axis::rows) == b);
  }
}

TEST_CASE("column-major order compares dimensions first") {
  CHECK(compare_blocks(make_block({{1}}), make_block({{0, 0}})) < 0);
  CHECK(compare_blocks(make_block({{0, 1}, {1, 1}}), make_block({{1, 0}, {1, 1}})) < 0);
  CHECK(compare_blocks(make_block({{0, 1}}), make_block({{1, 0}})) < 0);
}
