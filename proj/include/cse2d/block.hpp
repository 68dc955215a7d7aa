#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cse2d {

using Symbol = std::uint8_t;

/// Source alphabet {0, ..., size-1}, 2 <= size <= 256.
struct Alphabet {
  int size = 2;

  friend bool operator==(Alphabet, Alphabet) = default;
};

Alphabet make_alphabet(int size);

enum class Axis { columns, rows };

enum class TrimSide { last_row, first_row, last_col, first_col };

/// An m x n grid of symbols stored row-major.
///
/// Blocks with zero rows or zero columns are empty; they keep their other
/// dimension so that e.g. a 0x3 block and a 3x0 block stay distinguishable,
/// but hold no cells. Equality compares dimensions and cells; the alphabet
/// is carried along for validation only.
class Block {
 public:
  Block() = default;
  Block(int rows, int cols, std::vector<Symbol> cells, Alphabet alphabet);

  static Block empty(int rows, int cols, Alphabet alphabet);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  std::size_t area() const noexcept { return cells_.size(); }
  Alphabet alphabet() const noexcept { return alphabet_; }

  Symbol at(int r, int c) const { return cells_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<const Symbol> cells() const noexcept { return cells_; }

  /// Cells flattened column by column, each column top to bottom.
  std::vector<Symbol> column_major() const;

  std::string to_string() const;

  friend bool operator==(const Block& a, const Block& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Symbol> cells_;
  Alphabet alphabet_{};
};

/// Total order used everywhere a canonical order of blocks is needed:
/// dimensions first (height, then width), then the column-major cell string.
std::strong_ordering compare_blocks(const Block& a, const Block& b);

struct BlockLess {
  bool operator()(const Block& a, const Block& b) const { return compare_blocks(a, b) < 0; }
};

struct BlockHash {
  std::size_t operator()(const Block& b) const noexcept;
};

struct ShiftClass {
  std::vector<Block> members;  // sorted by BlockLess, duplicates removed
};

Block make_block(const std::vector<std::vector<int>>& rows, Alphabet alphabet);
Block make_block(std::initializer_list<std::initializer_list<int>> rows, Alphabet alphabet = {});

/// Reads a k x l window of the flat torus of p anchored at (i, j), zero-based.
/// k and l may reach 2m and 2n.
Block torus_subblock(const Block& p, int i, int j, int k, int l);

Block concat(const Block& s, const Block& t, Axis axis);

Block trim(const Block& b, TrimSide side);

/// Drops the first and last column (columns) or first and last row (rows);
/// a dimension below 2 collapses to an empty block.
Block middle(const Block& b, Axis axis);

Block first_column(const Block& b);
Block last_column(const Block& b);
Block first_row(const Block& b);
Block last_row(const Block& b);

ShiftClass shift_class(const Block& p);
bool is_primitive(const Block& p);

/// Zero-based position of p inside its sorted shift class.
std::uint64_t rank_of(const Block& p);

/// Member of q's shift class at position r.
Block select_by_rank(const Block& q, std::uint64_t r);

}  // namespace cse2d
