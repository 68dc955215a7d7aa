#include "cse2d/block.hpp"

#include <algorithm>
#include <sstream>

#include "cse2d/error.hpp"

namespace cse2d {

Alphabet make_alphabet(int size) {
  if (size < 2 || size > 256) {
    throw Error(Errc::bad_spec, "alphabet size " + std::to_string(size) + " outside [2, 256]");
  }
  return Alphabet{size};
}

Block::Block(int rows, int cols, std::vector<Symbol> cells, Alphabet alphabet)
    : rows_(rows), cols_(cols), cells_(std::move(cells)), alphabet_(alphabet) {
  if (rows < 0 || cols < 0) throw Error(Errc::dimension_mismatch, "negative dimension");
  if (cells_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw Error(Errc::dimension_mismatch, "cell count does not match dimensions");
  }
  for (Symbol s : cells_) {
    if (s >= alphabet.size) {
      throw Error(Errc::symbol_out_of_range, "symbol " + std::to_string(s) + " >= J=" +
                                                 std::to_string(alphabet.size));
    }
  }
}

Block Block::empty(int rows, int cols, Alphabet alphabet) {
  if (rows != 0 && cols != 0) throw Error(Errc::dimension_mismatch, "empty block needs a zero dimension");
  return Block(rows, cols, {}, alphabet);
}

std::vector<Symbol> Block::column_major() const {
  std::vector<Symbol> out;
  out.reserve(cells_.size());
  for (int c = 0; c < cols_; ++c)
    for (int r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

std::string Block::to_string() const {
  if (empty()) return "lambda[" + std::to_string(rows_) + "," + std::to_string(cols_) + "]";
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (int c = 0; c < cols_; ++c) os << (c ? "," : "") << int(at(r, c));
    os << ']';
  }
  os << ']';
  return os.str();
}

std::strong_ordering compare_blocks(const Block& a, const Block& b) {
  if (auto o = a.rows() <=> b.rows(); o != 0) return o;
  if (auto o = a.cols() <=> b.cols(); o != 0) return o;
  for (int c = 0; c < a.cols(); ++c)
    for (int r = 0; r < a.rows(); ++r)
      if (auto o = a.at(r, c) <=> b.at(r, c); o != 0) return o;
  return std::strong_ordering::equal;
}

std::size_t BlockHash::operator()(const Block& b) const noexcept {
  std::size_t h = static_cast<std::size_t>(b.rows()) * 0x9E3779B97F4A7C15ull ^ static_cast<std::size_t>(b.cols());
  for (Symbol s : b.cells()) h = (h ^ s) * 0x100000001B3ull;
  return h;
}

Block make_block(const std::vector<std::vector<int>>& rows, Alphabet alphabet) {
  if (rows.empty()) return Block::empty(0, 0, alphabet);
  const std::size_t width = rows.front().size();
  std::vector<Symbol> cells;
  cells.reserve(rows.size() * width);
  for (const auto& row : rows) {
    if (row.size() != width) throw Error(Errc::ragged_rows, "rows have unequal length");
    for (int v : row) {
      if (v < 0 || v >= alphabet.size) {
        throw Error(Errc::symbol_out_of_range,
                    "symbol " + std::to_string(v) + " outside alphabet of size " + std::to_string(alphabet.size));
      }
      cells.push_back(static_cast<Symbol>(v));
    }
  }
  return Block(static_cast<int>(rows.size()), static_cast<int>(width), std::move(cells), alphabet);
}

Block make_block(std::initializer_list<std::initializer_list<int>> rows, Alphabet alphabet) {
  std::vector<std::vector<int>> v;
  for (auto r : rows) v.emplace_back(r);
  return make_block(v, alphabet);
}

Block torus_subblock(const Block& p, int i, int j, int k, int l) {
  const int m = p.rows(), n = p.cols();
  if (i < 0 || i >= m || j < 0 || j >= n) {
    throw Error(Errc::anchor_out_of_range, "anchor (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (k < 0 || l < 0 || k > 2 * m || l > 2 * n) {
    throw Error(Errc::anchor_out_of_range, "window larger than the doubled block");
  }
  if (k == 0 || l == 0) return Block::empty(k, l, p.alphabet());
  std::vector<Symbol> cells;
  cells.reserve(static_cast<std::size_t>(k) * l);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < l; ++c) cells.push_back(p.at((i + r) % m, (j + c) % n));
  return Block(k, l, std::move(cells), p.alphabet());
}

Block concat(const Block& s, const Block& t, Axis axis) {
  if (axis == Axis::columns) {
    if (s.rows() != t.rows()) throw Error(Errc::dimension_mismatch, "column concat needs equal heights");
    const int rows = s.rows(), cols = s.cols() + t.cols();
    std::vector<Symbol> cells;
    cells.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < s.cols(); ++c) cells.push_back(s.at(r, c));
      for (int c = 0; c < t.cols(); ++c) cells.push_back(t.at(r, c));
    }
    return Block(rows, cols, std::move(cells), s.alphabet());
  }
  if (s.cols() != t.cols()) throw Error(Errc::dimension_mismatch, "row concat needs equal widths");
  std::vector<Symbol> cells(s.cells().begin(), s.cells().end());
  cells.insert(cells.end(), t.cells().begin(), t.cells().end());
  return Block(s.rows() + t.rows(), s.cols(), std::move(cells), s.alphabet());
}

namespace {

Block window(const Block& b, int r0, int c0, int rows, int cols) {
  std::vector<Symbol> cells;
  cells.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) cells.push_back(b.at(r0 + r, c0 + c));
  return Block(rows, cols, std::move(cells), b.alphabet());
}

}  // namespace

Block trim(const Block& b, TrimSide side) {
  const bool row_trim = side == TrimSide::last_row || side == TrimSide::first_row;
  if (row_trim ? b.rows() < 1 : b.cols() < 1) {
    throw Error(Errc::empty_block, "cannot trim " + b.to_string());
  }
  switch (side) {
    case TrimSide::last_row: return window(b, 0, 0, b.rows() - 1, b.cols());
    case TrimSide::first_row: return window(b, 1, 0, b.rows() - 1, b.cols());
    case TrimSide::last_col: return window(b, 0, 0, b.rows(), b.cols() - 1);
    case TrimSide::first_col: return window(b, 0, 1, b.rows(), b.cols() - 1);
  }
  return b;
}

Block middle(const Block& b, Axis axis) {
  if (axis == Axis::columns) {
    if (b.cols() < 2) return Block::empty(b.rows(), 0, b.alphabet());
    return window(b, 0, 1, b.rows(), b.cols() - 2);
  }
  if (b.rows() < 2) return Block::empty(0, b.cols(), b.alphabet());
  return window(b, 1, 0, b.rows() - 2, b.cols());
}

Block first_column(const Block& b) { return window(b, 0, 0, b.rows(), 1); }
Block last_column(const Block& b) { return window(b, 0, b.cols() - 1, b.rows(), 1); }
Block first_row(const Block& b) { return window(b, 0, 0, 1, b.cols()); }
Block last_row(const Block& b) { return window(b, b.rows() - 1, 0, 1, b.cols()); }

ShiftClass shift_class(const Block& p) {
  if (p.empty()) throw Error(Errc::empty_block, "shift class of an empty block");
  ShiftClass out;
  out.members.reserve(p.area());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) out.members.push_back(torus_subblock(p, i, j, p.rows(), p.cols()));
  std::sort(out.members.begin(), out.members.end(), BlockLess{});
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  return out;
}

bool is_primitive(const Block& p) {
  if (p.empty()) throw Error(Errc::empty_block, "primitivity of an empty block");
  // p is primitive iff no non-zero torus shift maps it onto itself.
  const int m = p.rows(), n = p.cols();
  for (int di = 0; di < m; ++di) {
    for (int dj = 0; dj < n; ++dj) {
      if (di == 0 && dj == 0) continue;
      bool same = true;
      for (int i = 0; i < m && same; ++i)
        for (int j = 0; j < n && same; ++j) same = p.at(i, j) == p.at((i + di) % m, (j + dj) % n);
      if (same) return false;
    }
  }
  return true;
}

std::uint64_t rank_of(const Block& p) {
  auto cls = shift_class(p);
  if (cls.members.size() != p.area()) throw Error(Errc::not_primitive, p.to_string());
  auto it = std::lower_bound(cls.members.begin(), cls.members.end(), p, BlockLess{});
  return static_cast<std::uint64_t>(it - cls.members.begin());
}

Block select_by_rank(const Block& q, std::uint64_t r) {
  auto cls = shift_class(q);
  if (r >= cls.members.size()) {
    throw Error(Errc::rank_out_of_range, std::to_string(r) + " >= " + std::to_string(cls.members.size()));
  }
  return cls.members[r];
}

}  // namespace cse2d
