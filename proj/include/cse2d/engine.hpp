#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cse2d/block.hpp"
#include "cse2d/counting.hpp"
#include "cse2d/inference.hpp"

namespace cse2d {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

/// One positive-count block of a given size, identified by its position in
/// the canonical order of that size.
///
/// Blocks are keyed by (left, last):
///   1 x 1     left = none,              last = the symbol itself
///   k x 1     left = top k-1 rows,      last = bottom symbol (1 x 1 id)
///   k x l     left = first l-1 columns, last = last column (k x 1 id)
/// Comparing keys lexicographically reproduces the column-major block order,
/// so ids are ranks among the positive blocks of the size.
struct CountNode {
  NodeId left = kNoNode;
  NodeId last = kNoNode;
  NodeId sigma_c = kNoNode;     // block without its first column, same height
  NodeId pi_r = kNoNode;        // block without its last row, same width
  NodeId sigma_r = kNoNode;     // block without its first row
  NodeId first_col = kNoNode;   // k x 1
  NodeId top_row = kNoNode;     // 1 x l
  NodeId bottom_row = kNoNode;  // 1 x l
  Count count = 0;
};

class SizeTable {
 public:
  std::vector<CountNode> nodes;
  // Nodes sharing a left part are contiguous; children of parent id p are
  // [child_offsets[p], child_offsets[p + 1]).
  std::vector<NodeId> child_offsets;

  std::pair<NodeId, NodeId> children(NodeId parent) const;
  NodeId find(NodeId left, NodeId last) const;
  Count count(NodeId id) const { return nodes[static_cast<std::size_t>(id)].count; }
};

struct EngineCandidate {
  CountNode node;  // count unused until finalized
  Disposition disposition;
  std::optional<Interval> column_interval;
  std::optional<Interval> row_interval;
  std::optional<Count> value;
};

/// Replays the size-by-size count inference over an m x n flat torus.
///
/// The same object drives the encoder (which supplies true counts for
/// transmitted candidates) and the decoder (which supplies decoded ones).
/// Sizes are visited height-major; for each size call begin_size(), then
/// set_value() for every transmit candidate in order, then finish_size().
class CountEngine {
 public:
  CountEngine(int m, int n, Alphabet alphabet);

  int rows() const noexcept { return m_; }
  int cols() const noexcept { return n_; }
  Count total() const noexcept { return static_cast<Count>(m_) * n_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  const CodingOrder& order() const noexcept { return order_; }

  bool done() const noexcept { return step_ >= order_.sizes.size(); }
  SizeKey current() const { return order_.sizes.at(step_); }

  std::span<const EngineCandidate> begin_size();
  void set_value(std::size_t index, Count value);
  void finish_size();

  const SizeTable& table(int k, int l) const;
  NodeId single_id(Symbol s) const { return by_symbol_[s]; }

  /// Row-major cells of the node at size k x l.
  std::vector<Symbol> materialize(int k, int l, NodeId id) const;

 private:
  SizeTable& mutable_table(int k, int l);
  void generate(int k, int l);
  void add_candidate(int k, int l, const CountNode& node);
  void resolve(int k, int l);
  void build_table(int k, int l);
  NodeId walk_column(const std::vector<Symbol>& cells) const;
  NodeId walk_row(const std::vector<Symbol>& cells) const;
  NodeId largest_member(int length, Axis axis) const;

  int m_;
  int n_;
  Alphabet alphabet_;
  CodingOrder order_;
  std::size_t step_ = 0;
  bool open_ = false;
  std::vector<std::vector<SizeTable>> tables_;  // [k][l]
  std::vector<NodeId> by_symbol_;
  std::vector<NodeId> excluded_col_;  // x(k,1) per height, kNoNode when it does not occur
  std::vector<NodeId> excluded_row_;  // x(1,l) per width
  std::vector<EngineCandidate> cands_;
};

}  // namespace cse2d
