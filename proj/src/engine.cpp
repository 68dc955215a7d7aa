#include "cse2d/engine.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "cse2d/error.hpp"

namespace cse2d {

std::pair<NodeId, NodeId> SizeTable::children(NodeId parent) const {
  if (parent < 0 || static_cast<std::size_t>(parent) + 1 >= child_offsets.size()) return {0, 0};
  return {child_offsets[parent], child_offsets[parent + 1]};
}

NodeId SizeTable::find(NodeId left, NodeId last) const {
  if (left == kNoNode || last == kNoNode) return kNoNode;
  auto [b, e] = children(left);
  auto first = nodes.begin() + b, end = nodes.begin() + e;
  auto it = std::lower_bound(first, end, last, [](const CountNode& n, NodeId v) { return n.last < v; });
  if (it == end || it->last != last) return kNoNode;
  return static_cast<NodeId>(it - nodes.begin());
}

CountEngine::CountEngine(int m, int n, Alphabet alphabet)
    : m_(m),
      n_(n),
      alphabet_(alphabet),
      order_(coding_order(m, n, alphabet)),
      tables_(static_cast<std::size_t>(m) + 1, std::vector<SizeTable>(static_cast<std::size_t>(n) + 1)),
      by_symbol_(static_cast<std::size_t>(alphabet.size), kNoNode),
      excluded_col_(static_cast<std::size_t>(m) + 1, kNoNode),
      excluded_row_(static_cast<std::size_t>(n) + 1, kNoNode) {
  if (m < 1 || n < 1) throw Error(Errc::empty_block, "count engine needs a non-empty source");
}

const SizeTable& CountEngine::table(int k, int l) const { return tables_.at(k).at(l); }
SizeTable& CountEngine::mutable_table(int k, int l) { return tables_.at(k).at(l); }

std::span<const EngineCandidate> CountEngine::begin_size() {
  if (done()) throw Error(Errc::ledger_incomplete, "all sizes already processed");
  const auto [k, l] = current();
  if (l == 1 && k >= 4) {
    for (int r = 1; r <= k - 3; ++r)
      for (int w = 2; w <= n_; ++w) tables_[r][w] = SizeTable{};
  }
  generate(k, l);
  open_ = true;
  return cands_;
}

void CountEngine::set_value(std::size_t index, Count value) {
  auto& c = cands_.at(index);
  if (c.disposition.kind != DispositionKind::transmit) {
    throw Error(Errc::value_out_of_interval, "candidate is not transmitted");
  }
  if (!c.disposition.interval.contains(value)) {
    throw Error(Errc::value_out_of_interval, std::to_string(value) + " outside [" +
                                                 std::to_string(c.disposition.interval.lo) + "," +
                                                 std::to_string(c.disposition.interval.hi) + "]");
  }
  c.value = value;
}

void CountEngine::finish_size() {
  if (!open_) throw Error(Errc::ledger_incomplete, "finish_size without begin_size");
  const auto [k, l] = current();
  for (const auto& c : cands_) {
    if (c.disposition.kind == DispositionKind::transmit && !c.value) {
      throw Error(Errc::ledger_incomplete, "transmitted value missing");
    }
  }
  resolve(k, l);
  build_table(k, l);
  open_ = false;
  ++step_;
}

void CountEngine::add_candidate(int k, int l, const CountNode& node) {
  const Count mn = total();
  EngineCandidate c;
  c.node = node;
  std::optional<AxisParts> col, row;
  if (l >= 2) {
    const SizeTable& prev = table(k, l - 1);
    const CountNode& u = prev.nodes[node.left];
    col = AxisParts{u.count, prev.count(node.sigma_c), l == 2 ? mn : table(k, l - 2).count(u.sigma_c), false};
    const NodeId x = excluded_col_[k];
    col->excluded = x != kNoNode && (node.first_col == x || node.last == x);
  }
  if (k >= 2) {
    const SizeTable& upper = table(k - 1, l);
    const CountNode& top = upper.nodes[node.pi_r];
    row = AxisParts{top.count, upper.count(node.sigma_r), k == 2 ? mn : table(k - 2, l).count(top.sigma_r), false};
    const NodeId x = excluded_row_[l];
    row->excluded = x != kNoNode && (node.top_row == x || node.bottom_row == x);
  }
  c.disposition = decide(col, row);
  if (c.disposition.kind == DispositionKind::zero) return;
  if (col) c.column_interval = axis_interval(*col);
  if (row) c.row_interval = axis_interval(*row);
  if (c.disposition.kind == DispositionKind::forced) c.value = c.disposition.value;
  cands_.push_back(std::move(c));
}

void CountEngine::generate(int k, int l) {
  cands_.clear();
  const Count mn = total();

  if (k == 1 && l == 1) {
    for (int s = 0; s < alphabet_.size; ++s) {
      EngineCandidate c;
      c.node.last = s;
      c.disposition = decide_single(static_cast<Symbol>(s), alphabet_, mn);
      cands_.push_back(std::move(c));
    }
    return;
  }

  const SizeTable& singles = table(1, 1);
  const auto single_count = static_cast<NodeId>(singles.nodes.size());

  if (l == 1) {
    // Columns: b = e/v/g grows downward from its top k-1 rows.
    const SizeTable& up = table(k - 1, 1);
    for (NodeId u = 0; u < static_cast<NodeId>(up.nodes.size()); ++u) {
      const CountNode& un = up.nodes[u];
      auto emit = [&](NodeId g, NodeId sigma_r) {
        CountNode node;
        node.left = u;
        node.last = g;
        node.pi_r = u;
        node.sigma_r = sigma_r;
        node.top_row = un.top_row;
        node.bottom_row = g;
        add_candidate(k, l, node);
      };
      if (k == 2) {
        for (NodeId g = 0; g < single_count; ++g) emit(g, g);
      } else {
        auto [b, e] = up.children(un.sigma_r);
        for (NodeId t = b; t < e; ++t) emit(up.nodes[t].last, t);
      }
    }
    return;
  }

  const SizeTable& prev = table(k, l - 1);
  if (k == 1) {
    // Rows: b = a:w:c grows rightward.
    for (NodeId u = 0; u < static_cast<NodeId>(prev.nodes.size()); ++u) {
      const CountNode& un = prev.nodes[u];
      auto emit = [&](NodeId c, NodeId sigma_c) {
        CountNode node;
        node.left = u;
        node.last = c;
        node.sigma_c = sigma_c;
        node.first_col = un.first_col;
        add_candidate(k, l, node);
      };
      if (l == 2) {
        for (NodeId c = 0; c < single_count; ++c) emit(c, c);
      } else {
        auto [b, e] = prev.children(un.sigma_c);
        for (NodeId t = b; t < e; ++t) emit(prev.nodes[t].last, t);
      }
    }
    return;
  }

  const SizeTable& cols = table(k, 1);
  const SizeTable& upper = table(k - 1, l);
  std::vector<NodeId> exts;
  for (NodeId u = 0; u < static_cast<NodeId>(prev.nodes.size()); ++u) {
    const CountNode& un = prev.nodes[u];
    exts.clear();
    // Extensions allowed by the column join, or by the row join, whichever
    // list is shorter; the remaining parts are checked below.
    std::size_t by_column = 0;
    std::pair<NodeId, NodeId> col_range{0, 0};
    if (l == 2) {
      by_column = cols.nodes.size();
    } else {
      col_range = prev.children(un.sigma_c);
      by_column = static_cast<std::size_t>(col_range.second - col_range.first);
    }
    auto [rb, re] = upper.children(un.pi_r);
    std::size_t by_row = 0;
    for (NodeId t = rb; t < re && by_row < by_column; ++t) {
      auto [cb, ce] = cols.children(upper.nodes[t].last);
      by_row += static_cast<std::size_t>(ce - cb);
    }
    if (by_row < by_column) {
      for (NodeId t = rb; t < re; ++t) {
        auto [cb, ce] = cols.children(upper.nodes[t].last);
        for (NodeId c = cb; c < ce; ++c) exts.push_back(c);
      }
    } else if (l == 2) {
      for (NodeId c = 0; c < static_cast<NodeId>(cols.nodes.size()); ++c) exts.push_back(c);
    } else {
      for (NodeId t = col_range.first; t < col_range.second; ++t) exts.push_back(prev.nodes[t].last);
    }
    for (NodeId c : exts) {
      const CountNode& cn = cols.nodes[c];
      CountNode node;
      node.left = u;
      node.last = c;
      node.sigma_c = l == 2 ? c : prev.find(un.sigma_c, c);
      if (node.sigma_c == kNoNode) continue;
      node.pi_r = upper.find(un.pi_r, cn.pi_r);
      node.sigma_r = upper.find(un.sigma_r, cn.sigma_r);
      if (node.pi_r == kNoNode || node.sigma_r == kNoNode) continue;
      node.first_col = un.first_col;
      node.top_row = upper.nodes[node.pi_r].top_row;
      node.bottom_row = upper.nodes[node.sigma_r].bottom_row;
      add_candidate(k, l, node);
    }
  }
}

void CountEngine::resolve(int k, int l) {
  const Count mn = total();
  struct FamilyGroup {
    const SizeTable* parents;
    NodeId CountNode::*key;
  };
  std::vector<FamilyGroup> groups;
  if (k == 1 && l == 1) {
    // single family rooted at the empty block
  } else {
    if (l >= 2) {
      groups.push_back({&table(k, l - 1), &CountNode::left});
      groups.push_back({&table(k, l - 1), &CountNode::sigma_c});
    }
    if (k >= 2) {
      groups.push_back({&table(k - 1, l), &CountNode::pi_r});
      groups.push_back({&table(k - 1, l), &CountNode::sigma_r});
    }
  }

  std::vector<Count> parent;
  std::vector<std::size_t> base;
  if (groups.empty()) {
    parent.push_back(mn);
    base.push_back(0);
  }
  for (const auto& g : groups) {
    base.push_back(parent.size());
    for (const auto& node : g.parents->nodes) parent.push_back(node.count);
  }
  const std::size_t families = parent.size();
  const std::size_t per = std::max<std::size_t>(groups.size(), 1);
  const std::size_t n_cands = cands_.size();

  std::vector<std::uint32_t> fam_of(n_cands * per);
  std::vector<std::uint32_t> offsets(families + 1, 0);
  for (std::size_t i = 0; i < n_cands; ++i) {
    for (std::size_t g = 0; g < per; ++g) {
      const std::size_t f = groups.empty() ? 0 : base[g] + static_cast<std::size_t>(cands_[i].node.*(groups[g].key));
      fam_of[i * per + g] = static_cast<std::uint32_t>(f);
      ++offsets[f + 1];
    }
  }
  for (std::size_t f = 0; f < families; ++f) offsets[f + 1] += offsets[f];
  std::vector<std::uint32_t> members(offsets.back());
  {
    std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < n_cands; ++i)
      for (std::size_t g = 0; g < per; ++g) members[fill[fam_of[i * per + g]]++] = static_cast<std::uint32_t>(i);
  }

  std::vector<Count> known(families, 0);
  std::vector<std::uint32_t> unknown(families, 0);
  for (std::size_t i = 0; i < n_cands; ++i) {
    for (std::size_t g = 0; g < per; ++g) {
      const auto f = fam_of[i * per + g];
      if (cands_[i].value) {
        known[f] += *cands_[i].value;
      } else {
        ++unknown[f];
      }
    }
  }
  std::vector<std::uint32_t> work;
  for (std::size_t f = 0; f < families; ++f)
    if (unknown[f] == 1) work.push_back(static_cast<std::uint32_t>(f));
  while (!work.empty()) {
    const auto f = work.back();
    work.pop_back();
    if (unknown[f] != 1) continue;
    std::uint32_t target = 0;
    for (auto j = offsets[f]; j < offsets[f + 1]; ++j) {
      if (!cands_[members[j]].value) {
        target = members[j];
        break;
      }
    }
    const Count v = parent[f] - known[f];
    if (v < 0) throw Error(Errc::inconsistent_counts, "extension family exceeds its parent count");
    cands_[target].value = v;
    for (std::size_t g = 0; g < per; ++g) {
      const auto h = fam_of[target * per + g];
      --unknown[h];
      known[h] += v;
      if (unknown[h] == 1) work.push_back(h);
    }
  }

  const std::string where = "size (" + std::to_string(k) + "," + std::to_string(l) + ")";
  for (const auto& c : cands_) {
    if (!c.value) throw Error(Errc::underdetermined_counts, where);
    if (c.column_interval && !c.column_interval->contains(*c.value)) {
      throw Error(Errc::inconsistent_counts, where + ": count outside column interval");
    }
    if (c.row_interval && !c.row_interval->contains(*c.value)) {
      throw Error(Errc::inconsistent_counts, where + ": count outside row interval");
    }
  }
  for (std::size_t f = 0; f < families; ++f) {
    if (known[f] != parent[f]) throw Error(Errc::inconsistent_counts, where + ": family sum mismatch");
  }
}

void CountEngine::build_table(int k, int l) {
  SizeTable& t = mutable_table(k, l);
  t = SizeTable{};
  std::size_t parent_size = 0;
  if (l >= 2) {
    parent_size = table(k, l - 1).nodes.size();
  } else if (k >= 2) {
    parent_size = table(k - 1, 1).nodes.size();
  }
  Count sum = 0;
  for (const auto& c : cands_) {
    if (*c.value == 0) continue;
    CountNode node = c.node;
    node.count = *c.value;
    sum += node.count;
    const auto id = static_cast<NodeId>(t.nodes.size());
    if (l == 1) node.first_col = id;
    if (k == 1) node.top_row = node.bottom_row = id;
    if (k == 1 && l == 1) by_symbol_[node.last] = id;
    t.nodes.push_back(node);
  }
  if (sum != total()) throw Error(Errc::inconsistent_counts, "counts of one size do not sum to mn");
  if (!(k == 1 && l == 1)) {
    t.child_offsets.assign(parent_size + 1, 0);
    for (const auto& node : t.nodes) ++t.child_offsets[static_cast<std::size_t>(node.left) + 1];
    for (std::size_t p = 0; p < parent_size; ++p) t.child_offsets[p + 1] += t.child_offsets[p];
  }
  if (l == 1) excluded_col_[k] = largest_member(k, Axis::columns);
  if (k == 1 && l == n_) {
    for (int w = 1; w <= n_; ++w) excluded_row_[w] = largest_member(w, Axis::rows);
  }
  cands_.clear();
}

NodeId CountEngine::walk_column(const std::vector<Symbol>& cells) const {
  NodeId id = by_symbol_[cells[0]];
  for (std::size_t h = 2; h <= cells.size() && id != kNoNode; ++h) {
    id = table(static_cast<int>(h), 1).find(id, by_symbol_[cells[h - 1]]);
  }
  return id;
}

NodeId CountEngine::walk_row(const std::vector<Symbol>& cells) const {
  NodeId id = by_symbol_[cells[0]];
  for (std::size_t w = 2; w <= cells.size() && id != kNoNode; ++w) {
    id = table(1, static_cast<int>(w)).find(id, by_symbol_[cells[w - 1]]);
  }
  return id;
}

NodeId CountEngine::largest_member(int length, Axis axis) const {
  const auto top = static_cast<Symbol>(alphabet_.size - 1);
  std::vector<Symbol> cells{top};
  if (length >= 3) {
    const int inner = length - 2;
    const SizeTable& t = axis == Axis::columns ? table(inner, 1) : table(1, inner);
    if (t.nodes.empty()) throw Error(Errc::inconsistent_counts, "no block of interior size occurs");
    const auto id = static_cast<NodeId>(t.nodes.size() - 1);
    auto mid = axis == Axis::columns ? materialize(inner, 1, id) : materialize(1, inner, id);
    cells.insert(cells.end(), mid.begin(), mid.end());
  }
  if (length >= 2) cells.push_back(top);
  return axis == Axis::columns ? walk_column(cells) : walk_row(cells);
}

std::vector<Symbol> CountEngine::materialize(int k, int l, NodeId id) const {
  const SizeTable& singles = table(1, 1);
  auto column = [&](int height, NodeId col) {
    std::vector<Symbol> out(static_cast<std::size_t>(height));
    for (int h = height; h >= 2; --h) {
      const CountNode& node = table(h, 1).nodes.at(static_cast<std::size_t>(col));
      out[h - 1] = static_cast<Symbol>(singles.nodes.at(static_cast<std::size_t>(node.last)).last);
      col = node.left;
    }
    out[0] = static_cast<Symbol>(singles.nodes.at(static_cast<std::size_t>(col)).last);
    return out;
  };
  std::vector<NodeId> col_ids(static_cast<std::size_t>(l));
  for (int w = l; w >= 2; --w) {
    const CountNode& node = table(k, w).nodes.at(static_cast<std::size_t>(id));
    col_ids[w - 1] = node.last;
    id = node.left;
  }
  col_ids[0] = id;
  std::vector<Symbol> cells(static_cast<std::size_t>(k) * l);
  for (int c = 0; c < l; ++c) {
    const auto col = column(k, col_ids[c]);
    for (int r = 0; r < k; ++r) cells[static_cast<std::size_t>(r) * l + c] = col[r];
  }
  return cells;
}

}  // namespace cse2d
