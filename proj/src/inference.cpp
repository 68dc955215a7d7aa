#include "cse2d/inference.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "cse2d/error.hpp"

namespace cse2d {

Interval axis_interval(const AxisParts& parts) {
  return {std::max<Count>(0, parts.prefix + parts.suffix - parts.middle), std::min(parts.prefix, parts.suffix)};
}

bool axis_condition(const AxisParts& parts) {
  return std::min({parts.prefix, parts.suffix, parts.middle - parts.prefix, parts.middle - parts.suffix}) >= 1;
}

Disposition decide(const std::optional<AxisParts>& columns, const std::optional<AxisParts>& rows) {
  Disposition d;
  for (const auto* parts : {&columns, &rows}) {
    if (*parts && ((*parts)->prefix == 0 || (*parts)->suffix == 0)) {
      d.kind = DispositionKind::zero;
      d.axis = parts == &columns ? Axis::columns : Axis::rows;
      return d;
    }
  }
  std::optional<Interval> col_iv, row_iv;
  if (columns) col_iv = axis_interval(*columns);
  if (rows) row_iv = axis_interval(*rows);
  for (const auto& iv : {col_iv, row_iv}) {
    if (iv && iv->lo > iv->hi) throw Error(Errc::inconsistent_counts, "empty feasibility interval");
  }
  if (col_iv && col_iv->degenerate()) {
    if (row_iv && !row_iv->contains(col_iv->lo)) {
      throw Error(Errc::inconsistent_counts, "column-forced value outside row interval");
    }
    return {DispositionKind::forced, *col_iv, col_iv->lo, Axis::columns};
  }
  if (row_iv && row_iv->degenerate()) {
    if (col_iv && !col_iv->contains(row_iv->lo)) {
      throw Error(Errc::inconsistent_counts, "row-forced value outside column interval");
    }
    return {DispositionKind::forced, *row_iv, row_iv->lo, Axis::rows};
  }
  if (columns && columns->excluded) return {DispositionKind::derive_by_sum, *col_iv, 0, Axis::columns};
  if (rows && rows->excluded) return {DispositionKind::derive_by_sum, *row_iv, 0, Axis::rows};
  Interval iv = col_iv ? *col_iv : *row_iv;
  if (col_iv && row_iv) iv = {std::max(col_iv->lo, row_iv->lo), std::min(col_iv->hi, row_iv->hi)};
  if (iv.lo > iv.hi) throw Error(Errc::inconsistent_counts, "column and row intervals are disjoint");
  return {DispositionKind::transmit, iv, 0, col_iv ? Axis::columns : Axis::rows};
}

Disposition decide_single(Symbol s, Alphabet alphabet, Count mn) {
  const Interval iv{0, mn - 1};
  if (s == alphabet.size - 1) return {DispositionKind::derive_by_sum, iv, 0, Axis::columns};
  return {DispositionKind::transmit, iv, 0, Axis::columns};
}

namespace {

AxisParts parts_of(const Block& b, Axis axis, const CountLedger& ledger) {
  const auto d = decompose(b, axis);
  const Block prefix = trim(b, axis == Axis::columns ? TrimSide::last_col : TrimSide::last_row);
  const Block suffix = trim(b, axis == Axis::columns ? TrimSide::first_col : TrimSide::first_row);
  AxisParts parts{ledger.count(prefix), ledger.count(suffix), ledger.count(d.middle), false};
  const int length = axis == Axis::columns ? b.rows() : b.cols();
  const Block x = excluded_element(length, axis, ledger);
  parts.excluded = d.first == x || d.last == x;
  return parts;
}

}  // namespace

Interval feasible_interval(const Block& b, Axis axis, const CountLedger& ledger) {
  decompose(b, axis);
  const Block prefix = trim(b, axis == Axis::columns ? TrimSide::last_col : TrimSide::last_row);
  const Block suffix = trim(b, axis == Axis::columns ? TrimSide::first_col : TrimSide::first_row);
  return axis_interval({ledger.count(prefix), ledger.count(suffix), ledger.count(middle(b, axis)), false});
}

bool condition(const Block& b, Axis axis, const CountLedger& ledger) {
  decompose(b, axis);
  const Block prefix = trim(b, axis == Axis::columns ? TrimSide::last_col : TrimSide::last_row);
  const Block suffix = trim(b, axis == Axis::columns ? TrimSide::first_col : TrimSide::first_row);
  return axis_condition({ledger.count(prefix), ledger.count(suffix), ledger.count(middle(b, axis)), false});
}

Block excluded_element(int length, Axis axis, const CountLedger& ledger) {
  const Alphabet alpha = ledger.alphabet();
  const auto top = static_cast<Symbol>(alpha.size - 1);
  std::vector<Symbol> cells;
  cells.push_back(top);
  if (length >= 3) {
    const auto inner = axis == Axis::columns ? ledger.positive(length - 2, 1) : ledger.positive(1, length - 2);
    if (inner.empty()) throw Error(Errc::inconsistent_counts, "no occurring block of interior size");
    const auto& largest = inner.back();
    cells.insert(cells.end(), largest.cells().begin(), largest.cells().end());
  }
  if (length >= 2) cells.push_back(top);
  if (axis == Axis::columns) return Block(length, 1, std::move(cells), alpha);
  return Block(1, length, std::move(cells), alpha);
}

Disposition disposition(const Block& b, const CountLedger& ledger) {
  if (b.rows() == 1 && b.cols() == 1) return decide_single(b.at(0, 0), ledger.alphabet(), ledger.total());
  std::optional<AxisParts> col, row;
  if (b.cols() >= 2) col = parts_of(b, Axis::columns, ledger);
  if (b.rows() >= 2) row = parts_of(b, Axis::rows, ledger);
  return decide(col, row);
}

namespace {

struct Family {
  Count parent = 0;
  std::vector<Block> members;
};

}  // namespace

void finalize_size(int k, int l, CountLedger& ledger) {
  auto& table = ledger.mutable_table(k, l);
  const Count mn = ledger.total();

  // Forced and zero values never depend on same-size counts.
  for (auto& [b, v] : table) {
    const auto d = disposition(b, ledger);
    if (d.kind == DispositionKind::zero) {
      if (v && *v != 0) throw Error(Errc::inconsistent_counts, b.to_string() + " must be zero");
      v = 0;
    } else if (d.kind == DispositionKind::forced) {
      if (v && *v != d.value) throw Error(Errc::inconsistent_counts, b.to_string() + " must equal forced value");
      v = d.value;
    }
  }

  std::vector<Family> families;
  if (k == 1 && l == 1) {
    Family f{mn, {}};
    for (const auto& [b, v] : table) f.members.push_back(b);
    families.push_back(std::move(f));
  }
  auto add_axis = [&](Axis axis) {
    const TrimSide sides[2] = {axis == Axis::columns ? TrimSide::last_col : TrimSide::last_row,
                               axis == Axis::columns ? TrimSide::first_col : TrimSide::first_row};
    for (TrimSide side : sides) {
      std::map<Block, Family, BlockLess> by_parent;
      for (const auto& [b, v] : table) by_parent[trim(b, side)].members.push_back(b);
      const int pk = axis == Axis::rows ? k - 1 : k;
      const int pl = axis == Axis::columns ? l - 1 : l;
      for (const auto& parent : ledger.positive(pk, pl)) by_parent[parent];
      for (auto& [parent, f] : by_parent) {
        f.parent = ledger.count(parent);
        families.push_back(std::move(f));
      }
    }
  };
  if (k * l > 1) {
    if (l >= 2) add_axis(Axis::columns);
    if (k >= 2) add_axis(Axis::rows);
  }

  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& f : families) {
      Count known = 0;
      const Block* unknown = nullptr;
      int pending = 0;
      for (const auto& b : f.members) {
        const auto& v = table.at(b);
        if (v) {
          known += *v;
        } else {
          ++pending;
          unknown = &b;
        }
      }
      if (pending == 1) {
        const Count value = f.parent - known;
        if (value < 0) throw Error(Errc::inconsistent_counts, unknown->to_string() + " derived negative");
        table.at(*unknown) = value;
        progress = true;
      }
    }
  }

  for (const auto& [b, v] : table) {
    if (!v) throw Error(Errc::underdetermined_counts, b.to_string() + " unresolved");
  }
  for (const auto& f : families) {
    Count sum = 0;
    for (const auto& b : f.members) sum += *table.at(b);
    if (sum != f.parent) throw Error(Errc::inconsistent_counts, "extension family does not sum to its parent");
  }
  for (const auto& [b, v] : table) {
    if (k * l == 1) continue;
    if (l >= 2 && !feasible_interval(b, Axis::columns, ledger).contains(*v)) {
      throw Error(Errc::inconsistent_counts, b.to_string() + " outside column interval");
    }
    if (k >= 2 && !feasible_interval(b, Axis::rows, ledger).contains(*v)) {
      throw Error(Errc::inconsistent_counts, b.to_string() + " outside row interval");
    }
  }
  ledger.finalize(k, l);
}

}  // namespace cse2d
