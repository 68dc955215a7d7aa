#include "cse2d/counting.hpp"

#include <set>

#include "cse2d/error.hpp"

namespace cse2d {

namespace {

std::string size_str(int k, int l) { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; }

}  // namespace

CountLedger::CountLedger(int m, int n, Alphabet alphabet) : m_(m), n_(n), alphabet_(alphabet) {}

bool CountLedger::is_finalized(int k, int l) const {
  if (k == 0 || l == 0) return true;
  auto it = finalized_.find({k, l});
  return it != finalized_.end() && it->second;
}

bool CountLedger::has_size(int k, int l) const { return tables_.count({k, l}) != 0; }

void CountLedger::open_size(int k, int l) {
  tables_[{k, l}];
  finalized_[{k, l}] = false;
}

void CountLedger::finalize(int k, int l) {
  auto& t = mutable_table(k, l);
  for (const auto& [b, v] : t) {
    if (!v) throw Error(Errc::underdetermined_counts, b.to_string() + " still pending at " + size_str(k, l));
  }
  finalized_[{k, l}] = true;
}

void CountLedger::set_count(const Block& b, Count value) {
  auto& t = tables_[{b.rows(), b.cols()}];
  finalized_.try_emplace({b.rows(), b.cols()}, false);
  t[b] = value;
}

void CountLedger::set_pending(const Block& b) {
  auto& t = tables_[{b.rows(), b.cols()}];
  finalized_.try_emplace({b.rows(), b.cols()}, false);
  t[b] = std::nullopt;
}

Count CountLedger::count(const Block& b) const {
  if (b.empty()) return total();
  if (!is_finalized(b.rows(), b.cols())) {
    throw Error(Errc::ledger_incomplete, "size " + size_str(b.rows(), b.cols()) + " not finalized");
  }
  const auto& t = tables_.at({b.rows(), b.cols()});
  auto it = t.find(b);
  return it == t.end() ? 0 : *it->second;
}

std::optional<Count> CountLedger::peek(const Block& b) const {
  if (b.empty()) return total();
  auto ti = tables_.find({b.rows(), b.cols()});
  if (ti == tables_.end()) return std::nullopt;
  auto it = ti->second.find(b);
  if (it == ti->second.end()) {
    if (is_finalized(b.rows(), b.cols())) return 0;
    return std::nullopt;
  }
  return it->second;
}

const CountLedger::Table& CountLedger::table(int k, int l) const {
  auto it = tables_.find({k, l});
  if (it == tables_.end()) throw Error(Errc::ledger_incomplete, "no table for size " + size_str(k, l));
  return it->second;
}

CountLedger::Table& CountLedger::mutable_table(int k, int l) {
  auto it = tables_.find({k, l});
  if (it == tables_.end()) throw Error(Errc::ledger_incomplete, "no table for size " + size_str(k, l));
  return it->second;
}

std::vector<Block> CountLedger::positive(int k, int l) const {
  if (!is_finalized(k, l)) throw Error(Errc::ledger_incomplete, "size " + size_str(k, l) + " not finalized");
  std::vector<Block> out;
  if (k == 0 || l == 0) {
    out.push_back(Block::empty(k, l, alphabet_));
    return out;
  }
  for (const auto& [b, v] : table(k, l))
    if (v && *v > 0) out.push_back(b);
  return out;
}

Count count(const Block& u, const Block& p) {
  const int m = p.rows(), n = p.cols();
  if (u.rows() > m || u.cols() > n) {
    throw Error(Errc::oversize_query, u.to_string() + " larger than source " + size_str(m, n));
  }
  if (u.empty()) return static_cast<Count>(m) * n;
  Count hits = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      bool match = true;
      for (int r = 0; r < u.rows() && match; ++r)
        for (int c = 0; c < u.cols(); ++c)
          if (p.at((i + r) % m, (j + c) % n) != u.at(r, c)) {
            match = false;
            break;
          }
      hits += match;
    }
  }
  return hits;
}

CountLedger build_ledger_any(const Block& p) {
  const int m = p.rows(), n = p.cols();
  CountLedger ledger(m, n, p.alphabet());
  for (int k = 1; k <= m; ++k) {
    for (int l = 1; l <= n; ++l) {
      ledger.open_size(k, l);
      auto& t = ledger.mutable_table(k, l);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
          auto& slot = t[torus_subblock(p, i, j, k, l)];
          slot = slot.value_or(0) + 1;
        }
      ledger.finalize(k, l);
    }
  }
  return ledger;
}

CountLedger build_ledger(const Block& p) {
  if (p.empty() || !is_primitive(p)) throw Error(Errc::not_primitive, p.to_string());
  return build_ledger_any(p);
}

std::string IdentityViolation::describe() const {
  static const char* names[] = {"sum", "column-prefix", "column-suffix", "row-prefix", "row-suffix"};
  return std::string(names[static_cast<int>(kind)]) + " identity at " + size_str(size.rows, size.cols) +
         (block.empty() ? std::string() : " for " + block.to_string()) + ": expected " +
         std::to_string(expected) + ", got " + std::to_string(actual);
}

namespace {

// Checks N(v) = sum of N over one-step extensions of v along an axis, for
// every block v of the smaller size that either occurs or is extended.
void check_extensions(const CountLedger& ledger, int k, int l, Axis axis, IdentityReport& report) {
  using Kind = IdentityViolation::Kind;
  const int pk = axis == Axis::rows ? k - 1 : k;
  const int pl = axis == Axis::columns ? l - 1 : l;
  if (!ledger.is_finalized(pk, pl)) return;
  std::map<Block, Count, BlockLess> prefix_sum, suffix_sum;
  const TrimSide drop_last = axis == Axis::columns ? TrimSide::last_col : TrimSide::last_row;
  const TrimSide drop_first = axis == Axis::columns ? TrimSide::first_col : TrimSide::first_row;
  for (const auto& [b, v] : ledger.table(k, l)) {
    if (!v || *v == 0) continue;
    prefix_sum[trim(b, drop_last)] += *v;
    suffix_sum[trim(b, drop_first)] += *v;
  }
  std::set<Block, BlockLess> parents;
  for (const auto& b : ledger.positive(pk, pl)) parents.insert(b);
  for (const auto& [b, s] : prefix_sum) parents.insert(b);
  for (const auto& [b, s] : suffix_sum) parents.insert(b);
  for (const auto& v : parents) {
    const Count expected = ledger.count(v);
    const Count pre = prefix_sum.count(v) ? prefix_sum.at(v) : 0;
    const Count suf = suffix_sum.count(v) ? suffix_sum.at(v) : 0;
    if (pre != expected) {
      report.violations.push_back(
          {axis == Axis::columns ? Kind::column_prefix : Kind::row_prefix, {k, l}, v, expected, pre});
    }
    if (suf != expected) {
      report.violations.push_back(
          {axis == Axis::columns ? Kind::column_suffix : Kind::row_suffix, {k, l}, v, expected, suf});
    }
  }
}

}  // namespace

IdentityReport verify_identities(const CountLedger& ledger) {
  IdentityReport report;
  const Count mn = ledger.total();
  for (int k = 1; k <= ledger.source_rows(); ++k) {
    for (int l = 1; l <= ledger.source_cols(); ++l) {
      if (!ledger.has_size(k, l) || !ledger.is_finalized(k, l)) continue;
      Count sum = 0;
      for (const auto& [b, v] : ledger.table(k, l)) sum += v.value_or(0);
      if (sum != mn) {
        report.violations.push_back(
            {IdentityViolation::Kind::sum, {k, l}, Block::empty(k, 0, ledger.alphabet()), mn, sum});
      }
      check_extensions(ledger, k, l, Axis::columns, report);
      check_extensions(ledger, k, l, Axis::rows, report);
    }
  }
  return report;
}

bool in_b(const Block& b, const CountLedger& ledger) {
  const Block mid_rows = middle(b, Axis::rows);
  const Block mid_cols = middle(b, Axis::columns);
  return ledger.count(mid_rows) > 0 && ledger.count(mid_cols) > 0;
}

bool is_core(const Block& w, Axis axis, const CountLedger& ledger) {
  const int k = axis == Axis::columns ? w.rows() : w.rows() + 1;
  const int l = axis == Axis::columns ? w.cols() + 1 : w.cols();
  if (k == 0 || l == 0) return false;
  if (!ledger.is_finalized(k, l)) {
    throw Error(Errc::ledger_incomplete, "extension size " + size_str(k, l) + " not finalized");
  }
  const TrimSide drop_first = axis == Axis::columns ? TrimSide::first_col : TrimSide::first_row;
  const TrimSide drop_last = axis == Axis::columns ? TrimSide::last_col : TrimSide::last_row;
  int before = 0, after = 0;
  for (const auto& b : ledger.positive(k, l)) {
    if (trim(b, drop_first) == w) ++before;
    if (trim(b, drop_last) == w) ++after;
  }
  return before >= 2 && after >= 2;
}

BlockClass CodingOrder::classify(int k, int l) const {
  if (k == 0 || l == 0) return BlockClass::b0;
  if (k == 1 && l == 1) return BlockClass::b1;
  if (k <= K && l <= L) return BlockClass::b2;
  return BlockClass::b3;
}

namespace {

// J^e <= x, without overflow.
bool power_at_most(std::int64_t base, std::int64_t e, std::int64_t x) {
  std::int64_t acc = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (acc > x / base) return false;
    acc *= base;
  }
  return acc <= x;
}

}  // namespace

int block_size_limit(std::int64_t x, Alphabet alphabet) {
  // t^2 <= log_J log_J x  <=>  J^(J^(t^2)) <= x
  const std::int64_t J = alphabet.size;
  int t = 1;
  while (true) {
    const std::int64_t sq = static_cast<std::int64_t>(t + 1) * (t + 1);
    if (!power_at_most(J, sq, 63)) break;
    std::int64_t inner = 1;
    for (std::int64_t i = 0; i < sq; ++i) inner *= J;
    if (!power_at_most(J, inner, x)) break;
    ++t;
  }
  return t;
}

CodingOrder coding_order(int m, int n, Alphabet alphabet) {
  CodingOrder order;
  order.K = block_size_limit(m, alphabet);
  order.L = block_size_limit(n, alphabet);
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= n; ++l) order.sizes.push_back({k, l});
  return order;
}

Decomposition decompose(const Block& b, Axis axis) {
  if (axis == Axis::columns) {
    if (b.cols() < 2) throw Error(Errc::axis_unavailable, "width < 2: " + b.to_string());
    return {first_column(b), middle(b, Axis::columns), last_column(b)};
  }
  if (b.rows() < 2) throw Error(Errc::axis_unavailable, "height < 2: " + b.to_string());
  return {first_row(b), middle(b, Axis::rows), last_row(b)};
}

std::vector<Candidate> candidates(int k, int l, const CountLedger& ledger, const CodingOrder& order) {
  const Alphabet alpha = ledger.alphabet();
  std::set<Block, BlockLess> found;
  if (k * l == 1) {
    for (int s = 0; s < alpha.size; ++s) found.insert(Block(1, 1, {static_cast<Symbol>(s)}, alpha));
  } else {
    if (l >= 2) {
      if (!ledger.is_finalized(k, l - 1)) throw Error(Errc::ledger_incomplete, "size " + size_str(k, l - 1));
      const auto parts = ledger.positive(k, l - 1);
      std::map<Block, std::vector<const Block*>, BlockLess> by_prefix;
      for (const auto& y : parts) by_prefix[trim(y, TrimSide::last_col)].push_back(&y);
      for (const auto& x : parts) {
        auto it = by_prefix.find(trim(x, TrimSide::first_col));
        if (it == by_prefix.end()) continue;
        for (const Block* y : it->second) found.insert(concat(x, last_column(*y), Axis::columns));
      }
    }
    if (k >= 2) {
      if (!ledger.is_finalized(k - 1, l)) throw Error(Errc::ledger_incomplete, "size " + size_str(k - 1, l));
      const auto parts = ledger.positive(k - 1, l);
      std::map<Block, std::vector<const Block*>, BlockLess> by_prefix;
      for (const auto& y : parts) by_prefix[trim(y, TrimSide::last_row)].push_back(&y);
      for (const auto& x : parts) {
        auto it = by_prefix.find(trim(x, TrimSide::first_row));
        if (it == by_prefix.end()) continue;
        for (const Block* y : it->second) found.insert(concat(x, last_row(*y), Axis::rows));
      }
    }
  }
  std::vector<Candidate> out;
  out.reserve(found.size());
  for (const auto& b : found) {
    Candidate c;
    c.block = b;
    c.in_b = in_b(b, ledger);
    c.cls = order.classify(k, l);
    if (l >= 2) c.columns = decompose(b, Axis::columns);
    if (k >= 2) c.rows = decompose(b, Axis::rows);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cse2d
