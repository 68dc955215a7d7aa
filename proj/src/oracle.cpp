#include "cse2d/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

#include "cse2d/error.hpp"

namespace cse2d::oracle {

void check_enumerable(int m, int n, Alphabet alphabet) {
  const double bits = static_cast<double>(m) * n * std::log2(static_cast<double>(alphabet.size));
  if (m < 1 || n < 1 || bits > 20.0 + 1e-12) {
    throw Error(Errc::too_large, std::to_string(m) + "x" + std::to_string(n) + " over J=" +
                                     std::to_string(alphabet.size) + " is beyond exhaustive enumeration");
  }
}

std::uint32_t block_code(const Block& u) {
  std::uint32_t code = 0;
  const auto J = static_cast<std::uint32_t>(u.alphabet().size);
  for (int c = 0; c < u.cols(); ++c)
    for (int r = 0; r < u.rows(); ++r) code = code * J + u.at(r, c);
  return code;
}

Block block_from_code(std::uint32_t code, int k, int l, Alphabet alphabet) {
  std::vector<Symbol> cells(static_cast<std::size_t>(k) * l);
  const auto J = static_cast<std::uint32_t>(alphabet.size);
  for (int c = l - 1; c >= 0; --c) {
    for (int r = k - 1; r >= 0; --r) {
      cells[static_cast<std::size_t>(r) * l + c] = static_cast<Symbol>(code % J);
      code /= J;
    }
  }
  return Block(k, l, std::move(cells), alphabet);
}

namespace {

std::uint32_t window_code(const Block& p, int i, int j, int k, int l) {
  std::uint32_t code = 0;
  const auto J = static_cast<std::uint32_t>(p.alphabet().size);
  for (int c = 0; c < l; ++c)
    for (int r = 0; r < k; ++r) code = code * J + p.at((i + r) % p.rows(), (j + c) % p.cols());
  return code;
}

std::vector<std::uint32_t> window_codes(const Block& p, int k, int l) {
  std::vector<std::uint32_t> codes;
  codes.reserve(p.area());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) codes.push_back(window_code(p, i, j, k, l));
  std::sort(codes.begin(), codes.end());
  return codes;
}

bool all_shifts_distinct(const Block& p) {
  auto codes = window_codes(p, p.rows(), p.cols());
  return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

Count count_in(const std::vector<std::uint32_t>& sorted, std::uint32_t code) {
  auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), code);
  return static_cast<Count>(hi - lo);
}

Universe& universe_for(int m, int n, Alphabet alphabet) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Universe>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{m, n, alphabet.size}];
  if (!slot) slot = std::make_unique<Universe>(m, n, alphabet);
  return *slot;
}

}  // namespace

Count brute_count(const Block& u, const Block& p) {
  if (u.rows() > p.rows() || u.cols() > p.cols()) throw Error(Errc::oversize_query, u.to_string());
  if (u.empty()) return static_cast<Count>(p.area());
  Count hits = 0;
  for (int i = 0; i < p.rows(); ++i) {
    for (int j = 0; j < p.cols(); ++j) {
      bool same = true;
      for (int r = 0; r < u.rows() && same; ++r)
        for (int c = 0; c < u.cols() && same; ++c) same = u.at(r, c) == p.at((i + r) % p.rows(), (j + c) % p.cols());
      hits += same ? 1 : 0;
    }
  }
  return hits;
}

Count count_by_shift_class(const Block& u, const Block& p) {
  if (u.rows() > p.rows() || u.cols() > p.cols()) throw Error(Errc::oversize_query, u.to_string());
  const auto cls = shift_class(p);
  if (cls.members.size() != p.area()) throw Error(Errc::not_primitive, p.to_string());
  if (u.empty()) return static_cast<Count>(p.area());
  Count hits = 0;
  for (const auto& r : cls.members) {
    bool same = true;
    for (int i = 0; i < u.rows() && same; ++i)
      for (int j = 0; j < u.cols() && same; ++j) same = r.at(i, j) == u.at(i, j);
    hits += same ? 1 : 0;
  }
  return hits;
}

Universe::Universe(int m, int n, Alphabet alphabet) : m_(m), n_(n), alphabet_(alphabet) {
  check_enumerable(m, n, alphabet);
  std::uint64_t total = 1;
  for (int i = 0; i < m * n; ++i) total *= static_cast<std::uint64_t>(alphabet.size);
  for (std::uint64_t code = 0; code < total; ++code) {
    Block q = block_from_code(static_cast<std::uint32_t>(code), m, n, alphabet);
    if (all_shifts_distinct(q)) primitive_.push_back(std::move(q));
  }
}

const std::vector<std::uint32_t>& Universe::signature(std::size_t q, int k, int l) {
  auto& sigs = signatures_[SizeKey{k, l}];
  if (sigs.empty()) {
    sigs.reserve(primitive_.size());
    for (const auto& b : primitive_) sigs.push_back(window_codes(b, k, l));
  }
  return sigs.at(q);
}

Count Universe::count(std::size_t q, const Block& u) {
  if (u.empty()) return static_cast<Count>(m_) * n_;
  return count_in(signature(q, u.rows(), u.cols()), block_code(u));
}

TypeClass type_class(const Block& p, int k, int l) {
  check_enumerable(p.rows(), p.cols(), p.alphabet());
  Universe& u = universe_for(p.rows(), p.cols(), p.alphabet());
  TypeClass out;
  out.source = p;
  out.k = k;
  out.l = l;
  if (k == 0 || l == 0) {
    out.members = u.primitive();
    return out;
  }
  const auto target = window_codes(p, k, l);
  for (std::size_t q = 0; q < u.primitive().size(); ++q) {
    if (u.signature(q, k, l) == target) out.members.push_back(u.primitive()[q]);
  }
  return out;
}

std::vector<Block> b_order(const Block& p, bool reverse_within_size) {
  check_enumerable(p.rows(), p.cols(), p.alphabet());
  const Alphabet a = p.alphabet();
  const CodingOrder order = coding_order(p.rows(), p.cols(), a);
  std::vector<Block> out{Block::empty(0, 0, a)};
  std::vector<SizeKey> small, large;
  for (int k = 1; k <= p.rows(); ++k) {
    for (int l = 1; l <= p.cols(); ++l) {
      switch (order.classify(k, l)) {
        case BlockClass::b1:
        case BlockClass::b2: small.push_back({k, l}); break;
        default: large.push_back({k, l}); break;
      }
    }
  }
  auto add_size = [&](SizeKey s, bool reverse) {
    std::uint64_t total = 1;
    for (int i = 0; i < s.rows * s.cols; ++i) total *= static_cast<std::uint64_t>(a.size);
    std::vector<Block> members;
    for (std::uint64_t code = 0; code < total; ++code) {
      Block b = block_from_code(static_cast<std::uint32_t>(code), s.rows, s.cols, a);
      if (brute_count(middle(b, Axis::rows), p) > 0 && brute_count(middle(b, Axis::columns), p) > 0) {
        members.push_back(std::move(b));
      }
    }
    if (reverse) std::reverse(members.begin(), members.end());
    for (auto& b : members) out.push_back(std::move(b));
  };
  for (auto s : small) add_size(s, false);
  for (auto s : large) add_size(s, reverse_within_size);
  return out;
}

namespace {

// Index of the first entry of order on which q disagrees with p, or
// order.size() when it agrees everywhere.
std::vector<std::size_t> first_mismatch(const Block& p, const std::vector<Block>& order) {
  Universe& u = universe_for(p.rows(), p.cols(), p.alphabet());
  std::vector<Count> target;
  target.reserve(order.size());
  for (const auto& b : order) target.push_back(brute_count(b, p));
  std::vector<std::size_t> out(u.primitive().size(), order.size());
  for (std::size_t q = 0; q < out.size(); ++q) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (u.count(q, order[j]) != target[j]) {
        out[q] = j;
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::size_t> prefix_class_sizes(const Block& p, const std::vector<Block>& order) {
  check_enumerable(p.rows(), p.cols(), p.alphabet());
  const auto mismatch = first_mismatch(p, order);
  std::vector<std::size_t> sizes(order.size() + 1, 0);
  for (auto d : mismatch) ++sizes[d];
  // sizes[i] = #{q : mismatch >= i}
  for (std::size_t i = order.size(); i-- > 0;) sizes[i] += sizes[i + 1];
  return sizes;
}

TypeClass prefix_class(const Block& p, std::size_t i) {
  const auto order = b_order(p);
  if (i > order.size()) throw Error(Errc::rank_out_of_range, "prefix index past |B(p)|");
  const auto mismatch = first_mismatch(p, order);
  Universe& u = universe_for(p.rows(), p.cols(), p.alphabet());
  TypeClass out;
  out.source = p;
  out.level = TypeClass::Level::prefix;
  out.prefix = i;
  for (std::size_t q = 0; q < mismatch.size(); ++q)
    if (mismatch[q] >= i) out.members.push_back(u.primitive()[q]);
  return out;
}

Lemma1Result lemma1(const Block& p, int k, int l) {
  if (k < 1 || l < 1) throw Error(Errc::empty_block, "class-size bound needs k, l >= 1");
  Lemma1Result r;
  const auto cls = type_class(p, k, l);
  r.log2_class_size = std::log2(static_cast<double>(cls.members.size()));
  const auto codes = window_codes(p, k, l);
  const double mn = static_cast<double>(p.area());
  double h = 0;
  for (std::size_t i = 0; i < codes.size();) {
    std::size_t j = i;
    while (j < codes.size() && codes[j] == codes[i]) ++j;
    const double f = static_cast<double>(j - i) / mn;
    h -= f * std::log2(f);
    i = j;
  }
  r.bound = mn / (static_cast<double>(k) * l) * h;
  r.holds = r.log2_class_size <= r.bound + 1e-9;
  return r;
}

bool lemma1_check(const Block& p, int k, int l) { return lemma1(p, k, l).holds; }

Lemma2Result lemma2_check(const Block& p) {
  const auto order = b_order(p);
  const auto sizes = prefix_class_sizes(p, order);
  const CountLedger ledger = build_ledger_any(p);
  Lemma2Result r;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const Block& b = order[j];
    if (b.area() < 2) continue;
    const bool fails = (b.cols() >= 2 && !condition(b, Axis::columns, ledger)) ||
                       (b.rows() >= 2 && !condition(b, Axis::rows, ledger));
    if (!fails) continue;
    ++r.steps_checked;
    if (sizes[j + 1] != sizes[j]) ++r.violations;
  }
  return r;
}

ExactRatioResult exact_ratio_lengths(const Block& p, bool reverse_within_size) {
  const auto order = b_order(p, reverse_within_size);
  const auto sizes = prefix_class_sizes(p, order);
  const CountLedger ledger = build_ledger_any(p);
  const CodingOrder co = coding_order(p.rows(), p.cols(), p.alphabet());
  ExactRatioResult r;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const Block& b = order[j];
    if (b.empty()) continue;
    const BlockClass cls = co.classify(b.rows(), b.cols());
    if (cls != BlockClass::b3) continue;
    ExactStep s;
    s.block = b;
    s.cls = cls;
    s.kind = disposition(b, ledger).kind;
    s.bits = std::log2(static_cast<double>(sizes[j])) - std::log2(static_cast<double>(sizes[j + 1]));
    r.l3_all += s.bits;
    if (s.kind == DispositionKind::transmit) r.l3_coded += s.bits;
    r.steps.push_back(std::move(s));
  }
  const auto tkl = type_class(p, co.K, co.L);
  r.expected = std::log2(static_cast<double>(tkl.members.size())) - std::log2(static_cast<double>(p.area()));
  return r;
}

}  // namespace cse2d::oracle
