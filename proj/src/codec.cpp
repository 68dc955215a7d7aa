#include "cse2d/codec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cse2d/bitio.hpp"
#include "cse2d/engine.hpp"
#include "cse2d/error.hpp"
#include "cse2d/range_coder.hpp"

namespace cse2d {

std::vector<std::uint8_t> Container::to_bytes() const {
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.push_back(version);
  out.push_back(escape ? 0x01 : 0x00);
  out.push_back(static_cast<std::uint8_t>(alphabet.size - 1));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Container Container::from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size() || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw Error(Errc::bad_magic, "not a 2DCSE1 container");
  }
  if (bytes.size() < kHeaderBytes) throw Error(Errc::truncated_stream, "container header cut short");
  Container c;
  c.version = bytes[6];
  if (c.version != kVersion) throw Error(Errc::unsupported_version, std::to_string(c.version));
  if ((bytes[7] & ~0x01) != 0) throw Error(Errc::bad_format, "unknown flag bits");
  c.escape = (bytes[7] & 0x01) != 0;
  c.alphabet = Alphabet{bytes[8] + 1};
  if (c.alphabet.size < 2) throw Error(Errc::bad_format, "alphabet byte must be at least 1");
  c.payload.assign(bytes.begin() + kHeaderBytes, bytes.end());
  return c;
}

namespace {

struct KeyLess {
  bool operator()(const EngineCandidate& c, std::pair<NodeId, NodeId> key) const {
    return std::pair{c.node.left, c.node.last} < key;
  }
};

Container escape_container(const Block& p, CodewordStats* stats) {
  BitWriter w;
  elias_encode(static_cast<std::uint64_t>(p.rows()), w);
  elias_encode(static_cast<std::uint64_t>(p.cols()), w);
  const int depth = ceil_log2(static_cast<std::uint64_t>(p.alphabet().size));
  for (Symbol s : p.cells()) w.put_bits(s, depth);
  Container c;
  c.escape = true;
  c.alphabet = p.alphabet();
  c.payload_bits = w.bit_length();
  c.payload = w.bytes();
  if (stats) {
    *stats = CodewordStats{};
    stats->escape = true;
    stats->m = p.rows();
    stats->n = p.cols();
    stats->J = p.alphabet().size;
    stats->l0 = static_cast<double>(w.bit_length());
    stats->payload_bits = w.bit_length();
  }
  return c;
}

Container coded_container(const Block& p, CodewordStats& st) {
  const int m = p.rows(), n = p.cols();
  const auto mn = static_cast<std::size_t>(m) * n;
  CountEngine engine(m, n, p.alphabet());
  RangeEncoder coder;

  st = CodewordStats{};
  st.m = m;
  st.n = n;
  st.J = p.alphabet().size;
  st.l0 = elias_length(static_cast<std::uint64_t>(m)) + elias_length(static_cast<std::uint64_t>(n)) +
          ceil_log2(mn);

  // Node id of the block of the current size at every anchor, plus the ids
  // of the current height's columns and of the size to the left.
  std::vector<NodeId> cur(mn), left_ids(mn), col_ids(mn);
  std::vector<std::pair<NodeId, NodeId>> keys(mn);
  std::vector<std::size_t> where(mn);
  std::vector<Count> hist;

  while (!engine.done()) {
    const auto [k, l] = engine.current();
    const auto cands = engine.begin_size();
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        const std::size_t a = static_cast<std::size_t>(i) * n + j;
        if (k == 1 && l == 1) {
          keys[a] = {kNoNode, p.at(i, j)};
        } else if (l == 1) {
          keys[a] = {col_ids[a], engine.single_id(p.at((i + k - 1) % m, j))};
        } else {
          keys[a] = {left_ids[a], col_ids[static_cast<std::size_t>(i) * n + (j + l - 1) % n]};
        }
      }
    }
    hist.assign(cands.size(), 0);
    for (std::size_t a = 0; a < mn; ++a) {
      auto it = std::lower_bound(cands.begin(), cands.end(), keys[a], KeyLess{});
      if (it == cands.end() || it->node.left != keys[a].first || it->node.last != keys[a].second) {
        throw std::logic_error("occurring block missing from candidate list");
      }
      where[a] = static_cast<std::size_t>(it - cands.begin());
      ++hist[where[a]];
    }

    const BlockClass cls = engine.order().classify(k, l);
    std::int64_t sent = 0;
    for (std::size_t c = 0; c < cands.size(); ++c) {
      const auto& d = cands[c].disposition;
      if (d.kind != DispositionKind::transmit) continue;
      engine.set_value(c, hist[c]);
      const auto width = static_cast<std::uint64_t>(d.interval.width());
      coder.encode(static_cast<std::uint64_t>(hist[c] - d.interval.lo), width);
      const double bits = std::log2(static_cast<double>(width));
      ++sent;
      switch (cls) {
        case BlockClass::b0:
        case BlockClass::b1: st.l1 += bits; ++st.transmitted_b1; break;
        case BlockClass::b2: st.l2 += bits; ++st.transmitted_b2; break;
        case BlockClass::b3: st.l3 += bits; ++st.transmitted_b3; break;
      }
    }
    if (sent > 0) st.transmitted_per_size.emplace_back(SizeKey{k, l}, sent);
    engine.finish_size();

    const SizeTable& t = engine.table(k, l);
    for (std::size_t a = 0; a < mn; ++a) {
      cur[a] = (k == 1 && l == 1) ? engine.single_id(p.at(static_cast<int>(a) / n, static_cast<int>(a) % n))
                                  : t.find(keys[a].first, keys[a].second);
      if (cur[a] == kNoNode || t.count(cur[a]) != hist[where[a]]) {
        throw std::logic_error("inferred counts differ from the source");
      }
    }
    if (l == 1) col_ids = cur;
    std::swap(left_ids, cur);
  }

  // left_ids now holds the m x n ids; the rank of p is the id at (0,0).
  coder.encode(static_cast<std::uint64_t>(left_ids[0]), std::uint64_t{1} << ceil_log2(mn));
  const auto tail = coder.finish();

  BitWriter w;
  elias_encode(static_cast<std::uint64_t>(m), w);
  elias_encode(static_cast<std::uint64_t>(n), w);
  for (auto b : tail) w.put_byte(b);
  w.trim_trailing_zeros();
  st.payload_bits = w.bit_length();

  Container c;
  c.alphabet = p.alphabet();
  c.payload_bits = w.bit_length();
  c.payload = w.bytes();
  return c;
}

}  // namespace

Container compress(const Block& p, const CompressOptions& options, CodewordStats* stats) {
  if (p.empty()) throw Error(Errc::empty_block, "cannot compress an empty block");
  const bool primitive = is_primitive(p);
  if (!primitive && options.strict) throw Error(Errc::not_primitive, p.to_string());
  if (p.rows() < 2 || p.cols() < 2 || !primitive) return escape_container(p, stats);
  CodewordStats st;
  Container c = coded_container(p, st);
  if (stats) *stats = st;
  return c;
}

Block decompress(const Container& c) {
  if (c.version != kVersion) throw Error(Errc::unsupported_version, std::to_string(c.version));
  BitReader in(c.payload);
  const auto m64 = elias_decode(in);
  const auto n64 = elias_decode(in);
  if (m64 > 1u << 15 || n64 > 1u << 15 || m64 * n64 > (1u << 24)) {
    throw Error(Errc::too_large, std::to_string(m64) + "x" + std::to_string(n64));
  }
  const int m = static_cast<int>(m64), n = static_cast<int>(n64);
  const auto mn = static_cast<std::size_t>(m) * n;

  if (c.escape) {
    const int depth = ceil_log2(static_cast<std::uint64_t>(c.alphabet.size));
    std::vector<Symbol> cells(mn);
    for (auto& s : cells) {
      const auto v = in.get_bits(depth);
      if (v >= static_cast<std::uint64_t>(c.alphabet.size)) throw Error(Errc::symbol_out_of_range, std::to_string(v));
      s = static_cast<Symbol>(v);
    }
    return Block(m, n, std::move(cells), c.alphabet);
  }

  if (m < 2 || n < 2) throw Error(Errc::bad_format, "coded path needs at least 2x2");
  CountEngine engine(m, n, c.alphabet);
  RangeDecoder coder(in);
  while (!engine.done()) {
    const auto cands = engine.begin_size();
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const auto& d = cands[i].disposition;
      if (d.kind != DispositionKind::transmit) continue;
      engine.set_value(i, d.interval.lo + static_cast<Count>(coder.decode(static_cast<std::uint64_t>(d.interval.width()))));
    }
    engine.finish_size();
  }
  const SizeTable& full = engine.table(m, n);
  if (full.nodes.size() != mn) throw Error(Errc::inconsistent_counts, "full-size blocks do not form a shift class");
  const auto rank = coder.decode(std::uint64_t{1} << ceil_log2(mn));
  if (rank >= mn) throw Error(Errc::rank_out_of_range, std::to_string(rank));
  return Block(m, n, engine.materialize(m, n, static_cast<NodeId>(rank)), c.alphabet);
}

std::vector<std::uint8_t> compress_bytes(const Block& p, const CompressOptions& options, CodewordStats* stats) {
  return compress(p, options, stats).to_bytes();
}

Block decompress_bytes(std::span<const std::uint8_t> bytes) { return decompress(Container::from_bytes(bytes)); }

CodewordStats stats(const Block& p) {
  if (p.empty() || !is_primitive(p)) throw Error(Errc::not_primitive, p.to_string());
  CodewordStats st;
  compress(p, {}, &st);
  return st;
}

}  // namespace cse2d
