#include "cse2d/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "cse2d/bitio.hpp"
#include "cse2d/error.hpp"

namespace cse2d {

namespace {

using Word = std::vector<std::uint32_t>;

std::map<Word, Count> substring_counts(const std::vector<std::uint32_t>& x, int len) {
  std::map<Word, Count> out;
  const int n = static_cast<int>(x.size());
  Word w(static_cast<std::size_t>(len));
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < len; ++t) w[t] = x[(i + t) % n];
    ++out[w];
  }
  return out;
}

}  // namespace

BaselineReport conv_lengths(const Block& p, int m_cap) {
  if (p.alphabet().size != 2 || p.rows() > m_cap || p.rows() > 30) {
    throw Error(Errc::cap_exceeded, "baseline needs J=2 and m <= " + std::to_string(std::min(m_cap, 30)));
  }
  if (p.empty()) throw Error(Errc::empty_block, "baseline of an empty block");
  const int m = p.rows(), n = p.cols();

  std::vector<std::uint32_t> x(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::uint32_t v = 0;
    for (int i = 0; i < m; ++i) v = (v << 1) | p.at(i, j);
    x[j] = v;
  }
  const std::uint32_t top = (std::uint32_t{1} << m) - 1;  // the all-ones column

  BaselineReport r;
  r.m = m;
  r.n = n;
  r.e_n = elias_length(static_cast<std::uint64_t>(n));
  r.rank_bits = ceil_log2(static_cast<std::uint64_t>(n));
  r.middle_limit = n >= 4 ? static_cast<int>(std::floor(std::log2(std::log2(static_cast<double>(n))))) : 0;

  r.transmitted_singles = static_cast<std::int64_t>(top);
  r.single_bits = static_cast<double>(top) * std::log2(static_cast<double>(n));

  std::vector<std::map<Word, Count>> counts(static_cast<std::size_t>(n) + 1);
  counts[1] = substring_counts(x, 1);
  for (const auto& [w, c] : counts[1]) r.single_count_sum += c;

  auto count_of = [&](int len, const Word& w) -> Count {
    if (len == 0) return n;
    auto it = counts[len].find(w);
    return it == counts[len].end() ? 0 : it->second;
  };

  for (int len = 2; len <= n; ++len) {
    counts[len] = substring_counts(x, len);
    // Candidates a:w:c with N(a:w) > 0 and N(w:c) > 0.
    std::map<Word, std::vector<std::uint32_t>> by_prefix;
    for (const auto& [v, c] : counts[len - 1]) by_prefix[Word(v.begin(), v.end() - 1)].push_back(v.back());
    for (const auto& [u, cu] : counts[len - 1]) {
      const Word w(u.begin() + 1, u.end());
      auto it = by_prefix.find(w);
      if (it == by_prefix.end()) continue;
      for (std::uint32_t c : it->second) {
        if (u.front() == top || c == top) continue;
        Word wc = w;
        wc.push_back(c);
        const Count A = cu, C = count_of(len - 1, wc), W = count_of(len - 2, w);
        const Count slack = std::min({A, C, W - A, W - C});
        if (slack < 1) continue;
        const double bits = std::log2(static_cast<double>(slack + 1));
        if (len <= r.middle_limit) {
          r.middle_bits += bits;
          ++r.transmitted_middle;
        } else {
          r.long_bits += bits;
          ++r.transmitted_long;
        }
      }
    }
  }
  return r;
}

Comparison compare(const Block& p, int m_cap) {
  Comparison c;
  c.conventional = conv_lengths(p, m_cap);
  compress(p, {}, &c.proposed);
  c.ratio = c.proposed.total() > 0 ? c.conventional.total() / c.proposed.total() : 0;
  return c;
}

}  // namespace cse2d
