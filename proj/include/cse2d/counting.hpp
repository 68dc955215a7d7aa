#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cse2d/block.hpp"

namespace cse2d {

using Count = std::int64_t;

struct SizeKey {
  int rows = 0;
  int cols = 0;

  friend auto operator<=>(const SizeKey&, const SizeKey&) = default;
};

/// B0 is the empty block, B1 the single symbols, B2 blocks no larger than
/// K x L, B3 everything else.
enum class BlockClass { b0, b1, b2, b3 };

/// Occurrence counts N(u|p) for every subblock size of an m x n source,
/// keyed by block. A size is either open (entries may be pending) or
/// finalized (absent blocks count zero).
class CountLedger {
 public:
  using Table = std::map<Block, std::optional<Count>, BlockLess>;

  CountLedger(int m, int n, Alphabet alphabet);

  int source_rows() const noexcept { return m_; }
  int source_cols() const noexcept { return n_; }
  Count total() const noexcept { return static_cast<Count>(m_) * n_; }
  Alphabet alphabet() const noexcept { return alphabet_; }

  /// Sizes with a zero dimension are always finalized.
  bool is_finalized(int k, int l) const;
  bool has_size(int k, int l) const;

  void open_size(int k, int l);
  void finalize(int k, int l);

  void set_count(const Block& b, Count value);
  void set_pending(const Block& b);

  /// Finalized-size lookup: empty blocks give mn, absent blocks 0.
  Count count(const Block& b) const;

  /// Open-or-finalized lookup; nullopt when the entry is pending.
  std::optional<Count> peek(const Block& b) const;

  const Table& table(int k, int l) const;
  Table& mutable_table(int k, int l);

  /// Blocks of size k x l with positive count, in canonical order.
  std::vector<Block> positive(int k, int l) const;

 private:
  int m_;
  int n_;
  Alphabet alphabet_;
  std::map<SizeKey, Table> tables_;
  std::map<SizeKey, bool> finalized_;
};

/// Number of torus anchors of p at which u occurs; mn for an empty u.
Count count(const Block& u, const Block& p);

CountLedger build_ledger(const Block& p);

/// Same as build_ledger without the primitivity requirement.
CountLedger build_ledger_any(const Block& p);

struct IdentityViolation {
  enum class Kind { sum, column_prefix, column_suffix, row_prefix, row_suffix };
  Kind kind;
  SizeKey size;
  Block block;  // the parent block whose extensions do not add up (empty for sum)
  Count expected;
  Count actual;

  std::string describe() const;
};

struct IdentityReport {
  std::vector<IdentityViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks the sum identity for every finalized size, and the left/right and
/// top/bottom extension identities wherever both sizes involved are finalized.
IdentityReport verify_identities(const CountLedger& ledger);

struct Decomposition {
  Block first;   // a (first column) or e (first row)
  Block middle;  // w or v
  Block last;    // c or g
};

struct Candidate {
  Block block;
  bool in_b = false;
  BlockClass cls = BlockClass::b1;
  std::optional<Decomposition> columns;  // width >= 2
  std::optional<Decomposition> rows;     // height >= 2
};

bool in_b(const Block& b, const CountLedger& ledger);

bool is_core(const Block& w, Axis axis, const CountLedger& ledger);

struct CodingOrder {
  int K = 1;
  int L = 1;
  std::vector<SizeKey> sizes;  // every (k, l) with k*l >= 1, height-major

  BlockClass classify(int k, int l) const;
};

/// max(1, floor(sqrt(log_J log_J x))) computed in exact integer arithmetic.
int block_size_limit(std::int64_t x, Alphabet alphabet);

CodingOrder coding_order(int m, int n, Alphabet alphabet);

/// Blocks of size k x l whose count is not forced to zero by an absent part:
/// the union of column joins a:w:c (N(a:w) > 0, N(w:c) > 0) and row joins
/// e/v/g (N(e/v) > 0, N(v/g) > 0). Singles list every symbol.
std::vector<Candidate> candidates(int k, int l, const CountLedger& ledger, const CodingOrder& order);

Decomposition decompose(const Block& b, Axis axis);

}  // namespace cse2d
