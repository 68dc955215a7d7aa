#pragma once

#include <optional>
#include <vector>

#include "cse2d/block.hpp"
#include "cse2d/counting.hpp"

namespace cse2d {

/// Inclusive range of feasible values for one count.
struct Interval {
  Count lo = 0;
  Count hi = 0;

  Count width() const noexcept { return hi - lo + 1; }
  bool contains(Count v) const noexcept { return lo <= v && v <= hi; }
  bool degenerate() const noexcept { return lo == hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class DispositionKind { transmit, forced, derive_by_sum, zero };

struct Disposition {
  DispositionKind kind = DispositionKind::zero;
  Interval interval{};          // coding interval for transmit, forcing interval for forced
  Count value = 0;              // forced value
  Axis axis = Axis::columns;    // axis whose interval forced the value, or whose family derives it

  friend bool operator==(const Disposition&, const Disposition&) = default;
};

/// Counts around one axis of a block b = first . middle . last:
/// prefix = N(first.middle), suffix = N(middle.last), middle = N(middle).
struct AxisParts {
  Count prefix = 0;
  Count suffix = 0;
  Count middle = 0;
  bool excluded = false;  // first or last part is the axis' excluded element
};

/// [max(0, prefix + suffix - middle), min(prefix, suffix)]
Interval axis_interval(const AxisParts& parts);

/// min(prefix, suffix, middle - prefix, middle - suffix) >= 1, i.e. the
/// interval has at least two values.
bool axis_condition(const AxisParts& parts);

/// Disposition of a block with at least two cells. Absent axes (height or
/// width 1) are nullopt. Throws InconsistentCounts when the part counts
/// cannot come from any source.
Disposition decide(const std::optional<AxisParts>& columns, const std::optional<AxisParts>& rows);

/// Disposition of a single symbol: transmitted over [0, mn-1] unless it is J-1.
Disposition decide_single(Symbol s, Alphabet alphabet, Count mn);

// Block-keyed interface over an explicit CountLedger.

Interval feasible_interval(const Block& b, Axis axis, const CountLedger& ledger);
bool condition(const Block& b, Axis axis, const CountLedger& ledger);

/// Lexicographically largest k x 1 (columns) or 1 x l (rows) block whose
/// interior occurs, i.e. the largest member of that size in B(p).
Block excluded_element(int length, Axis axis, const CountLedger& ledger);

Disposition disposition(const Block& b, const CountLedger& ledger);

/// Resolves every pending entry of the open size k x l: forced and zero
/// values first, then single-unknown extension families until nothing
/// changes. Finalizes the size on success.
void finalize_size(int k, int l, CountLedger& ledger);

}  // namespace cse2d
