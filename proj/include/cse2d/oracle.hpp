#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cse2d/block.hpp"
#include "cse2d/counting.hpp"
#include "cse2d/inference.hpp"

// Exhaustive ground truth for tiny sources. Everything here enumerates all
// J^(mn) blocks of the source's dimensions and refuses (TooLarge) once
// mn * log2(J) exceeds 20.
namespace cse2d::oracle {

void check_enumerable(int m, int n, Alphabet alphabet);

/// Column-major base-J code of a block.
std::uint32_t block_code(const Block& u);
Block block_from_code(std::uint32_t code, int k, int l, Alphabet alphabet);

/// Anchor scan written independently of the counting module.
Count brute_count(const Block& u, const Block& p);
/// Members of p's shift class whose top-left |u|_r x |u|_c corner is u.
Count count_by_shift_class(const Block& u, const Block& p);

/// Every primitive m x n block, plus their k x l count signatures on demand.
class Universe {
 public:
  Universe(int m, int n, Alphabet alphabet);

  int rows() const noexcept { return m_; }
  int cols() const noexcept { return n_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  const std::vector<Block>& primitive() const noexcept { return primitive_; }
  /// Sorted codes of the k x l windows at all mn anchors of primitive block q.
  const std::vector<std::uint32_t>& signature(std::size_t q, int k, int l);
  Count count(std::size_t q, const Block& u);

 private:
  int m_;
  int n_;
  Alphabet alphabet_;
  std::vector<Block> primitive_;
  std::map<SizeKey, std::vector<std::vector<std::uint32_t>>> signatures_;
};

struct TypeClass {
  enum class Level { size, prefix };
  Block source;
  Level level = Level::size;
  int k = 0;
  int l = 0;
  std::size_t prefix = 0;
  std::vector<Block> members;  // sorted
};

/// Primitive blocks sharing every k x l count with p.
TypeClass type_class(const Block& p, int k, int l);

/// B(p) in coding order: the empty block, the singles, blocks up to K x L,
/// then the rest; height-major, then width, then column-major cells.
/// With reverse_within_size the B3 blocks of each size are listed backwards.
std::vector<Block> b_order(const Block& p, bool reverse_within_size = false);

/// Primitive blocks agreeing with p on the first i entries of b_order(p).
TypeClass prefix_class(const Block& p, std::size_t i);
/// |T(i)| for i = 0..|order|.
std::vector<std::size_t> prefix_class_sizes(const Block& p, const std::vector<Block>& order);

struct Lemma1Result {
  double log2_class_size = 0;
  double bound = 0;  // (mn/kl) times the empirical k x l block entropy
  bool holds = false;
};
Lemma1Result lemma1(const Block& p, int k, int l);
bool lemma1_check(const Block& p, int k, int l);

struct Lemma2Result {
  std::size_t steps_checked = 0;  // condition-failing steps
  std::size_t violations = 0;     // of those, steps that shrank the prefix class
};
Lemma2Result lemma2_check(const Block& p);

struct ExactStep {
  Block block;
  BlockClass cls = BlockClass::b3;
  DispositionKind kind = DispositionKind::zero;
  double bits = 0;  // -log2 |T(i)| / |T(i-1)|
};

struct ExactRatioResult {
  std::vector<ExactStep> steps;
  double l3_coded = 0;  // over transmitted B3 steps
  double l3_all = 0;    // over every B3 step
  double expected = 0;  // log2 |T(p, K, L)| - log2 mn
};
ExactRatioResult exact_ratio_lengths(const Block& p, bool reverse_within_size = false);

}  // namespace cse2d::oracle
