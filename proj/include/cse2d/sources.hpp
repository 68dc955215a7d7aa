#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cse2d/block.hpp"

namespace cse2d {

struct SourceSpec {
  enum class Kind { iid, markov2d };
  Kind kind = Kind::iid;
  std::vector<double> probs;                 // iid symbol distribution
  std::vector<std::vector<double>> h;        // markov2d: next symbol given the left neighbour
  std::vector<std::vector<double>> v;        // markov2d: next symbol given the upper neighbour
  double wh = 0.5;                           // markov2d: weight of the horizontal row
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;

  int alphabet_size() const;
};

/// iid params: "0.8,0.2", "bernoulli:0.2" or "uniform:4".
/// markov2d params: "h:0.9,0.1/0.1,0.9;v:0.8,0.2/0.2,0.8;wh:0.5".
/// size: "MxN". Throws BadSpec.
SourceSpec parse_source_spec(const std::string& kind, const std::string& params, const std::string& size,
                             std::uint64_t seed);

Block generate(const SourceSpec& spec);

/// Entropy of the iid distribution in bits per symbol.
double iid_entropy(const std::vector<double>& probs);
/// Empirical conditional entropy of a cell given its left and upper
/// neighbours on the torus, in bits per symbol.
double estimated_entropy_rate(const Block& b);

}  // namespace cse2d
