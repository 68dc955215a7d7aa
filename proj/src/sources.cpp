#include "cse2d/sources.hpp"

#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "cse2d/error.hpp"

namespace cse2d {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw Error(Errc::bad_spec, "trailing characters in \"" + s + "\"");
    return v;
  } catch (const std::logic_error&) {
    throw Error(Errc::bad_spec, "not a number: \"" + s + "\"");
  }
}

std::vector<double> parse_distribution(const std::string& s) {
  std::vector<double> p;
  for (const auto& t : split(s, ',')) p.push_back(parse_double(t));
  if (p.size() < 2 || p.size() > 256) throw Error(Errc::bad_spec, "distribution needs 2..256 entries");
  double sum = 0;
  for (double x : p) {
    if (!(x >= 0)) throw Error(Errc::bad_spec, "negative probability");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw Error(Errc::bad_spec, "probabilities must sum to 1");
  return p;
}

std::vector<std::vector<double>> parse_matrix(const std::string& s) {
  std::vector<std::vector<double>> rows;
  for (const auto& r : split(s, '/')) rows.push_back(parse_distribution(r));
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw Error(Errc::bad_spec, "transition matrix must be square");
  }
  return rows;
}

// Portable uniform in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Symbol draw(const std::vector<double>& p, std::mt19937_64& rng) {
  double u = unit(rng);
  for (std::size_t s = 0; s + 1 < p.size(); ++s) {
    if (u < p[s]) return static_cast<Symbol>(s);
    u -= p[s];
  }
  return static_cast<Symbol>(p.size() - 1);
}

}  // namespace

int SourceSpec::alphabet_size() const {
  return static_cast<int>(kind == Kind::iid ? probs.size() : h.size());
}

SourceSpec parse_source_spec(const std::string& kind, const std::string& params, const std::string& size,
                             std::uint64_t seed) {
  SourceSpec spec;
  spec.seed = seed;
  const auto dims = split(size, 'x');
  if (dims.size() != 2) throw Error(Errc::bad_spec, "size must be MxN");
  spec.m = static_cast<int>(parse_double(dims[0]));
  spec.n = static_cast<int>(parse_double(dims[1]));
  if (spec.m < 1 || spec.n < 1 || spec.m > 4096 || spec.n > 4096) throw Error(Errc::bad_spec, "size out of range");

  if (kind == "iid") {
    spec.kind = SourceSpec::Kind::iid;
    if (params.rfind("bernoulli:", 0) == 0) {
      const double q = parse_double(params.substr(10));
      if (!(q >= 0 && q <= 1)) throw Error(Errc::bad_spec, "bernoulli parameter outside [0, 1]");
      spec.probs = {1 - q, q};
    } else if (params.rfind("uniform:", 0) == 0) {
      const int J = static_cast<int>(parse_double(params.substr(8)));
      if (J < 2 || J > 256) throw Error(Errc::bad_spec, "uniform alphabet size outside [2, 256]");
      spec.probs.assign(static_cast<std::size_t>(J), 1.0 / J);
    } else {
      spec.probs = parse_distribution(params);
    }
  } else if (kind == "markov2d") {
    spec.kind = SourceSpec::Kind::markov2d;
    for (const auto& field : split(params, ';')) {
      const auto colon = field.find(':');
      if (colon == std::string::npos) throw Error(Errc::bad_spec, "expected key:value in \"" + field + "\"");
      const std::string key = field.substr(0, colon), value = field.substr(colon + 1);
      if (key == "h") {
        spec.h = parse_matrix(value);
      } else if (key == "v") {
        spec.v = parse_matrix(value);
      } else if (key == "wh") {
        spec.wh = parse_double(value);
        if (!(spec.wh >= 0 && spec.wh <= 1)) throw Error(Errc::bad_spec, "wh outside [0, 1]");
      } else {
        throw Error(Errc::bad_spec, "unknown markov2d key \"" + key + "\"");
      }
    }
    if (spec.h.empty() || spec.v.empty() || spec.h.size() != spec.v.size()) {
      throw Error(Errc::bad_spec, "markov2d needs h and v matrices of the same size");
    }
  } else {
    throw Error(Errc::bad_spec, "unknown source kind \"" + kind + "\"");
  }
  return spec;
}

Block generate(const SourceSpec& spec) {
  const int J = spec.alphabet_size();
  const Alphabet a = make_alphabet(J);
  std::mt19937_64 rng(spec.seed);
  std::vector<Symbol> cells(static_cast<std::size_t>(spec.m) * spec.n);
  const std::vector<double> uniform(static_cast<std::size_t>(J), 1.0 / J);
  for (int i = 0; i < spec.m; ++i) {
    for (int j = 0; j < spec.n; ++j) {
      Symbol s = 0;
      if (spec.kind == SourceSpec::Kind::iid) {
        s = draw(spec.probs, rng);
      } else {
        // Causal raster scan: mix the row of the left and of the upper neighbour.
        const bool has_left = j > 0, has_up = i > 0;
        const std::vector<double>* row = &uniform;
        if (has_left && has_up) {
          const bool horizontal = unit(rng) < spec.wh;
          row = horizontal ? &spec.h[cells[static_cast<std::size_t>(i) * spec.n + j - 1]]
                           : &spec.v[cells[static_cast<std::size_t>(i - 1) * spec.n + j]];
        } else if (has_left) {
          row = &spec.h[cells[static_cast<std::size_t>(i) * spec.n + j - 1]];
        } else if (has_up) {
          row = &spec.v[cells[static_cast<std::size_t>(i - 1) * spec.n + j]];
        }
        s = draw(*row, rng);
      }
      cells[static_cast<std::size_t>(i) * spec.n + j] = s;
    }
  }
  return Block(spec.m, spec.n, std::move(cells), a);
}

double iid_entropy(const std::vector<double>& probs) {
  double h = 0;
  for (double p : probs)
    if (p > 0) h -= p * std::log2(p);
  return h;
}

double estimated_entropy_rate(const Block& b) {
  const int m = b.rows(), n = b.cols();
  std::map<std::tuple<int, int, int>, double> joint;
  std::map<std::pair<int, int>, double> context;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const int left = b.at(i, (j + n - 1) % n), up = b.at((i + m - 1) % m, j);
      joint[{left, up, b.at(i, j)}] += 1;
      context[{left, up}] += 1;
    }
  }
  const double total = static_cast<double>(m) * n;
  auto entropy = [total](const auto& table) {
    double h = 0;
    for (const auto& [key, c] : table) h -= c / total * std::log2(c / total);
    return h;
  };
  return entropy(joint) - entropy(context);
}

}  // namespace cse2d
