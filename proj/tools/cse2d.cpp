// Command-line front end: compress, decompress, stats, gen, verify, compare.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cse2d/baseline.hpp"
#include "cse2d/codec.hpp"
#include "cse2d/error.hpp"
#include "cse2d/gridio.hpp"
#include "cse2d/sources.hpp"
#include "cse2d/verify.hpp"
#include "json.hpp"

using namespace cse2d;
using nlohmann::json;

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_format(const std::string& path, FileFormat want, const char* role) {
  FileFormat got;
  try {
    got = format_for_path(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const bool grid = got == FileFormat::pgm || got == FileFormat::grid_text;
  if (want == FileFormat::container ? got != FileFormat::container : !grid) {
    throw UsageError(std::string(role) + " has the wrong kind of extension: " + path);
  }
}

json stats_json(const CodewordStats& st) {
  return json{{"escape", st.escape},
              {"m", st.m},
              {"n", st.n},
              {"J", st.J},
              {"l0", st.l0},
              {"l1", st.l1},
              {"l2", st.l2},
              {"l3", st.l3},
              {"total_bits", st.total()},
              {"bits_per_symbol", st.total() / (static_cast<double>(st.m) * st.n)},
              {"payload_bits", st.payload_bits},
              {"transmitted", {{"b1", st.transmitted_b1}, {"b2", st.transmitted_b2}, {"b3", st.transmitted_b3}}}};
}

void emit(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    write_file(path, j.dump(2) + "\n");
  }
}

std::pair<int, int> parse_size(const std::string& s) {
  const auto x = s.find('x');
  if (x == std::string::npos) throw UsageError("size must be MxN: " + s);
  try {
    return {std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
  } catch (const std::exception&) {
    throw UsageError("size must be MxN: " + s);
  }
}

json suite_json(const SuiteResult& r) {
  json j{{"suite", r.name}, {"checked", r.checked}, {"failures", r.failures}, {"pass", r.ok()}};
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-dimensional compression via subblock enumeration"};
  app.require_subcommand(1);

  std::string in, out, stats_path, kind, params, size, mode;
  bool strict = false;
  std::uint64_t seed = 0;
  int count = 500, max_size = 32, m_cap = 8;

  auto* c = app.add_subcommand("compress", "Grid file (.pgm, .txt, .grid) to container (.cse)");
  c->add_option("-i,--input", in, "Input grid")->required();
  c->add_option("-o,--output", out, "Output container")->required();
  c->add_option("--stats-json", stats_path, "Write the length breakdown as JSON ('-' for stdout)");
  c->add_flag("--strict", strict, "Fail on non-primitive input instead of escaping");

  auto* d = app.add_subcommand("decompress", "Container (.cse) to grid file");
  d->add_option("-i,--input", in, "Input container")->required();
  d->add_option("-o,--output", out, "Output grid")->required();

  auto* s = app.add_subcommand("stats", "Length breakdown of a grid as JSON");
  s->add_option("-i,--input", in, "Input grid")->required();

  auto* g = app.add_subcommand("gen", "Generate a synthetic source");
  g->add_option("--kind", kind, "iid or markov2d")->required()->check(CLI::IsMember({"iid", "markov2d"}));
  g->add_option("--params", params, "Distribution or transition spec")->required();
  g->add_option("--size", size, "MxN")->required();
  g->add_option("--seed", seed, "RNG seed");
  g->add_option("-o,--output", out, "Output grid")->required();

  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--mode", mode, "exhaustive, random or lemmas")
      ->required()
      ->check(CLI::IsMember({"exhaustive", "random", "lemmas"}));
  v->add_option("--size", size, "MxN for exhaustive and lemmas");
  v->add_option("--count", count, "Blocks for random mode");
  v->add_option("--max", max_size, "Largest side for random mode");
  v->add_option("--seed", seed, "Seed for random mode");

  auto* cmp = app.add_subcommand("compare", "Conventional 1D CSE against the 2D codec");
  cmp->add_option("-i,--input", in, "Input grid")->required();
  cmp->add_option("--m-cap", m_cap, "Largest height the baseline accepts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*c) {
      require_format(in, FileFormat::pgm, "input");
      require_format(out, FileFormat::container, "output");
      CodewordStats st;
      const auto bytes = compress_bytes(read_grid(in), CompressOptions{strict}, &st);
      write_file(out, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
      if (!stats_path.empty()) emit(stats_json(st), stats_path);
    } else if (*d) {
      require_format(in, FileFormat::container, "input");
      require_format(out, FileFormat::pgm, "output");
      write_grid(out, decompress_bytes(read_file(in)));
    } else if (*s) {
      require_format(in, FileFormat::pgm, "input");
      CodewordStats st;
      compress(read_grid(in), {}, &st);
      emit(stats_json(st), "-");
    } else if (*g) {
      require_format(out, FileFormat::pgm, "output");
      const SourceSpec spec = parse_source_spec(kind, params, size, seed);
      const Block b = generate(spec);
      write_grid(out, b);
      const bool iid = spec.kind == SourceSpec::Kind::iid;
      json j{{"kind", kind},
             {"m", b.rows()},
             {"n", b.cols()},
             {"J", b.alphabet().size},
             {"entropy_bits", iid ? iid_entropy(spec.probs) : estimated_entropy_rate(b)},
             {"entropy_kind", iid ? "analytical" : "estimated"},
             {"primitive", is_primitive(b)}};
      emit(j, "-");
      if (!is_primitive(b)) std::cerr << "warning: generated grid is not primitive and will be escaped\n";
    } else if (*v) {
      json report = json::array();
      bool pass = true;
      auto add = [&](const SuiteResult& r) {
        report.push_back(suite_json(r));
        pass = pass && r.ok();
      };
      if (mode == "exhaustive") {
        if (size.empty()) {
          for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}}) add(roundtrip_exhaustive(m, n));
        } else {
          const auto [m, n] = parse_size(size);
          add(roundtrip_exhaustive(m, n));
        }
      } else if (mode == "random") {
        add(roundtrip_random(count, max_size, seed));
      } else {
        const auto [m, n] = size.empty() ? std::pair{3, 3} : parse_size(size);
        const auto sweep = lemma_sweep(m, n);
        add(sweep.lemma1);
        add(sweep.lemma2);
      }
      emit(report, "-");
      return pass ? 0 : 1;
    } else if (*cmp) {
      require_format(in, FileFormat::pgm, "input");
      const Comparison r = compare(read_grid(in), m_cap);
      const auto& b = r.conventional;
      json j{{"conventional",
              {{"total_bits", b.total()},
               {"e_n", b.e_n},
               {"single_bits", b.single_bits},
               {"middle_bits", b.middle_bits},
               {"long_bits", b.long_bits},
               {"rank_bits", b.rank_bits},
               {"middle_regime_empty", b.middle_regime_empty()},
               {"transmitted", {{"singles", b.transmitted_singles}, {"middle", b.transmitted_middle}, {"long", b.transmitted_long}}}}},
             {"proposed", stats_json(r.proposed)},
             {"ratio", r.ratio}};
      emit(j, "-");
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
