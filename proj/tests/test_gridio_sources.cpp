#include <cmath>
#include <cstdio>
#include <filesystem>

#include "cse2d/error.hpp"
#include "cse2d/gridio.hpp"
#include "cse2d/sources.hpp"
#include "cse2d/verify.hpp"
#include "doctest.h"

using namespace cse2d;

TEST_CASE("pgm and grid text round trips") {
  const Block b = random_block(3, 3, 9, 5);
  CHECK(parse_pgm(format_pgm(b)) == b);
  CHECK(parse_pgm(format_pgm(b, false)) == b);
  CHECK(parse_grid_text(format_grid_text(b)) == b);
  CHECK(format_grid_text(make_block({{0, 1}, {1, 1}})) == "2 2 2\n0 1\n1 1\n");
  CHECK(parse_pgm("P2\n# comment\n3 1\n3\n0 3 2\n") == Block(1, 3, {0, 3, 2}, Alphabet{4}));
}

TEST_CASE("malformed grids") {
  CHECK_THROWS_AS(parse_pgm("P6\n1 1\n255\nx"), Error);
  CHECK_THROWS_AS(parse_pgm("P2\n2 1\n1\n0 2\n"), Error);
  CHECK_THROWS_AS(parse_pgm("P5\n4 4\n1\n\x01"), Error);
  CHECK_THROWS_AS(parse_grid_text("2 2 2\n0 1\n1\n"), Error);
  CHECK(format_for_path("a.pgm") == FileFormat::pgm);
  CHECK(format_for_path("a.txt") == FileFormat::grid_text);
  CHECK(format_for_path("a.grid") == FileFormat::grid_text);
  CHECK(format_for_path("a.cse") == FileFormat::container);
  try {
    format_for_path("a.png");
    FAIL("expected BadFormat");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_format);
  }
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path();
  const Block b = random_block(9, 4, 7, 3);
  for (const char* name : {"cse2d_test.pgm", "cse2d_test.txt"}) {
    const auto path = (dir / name).string();
    write_grid(path, b);
    CHECK(read_grid(path) == b);
    std::remove(path.c_str());
  }
}

TEST_CASE("iid sources") {
  const auto spec = parse_source_spec("iid", "bernoulli:0.2", "100x100", 5);
  CHECK(spec.probs == std::vector<double>{0.8, 0.2});
  const Block b = generate(spec);
  CHECK(b.alphabet().size == 2);
  double ones = 0;
  for (Symbol s : b.cells()) ones += s;
  const double sigma = std::sqrt(10000 * 0.2 * 0.8);
  CHECK(std::abs(ones - 2000) < 3 * sigma);
  CHECK(generate(spec) == b);

  const double h = -(0.2 * std::log2(0.2) + 0.8 * std::log2(0.8));
  CHECK(iid_entropy(spec.probs) == doctest::Approx(h));
  CHECK(iid_entropy(spec.probs) == doctest::Approx(0.7219).epsilon(1e-4));
  const auto u4 = parse_source_spec("iid", "uniform:4", "8x8", 1);
  CHECK(iid_entropy(u4.probs) == doctest::Approx(2.0));
  CHECK(parse_source_spec("iid", "0.5,0.25,0.25", "2x3", 0).probs.size() == 3);
  CHECK(estimated_entropy_rate(b) == doctest::Approx(h).epsilon(0.03));
}

TEST_CASE("markov2d sources") {
  const auto frozen = parse_source_spec("markov2d", "h:1,0/0,1;v:1,0/0,1;wh:0.5", "6x7", 3);
  const Block b = generate(frozen);
  CHECK_FALSE(is_primitive(b));
  CHECK(estimated_entropy_rate(b) == doctest::Approx(0.0));

  const auto sticky = parse_source_spec("markov2d", "h:0.9,0.1/0.1,0.9;v:0.9,0.1/0.1,0.9", "64x64", 3);
  CHECK(estimated_entropy_rate(generate(sticky)) < 0.9);
}

TEST_CASE("bad source specs") {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::bad_format;
  };
  CHECK(code([] { parse_source_spec("iid", "0.5,0.6", "4x4", 0); }) == Errc::bad_spec);
  CHECK(code([] { parse_source_spec("iid", "bernoulli:x", "4x4", 0); }) == Errc::bad_spec);
  CHECK(code([] { parse_source_spec("iid", "uniform:2", "4", 0); }) == Errc::bad_spec);
  CHECK(code([] { parse_source_spec("markov2d", "h:0.5,0.5/0.5,0.5", "4x4", 0); }) == Errc::bad_spec);
  CHECK(code([] { parse_source_spec("gauss", "", "4x4", 0); }) == Errc::bad_spec);
}
