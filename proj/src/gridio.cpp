#include "cse2d/gridio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include "cse2d/error.hpp"

namespace cse2d {

namespace {

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Whitespace- and comment-aware token reader for PGM headers.
class Tokens {
 public:
  explicit Tokens(std::string_view s) : s_(s) {}

  long next_int(const char* what) {
    skip();
    long v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{} || v < 0) throw Error(Errc::bad_format, std::string("expected ") + what);
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  std::size_t pos() const noexcept { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  void skip() {
    while (pos_ < s_.size()) {
      if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FileFormat format_for_path(const std::string& path) {
  if (ends_with(path, ".pgm")) return FileFormat::pgm;
  if (ends_with(path, ".txt") || ends_with(path, ".grid")) return FileFormat::grid_text;
  if (ends_with(path, ".cse")) return FileFormat::container;
  throw Error(Errc::bad_format, "unknown file extension: " + path);
}

Block parse_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw Error(Errc::bad_format, "not a P2/P5 PGM");
  }
  const bool binary = bytes[1] == '5';
  Tokens t(bytes.substr(2));
  const long n = t.next_int("width");
  const long m = t.next_int("height");
  const long maxval = t.next_int("maxval");
  if (m < 1 || n < 1 || m > 1 << 15 || n > 1 << 15) throw Error(Errc::bad_format, "bad PGM dimensions");
  if (maxval < 1 || maxval > 255) throw Error(Errc::bad_format, "maxval must be in [1, 255]");
  const Alphabet a = make_alphabet(static_cast<int>(maxval) + 1);
  std::vector<Symbol> cells(static_cast<std::size_t>(m) * n);
  if (binary) {
    const std::size_t start = 2 + t.pos() + 1;  // single whitespace after maxval
    if (bytes.size() < start + cells.size()) throw Error(Errc::truncated_stream, "PGM raster cut short");
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<Symbol>(bytes[start + i]);
  } else {
    for (auto& c : cells) c = static_cast<Symbol>(std::min<long>(t.next_int("sample"), 256));
  }
  for (auto c : cells) {
    if (c > maxval) throw Error(Errc::symbol_out_of_range, "sample above maxval");
  }
  return Block(static_cast<int>(m), static_cast<int>(n), std::move(cells), a);
}

std::string format_pgm(const Block& b, bool binary) {
  std::ostringstream out;
  out << (binary ? "P5" : "P2") << '\n' << b.cols() << ' ' << b.rows() << '\n' << b.alphabet().size - 1 << '\n';
  if (binary) {
    for (Symbol s : b.cells()) out.put(static_cast<char>(s));
  } else {
    for (int i = 0; i < b.rows(); ++i) {
      for (int j = 0; j < b.cols(); ++j) out << (j ? " " : "") << static_cast<int>(b.at(i, j));
      out << '\n';
    }
  }
  return out.str();
}

Block parse_grid_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw Error(Errc::bad_format, "missing \"J m n\" header");
  std::istringstream hs(header);
  int J = 0, m = 0, n = 0;
  if (!(hs >> J >> m >> n)) throw Error(Errc::bad_format, "header must be \"J m n\"");
  const Alphabet a = make_alphabet(J);
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    int v = 0;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw Error(Errc::bad_format, "non-integer token in grid");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != m) throw Error(Errc::dimension_mismatch, "row count differs from header");
  Block b = make_block(rows, a);
  if (b.cols() != n) throw Error(Errc::dimension_mismatch, "column count differs from header");
  return b;
}

std::string format_grid_text(const Block& b) {
  std::ostringstream out;
  out << b.alphabet().size << ' ' << b.rows() << ' ' << b.cols() << '\n';
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) out << (j ? " " : "") << static_cast<int>(b.at(i, j));
    out << '\n';
  }
  return out.str();
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::bad_format, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::bad_format, "cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::bad_format, "write failed: " + path);
}

Block read_grid(const std::string& path) {
  const auto fmt = format_for_path(path);
  const auto bytes = read_file(path);
  const std::string_view view(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  switch (fmt) {
    case FileFormat::pgm: return parse_pgm(view);
    case FileFormat::grid_text: return parse_grid_text(view);
    case FileFormat::container: break;
  }
  throw Error(Errc::bad_format, "expected a grid file, got a container: " + path);
}

void write_grid(const std::string& path, const Block& b) {
  switch (format_for_path(path)) {
    case FileFormat::pgm: write_file(path, format_pgm(b)); return;
    case FileFormat::grid_text: write_file(path, format_grid_text(b)); return;
    case FileFormat::container: break;
  }
  throw Error(Errc::bad_format, "cannot write a grid as a container: " + path);
}

}  // namespace cse2d
