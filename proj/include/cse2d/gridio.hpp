#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cse2d/block.hpp"

namespace cse2d {

enum class FileFormat { pgm, grid_text, container };

/// By extension: .pgm, .txt / .grid, .cse. Anything else is BadFormat.
FileFormat format_for_path(const std::string& path);

/// P2 or P5; J = maxval + 1.
Block parse_pgm(std::string_view bytes);
/// Binary P5 with maxval J - 1, or plain P2.
std::string format_pgm(const Block& b, bool binary = true);

/// Header line "J m n", then m rows of n space-separated symbols.
Block parse_grid_text(std::string_view text);
std::string format_grid_text(const Block& b);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

/// Reads a .pgm or grid-text file.
Block read_grid(const std::string& path);
void write_grid(const std::string& path, const Block& b);

}  // namespace cse2d
