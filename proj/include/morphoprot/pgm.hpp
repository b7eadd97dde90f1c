#pragma once

#include <filesystem>
#include <string>

#include "morphoprot/grid.hpp"

namespace morphoprot {

/// P4 bitmap: "P4\n<w> <h>\n" then rows packed MSB-first, 8 pixels per byte,
/// each row padded to a whole byte. Set pixels are 1.
std::string to_pbm(const BinaryGrid& grid);
BinaryGrid from_pbm(const std::string& bytes);

/// P5 graymap, maxval 255: background 0, set pixels 255.
std::string to_pgm(const BinaryGrid& grid);

void write_grid_file(const BinaryGrid& grid, const std::filesystem::path& path);

} // namespace morphoprot
