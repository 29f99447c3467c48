#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ca2d/bit_matrix.hpp"
#include "ca2d/grid.hpp"
#include "ca2d/rule_matrix.hpp"

namespace ca2d {

// Portable bitmap, 1 = black = occupied. Width is the column count.
enum class ImageFormat { p1, p4 };

// Largest image accepted by the readers.
inline constexpr std::uint64_t kMaxImageCells = std::uint64_t{1} << 28;

Grid parse_pbm(std::string_view data);
std::string format_pbm(const Grid& g, ImageFormat format);

Grid read_image(const std::string& path);
void write_image(const Grid& g, const std::string& path, ImageFormat format);

// "rows cols" header, then one line of 0/1 characters per row.
std::string format_matrix(const BitMatrix& mat);
BitMatrix parse_matrix(std::string_view text);

// Line i lists cell i's sources as 1-based indices separated by spaces; an
// empty line means no sources.
std::string format_dependency_map(const DependencyMap& deps);
DependencyMap parse_dependency_map(std::string_view text, int m, int n);

// One line per grid row, whitespace-separated decimal rule numbers.
HybridSpec parse_hybrid_rules(std::string_view text);

// mt19937_64 stream, one draw per cell in row-major order; the cell is set
// when (draw >> 11) * 2^-53 < density.
Grid random_grid(int m, int n, double density, std::uint64_t seed);

// '#' for 1 and '.' for 0. When max_cols > 0 and the grid is wider, blocks of
// cells are merged and a block shows '#' if any cell in it is set.
std::string render_ascii(const Grid& g, int max_cols = 0);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view data);

}  // namespace ca2d
