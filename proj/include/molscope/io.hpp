#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "molscope/mols.hpp"

namespace molscope {

// Text format: each square is n lines of n whitespace-separated symbols;
// squares are separated by blank lines and '#' starts a comment line. A
// row may also be written as one run of n digits ("0123").
//
// Errors carry the 1-based line number as their index.
std::vector<LatinSquare> parse_squares(std::string_view text);
/// Squares must share an order and be pairwise orthogonal.
MolsList parse_mols(std::string_view text);

std::vector<LatinSquare> read_squares(const std::filesystem::path& path);
MolsList read_mols(const std::filesystem::path& path);

std::string format_square(const LatinSquare& square);
std::string format_mols(const MolsList& mols);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace molscope
