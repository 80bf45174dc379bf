#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "htg/grid.hpp"

namespace htg {

/// Version of the grid document written by serialize_grid. Parsers reject any
/// other value.
inline constexpr int kGridFormatVersion = 1;

/// JSON grid document; see docs/file-formats.md. Output is deterministic and
/// numbers use shortest round-trip formatting, so serialize(parse(s)) == s.
std::string serialize_grid(const HyperTreeGrid& grid);

/// Throws ParseError on malformed documents or unknown versions; structural
/// problems surface as the usual build_grid errors.
HyperTreeGrid parse_grid(std::string_view document);

HyperTreeGrid read_grid_file(const std::filesystem::path& path);
void write_grid_file(const HyperTreeGrid& grid, const std::filesystem::path& path);

/// Shared helpers for the text formats.
std::string format_number(double value);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace htg
