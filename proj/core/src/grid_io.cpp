#include "htg/grid_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "htg/error.hpp"

namespace htg {

std::string format_number(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::BadParams, "cannot serialize non-finite number");
  }
  if (value == 0.0) return "0";  // also folds -0
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "failed reading '" + path.string() + "'");
  return std::move(buffer).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path.string() + "'");
}

std::string serialize_grid(const HyperTreeGrid& grid) {
  const GridSpec& spec = grid.spec();
  std::string out;
  out.reserve(grid.total_cells() * (2 + 8 * grid.fields().size()) + 256);
  out += "{\n  \"version\": " + std::to_string(kGridFormatVersion) + ",\n";
  out += "  \"dimension\": " + std::to_string(spec.dimension) + ",\n";
  out += "  \"factor\": " + std::to_string(spec.branching_factor) + ",\n";

  out += "  \"root_extent\": [";
  for (unsigned a = 0; a < spec.dimension; ++a) {
    if (a) out += ", ";
    out += std::to_string(spec.root_extent[a]);
  }
  out += "],\n  \"axis_coordinates\": [";
  for (unsigned a = 0; a < spec.dimension; ++a) {
    out += a ? ", [" : "[";
    for (std::size_t i = 0; i < spec.axis_coordinates[a].size(); ++i) {
      if (i) out += ", ";
      out += format_number(spec.axis_coordinates[a][i]);
    }
    out += "]";
  }
  out += "],\n  \"trees\": [\n";
  for (std::size_t t = 0; t < grid.tree_count(); ++t) {
    out += "    \"" + grid.tree(t).to_string() + (t + 1 < grid.tree_count() ? "\",\n" : "\"\n");
  }
  out += "  ]";

  if (grid.has_mask()) {
    out += ",\n  \"mask\": \"";
    for (auto bit : grid.mask()) out.push_back(bit ? '1' : '0');
    out += "\"";
  }

  out += ",\n  \"fields\": {";
  bool first = true;
  for (const auto& [name, values] : grid.fields()) {
    out += first ? "\n    " : ",\n    ";
    first = false;
    out += nlohmann::json(name).dump() + ": [";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out += ", ";
      out += format_number(values[i]);
    }
    out += "]";
  }
  out += first ? "}\n}\n" : "\n  }\n}\n";
  return out;
}

namespace {

template <class T>
T required(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing key '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

HyperTreeGrid parse_grid(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document.begin(), document.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "grid document must be a JSON object");

  const int version = required<int>(doc, "version");
  if (version != kGridFormatVersion) {
    throw Error(ErrorCode::ParseError, "unsupported grid format version " + std::to_string(version));
  }

  GridSpec spec;
  spec.dimension = required<unsigned>(doc, "dimension");
  spec.branching_factor = required<unsigned>(doc, "factor");
  if (spec.dimension != 2 && spec.dimension != 3) {
    throw Error(ErrorCode::ParseError, "dimension must be 2 or 3");
  }
  const auto extent = required<std::vector<std::size_t>>(doc, "root_extent");
  const auto coords = required<std::vector<std::vector<double>>>(doc, "axis_coordinates");
  if (extent.size() != spec.dimension || coords.size() != spec.dimension) {
    throw Error(ErrorCode::ParseError, "root_extent and axis_coordinates need one entry per axis");
  }
  for (unsigned a = 0; a < spec.dimension; ++a) {
    spec.root_extent[a] = extent[a];
    spec.axis_coordinates[a] = coords[a];
  }

  const auto trees = required<std::vector<std::string>>(doc, "trees");
  std::optional<std::string> mask;
  if (doc.contains("mask")) mask = required<std::string>(doc, "mask");
  FieldMap fields;
  if (doc.contains("fields")) fields = required<FieldMap>(doc, "fields");

  return build_grid(std::move(spec), trees, mask, std::move(fields));
}

HyperTreeGrid read_grid_file(const std::filesystem::path& path) {
  return parse_grid(read_text_file(path));
}

void write_grid_file(const HyperTreeGrid& grid, const std::filesystem::path& path) {
  write_text_file(path, serialize_grid(grid));
}

}  // namespace htg
