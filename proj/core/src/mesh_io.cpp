#include "htg/mesh_io.hpp"

#include <sstream>

#include <json.hpp>

#include "htg/grid_io.hpp"

namespace htg {

namespace {

void write_point(std::ostream& out, const Vec3& p) {
  out << '[' << format_number(p[0]) << ", " << format_number(p[1]) << ", " << format_number(p[2]) << ']';
}

void write_points(std::ostream& out, const std::vector<Vec3>& points) {
  out << "  \"points\": [";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << (i ? ",\n    " : "\n    ");
    write_point(out, points[i]);
  }
  out << (points.empty() ? "],\n" : "\n  ],\n");
}

void write_attributes(std::ostream& out, const FieldMap& attributes) {
  out << "  \"cell_attributes\": {";
  bool first = true;
  for (const auto& [name, values] : attributes) {
    out << (first ? "\n    " : ",\n    ") << nlohmann::json(name).dump() << ": [";
    first = false;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out << ", ";
      out << format_number(values[i]);
    }
    out << ']';
  }
  out << (first ? "}\n" : "\n  }\n");
}

void write_obj_points(std::ostream& out, const std::vector<Vec3>& points) {
  for (const auto& p : points) {
    out << "v " << format_number(p[0]) << ' ' << format_number(p[1]) << ' ' << format_number(p[2]) << '\n';
  }
}

void write_obj_face(std::ostream& out, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  out << "f " << a + 1 << ' ' << b + 1 << ' ' << c + 1 << ' ' << d + 1 << '\n';
}

}  // namespace

void write_obj(std::ostream& out, const PolyMesh& mesh) {
  write_obj_points(out, mesh.points);
  for (const auto& q : mesh.quads) write_obj_face(out, q[0], q[1], q[2], q[3]);
}

void write_obj(std::ostream& out, const UnstructuredMesh& mesh) {
  write_obj_points(out, mesh.points);
  for (const auto& cell : mesh.cells) {
    const auto& p = cell.points;
    if (cell.type == CellType::Quad) {
      write_obj_face(out, p[0], p[1], p[2], p[3]);
      continue;
    }
    // Outward-facing windings for the lower/upper-face hexahedron layout.
    write_obj_face(out, p[0], p[3], p[2], p[1]);
    write_obj_face(out, p[4], p[5], p[6], p[7]);
    write_obj_face(out, p[0], p[1], p[5], p[4]);
    write_obj_face(out, p[2], p[3], p[7], p[6]);
    write_obj_face(out, p[0], p[4], p[7], p[3]);
    write_obj_face(out, p[1], p[2], p[6], p[5]);
  }
}

void write_native(std::ostream& out, const PolyMesh& mesh) {
  out << "{\n  \"version\": " << kMeshFormatVersion << ",\n  \"kind\": \"polymesh\",\n";
  write_points(out, mesh.points);
  out << "  \"quads\": [";
  for (std::size_t i = 0; i < mesh.quads.size(); ++i) {
    const auto& q = mesh.quads[i];
    out << (i ? ",\n    [" : "\n    [") << q[0] << ", " << q[1] << ", " << q[2] << ", " << q[3] << ']';
  }
  out << (mesh.quads.empty() ? "],\n" : "\n  ],\n");
  write_attributes(out, mesh.cell_attributes);
  out << "}\n";
}

void write_native(std::ostream& out, const UnstructuredMesh& mesh) {
  out << "{\n  \"version\": " << kMeshFormatVersion << ",\n  \"kind\": \"unstructured\",\n";
  write_points(out, mesh.points);
  out << "  \"cells\": [";
  for (std::size_t i = 0; i < mesh.cells.size(); ++i) {
    const auto& cell = mesh.cells[i];
    out << (i ? ",\n    " : "\n    ") << "{\"type\": \""
        << (cell.type == CellType::Quad ? "quad" : "hexahedron") << "\", \"points\": [";
    for (unsigned k = 0; k < point_count(cell.type); ++k) {
      if (k) out << ", ";
      out << cell.points[k];
    }
    out << "]}";
  }
  out << (mesh.cells.empty() ? "],\n" : "\n  ],\n");
  write_attributes(out, mesh.cell_attributes);
  out << "}\n";
}

void write_native(std::ostream& out, const SelectionMask& mask) {
  out << "{\n  \"version\": " << kMeshFormatVersion << ",\n  \"kind\": \"selection_mask\",\n"
      << "  \"cell_count\": " << mask.bits.size() << ",\n  \"selected_count\": " << mask.selected_count()
      << ",\n  \"mask\": \"";
  for (auto bit : mask.bits) out << (bit ? '1' : '0');
  out << "\"\n}\n";
}

void write_native(std::ostream& out, const GridStats& stats) {
  out << "{\n  \"version\": " << kMeshFormatVersion << ",\n  \"kind\": \"stats\",\n"
      << "  \"total_cells\": " << stats.total_cells << ",\n  \"leaf_count\": " << stats.leaf_count
      << ",\n  \"masked_leaf_count\": " << stats.masked_leaf_count << ",\n  \"depth_histogram\": {";
  bool first = true;
  for (const auto& [depth, count] : stats.depth_histogram) {
    out << (first ? "" : ", ") << '"' << depth << "\": " << count;
    first = false;
  }
  out << "}\n}\n";
}

template <class T>
std::string to_native_string(const T& value) {
  std::ostringstream out;
  write_native(out, value);
  return std::move(out).str();
}

template std::string to_native_string(const PolyMesh&);
template std::string to_native_string(const UnstructuredMesh&);
template std::string to_native_string(const SelectionMask&);
template std::string to_native_string(const GridStats&);

}  // namespace htg
