#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "htg/grid.hpp"

namespace htg {

/// Rectangles in 2D or 3D. Points are always 3-vectors (z = 0 for planar
/// output); each quad is counter-clockwise seen from its outward normal.
/// cell_attributes always holds `depth` and `global_id`, plus one array per
/// grid field, each aligned with `quads`.
struct PolyMesh {
  std::vector<Vec3> points;
  std::vector<std::array<std::size_t, 4>> quads;
  FieldMap cell_attributes;

  std::size_t quad_count() const noexcept { return quads.size(); }
};

enum class CellType : std::uint8_t { Quad = 4, Hexahedron = 8 };

constexpr unsigned point_count(CellType type) noexcept { return static_cast<unsigned>(type); }

struct UnstructuredCell {
  CellType type = CellType::Quad;
  /// Only the first point_count(type) entries are used. Hexahedra list the
  /// lower z face counter-clockwise, then the upper face in the same order.
  std::array<std::size_t, 8> points{};
};

struct UnstructuredMesh {
  std::vector<Vec3> points;
  std::vector<UnstructuredCell> cells;
  FieldMap cell_attributes;

  std::size_t cell_count() const noexcept { return cells.size(); }
};

}  // namespace htg
