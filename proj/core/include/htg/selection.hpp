#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "htg/grid.hpp"
#include "htg/mesh.hpp"

namespace htg {

/// World-space query points. `dimension` must match the grid; unused
/// coordinates are ignored.
struct LocationQuery {
  unsigned dimension = 2;
  std::vector<Vec3> points;
};

struct IdQuery {
  std::vector<GlobalId> ids;
};

struct SelectionRequest {
  std::variant<LocationQuery, IdQuery> kind;
  /// true: return a mask over the input grid; false: extract an unstructured mesh.
  bool preserve_topology = false;
  /// Allow masked (and masked-ancestor) cells to be selected.
  bool include_masked = false;
};

/// One entry per cell of the input grid, indexed by global Id; 1 = selected.
struct SelectionMask {
  std::vector<std::uint8_t> bits;

  std::size_t selected_count() const noexcept;
};

using SelectionOutput = std::variant<SelectionMask, UnstructuredMesh>;

/// Leaves containing at least one query point, in depth-first order. Boxes are
/// half-open [lo, hi) except on the grid's upper boundary, which is closed, so
/// a point selects at most one leaf.
std::vector<GlobalId> select_cells_by_location(const HyperTreeGrid& grid, const LocationQuery& query,
                                               bool include_masked);

/// Cells whose global Id is listed, in depth-first order. A matching coarse
/// cell is selected whole and its subtree is not searched further. Unknown Ids
/// are ignored.
std::vector<GlobalId> select_cells_by_id(const HyperTreeGrid& grid, const IdQuery& query,
                                         bool include_masked);

SelectionOutput extract_selected_locations(const HyperTreeGrid& grid, const SelectionRequest& request);
SelectionOutput extract_selected_ids(const HyperTreeGrid& grid, const SelectionRequest& request);

/// Dispatches on request.kind.
SelectionOutput extract_selection(const HyperTreeGrid& grid, const SelectionRequest& request);

/// Quads (2D) or hexahedra (3D) for the given cells; shared corners are merged
/// by exact coordinate match.
UnstructuredMesh extract_cells(const HyperTreeGrid& grid, const std::vector<GlobalId>& cells);

}  // namespace htg
