#include "htg/selection.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "htg/cursor.hpp"
#include "htg/error.hpp"
#include "mesh_builder.hpp"

namespace htg {

namespace {

struct LocationSearch {
  const std::vector<Vec3>& points;
  Box grid_bounds;
  unsigned dimension;
  bool include_masked;
  std::vector<GeometricCursor> selected;

  bool contains(const Box& box, const Vec3& p) const noexcept {
    for (unsigned a = 0; a < dimension; ++a) {
      if (!(box.lo[a] <= p[a])) return false;
      const bool closed_top = box.hi[a] == grid_bounds.hi[a];
      if (!(p[a] < box.hi[a] || (closed_top && p[a] == box.hi[a]))) return false;
    }
    return true;
  }

  void visit(const GeometricCursor& cell, const std::vector<std::size_t>& candidates) {
    if (!include_masked && cell.is_hidden()) return;
    const Box box = cell.box();
    std::vector<std::size_t> inside;
    for (std::size_t i : candidates) {
      if (contains(box, points[i])) inside.push_back(i);
    }
    if (inside.empty()) return;
    if (cell.is_leaf()) {
      selected.push_back(cell);
      return;
    }
    for (unsigned c = 0; c < cell.child_count(); ++c) visit(cell.child(c), inside);
  }
};

struct IdSearch {
  const std::vector<std::uint64_t>& wanted;  // sorted
  bool include_masked;
  std::vector<GeometricCursor> selected;

  void visit(const GeometricCursor& cell) {
    if (!include_masked && cell.is_hidden()) return;
    if (std::binary_search(wanted.begin(), wanted.end(), cell.global_id().value)) {
      selected.push_back(cell);
      return;
    }
    if (cell.is_leaf()) return;
    for (unsigned c = 0; c < cell.child_count(); ++c) visit(cell.child(c));
  }
};

std::vector<GeometricCursor> locate_cells(const HyperTreeGrid& grid, const LocationQuery& query,
                                          bool include_masked) {
  if (query.dimension != grid.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "query points are " + std::to_string(query.dimension) +
                                                  "D, grid is " + std::to_string(grid.dimension()) + "D");
  }
  LocationSearch search{query.points, grid.bounds(), grid.dimension(), include_masked, {}};
  std::vector<std::size_t> all(query.points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (all.empty()) return {};
  for (std::size_t t = 0; t < grid.tree_count(); ++t) {
    search.visit(GeometricCursor::root(grid, t), all);
  }
  return std::move(search.selected);
}

std::vector<GeometricCursor> find_ids(const HyperTreeGrid& grid, const IdQuery& query, bool include_masked) {
  std::vector<std::uint64_t> wanted;
  wanted.reserve(query.ids.size());
  for (const auto& id : query.ids) wanted.push_back(id.value);
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  IdSearch search{wanted, include_masked, {}};
  if (wanted.empty()) return {};
  for (std::size_t t = 0; t < grid.tree_count(); ++t) {
    search.visit(GeometricCursor::root(grid, t));
  }
  return std::move(search.selected);
}

struct Vec3Hash {
  std::size_t operator()(const Vec3& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (double v : p) {
      h ^= std::bit_cast<std::uint64_t>(v + 0.0);  // fold -0.0 onto 0.0
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

UnstructuredMesh mesh_from_cursors(const HyperTreeGrid& grid, const std::vector<GeometricCursor>& cells) {
  UnstructuredMesh mesh;
  detail::AttributeWriter attributes(grid);
  std::unordered_map<Vec3, std::size_t, Vec3Hash> point_index;
  auto point = [&](double x, double y, double z) {
    const Vec3 p{x + 0.0, y + 0.0, z + 0.0};
    const auto [it, inserted] = point_index.try_emplace(p, mesh.points.size());
    if (inserted) mesh.points.push_back(p);
    return it->second;
  };

  const bool is3d = grid.dimension() == 3;
  for (const auto& cell : cells) {
    const Box b = cell.box();
    UnstructuredCell out;
    out.type = is3d ? CellType::Hexahedron : CellType::Quad;
    out.points[0] = point(b.lo[0], b.lo[1], b.lo[2]);
    out.points[1] = point(b.hi[0], b.lo[1], b.lo[2]);
    out.points[2] = point(b.hi[0], b.hi[1], b.lo[2]);
    out.points[3] = point(b.lo[0], b.hi[1], b.lo[2]);
    if (is3d) {
      out.points[4] = point(b.lo[0], b.lo[1], b.hi[2]);
      out.points[5] = point(b.hi[0], b.lo[1], b.hi[2]);
      out.points[6] = point(b.hi[0], b.hi[1], b.hi[2]);
      out.points[7] = point(b.lo[0], b.hi[1], b.hi[2]);
    }
    mesh.cells.push_back(out);
    attributes.append(cell);
  }
  mesh.cell_attributes = attributes.finish();
  return mesh;
}

SelectionOutput make_output(const HyperTreeGrid& grid, const std::vector<GeometricCursor>& cells,
                            bool preserve_topology) {
  if (preserve_topology) {
    SelectionMask mask;
    mask.bits.assign(grid.total_cells(), 0);
    for (const auto& cell : cells) mask.bits[static_cast<std::size_t>(cell.global_id().value)] = 1;
    return mask;
  }
  return mesh_from_cursors(grid, cells);
}

std::vector<GlobalId> ids_of(const std::vector<GeometricCursor>& cells) {
  std::vector<GlobalId> ids;
  ids.reserve(cells.size());
  for (const auto& cell : cells) ids.push_back(cell.global_id());
  return ids;
}

}  // namespace

std::size_t SelectionMask::selected_count() const noexcept {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

std::vector<GlobalId> select_cells_by_location(const HyperTreeGrid& grid, const LocationQuery& query,
                                               bool include_masked) {
  return ids_of(locate_cells(grid, query, include_masked));
}

std::vector<GlobalId> select_cells_by_id(const HyperTreeGrid& grid, const IdQuery& query,
                                         bool include_masked) {
  return ids_of(find_ids(grid, query, include_masked));
}

SelectionOutput extract_selected_locations(const HyperTreeGrid& grid, const SelectionRequest& request) {
  const auto* query = std::get_if<LocationQuery>(&request.kind);
  if (query == nullptr) {
    throw Error(ErrorCode::BadParams, "extract_selected_locations needs a location request");
  }
  return make_output(grid, locate_cells(grid, *query, request.include_masked), request.preserve_topology);
}

SelectionOutput extract_selected_ids(const HyperTreeGrid& grid, const SelectionRequest& request) {
  const auto* query = std::get_if<IdQuery>(&request.kind);
  if (query == nullptr) {
    throw Error(ErrorCode::BadParams, "extract_selected_ids needs an Id request");
  }
  return make_output(grid, find_ids(grid, *query, request.include_masked), request.preserve_topology);
}

SelectionOutput extract_selection(const HyperTreeGrid& grid, const SelectionRequest& request) {
  if (std::holds_alternative<LocationQuery>(request.kind)) return extract_selected_locations(grid, request);
  return extract_selected_ids(grid, request);
}

UnstructuredMesh extract_cells(const HyperTreeGrid& grid, const std::vector<GlobalId>& cells) {
  std::vector<GeometricCursor> cursors;
  cursors.reserve(cells.size());
  for (const auto& id : cells) cursors.push_back(GeometricCursor::at(grid, id));
  return mesh_from_cursors(grid, cursors);
}

}  // namespace htg
