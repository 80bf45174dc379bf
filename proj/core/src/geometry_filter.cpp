#include "htg/geometry_filter.hpp"

#include "htg/cursor.hpp"
#include "htg/error.hpp"
#include "mesh_builder.hpp"

namespace htg {

namespace {

void require_dimension(const HyperTreeGrid& grid, unsigned dimension, const char* what) {
  if (grid.dimension() != dimension) {
    throw Error(ErrorCode::WrongDimension, std::string(what) + " needs a " + std::to_string(dimension) +
                                               "D grid, got " + std::to_string(grid.dimension()) + "D");
  }
}

void collect_leaves_2d(const GeometricCursor& cell, detail::QuadBuilder& out, double height_scale) {
  if (cell.is_hidden()) return;
  if (cell.is_leaf()) {
    out.add_cell_rect(cell, static_cast<double>(cell.depth()) * height_scale);
    return;
  }
  for (unsigned c = 0; c < cell.child_count(); ++c) {
    collect_leaves_2d(cell.child(c), out, height_scale);
  }
}

/// True when every leaf of `cell` touching its `side` face along `axis` is hidden.
bool face_fully_hidden(const GeometricCursor& cell, unsigned axis, Side side) {
  if (cell.is_hidden()) return true;
  if (cell.is_leaf()) return false;
  const unsigned f = cell.grid().branching_factor();
  const unsigned wanted = side == Side::Upper ? f - 1 : 0;
  for (unsigned c = 0; c < cell.child_count(); ++c) {
    if (child_coordinates(c, f, 3)[axis] != wanted) continue;
    if (!face_fully_hidden(cell.child(c), axis, side)) return false;
  }
  return true;
}

void collect_faces_3d(const VonNeumannSupercursor& sc, detail::QuadBuilder& out) {
  const GeometricCursor& cell = sc.center();
  if (cell.is_hidden()) return;
  if (!cell.is_leaf()) {
    for (unsigned c = 0; c < cell.child_count(); ++c) collect_faces_3d(sc.child(c), out);
    return;
  }
  for (unsigned axis = 0; axis < 3; ++axis) {
    for (Side side : {Side::Lower, Side::Upper}) {
      const auto& neighbor = sc.neighbor_cursor(axis, side);
      const Side facing = side == Side::Upper ? Side::Lower : Side::Upper;
      if (!neighbor || face_fully_hidden(*neighbor, axis, facing)) {
        out.add_cell_face(cell, axis, side);
      }
    }
  }
}

}  // namespace

PolyMesh extract_surface_2d(const HyperTreeGrid& grid) {
  require_dimension(grid, 2, "extract_surface_2d");
  detail::QuadBuilder out(grid);
  for (std::size_t t = 0; t < grid.tree_count(); ++t) {
    collect_leaves_2d(GeometricCursor::root(grid, t), out, 0.0);
  }
  return out.finish();
}

PolyMesh extract_surface_3d(const HyperTreeGrid& grid) {
  require_dimension(grid, 3, "extract_surface_3d");
  detail::QuadBuilder out(grid);
  for (std::size_t t = 0; t < grid.tree_count(); ++t) {
    collect_faces_3d(VonNeumannSupercursor::root(grid, t), out);
  }
  return out.finish();
}

PolyMesh elevate_by_depth(const HyperTreeGrid& grid, double height_scale) {
  require_dimension(grid, 2, "elevate_by_depth");
  detail::QuadBuilder out(grid);
  for (std::size_t t = 0; t < grid.tree_count(); ++t) {
    collect_leaves_2d(GeometricCursor::root(grid, t), out, height_scale);
  }
  return out.finish();
}

}  // namespace htg
