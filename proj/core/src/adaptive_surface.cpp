#include "htg/adaptive_surface.hpp"

#include <algorithm>
#include <cmath>

#include "htg/cursor.hpp"
#include "htg/error.hpp"
#include "htg/geometry_filter.hpp"
#include "mesh_builder.hpp"

namespace htg {

namespace {

// Past the deepest representable tree level a larger cap changes nothing.
constexpr double kDepthCapCeiling = 64.0;
constexpr double kFloorSlack = 1e-9;

void collect_visible(const GeometricCursor& cell, const ViewRect& rect, unsigned cap,
                     detail::QuadBuilder& out) {
  if (cell.is_hidden()) return;
  if (!rect.intersects(cell.box())) return;
  if (cell.is_leaf() || cell.depth() >= cap) {
    out.add_cell_rect(cell);
    return;
  }
  for (unsigned c = 0; c < cell.child_count(); ++c) {
    collect_visible(cell.child(c), rect, cap, out);
  }
}

}  // namespace

void Camera2D::validate() const {
  if (!(window_w >= 1.0) || !(window_h >= 1.0)) {
    throw Error(ErrorCode::NonPositiveArgument, "window must be at least 1x1 pixel");
  }
  if (!(zoom > 0.0) || !std::isfinite(zoom)) {
    throw Error(ErrorCode::NonPositiveArgument, "zoom must be positive");
  }
  if (!(scale_threshold > 0.0) || !std::isfinite(scale_threshold)) {
    throw Error(ErrorCode::NonPositiveArgument, "scale threshold must be positive");
  }
  if (!std::isfinite(center[0]) || !std::isfinite(center[1]) || !std::isfinite(window_w) ||
      !std::isfinite(window_h)) {
    throw Error(ErrorCode::NonPositiveArgument, "camera parameters must be finite");
  }
}

double max_depth(double window_w, double zoom, double scale_threshold, unsigned branching_factor) {
  const double pixels = window_w * zoom;
  if (!(pixels > 0.0) || !(scale_threshold > 0.0)) {
    throw Error(ErrorCode::NonPositiveArgument, "max_depth needs w*z > 0 and s > 0");
  }
  if (branching_factor != 2 && branching_factor != 3) {
    throw Error(ErrorCode::NonPositiveArgument, "branching factor must be 2 or 3");
  }
  return (std::log(pixels) - std::log(scale_threshold)) / std::log(static_cast<double>(branching_factor));
}

unsigned depth_cap(const Camera2D& camera, unsigned branching_factor) {
  const double depth = max_depth(camera.window_w, camera.zoom, camera.scale_threshold, branching_factor);
  const double floored = std::floor(depth + kFloorSlack);
  return static_cast<unsigned>(std::clamp(floored, 0.0, kDepthCapCeiling));
}

ViewRect view_rect(const Camera2D& camera, const HyperTreeGrid& grid) {
  if (grid.dimension() != 2) {
    throw Error(ErrorCode::WrongDimension, "view_rect needs a 2D grid");
  }
  camera.validate();
  const Box bounds = grid.bounds();
  const double pixels_per_unit = camera.window_w * camera.zoom / (bounds.hi[0] - bounds.lo[0]);
  const double half_w = camera.window_w / (2.0 * pixels_per_unit);
  const double half_h = camera.window_h / (2.0 * pixels_per_unit);
  return ViewRect{{camera.center[0] - half_w, camera.center[1] - half_h},
                  {camera.center[0] + half_w, camera.center[1] + half_h}};
}

PolyMesh adaptive_surface(const HyperTreeGrid& grid, const Camera2D& camera) {
  camera.validate();
  if (grid.dimension() == 3) return extract_surface_3d(grid);

  const ViewRect rect = view_rect(camera, grid);
  const unsigned cap = depth_cap(camera, grid.branching_factor());
  detail::QuadBuilder out(grid);
  for (std::size_t t = 0; t < grid.tree_count(); ++t) {
    collect_visible(GeometricCursor::root(grid, t), rect, cap, out);
  }
  return out.finish();
}

PolyMesh surface_for_camera_or_full(const HyperTreeGrid& grid, const std::optional<Camera2D>& camera) {
  if (camera) return adaptive_surface(grid, *camera);
  return grid.dimension() == 2 ? extract_surface_2d(grid) : extract_surface_3d(grid);
}

}  // namespace htg
