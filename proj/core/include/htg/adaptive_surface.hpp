#pragma once

#include <array>
#include <optional>

#include "htg/grid.hpp"
#include "htg/mesh.hpp"

namespace htg {

/// Parallel-projection view of a 2D grid.
///
/// zoom = 1 means the grid's full x-extent spans window_w pixels, so
/// window_w * zoom is the number of pixels covered by the grid horizontally.
/// scale_threshold is the smallest on-screen cell extent, in pixels, worth
/// refining into.
struct Camera2D {
  double window_w = 1.0;
  double window_h = 1.0;
  std::array<double, 2> center{0.0, 0.0};
  double zoom = 1.0;
  double scale_threshold = 1.0;

  /// Throws NonPositiveArgument unless window >= 1 pixel, zoom > 0, threshold > 0.
  void validate() const;
};

/// World-space rectangle visible through a camera. Intersection tests are
/// closed: touching the border counts as visible.
struct ViewRect {
  std::array<double, 2> min{0.0, 0.0};
  std::array<double, 2> max{0.0, 0.0};

  bool intersects(const Box& box) const noexcept {
    return box.lo[0] <= max[0] && min[0] <= box.hi[0] && box.lo[1] <= max[1] && min[1] <= box.hi[1];
  }
};

/// Depth beyond which cells would shrink below the pixel threshold:
/// (log(w*z) - log(s)) / log(f).
double max_depth(double window_w, double zoom, double scale_threshold, unsigned branching_factor);

/// Deepest level the adaptive traversal may emit: max(0, floor(max_depth)).
/// A slack of 1e-9 absorbs rounding when w*z/s is an exact power of f.
unsigned depth_cap(const Camera2D& camera, unsigned branching_factor);

ViewRect view_rect(const Camera2D& camera, const HyperTreeGrid& grid);

/// Camera-dependent surface of a 2D grid: subtrees outside the view are
/// skipped, and refined cells at depth_cap are emitted as one quad using their
/// own attributes. 3D grids fall back to extract_surface_3d.
PolyMesh adaptive_surface(const HyperTreeGrid& grid, const Camera2D& camera);

PolyMesh surface_for_camera_or_full(const HyperTreeGrid& grid, const std::optional<Camera2D>& camera);

}  // namespace htg
