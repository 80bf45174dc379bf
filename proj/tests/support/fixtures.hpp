#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "htg/adaptive_surface.hpp"
#include "htg/canonical.hpp"
#include "htg/grid.hpp"

namespace fixtures {

inline htg::HyperTreeGrid single_root(unsigned dimension, unsigned factor, const std::string& descriptor,
                                      std::optional<std::string> mask = std::nullopt) {
  return htg::build_grid(htg::GridSpec::uniform(dimension, factor, {1, 1, 1}),
                         std::vector<std::string>{descriptor}, mask);
}

inline double uniform01(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

struct RandomGridShape {
  unsigned dimension = 2;
  unsigned factor = 2;
  unsigned max_depth = 4;
  double mask_density = 0.0;
  double refine_base = 0.7;
  std::size_t max_roots_per_axis = 3;
  /// Non-uniform axis spacing instead of unit roots.
  bool rectilinear = true;
};

/// Seeded random grid. Axis coordinates are strictly increasing with random
/// gaps, so root cells are generally not squares.
inline htg::HyperTreeGrid random_grid(std::uint64_t seed, const RandomGridShape& shape) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 17);
  htg::RandomGridOptions o;
  o.dimension = shape.dimension;
  o.factor = shape.factor;
  o.max_depth = shape.max_depth;
  o.mask_density = shape.mask_density;
  o.refine_base = shape.refine_base;
  o.seed = seed;
  for (unsigned a = 0; a < shape.dimension; ++a) {
    o.root_extent[a] = 1 + rng() % shape.max_roots_per_axis;
  }
  htg::HyperTreeGrid base = htg::generate_random_grid(o);
  if (!shape.rectilinear) return base;

  htg::GridSpec spec = base.spec();
  for (unsigned a = 0; a < shape.dimension; ++a) {
    auto& coords = spec.axis_coordinates[a];
    double x = -2.0 + 4.0 * uniform01(rng);
    for (auto& c : coords) {
      c = x;
      x += 0.25 + 2.0 * uniform01(rng);
    }
  }
  std::vector<htg::HyperTree> trees(base.trees().begin(), base.trees().end());
  std::optional<std::vector<bool>> mask;
  if (base.has_mask()) mask.emplace(base.mask().begin(), base.mask().end());
  return htg::build_grid(spec, std::move(trees), std::move(mask), base.fields());
}

/// Camera whose view rectangle covers the whole grid, with the threshold set
/// so that depth_cap exceeds every depth in the grid.
inline htg::Camera2D full_view(const htg::HyperTreeGrid& grid) {
  const htg::Box b = grid.bounds();
  htg::Camera2D cam;
  const double wx = b.hi[0] - b.lo[0];
  const double wy = b.hi[1] - b.lo[1];
  cam.window_w = 1000.0;
  cam.window_h = std::ceil(1000.0 * wy / wx) + 1.0;
  cam.zoom = 1.0;
  cam.center = {(b.lo[0] + b.hi[0]) / 2, (b.lo[1] + b.hi[1]) / 2};
  cam.scale_threshold = 1000.0 / std::pow(static_cast<double>(grid.branching_factor()), grid.depth_limit() + 1.5);
  return cam;
}

/// Random camera anywhere near the grid: random window, zoom spanning four
/// orders of magnitude, random threshold, centre up to half a domain outside.
inline htg::Camera2D random_camera(std::mt19937_64& rng, const htg::HyperTreeGrid& grid) {
  const htg::Box b = grid.bounds();
  htg::Camera2D cam;
  cam.window_w = 1.0 + std::floor(uniform01(rng) * 1500.0);
  cam.window_h = 1.0 + std::floor(uniform01(rng) * 1500.0);
  cam.zoom = std::pow(10.0, -1.0 + 3.0 * uniform01(rng));
  cam.scale_threshold = std::pow(10.0, -1.0 + 3.0 * uniform01(rng));
  for (unsigned a = 0; a < 2; ++a) {
    const double w = b.hi[a] - b.lo[a];
    cam.center[a] = b.lo[a] - 0.5 * w + 2.0 * w * uniform01(rng);
  }
  return cam;
}

}  // namespace fixtures
