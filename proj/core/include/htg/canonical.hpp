#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "htg/grid.hpp"

namespace htg {

/// Seeded random refinement: a cell at depth d (< max_depth) is refined with
/// probability refine_base * refine_decay^d. Each leaf is then masked with
/// probability mask_density; no mask is attached when the density is 0.
///
/// Generated grids carry two fields: `level` (the cell depth) and `radius`
/// (distance from the cell center to the center of the domain).
struct RandomGridOptions {
  unsigned dimension = 2;
  unsigned factor = 2;
  std::array<std::size_t, 3> root_extent{1, 1, 1};
  unsigned max_depth = 3;
  double refine_base = 0.7;
  double refine_decay = 0.8;
  double mask_density = 0.0;
  std::uint64_t seed = 0;
  double root_size = 1.0;
};

HyperTreeGrid generate_random_grid(const RandomGridOptions& options);

/// Single root refined everywhere down to `depth`.
HyperTreeGrid uniform_grid(unsigned dimension, unsigned factor, unsigned depth, double mask_density = 0.0,
                           std::uint64_t seed = 0);

/// Named reference grids:
///   paper2d         d=2, f=2, 2x3 roots, depth <= 5
///   paper3d         d=3, f=3, 3x3x2 roots, depth <= 3
///   uniform(d,f,k)  one root fully refined to depth k
/// Throws UnknownCanonicalGrid for anything else.
HyperTreeGrid canonical_grid(std::string_view name, std::uint64_t seed, double mask_density);

}  // namespace htg
