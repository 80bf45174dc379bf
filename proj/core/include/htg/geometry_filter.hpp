#pragma once

#include "htg/grid.hpp"
#include "htg/mesh.hpp"

namespace htg {

/// One quad per visible leaf of a 2D grid, in depth-first order over trees
/// then children. A cell is not visible when it or any ancestor is masked.
PolyMesh extract_surface_2d(const HyperTreeGrid& grid);

/// Outer surface of a 3D grid. A face of a visible leaf is emitted when
/// nothing lies across it, or when every leaf across it that overlaps the face
/// is hidden. Faces on the finer side of a refinement jump are emitted
/// individually.
PolyMesh extract_surface_3d(const HyperTreeGrid& grid);

/// extract_surface_2d lifted to 3D with z = depth * height_scale.
PolyMesh elevate_by_depth(const HyperTreeGrid& grid, double height_scale);

}  // namespace htg
