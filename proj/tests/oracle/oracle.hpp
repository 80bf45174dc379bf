#pragma once

// Brute-force reference implementations used by the tests. Nothing here uses
// the library's cursors, rank directory or filters: cells are enumerated by a
// plain breadth-first walk over the descriptor bits and geometry is derived
// from integer lattice positions.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "htg/adaptive_surface.hpp"
#include "htg/grid.hpp"
#include "htg/mesh.hpp"

namespace oracle {

using htg::Box;
using htg::HyperTreeGrid;
using htg::Vec3;

struct Cell {
  std::size_t tree = 0;
  std::size_t bfs = 0;
  std::uint64_t gid = 0;
  unsigned depth = 0;
  bool refined = false;
  bool own_mask = false;
  bool hidden = false;  // own mask or any ancestor masked
  std::optional<std::uint64_t> parent;  // global Id
  std::array<std::size_t, 3> root{0, 0, 0};
  std::array<std::uint64_t, 3> lattice{0, 0, 0};  // within the root, f^depth per axis
  std::uint64_t divisions = 1;
  Box box;
};

/// Every cell of the grid, indexed by global Id.
std::vector<Cell> enumerate(const HyperTreeGrid& grid);

/// World coordinate of lattice line i of n along one axis of a root slab.
double world(const HyperTreeGrid& grid, unsigned axis, std::size_t root, std::uint64_t i, std::uint64_t n);

/// Position on the grid-wide lattice of f^L cells per root (L >= every depth).
struct FineBox {
  std::array<std::uint64_t, 3> lo{0, 0, 0};
  std::array<std::uint64_t, 3> hi{0, 0, 0};
};
FineBox fine_box(const HyperTreeGrid& grid, const Cell& cell, unsigned fine_depth);

/// (box, global id) pairs, compared exactly.
using QuadKey = std::tuple<std::array<double, 3>, std::array<double, 3>, std::uint64_t>;
using QuadSet = std::multiset<QuadKey>;

/// Axis-aligned bounding box and global_id attribute of every quad.
QuadSet quads_of(const htg::PolyMesh& mesh);
QuadKey key_of(const Cell& cell);

/// Visible leaves of a 2D grid.
QuadSet surface_2d(const HyperTreeGrid& grid);

/// Largest k >= 0 with s * f^k <= w * z, by repeated multiplication.
unsigned depth_cap(double w, double z, double s, unsigned f);

/// Cells emitted by a depth-capped, rectangle-culled traversal: visible, depth
/// <= cap, closed-intersecting the rectangle, and either a leaf or at depth cap.
QuadSet adaptive(const HyperTreeGrid& grid, unsigned cap, const htg::ViewRect& rect);

/// One 3D boundary face: owning cell, axis, side (0 lower, 1 upper), exact box.
struct Face {
  std::uint64_t gid;
  unsigned axis;
  unsigned side;
  Box box;
  auto operator<=>(const Face&) const = default;
};

/// Faces of visible 3D leaves that have no visible leaf across them. A face is
/// kept when every leaf on the far side whose face overlaps it with positive
/// area is hidden (or there is no such leaf).
std::multiset<Face> surface_3d(const HyperTreeGrid& grid);

/// Reads faces back from a mesh: axis = the flat axis of the quad's bounding
/// box, side = sign of the winding normal along that axis.
std::multiset<Face> faces_of(const htg::PolyMesh& mesh);

/// Leaves containing a query point, half-open boxes with the grid's upper
/// boundary closed.
std::set<std::uint64_t> select_locations(const HyperTreeGrid& grid, const std::vector<Vec3>& points,
                                         bool include_masked);

/// Cells listed in `ids` that have no listed ancestor.
std::set<std::uint64_t> select_ids(const HyperTreeGrid& grid, const std::vector<std::uint64_t>& ids,
                                   bool include_masked);

/// Deepest cell of depth <= max_depth whose (closed) box contains p, by scanning
/// every cell.
std::optional<std::uint64_t> deepest_containing(const std::vector<Cell>& cells, unsigned dimension,
                                                const Vec3& p, unsigned max_depth);

}  // namespace oracle
