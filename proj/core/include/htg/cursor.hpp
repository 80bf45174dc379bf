#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "htg/grid.hpp"

namespace htg {

/// Traversal handle over one hypertree. Tracks the cell's integer position on
/// the tree's lattice at its depth; origin and size are derived from that
/// position, so any descent path reproduces the same geometry bit for bit.
class GeometricCursor {
 public:
  static GeometricCursor root(const HyperTreeGrid& grid, std::size_t tree_index);
  /// Cursor positioned on an arbitrary cell, found by walking its parent chain.
  static GeometricCursor at(const HyperTreeGrid& grid, GlobalId id);

  /// Child ordering is row-major over the f x f (x f) block, x fastest.
  GeometricCursor child(unsigned child_index) const;

  const HyperTreeGrid& grid() const noexcept { return *grid_; }
  std::size_t tree_index() const noexcept { return tree_index_; }
  std::size_t bfs_index() const noexcept { return bfs_index_; }
  unsigned depth() const noexcept { return depth_; }
  GlobalId global_id() const noexcept { return GlobalId{tree_offset_ + bfs_index_}; }

  bool is_leaf() const noexcept { return !tree_->is_refined(bfs_index_); }
  unsigned child_count() const noexcept { return grid_->children_per_cell(); }

  /// Own mask bit.
  bool is_masked() const noexcept { return grid_->is_masked(global_id()); }
  /// Masked itself or below a masked ancestor.
  bool is_hidden() const noexcept { return hidden_; }

  Box box() const noexcept;
  Vec3 origin() const noexcept { return box().lo; }
  Vec3 size() const noexcept;

  /// Position within the tree's lattice of f^depth cells per axis.
  const std::array<std::uint64_t, 3>& lattice_index() const noexcept { return lattice_; }
  std::uint64_t divisions() const noexcept { return divisions_; }
  std::array<std::size_t, 3> root_coordinates() const noexcept { return root_; }

  /// Child indices taken from the root down to this cell.
  std::vector<unsigned> path() const;

 private:
  GeometricCursor() = default;

  const HyperTreeGrid* grid_ = nullptr;
  const HyperTree* tree_ = nullptr;
  std::size_t tree_index_ = 0;
  std::size_t tree_offset_ = 0;
  std::size_t bfs_index_ = 0;
  unsigned depth_ = 0;
  bool hidden_ = false;
  std::uint64_t divisions_ = 1;
  std::array<std::size_t, 3> root_{0, 0, 0};
  std::array<std::uint64_t, 3> lattice_{0, 0, 0};
};

/// Per-axis child coordinates of `child_index` for branching factor `factor`.
std::array<unsigned, 3> child_coordinates(unsigned child_index, unsigned factor,
                                          unsigned dimension) noexcept;

enum class Side : unsigned { Lower = 0, Upper = 1 };

struct NeighborInfo {
  std::size_t tree_index = 0;
  std::size_t bfs_index = 0;
  unsigned depth = 0;
  /// Effective mask: the neighbor or one of its ancestors is masked.
  bool masked = false;
  bool is_leaf = false;
};

/// Cursor plus its 2d face neighbors. A neighbor is either at the center's
/// depth or is a coarser leaf covering the adjacent region; it is never
/// deeper than the center. Neighbors are resolved across root boundaries.
class VonNeumannSupercursor {
 public:
  static VonNeumannSupercursor root(const HyperTreeGrid& grid, std::size_t tree_index);

  VonNeumannSupercursor child(unsigned child_index) const;

  const GeometricCursor& center() const noexcept { return center_; }
  unsigned face_count() const noexcept { return 2 * center_.grid().dimension(); }

  const std::optional<GeometricCursor>& neighbor_cursor(unsigned axis, Side side) const noexcept {
    return neighbors_[2 * axis + static_cast<unsigned>(side)];
  }
  std::optional<NeighborInfo> neighbor(unsigned axis, Side side) const;

 private:
  explicit VonNeumannSupercursor(GeometricCursor center) : center_(std::move(center)) {}

  GeometricCursor center_;
  std::array<std::optional<GeometricCursor>, 6> neighbors_;
};

}  // namespace htg
