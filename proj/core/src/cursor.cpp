#include "htg/cursor.hpp"

#include "htg/error.hpp"

namespace htg {

std::array<unsigned, 3> child_coordinates(unsigned child_index, unsigned factor,
                                          unsigned dimension) noexcept {
  std::array<unsigned, 3> coords{0, 0, 0};
  for (unsigned a = 0; a < dimension; ++a) {
    coords[a] = child_index % factor;
    child_index /= factor;
  }
  return coords;
}

GeometricCursor GeometricCursor::root(const HyperTreeGrid& grid, std::size_t tree_index) {
  GeometricCursor cursor;
  cursor.grid_ = &grid;
  cursor.tree_ = &grid.tree(tree_index);
  cursor.tree_index_ = tree_index;
  cursor.tree_offset_ = grid.tree_offset(tree_index);
  cursor.root_ = grid.root_coordinates(tree_index);
  cursor.hidden_ = grid.is_masked(GlobalId{cursor.tree_offset_});
  return cursor;
}

GeometricCursor GeometricCursor::at(const HyperTreeGrid& grid, GlobalId id) {
  const TreeCell where = resolve_id(grid, id);
  const HyperTree& tree = grid.tree(where.tree_index);
  std::vector<unsigned> steps;
  for (std::size_t cell = where.bfs_index; cell != 0;) {
    const std::size_t parent = tree.parent(cell);
    steps.push_back(static_cast<unsigned>(cell - tree.first_child(parent)));
    cell = parent;
  }
  GeometricCursor cursor = root(grid, where.tree_index);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) cursor = cursor.child(*it);
  return cursor;
}

GeometricCursor GeometricCursor::child(unsigned child_index) const {
  if (is_leaf()) {
    throw Error(ErrorCode::NotRefined, "cell " + std::to_string(bfs_index_) + " of tree " +
                                           std::to_string(tree_index_) + " is a leaf");
  }
  if (child_index >= child_count()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "child " + std::to_string(child_index) + " >= " + std::to_string(child_count()));
  }
  const unsigned f = grid_->branching_factor();
  const auto coords = child_coordinates(child_index, f, grid_->dimension());
  GeometricCursor next = *this;
  next.bfs_index_ = tree_->first_child(bfs_index_) + child_index;
  next.depth_ = depth_ + 1;
  next.divisions_ = divisions_ * f;
  for (unsigned a = 0; a < grid_->dimension(); ++a) {
    next.lattice_[a] = lattice_[a] * f + coords[a];
  }
  next.hidden_ = hidden_ || next.is_masked();
  return next;
}

Box GeometricCursor::box() const noexcept {
  Box box;
  for (unsigned a = 0; a < grid_->dimension(); ++a) {
    box.lo[a] = grid_->lattice_coordinate(a, root_[a], lattice_[a], divisions_);
    box.hi[a] = grid_->lattice_coordinate(a, root_[a], lattice_[a] + 1, divisions_);
  }
  return box;
}

Vec3 GeometricCursor::size() const noexcept {
  const Box b = box();
  return {b.hi[0] - b.lo[0], b.hi[1] - b.lo[1], b.hi[2] - b.lo[2]};
}

std::vector<unsigned> GeometricCursor::path() const {
  const unsigned f = grid_->branching_factor();
  std::vector<unsigned> steps(depth_, 0);
  auto lattice = lattice_;
  for (unsigned level = depth_; level-- > 0;) {
    unsigned child = 0;
    unsigned stride = 1;
    for (unsigned a = 0; a < grid_->dimension(); ++a) {
      child += static_cast<unsigned>(lattice[a] % f) * stride;
      lattice[a] /= f;
      stride *= f;
    }
    steps[level] = child;
  }
  return steps;
}

VonNeumannSupercursor VonNeumannSupercursor::root(const HyperTreeGrid& grid, std::size_t tree_index) {
  VonNeumannSupercursor sc(GeometricCursor::root(grid, tree_index));
  const auto root = grid.root_coordinates(tree_index);
  for (unsigned a = 0; a < grid.dimension(); ++a) {
    for (int step : {-1, 1}) {
      std::array<std::ptrdiff_t, 3> coords{static_cast<std::ptrdiff_t>(root[0]),
                                           static_cast<std::ptrdiff_t>(root[1]),
                                           static_cast<std::ptrdiff_t>(root[2])};
      coords[a] += step;
      if (const auto neighbor = grid.tree_at(coords)) {
        sc.neighbors_[2 * a + (step > 0 ? 1 : 0)] = GeometricCursor::root(grid, *neighbor);
      }
    }
  }
  return sc;
}

VonNeumannSupercursor VonNeumannSupercursor::child(unsigned child_index) const {
  const HyperTreeGrid& grid = center_.grid();
  const unsigned f = grid.branching_factor();
  const unsigned dim = grid.dimension();
  VonNeumannSupercursor next(center_.child(child_index));
  const auto coords = child_coordinates(child_index, f, dim);

  unsigned stride = 1;
  for (unsigned a = 0; a < dim; ++a, stride *= f) {
    // Lower face: sibling when not on the parent's lower boundary, otherwise
    // the matching child of the parent's lower neighbor (or that neighbor
    // itself when it is coarser or a leaf).
    if (coords[a] > 0) {
      next.neighbors_[2 * a] = center_.child(child_index - stride);
    } else if (const auto& outer = neighbors_[2 * a]) {
      if (outer->depth() == center_.depth() && !outer->is_leaf()) {
        next.neighbors_[2 * a] = outer->child(child_index + (f - 1) * stride);
      } else {
        next.neighbors_[2 * a] = outer;
      }
    }

    if (coords[a] + 1 < f) {
      next.neighbors_[2 * a + 1] = center_.child(child_index + stride);
    } else if (const auto& outer = neighbors_[2 * a + 1]) {
      if (outer->depth() == center_.depth() && !outer->is_leaf()) {
        next.neighbors_[2 * a + 1] = outer->child(child_index - (f - 1) * stride);
      } else {
        next.neighbors_[2 * a + 1] = outer;
      }
    }
  }
  return next;
}

std::optional<NeighborInfo> VonNeumannSupercursor::neighbor(unsigned axis, Side side) const {
  const auto& cursor = neighbor_cursor(axis, side);
  if (!cursor) return std::nullopt;
  return NeighborInfo{cursor->tree_index(), cursor->bfs_index(), cursor->depth(), cursor->is_hidden(),
                      cursor->is_leaf()};
}

}  // namespace htg
