#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "htg/hyper_tree.hpp"

namespace htg {

using Vec3 = std::array<double, 3>;

/// Rectilinear layout of root cells. Unused axes (z in 2D) are ignored.
struct GridSpec {
  unsigned dimension = 2;
  unsigned branching_factor = 2;
  std::array<std::size_t, 3> root_extent{1, 1, 1};
  std::array<std::vector<double>, 3> axis_coordinates;

  unsigned children_per_cell() const noexcept {
    unsigned n = 1;
    for (unsigned a = 0; a < dimension; ++a) n *= branching_factor;
    return n;
  }
  std::size_t root_count() const noexcept {
    std::size_t n = 1;
    for (unsigned a = 0; a < dimension; ++a) n *= root_extent[a];
    return n;
  }

  /// Evenly spaced unit-per-root layout starting at the origin.
  static GridSpec uniform(unsigned dimension, unsigned factor,
                          std::array<std::size_t, 3> root_extent, double root_size = 1.0);
};

/// Identifies a cell across all trees: tree_offset(t) + bfs_index.
struct GlobalId {
  std::uint64_t value = 0;
  auto operator<=>(const GlobalId&) const = default;
};

struct TreeCell {
  std::size_t tree_index = 0;
  std::size_t bfs_index = 0;
  auto operator<=>(const TreeCell&) const = default;
};

/// Axis-aligned cell box in world units; unused axes are zero.
struct Box {
  Vec3 lo{0.0, 0.0, 0.0};
  Vec3 hi{0.0, 0.0, 0.0};
  auto operator<=>(const Box&) const = default;
};

using FieldMap = std::map<std::string, std::vector<double>>;

/// Immutable hypertree grid. Build with build_grid(); every accessor is safe
/// to call concurrently.
class HyperTreeGrid {
 public:
  const GridSpec& spec() const noexcept { return spec_; }
  unsigned dimension() const noexcept { return spec_.dimension; }
  unsigned branching_factor() const noexcept { return spec_.branching_factor; }
  unsigned children_per_cell() const noexcept { return spec_.children_per_cell(); }

  std::size_t tree_count() const noexcept { return trees_.size(); }
  const HyperTree& tree(std::size_t tree_index) const;
  std::span<const HyperTree> trees() const noexcept { return trees_; }
  std::size_t tree_offset(std::size_t tree_index) const;
  std::size_t total_cells() const noexcept { return tree_offsets_.back(); }
  unsigned depth_limit() const noexcept { return depth_limit_; }

  /// Per-axis root coordinates of a tree (row-major, x fastest).
  std::array<std::size_t, 3> root_coordinates(std::size_t tree_index) const;
  /// Inverse of root_coordinates; nullopt when any coordinate is out of range.
  std::optional<std::size_t> tree_at(const std::array<std::ptrdiff_t, 3>& coords) const;

  /// World coordinate of lattice line `index` (0..divisions) along `axis` of
  /// the root slab `root`. Identical rational positions always produce
  /// identical doubles, so neighboring cells share exact face coordinates.
  double lattice_coordinate(unsigned axis, std::size_t root, std::uint64_t index,
                            std::uint64_t divisions) const noexcept;

  Box bounds() const noexcept;

  bool has_mask() const noexcept { return !mask_.empty(); }
  /// One byte per cell (1 = masked); empty when the grid carries no mask.
  std::span<const std::uint8_t> mask() const noexcept { return mask_; }
  /// Own mask bit; false when the grid carries no mask.
  bool is_masked(GlobalId id) const noexcept {
    return !mask_.empty() && mask_[static_cast<std::size_t>(id.value)] != 0;
  }

  const FieldMap& fields() const noexcept { return fields_; }
  const std::vector<double>* field(const std::string& name) const;

 private:
  friend HyperTreeGrid build_grid(GridSpec, std::vector<HyperTree>, std::optional<std::vector<bool>>,
                                  FieldMap);
  HyperTreeGrid() = default;

  GridSpec spec_;
  std::vector<HyperTree> trees_;
  std::vector<std::size_t> tree_offsets_{0};
  std::vector<std::uint8_t> mask_;
  FieldMap fields_;
  unsigned depth_limit_ = 0;
};

HyperTreeGrid build_grid(GridSpec spec, std::vector<HyperTree> trees,
                         std::optional<std::vector<bool>> mask = std::nullopt, FieldMap fields = {});

/// Convenience overload taking textual descriptors and an optional textual mask
/// ('0'/'1', whitespace ignored).
HyperTreeGrid build_grid(GridSpec spec, const std::vector<std::string>& descriptors,
                         const std::optional<std::string>& mask = std::nullopt, FieldMap fields = {});

GlobalId global_id(const HyperTreeGrid& grid, std::size_t tree_index, std::size_t bfs_index);
TreeCell resolve_id(const HyperTreeGrid& grid, GlobalId id);

struct GridStats {
  std::size_t total_cells = 0;
  std::size_t leaf_count = 0;
  /// Leaves hidden by their own mask bit or by a masked ancestor.
  std::size_t masked_leaf_count = 0;
  /// Leaf count per depth.
  std::map<unsigned, std::size_t> depth_histogram;
};

GridStats grid_stats(const HyperTreeGrid& grid);

}  // namespace htg
