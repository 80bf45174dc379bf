#include "htg/grid.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "htg/error.hpp"

namespace htg {

GridSpec GridSpec::uniform(unsigned dimension, unsigned factor,
                           std::array<std::size_t, 3> root_extent, double root_size) {
  GridSpec spec;
  spec.dimension = dimension;
  spec.branching_factor = factor;
  spec.root_extent = root_extent;
  for (unsigned a = 0; a < 3; ++a) {
    if (a >= dimension) {
      spec.root_extent[a] = 1;
      continue;
    }
    auto& coords = spec.axis_coordinates[a];
    coords.resize(root_extent[a] + 1);
    for (std::size_t i = 0; i <= root_extent[a]; ++i) {
      coords[i] = static_cast<double>(i) * root_size;
    }
  }
  return spec;
}

namespace {

void validate_spec(GridSpec& spec) {
  if (spec.dimension != 2 && spec.dimension != 3) {
    throw Error(ErrorCode::BadParams, "dimension must be 2 or 3, got " + std::to_string(spec.dimension));
  }
  if (spec.branching_factor != 2 && spec.branching_factor != 3) {
    throw Error(ErrorCode::BadParams,
                "branching factor must be 2 or 3, got " + std::to_string(spec.branching_factor));
  }
  for (unsigned a = 0; a < 3; ++a) {
    if (a >= spec.dimension) {
      spec.root_extent[a] = 1;
      spec.axis_coordinates[a].clear();
      continue;
    }
    const auto& coords = spec.axis_coordinates[a];
    if (spec.root_extent[a] == 0) {
      throw Error(ErrorCode::BadAxisCoordinates, "axis " + std::to_string(a) + " has no root cells");
    }
    if (coords.size() != spec.root_extent[a] + 1) {
      throw Error(ErrorCode::BadAxisCoordinates,
                  "axis " + std::to_string(a) + " needs " + std::to_string(spec.root_extent[a] + 1) +
                      " coordinates, got " + std::to_string(coords.size()));
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!std::isfinite(coords[i]) || (i > 0 && !(coords[i] > coords[i - 1]))) {
        throw Error(ErrorCode::BadAxisCoordinates,
                    "axis " + std::to_string(a) + " coordinates must be finite and strictly increasing");
      }
    }
  }
}

}  // namespace

HyperTreeGrid build_grid(GridSpec spec, std::vector<HyperTree> trees,
                         std::optional<std::vector<bool>> mask, FieldMap fields) {
  validate_spec(spec);
  const std::size_t roots = spec.root_count();
  if (trees.size() != roots) {
    throw Error(ErrorCode::DescriptorLengthMismatch,
                "expected " + std::to_string(roots) + " trees, got " + std::to_string(trees.size()));
  }

  HyperTreeGrid grid;
  grid.tree_offsets_.reserve(trees.size() + 1);
  const unsigned per_cell = spec.children_per_cell();
  for (const auto& tree : trees) {
    if (tree.children_per_cell() != per_cell) {
      throw Error(ErrorCode::DescriptorLengthMismatch,
                  "tree built for " + std::to_string(tree.children_per_cell()) +
                      " children per cell, grid needs " + std::to_string(per_cell));
    }
    grid.tree_offsets_.push_back(grid.tree_offsets_.back() + tree.cell_count());
    grid.depth_limit_ = std::max(grid.depth_limit_, tree.depth());
  }
  const std::size_t total = grid.tree_offsets_.back();

  if (mask) {
    if (mask->size() != total) {
      throw Error(ErrorCode::FieldLengthMismatch,
                  "mask has " + std::to_string(mask->size()) + " entries, grid has " +
                      std::to_string(total) + " cells");
    }
    grid.mask_.assign(mask->begin(), mask->end());
  }
  for (const auto& [name, values] : fields) {
    if (name == "depth" || name == "global_id") {
      throw Error(ErrorCode::BadParams, "field name '" + name + "' is reserved for derived attributes");
    }
    if (values.size() != total) {
      throw Error(ErrorCode::FieldLengthMismatch,
                  "field '" + name + "' has " + std::to_string(values.size()) + " values, grid has " +
                      std::to_string(total) + " cells");
    }
  }

  grid.spec_ = std::move(spec);
  grid.trees_ = std::move(trees);
  grid.fields_ = std::move(fields);
  return grid;
}

HyperTreeGrid build_grid(GridSpec spec, const std::vector<std::string>& descriptors,
                         const std::optional<std::string>& mask, FieldMap fields) {
  validate_spec(spec);
  const unsigned per_cell = spec.children_per_cell();
  std::vector<HyperTree> trees;
  trees.reserve(descriptors.size());
  for (const auto& descriptor : descriptors) {
    trees.push_back(HyperTree::from_string(descriptor, per_cell));
  }
  std::optional<std::vector<bool>> bits;
  if (mask) {
    bits.emplace();
    bits->reserve(mask->size());
    for (char ch : *mask) {
      if (ch == '0' || ch == '1') {
        bits->push_back(ch == '1');
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        throw Error(ErrorCode::ParseError, std::string("mask contains invalid character '") + ch + "'");
      }
    }
  }
  return build_grid(std::move(spec), std::move(trees), std::move(bits), std::move(fields));
}

const HyperTree& HyperTreeGrid::tree(std::size_t tree_index) const {
  if (tree_index >= trees_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "tree " + std::to_string(tree_index) + " >= " + std::to_string(trees_.size()));
  }
  return trees_[tree_index];
}

std::size_t HyperTreeGrid::tree_offset(std::size_t tree_index) const {
  if (tree_index >= trees_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "tree " + std::to_string(tree_index) + " >= " + std::to_string(trees_.size()));
  }
  return tree_offsets_[tree_index];
}

std::array<std::size_t, 3> HyperTreeGrid::root_coordinates(std::size_t tree_index) const {
  if (tree_index >= trees_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "tree " + std::to_string(tree_index) + " >= " + std::to_string(trees_.size()));
  }
  const auto& n = spec_.root_extent;
  return {tree_index % n[0], (tree_index / n[0]) % n[1], tree_index / (n[0] * n[1])};
}

std::optional<std::size_t> HyperTreeGrid::tree_at(const std::array<std::ptrdiff_t, 3>& coords) const {
  const auto& n = spec_.root_extent;
  for (unsigned a = 0; a < 3; ++a) {
    if (coords[a] < 0 || static_cast<std::size_t>(coords[a]) >= n[a]) return std::nullopt;
  }
  return static_cast<std::size_t>(coords[0]) +
         n[0] * (static_cast<std::size_t>(coords[1]) + n[1] * static_cast<std::size_t>(coords[2]));
}

double HyperTreeGrid::lattice_coordinate(unsigned axis, std::size_t root, std::uint64_t index,
                                         std::uint64_t divisions) const noexcept {
  const auto& coords = spec_.axis_coordinates[axis];
  const double lo = coords[root];
  const double hi = coords[root + 1];
  if (index >= divisions) return hi;
  // index/divisions is correctly rounded, so equal rationals give equal results.
  return lo + (hi - lo) * (static_cast<double>(index) / static_cast<double>(divisions));
}

Box HyperTreeGrid::bounds() const noexcept {
  Box box;
  for (unsigned a = 0; a < spec_.dimension; ++a) {
    box.lo[a] = spec_.axis_coordinates[a].front();
    box.hi[a] = spec_.axis_coordinates[a].back();
  }
  return box;
}

const std::vector<double>* HyperTreeGrid::field(const std::string& name) const {
  const auto it = fields_.find(name);
  return it == fields_.end() ? nullptr : &it->second;
}

GlobalId global_id(const HyperTreeGrid& grid, std::size_t tree_index, std::size_t bfs_index) {
  const HyperTree& tree = grid.tree(tree_index);
  if (bfs_index >= tree.cell_count()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "bfs index " + std::to_string(bfs_index) + " >= " + std::to_string(tree.cell_count()));
  }
  return GlobalId{grid.tree_offset(tree_index) + bfs_index};
}

TreeCell resolve_id(const HyperTreeGrid& grid, GlobalId id) {
  if (id.value >= grid.total_cells()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "global id " + std::to_string(id.value) + " >= " + std::to_string(grid.total_cells()));
  }
  // Offsets are strictly increasing because every tree has at least one cell.
  std::size_t lo = 0;
  std::size_t hi = grid.tree_count();
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (grid.tree_offset(mid) <= id.value) lo = mid; else hi = mid;
  }
  return TreeCell{lo, static_cast<std::size_t>(id.value - grid.tree_offset(lo))};
}

GridStats grid_stats(const HyperTreeGrid& grid) {
  GridStats stats;
  stats.total_cells = grid.total_cells();
  const unsigned per_cell = grid.children_per_cell();
  std::vector<std::uint8_t> hidden;
  for (std::size_t t = 0; t < grid.tree_count(); ++t) {
    const HyperTree& tree = grid.tree(t);
    const std::size_t offset = grid.tree_offset(t);
    hidden.assign(tree.cell_count(), 0);
    if (grid.has_mask()) hidden[0] = grid.is_masked(GlobalId{offset});
    const auto levels = tree.level_offsets();
    for (unsigned depth = 0; depth + 1 < levels.size(); ++depth) {
      for (std::size_t i = levels[depth]; i < levels[depth + 1]; ++i) {
        if (!tree.is_refined(i)) {
          ++stats.leaf_count;
          ++stats.depth_histogram[depth];
          if (hidden[i]) ++stats.masked_leaf_count;
          continue;
        }
        const std::size_t first = tree.first_child(i);
        for (unsigned c = 0; c < per_cell; ++c) {
          hidden[first + c] = hidden[i] || grid.is_masked(GlobalId{offset + first + c});
        }
      }
    }
  }
  return stats;
}

}  // namespace htg
