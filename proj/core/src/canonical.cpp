#include "htg/canonical.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "htg/cursor.hpp"
#include "htg/error.hpp"

namespace htg {

namespace {

/// Portable uniform draw in [0, 1): std::uniform_real_distribution is
/// implementation-defined, mt19937_64 output is not.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<bool> random_descriptor(std::mt19937_64& rng, const RandomGridOptions& options,
                                    unsigned per_cell) {
  std::vector<bool> bits;
  std::size_t level_cells = 1;
  for (unsigned depth = 0; level_cells > 0; ++depth) {
    const double p = options.refine_base * std::pow(options.refine_decay, depth);
    std::size_t refined = 0;
    for (std::size_t i = 0; i < level_cells; ++i) {
      const bool refine = depth < options.max_depth && uniform01(rng) < p;
      bits.push_back(refine);
      refined += refine;
    }
    level_cells = refined * per_cell;
  }
  return bits;
}

void fill_fields(const HyperTreeGrid& grid, std::vector<double>& level, std::vector<double>& radius) {
  const Box bounds = grid.bounds();
  Vec3 mid{};
  for (unsigned a = 0; a < grid.dimension(); ++a) mid[a] = 0.5 * (bounds.lo[a] + bounds.hi[a]);
  auto visit = [&](auto&& self, const GeometricCursor& cell) -> void {
    const auto id = static_cast<std::size_t>(cell.global_id().value);
    const Box b = cell.box();
    double r2 = 0.0;
    for (unsigned a = 0; a < grid.dimension(); ++a) {
      const double c = 0.5 * (b.lo[a] + b.hi[a]) - mid[a];
      r2 += c * c;
    }
    level[id] = cell.depth();
    radius[id] = std::sqrt(r2);
    if (cell.is_leaf()) return;
    for (unsigned c = 0; c < cell.child_count(); ++c) self(self, cell.child(c));
  };
  for (std::size_t t = 0; t < grid.tree_count(); ++t) visit(visit, GeometricCursor::root(grid, t));
}

std::optional<std::vector<bool>> random_mask(std::mt19937_64& rng, const std::vector<HyperTree>& trees,
                                             double density) {
  if (!(density > 0.0)) return std::nullopt;
  std::vector<bool> mask;
  for (const auto& tree : trees) {
    for (std::size_t i = 0; i < tree.cell_count(); ++i) {
      mask.push_back(!tree.is_refined(i) && uniform01(rng) < density);
    }
  }
  return mask;
}

}  // namespace

HyperTreeGrid generate_random_grid(const RandomGridOptions& options) {
  if (options.mask_density < 0.0 || options.mask_density > 1.0) {
    throw Error(ErrorCode::BadParams, "mask density must lie in [0, 1]");
  }
  GridSpec spec = GridSpec::uniform(options.dimension, options.factor, options.root_extent, options.root_size);
  std::mt19937_64 rng(options.seed);
  const unsigned per_cell = spec.children_per_cell();
  std::vector<HyperTree> trees;
  for (std::size_t t = 0; t < spec.root_count(); ++t) {
    const auto bits = random_descriptor(rng, options, per_cell);
    trees.push_back(HyperTree::from_bits(bits, per_cell));
  }
  auto mask = random_mask(rng, trees, options.mask_density);

  // Fields need cell geometry, which needs a built grid; build twice.
  const HyperTreeGrid shape = build_grid(spec, trees);
  FieldMap fields;
  auto& level = fields["level"];
  auto& radius = fields["radius"];
  level.resize(shape.total_cells());
  radius.resize(shape.total_cells());
  fill_fields(shape, level, radius);
  return build_grid(std::move(spec), std::move(trees), std::move(mask), std::move(fields));
}

HyperTreeGrid uniform_grid(unsigned dimension, unsigned factor, unsigned depth, double mask_density,
                           std::uint64_t seed) {
  RandomGridOptions options;
  options.dimension = dimension;
  options.factor = factor;
  options.max_depth = depth;
  options.refine_base = 2.0;  // always below the draw threshold
  options.refine_decay = 1.0;
  options.mask_density = mask_density;
  options.seed = seed;
  return generate_random_grid(options);
}

HyperTreeGrid canonical_grid(std::string_view name, std::uint64_t seed, double mask_density) {
  RandomGridOptions options;
  options.seed = seed;
  options.mask_density = mask_density;
  if (name == "paper2d") {
    options.dimension = 2;
    options.factor = 2;
    options.root_extent = {2, 3, 1};
    options.max_depth = 5;
    return generate_random_grid(options);
  }
  if (name == "paper3d") {
    options.dimension = 3;
    options.factor = 3;
    options.root_extent = {3, 3, 2};
    options.max_depth = 3;
    return generate_random_grid(options);
  }
  // uniform(d,f,k); "uniform:d,f,k" is accepted as a shell-friendly spelling.
  const std::string text(name);
  unsigned d = 0, f = 0, k = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "uniform(%u,%u,%u%c", &d, &f, &k, &tail) == 4 && tail == ')' &&
      text.back() == ')') {
    // parsed
  } else if (std::sscanf(text.c_str(), "uniform:%u,%u,%u%c", &d, &f, &k, &tail) == 3) {
    // parsed
  } else {
    throw Error(ErrorCode::UnknownCanonicalGrid, "unknown canonical grid '" + text + "'");
  }
  if ((d != 2 && d != 3) || (f != 2 && f != 3) || k > kMaxTreeDepth) {
    throw Error(ErrorCode::UnknownCanonicalGrid, "bad uniform grid parameters in '" + text + "'");
  }
  return uniform_grid(d, f, k, mask_density, seed);
}

}  // namespace htg
