#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "htg/cursor.hpp"
#include "htg/error.hpp"
#include "oracle.hpp"

using htg::GeometricCursor;
using htg::GlobalId;
using htg::GridSpec;
using htg::Side;
using htg::Vec3;
using htg::VonNeumannSupercursor;

namespace {

VonNeumannSupercursor supercursor_for(const htg::HyperTreeGrid& g, GlobalId id) {
  const auto target = GeometricCursor::at(g, id);
  auto sc = VonNeumannSupercursor::root(g, target.tree_index());
  for (unsigned c : target.path()) sc = sc.child(c);
  return sc;
}

}  // namespace

TEST(GeometricCursor, RootBoxes) {
  const auto g2 = htg::build_grid(GridSpec::uniform(2, 2, {2, 3, 1}), std::vector<std::string>(6, "0"));
  const auto c = GeometricCursor::root(g2, 1 + 2 * 2);
  EXPECT_EQ(c.origin(), (Vec3{1, 2, 0}));
  EXPECT_EQ(c.size(), (Vec3{1, 1, 0}));
  EXPECT_EQ(c.depth(), 0u);

  const auto g1 = fixtures::single_root(2, 2, "0");
  EXPECT_EQ(GeometricCursor::root(g1, 0).origin(), (Vec3{0, 0, 0}));
  EXPECT_EQ(GeometricCursor::root(g1, 0).size(), (Vec3{1, 1, 0}));

  const auto g3 = htg::build_grid(GridSpec::uniform(3, 3, {3, 3, 2}), std::vector<std::string>(18, "0"));
  EXPECT_EQ(GeometricCursor::root(g3, 9).origin(), (Vec3{0, 0, 1}));

  try {
    GeometricCursor::root(g1, 1);
    FAIL();
  } catch (const htg::Error& e) {
    EXPECT_EQ(e.code(), htg::ErrorCode::IndexOutOfRange);
  }
}

TEST(GeometricCursor, ChildBoxes) {
  const auto g = fixtures::single_root(2, 2, "1 0000");
  const auto root = GeometricCursor::root(g, 0);
  const auto c0 = root.child(0);
  EXPECT_EQ(c0.origin(), (Vec3{0, 0, 0}));
  EXPECT_EQ(c0.size(), (Vec3{0.5, 0.5, 0}));
  EXPECT_EQ(c0.bfs_index(), 1u);
  EXPECT_EQ(root.child(3).origin(), (Vec3{0.5, 0.5, 0}));
  EXPECT_EQ(root.child(1).origin(), (Vec3{0.5, 0, 0}));

  const auto t = fixtures::single_root(2, 3, "1 000000000");
  const auto centre = GeometricCursor::root(t, 0).child(4);
  EXPECT_EQ(centre.origin(), (Vec3{1.0 / 3, 1.0 / 3, 0}));
  EXPECT_DOUBLE_EQ(centre.size()[0], 1.0 / 3);
  EXPECT_DOUBLE_EQ(centre.size()[1], 1.0 / 3);
}

TEST(GeometricCursor, ChildErrors) {
  const auto g = fixtures::single_root(2, 2, "1 0000");
  const auto root = GeometricCursor::root(g, 0);
  try {
    root.child(4);
    FAIL();
  } catch (const htg::Error& e) {
    EXPECT_EQ(e.code(), htg::ErrorCode::IndexOutOfRange);
  }
  try {
    root.child(0).child(0);
    FAIL();
  } catch (const htg::Error& e) {
    EXPECT_EQ(e.code(), htg::ErrorCode::NotRefined);
  }
}

// Incremental descent, direct positioning and the oracle all agree bit for bit.
TEST(GeometricCursor, DescentMatchesOracleGeometry) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    fixtures::RandomGridShape shape;
    shape.dimension = 2 + seed % 2;
    shape.factor = 2 + (seed / 2) % 2;
    shape.max_depth = shape.dimension == 3 && shape.factor == 3 ? 3 : 5;
    shape.mask_density = 0.3;
    const auto g = fixtures::random_grid(seed, shape);
    const auto cells = oracle::enumerate(g);
    std::vector<GeometricCursor> stack;
    for (std::size_t t = 0; t < g.tree_count(); ++t) stack.push_back(GeometricCursor::root(g, t));
    std::size_t visited = 0;
    while (!stack.empty()) {
      const auto c = stack.back();
      stack.pop_back();
      ++visited;
      const auto& o = cells.at(c.global_id().value);
      ASSERT_EQ(c.tree_index(), o.tree);
      ASSERT_EQ(c.bfs_index(), o.bfs);
      ASSERT_EQ(c.depth(), o.depth);
      ASSERT_EQ(c.box(), o.box);
      ASSERT_EQ(c.is_hidden(), o.hidden);
      ASSERT_EQ(c.is_leaf(), !o.refined);
      const auto direct = GeometricCursor::at(g, c.global_id());
      ASSERT_EQ(direct.box(), c.box());
      ASSERT_EQ(direct.path(), c.path());
      ASSERT_EQ(direct.is_hidden(), c.is_hidden());
      if (!c.is_leaf()) {
        for (unsigned k = 0; k < c.child_count(); ++k) stack.push_back(c.child(k));
      }
    }
    EXPECT_EQ(visited, g.total_cells());
  }
}

TEST(Supercursor, RootNeighbors) {
  const auto one = fixtures::single_root(2, 2, "0");
  const auto sc = VonNeumannSupercursor::root(one, 0);
  EXPECT_EQ(sc.face_count(), 4u);
  for (unsigned a = 0; a < 2; ++a) {
    EXPECT_FALSE(sc.neighbor(a, Side::Lower));
    EXPECT_FALSE(sc.neighbor(a, Side::Upper));
  }

  const auto pair = htg::build_grid(GridSpec::uniform(3, 2, {2, 1, 1}), std::vector<std::string>(2, "0"));
  const auto p = VonNeumannSupercursor::root(pair, 0);
  ASSERT_TRUE(p.neighbor(0, Side::Upper));
  EXPECT_EQ(p.neighbor(0, Side::Upper)->tree_index, 1u);
  std::size_t present = 0;
  for (unsigned a = 0; a < 3; ++a) present += p.neighbor(a, Side::Lower).has_value() + p.neighbor(a, Side::Upper).has_value();
  EXPECT_EQ(present, 1u);

  const auto block = htg::build_grid(GridSpec::uniform(3, 3, {3, 3, 2}), std::vector<std::string>(18, "0"));
  const auto corner = VonNeumannSupercursor::root(block, 0);
  present = 0;
  for (unsigned a = 0; a < 3; ++a) {
    present += corner.neighbor(a, Side::Lower).has_value() + corner.neighbor(a, Side::Upper).has_value();
  }
  EXPECT_EQ(present, 3u);
}

TEST(Supercursor, SiblingNeighbor) {
  const auto g = fixtures::single_root(2, 2, "1 0000");
  const auto c0 = VonNeumannSupercursor::root(g, 0).child(0);
  const auto right = c0.neighbor(0, Side::Upper);
  ASSERT_TRUE(right);
  EXPECT_EQ(right->bfs_index, 2u);
  EXPECT_EQ(right->depth, 1u);
  EXPECT_TRUE(right->is_leaf);
  EXPECT_FALSE(c0.neighbor(0, Side::Lower));
  EXPECT_FALSE(c0.neighbor(1, Side::Lower));
}

// Left half leaves at depth 1, right half refined to depth 2. The depth-2 cell
// at the lower left of the right half sees the coarse left leaf across -x.
TEST(Supercursor, CoarserNeighbor) {
  const auto g = fixtures::single_root(2, 2, "1 0101 00000000");
  const auto sc = VonNeumannSupercursor::root(g, 0).child(1).child(0);
  ASSERT_EQ(sc.center().depth(), 2u);

  const auto cells = oracle::enumerate(g);
  const auto box = sc.center().box();
  const double eps = 1e-9 * (box.hi[0] - box.lo[0]);
  const Vec3 probe{box.lo[0] - eps, (box.lo[1] + box.hi[1]) / 2, 0};
  const auto expected = oracle::deepest_containing(cells, 2, probe, 2);
  ASSERT_EQ(expected, std::optional<std::uint64_t>(1));

  const auto left = sc.neighbor(0, Side::Lower);
  ASSERT_TRUE(left);
  EXPECT_EQ(left->bfs_index, 1u);
  EXPECT_EQ(left->depth, 1u);
  EXPECT_TRUE(left->is_leaf);
}

TEST(Supercursor, BoundaryChildHasAbsentNeighbor) {
  const auto g = fixtures::single_root(3, 2, "1 00000000");
  const auto sc = VonNeumannSupercursor::root(g, 0).child(7);
  EXPECT_FALSE(sc.neighbor(0, Side::Upper));
  EXPECT_FALSE(sc.neighbor(1, Side::Upper));
  EXPECT_FALSE(sc.neighbor(2, Side::Upper));
  EXPECT_TRUE(sc.neighbor(0, Side::Lower));
}

// Each neighbour equals the deepest cell of depth <= centre depth containing a
// probe point just across the centre of the face.
TEST(Supercursor, MatchesGeometricOracle) {
  std::mt19937_64 rng(99);
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 48; ++seed) {
    fixtures::RandomGridShape shape;
    shape.dimension = 2 + seed % 2;
    shape.factor = 2 + (seed / 2) % 2;
    shape.max_depth = 5;
    shape.mask_density = 0.25;
    if (shape.dimension == 3) {
      shape.max_roots_per_axis = 2;
      shape.refine_base = shape.factor == 3 ? 0.3 : 0.55;
    }
    const auto g = fixtures::random_grid(seed, shape);
    const auto cells = oracle::enumerate(g);
    const unsigned d = g.dimension();
    for (int sample = 0; sample < 40; ++sample) {
      const auto& target = cells[rng() % cells.size()];
      const auto sc = supercursor_for(g, GlobalId{target.gid});
      const auto box = sc.center().box();
      for (unsigned a = 0; a < d; ++a) {
        for (Side side : {Side::Lower, Side::Upper}) {
          Vec3 probe{0, 0, 0};
          for (unsigned u = 0; u < d; ++u) probe[u] = (box.lo[u] + box.hi[u]) / 2;
          const double eps = 1e-9 * (box.hi[a] - box.lo[a]);
          probe[a] = side == Side::Upper ? box.hi[a] + eps : box.lo[a] - eps;
          const auto expected = oracle::deepest_containing(cells, d, probe, target.depth);
          const auto got = sc.neighbor(a, side);
          ASSERT_EQ(expected.has_value(), got.has_value()) << "seed " << seed << " cell " << target.gid;
          ++checked;
          if (!expected) continue;
          const auto& n = cells[*expected];
          EXPECT_EQ(got->tree_index, n.tree);
          EXPECT_EQ(got->bfs_index, n.bfs);
          EXPECT_EQ(got->depth, n.depth);
          EXPECT_LE(got->depth, target.depth);
          EXPECT_EQ(got->masked, n.hidden);
          EXPECT_EQ(got->is_leaf, !n.refined);
        }
      }
    }
  }
  EXPECT_GT(checked, 5000u);
}
