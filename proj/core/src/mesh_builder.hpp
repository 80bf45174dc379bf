#pragma once

#include <string>
#include <utility>
#include <vector>

#include "htg/cursor.hpp"
#include "htg/mesh.hpp"

namespace htg::detail {

/// Appends per-cell attribute rows (depth, global_id, grid fields).
class AttributeWriter {
 public:
  explicit AttributeWriter(const HyperTreeGrid& grid) {
    for (const auto& [name, values] : grid.fields()) sources_.emplace_back(name, &values);
  }

  void append(const GeometricCursor& cell) {
    depth_.push_back(static_cast<double>(cell.depth()));
    const auto id = cell.global_id().value;
    global_id_.push_back(static_cast<double>(id));
    if (columns_.size() != sources_.size()) columns_.resize(sources_.size());
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      columns_[i].push_back((*sources_[i].second)[static_cast<std::size_t>(id)]);
    }
  }

  FieldMap finish() {
    FieldMap out;
    out["depth"] = std::move(depth_);
    out["global_id"] = std::move(global_id_);
    columns_.resize(sources_.size());
    for (std::size_t i = 0; i < sources_.size(); ++i) out[sources_[i].first] = std::move(columns_[i]);
    return out;
  }

 private:
  std::vector<std::pair<std::string, const std::vector<double>*>> sources_;
  std::vector<double> depth_;
  std::vector<double> global_id_;
  std::vector<std::vector<double>> columns_;
};

class QuadBuilder {
 public:
  explicit QuadBuilder(const HyperTreeGrid& grid) : attributes_(grid) {}

  /// Planar rectangle of a 2D cell at height z, counter-clockwise from +z.
  void add_cell_rect(const GeometricCursor& cell, double z = 0.0) {
    const Box b = cell.box();
    add_quad({Vec3{b.lo[0], b.lo[1], z}, Vec3{b.hi[0], b.lo[1], z}, Vec3{b.hi[0], b.hi[1], z},
              Vec3{b.lo[0], b.hi[1], z}});
    attributes_.append(cell);
  }

  /// Face of a 3D cell, counter-clockwise seen from outside the cell.
  void add_cell_face(const GeometricCursor& cell, unsigned axis, Side side) {
    const Box b = cell.box();
    const unsigned u = (axis + 1) % 3;
    const unsigned v = (axis + 2) % 3;
    const double w = side == Side::Upper ? b.hi[axis] : b.lo[axis];
    auto corner = [&](double cu, double cv) {
      Vec3 p{};
      p[axis] = w;
      p[u] = cu;
      p[v] = cv;
      return p;
    };
    // (axis, u, v) is a right-handed cycle, so u-then-v winds around +axis.
    if (side == Side::Upper) {
      add_quad({corner(b.lo[u], b.lo[v]), corner(b.hi[u], b.lo[v]), corner(b.hi[u], b.hi[v]),
                corner(b.lo[u], b.hi[v])});
    } else {
      add_quad({corner(b.lo[u], b.lo[v]), corner(b.lo[u], b.hi[v]), corner(b.hi[u], b.hi[v]),
                corner(b.hi[u], b.lo[v])});
    }
    attributes_.append(cell);
  }

  PolyMesh finish() {
    mesh_.cell_attributes = attributes_.finish();
    return std::move(mesh_);
  }

 private:
  void add_quad(const std::array<Vec3, 4>& corners) {
    const std::size_t base = mesh_.points.size();
    mesh_.points.insert(mesh_.points.end(), corners.begin(), corners.end());
    mesh_.quads.push_back({base, base + 1, base + 2, base + 3});
  }

  PolyMesh mesh_;
  AttributeWriter attributes_;
};

}  // namespace htg::detail
