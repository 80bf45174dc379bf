#pragma once

#include <ostream>
#include <string>

#include "htg/grid.hpp"
#include "htg/mesh.hpp"
#include "htg/selection.hpp"

namespace htg {

inline constexpr int kMeshFormatVersion = 1;

/// Wavefront OBJ: `v x y z` then `f a b c d` records with 1-based indices.
/// Attributes are dropped; hexahedra are written as their six faces.
void write_obj(std::ostream& out, const PolyMesh& mesh);
void write_obj(std::ostream& out, const UnstructuredMesh& mesh);

/// Native JSON documents that keep cell attributes; see docs/file-formats.md.
void write_native(std::ostream& out, const PolyMesh& mesh);
void write_native(std::ostream& out, const UnstructuredMesh& mesh);
void write_native(std::ostream& out, const SelectionMask& mask);
void write_native(std::ostream& out, const GridStats& stats);

template <class T>
std::string to_native_string(const T& value);

}  // namespace htg
