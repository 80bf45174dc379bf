#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace htg {

/// Deepest refinement level a tree may reach. Keeps f^depth exactly
/// representable in a double for f = 3, so lattice coordinates stay exact.
inline constexpr unsigned kMaxTreeDepth = 32;

/// Refinement structure of one root cell, stored as a breadth-first bitstream:
/// one bit per cell, 1 = refined (has children_per_cell children), 0 = leaf.
///
/// Cells are numbered by their position in the stream (the BFS index). Since
/// children are laid out in parent order, the children of the k-th refined
/// cell occupy [1 + k*F, 1 + (k+1)*F). A per-word rank directory makes that
/// lookup O(1).
class HyperTree {
 public:
  HyperTree() = default;

  /// Parses a '0'/'1' string; whitespace is ignored.
  static HyperTree from_string(std::string_view bits, unsigned children_per_cell);
  static HyperTree from_bits(const std::vector<bool>& bits, unsigned children_per_cell);

  std::size_t cell_count() const noexcept { return cell_count_; }
  std::size_t leaf_count() const noexcept { return cell_count_ - refined_count_; }
  std::size_t refined_count() const noexcept { return refined_count_; }

  /// Deepest level present (0 for an unrefined root).
  unsigned depth() const noexcept {
    return static_cast<unsigned>(level_offsets_.size() - 2);
  }

  /// level_offsets()[d] is the BFS index of the first cell at depth d; the
  /// final entry equals cell_count().
  std::span<const std::size_t> level_offsets() const noexcept { return level_offsets_; }

  std::size_t cells_at_depth(unsigned depth) const;
  unsigned depth_of(std::size_t bfs_index) const;

  bool is_refined(std::size_t bfs_index) const noexcept {
    return (words_[bfs_index >> 6] >> (bfs_index & 63)) & 1u;
  }

  /// Number of refined cells with BFS index strictly below `bfs_index`.
  std::size_t rank(std::size_t bfs_index) const noexcept;

  /// BFS index of child 0; only meaningful for refined cells.
  std::size_t first_child(std::size_t bfs_index) const noexcept {
    return 1 + rank(bfs_index) * children_per_cell_;
  }

  /// BFS index of the parent of a non-root cell.
  std::size_t parent(std::size_t bfs_index) const;

  /// BFS index of the k-th refined cell (k counted from 0).
  std::size_t select(std::size_t k) const;

  unsigned children_per_cell() const noexcept { return children_per_cell_; }

  /// Descriptor with one space between depth levels, e.g. "1 0000".
  std::string to_string() const;

 private:
  void finalize(std::size_t bit_count);

  std::vector<std::uint64_t> words_;
  std::vector<std::uint32_t> word_rank_;
  std::vector<std::size_t> level_offsets_;
  std::size_t cell_count_ = 0;
  std::size_t refined_count_ = 0;
  unsigned children_per_cell_ = 0;
};

}  // namespace htg
