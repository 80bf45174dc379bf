#include "htg/hyper_tree.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "htg/error.hpp"

namespace htg {

HyperTree HyperTree::from_string(std::string_view bits, unsigned children_per_cell) {
  if (children_per_cell < 2) {
    throw Error(ErrorCode::BadParams, "children_per_cell must be at least 2");
  }
  HyperTree tree;
  tree.children_per_cell_ = children_per_cell;
  std::size_t n = 0;
  for (char ch : bits) {
    if (ch == '0' || ch == '1') {
      if ((n & 63) == 0) tree.words_.push_back(0);
      if (ch == '1') tree.words_.back() |= std::uint64_t{1} << (n & 63);
      ++n;
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw Error(ErrorCode::ParseError,
                  std::string("descriptor contains invalid character '") + ch + "'");
    }
  }
  tree.finalize(n);
  return tree;
}

HyperTree HyperTree::from_bits(const std::vector<bool>& bits, unsigned children_per_cell) {
  if (children_per_cell < 2) {
    throw Error(ErrorCode::BadParams, "children_per_cell must be at least 2");
  }
  HyperTree tree;
  tree.children_per_cell_ = children_per_cell;
  tree.words_.assign((bits.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) tree.words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  tree.finalize(bits.size());
  return tree;
}

void HyperTree::finalize(std::size_t bit_count) {
  if (bit_count == 0) {
    throw Error(ErrorCode::DescriptorLengthMismatch, "empty descriptor");
  }

  word_rank_.resize(words_.size());
  std::uint32_t running = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    word_rank_[w] = running;
    running += static_cast<std::uint32_t>(std::popcount(words_[w]));
  }
  refined_count_ = running;

  // Walk the levels: cells at depth d+1 = (refined cells at depth d) * F.
  level_offsets_.assign(1, 0);
  std::size_t begin = 0;
  std::size_t count = 1;
  while (count > 0) {
    const std::size_t end = begin + count;
    if (end > bit_count) {
      throw Error(ErrorCode::DescriptorLengthMismatch,
                  "descriptor has " + std::to_string(bit_count) + " bits but level " +
                      std::to_string(level_offsets_.size() - 1) + " requires " +
                      std::to_string(end));
    }
    level_offsets_.push_back(end);
    const std::size_t refined_here = rank(end) - rank(begin);
    if (refined_here > 0 && level_offsets_.size() - 1 > kMaxTreeDepth) {
      throw Error(ErrorCode::DepthLimitExceeded,
                  "trees deeper than " + std::to_string(kMaxTreeDepth) + " are not supported");
    }
    begin = end;
    count = refined_here * children_per_cell_;
  }
  if (begin != bit_count) {
    throw Error(ErrorCode::DescriptorLengthMismatch,
                "descriptor has " + std::to_string(bit_count) + " bits but its refinement implies " +
                    std::to_string(begin));
  }
  cell_count_ = bit_count;
}

std::size_t HyperTree::rank(std::size_t bfs_index) const noexcept {
  const std::size_t word = bfs_index >> 6;
  if (word >= words_.size()) return refined_count_;
  const std::uint64_t below = (std::uint64_t{1} << (bfs_index & 63)) - 1;
  return word_rank_[word] + static_cast<std::size_t>(std::popcount(words_[word] & below));
}

std::size_t HyperTree::select(std::size_t k) const {
  if (k >= refined_count_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "refined cell " + std::to_string(k) + " >= " + std::to_string(refined_count_));
  }
  // Last word whose starting rank is <= k, then scan within it.
  const auto it = std::upper_bound(word_rank_.begin(), word_rank_.end(), static_cast<std::uint32_t>(k));
  const std::size_t word = static_cast<std::size_t>(it - word_rank_.begin()) - 1;
  std::uint64_t bits = words_[word];
  for (std::size_t skip = k - word_rank_[word]; skip > 0; --skip) bits &= bits - 1;
  return word * 64 + static_cast<std::size_t>(std::countr_zero(bits));
}

std::size_t HyperTree::parent(std::size_t bfs_index) const {
  if (bfs_index == 0 || bfs_index >= cell_count_) {
    throw Error(ErrorCode::IndexOutOfRange, "cell " + std::to_string(bfs_index) + " has no parent");
  }
  return select((bfs_index - 1) / children_per_cell_);
}

std::size_t HyperTree::cells_at_depth(unsigned depth) const {
  if (depth + 1 >= level_offsets_.size()) return 0;
  return level_offsets_[depth + 1] - level_offsets_[depth];
}

unsigned HyperTree::depth_of(std::size_t bfs_index) const {
  if (bfs_index >= cell_count_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "bfs index " + std::to_string(bfs_index) + " >= " + std::to_string(cell_count_));
  }
  const auto it = std::upper_bound(level_offsets_.begin(), level_offsets_.end(), bfs_index);
  return static_cast<unsigned>(it - level_offsets_.begin() - 1);
}

std::string HyperTree::to_string() const {
  std::string out;
  out.reserve(cell_count_ + level_offsets_.size());
  for (std::size_t level = 0; level + 1 < level_offsets_.size(); ++level) {
    if (level > 0) out.push_back(' ');
    for (std::size_t i = level_offsets_[level]; i < level_offsets_[level + 1]; ++i) {
      out.push_back(is_refined(i) ? '1' : '0');
    }
  }
  return out;
}

}  // namespace htg
