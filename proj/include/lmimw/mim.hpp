#pragma once

#include <algorithm>
#include <limits>
#include <span>
#include <vector>

#include "lmimw/tree.hpp"

namespace lmimw {

/// A linear order of the nodes 0..n-1 together with its inverse.
class LinearLayout {
 public:
  LinearLayout() = default;
  /// Throws std::invalid_argument unless order is a permutation of 0..n-1.
  explicit LinearLayout(std::vector<NodeId> order);

  static LinearLayout identity(NodeId n);

  NodeId size() const noexcept { return static_cast<NodeId>(order_.size()); }
  std::span<const NodeId> order() const noexcept { return order_; }
  NodeId at(NodeId i) const noexcept { return order_[i]; }
  NodeId position(NodeId v) const noexcept { return position_[v]; }

 private:
  std::vector<NodeId> order_;
  std::vector<NodeId> position_;
};

/// Edges crossing the cut between positions cut_index-1 and cut_index, left
/// endpoint first.
struct CutForest {
  std::vector<Edge> crossing_edges;
  NodeId cut_index = 0;
};

/// Throws std::out_of_range unless 1 <= i <= n-1, and std::invalid_argument
/// if the layout does not cover the tree.
CutForest cut_at(const Tree& tree, const LinearLayout& layout, NodeId i);

/// Exact maximum induced matching of a forest given as an edge list over
/// arbitrary non-negative ids. Linear in the number of edges (after an id
/// compaction sort). Throws std::invalid_argument if the edges contain a cycle.
int mim_forest(std::span<const Edge> forest_edges);

/// MIM of every cut of the layout; entry i-1 belongs to cut i.
std::vector<int> mim_per_cut(const Tree& tree, const LinearLayout& layout);

/// Maximum over all cuts of the cut's MIM; 0 for a single node.
int mim_of_layout(const Tree& tree, const LinearLayout& layout);

namespace detail {

// Three-state induced-matching DP over a rooted forest. For a node v:
//   free: v is not an endpoint of the matching
//   up:   v is matched to its parent (the edge is counted here)
//   down: v is matched to one of its children
// A free node's children may be free or down; an up node's children are all
// free; a down node's matched child is up and the others are free.
struct MimStates {
  static constexpr int kNone = std::numeric_limits<int>::min() / 4;

  int free = 0;
  int up = 1;
  int down = kNone;

  int best() const noexcept { return std::max(free, down); }
};

class MimNode {
 public:
  void absorb(const MimStates& child) noexcept {
    sum_free_ += child.free;
    free_ += std::max(child.free, child.down);
    gain_ = std::max(gain_, child.up - child.free);
    has_child_ = true;
  }

  MimStates finish() const noexcept {
    return {free_, 1 + sum_free_, has_child_ ? sum_free_ + gain_ : MimStates::kNone};
  }

 private:
  int sum_free_ = 0;
  int free_ = 0;
  int gain_ = MimStates::kNone;
  bool has_child_ = false;
};

}  // namespace detail

}  // namespace lmimw
