#pragma once

#include <map>
#include <span>
#include <vector>

#include "lmimw/mim.hpp"
#include "lmimw/width.hpp"

namespace lmimw {

/// Threshold meaning "nothing removed".
inline constexpr Width kFullView = 64;

/// The tree T_r[root, threshold]: the rooted subtree at `root` with every
/// witness subtree of width >= threshold cut away. A node y belongs to it iff
/// y is in T_r[root] and truncate(label(y), threshold) is non-empty for y and
/// all its ancestors up to root, and then its label inside the view is that
/// truncation. Removing the subtree of the first witness of a view's label
/// gives the view (root, first width), which is how the layout recursion
/// describes "T_r[x] without T_r[w]" without copying anything.
struct LabeledView {
  NodeId root = kNoNode;
  Width threshold = kFullView;
};

/// label(y) as seen inside the view. Empty when y is cut away.
LabelView effective_label(const LabelResult& labels, LabeledView view, NodeId y);

/// The view as an explicit exclusion list (the children of view nodes that
/// were cut away).
TreeView to_tree_view(const LabelResult& labels, LabeledView view);

struct PathInTree {
  std::vector<NodeId> nodes;
  /// lmw of the view.
  Width k = 0;
  /// 0..4, the type of the view's label (4 for complex labels).
  int type = 0;
  /// Type 4 only: the parent of the k-critical node. The component through
  /// its parent is the view (root, k).
  NodeId detached = kNoNode;
};

/// A path P in the view such that every component of view - N[P] has lmw at
/// most k-1. Throws std::logic_error if the labels are inconsistent.
PathInTree find_path(const LabelResult& labels, LabeledView view);

/// Layouts of the dangling trees T<v,u>, keyed by (v,u).
using ComponentOrders = std::map<Edge, std::vector<NodeId>>;

/// The (v,u) pairs naming the components of tree - N[path], in the order
/// lin_ord visits them.
std::vector<Edge> path_components(const Tree& tree, std::span<const NodeId> path);

/// The path layout: every path node, followed for each of its off-path
/// neighbours v by the layouts of v's dangling trees and then v. If each
/// component layout has mim <= k the result has mim <= k+1. Throws
/// std::invalid_argument if the path is not a simple path or a component
/// layout is missing.
LinearLayout lin_ord(const Tree& tree, std::span<const NodeId> path, const ComponentOrders& orders);

struct LayoutResult {
  LinearLayout layout;
  Width lmw = 0;
};

/// An optimal layout: mim_of_layout(tree, layout) == lmw.
LayoutResult build_layout(const Tree& tree, NodeId root = 0);
LayoutResult build_layout(const LabelResult& labels);

}  // namespace lmimw
