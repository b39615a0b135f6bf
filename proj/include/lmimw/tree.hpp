#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lmimw/types.hpp"

namespace lmimw {

using Edge = std::pair<NodeId, NodeId>;

/// An undirected tree on nodes 0..n-1 with CSR adjacency.
///
/// Construction validates the tree invariants (n-1 edges, connected, no
/// self-loops or duplicates) and throws TreeError otherwise. Neighbour lists
/// keep the order in which edges were given.
class Tree {
 public:
  Tree() : Tree(1, {}) {}
  Tree(NodeId node_count, std::vector<Edge> edges);

  NodeId node_count() const noexcept { return node_count_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {adjacency_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  /// Index into edges() of each incidence, parallel to neighbors(v).
  std::span<const NodeId> incident_edges(NodeId v) const noexcept {
    return {edge_index_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  NodeId degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool contains(NodeId v) const noexcept { return v >= 0 && v < node_count_; }
  bool adjacent(NodeId u, NodeId v) const;

 private:
  friend class RootedTree;

  NodeId node_count_;
  std::vector<Edge> edges_;
  std::vector<NodeId> offsets_;
  std::vector<NodeId> adjacency_;
  std::vector<NodeId> edge_index_;
};

/// Parses the edge-list text format: an optional first line holding the node
/// count, then one "u v" pair per line. Blank lines and '#' comments are
/// skipped. Without a count line, n is one more than the largest id and every
/// id below it must occur.
Tree parse_edge_list(std::istream& in);
Tree parse_edge_list(std::string_view text);

/// Writes n on the first line, then the edges as "min max", sorted.
void write_edge_list(std::ostream& out, const Tree& tree);
std::string serialize(const Tree& tree);

/// A tree rooted at a chosen node.
///
/// Nodes are also numbered in BFS order from the root. In that numbering the
/// children of every node form a contiguous range, so children(v) is a view
/// into the BFS order array and bottom-up passes are sequential scans.
class RootedTree {
 public:
  /// The tree must outlive the rooted view of it.
  RootedTree(const Tree& tree, NodeId root);
  RootedTree(Tree&&, NodeId) = delete;

  const Tree& tree() const noexcept { return *tree_; }
  NodeId node_count() const noexcept { return tree_->node_count(); }
  NodeId root() const noexcept { return root_; }

  NodeId parent(NodeId v) const noexcept { return parent_[bfs_index_[v]]; }
  NodeId depth(NodeId v) const noexcept { return depth_[bfs_index_[v]]; }
  std::span<const NodeId> children(NodeId v) const noexcept {
    return children_of_index(bfs_index_[v]);
  }

  /// Nodes in BFS order from the root; reverse it for a bottom-up pass.
  std::span<const NodeId> bfs_order() const noexcept { return order_; }
  NodeId bfs_index(NodeId v) const noexcept { return bfs_index_[v]; }
  /// Children of the node at BFS position i, as a range of BFS positions.
  NodeId first_child_index(NodeId i) const noexcept { return first_child_[i]; }
  NodeId end_child_index(NodeId i) const noexcept { return first_child_[i + 1]; }
  std::span<const NodeId> children_of_index(NodeId i) const noexcept {
    return {order_.data() + first_child_[i],
            static_cast<std::size_t>(first_child_[i + 1] - first_child_[i])};
  }

  NodeId subtree_size(NodeId v) const noexcept { return subtree_size_[bfs_index_[v]]; }
  /// True when a is an ancestor of b or a == b.
  bool is_ancestor_or_self(NodeId a, NodeId b) const noexcept {
    const NodeId ia = bfs_index_[a];
    const NodeId pb = preorder_[bfs_index_[b]];
    return preorder_[ia] <= pb && pb < preorder_[ia] + subtree_size_[ia];
  }

 private:
  // Per-node data below is indexed by BFS position, which keeps
  // construction a sequence of sequential passes.
  const Tree* tree_;
  NodeId root_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> depth_;
  std::vector<NodeId> order_;
  std::vector<NodeId> bfs_index_;
  std::vector<NodeId> first_child_;
  std::vector<NodeId> subtree_size_;
  std::vector<NodeId> preorder_;
};

RootedTree root_at(const Tree& tree, NodeId root);
RootedTree root_at(Tree&&, NodeId) = delete;

/// A rooted subtree T_r[view_root] with some complete subtrees T_r[w] removed.
/// Every excluded node must lie strictly below view_root.
struct TreeView {
  const RootedTree* base = nullptr;
  NodeId view_root = kNoNode;
  std::vector<NodeId> excluded;
};

/// Nodes of the view in preorder. Throws std::invalid_argument when an
/// excluded node is not a strict descendant of the view root.
std::vector<NodeId> nodes_of_view(const TreeView& view);

/// A subtree copied out of a larger tree, with the map back to original ids.
struct SubTree {
  Tree tree;
  std::vector<NodeId> to_original;
};

/// The component of tree - (v,u) that contains u. Throws std::invalid_argument
/// when (v,u) is not an edge.
SubTree dangling_tree(const Tree& tree, NodeId v, NodeId u);

/// The subgraph induced by a connected node set, relabelled 0..|nodes|-1 in
/// the given order. Throws TreeError if the set is not connected.
SubTree induced_subtree(const Tree& tree, std::span<const NodeId> nodes);

}  // namespace lmimw
