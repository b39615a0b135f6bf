#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "lmimw/tree.hpp"

namespace lmimw {

/// Path 0-1-...-(n-1).
Tree path_tree(NodeId n);
/// Center 0, leaves 1..n-1.
Tree star(NodeId n);
/// Spine 0..spine-1 as a path, then `legs` leaves per spine node.
Tree caterpillar(NodeId spine, NodeId legs);
/// Complete tree with the given branching and height, numbered level by level.
Tree complete_ary(NodeId branching, NodeId height);

/// Decodes a Prüfer sequence of length n-2 over 0..n-1 in linear time.
Tree from_prufer(NodeId n, std::span<const NodeId> sequence);

/// Uniform random labelled tree, reproducible for a fixed seed.
Tree random_tree(NodeId n, std::uint64_t seed);

/// n^(n-2), the number of labelled trees on n nodes.
std::uint64_t labelled_tree_count(NodeId n);

/// Calls fn on every labelled tree on n nodes, one per Prüfer sequence.
/// Throws GuardExceeded unless 2 <= n <= 9.
void enumerate_trees(NodeId n, const std::function<void(const Tree&)>& fn);

/// Node count of extremal_tree(k): 2, 10, 34, 106, 322, ...
std::uint64_t extremal_size(Width k);

/// The smallest trees of width k in the classification family: a single edge
/// for k = 1, otherwise a center (node 0) with three neighbours each attached
/// to the center of a copy of extremal_tree(k-1). Copies are numbered depth
/// first. Throws GuardExceeded for k outside 1..12.
Tree extremal_tree(Width k);

}  // namespace lmimw
