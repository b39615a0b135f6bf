#pragma once

#include <span>

#include "lmimw/mim.hpp"
#include "lmimw/tree.hpp"

// Exhaustive ground truth. Nothing in here shares code with the labelling
// algorithm; the forest DP it uses for cut costs is itself checked against
// mim_bruteforce.
namespace lmimw::oracle {

inline constexpr int kDefaultEdgeBudget = 20;
inline constexpr NodeId kDefaultNodeGuard = 16;

/// Maximum induced matching of an arbitrary bipartite graph by exhaustive
/// search over edge subsets. Throws GuardExceeded above edge_budget edges.
int mim_bruteforce(std::span<const Edge> bipartite_edges, int edge_budget = kDefaultEdgeBudget);

struct BruteForceResult {
  int width = 0;
  LinearLayout layout;
};

/// Exact LMIM-width by dynamic programming over prefix sets,
/// g(S) = max(cost(S), min_{v in S} g(S - v)), where cost(S) is the MIM of the
/// cut between S and its complement. Throws GuardExceeded when n > guard.
BruteForceResult optimal_layout_bruteforce(const Tree& tree, NodeId guard = kDefaultNodeGuard);
int lmw_bruteforce(const Tree& tree, NodeId guard = kDefaultNodeGuard);

/// D(x,k): the number of neighbours v of x that have a neighbour u != x whose
/// dangling tree T<v,u> has LMIM-width at least k (brute force on each
/// dangling tree).
int k_component_index_oracle(const Tree& tree, NodeId x, Width k,
                             NodeId guard = kDefaultNodeGuard);

}  // namespace lmimw::oracle
