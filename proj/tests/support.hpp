#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "lmimw/tree.hpp"

namespace lmimw::test {

// Same tree with every neighbour list shuffled and endpoints flipped, so a
// rooting of it visits children in a different order.
inline Tree shuffled(const Tree& tree, std::uint64_t seed) {
  std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
  std::mt19937_64 rng(seed);
  std::shuffle(edges.begin(), edges.end(), rng);
  for (auto& [a, b] : edges) {
    if (rng() & 1U) std::swap(a, b);
  }
  return Tree(tree.node_count(), std::move(edges));
}

// Connected components of the subgraph induced by `nodes`.
inline std::vector<std::vector<NodeId>> components(const Tree& tree, const std::vector<NodeId>& nodes) {
  std::vector<char> keep(tree.node_count(), 0);
  for (const NodeId v : nodes) keep[v] = 1;
  std::vector<std::vector<NodeId>> out;
  for (const NodeId s : nodes) {
    if (keep[s] != 1) continue;
    keep[s] = 2;
    std::vector<NodeId> comp{s};
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (const NodeId u : tree.neighbors(comp[i])) {
        if (keep[u] == 1) {
          keep[u] = 2;
          comp.push_back(u);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::set<Edge> edge_set(const Tree& tree) {
  std::set<Edge> out;
  for (auto [a, b] : tree.edges()) out.insert({std::min(a, b), std::max(a, b)});
  return out;
}

}  // namespace lmimw::test
