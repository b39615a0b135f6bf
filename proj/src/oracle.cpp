#include "lmimw/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace lmimw::oracle {

namespace {

using Mask = std::uint32_t;

int max_independent(Mask candidates, const std::vector<Mask>& conflicts) {
  if (candidates == 0) return 0;
  const int i = __builtin_ctz(candidates);
  const Mask rest = candidates & (candidates - 1);
  const int without = max_independent(rest, conflicts);
  const int with = 1 + max_independent(rest & ~conflicts[i], conflicts);
  return std::max(without, with);
}

}  // namespace

int mim_bruteforce(std::span<const Edge> bipartite_edges, int edge_budget) {
  const auto m = static_cast<int>(bipartite_edges.size());
  if (m > edge_budget || m > 31) {
    throw GuardExceeded("mim_bruteforce: " + std::to_string(m) + " edges exceeds budget " +
                        std::to_string(std::min(edge_budget, 31)));
  }
  std::set<Edge> present;
  for (auto [a, b] : bipartite_edges) present.insert({std::min(a, b), std::max(a, b)});
  auto edge = [&](NodeId a, NodeId b) {
    return present.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  // Two edges can both be in an induced matching only if they are vertex
  // disjoint and no edge joins their endpoints.
  std::vector<Mask> conflicts(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto [a, b] = bipartite_edges[i];
      const auto [c, d] = bipartite_edges[j];
      const bool clash = a == c || a == d || b == c || b == d || edge(a, c) || edge(a, d) ||
                         edge(b, c) || edge(b, d);
      if (clash) {
        conflicts[i] |= Mask{1} << j;
        conflicts[j] |= Mask{1} << i;
      }
    }
  }
  const Mask all = m == 32 ? ~Mask{0} : (Mask{1} << m) - 1;
  return max_independent(all, conflicts);
}

BruteForceResult optimal_layout_bruteforce(const Tree& tree, NodeId guard) {
  const NodeId n = tree.node_count();
  if (n > guard || n > 28) {
    throw GuardExceeded("lmw_bruteforce: " + std::to_string(n) + " nodes exceeds guard " +
                        std::to_string(std::min<NodeId>(guard, 28)));
  }
  const RootedTree rooted(tree, 0);
  const auto bfs = rooted.bfs_order();
  const std::size_t subsets = std::size_t{1} << n;

  // Cut cost for one prefix set: the forest DP over the crossing edges,
  // evaluated directly on the rooted tree without materialising the cut.
  std::vector<detail::MimNode> acc(n);
  auto cost = [&](Mask s) {
    std::fill(acc.begin(), acc.end(), detail::MimNode{});
    int total = 0;
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
      const NodeId v = *it;
      const auto states = acc[v].finish();
      const NodeId p = rooted.parent(v);
      const bool crossing = p != kNoNode && (((s >> v) ^ (s >> p)) & 1U);
      if (crossing) {
        acc[p].absorb(states);
      } else {
        total += states.best();
      }
    }
    return total;
  };

  std::vector<std::uint8_t> best(subsets, 0);
  for (Mask s = 1; s < subsets; ++s) {
    std::uint8_t inner = 255;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      inner = std::min(inner, best[s & ~(rest & -rest)]);
    }
    best[s] = std::max<std::uint8_t>(inner, static_cast<std::uint8_t>(cost(s)));
  }

  std::vector<NodeId> order(n);
  Mask s = static_cast<Mask>(subsets - 1);
  for (NodeId pos = n - 1; pos >= 0; --pos) {
    NodeId pick = kNoNode;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<NodeId>(__builtin_ctz(rest));
      if (pick == kNoNode || best[s & ~(Mask{1} << v)] < best[s & ~(Mask{1} << pick)]) pick = v;
    }
    order[pos] = pick;
    s &= ~(Mask{1} << pick);
  }
  return {best[subsets - 1], LinearLayout(std::move(order))};
}

int lmw_bruteforce(const Tree& tree, NodeId guard) {
  return optimal_layout_bruteforce(tree, guard).width;
}

int k_component_index_oracle(const Tree& tree, NodeId x, Width k, NodeId guard) {
  if (!tree.contains(x)) throw std::out_of_range("node " + std::to_string(x) + " not in tree");
  if (k < 1) throw std::invalid_argument("k must be positive");
  int count = 0;
  for (const NodeId v : tree.neighbors(x)) {
    for (const NodeId u : tree.neighbors(v)) {
      if (u == x) continue;
      const auto sub = dangling_tree(tree, v, u);
      if (lmw_bruteforce(sub.tree, guard) >= k) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace lmimw::oracle
