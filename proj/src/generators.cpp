#include "lmimw/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lmimw {

namespace {

constexpr std::int64_t kMaxNodes = std::int64_t{1} << 28;

NodeId checked_size(std::int64_t n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": need at least one node");
  if (n > kMaxNodes) {
    throw GuardExceeded(std::string(what) + ": " + std::to_string(n) + " nodes is too many");
  }
  return static_cast<NodeId>(n);
}

}  // namespace

Tree path_tree(NodeId n) {
  n = checked_size(n, "path_tree");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (NodeId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Tree(n, std::move(edges));
}

Tree star(NodeId n) {
  n = checked_size(n, "star");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (NodeId v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Tree(n, std::move(edges));
}

Tree caterpillar(NodeId spine, NodeId legs) {
  if (legs < 0) throw std::invalid_argument("caterpillar: negative leg count");
  const NodeId n = checked_size(std::int64_t{spine} * (1 + std::int64_t{legs}), "caterpillar");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (NodeId v = 1; v < spine; ++v) edges.emplace_back(v - 1, v);
  NodeId next = spine;
  for (NodeId v = 0; v < spine; ++v) {
    for (NodeId j = 0; j < legs; ++j) edges.emplace_back(v, next++);
  }
  return Tree(n, std::move(edges));
}

Tree complete_ary(NodeId branching, NodeId height) {
  if (branching < 0 || height < 0) throw std::invalid_argument("complete_ary: negative parameter");
  std::int64_t total = 1;
  std::int64_t level = 1;
  for (NodeId h = 0; h < height && branching > 0; ++h) {
    level *= branching;
    total += level;
    if (total > kMaxNodes) break;
  }
  const NodeId n = checked_size(total, "complete_ary");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Level order: the children of node p are p*b+1 .. p*b+b.
  for (NodeId v = 1; v < n; ++v) edges.emplace_back((v - 1) / branching, v);
  return Tree(n, std::move(edges));
}

Tree from_prufer(NodeId n, std::span<const NodeId> sequence) {
  n = checked_size(n, "from_prufer");
  if (n == 1) {
    if (!sequence.empty()) throw std::invalid_argument("from_prufer: sequence too long");
    return Tree(1, {});
  }
  if (static_cast<NodeId>(sequence.size()) != n - 2) {
    throw std::invalid_argument("from_prufer: sequence length must be n-2");
  }
  std::vector<NodeId> degree(n, 1);
  for (const NodeId a : sequence) {
    if (a < 0 || a >= n) throw std::invalid_argument("from_prufer: entry out of range");
    ++degree[a];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  NodeId ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  NodeId leaf = ptr;
  for (const NodeId a : sequence) {
    edges.emplace_back(leaf, a);
    if (--degree[a] == 1 && a < ptr) {
      leaf = a;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Tree(n, std::move(edges));
}

Tree random_tree(NodeId n, std::uint64_t seed) {
  n = checked_size(n, "random_tree");
  if (n <= 2) return path_tree(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeId> pick(0, n - 1);
  std::vector<NodeId> seq(n - 2);
  for (auto& a : seq) a = pick(rng);
  return from_prufer(n, seq);
}

std::uint64_t labelled_tree_count(NodeId n) {
  if (n < 1) return 0;
  if (n <= 2) return 1;
  std::uint64_t count = 1;
  for (NodeId i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
  return count;
}

void enumerate_trees(NodeId n, const std::function<void(const Tree&)>& fn) {
  if (n < 2 || n > 9) {
    throw GuardExceeded("enumerate_trees: n = " + std::to_string(n) + " is outside 2..9");
  }
  std::vector<NodeId> seq(n - 2, 0);
  while (true) {
    fn(from_prufer(n, seq));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) return;
  }
}

std::uint64_t extremal_size(Width k) {
  if (k < 1) throw std::invalid_argument("extremal_size: k must be positive");
  std::uint64_t s = 2;
  for (Width i = 2; i <= k; ++i) s = 1 + 3 * (1 + s);
  return s;
}

namespace {

NodeId build_extremal(Width k, NodeId& next, std::vector<Edge>& edges) {
  const NodeId center = next++;
  if (k == 1) {
    edges.emplace_back(center, next++);
    return center;
  }
  for (int i = 0; i < 3; ++i) {
    const NodeId u = next++;
    edges.emplace_back(center, u);
    edges.emplace_back(u, build_extremal(k - 1, next, edges));
  }
  return center;
}

}  // namespace

Tree extremal_tree(Width k) {
  if (k < 1 || k > 12) {
    throw GuardExceeded("extremal_tree: k = " + std::to_string(k) + " is outside 1..12");
  }
  const auto n = static_cast<NodeId>(extremal_size(k));
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  NodeId next = 0;
  build_extremal(k, next, edges);
  return Tree(n, std::move(edges));
}

}  // namespace lmimw
