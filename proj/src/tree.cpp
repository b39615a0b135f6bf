#include "lmimw/tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace lmimw {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(NodeId n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  NodeId find(NodeId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<NodeId> parent_;
};

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Tree::Tree(NodeId node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 1) throw TreeError("a tree needs at least one node");

  DisjointSets components(node_count_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    if (!contains(u) || !contains(v)) {
      throw TreeError("edge " + edge_text(edges_[i]) + " uses an id outside 0.." +
                      std::to_string(node_count_ - 1) + " (ids must be contiguous)");
    }
    if (u == v) throw TreeError("self-loop at node " + std::to_string(u));
    if (!components.unite(u, v)) {
      const bool duplicate = std::any_of(edges_.begin(), edges_.begin() + i, [&](const Edge& f) {
        return (f.first == u && f.second == v) || (f.first == v && f.second == u);
      });
      throw TreeError(duplicate ? "duplicate edge " + edge_text(edges_[i])
                                : "cycle detected at edge " + edge_text(edges_[i]));
    }
  }
  if (static_cast<NodeId>(edges_.size()) != node_count_ - 1) {
    throw TreeError("input is disconnected: " + std::to_string(node_count_) + " nodes but " +
                    std::to_string(edges_.size()) + " edges");
  }

  offsets_.assign(node_count_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  edge_index_.resize(2 * edges_.size());
  std::vector<NodeId> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    edge_index_[fill[u]] = static_cast<NodeId>(e);
    adjacency_[fill[u]++] = v;
    edge_index_[fill[v]] = static_cast<NodeId>(e);
    adjacency_[fill[v]++] = u;
  }
}

bool Tree::adjacent(NodeId u, NodeId v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto a = degree(u) <= degree(v) ? neighbors(u) : neighbors(v);
  const NodeId other = degree(u) <= degree(v) ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace {

bool parse_id(std::string_view token, NodeId& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && out >= 0;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Tree parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  NodeId declared = kNoNode;
  bool seen_content = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_whitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (tokens.size() == 1 && !seen_content) {
      if (!parse_id(tokens[0], declared) || declared < 1) {
        throw TreeError(where + "malformed node count '" + std::string(tokens[0]) + "'");
      }
    } else if (tokens.size() == 2) {
      Edge e;
      if (!parse_id(tokens[0], e.first) || !parse_id(tokens[1], e.second)) {
        throw TreeError(where + "malformed edge '" + line + "'");
      }
      edges.push_back(e);
    } else {
      throw TreeError(where + "malformed line '" + line + "'");
    }
    seen_content = true;
  }

  if (declared == kNoNode) {
    if (edges.empty()) throw TreeError("empty input: no node count and no edges");
    NodeId max_id = 0;
    for (const auto& [u, v] : edges) max_id = std::max({max_id, u, v});
    std::vector<bool> used(static_cast<std::size_t>(max_id) + 1, false);
    for (const auto& [u, v] : edges) used[u] = used[v] = true;
    const auto missing = std::find(used.begin(), used.end(), false);
    if (missing != used.end()) {
      throw TreeError("non-contiguous ids: node " + std::to_string(missing - used.begin()) +
                      " never appears");
    }
    declared = max_id + 1;
  }
  return Tree(declared, std::move(edges));
}

Tree parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Tree& tree) {
  std::vector<Edge> sorted(tree.edges().begin(), tree.edges().end());
  for (auto& [u, v] : sorted) {
    if (u > v) std::swap(u, v);
  }
  std::sort(sorted.begin(), sorted.end());
  out << tree.node_count() << '\n';
  for (const auto& [u, v] : sorted) out << u << ' ' << v << '\n';
}

std::string serialize(const Tree& tree) {
  std::ostringstream out;
  write_edge_list(out, tree);
  return out.str();
}

// ---------------------------------------------------------------------------
// Rooting

RootedTree::RootedTree(const Tree& tree, NodeId root) : tree_(&tree), root_(root) {
  const NodeId n = tree.node_count();
  if (!tree.contains(root)) {
    throw std::out_of_range("root " + std::to_string(root) + " is not a node of the tree");
  }
  parent_.assign(n, kNoNode);
  depth_.assign(n, 0);
  order_.resize(n);
  bfs_index_.resize(n);
  first_child_.resize(static_cast<std::size_t>(n) + 1);

  order_[0] = root;
  NodeId tail = 1;
  // On large trees with scattered ids nearly every adjacency read misses the
  // cache. The queue tells us which nodes come next, so fetch ahead.
  // Offsets go first, adjacency once those have arrived.
  constexpr NodeId kAhead = 8;
  for (NodeId head = 0; head < n; ++head) {
    if (head + 2 * kAhead < tail) {
      const NodeId u = order_[head + 2 * kAhead];
      __builtin_prefetch(&tree.offsets_[u]);
      __builtin_prefetch(&bfs_index_[u], 1);
    }
    if (head + kAhead < tail) {
      __builtin_prefetch(tree.adjacency_.data() + tree.offsets_[order_[head + kAhead]]);
    }
    const NodeId v = order_[head];
    bfs_index_[v] = head;
    first_child_[head] = tail;
    const NodeId up = parent_[head];
    for (const NodeId c : tree.neighbors(v)) {
      if (c == up) continue;
      parent_[tail] = v;
      depth_[tail] = depth_[head] + 1;
      order_[tail++] = c;
    }
  }
  first_child_[n] = tail;

  subtree_size_.assign(n, 1);
  for (NodeId i = n - 1; i >= 0; --i) {
    for (NodeId j = first_child_[i]; j < first_child_[i + 1]; ++j) {
      subtree_size_[i] += subtree_size_[j];
    }
  }
  preorder_.assign(n, 0);
  for (NodeId i = 0; i < n; ++i) {
    NodeId next = preorder_[i] + 1;
    for (NodeId j = first_child_[i]; j < first_child_[i + 1]; ++j) {
      preorder_[j] = next;
      next += subtree_size_[j];
    }
  }
}

RootedTree root_at(const Tree& tree, NodeId root) { return RootedTree(tree, root); }

std::vector<NodeId> nodes_of_view(const TreeView& view) {
  if (view.base == nullptr || !view.base->tree().contains(view.view_root)) {
    throw std::invalid_argument("view root is not a node of the base tree");
  }
  const RootedTree& rt = *view.base;
  for (const NodeId w : view.excluded) {
    if (!rt.tree().contains(w) || w == view.view_root ||
        !rt.is_ancestor_or_self(view.view_root, w)) {
      throw std::invalid_argument("excluded node " + std::to_string(w) +
                                  " is not a strict descendant of the view root");
    }
  }
  auto is_excluded = [&](NodeId v) {
    return std::find(view.excluded.begin(), view.excluded.end(), v) != view.excluded.end();
  };

  std::vector<NodeId> out;
  std::vector<NodeId> stack{view.view_root};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    const auto kids = rt.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      if (!is_excluded(*it)) stack.push_back(*it);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subtree extraction (oracle and test paths only)

SubTree induced_subtree(const Tree& tree, std::span<const NodeId> nodes) {
  std::vector<NodeId> local(tree.node_count(), kNoNode);
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<NodeId>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const NodeId b : tree.neighbors(nodes[i])) {
      if (local[b] != kNoNode && static_cast<NodeId>(i) < local[b]) {
        edges.emplace_back(static_cast<NodeId>(i), local[b]);
      }
    }
  }
  return SubTree{Tree(static_cast<NodeId>(nodes.size()), std::move(edges)),
                 std::vector<NodeId>(nodes.begin(), nodes.end())};
}

SubTree dangling_tree(const Tree& tree, NodeId v, NodeId u) {
  if (!tree.adjacent(v, u)) {
    throw std::invalid_argument("(" + std::to_string(v) + "," + std::to_string(u) +
                                ") is not an edge");
  }
  std::vector<NodeId> nodes{u};
  std::vector<NodeId> from{v};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (const NodeId w : tree.neighbors(nodes[head])) {
      if (w == from[head]) continue;
      nodes.push_back(w);
      from.push_back(nodes[head]);
    }
  }
  return induced_subtree(tree, nodes);
}

}  // namespace lmimw
