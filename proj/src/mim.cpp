#include "lmimw/mim.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lmimw {

LinearLayout::LinearLayout(std::vector<NodeId> order) : order_(std::move(order)) {
  const auto n = static_cast<NodeId>(order_.size());
  position_.assign(n, kNoNode);
  for (NodeId i = 0; i < n; ++i) {
    const NodeId v = order_[i];
    if (v < 0 || v >= n) {
      throw std::invalid_argument("layout entry " + std::to_string(v) + " is out of range");
    }
    if (position_[v] != kNoNode) {
      throw std::invalid_argument("layout lists node " + std::to_string(v) + " twice");
    }
    position_[v] = i;
  }
}

LinearLayout LinearLayout::identity(NodeId n) {
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  return LinearLayout(std::move(order));
}

namespace {

void require_cover(const Tree& tree, const LinearLayout& layout) {
  if (layout.size() != tree.node_count()) {
    throw std::invalid_argument("layout has " + std::to_string(layout.size()) +
                                " nodes but the tree has " +
                                std::to_string(tree.node_count()));
  }
}

}  // namespace

CutForest cut_at(const Tree& tree, const LinearLayout& layout, NodeId i) {
  require_cover(tree, layout);
  if (i < 1 || i > tree.node_count() - 1) {
    throw std::out_of_range("cut index " + std::to_string(i) + " outside 1.." +
                            std::to_string(tree.node_count() - 1));
  }
  CutForest cut;
  cut.cut_index = i;
  for (auto [a, b] : tree.edges()) {
    if (layout.position(a) > layout.position(b)) std::swap(a, b);
    if (layout.position(a) < i && layout.position(b) >= i) cut.crossing_edges.emplace_back(a, b);
  }
  return cut;
}

int mim_forest(std::span<const Edge> forest_edges) {
  if (forest_edges.empty()) return 0;

  std::vector<NodeId> ids;
  ids.reserve(2 * forest_edges.size());
  for (const auto& [a, b] : forest_edges) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative node id in forest");
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const auto n = static_cast<NodeId>(ids.size());
  auto local = [&](NodeId v) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };

  std::vector<NodeId> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](NodeId v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  std::vector<NodeId> offsets(n + 1, 0);
  std::vector<Edge> edges;
  edges.reserve(forest_edges.size());
  for (const auto& [a, b] : forest_edges) {
    const NodeId la = local(a);
    const NodeId lb = local(b);
    const NodeId ra = find(la);
    const NodeId rb = find(lb);
    if (ra == rb) throw std::invalid_argument("edge list contains a cycle");
    uf[ra] = rb;
    edges.emplace_back(la, lb);
    ++offsets[la + 1];
    ++offsets[lb + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<NodeId> adj(2 * edges.size());
  std::vector<NodeId> fill(offsets.begin(), offsets.end() - 1);
  for (const auto& [a, b] : edges) {
    adj[fill[a]++] = b;
    adj[fill[b]++] = a;
  }

  std::vector<NodeId> parent(n, kNoNode);
  std::vector<bool> seen(n, false);
  std::vector<NodeId> preorder;
  std::vector<detail::MimNode> acc(n);
  int total = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    preorder.clear();
    preorder.push_back(s);
    seen[s] = true;
    for (std::size_t head = 0; head < preorder.size(); ++head) {
      const NodeId v = preorder[head];
      for (NodeId k = offsets[v]; k < offsets[v + 1]; ++k) {
        const NodeId w = adj[k];
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = v;
        preorder.push_back(w);
      }
    }
    for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
      const auto states = acc[*it].finish();
      if (parent[*it] == kNoNode) {
        total += states.best();
      } else {
        acc[parent[*it]].absorb(states);
      }
    }
  }
  return total;
}

namespace {

// Crossing edges of the current cut, kept incrementally as nodes move from
// the right side to the left side one at a time.
class IncrementalCut {
 public:
  explicit IncrementalCut(const Tree& tree)
      : incident_(tree.node_count()),
        slot_(2 * tree.edges().size(), kNoNode),
        active_slot_(tree.node_count(), kNoNode),
        acc_(tree.node_count()),
        parent_(tree.node_count(), kNoNode),
        stamp_(tree.node_count(), 0) {}

  void add(NodeId a, NodeId b, NodeId e) {
    attach(a, b, 2 * e);
    attach(b, a, 2 * e + 1);
  }

  void remove(NodeId a, NodeId b, NodeId e) {
    detach(a, 2 * e);
    detach(b, 2 * e + 1);
  }

  // MIM of the current cut forest; linear in the number of crossing edges.
  int evaluate() {
    ++epoch_;
    int total = 0;
    for (const NodeId s : active_) {
      if (stamp_[s] == epoch_) continue;
      preorder_.clear();
      preorder_.push_back(s);
      stamp_[s] = epoch_;
      parent_[s] = kNoNode;
      for (std::size_t head = 0; head < preorder_.size(); ++head) {
        const NodeId v = preorder_[head];
        acc_[v] = detail::MimNode{};
        for (const auto& [w, e] : incident_[v]) {
          if (stamp_[w] == epoch_) continue;
          stamp_[w] = epoch_;
          parent_[w] = v;
          preorder_.push_back(w);
        }
      }
      for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
        const auto states = acc_[*it].finish();
        if (parent_[*it] == kNoNode) {
          total += states.best();
        } else {
          acc_[parent_[*it]].absorb(states);
        }
      }
    }
    return total;
  }

 private:
  struct Incidence {
    NodeId other;
    NodeId half_edge;
  };

  void attach(NodeId v, NodeId other, NodeId half) {
    if (incident_[v].empty()) {
      active_slot_[v] = static_cast<NodeId>(active_.size());
      active_.push_back(v);
    }
    slot_[half] = static_cast<NodeId>(incident_[v].size());
    incident_[v].push_back({other, half});
  }

  void detach(NodeId v, NodeId half) {
    auto& list = incident_[v];
    const NodeId at = slot_[half];
    list[at] = list.back();
    slot_[list[at].half_edge] = at;
    list.pop_back();
    if (list.empty()) {
      const NodeId pos = active_slot_[v];
      active_[pos] = active_.back();
      active_slot_[active_[pos]] = pos;
      active_.pop_back();
    }
  }

  std::vector<std::vector<Incidence>> incident_;
  std::vector<NodeId> slot_;
  std::vector<NodeId> active_;
  std::vector<NodeId> active_slot_;
  std::vector<detail::MimNode> acc_;
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> stamp_;
  std::vector<NodeId> preorder_;
  std::uint32_t epoch_ = 0;
};

}  // namespace

std::vector<int> mim_per_cut(const Tree& tree, const LinearLayout& layout) {
  require_cover(tree, layout);
  const NodeId n = tree.node_count();
  std::vector<int> out;
  if (n < 2) return out;
  out.reserve(n - 1);

  IncrementalCut cut(tree);
  for (NodeId i = 1; i < n; ++i) {
    const NodeId v = layout.at(i - 1);
    const auto nbrs = tree.neighbors(v);
    const auto eids = tree.incident_edges(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const NodeId b = nbrs[k];
      const NodeId lo = std::min(v, b);
      const NodeId hi = std::max(v, b);
      if (layout.position(b) < i - 1) {
        cut.remove(lo, hi, eids[k]);
      } else {
        cut.add(lo, hi, eids[k]);
      }
    }
    out.push_back(cut.evaluate());
  }
  return out;
}

int mim_of_layout(const Tree& tree, const LinearLayout& layout) {
  const auto per_cut = mim_per_cut(tree, layout);
  return per_cut.empty() ? 0 : *std::max_element(per_cut.begin(), per_cut.end());
}

}  // namespace lmimw
