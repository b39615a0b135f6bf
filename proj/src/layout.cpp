#include "lmimw/layout.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <variant>

namespace lmimw {

namespace {

std::uint64_t below(Width threshold) {
  return threshold >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << threshold) - 1;
}

// Reads labels of one view through width masks, so the checks the path
// search makes per node are O(1).
class ViewReader {
 public:
  ViewReader(const LabelResult& labels, LabeledView view)
      : labels_(labels), rooted_(labels.rooted), view_(view), keep_(below(view.threshold)) {}

  const RootedTree& rooted() const { return rooted_; }
  LabeledView view() const { return view_; }

  std::uint64_t mask(NodeId y) const {
    return labels_.labels.width_mask_at(labels_.labels.slot(y)) & keep_;
  }
  bool in_view(NodeId y) const { return mask(y) != 0; }
  /// lmw of T_r[y] inside the view, -1 when cut away.
  Width top(NodeId y) const {
    const std::uint64_t m = mask(y);
    return m == 0 ? -1 : 63 - std::countl_zero(m);
  }
  LabelView label(NodeId y) const { return truncate(labels_.labels.label(y), view_.threshold); }

  /// A child of y in the view with a child of view width k.
  bool is_k_neighbour_child(NodeId v, Width k) const {
    if (!in_view(v)) return false;
    for (const NodeId u : rooted_.children(v)) {
      if (top(u) == k) return true;
    }
    return false;
  }

  /// Starting at y, repeatedly step to the child that is a k-neighbour.
  void walk(NodeId y, Width k, std::vector<NodeId>& out) const {
    for (NodeId cur = y; cur != kNoNode;) {
      out.push_back(cur);
      NodeId next = kNoNode;
      for (const NodeId v : rooted_.children(cur)) {
        if (is_k_neighbour_child(v, k)) {
          next = v;
          break;
        }
      }
      cur = next;
    }
  }

  /// The path through a k-critical node: one k-neighbour's walk reversed,
  /// the node, the other walk.
  void through_critical(NodeId crit, Width k, std::vector<NodeId>& out) const {
    NodeId ends[2] = {kNoNode, kNoNode};
    int found = 0;
    for (const NodeId v : rooted_.children(crit)) {
      if (is_k_neighbour_child(v, k)) {
        if (found == 2) {
          throw std::logic_error("node " + std::to_string(crit) + " has three " +
                                 std::to_string(k) + "-neighbours below it");
        }
        ends[found++] = v;
      }
    }
    if (found != 2) {
      throw std::logic_error("node " + std::to_string(crit) + " is not " + std::to_string(k) +
                             "-critical");
    }
    walk(ends[0], k, out);
    std::reverse(out.begin(), out.end());
    out.push_back(crit);
    walk(ends[1], k, out);
  }

 private:
  const LabelResult& labels_;
  const RootedTree& rooted_;
  LabeledView view_;
  std::uint64_t keep_;
};

void check_root(const LabelResult& labels, LabeledView view) {
  if (!labels.rooted.tree().contains(view.root)) {
    throw std::out_of_range("view root " + std::to_string(view.root) + " not in tree");
  }
  if (labels.labels.label(view.root).empty() ||
      last_width(labels.labels.label(view.root)) >= view.threshold) {
    throw std::invalid_argument("view at " + std::to_string(view.root) + " below " +
                                std::to_string(view.threshold) + " is empty");
  }
}

PathInTree find_path_in(const ViewReader& r) {
  const NodeId x = r.view().root;
  const LabelView l = r.label(x);
  PathInTree out;
  out.k = first_width(l);
  if (!is_simple(l)) {
    out.type = 4;
    out.detached = l.entries.front().witness;
    r.through_critical(l.entries.front().critical, out.k, out.nodes);
    return out;
  }
  out.type = static_cast<int>(l.last_type);
  switch (l.last_type) {
    case LastType::t0: out.nodes.push_back(x); break;
    case LastType::t1: r.walk(x, out.k, out.nodes); break;
    case LastType::t2: r.through_critical(x, out.k, out.nodes); break;
    case LastType::t3: r.through_critical(l.entries.front().critical, out.k, out.nodes); break;
  }
  return out;
}

// Off-path neighbours of path[i]: in a tree the only path nodes adjacent to
// path[i] are its predecessor and successor.
bool on_path_next_to(std::span<const NodeId> path, std::size_t i, NodeId v) {
  return (i > 0 && path[i - 1] == v) || (i + 1 < path.size() && path[i + 1] == v);
}

}  // namespace

LabelView effective_label(const LabelResult& labels, LabeledView view, NodeId y) {
  check_root(labels, view);
  if (!labels.rooted.tree().contains(y) || !labels.rooted.is_ancestor_or_self(view.root, y)) {
    throw std::out_of_range("node " + std::to_string(y) + " is not below the view root");
  }
  return truncate(labels.labels.label(y), view.threshold);
}

TreeView to_tree_view(const LabelResult& labels, LabeledView view) {
  check_root(labels, view);
  const ViewReader r(labels, view);
  TreeView out{&labels.rooted, view.root, {}};
  std::vector<NodeId> stack{view.root};
  while (!stack.empty()) {
    const NodeId y = stack.back();
    stack.pop_back();
    for (const NodeId c : labels.rooted.children(y)) {
      if (r.in_view(c)) {
        stack.push_back(c);
      } else {
        out.excluded.push_back(c);
      }
    }
  }
  return out;
}

PathInTree find_path(const LabelResult& labels, LabeledView view) {
  check_root(labels, view);
  return find_path_in(ViewReader(labels, view));
}

std::vector<Edge> path_components(const Tree& tree, std::span<const NodeId> path) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (const NodeId v : tree.neighbors(path[i])) {
      if (on_path_next_to(path, i, v)) continue;
      for (const NodeId u : tree.neighbors(v)) {
        if (u != path[i]) out.emplace_back(v, u);
      }
    }
  }
  return out;
}

LinearLayout lin_ord(const Tree& tree, std::span<const NodeId> path, const ComponentOrders& orders) {
  if (path.empty()) throw std::invalid_argument("lin_ord: empty path");
  std::vector<bool> seen(tree.node_count(), false);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!tree.contains(path[i]) || seen[path[i]]) {
      throw std::invalid_argument("lin_ord: path is not simple");
    }
    seen[path[i]] = true;
    if (i > 0 && !tree.adjacent(path[i - 1], path[i])) {
      throw std::invalid_argument("lin_ord: path nodes " + std::to_string(path[i - 1]) + " and " +
                                  std::to_string(path[i]) + " are not adjacent");
    }
  }
  std::vector<NodeId> order;
  order.reserve(tree.node_count());
  for (std::size_t i = 0; i < path.size(); ++i) {
    order.push_back(path[i]);
    for (const NodeId v : tree.neighbors(path[i])) {
      if (on_path_next_to(path, i, v)) continue;
      for (const NodeId u : tree.neighbors(v)) {
        if (u == path[i]) continue;
        const auto it = orders.find({v, u});
        if (it == orders.end()) {
          throw std::invalid_argument("lin_ord: no layout for the component at (" +
                                      std::to_string(v) + "," + std::to_string(u) + ")");
        }
        order.insert(order.end(), it->second.begin(), it->second.end());
      }
      order.push_back(v);
    }
  }
  return LinearLayout(std::move(order));
}

LayoutResult build_layout(const Tree& tree, NodeId root) {
  return build_layout(compute_all_labels(tree, root));
}

LayoutResult build_layout(const LabelResult& labels) {
  const RootedTree& rooted = labels.rooted;
  const NodeId n = rooted.node_count();

  // Work items: either place a node, or lay out a whole view. A view expands
  // into its LinOrd sequence, pushed in reverse so it pops in order.
  using Task = std::variant<NodeId, LabeledView>;
  std::vector<Task> stack{LabeledView{rooted.root(), kFullView}};
  std::vector<Task> plan;
  std::vector<NodeId> order;
  order.reserve(n);

  while (!stack.empty()) {
    const Task task = stack.back();
    stack.pop_back();
    if (const auto* v = std::get_if<NodeId>(&task)) {
      order.push_back(*v);
      continue;
    }
    const LabeledView view = std::get<LabeledView>(task);
    const ViewReader r(labels, view);
    const PathInTree path = find_path_in(r);
    const std::span<const NodeId> p = path.nodes;
    const NodeId x = view.root;

    auto neighbours = [&](NodeId y, auto&& fn) {
      if (y != x) fn(rooted.parent(y));
      for (const NodeId c : rooted.children(y)) {
        if (r.in_view(c)) fn(c);
      }
    };
    auto component = [&](NodeId v, NodeId u) {
      if (u == rooted.parent(v)) {
        // Only the parent side of the type-4 witness is not a full subtree.
        if (v != path.detached) {
          throw std::logic_error("unexpected parent-side component at " + std::to_string(v));
        }
        plan.emplace_back(LabeledView{x, path.k});
        return;
      }
      if (r.top(u) >= path.k) {
        throw std::logic_error("component at " + std::to_string(u) + " is as wide as its parent view");
      }
      plan.emplace_back(LabeledView{u, view.threshold});
    };

    plan.clear();
    for (std::size_t i = 0; i < p.size(); ++i) {
      plan.emplace_back(p[i]);
      neighbours(p[i], [&](NodeId v) {
        if (on_path_next_to(p, i, v)) return;
        neighbours(v, [&](NodeId u) {
          if (u != p[i]) component(v, u);
        });
        plan.emplace_back(v);
      });
    }
    stack.insert(stack.end(), plan.rbegin(), plan.rend());
  }
  return {LinearLayout(std::move(order)), labels.lmw};
}

}  // namespace lmimw
