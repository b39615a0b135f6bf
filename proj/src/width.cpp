#include "lmimw/width.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace lmimw {

namespace {

bool low_type(LastType t) { return t == LastType::t0 || t == LastType::t1; }

}  // namespace

CaseInput summarize_case(Width s, std::span<const NodeId> ns_children,
                         std::span<const LabelView> ns_labels, int t_s, LabelView cur_label) {
  if (ns_children.size() != ns_labels.size()) {
    throw std::invalid_argument("summarize_case: children and labels differ in length");
  }
  CaseInput in;
  in.s = s;
  in.ns_count = static_cast<int>(ns_children.size());
  in.t_s = t_s;
  in.cur_label = cur_label;
  for (const LabelView& l : ns_labels) {
    if (l.empty() || first_width(l) != s) {
      throw std::invalid_argument("summarize_case: label " + to_string(l) +
                                  " does not start at " + std::to_string(s));
    }
    if (l.size() != 1 || !low_type(l.last_type)) in.all_simple_low = false;
  }
  if (in.ns_count == 1) {
    in.sole_child = ns_children.front();
    in.sole_label = ns_labels.front();
  }
  return in;
}

Label CaseOutcome::new_label(LabelView cur_label) const {
  if (prepends) return prepend(entry.width, entry.witness, cur_label, entry.critical);
  return Label({entry}, last_type);
}

CaseOutcome case_analysis(const CaseInput& in, NodeId x) {
  if (in.ns_count <= 0) throw std::logic_error("case_analysis: N_s is empty");
  const Width s = in.s;
  CaseOutcome out;
  if (in.all_simple_low) {
    if (in.t_s <= 1) {
      out = {1, false, {s, x, kNoNode}, LastType::t1};
    } else if (in.t_s == 2) {
      out = {2, false, {s, x, x}, LastType::t2};
    } else {
      out = {3, false, {s + 1, x, kNoNode}, LastType::t1};
    }
    return out;
  }
  if (in.ns_count >= 2) return {4, false, {s + 1, x, kNoNode}, LastType::t1};

  const LabelView l = in.sole_label;
  if (l.empty()) throw std::logic_error("case_analysis: missing label of the sole child");
  if (is_simple(l) && l.last_type == LastType::t2) {
    return {5, false, {s, x, in.sole_child}, LastType::t3};
  }
  if (is_simple(l) && l.last_type != LastType::t3) {
    throw std::logic_error("case_analysis: no case for " + to_string(l));
  }
  if (contains(in.cur_label, s)) return {7, false, {s + 1, x, kNoNode}, LastType::t1};
  // The parent of the s-critical node: for a t.3 label that is the labelled
  // child itself, otherwise it was recorded in the first entry.
  const LabelEntry& head = l.entries.front();
  const NodeId witness = is_simple(l) ? in.sole_child : head.witness;
  return {6, true, {s, witness, head.critical}, in.cur_label.last_type};
}

namespace {

constexpr int kMaxWidth = 63;

// Per-width tallies over the children of one node.
struct Level {
  int count = 0;
  int t = 0;
  bool bad = false;
  NodeId sole = kNoNode;
  std::uint32_t sole_pos = 0;
  NodeId bad_critical = kNoNode;
};

// Children reached by node id, for stores of any slot numbering.
struct ByNode {
  const RootedTree& tree;
  const LabelStore& store;

  std::span<const NodeId> children(NodeId v) const { return tree.children(v); }
  NodeId node(NodeId v) const { return v; }
  NodeId slot(NodeId v) const { return store.slot(v); }
};

// Children reached as BFS index ranges, for stores whose slots are the BFS
// indices. Every read in the bottom-up pass is then to neighbouring memory.
struct ByIndex {
  const RootedTree& tree;
  const LabelStore& store;

  auto children(NodeId i) const {
    struct Range {
      NodeId b, e;
      struct It {
        NodeId v;
        NodeId operator*() const { return v; }
        It& operator++() { ++v; return *this; }
        bool operator!=(const It& o) const { return v != o.v; }
      };
      It begin() const { return {b}; }
      It end() const { return {e}; }
    };
    return Range{tree.first_child_index(i), tree.end_child_index(i)};
  }
  NodeId node(NodeId i) const { return tree.bfs_order()[i]; }
  NodeId slot(NodeId i) const { return i; }
};

struct Scratch {
  std::array<Level, kMaxWidth + 1> levels{};
  std::vector<LabelEntry> cur;
  std::vector<LabelEntry> out;
  LastType type = LastType::t0;
  NodeId certificate = kNoNode;
};

// MakeLabel. Leaves the label in scratch.out. cur keeps its entries in
// ascending width order so that Case 6 appends instead of shifting.
template <class Access>
void make_label_impl(const Access& a, NodeId item, Scratch& scratch) {
  const LabelStore& store = a.store;
  const NodeId x = a.node(item);
  auto& levels = scratch.levels;
  std::uint64_t present = 0;
  for (const NodeId c : a.children(item)) {
    const NodeId slot = a.slot(c);
    if (!store.has_label_at(slot)) {
      throw std::logic_error("make_label: child " + std::to_string(a.node(c)) + " has no label");
    }
    std::uint64_t below = 0;
    for (const NodeId u : a.children(c)) below |= store.width_mask_at(a.slot(u));
    const std::uint64_t mask = store.width_mask_at(slot);
    const std::uint64_t shared = mask & below;
    present |= mask;

    const LabelView l = store.label_at(slot);
    for (std::uint32_t i = 0; i < l.size(); ++i) {
      const LabelEntry& e = l.entries[i];
      if (e.width < 1) continue;
      if (e.width > kMaxWidth) throw std::logic_error("make_label: width overflow");
      Level& lv = levels[e.width];
      ++lv.count;
      lv.sole = c;
      lv.sole_pos = i;
      if (i + 1 < l.size() || !low_type(l.last_type)) {
        lv.bad = true;
        lv.bad_critical = e.critical;
      }
      if ((shared >> e.width) & 1U) ++lv.t;
    }
  }

  auto& cur = scratch.cur;
  LastType cur_type = LastType::t0;
  cur.assign(1, {(present & 1U) != 0 ? 1 : 0, x, kNoNode});
  NodeId certificate = kNoNode;

  for (std::uint64_t rest = present & ~std::uint64_t{1}; rest != 0; rest &= rest - 1) {
    const auto s = static_cast<Width>(std::countr_zero(rest));
    Level& lv = levels[s];
    CaseInput in;
    in.s = s;
    in.ns_count = lv.count;
    in.t_s = lv.t;
    in.all_simple_low = !lv.bad;
    // Only membership of cur is read, so the ascending order does not matter.
    in.cur_label = {cur, cur_type};
    const NodeId sole_slot = a.slot(lv.sole);
    if (lv.count == 1) {
      in.sole_child = a.node(lv.sole);
      const LabelView full = store.label_at(sole_slot);
      in.sole_label = {full.entries.subspan(lv.sole_pos), full.last_type};
    }
    const CaseOutcome out = case_analysis(in, x);
    if (out.prepends) {
      cur.push_back(out.entry);
    } else {
      cur.assign(1, out.entry);
      cur_type = out.last_type;
    }
    switch (out.case_id) {
      case 3: certificate = x; break;
      case 4: certificate = lv.bad_critical; break;
      case 7: certificate = in.sole_label.entries.front().critical; break;
      default: certificate = store.certificate_at(sole_slot); break;
    }
    lv = Level{};
  }

  scratch.out.assign(cur.rbegin(), cur.rend());
  scratch.type = cur_type;
  scratch.certificate = certificate;
}

}  // namespace

Label make_label(const RootedTree& tree, NodeId x, const LabelStore& labels) {
  Scratch scratch;
  make_label_impl(ByNode{tree, labels}, x, scratch);
  return Label(std::move(scratch.out), scratch.type);
}

LabelResult compute_all_labels(const Tree& tree, NodeId root) {
  RootedTree rooted(tree, root);
  const NodeId n = tree.node_count();
  std::vector<NodeId> slots(n);
  for (NodeId v = 0; v < n; ++v) slots[v] = rooted.bfs_index(v);
  LabelStore store(std::move(slots));

  Scratch scratch;
  const ByIndex access{rooted, store};
  for (NodeId i = n - 1; i >= 0; --i) {
    make_label_impl(access, i, scratch);
    store.store(i, {scratch.out, scratch.type}, scratch.certificate);
  }
  const Width lmw = first_width(store.label_at(0));
  return {std::move(rooted), std::move(store), lmw};
}

std::optional<ClassificationWitness> classification_witness(const LabelResult& result) {
  if (result.lmw < 2) return std::nullopt;
  const NodeId node = result.labels.certificate(result.rooted.root());
  if (node == kNoNode) return std::nullopt;
  return ClassificationWitness{node, result.lmw - 1};
}

}  // namespace lmimw
