#pragma once

#include <optional>
#include <span>

#include "lmimw/label.hpp"
#include "lmimw/tree.hpp"

namespace lmimw {

/// What the case analysis needs to know about one level s of the label loop
/// at a node x. The child labels referred to here are already truncated to
/// widths <= s, so every child in N_s has first width s.
struct CaseInput {
  Width s = 0;
  /// |N_s|: children whose (truncated) label contains s.
  int ns_count = 0;
  /// Children in N_s that have a child whose (truncated) label contains s.
  int t_s = 0;
  /// Every label in N_s is simple with last type t0 or t1.
  bool all_simple_low = true;
  /// The one member of N_s and its truncated label, when ns_count == 1.
  NodeId sole_child = kNoNode;
  LabelView sole_label;
  /// Label of the part of x's subtree built from widths below s.
  LabelView cur_label;
};

/// Builds a CaseInput from the full list of N_s members and their truncated
/// labels.
CaseInput summarize_case(Width s, std::span<const NodeId> ns_children,
                         std::span<const LabelView> ns_labels, int t_s, LabelView cur_label);

struct CaseOutcome {
  /// 1-3: every N_s label is (s) with type t.0/t.1, split on t_s <= 1, == 2,
  /// >= 3. 4: two or more children reach s. 5: the sole child's label is
  /// (s,t.2). 6: s-critical node below, s not yet in the current label.
  /// 7: as 6, but s already present.
  int case_id = 0;
  /// Case 6 puts `entry` in front of the current label; every other case
  /// replaces the label by the single entry with `last_type`.
  bool prepends = false;
  LabelEntry entry;
  LastType last_type = LastType::t1;

  Label new_label(LabelView cur_label) const;
};

/// The eight-way decision for node x at level s. Throws std::logic_error
/// when N_s is empty (nothing to decide) or no case applies.
CaseOutcome case_analysis(const CaseInput& input, NodeId x);

class LabelStore;

/// label(T_r[x]) from the stored labels of x's children and grandchildren.
/// The store must come from a computation on the same rooted tree.
Label make_label(const RootedTree& tree, NodeId x, const LabelStore& labels);

struct LabelResult {
  RootedTree rooted;
  LabelStore labels;
  Width lmw = 0;
};

/// Labels every rooted subtree bottom-up and returns lmw(T). O(n log n).
/// The tree must outlive the result.
LabelResult compute_all_labels(const Tree& tree, NodeId root = 0);
LabelResult compute_all_labels(Tree&&, NodeId = 0) = delete;

struct ClassificationWitness {
  NodeId node = kNoNode;
  /// The node has at least three k-neighbours.
  Width k = 0;
};

/// For lmw >= 2, a node x with D(x, lmw-1) >= 3: the lower-bound half of the
/// width certificate. Empty when lmw <= 1.
std::optional<ClassificationWitness> classification_witness(const LabelResult& result);

}  // namespace lmimw
