#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lmimw/types.hpp"

namespace lmimw {

/// Where the critical node for the last width of a label sits.
///   t0: base case (single node, or all children are leaves)
///   t1: no critical node
///   t2: the root itself is critical
///   t3: a child of the root is critical
enum class LastType : std::uint8_t { t0 = 0, t1 = 1, t2 = 2, t3 = 3 };

/// One width of a label. For every entry but the last, `witness` is the parent
/// of the `width`-critical node `critical`, and removing the witness's subtree
/// leaves the tree described by the rest of the label. The last entry's
/// witness is the labelled root; its `critical` is the root (t2), the critical
/// child (t3), or absent (t0/t1).
struct LabelEntry {
  Width width = 0;
  NodeId witness = kNoNode;
  NodeId critical = kNoNode;

  friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
};

/// Non-owning label: widths strictly decreasing, plus the terminal type.
struct LabelView {
  std::span<const LabelEntry> entries;
  LastType last_type = LastType::t0;

  bool empty() const noexcept { return entries.empty(); }
  std::size_t size() const noexcept { return entries.size(); }
};

/// Owning label.
struct Label {
  std::vector<LabelEntry> entries;
  LastType last_type = LastType::t0;

  Label() = default;
  Label(std::vector<LabelEntry> e, LastType t) : entries(std::move(e)), last_type(t) {}
  explicit Label(LabelView view) : entries(view.entries.begin(), view.entries.end()), last_type(view.last_type) {}

  operator LabelView() const noexcept { return {entries, last_type}; }
  bool empty() const noexcept { return entries.empty(); }
  std::size_t size() const noexcept { return entries.size(); }
};

/// Width-only label for literals: label_of({3, 2}, LastType::t2) is (3,2,t.2).
Label label_of(std::initializer_list<Width> widths, LastType last_type);

/// The first width, i.e. the LMIM-width of the labelled tree.
/// Throws std::invalid_argument for the empty label.
Width first_width(LabelView label);
Width last_width(LabelView label);

bool contains(LabelView label, Width s) noexcept;

/// Drops every entry with width >= s. The result aliases the input.
LabelView truncate(LabelView label, Width s) noexcept;

/// Puts (s, witness, critical) in front. Throws std::invalid_argument unless
/// the label is empty or s exceeds its first width.
Label prepend(Width s, NodeId witness, LabelView label, NodeId critical = kNoNode);

/// Exactly one entry. Throws std::invalid_argument for the empty label.
bool is_simple(LabelView label);

/// Same widths and terminal type; witness ids are ignored.
bool same_widths(LabelView a, LabelView b) noexcept;

/// Checks strict decrease and the critical-node presence rule for the last
/// entry. Returns an empty string when valid, otherwise a description.
std::string check_invariants(LabelView label);

/// "(3,2,t.2)", or with witnesses "(3@17,2@4,t.2)".
std::string to_string(LabelView label, bool with_witnesses = false);
std::string to_string(LastType type);

/// Labels of every node, in one arena. Slots follow the BFS numbering of the
/// rooted tree they were computed on so the bottom-up pass reads neighbouring
/// memory; label(v) translates from node ids.
class LabelStore {
 public:
  LabelStore() = default;
  explicit LabelStore(std::vector<NodeId> slot_of_node);

  NodeId node_count() const noexcept { return static_cast<NodeId>(slot_of_node_.size()); }
  NodeId slot(NodeId v) const noexcept { return slot_of_node_[v]; }
  bool has_label(NodeId v) const noexcept { return offset_[slot_of_node_[v]] != kUnset; }

  LabelView label(NodeId v) const noexcept { return label_at(slot_of_node_[v]); }
  LabelView label_at(NodeId slot) const noexcept {
    if (offset_[slot] == kUnset) return {};
    return {{arena_.data() + offset_[slot], count_[slot]}, last_type_[slot]};
  }
  /// Bit w is set iff width w occurs in the label.
  std::uint64_t width_mask_at(NodeId slot) const noexcept { return mask_[slot]; }
  /// A node x with D(x, lmw-1) >= 3 inside the node's subtree, or kNoNode when
  /// the subtree has width at most 1.
  NodeId certificate(NodeId v) const noexcept { return certificate_[slot_of_node_[v]]; }
  NodeId certificate_at(NodeId slot) const noexcept { return certificate_[slot]; }
  bool has_label_at(NodeId slot) const noexcept { return offset_[slot] != kUnset; }

  void store(NodeId slot, LabelView label, NodeId certificate);
  std::size_t total_entries() const noexcept { return arena_.size(); }

 private:
  static constexpr std::uint32_t kUnset = 0xFFFFFFFFU;

  std::vector<NodeId> slot_of_node_;
  std::vector<LabelEntry> arena_;
  std::vector<std::uint32_t> offset_;
  std::vector<std::uint32_t> count_;
  std::vector<LastType> last_type_;
  std::vector<std::uint64_t> mask_;
  std::vector<NodeId> certificate_;
};

}  // namespace lmimw
