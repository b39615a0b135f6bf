#include "lmimw/label.hpp"

#include <algorithm>
#include <stdexcept>

namespace lmimw {

Label label_of(std::initializer_list<Width> widths, LastType last_type) {
  Label label;
  label.last_type = last_type;
  for (const Width w : widths) label.entries.push_back({w, kNoNode, kNoNode});
  return label;
}

Width first_width(LabelView label) {
  if (label.empty()) throw std::invalid_argument("first_width of the empty label");
  return label.entries.front().width;
}

Width last_width(LabelView label) {
  if (label.empty()) throw std::invalid_argument("last_width of the empty label");
  return label.entries.back().width;
}

bool contains(LabelView label, Width s) noexcept {
  return std::any_of(label.entries.begin(), label.entries.end(),
                     [s](const LabelEntry& e) { return e.width == s; });
}

LabelView truncate(LabelView label, Width s) noexcept {
  std::size_t drop = 0;
  while (drop < label.entries.size() && label.entries[drop].width >= s) ++drop;
  return {label.entries.subspan(drop), label.last_type};
}

Label prepend(Width s, NodeId witness, LabelView label, NodeId critical) {
  if (!label.empty() && s <= first_width(label)) {
    throw std::invalid_argument("prepend " + std::to_string(s) + " onto " + to_string(label) +
                                " breaks strict decrease");
  }
  Label out;
  out.last_type = label.last_type;
  out.entries.reserve(label.size() + 1);
  out.entries.push_back({s, witness, critical});
  out.entries.insert(out.entries.end(), label.entries.begin(), label.entries.end());
  return out;
}

bool is_simple(LabelView label) {
  if (label.empty()) throw std::invalid_argument("is_simple of the empty label");
  return label.size() == 1;
}

bool same_widths(LabelView a, LabelView b) noexcept {
  if (a.last_type != b.last_type || a.size() != b.size()) return false;
  return std::equal(a.entries.begin(), a.entries.end(), b.entries.begin(),
                    [](const LabelEntry& x, const LabelEntry& y) { return x.width == y.width; });
}

std::string check_invariants(LabelView label) {
  for (std::size_t i = 0; i + 1 < label.size(); ++i) {
    if (label.entries[i].width <= label.entries[i + 1].width) {
      return "widths not strictly decreasing in " + to_string(label);
    }
    if (label.entries[i].critical == kNoNode || label.entries[i].witness == kNoNode) {
      return "inner entry without critical/witness node in " + to_string(label);
    }
  }
  if (label.empty()) return {};
  if (label.entries.back().width < 0) return "negative width";
  const bool wants_critical = label.last_type == LastType::t2 || label.last_type == LastType::t3;
  const bool has_critical = label.entries.back().critical != kNoNode;
  if (wants_critical != has_critical) {
    return "last entry critical node " + std::string(has_critical ? "present" : "missing") +
           " for " + to_string(label.last_type);
  }
  return {};
}

std::string to_string(LastType type) {
  return "t." + std::to_string(static_cast<int>(type));
}

std::string to_string(LabelView label, bool with_witnesses) {
  std::string out = "(";
  for (const auto& e : label.entries) {
    out += std::to_string(e.width);
    if (with_witnesses) out += "@" + std::to_string(e.witness);
    out += ",";
  }
  out += to_string(label.last_type) + ")";
  return out;
}

LabelStore::LabelStore(std::vector<NodeId> slot_of_node)
    : slot_of_node_(std::move(slot_of_node)) {
  const std::size_t n = slot_of_node_.size();
  arena_.reserve(2 * n);
  offset_.assign(n, kUnset);
  count_.assign(n, 0);
  last_type_.assign(n, LastType::t0);
  mask_.assign(n, 0);
  certificate_.assign(n, kNoNode);
}

void LabelStore::store(NodeId slot, LabelView label, NodeId certificate) {
  offset_[slot] = static_cast<std::uint32_t>(arena_.size());
  count_[slot] = static_cast<std::uint32_t>(label.size());
  last_type_[slot] = label.last_type;
  std::uint64_t mask = 0;
  for (const auto& e : label.entries) {
    arena_.push_back(e);
    mask |= std::uint64_t{1} << e.width;
  }
  mask_[slot] = mask;
  certificate_[slot] = certificate;
}

}  // namespace lmimw
