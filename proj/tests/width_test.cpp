#include <doctest.h>

#include "lmimw/generators.hpp"
#include "lmimw/oracle.hpp"
#include "lmimw/width.hpp"
#include "support.hpp"

using namespace lmimw;

namespace {

// Adds a copy of `sub` to the edge list with its node 0 joined to `at`.
void attach(std::vector<Edge>& edges, NodeId& next, const Tree& sub, NodeId at) {
  const NodeId base = next;
  for (auto [a, b] : sub.edges()) edges.emplace_back(a + base, b + base);
  edges.emplace_back(at, base);
  next += sub.node_count();
}

// c (0) has children b (1), d1 (2), d2 (3); a (4) is b's only child and has
// children c1 (5), c2 (6). c1 and c2 each hang a width-3 extremal tree, d1 and
// d2 a width-2 one. Labels: a (3,t.2), b (3,t.3), c (3,2,t.2).
Tree labelled_example() {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {4, 5}, {4, 6}};
  NodeId next = 7;
  attach(edges, next, extremal_tree(3), 5);
  attach(edges, next, extremal_tree(3), 6);
  attach(edges, next, extremal_tree(2), 2);
  attach(edges, next, extremal_tree(2), 3);
  return Tree(next, std::move(edges));
}

// Center 0 with two branches 0-1-2-3 and 0-4-5-6.
Tree two_branch() { return Tree(7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}}); }

CaseInput single(Width s, NodeId child, LabelView l, int t_s, LabelView cur) {
  const std::vector<NodeId> kids{child};
  const std::vector<LabelView> labels{l};
  return summarize_case(s, kids, labels, t_s, cur);
}

// Rooted-subtree width by brute force.
int subtree_lmw(const RootedTree& rt, NodeId v) {
  const auto nodes = nodes_of_view({&rt, v, {}});
  return oracle::lmw_bruteforce(induced_subtree(rt.tree(), nodes).tree);
}

}  // namespace

TEST_CASE("case analysis: simple t.2 child gives t.3") {
  const Label child({{3, 11, 11}}, LastType::t2);
  const Label cur = label_of({1}, LastType::t1);
  const CaseOutcome out = case_analysis(single(3, 11, child, 1, cur), 99);
  CHECK(out.case_id == 5);
  const Label l = out.new_label(cur);
  CHECK(same_widths(l, label_of({3}, LastType::t3)));
  CHECK(l.entries.front().critical == 11);
  CHECK(l.entries.front().witness == 99);
}

TEST_CASE("case analysis: t.3 child prepends onto the current label") {
  const Label child({{3, 11, 12}}, LastType::t3);
  const Label cur({{2, 99, 99}}, LastType::t2);
  const CaseOutcome out = case_analysis(single(3, 11, child, 0, cur), 99);
  CHECK(out.case_id == 6);
  const Label l = out.new_label(cur);
  CHECK(to_string(l) == "(3,2,t.2)");
  CHECK(l.entries.front().witness == 11);
  CHECK(l.entries.front().critical == 12);
  CHECK(check_invariants(l).empty());
}

TEST_CASE("case analysis: complex child passes its first witness on") {
  const Label child({{3, 40, 41}, {1, 11, kNoNode}}, LastType::t1);
  const Label cur = label_of({2}, LastType::t1);
  const CaseOutcome out = case_analysis(single(3, 11, child, 2, cur), 99);
  CHECK(out.case_id == 6);
  CHECK(out.entry.witness == 40);
  CHECK(out.entry.critical == 41);
}

TEST_CASE("case analysis: current label already at s") {
  const Label child({{2, 11, 12}}, LastType::t3);
  const Label cur({{2, 99, 99}}, LastType::t2);
  const CaseOutcome out = case_analysis(single(2, 11, child, 0, cur), 99);
  CHECK(out.case_id == 7);
  CHECK(same_widths(out.new_label(cur), label_of({3}, LastType::t1)));
}

TEST_CASE("case analysis: counting k-neighbours among simple children") {
  const Label one = label_of({1}, LastType::t1);
  const std::vector<LabelView> three{one, one, one};
  const std::vector<NodeId> kids{1, 2, 3};
  const Label cur = label_of({1}, LastType::t0);

  const CaseOutcome c3 = case_analysis(summarize_case(1, kids, three, 3, cur), 0);
  CHECK(c3.case_id == 3);
  CHECK(same_widths(c3.new_label(cur), label_of({2}, LastType::t1)));

  const std::vector<LabelView> two{one, one};
  const std::span<const NodeId> two_kids(kids.data(), 2);
  const CaseOutcome c2 = case_analysis(summarize_case(1, two_kids, two, 2, cur), 0);
  CHECK(c2.case_id == 2);
  CHECK(same_widths(c2.new_label(cur), label_of({1}, LastType::t2)));
  CHECK(c2.entry.critical == 0);

  const CaseOutcome c1 = case_analysis(summarize_case(1, two_kids, two, 1, cur), 0);
  CHECK(c1.case_id == 1);
  CHECK(same_widths(c1.new_label(cur), label_of({1}, LastType::t1)));
}

TEST_CASE("case analysis: two children of width s, one with a critical node") {
  const Label plain = label_of({2}, LastType::t1);
  const Label crit({{2, 5, 5}}, LastType::t2);
  const std::vector<LabelView> labels{plain, crit};
  const std::vector<NodeId> kids{4, 5};
  const CaseOutcome out = case_analysis(summarize_case(2, kids, labels, 1, Label{}), 0);
  CHECK(out.case_id == 4);
  CHECK(same_widths(out.new_label(Label{}), label_of({3}, LastType::t1)));
}

TEST_CASE("case analysis rejects an empty N_s") {
  CaseInput in;
  in.s = 1;
  CHECK_THROWS_AS(case_analysis(in, 0), std::logic_error);
  const std::vector<NodeId> kids{1};
  const std::vector<LabelView> wrong{label_of({2}, LastType::t1)};
  CHECK_THROWS_AS(summarize_case(1, kids, wrong, 0, Label{}), std::invalid_argument);
}

TEST_CASE("make_label base cases") {
  const Tree s = star(5);
  const LabelResult r = compute_all_labels(s, 0);
  CHECK(to_string(make_label(r.rooted, 3, r.labels)) == "(0,t.0)");
  CHECK(to_string(make_label(r.rooted, 0, r.labels)) == "(1,t.0)");

  const Tree e = extremal_tree(2);
  const LabelResult er = compute_all_labels(e, 0);
  CHECK(to_string(make_label(er.rooted, 0, er.labels)) == "(2,t.1)");
  CHECK_THROWS_AS(make_label(er.rooted, 0, LabelStore(std::vector<NodeId>(10, 0))), std::logic_error);
}

TEST_CASE("compute_all_labels examples") {
  const Tree p2 = path_tree(2);
  const LabelResult edge = compute_all_labels(p2, 0);
  CHECK(edge.lmw == 1);
  CHECK(to_string(edge.labels.label(0)) == "(1,t.0)");
  const Tree p1 = path_tree(1);
  CHECK(compute_all_labels(p1, 0).lmw == 0);
  for (Width k = 1; k <= 4; ++k) {
    const Tree e = extremal_tree(k);
    CHECK(compute_all_labels(e, 0).lmw == k);
  }
  const Tree two = two_branch();
  CHECK(to_string(compute_all_labels(two, 0).labels.label(0)) == "(1,t.2)");
}

TEST_CASE("the labelled example tree") {
  const Tree t = labelled_example();
  const LabelResult r = compute_all_labels(t, 0);
  CHECK(to_string(r.labels.label(4)) == "(3,t.2)");
  CHECK(to_string(r.labels.label(1)) == "(3,t.3)");
  CHECK(to_string(r.labels.label(0)) == "(3,2,t.2)");
  // The 3-critical node is a, reached through its parent b.
  CHECK(r.labels.label(0).entries[0].witness == 1);
  CHECK(r.labels.label(0).entries[0].critical == 4);
  CHECK(r.labels.label(0).entries[1].critical == 0);
}

TEST_CASE("classification_witness examples") {
  const Tree e2 = extremal_tree(2);
  const LabelResult e = compute_all_labels(e2, 0);
  const auto w = classification_witness(e);
  REQUIRE(w.has_value());
  CHECK(w->node == 0);
  CHECK(w->k == 1);
  const Tree p5 = path_tree(5);
  const Tree s6 = star(6);
  CHECK_FALSE(classification_witness(compute_all_labels(p5, 0)).has_value());
  CHECK_FALSE(classification_witness(compute_all_labels(s6, 0)).has_value());
}

TEST_CASE("labels match the exhaustive oracle on random trees") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto n = static_cast<NodeId>(2 + seed % 13);
    const Tree t = random_tree(n, seed);
    const LabelResult r = compute_all_labels(t, static_cast<NodeId>(seed % n));
    CHECK(r.lmw == oracle::lmw_bruteforce(t));
  }
}

TEST_CASE("every stored label is well formed and its width is exact") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Tree t = random_tree(13, seed);
    const LabelResult r = compute_all_labels(t, 0);
    for (NodeId v = 0; v < 13; ++v) {
      const LabelView l = r.labels.label(v);
      CHECK_MESSAGE(check_invariants(l).empty(), check_invariants(l));
      CHECK(first_width(l) == subtree_lmw(r.rooted, v));
    }
  }
}

TEST_CASE("certificates have three neighbours of the next lower width") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Tree t = random_tree(14, seed);
    const LabelResult r = compute_all_labels(t, 0);
    const auto w = classification_witness(r);
    REQUIRE(w.has_value() == (r.lmw >= 2));
    if (!w) continue;
    ++checked;
    CHECK(oracle::k_component_index_oracle(t, w->node, w->k) >= 3);
  }
  CHECK(checked > 0);
}

TEST_CASE("at most one k-critical node, and it is the one the label names") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Tree t = random_tree(12, seed);
    const RootedTree rt(t, 0);
    const LabelResult r = compute_all_labels(t, 0);
    const Width k = r.lmw;
    if (k == 0) continue;
    std::vector<int> lmw(12);
    for (NodeId v = 0; v < 12; ++v) lmw[v] = subtree_lmw(rt, v);
    std::vector<NodeId> critical;
    for (NodeId v = 0; v < 12; ++v) {
      int wide = 0;
      for (const NodeId c : rt.children(v)) {
        bool has = false;
        for (const NodeId u : rt.children(c)) has = has || lmw[u] == k;
        wide += has ? 1 : 0;
      }
      if (wide == 2) critical.push_back(v);
    }
    REQUIRE(critical.size() <= 1);
    const LabelView l = r.labels.label(0);
    const bool named = !is_simple(l) || l.last_type == LastType::t2 || l.last_type == LastType::t3;
    CHECK(named == (critical.size() == 1));
    if (named) CHECK(l.entries.front().critical == critical.front());
  }
}

TEST_CASE("labels do not depend on the order of children") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Tree t = random_tree(60 + static_cast<NodeId>(seed), seed);
    const LabelResult a = compute_all_labels(t, 0);
    for (std::uint64_t shuffle = 0; shuffle < 3; ++shuffle) {
      const Tree u = test::shuffled(t, seed * 7 + shuffle);
      const LabelResult b = compute_all_labels(u, 0);
      for (NodeId v = 0; v < t.node_count(); ++v) {
        CHECK(same_widths(a.labels.label(v), b.labels.label(v)));
      }
    }
  }
}

TEST_CASE("width does not depend on the root") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Tree t = random_tree(40, seed);
    const Width lmw = compute_all_labels(t, 0).lmw;
    for (NodeId r = 1; r < 40; ++r) CHECK(compute_all_labels(t, r).lmw == lmw);
  }
}

TEST_CASE("wide trees are large") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Tree t = random_tree(500, seed);
    const Width lmw = compute_all_labels(t, 0).lmw;
    CHECK(lmw >= 1);
    CHECK(500 >= extremal_size(lmw));
  }
}
