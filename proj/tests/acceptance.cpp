// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lmimw/generators.hpp"
#include "lmimw/layout.hpp"
#include "lmimw/mim.hpp"
#include "lmimw/oracle.hpp"
#include "lmimw/width.hpp"

using namespace lmimw;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Trees seen by the equivalence and certificate criteria, for the size bound.
struct SizeTally {
  std::uint64_t trees = 0;
  std::uint64_t violations = 0;
  std::string first_violation;

  void add(const Tree& t, Width lmw) {
    ++trees;
    if (lmw >= 1 && static_cast<std::uint64_t>(t.node_count()) < extremal_size(lmw) &&
        violations++ == 0) {
      first_violation = "n=" + std::to_string(t.node_count()) + " lmw=" + std::to_string(lmw);
    }
  }
};

SizeTally g_sizes;

Outcome exhaustive_equivalence() {
  std::uint64_t trees = 0, mismatches = 0;
  std::string first;
  for (NodeId n = 2; n <= 8; ++n) {
    enumerate_trees(n, [&](const Tree& t) {
      ++trees;
      const Width lmw = compute_all_labels(t, 0).lmw;
      g_sizes.add(t, lmw);
      const int expect = oracle::lmw_bruteforce(t);
      if (lmw != expect && mismatches++ == 0) first = serialize(t);
    });
  }
  Outcome o{mismatches == 0, std::to_string(trees) + " trees, " + std::to_string(mismatches) + " mismatches"};
  if (!first.empty()) o.detail += "; first:\n" + first;
  return o;
}

Outcome random_equivalence() {
  std::uint64_t trees = 0, mismatches = 0;
  for (const NodeId n : {10, 12, 14, 16}) {
    for (std::uint64_t i = 0; i < 500; ++i) {
      const Tree t = random_tree(n, 1'000'003ULL * n + i);
      const Width lmw = compute_all_labels(t, 0).lmw;
      g_sizes.add(t, lmw);
      ++trees;
      if (lmw != oracle::lmw_bruteforce(t)) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(trees) + " trees, " + std::to_string(mismatches) + " mismatches"};
}

Outcome certificates() {
  std::uint64_t trees = 0, mismatches = 0;
  Width widest = 0;
  auto check = [&](NodeId n, std::uint64_t seed) {
    const Tree t = random_tree(n, seed);
    const LabelResult labels = compute_all_labels(t, 0);
    const LayoutResult layout = build_layout(labels);
    g_sizes.add(t, labels.lmw);
    ++trees;
    widest = std::max(widest, labels.lmw);
    if (mim_of_layout(t, layout.layout) != labels.lmw) ++mismatches;
  };
  for (std::uint64_t i = 0; i < 1000; ++i) check(1000, 77'000 + i);
  for (std::uint64_t i = 0; i < 20; ++i) check(100'000, 99'000 + i);
  return {mismatches == 0, std::to_string(trees) + " layouts checked, " + std::to_string(mismatches) +
                               " with mim != lmw, widest lmw " + std::to_string(widest)};
}

// Neighbours v of x with a dangling tree beyond v of width >= k, widths by the
// labelling algorithm (for trees too large for the exhaustive oracle).
int component_index_by_labels(const Tree& t, NodeId x, Width k) {
  int count = 0;
  for (const NodeId v : t.neighbors(x)) {
    for (const NodeId u : t.neighbors(v)) {
      if (u == x) continue;
      const SubTree sub = dangling_tree(t, v, u);
      if (compute_all_labels(sub.tree, 0).lmw >= k) {
        ++count;
        break;
      }
    }
  }
  return count;
}

Outcome extremal_family() {
  Outcome o;
  for (Width k = 1; k <= 5; ++k) {
    const Tree t = extremal_tree(k);
    const LabelResult r = compute_all_labels(t, 0);
    const auto w = classification_witness(r);
    std::string line = "k=" + std::to_string(k) + ": n=" + std::to_string(t.node_count()) +
                       " lmw=" + std::to_string(r.lmw);
    bool ok = r.lmw == k && static_cast<std::uint64_t>(t.node_count()) == extremal_size(k);
    if (k == 1) {
      ok = ok && !w.has_value();
    } else if (!w || w->k != k - 1) {
      ok = false;
      line += " no witness";
    } else {
      const int d = k <= 3 ? oracle::k_component_index_oracle(t, w->node, k - 1)
                           : component_index_by_labels(t, w->node, k - 1);
      line += " witness=" + std::to_string(w->node) + " D=" + std::to_string(d) +
              (k <= 3 ? " (oracle)" : " (labels)");
      ok = ok && d >= 3;
    }
    o.pass = o.pass && ok;
    o.detail += (o.detail.empty() ? "" : "; ") + line;
  }
  return o;
}

Outcome classification() {
  std::uint64_t checks = 0, failures = 0;
  for (NodeId n = 2; n <= 7; ++n) {
    enumerate_trees(n, [&](const Tree& t) {
      const int lmw = oracle::lmw_bruteforce(t);
      for (Width k = 1; k <= 2; ++k) {
        bool found = false;
        for (NodeId x = 0; x < n && !found; ++x) found = oracle::k_component_index_oracle(t, x, k) >= 3;
        ++checks;
        if ((lmw >= k + 1) != found) ++failures;
      }
    });
  }
  return {failures == 0, std::to_string(checks) + " (tree, k) pairs, " + std::to_string(failures) + " failures"};
}

Outcome forest_dp() {
  std::uint64_t forests = 0, mismatches = 0;
  auto check = [&](const std::vector<Edge>& f) {
    ++forests;
    if (mim_forest(f) != oracle::mim_bruteforce(f)) ++mismatches;
  };
  for (NodeId n = 2; n <= 6; ++n) {
    enumerate_trees(n, [&](const Tree& t) {
      const auto edges = t.edges();
      for (std::uint32_t subset = 0; subset < (1U << edges.size()); ++subset) {
        std::vector<Edge> f;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          if ((subset >> i) & 1U) f.push_back(edges[i]);
        }
        check(f);
      }
    });
  }
  std::mt19937_64 rng(6);
  for (int i = 0; i < 10'000; ++i) {
    const auto n = static_cast<NodeId>(2 + rng() % 14);
    const Tree t = random_tree(n, rng());
    std::vector<Edge> f;
    for (auto e : t.edges()) {
      if (rng() % 4 != 0) f.push_back(e);
    }
    check(f);
  }
  return {mismatches == 0, std::to_string(forests) + " forests, " + std::to_string(mismatches) + " mismatches"};
}

double median_millis(NodeId n) {
  std::vector<double> times;
  for (std::uint64_t i = 0; i < 5; ++i) {
    const Tree t = random_tree(n, 5'000 + i);
    const auto start = Clock::now();
    const Width lmw = compute_all_labels(t, 0).lmw;
    const auto stop = Clock::now();
    if (lmw < 1) return -1;
    times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[2];
}

Outcome scaling() {
  median_millis(10'000);  // warm-up
  const double t4 = median_millis(10'000);
  const double t5 = median_millis(100'000);
  const double t6 = median_millis(1'000'000);
  char buf[200];
  std::snprintf(buf, sizeof buf, "median ms: 1e4 %.1f, 1e5 %.1f, 1e6 %.1f; t(1e6)/t(1e5) = %.2f (limit 15)",
                t4, t5, t6, t6 / t5);
  return {t6 >= 0 && t5 > 0 && t6 <= 15 * t5 && t6 <= 10'000, buf};
}

Outcome size_bound() {
  return {g_sizes.violations == 0 && g_sizes.trees > 0,
          std::to_string(g_sizes.trees) + " trees from criteria 1-3, " + std::to_string(g_sizes.violations) +
              " below the size bound" + (g_sizes.violations ? " (first " + g_sizes.first_violation + ")" : "")};
}

Outcome root_independence() {
  std::uint64_t trees = 0, failures = 0;
  for (NodeId n = 2; n <= 7; ++n) {
    enumerate_trees(n, [&](const Tree& t) {
      ++trees;
      const Width lmw = compute_all_labels(t, 0).lmw;
      for (NodeId r = 1; r < n; ++r) {
        if (compute_all_labels(t, r).lmw != lmw) {
          ++failures;
          break;
        }
      }
    });
  }
  return {failures == 0, std::to_string(trees) + " trees, every root, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "exhaustive oracle equivalence, all trees n=2..8", exhaustive_equivalence},
      {2, "randomized oracle equivalence, n=10,12,14,16", random_equivalence},
      {3, "layout certificates, n=1000 and n=100000", certificates},
      {4, "extremal family k=1..5 with witnesses", extremal_family},
      {5, "classification D(x,k)>=3, all trees n<=7, k=1,2", classification},
      {6, "forest matching DP against exhaustive search", forest_dp},
      {7, "scaling of the width computation", scaling},
      {8, "size bound n >= extremal_size(lmw)", size_bound},
      {9, "root independence, all trees n<=7", root_independence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%s criterion %d: %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
