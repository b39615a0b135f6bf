#include "lmimw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "lmimw/generators.hpp"
#include "lmimw/layout.hpp"
#include "lmimw/mim.hpp"
#include "lmimw/oracle.hpp"
#include "lmimw/tree.hpp"
#include "lmimw/width.hpp"

namespace lmimw {

namespace {

// "-" reads standard input.
std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Tree read_tree(const std::string& path) { return parse_edge_list(read_text(path)); }

LinearLayout read_layout(const std::string& path) {
  std::istringstream in(read_text(path));
  std::vector<NodeId> order;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || v < 0 || v > std::numeric_limits<NodeId>::max()) {
      throw std::invalid_argument("layout: bad node id '" + token + "'");
    }
    order.push_back(static_cast<NodeId>(v));
  }
  return LinearLayout(std::move(order));
}

NodeId oracle_guard() {
  const char* env = std::getenv("LMIMW_ORACLE_GUARD");
  if (env == nullptr || *env == '\0') return oracle::kDefaultNodeGuard;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) {
    throw std::invalid_argument(std::string("LMIMW_ORACLE_GUARD: bad value '") + env + "'");
  }
  return static_cast<NodeId>(std::min<long>(v, 1 << 20));
}

void check_root(const Tree& tree, NodeId root) {
  if (!tree.contains(root)) throw std::out_of_range("root " + std::to_string(root) + " not in tree");
}

std::vector<NodeId> parse_sizes(const std::string& list) {
  std::vector<NodeId> sizes;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    const long long v = std::stoll(item);
    if (v < 1 || v > std::numeric_limits<NodeId>::max()) {
      throw std::invalid_argument("bench: bad size " + item);
    }
    sizes.push_back(static_cast<NodeId>(v));
  }
  if (sizes.empty()) throw std::invalid_argument("bench: empty size list");
  return sizes;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"LMIM-width of trees, with optimal layouts as certificates"};
  app.name("lmimw");
  app.require_subcommand(1);

  std::string file;
  std::string layout_file;
  NodeId root = 0;
  bool verbose = false;
  bool per_cut = false;
  int expect = -1;
  std::string family;
  std::vector<long long> params;
  std::uint64_t seed = 1;
  std::string sizes = "1000,10000,100000";
  int trials = 3;

  auto* lmw_cmd = app.add_subcommand("lmw", "Print the LMIM-width of a tree");
  lmw_cmd->add_option("FILE", file, "Edge-list file ('-' for stdin)")->required();
  lmw_cmd->add_option("--root", root, "Root used by the labelling");

  auto* layout_cmd = app.add_subcommand("layout", "Print the width and an optimal layout");
  layout_cmd->add_option("FILE", file, "Edge-list file ('-' for stdin)")->required();
  layout_cmd->add_option("--root", root, "Root used by the labelling");

  auto* labels_cmd = app.add_subcommand("labels", "Dump the label of every rooted subtree");
  labels_cmd->add_option("FILE", file, "Edge-list file ('-' for stdin)")->required();
  labels_cmd->add_option("--root", root, "Root used by the labelling");
  labels_cmd->add_flag("--verbose", verbose, "Include witness nodes");

  auto* verify_cmd = app.add_subcommand("verify", "Compute mim of a layout");
  verify_cmd->add_option("TREE", file, "Edge-list file")->required();
  verify_cmd->add_option("LAYOUT", layout_file, "Layout file: a permutation of node ids")->required();
  auto* expect_opt = verify_cmd->add_option("--expect", expect, "Exit 2 unless mim equals this");
  verify_cmd->add_flag("--per-cut", per_cut, "Print the MIM of every cut");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact width by exhaustive search (small trees)");
  oracle_cmd->add_option("FILE", file, "Edge-list file ('-' for stdin)")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Write a generated tree as an edge list");
  gen_cmd->add_option("FAMILY", family, "path|star|caterpillar|kary|random|extremal")
      ->required()
      ->check(CLI::IsMember({"path", "star", "caterpillar", "kary", "random", "extremal"}));
  gen_cmd->add_option("PARAMS", params, "Family parameters")->required();
  gen_cmd->add_option("--seed", seed, "Seed for random trees");

  auto* bench_cmd = app.add_subcommand("bench", "Time the width computation on random trees");
  bench_cmd->add_option("--sizes", sizes, "Comma-separated node counts");
  bench_cmd->add_option("--seed", seed, "Base seed");
  bench_cmd->add_option("--trials", trials, "Trees per size")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lmimw: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*lmw_cmd) {
      const Tree tree = read_tree(file);
      check_root(tree, root);
      out << compute_all_labels(tree, root).lmw << "\n";
    } else if (*layout_cmd) {
      const Tree tree = read_tree(file);
      check_root(tree, root);
      const LayoutResult result = build_layout(tree, root);
      out << result.lmw << "\n";
      const auto order = result.layout.order();
      for (std::size_t i = 0; i < order.size(); ++i) out << (i ? " " : "") << order[i];
      out << "\n";
    } else if (*labels_cmd) {
      const Tree tree = read_tree(file);
      check_root(tree, root);
      const LabelResult result = compute_all_labels(tree, root);
      for (NodeId v = 0; v < tree.node_count(); ++v) {
        out << v << ": " << to_string(result.labels.label(v), verbose) << "\n";
      }
    } else if (*verify_cmd) {
      const Tree tree = read_tree(file);
      const LinearLayout layout = read_layout(layout_file);
      if (layout.size() != tree.node_count()) {
        throw std::invalid_argument("layout has " + std::to_string(layout.size()) +
                                    " nodes, tree has " + std::to_string(tree.node_count()));
      }
      const std::vector<int> cuts = mim_per_cut(tree, layout);
      const int mim = cuts.empty() ? 0 : *std::max_element(cuts.begin(), cuts.end());
      if (per_cut) {
        for (std::size_t i = 0; i < cuts.size(); ++i) out << i + 1 << " " << cuts[i] << "\n";
      } else {
        out << mim << "\n";
      }
      if (*expect_opt && mim != expect) {
        err << "lmimw: layout has mim " << mim << ", expected " << expect << "\n";
        return kExitMismatch;
      }
    } else if (*oracle_cmd) {
      const Tree tree = read_tree(file);
      out << oracle::lmw_bruteforce(tree, oracle_guard()) << "\n";
    } else if (*gen_cmd) {
      auto need = [&](std::size_t count) {
        if (params.size() != count) {
          throw std::invalid_argument("gen " + family + " takes " + std::to_string(count) +
                                      " parameter(s)");
        }
        for (const long long p : params) {
          if (p < 0 || p > std::numeric_limits<NodeId>::max()) {
            throw std::invalid_argument("gen: parameter out of range");
          }
        }
      };
      auto p = [&](std::size_t i) { return static_cast<NodeId>(params[i]); };
      Tree tree;
      if (family == "path") {
        need(1);
        tree = path_tree(p(0));
      } else if (family == "star") {
        need(1);
        tree = star(p(0));
      } else if (family == "caterpillar") {
        need(2);
        tree = caterpillar(p(0), p(1));
      } else if (family == "kary") {
        need(2);
        tree = complete_ary(p(0), p(1));
      } else if (family == "random") {
        need(1);
        tree = random_tree(p(0), seed);
      } else {
        need(1);
        tree = extremal_tree(p(0));
      }
      write_edge_list(out, tree);
    } else if (*bench_cmd) {
      out << "n,millis,lmw_max\n";
      for (const NodeId n : parse_sizes(sizes)) {
        std::vector<double> times;
        Width lmw_max = 0;
        for (int t = 0; t < trials; ++t) {
          const Tree tree = random_tree(n, seed + static_cast<std::uint64_t>(t));
          const auto start = std::chrono::steady_clock::now();
          const Width lmw = compute_all_labels(tree, 0).lmw;
          const auto stop = std::chrono::steady_clock::now();
          times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
          lmw_max = std::max(lmw_max, lmw);
        }
        std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
        out << n << "," << times[times.size() / 2] << "," << lmw_max << "\n";
      }
    }
  } catch (const GuardExceeded& e) {
    err << "lmimw: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    err << "lmimw: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace lmimw
