#include "tck/census.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <climits>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "tck/bound.hpp"
#include "tck/display.hpp"
#include "tck/edit.hpp"
#include "tck/enewick.hpp"
#include "tck/ladder.hpp"
#include "tck/parallel.hpp"

namespace tck {
namespace {

std::string census_label(int index) { return "x" + std::to_string(index + 1); }

}  // namespace

// ==== generator ====

TreeChildGenerator::TreeChildGenerator(int max_leaves, int jobs)
    : max_leaves_(max_leaves), jobs_(jobs < 1 ? 1 : jobs) {
  if (max_leaves < 1) fail(ErrorCode::OutOfRange, "max_leaves must be positive");
  if (max_leaves > kMaxCensusLeaves)
    fail(ErrorCode::ScaleExceeded, "exhaustive generation is limited to " +
                                       std::to_string(kMaxCensusLeaves) + " leaves");
}

Network TreeChildGenerator::materialize(const CompactNet& c) const {
  RawGraph g;
  g.vertex_count = c.vertex_count;
  for (auto [t, h] : c.arcs) g.arcs.push_back({t, h});
  for (auto [v, idx] : c.leaf_labels) g.leaf_labels[v] = census_label(idx);
  return Network::validate(g);
}

namespace {

using CompactNetT = std::vector<std::pair<std::uint8_t, std::uint8_t>>;

// replaces the unique in-arc of `leaf` (if any) so it points at `mid` instead
template <typename CN>
void redirect_in_arc(CN& net, std::uint8_t leaf, std::uint8_t mid) {
  for (auto& [t, h] : net.arcs)
    if (h == leaf) {
      h = mid;
      return;
    }
}

}  // namespace

std::map<std::string, TreeChildGenerator::CompactNet>& TreeChildGenerator::level(int m, int k) {
  auto key = std::make_pair(m, k);
  if (auto it = levels_.find(key); it != levels_.end()) return it->second;

  std::map<std::string, CompactNet> out;
  if (m >= 1 && k >= 0 && k <= m - 1) {
    if (m == 1) {
      CompactNet single;
      single.vertex_count = 1;
      single.leaf_labels = {{0, 0}};
      out.emplace(materialize(single).canonical_code(), std::move(single));
    } else {
      // cherry expansions of the (m-1, k) level: insert a new leaf (any label
      // rank j, remaining labels shifted monotonically) as sibling of each leaf
      {
        const auto& src_map = level(m - 1, k);
        std::vector<const CompactNet*> srcs;
        srcs.reserve(src_map.size());
        for (const auto& [code, net] : src_map) srcs.push_back(&net);
        std::vector<std::vector<std::pair<std::string, CompactNet>>> produced(srcs.size());
        parallel_for_index(srcs.size(), jobs_, [&](std::size_t i) {
          const CompactNet& c = *srcs[i];
          for (int j = 0; j < m; ++j) {
            for (auto [leaf, lab] : c.leaf_labels) {
              (void)lab;
              CompactNet d;
              d.vertex_count = c.vertex_count + 2;
              std::uint8_t mid = c.vertex_count, fresh = c.vertex_count + 1;
              d.arcs = c.arcs;
              redirect_in_arc(d, leaf, mid);
              d.arcs.push_back({mid, leaf});
              d.arcs.push_back({mid, fresh});
              for (auto [v, idx] : c.leaf_labels)
                d.leaf_labels.push_back({v, static_cast<std::uint8_t>(idx >= j ? idx + 1 : idx)});
              d.leaf_labels.push_back({fresh, static_cast<std::uint8_t>(j)});
              Network net = materialize(d);
              assert(is_tree_child(net));
              produced[i].emplace_back(net.canonical_code(), std::move(d));
            }
          }
        });
        for (auto& batch : produced)
          for (auto& [code, net] : batch) out.emplace(std::move(code), std::move(net));
      }
      // reticulated-cherry expansions of the (m, k-1) level: for an ordered
      // leaf pair (a,b), subdivide a's in-arc with a reticulation r, b's with
      // a tree vertex p, and add (p,r); keep the tree-child survivors
      if (k >= 1) {
        const auto& src_map = level(m, k - 1);
        std::vector<const CompactNet*> srcs;
        srcs.reserve(src_map.size());
        for (const auto& [code, net] : src_map) srcs.push_back(&net);
        std::vector<std::vector<std::pair<std::string, CompactNet>>> produced(srcs.size());
        parallel_for_index(srcs.size(), jobs_, [&](std::size_t i) {
          const CompactNet& c = *srcs[i];
          for (auto [a, la] : c.leaf_labels) {
            (void)la;
            for (auto [b, lb] : c.leaf_labels) {
              (void)lb;
              if (a == b) continue;
              CompactNet d;
              d.vertex_count = c.vertex_count + 2;
              std::uint8_t retic = c.vertex_count, mid = c.vertex_count + 1;
              d.arcs = c.arcs;
              redirect_in_arc(d, a, retic);
              redirect_in_arc(d, b, mid);
              d.arcs.push_back({retic, a});
              d.arcs.push_back({mid, b});
              d.arcs.push_back({mid, retic});
              d.leaf_labels = c.leaf_labels;
              Network net = materialize(d);
              if (!is_tree_child(net)) continue;
              produced[i].emplace_back(net.canonical_code(), std::move(d));
            }
          }
        });
        for (auto& batch : produced)
          for (auto& [code, net] : batch) out.emplace(std::move(code), std::move(net));
      }
    }
  }
  auto [it, inserted] = levels_.emplace(key, std::move(out));
  assert(inserted);
  return it->second;
}

const std::vector<Network>& TreeChildGenerator::cell(int n, int k) {
  if (n < 1 || k < 0) fail(ErrorCode::OutOfRange, "census cell indices must be non-negative");
  if (n > max_leaves_)
    fail(ErrorCode::ScaleExceeded, "generator built for at most " +
                                       std::to_string(max_leaves_) + " leaves");
  auto key = std::make_pair(n, k);
  if (auto it = cells_.find(key); it != cells_.end()) return it->second;
  std::vector<Network> nets;
  for (const auto& [code, c] : level(n, k)) {
    nets.push_back(materialize(c));
    assert(nets.back().canonical_code() == code);
  }
  return cells_.emplace(key, std::move(nets)).first->second;
}

std::vector<Network> TreeChildGenerator::cell_3cycle_free(int n, int k) {
  if (n < 1 || k < 0) fail(ErrorCode::OutOfRange, "census cell indices must be non-negative");
  if (n > max_leaves_)
    fail(ErrorCode::ScaleExceeded, "generator built for at most " +
                                       std::to_string(max_leaves_) + " leaves");
  std::vector<Network> nets;
  for (const auto& [code, c] : level(n, k)) {
    (void)code;
    Network net = materialize(c);
    if (!has_3cycle(net)) nets.push_back(std::move(net));
  }
  return nets;
}

std::vector<Network> generate_tree_child(int n, int k, bool forbid_3cycles, int max_leaves) {
  if (n < 1) fail(ErrorCode::OutOfRange, "need at least one leaf");
  if (k < 0 || k > n - 1)
    fail(ErrorCode::OutOfRange, "reticulation count must lie in [0, n-1]");
  TreeChildGenerator gen(max_leaves);
  if (forbid_3cycles) return gen.cell_3cycle_free(n, k);
  return gen.cell(n, k);
}

// ==== independent oracle ====

std::vector<Network> brute_force_generate(int n, int k, bool forbid_3cycles) {
  if (n < 1) fail(ErrorCode::OutOfRange, "need at least one leaf");
  if (k < 0 || k > n - 1)
    fail(ErrorCode::OutOfRange, "reticulation count must lie in [0, n-1]");
  if (n > 3)
    fail(ErrorCode::ScaleExceeded, "brute-force enumeration is limited to 3 leaves");

  // forced vertex multiset: 0 = root, then n+k-2 tree vertices, k
  // reticulations, n labeled leaves
  const int trees = n + k - 2 >= 0 ? n + k - 2 : 0;
  const int tree_lo = 1, tree_hi = tree_lo + trees;          // [lo, hi)
  const int ret_lo = tree_hi, ret_hi = ret_lo + k;
  const int leaf_lo = ret_hi, leaf_hi = leaf_lo + n;
  const int total = leaf_hi;

  std::map<std::string, Network> found;
  if (n == 1) {  // single vertex; no internal structure to search
    RawGraph g;
    g.vertex_count = 1;
    g.leaf_labels[0] = census_label(0);
    Network net = Network::validate(g);
    found.emplace(net.canonical_code(), std::move(net));
    std::vector<Network> out;
    for (auto& [code, net] : found) out.push_back(std::move(net));
    return out;
  }

  // internal vertices choose their out-neighbourhoods in id order; tree
  // vertices and reticulations are interchangeable, so each group is required
  // to receive its first in-arc in id order (symmetry breaking)
  std::vector<int> indeg(total, 0);
  std::vector<Arc> arcs;
  std::vector<int> order;  // internal vertices: root, tree vertices, retics
  order.push_back(0);
  for (int v = tree_lo; v < tree_hi; ++v) order.push_back(v);
  for (int v = ret_lo; v < ret_hi; ++v) order.push_back(v);

  auto first_unused = [&](int lo, int hi) {
    for (int v = lo; v < hi; ++v)
      if (indeg[v] == 0) return v;
    return hi;
  };

  std::function<void(std::size_t)> descend = [&](std::size_t pos) {
    if (pos == order.size()) {
      RawGraph g;
      g.vertex_count = total;
      g.arcs = arcs;
      for (int v = leaf_lo; v < leaf_hi; ++v) g.leaf_labels[v] = census_label(v - leaf_lo);
      try {
        Network net = Network::validate(g);
        if (!is_tree_child(net)) return;
        if (forbid_3cycles && has_3cycle(net)) return;
        found.emplace(net.canonical_code(), std::move(net));
      } catch (const Error&) {
        // cyclic or otherwise malformed assignment; skip
      }
      return;
    }
    int u = order[pos];
    // candidate targets under symmetry breaking: any leaf with a free slot,
    // the lowest unused tree vertex / reticulation, or a half-filled retic
    auto candidates = [&] {
      std::vector<int> cs;
      int nt = first_unused(tree_lo, tree_hi);
      if (nt < tree_hi && nt != u) cs.push_back(nt);
      int nr = first_unused(ret_lo, ret_hi);
      for (int v = ret_lo; v < ret_hi; ++v)
        if (v != u && ((indeg[v] == 0 && v == nr) || indeg[v] == 1)) cs.push_back(v);
      for (int v = leaf_lo; v < leaf_hi; ++v)
        if (indeg[v] == 0) cs.push_back(v);
      return cs;
    };
    auto use = [&](int v) {
      ++indeg[v];
      arcs.push_back({u, v});
    };
    auto unuse = [&](int v) {
      --indeg[v];
      arcs.pop_back();
    };
    if (u >= ret_lo && u < ret_hi) {  // reticulations pick a single child
      for (int v : candidates()) {
        use(v);
        descend(pos + 1);
        unuse(v);
      }
    } else {  // root and tree vertices pick an unordered pair of children
      // eligibility is recomputed after the first pick (the "next unused"
      // vertex of a group moves); requiring v2 > v1 visits each pair once,
      // and loses nothing because eligibility of the smaller-id member never
      // depends on the larger one being used first
      for (int v1 : candidates()) {
        use(v1);
        for (int v2 : candidates())
          if (v2 > v1) {
            use(v2);
            descend(pos + 1);
            unuse(v2);
          }
        unuse(v1);
      }
    }
  };
  descend(0);

  std::vector<Network> out;
  out.reserve(found.size());
  for (auto& [code, net] : found) out.push_back(std::move(net));
  return out;
}

// ==== theorem census ====

std::uint64_t CensusReport::violation_total() const {
  std::uint64_t total = 0;
  for (const auto& cell : cells) total += cell.violations.size();
  return total;
}

namespace {

struct NetFindings {
  std::int64_t trees = 0;
  bool octopus = false;
  bool has_triangle = false;
};

std::string violation_line(const std::string& reason, const NetFindings& f,
                           std::int64_t bound, const Network& net) {
  std::ostringstream os;
  os << reason << "; trees=" << f.trees << "; bound=" << bound
     << "; octopus=" << (f.octopus ? "true" : "false") << "; network=" << serialize_enewick(net);
  return os.str();
}

void write_artifacts(const std::vector<std::pair<std::string, const Network*>>& offenders,
                     int n, int k, const CensusOptions& opts, CensusReport& report) {
  namespace fs = std::filesystem;
  fs::path dir = opts.artifact_dir.empty() ? fs::path(".") : fs::path(opts.artifact_dir);
  if (!opts.artifact_dir.empty()) fs::create_directories(dir);
  int index = 0;
  for (const auto& [reason, net] : offenders) {
    fs::path file = dir / ("violation_n" + std::to_string(n) + "_k" + std::to_string(k) + "_" +
                           std::to_string(index++) + ".enwk");
    std::ofstream out(file);
    out << "# " << reason << "\n" << serialize_enewick(*net) << "\n";
    report.artifacts.push_back(file.string());
  }
}

}  // namespace

CensusReport verify_main_theorem(int n_max, const CensusOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  if (n_max < 1) fail(ErrorCode::OutOfRange, "census needs at least one leaf");
  if (n_max > opts.max_leaves)
    fail(ErrorCode::ScaleExceeded,
         "census limited to " + std::to_string(opts.max_leaves) + " leaves");

  CensusReport report;
  report.n_max = n_max;
  report.forbid_3cycles = opts.forbid_3cycles;
  report.jobs = opts.jobs;
  report.oracle_certified = opts.certify_with_oracle;
  report.injected_violation = opts.inject_fake_violation;

  TreeChildGenerator gen(std::min(opts.max_leaves, kMaxCensusLeaves), opts.jobs);
  bool injected = false;
  bool abort_after_cell = false;

  for (int n = 1; n <= n_max && !abort_after_cell; ++n) {
    for (int k = 0; k <= n - 1 && !abort_after_cell; ++k) {
      std::vector<Network> nets =
          opts.forbid_3cycles ? gen.cell_3cycle_free(n, k) : gen.cell(n, k);

      if (opts.certify_with_oracle && n <= 3) {
        std::vector<Network> oracle = brute_force_generate(n, k, opts.forbid_3cycles);
        auto codes = [](const std::vector<Network>& v) {
          std::vector<std::string> c;
          c.reserve(v.size());
          for (const Network& net : v) c.push_back(net.canonical_code());
          std::sort(c.begin(), c.end());
          return c;
        };
        if (codes(nets) != codes(oracle)) {
          report.oracle_certified = false;
          report.generator_fallback = true;
          nets = std::move(oracle);
        }
      }

      CensusCell cell;
      cell.n = n;
      cell.k = k;
      cell.generated = nets.size();
      cell.bound = t_bound(n, k);

      std::vector<NetFindings> findings(nets.size());
      parallel_for_index(nets.size(), opts.jobs, [&](std::size_t i) {
        const Network& net = nets[i];
        NetFindings f;
        f.trees = count_displayed(net);
        f.has_triangle = opts.forbid_3cycles ? false : has_3cycle(net);
        f.octopus = k != 1 && is_octopus(net).value;
        findings[i] = f;
      });

      std::vector<std::pair<std::string, const Network*>> offenders;
      for (std::size_t i = 0; i < nets.size(); ++i) {
        const NetFindings& f = findings[i];
        if (i == 0 || f.trees < static_cast<std::int64_t>(cell.min_T))
          cell.min_T = f.trees;
        if (f.trees > static_cast<std::int64_t>(cell.max_T)) cell.max_T = f.trees;
        if (f.trees == cell.bound) ++cell.equality_count;
        if (f.octopus) ++cell.octopus_count;
        if (f.has_triangle) continue;  // theorem is scoped to 3-cycle-free networks
        std::string reason;
        if (k == 0 && f.trees != 1)
          reason = "tree must display exactly one tree";
        else if (k == 1 && f.trees != 2)
          reason = "k=1 networks must display exactly two trees";
        else if (k >= 2 && f.trees < cell.bound)
          reason = "displayed-tree count below lower bound";
        else if (k >= 2 && (f.trees == cell.bound) != f.octopus)
          reason = f.octopus ? "octopus above the lower bound" : "non-octopus meeting the bound";
        if (!reason.empty()) {
          if (k >= 2 && (f.trees == cell.bound) != f.octopus) cell.all_equality_octopus = false;
          cell.violations.push_back(violation_line(reason, f, cell.bound, nets[i]));
          offenders.emplace_back(reason, &nets[i]);
        }
      }
      // all_equality_octopus is a statement about the 3-cycle-free networks of
      // the cell; recompute it directly so it is meaningful even when the
      // violation list is truncated in spirit (it never is, but be exact)
      if (k >= 2) {
        cell.all_equality_octopus = true;
        for (const NetFindings& f : findings)
          if (!f.has_triangle && (f.trees == cell.bound) != f.octopus)
            cell.all_equality_octopus = false;
      }

      if (opts.inject_fake_violation && !injected && !nets.empty()) {
        injected = true;
        cell.violations.push_back(violation_line("injected synthetic violation (test hook)",
                                                 findings[0], cell.bound, nets[0]));
        offenders.emplace_back("injected synthetic violation (test hook)", &nets[0]);
      }

      if (!cell.violations.empty()) {
        write_artifacts(offenders, n, k, opts, report);
        abort_after_cell = true;  // finish this cell, then stop
      }
      report.cells.push_back(std::move(cell));
    }
  }

  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

// ==== deletion lemmas ====

DeletionLemmaReport verify_deletion_lemmas(const Network& n) {
  DeletionLemmaReport report;
  report.networks = 1;
  if (!is_tree_child(n)) fail(ErrorCode::NotTreeChild, "deletion laws assume a tree-child network");

  std::vector<Arc> retic_arcs;
  for (const Arc& a : n.arcs())
    if (n.is_reticulation(a.head)) retic_arcs.push_back(a);

  auto note = [&](const std::string& what, const Arc& a) {
    report.failures.push_back(what + " at arc " + arc_str(a) +
                              "; network=" + serialize_enewick(n));
  };

  // every reticulation-arc deletion must yield a tree-child network
  for (const Arc& e : retic_arcs) {
    ++report.deletion_checks;
    try {
      auto [result, trace] = delete_reticulation_arc(n, e);
      (void)trace;
      if (!is_tree_child(result)) note("deletion result is not tree-child", e);
    } catch (const Error& err) {
      note(std::string("deletion failed: ") + err.what(), e);
    }
  }

  if (has_3cycle(n) || retic_arcs.empty()) return report;

  // minimal-depth tails preserve 3-cycle-freeness
  std::vector<int> depth(n.vertex_count(), INT_MAX);
  depth[n.root()] = 0;
  {
    std::vector<Vertex> queue{n.root()};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex c : n.children(queue[i]))
        if (depth[queue[i]] + 1 < depth[c]) {
          depth[c] = depth[queue[i]] + 1;
          queue.push_back(c);
        }
  }
  int min_depth = INT_MAX;
  for (const Arc& e : retic_arcs) min_depth = std::min(min_depth, depth[e.tail]);
  for (const Arc& e : retic_arcs) {
    if (depth[e.tail] != min_depth) continue;
    ++report.tail_checks;
    auto [result, trace] = delete_reticulation_arc(n, e);
    (void)trace;
    if (has_3cycle(result)) note("minimal-depth tail deletion created a 3-cycle", e);
  }

  // any 3-cycle born in N\e dies with either of its reticulation arcs
  for (const Arc& e : retic_arcs) {
    auto [result, trace] = delete_reticulation_arc(n, e);
    (void)trace;
    for (const ThreeCycle& cyc : underlying_3cycles(result)) {
      ++report.followup_checks;
      Vertex retic = -1;
      for (Vertex v : cyc.vertices)
        if (result.is_reticulation(v)) retic = v;
      assert(retic >= 0);
      for (Vertex p : result.parents(retic)) {
        auto [second, trace2] = delete_reticulation_arc(result, {p, retic});
        (void)trace2;
        if (!is_tree_child(second))
          note("follow-up deletion is not tree-child", e);
        else if (has_3cycle(second))
          note("follow-up deletion still has a 3-cycle", e);
      }
    }
  }
  return report;
}

DeletionLemmaReport verify_deletion_lemmas_census(int n_max, const CensusOptions& opts) {
  if (n_max < 1) fail(ErrorCode::OutOfRange, "census needs at least one leaf");
  if (n_max > opts.max_leaves)
    fail(ErrorCode::ScaleExceeded,
         "census limited to " + std::to_string(opts.max_leaves) + " leaves");
  TreeChildGenerator gen(std::min(opts.max_leaves, kMaxCensusLeaves), opts.jobs);
  DeletionLemmaReport report;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      const std::vector<Network>& nets = gen.cell(n, k);
      std::vector<DeletionLemmaReport> parts(nets.size());
      parallel_for_index(nets.size(), opts.jobs,
                         [&](std::size_t i) { parts[i] = verify_deletion_lemmas(nets[i]); });
      for (const DeletionLemmaReport& part : parts) {
        report.networks += part.networks;
        report.deletion_checks += part.deletion_checks;
        report.tail_checks += part.tail_checks;
        report.followup_checks += part.followup_checks;
        report.failures.insert(report.failures.end(), part.failures.begin(),
                               part.failures.end());
      }
    }
  return report;
}

// ==== strictness for networks with normal reticulations ====

NormalStrictnessReport verify_normal_strictness(int n_max, const CensusOptions& opts) {
  if (n_max < 1) fail(ErrorCode::OutOfRange, "census needs at least one leaf");
  if (n_max > opts.max_leaves)
    fail(ErrorCode::ScaleExceeded,
         "census limited to " + std::to_string(opts.max_leaves) + " leaves");
  TreeChildGenerator gen(std::min(opts.max_leaves, kMaxCensusLeaves), opts.jobs);
  NormalStrictnessReport report;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 2; k <= n - 1; ++k) {
      std::vector<Network> nets = gen.cell_3cycle_free(n, k);
      struct Finding {
        bool has_normal = false;
        bool normal_net = false;
        std::int64_t trees = 0;
        std::string failure;
      };
      std::vector<Finding> findings(nets.size());
      std::int64_t bound = t_bound(n, k);
      parallel_for_index(nets.size(), opts.jobs, [&](std::size_t i) {
        const Network& net = nets[i];
        Finding f;
        for (Vertex v : net.reticulations())
          if (is_normal_reticulation(net, v)) f.has_normal = true;
        f.normal_net = is_normal_network(net);
        f.trees = count_displayed(net);
        if (f.has_normal && f.trees <= bound)
          f.failure = "normal reticulation without strict excess; trees=" +
                      std::to_string(f.trees) + "; bound=" + std::to_string(bound) +
                      "; network=" + serialize_enewick(net);
        if (f.normal_net && f.trees != (std::int64_t{1} << k))
          f.failure += std::string(f.failure.empty() ? "" : " | ") +
                       "normal network not displaying 2^k trees; trees=" +
                       std::to_string(f.trees) + "; network=" + serialize_enewick(net);
        findings[i] = f;
      });
      for (const Finding& f : findings) {
        ++report.networks;
        if (f.has_normal) ++report.with_normal_reticulation;
        if (f.normal_net) ++report.normal_networks;
        if (!f.failure.empty()) report.failures.push_back(f.failure);
      }
    }
  return report;
}

// ==== report serialization ====

nlohmann::ordered_json census_report_json(const CensusReport& report) {
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const CensusCell& cell : report.cells) {
    nlohmann::ordered_json c;
    c["n"] = cell.n;
    c["k"] = cell.k;
    c["generated"] = cell.generated;
    c["min_T"] = cell.min_T;
    c["max_T"] = cell.max_T;
    c["bound"] = cell.bound;
    c["equality_count"] = cell.equality_count;
    c["octopus_count"] = cell.octopus_count;
    c["all_equality_octopus"] = cell.all_equality_octopus;
    c["violations"] = cell.violations;
    cells.push_back(std::move(c));
  }
  // deliberately no worker count here: the report must be byte-identical
  // across job counts, wall_ms aside
  nlohmann::ordered_json meta;
  meta["n_max"] = report.n_max;
  meta["forbid_3cycles"] = report.forbid_3cycles;
  meta["oracle_certified"] = report.oracle_certified;
  meta["generator_fallback"] = report.generator_fallback;
  meta["injected_violation"] = report.injected_violation;
  meta["artifacts"] = report.artifacts;
  meta["wall_ms"] = report.wall_ms;
  nlohmann::ordered_json out;
  out["cells"] = std::move(cells);
  out["meta"] = std::move(meta);
  return out;
}

std::string census_report_csv(const CensusReport& report) {
  std::ostringstream os;
  os << "n,k,generated,min_T,max_T,bound,equality_count,octopus_count,"
        "all_equality_octopus,violations\n";
  for (const CensusCell& cell : report.cells)
    os << cell.n << ',' << cell.k << ',' << cell.generated << ',' << cell.min_T << ','
       << cell.max_T << ',' << cell.bound << ',' << cell.equality_count << ','
       << cell.octopus_count << ',' << (cell.all_equality_octopus ? "true" : "false") << ','
       << cell.violations.size() << '\n';
  return os.str();
}

}  // namespace tck
