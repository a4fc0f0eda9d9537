#pragma once
// Independent reference implementations used only by tests: backtracking
// label-fixing isomorphism for networks and trees, exhaustive labeled-tree
// enumeration, cluster fingerprints, and a seeded random octopus-spec
// sampler. Deliberately algorithm-independent from the library (no canonical
// codes involved), so they can certify it.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tck/ladder.hpp"
#include "tck/network.hpp"
#include "tck/tree.hpp"

namespace tckt {

using namespace tck;

// Label-fixing digraph isomorphism by plain backtracking. The assignment
// order is a BFS from the root, so each tried vertex already has an assigned
// neighbor to prune against.
inline bool network_iso(const Network& a, const Network& b) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return false;
  if (a.leaf_labels() != b.leaf_labels()) return false;
  int nv = a.vertex_count();
  std::vector<int> map_ab(static_cast<std::size_t>(nv), -1);
  std::vector<int> map_ba(static_cast<std::size_t>(nv), -1);
  for (Vertex la : a.leaves()) {
    auto lb = b.leaf_by_label(a.label(la));
    if (!lb) return false;
    map_ab[static_cast<std::size_t>(la)] = *lb;
    map_ba[static_cast<std::size_t>(*lb)] = la;
  }
  std::vector<Vertex> order;
  {
    std::vector<char> seen(static_cast<std::size_t>(nv), 0);
    std::queue<Vertex> q;
    q.push(a.root());
    seen[static_cast<std::size_t>(a.root())] = 1;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      if (!a.is_leaf(v)) order.push_back(v);
      for (Vertex c : a.children(v))
        if (!seen[static_cast<std::size_t>(c)]) {
          seen[static_cast<std::size_t>(c)] = 1;
          q.push(c);
        }
    }
  }
  std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
    if (idx == order.size()) {
      for (const Arc& ar : a.arcs())
        if (!b.has_arc(map_ab[static_cast<std::size_t>(ar.tail)],
                       map_ab[static_cast<std::size_t>(ar.head)]))
          return false;
      return true;
    }
    Vertex va = order[idx];
    for (Vertex vb = 0; vb < nv; ++vb) {
      if (map_ba[static_cast<std::size_t>(vb)] != -1) continue;
      if (b.role(vb) != a.role(va)) continue;
      if (b.in_degree(vb) != a.in_degree(va) || b.out_degree(vb) != a.out_degree(va)) continue;
      bool consistent = true;
      for (Vertex c : a.children(va)) {
        int mc = map_ab[static_cast<std::size_t>(c)];
        if (mc != -1 && !b.has_arc(vb, mc)) {
          consistent = false;
          break;
        }
      }
      if (consistent)
        for (Vertex p : a.parents(va)) {
          int mp = map_ab[static_cast<std::size_t>(p)];
          if (mp != -1 && !b.has_arc(mp, vb)) {
            consistent = false;
            break;
          }
        }
      if (!consistent) continue;
      map_ab[static_cast<std::size_t>(va)] = vb;
      map_ba[static_cast<std::size_t>(vb)] = va;
      if (rec(idx + 1)) return true;
      map_ab[static_cast<std::size_t>(va)] = -1;
      map_ba[static_cast<std::size_t>(vb)] = -1;
    }
    return false;
  };
  return rec(0);
}

// Label-fixing tree isomorphism by recursion with child swapping.
inline bool tree_iso(const PhyloTree& x, const PhyloTree& y) {
  if (x.leaf_count() != y.leaf_count()) return false;
  std::function<bool(int, int)> eq = [&](int i, int j) -> bool {
    const auto& ni = x.node(i);
    const auto& nj = y.node(j);
    if (ni.leaf() != nj.leaf()) return false;
    if (ni.leaf()) return ni.label == nj.label;
    return (eq(ni.left, nj.left) && eq(ni.right, nj.right)) ||
           (eq(ni.left, nj.right) && eq(ni.right, nj.left));
  };
  return eq(x.root(), y.root());
}

// A rooted binary tree on a fixed label set is determined by its cluster set;
// this string encodes it.
inline std::string cluster_fingerprint(const PhyloTree& t) {
  std::ostringstream os;
  for (const auto& c : clusters(t)) {
    os << '{';
    for (const auto& s : c) os << s << ',';
    os << '}';
  }
  return os.str();
}

// All rooted binary trees on the given labels, by inserting each new leaf at
// every node (subdividing that node's in-arc, or adding a new root). Sizes
// follow the double factorial: 1, 1, 3, 15, 105, 945, 10395, 135135 for
// 1..8 labels.
inline std::vector<PhyloTree> all_labeled_trees(const std::vector<std::string>& labels) {
  std::vector<PhyloTree> acc;
  acc.push_back(PhyloTree::single(labels.at(0)));
  for (std::size_t m = 1; m < labels.size(); ++m) {
    std::vector<PhyloTree> next;
    next.reserve(acc.size() * (2 * m - 1));
    for (const PhyloTree& t : acc) {
      for (int pos = 0; pos < t.node_count(); ++pos) {
        std::function<PhyloTree(int)> build = [&](int idx) -> PhyloTree {
          const auto& nd = t.node(idx);
          PhyloTree sub = nd.leaf() ? PhyloTree::single(nd.label)
                                    : PhyloTree::join(build(nd.left), build(nd.right));
          if (idx == pos) sub = PhyloTree::join(sub, PhyloTree::single(labels[m]));
          return sub;
        };
        next.push_back(build(t.root()));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// octopus-spec builders and a seeded random sampler
// ---------------------------------------------------------------------------
inline std::unique_ptr<OctopusSpec::Pend> pend_leaf(const std::string& l) {
  auto p = std::make_unique<OctopusSpec::Pend>();
  p->kind = OctopusSpec::Kind::Leaf;
  p->label = l;
  return p;
}

inline std::unique_ptr<OctopusSpec::Pend> pend_node(std::unique_ptr<OctopusSpec::Pend> a,
                                                    std::unique_ptr<OctopusSpec::Pend> b) {
  auto p = std::make_unique<OctopusSpec::Pend>();
  p->kind = OctopusSpec::Kind::Node;
  p->parts.push_back(std::move(a));
  p->parts.push_back(std::move(b));
  return p;
}

inline std::unique_ptr<OctopusSpec::Pend> pend_ladder(
    int order, std::vector<std::unique_ptr<OctopusSpec::Pend>> parts) {
  auto p = std::make_unique<OctopusSpec::Pend>();
  p->kind = order == 2 ? OctopusSpec::Kind::Ladder2 : OctopusSpec::Kind::Ladder3;
  p->parts = std::move(parts);
  return p;
}

// Random octopus spec with k in {0,2,...,9} and n <= 12: ladders are primed
// with fresh leaves, decorated with extra cherries, then assembled by either
// nesting one component into a ladder slot or joining two under a new vertex.
inline OctopusSpec random_octopus_spec(std::mt19937_64& rng) {
  static const int k_choices[] = {0, 2, 3, 4, 5, 6, 7, 8, 9};
  for (;;) {
    int k = k_choices[rng() % 9];
    int l3 = (k % 2 == 1) ? 1 : 0;
    int l2 = (k - 3 * l3) / 2;
    int next_label = 0;
    auto fresh = [&] { return pend_leaf("x" + std::to_string(++next_label)); };
    std::vector<std::unique_ptr<OctopusSpec::Pend>> pool;
    for (int i = 0; i < l3; ++i) {
      std::vector<std::unique_ptr<OctopusSpec::Pend>> parts;
      for (int s = 0; s < 4; ++s) parts.push_back(fresh());
      pool.push_back(pend_ladder(3, std::move(parts)));
    }
    for (int i = 0; i < l2; ++i) {
      std::vector<std::unique_ptr<OctopusSpec::Pend>> parts;
      for (int s = 0; s < 3; ++s) parts.push_back(fresh());
      pool.push_back(pend_ladder(2, std::move(parts)));
    }
    if (pool.empty()) pool.push_back(fresh());
    int extras = static_cast<int>(rng() % 3);
    for (int i = 0; i < extras; ++i) {
      auto& target = pool[rng() % pool.size()];
      if (target->kind == OctopusSpec::Kind::Ladder2 ||
          target->kind == OctopusSpec::Kind::Ladder3) {
        auto& slot = target->parts[rng() % target->parts.size()];
        slot = pend_node(std::move(slot), fresh());
      } else {
        target = pend_node(std::move(target), fresh());
      }
    }
    while (pool.size() > 1) {
      std::size_t i = rng() % pool.size();
      std::size_t j = rng() % pool.size();
      if (i == j) continue;
      bool nest = (pool[i]->kind == OctopusSpec::Kind::Ladder2 ||
                   pool[i]->kind == OctopusSpec::Kind::Ladder3) &&
                  rng() % 100 < 70;
      if (nest) {
        auto& slot = pool[i]->parts[rng() % pool[i]->parts.size()];
        slot = std::move(pool[j]);  // the slot's old subtree (and its labels) is dropped
      } else {
        pool[i] = pend_node(std::move(pool[i]), std::move(pool[j]));
      }
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    }
    OctopusSpec spec;
    spec.top = std::move(pool.front());
    if (spec.leaf_total() < 1 || spec.leaf_total() > 12) continue;
    return spec;
  }
}

}  // namespace tckt
