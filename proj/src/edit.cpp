#include "tck/edit.hpp"

#include <algorithm>
#include <cassert>

namespace tck {
namespace {

Vertex other_child(const Network& n, Vertex v, Vertex not_this) {
  for (Vertex c : n.children(v))
    if (c != not_this) return c;
  fail(ErrorCode::InternalAssertionFailed, "vertex has no second child");
}

Vertex other_parent(const Network& n, Vertex v, Vertex not_this) {
  for (Vertex p : n.parents(v))
    if (p != not_this) return p;
  fail(ErrorCode::InternalAssertionFailed, "vertex has no second parent");
}

}  // namespace

std::pair<Network, DeletionTrace> delete_reticulation_arc(const Network& n, Arc e) {
  if (!n.has_arc(e)) fail(ErrorCode::UnknownArc, "no arc " + arc_str(e));
  if (!n.is_reticulation(e.head))
    fail(ErrorCode::NotReticulationArc, "arc " + arc_str(e) + " does not end in a reticulation");
  if (!is_tree_child(n)) fail(ErrorCode::NotTreeChild, "deletion is defined on tree-child networks");

  const Vertex u = e.tail, v = e.head;
  DeletionTrace trace;
  trace.deleted_arc = e;

  std::vector<Arc> arcs = n.arcs();
  auto remove_arc = [&](Arc a) {
    auto it = std::find(arcs.begin(), arcs.end(), a);
    assert(it != arcs.end());
    arcs.erase(it);
  };
  auto add_arc = [&](Arc a) {
    if (std::find(arcs.begin(), arcs.end(), a) != arcs.end())
      fail(ErrorCode::InternalAssertionFailed,
           "suppression would create parallel arc " + arc_str(a) + " (input not tree-child?)");
    arcs.push_back(a);
  };

  remove_arc(e);
  std::vector<Vertex> removed_vertices;
  // pairs of input arcs merged into one output arc by a suppression
  std::vector<std::array<Arc, 3>> merges;  // {removed_in, removed_out, added}

  if (u == n.root()) {
    // the root loses one child; instead of a suppression the root is removed
    // and its other child (a tree vertex: its sibling v is a reticulation and
    // n is tree-child) becomes the new root
    Vertex c = other_child(n, u, v);
    assert(!n.is_reticulation(c));
    remove_arc({u, c});
    removed_vertices.push_back(u);
    trace.root_deleted = true;
  } else {
    // u had degree (1,2); suppress it
    Vertex pu = n.parents(u)[0];
    Vertex cu = other_child(n, u, v);
    remove_arc({pu, u});
    remove_arc({u, cu});
    add_arc({pu, cu});
    merges.push_back({Arc{pu, u}, Arc{u, cu}, Arc{pu, cu}});
    removed_vertices.push_back(u);
    trace.suppressed.push_back(u);
  }
  {
    // v had degree (2,1); suppress it
    Vertex w = other_parent(n, v, u);
    Vertex cv = n.children(v)[0];
    remove_arc({w, v});
    remove_arc({v, cv});
    add_arc({w, cv});
    merges.push_back({Arc{w, v}, Arc{v, cv}, Arc{w, cv}});
    removed_vertices.push_back(v);
    trace.suppressed.push_back(v);
  }

  // compact ids, keep order
  trace.vertex_map.assign(n.vertex_count(), -1);
  RawGraph g;
  for (Vertex old = 0; old < n.vertex_count(); ++old) {
    if (std::find(removed_vertices.begin(), removed_vertices.end(), old) != removed_vertices.end())
      continue;
    trace.vertex_map[old] = g.vertex_count++;
    if (n.is_leaf(old)) g.leaf_labels[trace.vertex_map[old]] = n.label(old);
  }
  auto map_arc = [&](Arc a) -> Arc {
    assert(trace.vertex_map[a.tail] >= 0 && trace.vertex_map[a.head] >= 0);
    return {trace.vertex_map[a.tail], trace.vertex_map[a.head]};
  };
  for (const Arc& a : arcs) g.arcs.push_back(map_arc(a));

  Network result = [&] {
    try {
      return Network::validate(g);
    } catch (const Error& err) {
      fail(ErrorCode::InternalAssertionFailed,
           std::string("deletion result failed validation: ") + err.what());
    }
  }();
  if (!is_tree_child(result))
    fail(ErrorCode::InternalAssertionFailed, "deletion result is not tree-child");

  // remap: merged pairs first, all other surviving arcs map by endpoints
  for (const Arc& a : n.arcs()) {
    if (a == e) continue;
    bool merged = false;
    for (const auto& m : merges) {
      if (a == m[0] || a == m[1]) {
        trace.arc_remap[a] = map_arc(m[2]);
        merged = true;
        break;
      }
    }
    if (merged) continue;
    if (trace.vertex_map[a.tail] >= 0 && trace.vertex_map[a.head] >= 0)
      trace.arc_remap[a] = map_arc(a);
    // arcs incident to a removed root vanish without a successor
  }
  return {std::move(result), std::move(trace)};
}

Network delete_arcs(const Network& n, const std::vector<Arc>& to_delete) {
  Network cur = n;
  // original arc -> arc of the current network
  std::map<Arc, Arc> alive;
  for (const Arc& a : n.arcs()) alive[a] = a;
  for (const Arc& target : to_delete) {
    auto it = alive.find(target);
    if (it == alive.end())
      fail(ErrorCode::ArcVanished, "arc " + arc_str(target) + " no longer exists");
    auto [next, trace] = delete_reticulation_arc(cur, it->second);
    std::map<Arc, Arc> composed;
    for (const auto& [orig, live] : alive) {
      auto hit = trace.arc_remap.find(live);
      if (hit != trace.arc_remap.end()) composed[orig] = hit->second;
    }
    alive = std::move(composed);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace tck
