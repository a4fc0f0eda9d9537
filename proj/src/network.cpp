#include "tck/network.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace tck {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::ParallelArcs: return "ParallelArcs";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::MultipleRoots: return "MultipleRoots";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnlabeledLeaf: return "UnlabeledLeaf";
    case ErrorCode::NotTreeChild: return "NotTreeChild";
    case ErrorCode::NotReticulationArc: return "NotReticulationArc";
    case ErrorCode::NotReticulation: return "NotReticulation";
    case ErrorCode::UnknownArc: return "UnknownArc";
    case ErrorCode::ArcVanished: return "ArcVanished";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::TooFewLabels: return "TooFewLabels";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::TooManyReticulations: return "TooManyReticulations";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::ScaleExceeded: return "ScaleExceeded";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SpecInconsistent: return "SpecInconsistent";
    case ErrorCode::KIsOne: return "KIsOne";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::TagArityError: return "TagArityError";
    case ErrorCode::InternalAssertionFailed: return "InternalAssertionFailed";
  }
  return "UnknownError";
}

const char* role_name(VertexRole role) {
  switch (role) {
    case VertexRole::Root: return "root";
    case VertexRole::Tree: return "tree";
    case VertexRole::Reticulation: return "reticulation";
    case VertexRole::Leaf: return "leaf";
  }
  return "?";
}

// ==== validation ====

Network Network::validate(const RawGraph& g) {
  if (g.vertex_count < 1) fail(ErrorCode::BadDegree, "network needs at least one vertex");
  const int nv = g.vertex_count;

  for (const Arc& a : g.arcs) {
    if (a.tail < 0 || a.tail >= nv || a.head < 0 || a.head >= nv)
      fail(ErrorCode::UnknownArc, "arc endpoint out of range: " + arc_str(a));
    if (a.tail == a.head) fail(ErrorCode::NotAcyclic, "self-loop at vertex " + std::to_string(a.tail));
  }
  std::vector<Arc> arcs = g.arcs;
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
    fail(ErrorCode::ParallelArcs, "duplicate arc " + arc_str(*std::adjacent_find(arcs.begin(), arcs.end())));

  Network net;
  net.children_.assign(nv, {});
  net.parents_.assign(nv, {});
  for (const Arc& a : arcs) {
    net.children_[a.tail].push_back(a.head);
    net.parents_[a.head].push_back(a.tail);
  }
  net.arcs_ = std::move(arcs);

  // roles from degrees
  net.roles_.assign(nv, VertexRole::Tree);
  std::vector<Vertex> roots;
  for (Vertex v = 0; v < nv; ++v) {
    int din = static_cast<int>(net.parents_[v].size());
    int dout = static_cast<int>(net.children_[v].size());
    if (din == 0) {
      roots.push_back(v);
      net.roles_[v] = VertexRole::Root;
    } else if (dout == 0) {
      if (din != 1)
        fail(ErrorCode::BadDegree, "leaf vertex " + std::to_string(v) + " has in-degree " + std::to_string(din));
      net.roles_[v] = VertexRole::Leaf;
    } else if (din == 1 && dout == 2) {
      net.roles_[v] = VertexRole::Tree;
    } else if (din == 2 && dout == 1) {
      net.roles_[v] = VertexRole::Reticulation;
    } else {
      fail(ErrorCode::BadDegree, "vertex " + std::to_string(v) + " has degree (" + std::to_string(din) +
                                     "," + std::to_string(dout) + ")");
    }
  }
  if (roots.empty()) fail(ErrorCode::NoRoot, "no vertex of in-degree zero");
  if (roots.size() > 1)
    fail(ErrorCode::MultipleRoots, std::to_string(roots.size()) + " vertices of in-degree zero");
  net.root_ = roots[0];

  if (nv == 1) {
    // single-vertex network: the root is the unique leaf
    net.roles_[net.root_] = VertexRole::Leaf;
  } else {
    int rout = static_cast<int>(net.children_[net.root_].size());
    if (rout != 2)
      fail(ErrorCode::BadDegree, "root has out-degree " + std::to_string(rout) + ", expected 2");
  }

  // acyclicity (Kahn); single root + positive in-degrees elsewhere already
  // imply every vertex is reachable from the root once acyclic
  {
    std::vector<int> indeg(nv);
    for (Vertex v = 0; v < nv; ++v) indeg[v] = static_cast<int>(net.parents_[v].size());
    std::vector<Vertex> queue{net.root_};
    std::size_t seen = 0;
    while (seen < queue.size()) {
      Vertex v = queue[seen++];
      for (Vertex c : net.children_[v])
        if (--indeg[c] == 0) queue.push_back(c);
    }
    if (static_cast<int>(seen) != nv) fail(ErrorCode::NotAcyclic, "directed cycle present");
  }

  // leaf labeling: exactly the out-degree-zero vertices, bijectively
  net.labels_.assign(nv, "");
  for (const auto& [v, name] : g.leaf_labels) {
    if (v < 0 || v >= nv) fail(ErrorCode::UnknownLabel, "label on out-of-range vertex");
    if (name.empty()) fail(ErrorCode::UnlabeledLeaf, "empty label on vertex " + std::to_string(v));
    if (net.roles_[v] != VertexRole::Leaf)
      fail(ErrorCode::BadDegree, "label '" + name + "' on non-leaf vertex " + std::to_string(v));
    net.labels_[v] = name;
    auto [it, fresh] = net.leaf_by_label_.emplace(name, v);
    (void)it;
    if (!fresh) fail(ErrorCode::DuplicateLabel, "label '" + name + "' used twice");
  }
  for (Vertex v = 0; v < nv; ++v) {
    if (net.roles_[v] == VertexRole::Leaf && net.labels_[v].empty())
      fail(ErrorCode::UnlabeledLeaf, "leaf vertex " + std::to_string(v) + " has no label");
    if (net.roles_[v] == VertexRole::Reticulation) net.reticulations_.push_back(v);
  }
  for (const auto& [name, v] : net.leaf_by_label_) net.leaves_.push_back(v);

  auto canon = detail::canonical_form(nv, net.children_, net.parents_, net.roles_, net.labels_);
  net.canonical_code_ = std::move(canon.code);
  net.canonical_rank_ = std::move(canon.rank);
  net.canonical_order_.assign(nv, -1);
  for (Vertex v = 0; v < nv; ++v) net.canonical_order_[net.canonical_rank_[v]] = v;
  std::sort(net.reticulations_.begin(), net.reticulations_.end(),
            [&](Vertex a, Vertex b) { return net.canonical_rank_[a] < net.canonical_rank_[b]; });

  // shortcuts, cached: (u,v) is one iff v is reachable from another child of u
  for (const Arc& a : net.arcs_) {
    if (net.roles_[a.head] != VertexRole::Reticulation) continue;
    for (Vertex c : net.children_[a.tail]) {
      if (c == a.head) continue;
      if (net.reaches(c, a.head)) {
        net.shortcuts_.push_back(a);
        break;
      }
    }
  }
  return net;
}

bool Network::has_arc(Vertex tail, Vertex head) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{tail, head});
}

std::optional<Vertex> Network::leaf_by_label(const std::string& name) const {
  auto it = leaf_by_label_.find(name);
  if (it == leaf_by_label_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Network::leaf_labels() const {
  std::vector<std::string> out;
  out.reserve(leaf_by_label_.size());
  for (const auto& [name, v] : leaf_by_label_) out.push_back(name);
  return out;
}

bool Network::is_shortcut_arc(Arc a) const {
  return std::find(shortcuts_.begin(), shortcuts_.end(), a) != shortcuts_.end();
}

bool Network::reaches(Vertex from, Vertex to) const {
  if (from == to) return true;
  std::vector<bool> seen(vertex_count(), false);
  std::vector<Vertex> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex c : children_[v]) {
      if (c == to) return true;
      if (!seen[c]) {
        seen[c] = true;
        stack.push_back(c);
      }
    }
  }
  return false;
}

// ==== predicates ====

bool is_tree_child(const Network& n) {
  // characterization (a): every non-leaf vertex has a tree-vertex-or-leaf child
  bool a = true;
  for (Vertex v = 0; v < n.vertex_count() && a; ++v) {
    if (n.is_leaf(v)) continue;
    bool good = false;
    for (Vertex c : n.children(v))
      if (!n.is_reticulation(c)) good = true;
    a = good;
  }
  // characterization (b): no two reticulation children, no reticulation chain
  bool b = true;
  for (Vertex v = 0; v < n.vertex_count() && b; ++v) {
    if (n.is_leaf(v)) continue;
    int retic_children = 0;
    for (Vertex c : n.children(v))
      if (n.is_reticulation(c)) ++retic_children;
    if (n.is_reticulation(v) && retic_children > 0) b = false;
    if (!n.is_reticulation(v) && retic_children == n.out_degree(v)) b = false;
  }
  assert(a == b && "tree-child characterizations must agree");
  return a;
}

std::vector<Vertex> tree_path(const Network& n, Vertex u) {
  if (u < 0 || u >= n.vertex_count()) fail(ErrorCode::OutOfRange, "no such vertex");
  if (!is_tree_child(n)) fail(ErrorCode::NotTreeChild, "tree paths need a tree-child network");
  std::vector<Vertex> path{u};
  Vertex cur = u;
  while (!n.is_leaf(cur)) {
    Vertex next = -1;
    for (Vertex c : n.children(cur)) {
      if (n.is_reticulation(c)) continue;  // interior must stay on tree vertices
      if (next == -1 || n.canonical_rank(c) < n.canonical_rank(next)) next = c;
    }
    if (next == -1) fail(ErrorCode::InternalAssertionFailed, "tree-child vertex without tree child");
    path.push_back(next);
    cur = next;
  }
  return path;
}

bool is_shortcut(const Network& n, Arc e) {
  if (!n.has_arc(e)) fail(ErrorCode::UnknownArc, "no arc " + arc_str(e));
  if (!n.is_reticulation(e.head))
    fail(ErrorCode::NotReticulationArc, "arc " + arc_str(e) + " does not end in a reticulation");
  for (Vertex c : n.children(e.tail)) {
    if (c == e.head) continue;
    if (n.reaches(c, e.head)) return true;
  }
  return false;
}

bool is_normal_reticulation(const Network& n, Vertex v) {
  if (v < 0 || v >= n.vertex_count() || !n.is_reticulation(v))
    fail(ErrorCode::NotReticulation, "vertex " + std::to_string(v) + " is not a reticulation");
  for (Vertex p : n.parents(v))
    if (n.is_shortcut_arc({p, v})) return false;
  return true;
}

bool is_normal_network(const Network& n) { return is_tree_child(n) && n.shortcut_arcs().empty(); }

std::vector<ThreeCycle> underlying_3cycles(const Network& n) {
  // undirected adjacency
  std::vector<std::set<Vertex>> adj(n.vertex_count());
  for (const Arc& a : n.arcs()) {
    adj[a.tail].insert(a.head);
    adj[a.head].insert(a.tail);
  }
  auto arc_between = [&](Vertex a, Vertex b) -> Arc {
    return n.has_arc(a, b) ? Arc{a, b} : Arc{b, a};
  };
  std::vector<ThreeCycle> out;
  const bool tc = is_tree_child(n);
  for (Vertex a = 0; a < n.vertex_count(); ++a)
    for (Vertex b : adj[a]) {
      if (b <= a) continue;
      for (Vertex c : adj[b]) {
        if (c <= b || !adj[a].count(c)) continue;
        ThreeCycle cyc;
        cyc.vertices = {a, b, c};
        cyc.arcs = {arc_between(a, b), arc_between(b, c), arc_between(a, c)};
        if (tc) {
          // in a tree-child network a triangle is forced to be the two in-arcs
          // of one reticulation plus one tree arc, one in-arc a shortcut
          int retics = 0;
          Vertex r = -1;
          for (Vertex v : cyc.vertices)
            if (n.is_reticulation(v)) ++retics, r = v;
          assert(retics >= 1);
          int in_arcs = 0, shortcuts = 0;
          for (const Arc& e : cyc.arcs) {
            if (e.head == r) {
              ++in_arcs;
              if (n.is_shortcut_arc(e)) ++shortcuts;
            }
          }
          assert(in_arcs == 2 && shortcuts == 1 && "triangle shape in tree-child network");
        }
        out.push_back(cyc);
      }
    }
  return out;
}

bool has_3cycle(const Network& n) { return !underlying_3cycles(n).empty(); }

// Hopcroft–Tarjan blocks on the underlying undirected graph.
std::vector<BiconnectedComponent> biconnected_components(const Network& n) {
  int nv = n.vertex_count();
  struct HalfEdge {
    Vertex to;
    int arc_id;
  };
  std::vector<std::vector<HalfEdge>> adj(nv);
  const auto& arcs = n.arcs();
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    adj[arcs[i].tail].push_back({arcs[i].head, i});
    adj[arcs[i].head].push_back({arcs[i].tail, i});
  }
  std::vector<int> num(nv, -1), low(nv, 0);
  std::vector<int> edge_stack;
  std::vector<BiconnectedComponent> out;
  int timer = 0;

  struct Frame {
    Vertex v;
    int parent_arc;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex start = 0; start < nv; ++start) {
    if (num[start] != -1) continue;
    stack.push_back({start, -1, 0});
    num[start] = low[start] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        HalfEdge e = adj[f.v][f.next++];
        if (e.arc_id == f.parent_arc) continue;
        if (num[e.to] == -1) {
          edge_stack.push_back(e.arc_id);
          num[e.to] = low[e.to] = timer++;
          stack.push_back({e.to, e.arc_id, 0});
        } else if (num[e.to] < num[f.v]) {
          edge_stack.push_back(e.arc_id);
          low[f.v] = std::min(low[f.v], num[e.to]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& up = stack.back();
          low[up.v] = std::min(low[up.v], low[done.v]);
          if (low[done.v] >= num[up.v]) {
            BiconnectedComponent comp;
            int until = done.parent_arc;
            while (true) {
              int id = edge_stack.back();
              edge_stack.pop_back();
              comp.arcs.push_back(arcs[id]);
              if (id == until) break;
            }
            std::sort(comp.arcs.begin(), comp.arcs.end());
            out.push_back(std::move(comp));
          }
        }
      }
    }
  }
  // deterministic order
  std::sort(out.begin(), out.end(),
            [](const BiconnectedComponent& a, const BiconnectedComponent& b) { return a.arcs < b.arcs; });
  return out;
}

}  // namespace tck
