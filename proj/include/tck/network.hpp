#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tck/errors.hpp"

namespace tck {

using Vertex = int;

struct Arc {
  Vertex tail = -1;
  Vertex head = -1;
  auto operator<=>(const Arc&) const = default;
};

inline std::string arc_str(Arc a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

enum class VertexRole : std::uint8_t { Root, Tree, Reticulation, Leaf };

const char* role_name(VertexRole role);

// Unvalidated input: vertices are 0..vertex_count-1, leaf_labels maps a vertex to
// its label. Everything else (roles, root, degrees) is derived during validation.
struct RawGraph {
  int vertex_count = 0;
  std::vector<Arc> arcs;
  std::map<Vertex, std::string> leaf_labels;
};

// A validated rooted binary phylogenetic network. Immutable after construction;
// edits produce new instances. The canonical code (a complete isomorphism
// invariant under label-fixing isomorphism) and the induced canonical vertex
// order are computed eagerly so instances are safe to share across threads.
class Network {
 public:
  // Checks every axiom (degrees, single root, acyclicity, no parallel arcs,
  // leaf labeling) and throws Error naming the first violated one.
  static Network validate(const RawGraph& g);

  int vertex_count() const { return static_cast<int>(roles_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  Vertex root() const { return root_; }
  VertexRole role(Vertex v) const { return roles_[v]; }
  bool is_leaf(Vertex v) const { return roles_[v] == VertexRole::Leaf; }
  bool is_reticulation(Vertex v) const { return roles_[v] == VertexRole::Reticulation; }

  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
  const std::vector<Vertex>& parents(Vertex v) const { return parents_[v]; }
  int out_degree(Vertex v) const { return static_cast<int>(children_[v].size()); }
  int in_degree(Vertex v) const { return static_cast<int>(parents_[v].size()); }

  const std::vector<Arc>& arcs() const { return arcs_; }  // sorted
  bool has_arc(Vertex tail, Vertex head) const;
  bool has_arc(Arc a) const { return has_arc(a.tail, a.head); }
  bool is_reticulation_arc(Arc a) const { return has_arc(a) && is_reticulation(a.head); }

  // leaves and labels
  int leaf_count() const { return static_cast<int>(leaves_.size()); }  // n
  const std::vector<Vertex>& leaves() const { return leaves_; }        // sorted by label
  const std::string& label(Vertex v) const { return labels_[v]; }      // "" for internals
  std::optional<Vertex> leaf_by_label(const std::string& name) const;
  std::vector<std::string> leaf_labels() const;  // sorted

  // reticulations, in canonical order (this fixes hybrid numbering and the
  // embedding bit order everywhere)
  int reticulation_count() const { return static_cast<int>(reticulations_.size()); }  // k
  const std::vector<Vertex>& reticulations() const { return reticulations_; }

  // shortcut arcs (reticulation arcs (u,v) with a second directed u->v path),
  // precomputed at validation
  const std::vector<Arc>& shortcut_arcs() const { return shortcuts_; }
  bool is_shortcut_arc(Arc a) const;

  const std::string& canonical_code() const { return canonical_code_; }
  int canonical_rank(Vertex v) const { return canonical_rank_[v]; }
  const std::vector<Vertex>& canonical_order() const { return canonical_order_; }

  bool reaches(Vertex from, Vertex to) const;  // directed reachability

 private:
  Network() = default;

  std::vector<VertexRole> roles_;
  std::vector<std::vector<Vertex>> children_;  // sorted by vertex id
  std::vector<std::vector<Vertex>> parents_;
  std::vector<Arc> arcs_;  // sorted
  std::vector<std::string> labels_;
  std::map<std::string, Vertex> leaf_by_label_;
  std::vector<Vertex> leaves_;
  std::vector<Vertex> reticulations_;
  std::vector<Arc> shortcuts_;
  Vertex root_ = 0;
  std::string canonical_code_;
  std::vector<int> canonical_rank_;
  std::vector<Vertex> canonical_order_;
};

// ==== structural predicates ====

// Both textbook characterizations, cross-checked: (a) every non-leaf vertex has
// a child that is a tree vertex or a leaf; (b) no tree vertex has two
// reticulation children and no reticulation's child is a reticulation.
bool is_tree_child(const Network& n);

// Directed path from u to a leaf whose interior vertices are all tree vertices.
// Deterministic: smallest canonical rank among eligible children at each step.
std::vector<Vertex> tree_path(const Network& n, Vertex u);

// Reticulation arc e = (u,v) such that v is reachable from u without using e.
bool is_shortcut(const Network& n, Arc e);

// Reticulation whose in-arcs are both non-shortcuts.
bool is_normal_reticulation(const Network& n, Vertex v);

// Tree-child and shortcut-free.
bool is_normal_network(const Network& n);

struct ThreeCycle {
  std::array<Vertex, 3> vertices;  // sorted
  std::array<Arc, 3> arcs;
};

// Triangles of the underlying undirected graph. For tree-child networks each
// one is asserted to consist of the two in-arcs of one reticulation (exactly
// one of them a shortcut) plus one tree arc.
std::vector<ThreeCycle> underlying_3cycles(const Network& n);
bool has_3cycle(const Network& n);

struct BiconnectedComponent {
  std::vector<Arc> arcs;  // sorted
  bool trivial() const { return arcs.size() == 1; }
};

// Blocks of the underlying undirected graph (every arc in exactly one).
std::vector<BiconnectedComponent> biconnected_components(const Network& n);

inline const std::string& network_canonical_code(const Network& n) { return n.canonical_code(); }

namespace detail {

struct CanonicalForm {
  std::string code;
  std::vector<int> rank;  // vertex -> canonical rank
};

// Color refinement + individualization backtracking; lexicographically smallest
// code over all discrete refinements. Complete invariant: equal codes iff the
// graphs are isomorphic by a leaf-label-preserving digraph isomorphism.
CanonicalForm canonical_form(int vertex_count, const std::vector<std::vector<Vertex>>& children,
                             const std::vector<std::vector<Vertex>>& parents,
                             const std::vector<VertexRole>& roles,
                             const std::vector<std::string>& labels);

}  // namespace detail

}  // namespace tck
