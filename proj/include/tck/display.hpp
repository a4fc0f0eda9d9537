#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "tck/network.hpp"
#include "tck/tree.hpp"

namespace tck {

// Hard guard for exhaustive embedding enumeration (2^k embeddings).
inline constexpr int kDefaultReticulationCap = 24;

// One in-arc choice per reticulation, keyed by reticulation vertex in the
// network's canonical reticulation order.
struct Embedding {
  std::vector<std::pair<Vertex, Arc>> choices;
};

struct DisplayedTree {
  std::string canonical;       // PhyloTree::canonical() of the displayed tree
  std::uint64_t multiplicity;  // number of embeddings yielding it
  std::uint64_t example_mask;  // smallest choice mask that yields it
};

struct DisplaySummary {
  std::vector<Vertex> reticulations;  // bit i of a mask picks an in-arc of reticulations[i]
  std::uint64_t embeddings = 1;       // 2^k
  std::vector<DisplayedTree> trees;   // sorted by canonical string
  // avail[t][b] has bit i set iff some embedding of trees[t] picks in-arc b at
  // reticulation i (in-arcs of each reticulation ordered by canonical tail rank)
  std::vector<std::array<std::uint64_t, 2>> avail;

  std::uint64_t count() const { return trees.size(); }
};

// Exhaustive enumeration of all 2^k embeddings with exact deduplication of the
// displayed trees. Requires a tree-child network (every embedding then keeps
// all vertices reachable) and k <= cap.
DisplaySummary displayed_trees(const Network& n, int cap = kDefaultReticulationCap);

// |T(N)|.
std::uint64_t count_displayed(const Network& n, int cap = kDefaultReticulationCap);

// mask bit i = 1 picks the canonically-larger in-arc of reticulation i.
Embedding embedding_from_mask(const Network& n, std::uint64_t mask);
std::uint64_t mask_from_embedding(const Network& n, const Embedding& e);

// Keep all tree arcs plus the chosen reticulation arcs, drop the rest, suppress
// degree-(1,1) vertices and a degree-one root chain.
PhyloTree embedding_to_tree(const Network& n, const Embedding& e);

// All embeddings displaying a label-fixed copy of t (LabelMismatch if t's label
// set differs from n's).
std::vector<Embedding> embeddings_of(const Network& n, const PhyloTree& t,
                                     int cap = kDefaultReticulationCap);

// e is non-essential iff every displayed tree has an embedding avoiding e.
// Tree arcs are never non-essential (every embedding keeps them).
bool is_non_essential(const Network& n, Arc e, int cap = kDefaultReticulationCap);
std::vector<Arc> non_essential_arcs(const Network& n, int cap = kDefaultReticulationCap);

}  // namespace tck
