#pragma once

#include <map>
#include <vector>

#include "tck/network.hpp"

namespace tck {

// Record of one reticulation-arc deletion. Vertex ids of the result are
// compacted; vertex_map/arc_remap translate between the input and the result.
struct DeletionTrace {
  Arc deleted_arc;                        // in input ids
  std::vector<Vertex> suppressed;         // input ids of suppressed (1,1) vertices
  bool root_deleted = false;              // tail was the root, which was removed
  std::vector<Vertex> vertex_map;         // input id -> result id, -1 if removed
  std::map<Arc, Arc> arc_remap;           // surviving input arc -> result arc
};

// Deletes reticulation arc e from a tree-child network and suppresses the two
// degree-(1,1) vertices this creates; when the tail is the root, the root is
// removed instead and its other child becomes the new root. The result is
// validated and asserted tree-child (guaranteed for tree-child inputs).
std::pair<Network, DeletionTrace> delete_reticulation_arc(const Network& n, Arc e);

// Sequential deletion; each listed arc is named in the ORIGINAL network's ids
// and resolved through the accumulated remap (throws ArcVanished if a listed
// arc no longer exists; each must be a reticulation arc at its deletion time).
Network delete_arcs(const Network& n, const std::vector<Arc>& arcs);

}  // namespace tck
