#pragma once

#include <map>
#include <string>

#include "tck/network.hpp"

namespace tck {

// Extended Newick subset: rooted binary networks whose reticulations carry
// hybrid tags "#H<int>", each tag appearing exactly twice — once as
// "(subtree)#Hi" (the defining occurrence) and once bare "#Hi". Branch lengths
// (":<number>") are accepted and discarded; internal node labels are not part
// of the subset. The single-leaf network is "label;".
Network parse_enewick(const std::string& text);

struct ParsedNetwork {
  Network net;
  // name -> vertex: leaf labels, plus "#H<i>" for reticulations and "@<rank>"
  // for every vertex (canonical rank), plus source names for edge lists
  std::map<std::string, Vertex> names;
};

ParsedNetwork parse_enewick_named(const std::string& text);

// Canonical serialization: children ordered by canonical rank, hybrid tags
// numbered #H1..#Hk in canonical reticulation order, the first DFS encounter
// carries the subtree. parse(serialize(n)) has n's canonical code, and
// serialize . parse is a fixed point on its image.
std::string serialize_enewick(const Network& n);

}  // namespace tck
