#pragma once

#include <string>

#include "tck/enewick.hpp"  // ParsedNetwork
#include "tck/network.hpp"

namespace tck {

// Plain-text arc list:
//   leaves: x1 x2 x3
//   tail head
//   ...
// First non-blank line declares the leaf labels; every further line is one
// arc as two whitespace-separated vertex names. Names are free-form tokens
// (no whitespace); names not declared as leaves are internal vertices.
Network parse_edgelist(const std::string& text);
ParsedNetwork parse_edgelist_named(const std::string& text);

// Canonical serialization: leaves in canonical order on the header line, arcs
// sorted by canonical (tail, head) rank; internal vertices named "n<rank>"
// (prefixed with '_' if that would collide with a leaf label).
std::string serialize_edgelist(const Network& n);

}  // namespace tck
