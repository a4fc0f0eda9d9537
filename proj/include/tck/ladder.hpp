#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tck/network.hpp"

namespace tck {

// A k-tight caterpillar ladder located inside a network (k = 2 or 3): a chain
// of tree vertices u_k' .. u_1 ("spine", top-down) with reticulations v_i whose
// in-arcs form the rungs. Rungs are listed in ladder order: for k=2
// (u1,v1),(u2,v2),(u'1,v1),(u'2,v2); for k=3 the order interleaves the third
// pair as (u1,v1),(u2,v2),(u'1,v1),(u3,v3),(u'2,v2),(u'3,v3). Rungs with a
// primed tail are exactly the shortcuts.
struct LadderEmbed {
  int order = 0;                 // 2 or 3
  std::vector<Vertex> spine;     // top-down: k=2: u'2,u'1,u2,u1 ; k=3: u'3,u'2,u3,u'1,u2,u1
  std::vector<Vertex> retics;    // v1..v_order
  std::vector<Arc> rungs;        // ladder order (first..last)
  std::vector<Arc> core_arcs;    // spine arcs + rungs, sorted

  Arc first_rung() const { return rungs.front(); }
  Arc last_rung() const { return rungs.back(); }
};

struct BuiltLadder {
  Network net;
  LadderEmbed embed;  // vertex ids valid in net
};

// Standalone k-tight caterpillar ladder: the core plus pendant leaves
// labels[0..order] (labels[0] under u1, labels[i] under v_i). order in {2,3},
// labels.size() == order+1, distinct.
BuiltLadder build_tight_ladder(int order, const std::vector<std::string>& labels);

// Does this non-trivial biconnected component equal a k-tight core exactly
// (component-equality semantics, used by octopus recognition)?
std::optional<LadderEmbed> ladder_core_match(const Network& n, const BiconnectedComponent& comp);

// All k-tight ladders embedded anywhere in n (subgraph semantics: the core is
// obtainable from n by deleting vertices and arcs). Used by the
// non-essential-arc characterization for k in {2,3}.
std::vector<LadderEmbed> find_tight_ladders(const Network& n);

// ==== octopuses ====

struct OctopusCheck {
  bool value = false;    // is n an octopus?
  bool vacuous = false;  // k = 0 (true only vacuously)
  int order2_components = 0;
  int order3_components = 0;
  int unmatched_components = 0;
};

// A tree-child network with k != 1 reticulations is an octopus when every
// non-trivial biconnected component is exactly a 2-tight core, except that for
// odd k exactly one of them is a 3-tight core. Throws KIsOne for k = 1 and
// NotTreeChild for non-tree-child inputs.
OctopusCheck is_octopus(const Network& n);

// Recursive description of an octopus: each pendant position holds a leaf, a
// binary branching of two pendants, or a ladder whose order+1 pendant slots
// hold further pendants. Text form:
//   pend := <label> | (pend,pend) | L2(pend,pend,pend) | L3(pend,pend,pend,pend)
// where ladder slots are listed as (below-u1, below-v1, below-v2[, below-v3]).
struct OctopusSpec {
  enum class Kind { Leaf, Node, Ladder2, Ladder3 };
  struct Pend {
    Kind kind = Kind::Leaf;
    std::string label;                         // Leaf
    std::vector<std::unique_ptr<Pend>> parts;  // Node: 2, Ladder2: 3, Ladder3: 4
  };
  std::unique_ptr<Pend> top;

  int leaf_total() const;          // n
  int reticulation_total() const;  // k
};

// Parses the text form; checks labels are distinct and non-empty, at most one
// L3 appears (more can never be an octopus), and therefore k != 1.
OctopusSpec parse_octopus_spec(const std::string& text);
std::string format_octopus_spec(const OctopusSpec& spec);

// Materializes the spec; the result is asserted to be a tree-child,
// 3-cycle-free network recognized by is_octopus.
Network build_octopus(const OctopusSpec& spec);

// Decomposes a recognized octopus back into a spec (canonical child order), so
// build_octopus(extract_octopus_spec(n)) has n's canonical code. nullopt when
// n is not an octopus (or k = 1).
std::optional<OctopusSpec> extract_octopus_spec(const Network& n);

}  // namespace tck
