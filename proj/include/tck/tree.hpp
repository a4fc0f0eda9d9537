#pragma once

#include <set>
#include <string>
#include <vector>

#include "tck/network.hpp"

namespace tck {

// Rooted binary phylogenetic tree (every internal vertex has exactly two
// children; leaves labeled; the single-leaf tree is allowed). Lightweight by
// design: display enumeration materializes a lot of these.
class PhyloTree {
 public:
  struct Node {
    int left = -1;
    int right = -1;
    std::string label;  // leaves only
    bool leaf() const { return left < 0; }
  };

  static PhyloTree single(const std::string& label);
  static PhyloTree join(const PhyloTree& a, const PhyloTree& b);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int root() const { return root_; }
  const Node& node(int i) const { return nodes_[i]; }
  int leaf_count() const;
  std::vector<std::string> leaf_labels() const;  // sorted

  // Complete isomorphism invariant for label-fixing tree isomorphism:
  // recursively "(min,max)" over length-prefixed leaf labels.
  std::string canonical() const;

  // internal builder access (used by module code)
  int add_leaf(const std::string& label);
  int add_node(int left, int right);
  void set_root(int r) { root_ = r; }

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
};

// Caterpillar on labels (x1..xm): x1,x2 share the deepest vertex and each later
// leaf's parent sits directly above the previous one. Requires >= 2 distinct labels.
PhyloTree caterpillar(const std::vector<std::string>& labels);

// Two caterpillars hanging off a common root.
PhyloTree double_caterpillar(const std::vector<std::string>& first,
                             const std::vector<std::string>& second);

// Leaf sets of all pendant subtrees, one per arc (singletons included, the full
// leaf set not).
std::set<std::set<std::string>> clusters(const PhyloTree& t);

// T restricted to a non-empty subset of its labels (suppressing degree-one
// vertices).
PhyloTree restrict_tree(const PhyloTree& t, const std::set<std::string>& keep);

// Conversions. tree_from_network requires k = 0.
PhyloTree tree_from_network(const Network& n);
Network network_from_tree(const PhyloTree& t);

// Canonical Newick text (children ordered by canonical string), ';'-terminated.
std::string tree_newick(const PhyloTree& t);

}  // namespace tck
