#include "tck/tree.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

namespace tck {

PhyloTree PhyloTree::single(const std::string& label) {
  PhyloTree t;
  t.root_ = t.add_leaf(label);
  return t;
}

PhyloTree PhyloTree::join(const PhyloTree& a, const PhyloTree& b) {
  PhyloTree t = a;
  int offset = t.node_count();
  for (const Node& nd : b.nodes_) {
    Node copy = nd;
    if (!copy.leaf()) {
      copy.left += offset;
      copy.right += offset;
    }
    t.nodes_.push_back(copy);
  }
  t.root_ = t.add_node(a.root_, b.root_ + offset);
  return t;
}

int PhyloTree::add_leaf(const std::string& label) {
  if (label.empty()) fail(ErrorCode::UnlabeledLeaf, "empty leaf label");
  nodes_.push_back(Node{-1, -1, label});
  return node_count() - 1;
}

int PhyloTree::add_node(int left, int right) {
  nodes_.push_back(Node{left, right, ""});
  return node_count() - 1;
}

int PhyloTree::leaf_count() const {
  int n = 0;
  for (const Node& nd : nodes_)
    if (nd.leaf()) ++n;
  return n;
}

std::vector<std::string> PhyloTree::leaf_labels() const {
  std::vector<std::string> out;
  for (const Node& nd : nodes_)
    if (nd.leaf()) out.push_back(nd.label);
  std::sort(out.begin(), out.end());
  return out;
}

std::string PhyloTree::canonical() const {
  std::function<std::string(int)> rec = [&](int i) -> std::string {
    const Node& nd = nodes_[i];
    if (nd.leaf()) return std::to_string(nd.label.size()) + ":" + nd.label;
    std::string a = rec(nd.left), b = rec(nd.right);
    if (b < a) std::swap(a, b);
    return "(" + a + "," + b + ")";
  };
  return rec(root_);
}

PhyloTree caterpillar(const std::vector<std::string>& labels) {
  if (labels.size() < 2) fail(ErrorCode::TooFewLabels, "caterpillar needs at least two labels");
  {
    auto copy = labels;
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
      fail(ErrorCode::DuplicateLabel, "caterpillar labels must be distinct");
  }
  PhyloTree t;
  int cur = t.add_node(t.add_leaf(labels[0]), t.add_leaf(labels[1]));
  // later labels attach above: parent of labels[i-1] is a child of parent of labels[i]
  for (std::size_t i = 2; i < labels.size(); ++i) cur = t.add_node(cur, t.add_leaf(labels[i]));
  t.set_root(cur);
  return t;
}

PhyloTree double_caterpillar(const std::vector<std::string>& first,
                             const std::vector<std::string>& second) {
  if (first.size() < 2 || second.size() < 2)
    fail(ErrorCode::TooFewLabels, "double caterpillar needs two lists of at least two labels");
  for (const std::string& a : first)
    for (const std::string& b : second)
      if (a == b) fail(ErrorCode::DuplicateLabel, "label '" + a + "' on both sides");
  return PhyloTree::join(caterpillar(first), caterpillar(second));
}

std::set<std::set<std::string>> clusters(const PhyloTree& t) {
  std::set<std::set<std::string>> out;
  std::function<std::set<std::string>(int)> rec = [&](int i) -> std::set<std::string> {
    const auto& nd = t.node(i);
    if (nd.leaf()) return {nd.label};
    std::set<std::string> mine = rec(nd.left);
    std::set<std::string> right = rec(nd.right);
    mine.insert(right.begin(), right.end());
    return mine;
  };
  std::function<void(int)> walk = [&](int i) {
    const auto& nd = t.node(i);
    if (i != t.root()) out.insert(rec(i));  // one cluster per arc, i.e. per non-root vertex
    if (!nd.leaf()) {
      walk(nd.left);
      walk(nd.right);
    }
  };
  walk(t.root());
  return out;
}

PhyloTree restrict_tree(const PhyloTree& t, const std::set<std::string>& keep) {
  if (keep.empty()) fail(ErrorCode::EmptySubset, "restriction to the empty set");
  auto all = t.leaf_labels();
  for (const std::string& name : keep)
    if (!std::binary_search(all.begin(), all.end(), name))
      fail(ErrorCode::UnknownLabel, "label '" + name + "' not in the tree");
  PhyloTree out;
  std::function<int(int)> rec = [&](int i) -> int {
    const auto& nd = t.node(i);
    if (nd.leaf()) return keep.count(nd.label) ? out.add_leaf(nd.label) : -1;
    int l = rec(nd.left), r = rec(nd.right);
    if (l < 0) return r;  // suppression happens implicitly
    if (r < 0) return l;
    return out.add_node(l, r);
  };
  int root = rec(t.root());
  assert(root >= 0);
  out.set_root(root);
  return out;
}

PhyloTree tree_from_network(const Network& n) {
  if (n.reticulation_count() != 0)
    fail(ErrorCode::NotTreeChild, "network displays a tree only when k = 0");
  PhyloTree out;
  std::function<int(Vertex)> rec = [&](Vertex v) -> int {
    if (n.is_leaf(v)) return out.add_leaf(n.label(v));
    const auto& ch = n.children(v);
    assert(ch.size() == 2);
    int l = rec(ch[0]);
    return out.add_node(l, rec(ch[1]));
  };
  out.set_root(rec(n.root()));
  return out;
}

Network network_from_tree(const PhyloTree& t) {
  RawGraph g;
  g.vertex_count = t.node_count();
  for (int i = 0; i < t.node_count(); ++i) {
    const auto& nd = t.node(i);
    if (nd.leaf()) {
      g.leaf_labels[i] = nd.label;
    } else {
      g.arcs.push_back({i, nd.left});
      g.arcs.push_back({i, nd.right});
    }
  }
  return Network::validate(g);
}

std::string tree_newick(const PhyloTree& t) {
  struct Out {
    std::string text;
    std::string canon;
  };
  std::function<Out(int)> rec = [&](int i) -> Out {
    const auto& nd = t.node(i);
    if (nd.leaf()) return {nd.label, std::to_string(nd.label.size()) + ":" + nd.label};
    Out a = rec(nd.left), b = rec(nd.right);
    if (b.canon < a.canon) std::swap(a, b);
    return {"(" + a.text + "," + b.text + ")", "(" + a.canon + "," + b.canon + ")"};
  };
  return rec(t.root()).text + ";";
}

}  // namespace tck
