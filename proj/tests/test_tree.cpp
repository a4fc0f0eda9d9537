#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace tck;
using namespace tckt;

TEST_CASE("basic construction") {
  PhyloTree s = leaf("a");
  CHECK(s.leaf_count() == 1);
  CHECK(s.node_count() == 1);
  CHECK(s.leaf_labels() == std::vector<std::string>{"a"});

  PhyloTree c = cherry("b", "a");
  CHECK(c.leaf_count() == 2);
  CHECK(c.node_count() == 3);
  CHECK(c.leaf_labels() == std::vector<std::string>{"a", "b"});
  CHECK(c.canonical() == cherry("a", "b").canonical());
}

TEST_CASE("caterpillar and double caterpillar") {
  PhyloTree cat = caterpillar({"x1", "x2", "x3", "x4"});
  CHECK(cat.leaf_count() == 4);
  // deepest pair is (x1,x2); each later leaf attaches one level higher
  CHECK(cat.canonical() == jt(jt(cherry("x1", "x2"), leaf("x3")), leaf("x4")).canonical());

  PhyloTree dc = double_caterpillar({"a", "b"}, {"c", "d", "e"});
  CHECK(dc.leaf_count() == 5);
  CHECK(dc.canonical() == jt(cherry("a", "b"), jt(cherry("c", "d"), leaf("e"))).canonical());

  CHECK_TCK_ERROR(double_caterpillar({"a"}, {"b", "c"}), ErrorCode::TooFewLabels);
  CHECK_TCK_ERROR(double_caterpillar({"a", "b"}, {"b", "c"}), ErrorCode::DuplicateLabel);
  CHECK_TCK_ERROR(caterpillar({"only"}), ErrorCode::TooFewLabels);
  CHECK_TCK_ERROR(caterpillar({}), ErrorCode::TooFewLabels);
  CHECK_TCK_ERROR(caterpillar({"a", "b", "a"}), ErrorCode::DuplicateLabel);
}

TEST_CASE("clusters") {
  PhyloTree cat = caterpillar({"x1", "x2", "x3", "x4"});
  std::set<std::set<std::string>> expected = {
      {"x1"}, {"x2"}, {"x3"}, {"x4"}, {"x1", "x2"}, {"x1", "x2", "x3"}};
  CHECK(clusters(cat) == expected);

  PhyloTree bal = jt(cherry("x1", "x2"), cherry("x3", "x4"));
  std::set<std::set<std::string>> expected_bal = {
      {"x1"}, {"x2"}, {"x3"}, {"x4"}, {"x1", "x2"}, {"x3", "x4"}};
  CHECK(clusters(bal) == expected_bal);

  // the full leaf set is never a cluster (it has no pendant arc)
  for (const auto& c : clusters(cat)) CHECK(c.size() < 4);
}

TEST_CASE("restriction") {
  PhyloTree cat = caterpillar({"x1", "x2", "x3", "x4", "x5"});
  CHECK(restrict_tree(cat, {"x1", "x2"}).canonical() == cherry("x1", "x2").canonical());
  CHECK(restrict_tree(cat, {"x4", "x5"}).canonical() == cherry("x4", "x5").canonical());
  CHECK(restrict_tree(cat, {"x2", "x4", "x5"}).canonical() ==
        caterpillar({"x2", "x4", "x5"}).canonical());
  CHECK(restrict_tree(cat, {"x3"}).canonical() == leaf("x3").canonical());
  CHECK(restrict_tree(cat, {"x1", "x2", "x3", "x4", "x5"}).canonical() == cat.canonical());

  // restricting twice equals restricting once to the smaller set
  PhyloTree once = restrict_tree(cat, {"x1", "x3", "x5"});
  PhyloTree twice = restrict_tree(restrict_tree(cat, {"x1", "x2", "x3", "x5"}), {"x1", "x3", "x5"});
  CHECK(once.canonical() == twice.canonical());

  CHECK_TCK_ERROR(restrict_tree(cat, {}), ErrorCode::EmptySubset);
  CHECK_TCK_ERROR(restrict_tree(cat, {"nope"}), ErrorCode::UnknownLabel);
  CHECK_TCK_ERROR(restrict_tree(cat, {"x1", "nope"}), ErrorCode::UnknownLabel);
}

TEST_CASE("conversions between trees and k = 0 networks") {
  PhyloTree cat = caterpillar(xlabels(6));
  Network net = network_from_tree(cat);
  CHECK(net.leaf_count() == 6);
  CHECK(net.reticulation_count() == 0);
  CHECK(is_tree_child(net));
  CHECK(tree_from_network(net).canonical() == cat.canonical());

  PhyloTree single = leaf("z");
  Network sn = network_from_tree(single);
  CHECK(sn.vertex_count() == 1);
  CHECK(tree_from_network(sn).canonical() == single.canonical());

  CHECK_TCK_ERROR(tree_from_network(smallest_retic_net()), ErrorCode::NotTreeChild);
}

TEST_CASE("newick serialization is canonical") {
  CHECK(tree_newick(leaf("a")) == "a;");
  CHECK(tree_newick(cherry("b", "a")) == "(a,b);");
  CHECK(tree_newick(cherry("a", "b")) == "(a,b);");
  PhyloTree cat = caterpillar({"x1", "x2", "x3", "x4"});
  CHECK(tree_newick(cat) == "(((x1,x2),x3),x4);");
  // equal canonical strings give byte-equal newicks regardless of build order
  PhyloTree bal1 = jt(cherry("x1", "x2"), cherry("x3", "x4"));
  PhyloTree bal2 = jt(cherry("x4", "x3"), cherry("x2", "x1"));
  CHECK(tree_newick(bal1) == tree_newick(bal2));
}
