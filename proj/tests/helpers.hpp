#pragma once
// Shared fixtures for the test suite. Every network here is constructed from
// an explicit arc list, and its structural facts (shortcut set, displayed
// trees, biconnected decomposition, ...) were worked out by hand and are
// asserted in the tests — the fixtures are the frozen ground truth the
// library is measured against.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tck/bound.hpp"
#include "tck/census.hpp"
#include "tck/display.hpp"
#include "tck/edgelist.hpp"
#include "tck/edit.hpp"
#include "tck/enewick.hpp"
#include "tck/errors.hpp"
#include "tck/ladder.hpp"
#include "tck/network.hpp"
#include "tck/tree.hpp"

namespace tckt {

using namespace tck;

inline Network make_net(int vertex_count, std::vector<Arc> arcs,
                        std::map<Vertex, std::string> labels) {
  RawGraph g;
  g.vertex_count = vertex_count;
  g.arcs = std::move(arcs);
  g.leaf_labels = std::move(labels);
  return Network::validate(g);
}

// ---------------------------------------------------------------------------
// Reference network: 4 leaves, 2 reticulations, no underlying 3-cycle.
//
//   0 root; 1,2,3,4 tree vertices; 5,6 reticulations; 7..10 leaves x1..x4.
//   The one shortcut is (2,6) (via 2->3->4->6). Reticulation 5 is normal,
//   6 is not. Displays 3 trees from its 4 embeddings:
//     ((x1,x2),(x3,x4))   twice,
//     (x1,(x2,(x3,x4)))   once,
//     (x1,((x2,x3),x4))   once.
//   Exactly one non-trivial biconnected component (8 arcs), which is not a
//   tight-ladder core, so it is not an octopus.
// ---------------------------------------------------------------------------
inline Network sample_shortcut_net() {
  return make_net(11,
                  {{0, 1},
                   {0, 2},
                   {1, 7},
                   {1, 5},
                   {2, 3},
                   {2, 6},
                   {3, 5},
                   {3, 4},
                   {4, 6},
                   {4, 9},
                   {5, 8},
                   {6, 10}},
                  {{7, "x1"}, {8, "x2"}, {9, "x3"}, {10, "x4"}});
}

inline Arc sample_shortcut_arc() { return {2, 6}; }

// ---------------------------------------------------------------------------
// Octopus with nested ladders: n = 10, k = 7 (two 2-tight cores, one 3-tight
// core; the middle 2-tight ladder hangs below a pendant slot of the top one).
// Spec text: L2((x5,x6),L2(x2,x1,(x3,x4)),L3(x8,x9,x7,x10)). Displays 12
// trees (t(10,7) = 12).
//
//   top 2-tight:  spine 0,1,2,3; reticulations 5 (v1), 4 (v2)
//   mid 2-tight:  spine 7,8,9,10; reticulations 11 (v1), 12 (v2)
//   3-tight:      spine 14,15,16,17,18,19; reticulations 22,21,20 (v1,v2,v3)
//   leaves 23..32 = x1..x10
// ---------------------------------------------------------------------------
inline Network octopus_nested() {
  std::vector<Arc> arcs = {
      // top 2-tight core and its pendants
      {0, 1},
      {1, 2},
      {2, 3},
      {0, 4},
      {2, 4},
      {1, 5},
      {3, 5},
      {3, 6},
      {6, 27},
      {6, 28},
      {5, 7},
      {4, 14},
      // middle 2-tight core (below vertex 5) and its pendants
      {7, 8},
      {8, 9},
      {9, 10},
      {7, 12},
      {9, 12},
      {8, 11},
      {10, 11},
      {10, 24},
      {11, 23},
      {12, 13},
      {13, 25},
      {13, 26},
      // 3-tight core (below vertex 4) and its pendants
      {14, 15},
      {15, 16},
      {16, 17},
      {17, 18},
      {18, 19},
      {14, 20},
      {16, 20},
      {15, 21},
      {18, 21},
      {17, 22},
      {19, 22},
      {19, 30},
      {20, 32},
      {21, 29},
      {22, 31},
  };
  std::map<Vertex, std::string> labels;
  for (int i = 0; i < 10; ++i) labels[23 + i] = "x" + std::to_string(i + 1);
  return make_net(33, std::move(arcs), std::move(labels));
}

inline std::string octopus_nested_spec_text() {
  return "L2((x5,x6),L2(x2,x1,(x3,x4)),L3(x8,x9,x7,x10))";
}

// ---------------------------------------------------------------------------
// Octopus with all ladders side by side: n = 10, k = 7.
// Spec text: ((L2(x2,x1,x3),L2(x5,x4,x6)),L3(x8,x9,x7,x10)). Displays 12
// trees.
// ---------------------------------------------------------------------------
inline Network octopus_flat() {
  std::vector<Arc> arcs = {
      {0, 1},
      {0, 14},
      {1, 2},
      {1, 8},
      // first 2-tight core: spine 2,3,4,5; reticulations 6 (v1), 7 (v2)
      {2, 3},
      {3, 4},
      {4, 5},
      {2, 7},
      {4, 7},
      {3, 6},
      {5, 6},
      {5, 24},
      {6, 23},
      {7, 25},
      // second 2-tight core: spine 8,9,10,11; reticulations 12 (v1), 13 (v2)
      {8, 9},
      {9, 10},
      {10, 11},
      {8, 13},
      {10, 13},
      {9, 12},
      {11, 12},
      {11, 27},
      {12, 26},
      {13, 28},
      // 3-tight core: spine 14..19; reticulations 22,21,20 (v1,v2,v3)
      {14, 15},
      {15, 16},
      {16, 17},
      {17, 18},
      {18, 19},
      {14, 20},
      {16, 20},
      {15, 21},
      {18, 21},
      {17, 22},
      {19, 22},
      {19, 30},
      {20, 32},
      {21, 29},
      {22, 31},
  };
  std::map<Vertex, std::string> labels;
  for (int i = 0; i < 10; ++i) labels[23 + i] = "x" + std::to_string(i + 1);
  return make_net(33, std::move(arcs), std::move(labels));
}

inline std::string octopus_flat_spec_text() {
  return "((L2(x2,x1,x3),L2(x5,x4,x6)),L3(x8,x9,x7,x10))";
}

// ---------------------------------------------------------------------------
// Normal network (no shortcuts at all): n = 4, k = 2, displays exactly
// 2^2 = 4 trees, each from a single embedding.
// ---------------------------------------------------------------------------
inline Network normal_net4() {
  return make_net(11,
                  {{0, 1},
                   {0, 2},
                   {1, 3},
                   {1, 5},
                   {2, 4},
                   {2, 5},
                   {3, 7},
                   {3, 6},
                   {4, 8},
                   {4, 6},
                   {5, 9},
                   {6, 10}},
                  {{7, "x1"}, {8, "x2"}, {9, "x3"}, {10, "x4"}});
}

// ---------------------------------------------------------------------------
// The unique tree-child network with n = 2, k = 1 up to relabeling: a
// triangle. Its two embeddings give the SAME cherry, so it displays exactly
// one tree — the smallest witness that the displayed-tree bound needs
// 3-cycle-freeness.
// ---------------------------------------------------------------------------
inline Network smallest_retic_net() {
  return make_net(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}, {{3, "x1"}, {4, "x2"}});
}

// ---------------------------------------------------------------------------
// A 2-tight ladder whose biconnected component grew past the core: one extra
// reticulation (8) with parents 6 and 7 sits between the pendants of u1 and
// v1. find_tight_ladders still sees the embedded 2-tight ladder, but its core
// (7 arcs) is a strict subset of the containing component (11 arcs), and the
// network is not an octopus. n = 4, k = 3, 3-cycle-free, so the displayed
// count must exceed t(4,3) = 3 strictly.
// ---------------------------------------------------------------------------
inline Network ladder_with_rider() {
  return make_net(13,
                  {{0, 1},
                   {1, 2},
                   {2, 3},
                   {3, 6},
                   {6, 12},
                   {6, 8},
                   {8, 9},
                   {1, 4},
                   {3, 4},
                   {4, 7},
                   {7, 10},
                   {7, 8},
                   {0, 5},
                   {2, 5},
                   {5, 11}},
                  {{9, "l0"}, {10, "l1"}, {11, "l2"}, {12, "l3"}});
}

// ---------------------------------------------------------------------------
// small tree-building shorthand
// ---------------------------------------------------------------------------
inline PhyloTree leaf(const std::string& l) { return PhyloTree::single(l); }
inline PhyloTree cherry(const std::string& a, const std::string& b) {
  return PhyloTree::join(leaf(a), leaf(b));
}
inline PhyloTree jt(const PhyloTree& a, const PhyloTree& b) { return PhyloTree::join(a, b); }

inline std::vector<std::string> xlabels(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

// ---------------------------------------------------------------------------
// files
// ---------------------------------------------------------------------------
inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read test file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/tck_" + std::to_string(::getpid()) + "_" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

#ifdef TCK_FIXTURE_DIR
inline std::string fixture_path(const std::string& name) {
  return std::string(TCK_FIXTURE_DIR) + "/" + name;
}
#endif

// ---------------------------------------------------------------------------
// CLI driver (stdout+stderr merged; status is the process exit code)
// ---------------------------------------------------------------------------
#ifdef TCK_BIN
struct CliResult {
  int status = -1;
  std::string out;
};

inline CliResult run_cli(const std::string& args) {
  CliResult r;
  std::string cmd = std::string(TCK_BIN) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int rc = ::pclose(pipe);
  if (rc >= 0 && WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
  return r;
}
#endif

}  // namespace tckt

// Checks that `expr` throws tck::Error with the given code.
#define CHECK_TCK_ERROR(expr, wanted)                               \
  do {                                                              \
    bool threw_ = false;                                            \
    try {                                                           \
      (void)(expr);                                                 \
    } catch (const tck::Error& e_) {                                \
      threw_ = true;                                                \
      CHECK_MESSAGE(e_.code() == (wanted), #expr, " threw ", e_.what()); \
    }                                                               \
    CHECK_MESSAGE(threw_, #expr " did not throw");                  \
  } while (0)
