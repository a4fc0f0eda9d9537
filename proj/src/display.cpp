#include "tck/display.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

namespace tck {
namespace {

struct EmbeddingContext {
  const Network* net;
  // reticulation vertex -> index in canonical reticulation order
  std::vector<int> retic_index;
  // retic_in[i][b]: in-arcs of reticulation i, ordered by canonical tail rank
  std::vector<std::array<Arc, 2>> retic_in;

  explicit EmbeddingContext(const Network& n) : net(&n) {
    retic_index.assign(n.vertex_count(), -1);
    const auto& retics = n.reticulations();
    retic_in.resize(retics.size());
    for (std::size_t i = 0; i < retics.size(); ++i) {
      retic_index[retics[i]] = static_cast<int>(i);
      Vertex a = n.parents(retics[i])[0], b = n.parents(retics[i])[1];
      if (n.canonical_rank(a) > n.canonical_rank(b)) std::swap(a, b);
      retic_in[i] = {Arc{a, retics[i]}, Arc{b, retics[i]}};
    }
  }

  // parent chosen for each reticulation under `mask`
  std::vector<Vertex> chosen(std::uint64_t mask) const {
    std::vector<Vertex> pick(net->vertex_count(), -1);
    for (std::size_t i = 0; i < retic_in.size(); ++i)
      pick[retic_in[i][0].head] = retic_in[i][(mask >> i) & 1].tail;
    return pick;
  }
};

void check_enumerable(const Network& n, int cap) {
  if (!is_tree_child(n))
    fail(ErrorCode::NotTreeChild, "embedding enumeration is defined on tree-child networks");
  if (cap > 63) cap = 63;  // choice masks are 64-bit
  if (n.reticulation_count() > cap)
    fail(ErrorCode::TooManyReticulations,
         std::to_string(n.reticulation_count()) + " reticulations exceed the cap of " +
             std::to_string(cap));
}

// Canonical string of the tree displayed by `pick`, suppressing pass-through
// vertices on the fly. In a tree-child network every non-leaf keeps >= 1 child.
std::string embedded_canonical(const Network& n, const std::vector<Vertex>& pick, Vertex v) {
  if (n.is_leaf(v)) return std::to_string(n.label(v).size()) + ":" + n.label(v);
  std::string first, second;
  int kept = 0;
  for (Vertex c : n.children(v)) {
    if (n.is_reticulation(c) && pick[c] != v) continue;
    std::string s = embedded_canonical(n, pick, c);
    if (kept == 0)
      first = std::move(s);
    else
      second = std::move(s);
    ++kept;
  }
  assert(kept >= 1);
  if (kept == 1) return first;
  if (second < first) std::swap(first, second);
  return "(" + first + "," + second + ")";
}

}  // namespace

DisplaySummary displayed_trees(const Network& n, int cap) {
  check_enumerable(n, cap);
  EmbeddingContext ctx(n);
  const int k = n.reticulation_count();

  struct Acc {
    std::uint64_t multiplicity = 0;
    std::uint64_t example_mask = 0;
    std::array<std::uint64_t, 2> avail{0, 0};
  };
  std::map<std::string, Acc> acc;
  const std::uint64_t total = 1ull << k;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto pick = ctx.chosen(mask);
    std::string code = embedded_canonical(n, pick, n.root());
    auto [it, fresh] = acc.try_emplace(std::move(code));
    if (fresh) it->second.example_mask = mask;
    ++it->second.multiplicity;
    for (int i = 0; i < k; ++i) it->second.avail[(mask >> i) & 1] |= 1ull << i;
  }

  DisplaySummary out;
  out.reticulations = n.reticulations();
  out.embeddings = total;
  for (auto& [code, a] : acc) {
    out.trees.push_back({code, a.multiplicity, a.example_mask});
    out.avail.push_back(a.avail);
  }
  return out;
}

std::uint64_t count_displayed(const Network& n, int cap) {
  return displayed_trees(n, cap).count();
}

Embedding embedding_from_mask(const Network& n, std::uint64_t mask) {
  EmbeddingContext ctx(n);
  if (n.reticulation_count() < 64 && mask >> n.reticulation_count())
    fail(ErrorCode::OutOfRange, "choice mask has bits beyond the reticulation count");
  Embedding e;
  for (std::size_t i = 0; i < ctx.retic_in.size(); ++i)
    e.choices.emplace_back(ctx.retic_in[i][0].head, ctx.retic_in[i][(mask >> i) & 1]);
  return e;
}

std::uint64_t mask_from_embedding(const Network& n, const Embedding& e) {
  EmbeddingContext ctx(n);
  if (e.choices.size() != static_cast<std::size_t>(n.reticulation_count()))
    fail(ErrorCode::OutOfRange, "embedding must choose exactly one in-arc per reticulation");
  std::uint64_t mask = 0;
  std::vector<bool> seen(n.vertex_count(), false);
  for (const auto& [v, arc] : e.choices) {
    if (v < 0 || v >= n.vertex_count() || !n.is_reticulation(v))
      fail(ErrorCode::NotReticulation, "embedding choice at non-reticulation vertex");
    if (seen[v]) fail(ErrorCode::OutOfRange, "two choices for one reticulation");
    seen[v] = true;
    int i = ctx.retic_index[v];
    if (arc == ctx.retic_in[i][1])
      mask |= 1ull << i;
    else if (!(arc == ctx.retic_in[i][0]))
      fail(ErrorCode::UnknownArc, "chosen arc " + arc_str(arc) + " is not an in-arc of its reticulation");
  }
  return mask;
}

PhyloTree embedding_to_tree(const Network& n, const Embedding& e) {
  if (!is_tree_child(n))
    fail(ErrorCode::NotTreeChild, "embedding extraction is defined on tree-child networks");
  std::uint64_t mask = mask_from_embedding(n, e);
  EmbeddingContext ctx(n);
  auto pick = ctx.chosen(mask);
  PhyloTree out;
  std::function<int(Vertex)> rec = [&](Vertex v) -> int {
    if (n.is_leaf(v)) return out.add_leaf(n.label(v));
    int first = -1, second = -1, kept = 0;
    for (Vertex c : n.children(v)) {
      if (n.is_reticulation(c) && pick[c] != v) continue;
      int node = rec(c);
      (kept == 0 ? first : second) = node;
      ++kept;
    }
    assert(kept >= 1 && kept <= 2);
    return kept == 1 ? first : out.add_node(first, second);
  };
  out.set_root(rec(n.root()));
  return out;
}

std::vector<Embedding> embeddings_of(const Network& n, const PhyloTree& t, int cap) {
  check_enumerable(n, cap);
  if (t.leaf_labels() != n.leaf_labels())
    fail(ErrorCode::LabelMismatch, "tree and network have different leaf sets");
  EmbeddingContext ctx(n);
  const std::string target = t.canonical();
  std::vector<Embedding> out;
  const std::uint64_t total = 1ull << n.reticulation_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto pick = ctx.chosen(mask);
    if (embedded_canonical(n, pick, n.root()) == target) out.push_back(embedding_from_mask(n, mask));
  }
  return out;
}

bool is_non_essential(const Network& n, Arc e, int cap) {
  if (!n.has_arc(e)) fail(ErrorCode::UnknownArc, "no arc " + arc_str(e));
  if (!n.is_reticulation(e.head)) return false;  // tree arcs appear in every embedding
  DisplaySummary summary = displayed_trees(n, cap);
  EmbeddingContext ctx(n);
  int i = ctx.retic_index[e.head];
  int b = ctx.retic_in[i][0] == e ? 0 : 1;
  for (const auto& avail : summary.avail)
    if (!(avail[1 - b] >> i & 1)) return false;  // some tree needs e
  return true;
}

std::vector<Arc> non_essential_arcs(const Network& n, int cap) {
  DisplaySummary summary = displayed_trees(n, cap);
  EmbeddingContext ctx(n);
  std::vector<Arc> out;
  for (const Arc& e : n.arcs()) {
    if (!n.is_reticulation(e.head)) continue;
    int i = ctx.retic_index[e.head];
    int b = ctx.retic_in[i][0] == e ? 0 : 1;
    bool avoidable = true;
    for (const auto& avail : summary.avail)
      if (!(avail[1 - b] >> i & 1)) {
        avoidable = false;
        break;
      }
    if (avoidable) out.push_back(e);
  }
  return out;
}

}  // namespace tck
