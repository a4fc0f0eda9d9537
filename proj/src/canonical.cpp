#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tck/network.hpp"

namespace tck::detail {
namespace {

using Key = std::vector<std::int64_t>;

struct Ctx {
  int nv;
  const std::vector<std::vector<Vertex>>* children;
  const std::vector<std::vector<Vertex>>* parents;
  const std::vector<VertexRole>* roles;
  const std::vector<std::string>* labels;
  std::vector<int> label_rank;  // vertex -> rank in sorted label order, -1 internal
  std::vector<std::string> sorted_labels;
  std::uint64_t budget = 1'000'000;  // discrete-coloring visits
};

// Splits color classes until stable. Colors stay dense 0..classes-1 and only
// ever split (the previous color is the first key component).
int refine(const Ctx& ctx, std::vector<int>& colors) {
  int classes = 0;
  for (int c : colors) classes = std::max(classes, c + 1);
  for (;;) {
    std::vector<Key> keys(ctx.nv);
    for (Vertex v = 0; v < ctx.nv; ++v) {
      Key& k = keys[v];
      k.push_back(colors[v]);
      Key cc;
      for (Vertex c : (*ctx.children)[v]) cc.push_back(colors[c]);
      std::sort(cc.begin(), cc.end());
      k.insert(k.end(), cc.begin(), cc.end());
      k.push_back(-1);
      Key pc;
      for (Vertex p : (*ctx.parents)[v]) pc.push_back(colors[p]);
      std::sort(pc.begin(), pc.end());
      k.insert(k.end(), pc.begin(), pc.end());
    }
    std::vector<int> order(ctx.nv);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    int next = 0;
    std::vector<int> fresh(ctx.nv);
    for (int i = 0; i < ctx.nv; ++i) {
      if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++next;
      fresh[order[i]] = next;
    }
    ++next;
    if (next == classes) return classes;
    colors = std::move(fresh);
    classes = next;
  }
}

std::string emit(const Ctx& ctx, const std::vector<int>& rank) {
  std::vector<Vertex> by_rank(ctx.nv);
  for (Vertex v = 0; v < ctx.nv; ++v) by_rank[rank[v]] = v;
  std::string code = "v" + std::to_string(ctx.nv) + ";";
  for (Vertex v : by_rank) {
    switch ((*ctx.roles)[v]) {
      case VertexRole::Root: code += 'R'; break;
      case VertexRole::Tree: code += 't'; break;
      case VertexRole::Reticulation: code += 'h'; break;
      case VertexRole::Leaf: code += 'x'; break;
    }
  }
  code += ';';
  bool first = true;
  for (int r = 0; r < ctx.nv; ++r) {
    Vertex v = by_rank[r];
    if ((*ctx.roles)[v] != VertexRole::Leaf) continue;
    if (!first) code += ',';
    first = false;
    const std::string& name = (*ctx.labels)[v];
    code += std::to_string(r) + "=" + std::to_string(name.size()) + ":" + name;
  }
  code += ';';
  std::vector<Arc> ranked;
  for (Vertex v = 0; v < ctx.nv; ++v)
    for (Vertex c : (*ctx.children)[v]) ranked.push_back({rank[v], rank[c]});
  std::sort(ranked.begin(), ranked.end());
  first = true;
  for (const Arc& a : ranked) {
    if (!first) code += ',';
    first = false;
    code += std::to_string(a.tail) + ">" + std::to_string(a.head);
  }
  return code;
}

void search(Ctx& ctx, std::vector<int> colors, std::string& best_code, std::vector<int>& best_rank) {
  int classes = refine(ctx, colors);
  if (classes == ctx.nv) {
    if (ctx.budget == 0)
      fail(ErrorCode::ScaleExceeded, "canonicalization search budget exhausted");
    --ctx.budget;
    std::string code = emit(ctx, colors);
    if (best_code.empty() || code < best_code) {
      best_code = std::move(code);
      best_rank = colors;
    }
    return;
  }
  // first (smallest color) non-singleton class; individualize each member
  std::vector<int> size(classes, 0);
  for (int c : colors) ++size[c];
  int target = 0;
  while (size[target] < 2) ++target;
  for (Vertex v = 0; v < ctx.nv; ++v) {
    if (colors[v] != target) continue;
    std::vector<int> branched = colors;
    branched[v] = classes;  // fresh color
    search(ctx, std::move(branched), best_code, best_rank);
  }
}

}  // namespace

CanonicalForm canonical_form(int vertex_count, const std::vector<std::vector<Vertex>>& children,
                             const std::vector<std::vector<Vertex>>& parents,
                             const std::vector<VertexRole>& roles,
                             const std::vector<std::string>& labels) {
  Ctx ctx;
  ctx.nv = vertex_count;
  ctx.children = &children;
  ctx.parents = &parents;
  ctx.roles = &roles;
  ctx.labels = &labels;

  for (Vertex v = 0; v < vertex_count; ++v)
    if (roles[v] == VertexRole::Leaf) ctx.sorted_labels.push_back(labels[v]);
  std::sort(ctx.sorted_labels.begin(), ctx.sorted_labels.end());
  ctx.label_rank.assign(vertex_count, -1);
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (roles[v] != VertexRole::Leaf) continue;
    ctx.label_rank[v] = static_cast<int>(
        std::lower_bound(ctx.sorted_labels.begin(), ctx.sorted_labels.end(), labels[v]) -
        ctx.sorted_labels.begin());
  }

  // reachable-leaf signature, upward propagation in reverse topological order
  int words = (static_cast<int>(ctx.sorted_labels.size()) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reach(vertex_count,
                                                std::vector<std::uint64_t>(std::max(words, 1), 0));
  {
    std::vector<int> remaining(vertex_count);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < vertex_count; ++v) {
      remaining[v] = static_cast<int>(children[v].size());
      if (remaining[v] == 0) {
        reach[v][ctx.label_rank[v] / 64] |= 1ull << (ctx.label_rank[v] % 64);
        queue.push_back(v);
      }
    }
    std::size_t head = 0;
    while (head < queue.size()) {
      Vertex v = queue[head++];
      for (Vertex p : parents[v]) {
        for (int w = 0; w < words; ++w) reach[p][w] |= reach[v][w];
        if (--remaining[p] == 0) queue.push_back(p);
      }
    }
  }

  // initial coloring: role, label rank, degrees, reach signature
  std::vector<Key> keys(vertex_count);
  for (Vertex v = 0; v < vertex_count; ++v) {
    Key& k = keys[v];
    k.push_back(static_cast<std::int64_t>(roles[v]));
    k.push_back(ctx.label_rank[v]);
    k.push_back(static_cast<std::int64_t>(parents[v].size()));
    k.push_back(static_cast<std::int64_t>(children[v].size()));
    for (int w = 0; w < words; ++w) k.push_back(static_cast<std::int64_t>(reach[v][w]));
  }
  std::vector<int> order(vertex_count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> colors(vertex_count);
  int next = 0;
  for (int i = 0; i < vertex_count; ++i) {
    if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++next;
    colors[order[i]] = next;
  }

  CanonicalForm out;
  search(ctx, std::move(colors), out.code, out.rank);
  assert(!out.code.empty());
  return out;
}

}  // namespace tck::detail
