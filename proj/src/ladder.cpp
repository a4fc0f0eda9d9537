#include "tck/ladder.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>

namespace tck {
namespace {

// arc-set view used both for whole networks (subgraph search) and for single
// biconnected components (exact-cover matching)
struct ArcView {
  std::vector<Arc> arcs;  // sorted
  std::map<Vertex, std::vector<Vertex>> parents;

  explicit ArcView(std::vector<Arc> list) : arcs(std::move(list)) {
    std::sort(arcs.begin(), arcs.end());
    for (const Arc& a : arcs) parents[a.head].push_back(a.tail);
  }
  bool has(Vertex t, Vertex h) const {
    return std::binary_search(arcs.begin(), arcs.end(), Arc{t, h});
  }
  std::vector<Vertex> in2() const {  // vertices of in-degree exactly 2
    std::vector<Vertex> out;
    for (const auto& [v, ps] : parents)
      if (ps.size() == 2) out.push_back(v);
    return out;
  }
};

LadderEmbed make_embed_2(Vertex u2p, Vertex u1p, Vertex u2, Vertex u1, Vertex r1, Vertex r2) {
  LadderEmbed e;
  e.order = 2;
  e.spine = {u2p, u1p, u2, u1};
  e.retics = {r1, r2};
  e.rungs = {{u1, r1}, {u2, r2}, {u1p, r1}, {u2p, r2}};
  e.core_arcs = {{u2p, u1p}, {u1p, u2}, {u2, u1}};
  e.core_arcs.insert(e.core_arcs.end(), e.rungs.begin(), e.rungs.end());
  std::sort(e.core_arcs.begin(), e.core_arcs.end());
  return e;
}

LadderEmbed make_embed_3(Vertex u3p, Vertex u2p, Vertex u3, Vertex u1p, Vertex u2, Vertex u1,
                         Vertex r1, Vertex r2, Vertex r3) {
  LadderEmbed e;
  e.order = 3;
  e.spine = {u3p, u2p, u3, u1p, u2, u1};
  e.retics = {r1, r2, r3};
  e.rungs = {{u1, r1}, {u2, r2}, {u1p, r1}, {u3, r3}, {u2p, r2}, {u3p, r3}};
  e.core_arcs = {{u3p, u2p}, {u2p, u3}, {u3, u1p}, {u1p, u2}, {u2, u1}};
  e.core_arcs.insert(e.core_arcs.end(), e.rungs.begin(), e.rungs.end());
  std::sort(e.core_arcs.begin(), e.core_arcs.end());
  return e;
}

bool all_distinct(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

// Every k-tight ladder whose arcs all lie in `view`; with exact_cover, only
// matches using every arc of the view (and its full vertex set) survive.
std::vector<LadderEmbed> search_ladders(const ArcView& view, bool exact_cover) {
  std::vector<LadderEmbed> found;
  std::vector<Vertex> candidates = view.in2();
  auto parent_pairs = [&](Vertex r) {
    const auto& ps = view.parents.at(r);
    return std::array<std::pair<Vertex, Vertex>, 2>{
        std::make_pair(ps[0], ps[1]), std::make_pair(ps[1], ps[0])};
  };
  auto accept = [&](LadderEmbed&& e) {
    if (exact_cover && e.core_arcs != view.arcs) return;
    found.push_back(std::move(e));
  };

  for (Vertex r1 : candidates)
    for (Vertex r2 : candidates) {
      if (r1 == r2) continue;
      for (auto [u1p, u1] : parent_pairs(r1))
        for (auto [u2p, u2] : parent_pairs(r2)) {
          if (!all_distinct({u2p, u1p, u2, u1, r1, r2})) continue;
          if (view.has(u2p, u1p) && view.has(u1p, u2) && view.has(u2, u1))
            accept(make_embed_2(u2p, u1p, u2, u1, r1, r2));
        }
      for (Vertex r3 : candidates) {
        if (r3 == r1 || r3 == r2) continue;
        for (auto [u1p, u1] : parent_pairs(r1))
          for (auto [u2p, u2] : parent_pairs(r2))
            for (auto [u3p, u3] : parent_pairs(r3)) {
              if (!all_distinct({u3p, u2p, u3, u1p, u2, u1, r1, r2, r3})) continue;
              if (view.has(u3p, u2p) && view.has(u2p, u3) && view.has(u3, u1p) &&
                  view.has(u1p, u2) && view.has(u2, u1))
                accept(make_embed_3(u3p, u2p, u3, u1p, u2, u1, r1, r2, r3));
            }
      }
    }
  return found;
}

}  // namespace

BuiltLadder build_tight_ladder(int order, const std::vector<std::string>& labels) {
  if (order != 2 && order != 3) fail(ErrorCode::BadOrder, "ladder order must be 2 or 3");
  if (static_cast<int>(labels.size()) != order + 1)
    fail(ErrorCode::TooFewLabels, "a " + std::to_string(order) + "-tight ladder needs " +
                                      std::to_string(order + 1) + " labels");
  RawGraph g;
  LadderEmbed embed;
  if (order == 2) {
    // 0=u'2 1=u'1 2=u2 3=u1 4=v1 5=v2, leaves 6..8
    g.vertex_count = 9;
    g.arcs = {{0, 1}, {1, 2}, {2, 3}, {3, 6}, {1, 4}, {3, 4}, {4, 7}, {0, 5}, {2, 5}, {5, 8}};
    for (int i = 0; i < 3; ++i) g.leaf_labels[6 + i] = labels[i];
    embed = make_embed_2(0, 1, 2, 3, 4, 5);
  } else {
    // 0=u'3 1=u'2 2=u3 3=u'1 4=u2 5=u1 6=v1 7=v2 8=v3, leaves 9..12
    g.vertex_count = 13;
    g.arcs = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 9},  {3, 6}, {5, 6},
              {6, 10}, {1, 7}, {4, 7}, {7, 11}, {0, 8}, {2, 8}, {8, 12}};
    for (int i = 0; i < 4; ++i) g.leaf_labels[9 + i] = labels[i];
    embed = make_embed_3(0, 1, 2, 3, 4, 5, 6, 7, 8);
  }
  BuiltLadder out{Network::validate(g), std::move(embed)};
  assert(is_tree_child(out.net));
  return out;
}

std::optional<LadderEmbed> ladder_core_match(const Network& n, const BiconnectedComponent& comp) {
  (void)n;
  if (comp.arcs.size() != 7 && comp.arcs.size() != 11) return std::nullopt;
  ArcView view(comp.arcs);
  auto found = search_ladders(view, /*exact_cover=*/true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<LadderEmbed> find_tight_ladders(const Network& n) {
  return search_ladders(ArcView(n.arcs()), /*exact_cover=*/false);
}

// ==== octopuses ====

OctopusCheck is_octopus(const Network& n) {
  if (!is_tree_child(n)) fail(ErrorCode::NotTreeChild, "octopus recognition needs a tree-child network");
  if (n.reticulation_count() == 1)
    fail(ErrorCode::KIsOne, "octopuses are defined for k != 1");
  OctopusCheck check;
  check.vacuous = n.reticulation_count() == 0;
  for (const auto& comp : biconnected_components(n)) {
    if (comp.trivial()) continue;
    auto embed = ladder_core_match(n, comp);
    if (!embed)
      ++check.unmatched_components;
    else if (embed->order == 2)
      ++check.order2_components;
    else
      ++check.order3_components;
  }
  bool parity_ok = n.reticulation_count() % 2 == 0 ? check.order3_components == 0
                                                   : check.order3_components == 1;
  check.value = check.unmatched_components == 0 && parity_ok;
  if (check.value)
    assert(2 * check.order2_components + 3 * check.order3_components == n.reticulation_count());
  return check;
}

int spec_leaves(const OctopusSpec::Pend& p) {
  switch (p.kind) {
    case OctopusSpec::Kind::Leaf: return 1;
    default: {
      int total = 0;
      for (const auto& part : p.parts) total += spec_leaves(*part);
      return total;
    }
  }
}

int spec_retics(const OctopusSpec::Pend& p) {
  int total = p.kind == OctopusSpec::Kind::Ladder2 ? 2
              : p.kind == OctopusSpec::Kind::Ladder3 ? 3
                                                     : 0;
  for (const auto& part : p.parts) total += spec_retics(*part);
  return total;
}

int OctopusSpec::leaf_total() const { return top ? spec_leaves(*top) : 0; }
int OctopusSpec::reticulation_total() const { return top ? spec_retics(*top) : 0; }

namespace {

struct SpecParser {
  const std::string& text;
  std::size_t pos = 0;

  explicit SpecParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      fail(ErrorCode::SyntaxError, std::string("expected '") + c + "' at offset " + std::to_string(pos));
    ++pos;
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c))) break;
      ++pos;
    }
    if (pos == start) fail(ErrorCode::SyntaxError, "expected a name at offset " + std::to_string(pos));
    return text.substr(start, pos - start);
  }

  std::unique_ptr<OctopusSpec::Pend> pend() {
    auto out = std::make_unique<OctopusSpec::Pend>();
    if (peek() == '(') {
      expect('(');
      out->kind = OctopusSpec::Kind::Node;
      out->parts.push_back(pend());
      expect(',');
      out->parts.push_back(pend());
      expect(')');
      return out;
    }
    std::string id = name();
    if ((id == "L2" || id == "L3") && peek() == '(') {
      out->kind = id == "L2" ? OctopusSpec::Kind::Ladder2 : OctopusSpec::Kind::Ladder3;
      int slots = id == "L2" ? 3 : 4;
      expect('(');
      for (int i = 0; i < slots; ++i) {
        if (i > 0) expect(',');
        out->parts.push_back(pend());
      }
      expect(')');
      return out;
    }
    out->kind = OctopusSpec::Kind::Leaf;
    out->label = std::move(id);
    return out;
  }
};

void collect_labels(const OctopusSpec::Pend& p, std::vector<std::string>& out) {
  if (p.kind == OctopusSpec::Kind::Leaf) out.push_back(p.label);
  for (const auto& part : p.parts) collect_labels(*part, out);
}

int count_ladder3(const OctopusSpec::Pend& p) {
  int total = p.kind == OctopusSpec::Kind::Ladder3 ? 1 : 0;
  for (const auto& part : p.parts) total += count_ladder3(*part);
  return total;
}

void check_spec(const OctopusSpec& spec) {
  if (!spec.top) fail(ErrorCode::SpecInconsistent, "empty spec");
  std::vector<std::string> labels;
  collect_labels(*spec.top, labels);
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    fail(ErrorCode::SpecInconsistent,
         "label '" + *std::adjacent_find(labels.begin(), labels.end()) + "' used twice");
  int l3 = count_ladder3(*spec.top);
  if (l3 > 1)
    fail(ErrorCode::SpecInconsistent,
         std::to_string(l3) + " 3-tight ladders; an octopus admits at most one");
  assert(spec.reticulation_total() != 1);
}

}  // namespace

OctopusSpec parse_octopus_spec(const std::string& text) {
  SpecParser parser(text);
  OctopusSpec spec;
  spec.top = parser.pend();
  if (parser.peek() != '\0')
    fail(ErrorCode::SyntaxError, "trailing characters at offset " + std::to_string(parser.pos));
  check_spec(spec);
  return spec;
}

std::string format_octopus_spec(const OctopusSpec& spec) {
  std::function<std::string(const OctopusSpec::Pend&)> rec =
      [&](const OctopusSpec::Pend& p) -> std::string {
    switch (p.kind) {
      case OctopusSpec::Kind::Leaf: return p.label;
      case OctopusSpec::Kind::Node: return "(" + rec(*p.parts[0]) + "," + rec(*p.parts[1]) + ")";
      case OctopusSpec::Kind::Ladder2:
        return "L2(" + rec(*p.parts[0]) + "," + rec(*p.parts[1]) + "," + rec(*p.parts[2]) + ")";
      case OctopusSpec::Kind::Ladder3:
        return "L3(" + rec(*p.parts[0]) + "," + rec(*p.parts[1]) + "," + rec(*p.parts[2]) + "," +
               rec(*p.parts[3]) + ")";
    }
    return "";
  };
  return spec.top ? rec(*spec.top) : "";
}

Network build_octopus(const OctopusSpec& spec) {
  check_spec(spec);
  RawGraph g;
  auto fresh = [&] { return g.vertex_count++; };
  std::function<Vertex(const OctopusSpec::Pend&)> build =
      [&](const OctopusSpec::Pend& p) -> Vertex {
    switch (p.kind) {
      case OctopusSpec::Kind::Leaf: {
        Vertex v = fresh();
        g.leaf_labels[v] = p.label;
        return v;
      }
      case OctopusSpec::Kind::Node: {
        Vertex v = fresh();
        g.arcs.push_back({v, build(*p.parts[0])});
        g.arcs.push_back({v, build(*p.parts[1])});
        return v;
      }
      case OctopusSpec::Kind::Ladder2: {
        Vertex u2p = fresh(), u1p = fresh(), u2 = fresh(), u1 = fresh(), v1 = fresh(), v2 = fresh();
        for (Arc a : {Arc{u2p, u1p}, Arc{u1p, u2}, Arc{u2, u1}, Arc{u1p, v1}, Arc{u1, v1},
                      Arc{u2p, v2}, Arc{u2, v2}})
          g.arcs.push_back(a);
        g.arcs.push_back({u1, build(*p.parts[0])});
        g.arcs.push_back({v1, build(*p.parts[1])});
        g.arcs.push_back({v2, build(*p.parts[2])});
        return u2p;
      }
      case OctopusSpec::Kind::Ladder3: {
        Vertex u3p = fresh(), u2p = fresh(), u3 = fresh(), u1p = fresh(), u2 = fresh(),
               u1 = fresh(), v1 = fresh(), v2 = fresh(), v3 = fresh();
        for (Arc a : {Arc{u3p, u2p}, Arc{u2p, u3}, Arc{u3, u1p}, Arc{u1p, u2}, Arc{u2, u1},
                      Arc{u1p, v1}, Arc{u1, v1}, Arc{u2p, v2}, Arc{u2, v2}, Arc{u3p, v3},
                      Arc{u3, v3}})
          g.arcs.push_back(a);
        g.arcs.push_back({u1, build(*p.parts[0])});
        g.arcs.push_back({v1, build(*p.parts[1])});
        g.arcs.push_back({v2, build(*p.parts[2])});
        g.arcs.push_back({v3, build(*p.parts[3])});
        return u3p;
      }
    }
    fail(ErrorCode::InternalAssertionFailed, "unreachable");
  };
  build(*spec.top);
  Network net = Network::validate(g);
  if (!is_tree_child(net) || has_3cycle(net))
    fail(ErrorCode::InternalAssertionFailed, "built octopus is malformed");
  if (net.reticulation_count() != 1) {
    OctopusCheck check = is_octopus(net);
    if (!check.value) fail(ErrorCode::InternalAssertionFailed, "built network is not an octopus");
  }
  return net;
}

std::optional<OctopusSpec> extract_octopus_spec(const Network& n) {
  if (n.reticulation_count() == 1) return std::nullopt;
  OctopusCheck check = is_octopus(n);
  if (!check.value) return std::nullopt;

  // map each core's top vertex to its embedding
  std::map<Vertex, LadderEmbed> tops;
  for (const auto& comp : biconnected_components(n)) {
    if (comp.trivial()) continue;
    auto embed = ladder_core_match(n, comp);
    assert(embed);
    tops.emplace(embed->spine.front(), std::move(*embed));
  }

  auto slot_child = [&](Vertex holder, Vertex skip) -> Vertex {
    for (Vertex c : n.children(holder))
      if (c != skip) return c;
    fail(ErrorCode::InternalAssertionFailed, "pendant slot without child");
  };

  std::function<std::unique_ptr<OctopusSpec::Pend>(Vertex)> pend_of =
      [&](Vertex v) -> std::unique_ptr<OctopusSpec::Pend> {
    auto out = std::make_unique<OctopusSpec::Pend>();
    if (n.is_leaf(v)) {
      out->kind = OctopusSpec::Kind::Leaf;
      out->label = n.label(v);
      return out;
    }
    auto top = tops.find(v);
    if (top != tops.end()) {
      const LadderEmbed& e = top->second;
      out->kind = e.order == 2 ? OctopusSpec::Kind::Ladder2 : OctopusSpec::Kind::Ladder3;
      Vertex u1 = e.spine.back();
      out->parts.push_back(pend_of(slot_child(u1, e.retics[0])));
      for (Vertex r : e.retics) out->parts.push_back(pend_of(n.children(r)[0]));
      return out;
    }
    // plain tree vertex outside every core
    out->kind = OctopusSpec::Kind::Node;
    Vertex a = n.children(v)[0], b = n.children(v)[1];
    if (n.canonical_rank(a) > n.canonical_rank(b)) std::swap(a, b);
    out->parts.push_back(pend_of(a));
    out->parts.push_back(pend_of(b));
    return out;
  };

  OctopusSpec spec;
  spec.top = pend_of(n.root());
  check_spec(spec);
  return spec;
}

}  // namespace tck
