#include "tck/edgelist.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace tck {
namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

ParsedNetwork parse_edgelist_named(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  RawGraph g;
  std::map<std::string, Vertex> id_of;
  auto vertex_for = [&](const std::string& name) {
    auto it = id_of.find(name);
    if (it != id_of.end()) return it->second;
    Vertex v = g.vertex_count++;
    id_of.emplace(name, v);
    return v;
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> toks = tokens_of(line);
    if (toks.empty()) continue;
    if (!header_seen) {
      if (toks[0] != "leaves:")
        fail(ErrorCode::SyntaxError,
             "line " + std::to_string(line_no) + ": expected a 'leaves:' header first");
      header_seen = true;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (id_of.count(toks[i]))
          fail(ErrorCode::DuplicateLabel,
               "line " + std::to_string(line_no) + ": leaf '" + toks[i] + "' listed twice");
        g.leaf_labels[vertex_for(toks[i])] = toks[i];
      }
      continue;
    }
    if (toks.size() != 2)
      fail(ErrorCode::SyntaxError,
           "line " + std::to_string(line_no) + ": expected exactly 'tail head'");
    Vertex tail = vertex_for(toks[0]);
    Vertex head = vertex_for(toks[1]);
    g.arcs.push_back({tail, head});
  }
  if (!header_seen) fail(ErrorCode::SyntaxError, "empty input: missing 'leaves:' header");

  ParsedNetwork out{Network::validate(g), std::move(id_of)};
  std::map<std::string, Vertex> names = std::move(out.names);
  for (Vertex v = 0; v < out.net.vertex_count(); ++v)
    names["@" + std::to_string(out.net.canonical_rank(v))] = v;
  out.names = std::move(names);
  return out;
}

Network parse_edgelist(const std::string& text) { return parse_edgelist_named(text).net; }

std::string serialize_edgelist(const Network& n) {
  for (const std::string& label : n.leaf_labels())
    for (char c : label)
      if (std::isspace(static_cast<unsigned char>(c)))
        fail(ErrorCode::SyntaxError, "leaf label '" + label + "' contains whitespace");
  const std::vector<std::string> labels = n.leaf_labels();
  std::set<std::string> taken(labels.begin(), labels.end());
  std::map<Vertex, std::string> name;
  for (Vertex v = 0; v < n.vertex_count(); ++v) {
    if (n.is_leaf(v)) {
      name[v] = n.label(v);
      continue;
    }
    std::string candidate = "n" + std::to_string(n.canonical_rank(v));
    while (taken.count(candidate)) candidate = "_" + candidate;
    taken.insert(candidate);
    name[v] = candidate;
  }

  std::ostringstream os;
  os << "leaves:";
  for (const std::string& label : n.leaf_labels()) os << ' ' << label;
  os << '\n';
  std::vector<Arc> arcs = n.arcs();
  std::sort(arcs.begin(), arcs.end(), [&](const Arc& a, const Arc& b) {
    return std::make_pair(n.canonical_rank(a.tail), n.canonical_rank(a.head)) <
           std::make_pair(n.canonical_rank(b.tail), n.canonical_rank(b.head));
  });
  for (const Arc& a : arcs) os << name[a.tail] << ' ' << name[a.head] << '\n';
  return os.str();
}

}  // namespace tck
