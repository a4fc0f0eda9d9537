#include "tck/enewick.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

namespace tck {
namespace {

bool name_char(char c) {
  switch (c) {
    case '(':
    case ')':
    case ',':
    case ':':
    case ';':
    case '#':
      return false;
    default:
      return !std::isspace(static_cast<unsigned char>(c));
  }
}

struct EnwkParser {
  const std::string& text;
  std::size_t pos = 0;
  RawGraph g;
  std::map<int, Vertex> hybrid_vertex;
  std::map<int, int> definitions, references;
  std::map<std::string, Vertex> names;

  explicit EnwkParser(const std::string& t) : text(t) {}

  [[noreturn]] void err(const std::string& msg) const {
    int line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i)
      if (text[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    fail(ErrorCode::SyntaxError, msg + " at line " + std::to_string(line) + ", column " +
                                     std::to_string(pos - line_start + 1));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c) err(std::string("expected '") + c + "'");
    ++pos;
  }
  Vertex fresh() { return g.vertex_count++; }

  std::string name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && name_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }

  // branch lengths are accepted and discarded
  void maybe_length() {
    if (peek() != ':') return;
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '.' || text[pos] == '-' || text[pos] == '+' ||
                                 text[pos] == 'e' || text[pos] == 'E'))
      ++pos;
    if (pos == start) err("expected a branch length after ':'");
  }

  int hybrid_tag() {
    expect('#');
    if (pos >= text.size() || text[pos] != 'H') err("expected 'H' after '#'");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) err("expected a number after '#H'");
    return std::stoi(text.substr(start, pos - start));
  }

  Vertex hybrid(int tag) {
    auto it = hybrid_vertex.find(tag);
    if (it != hybrid_vertex.end()) return it->second;
    Vertex v = fresh();
    hybrid_vertex.emplace(tag, v);
    return v;
  }

  Vertex node() {
    char c = peek();
    if (c == '(') {
      ++pos;
      std::vector<Vertex> kids;
      kids.push_back(node());
      while (peek() == ',') {
        ++pos;
        kids.push_back(node());
      }
      expect(')');
      if (peek() == '#') {  // hybrid definition: the tagged vertex owns the subtree
        int tag = hybrid_tag();
        if (kids.size() != 1) err("a hybrid definition must wrap exactly one subtree");
        Vertex h = hybrid(tag);
        ++definitions[tag];
        if (definitions[tag] == 1) g.arcs.push_back({h, kids[0]});
        maybe_length();
        return h;
      }
      if (pos < text.size() && name_char(text[pos])) err("internal labels are not supported");
      if (kids.size() != 2) err("internal vertices must have exactly two children");
      Vertex v = fresh();
      g.arcs.push_back({v, kids[0]});
      g.arcs.push_back({v, kids[1]});
      maybe_length();
      return v;
    }
    if (c == '#') {  // bare hybrid reference
      int tag = hybrid_tag();
      ++references[tag];
      maybe_length();
      return hybrid(tag);
    }
    std::string nm = name();
    if (nm.empty()) err("expected a subtree");
    Vertex v = fresh();
    g.leaf_labels[v] = nm;
    names[nm] = v;
    maybe_length();
    return v;
  }

  Vertex parse() {
    Vertex root = node();
    expect(';');
    if (peek() != '\0') err("trailing characters after ';'");
    for (const auto& [tag, v] : hybrid_vertex) {
      (void)v;
      int defs = definitions.count(tag) ? definitions.at(tag) : 0;
      int refs = references.count(tag) ? references.at(tag) : 0;
      if (defs != 1 || refs != 1)
        fail(ErrorCode::TagArityError,
             "#H" + std::to_string(tag) + " needs exactly one definition and one reference (got " +
                 std::to_string(defs) + " and " + std::to_string(refs) + ")");
      names["#H" + std::to_string(tag)] = hybrid_vertex.at(tag);
    }
    return root;
  }
};

void check_serializable(const Network& n) {
  for (const std::string& label : n.leaf_labels())
    for (char c : label)
      if (!name_char(c))
        fail(ErrorCode::SyntaxError, "leaf label '" + label + "' contains a delimiter character");
}

}  // namespace

ParsedNetwork parse_enewick_named(const std::string& text) {
  EnwkParser parser(text);
  parser.parse();
  ParsedNetwork out{Network::validate(parser.g), std::move(parser.names)};
  // stable addresses for internal vertices: canonical rank
  std::map<std::string, Vertex> renumbered;
  for (auto& [name, v] : out.names) renumbered[name] = v;
  for (Vertex v = 0; v < out.net.vertex_count(); ++v)
    renumbered["@" + std::to_string(out.net.canonical_rank(v))] = v;
  out.names = std::move(renumbered);
  return out;
}

Network parse_enewick(const std::string& text) { return parse_enewick_named(text).net; }

std::string serialize_enewick(const Network& n) {
  check_serializable(n);
  std::map<Vertex, int> tag;
  const std::vector<Vertex>& retics = n.reticulations();
  for (std::size_t i = 0; i < retics.size(); ++i) tag[retics[i]] = static_cast<int>(i) + 1;

  std::set<Vertex> defined;
  std::function<std::string(Vertex)> rec = [&](Vertex v) -> std::string {
    if (n.is_leaf(v)) return n.label(v);
    if (n.is_reticulation(v)) {
      if (!defined.insert(v).second) return "#H" + std::to_string(tag.at(v));
      return "(" + rec(n.children(v)[0]) + ")#H" + std::to_string(tag.at(v));
    }
    std::vector<Vertex> kids = n.children(v);
    std::sort(kids.begin(), kids.end(),
              [&](Vertex a, Vertex b) { return n.canonical_rank(a) < n.canonical_rank(b); });
    return "(" + rec(kids[0]) + "," + rec(kids[1]) + ")";
  };
  return rec(n.root()) + ";";
}

}  // namespace tck
