// tck — a toolkit for rooted binary tree-child phylogenetic networks.
//
// Subcommands: validate, count, enumerate, delete-arc, nonessential,
// octopus build/check, bound, census, ladder. See README.md for formats.
//
// Exit codes: 0 success; 1 usage; 2 parse/validation failure; 3 scale budget
// exceeded; 4 census found a theorem violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
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

namespace {

using nlohmann::ordered_json;
using namespace tck;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::SyntaxError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::SyntaxError, "cannot write '" + path + "'");
  out << content;
}

bool looks_like_edgelist(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  return text.compare(i, 7, "leaves:") == 0;
}

ParsedNetwork load_network(const std::string& path) {
  std::string text = read_file(path);
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".edl")) return parse_edgelist_named(text);
  if (ends_with(".enwk")) return parse_enewick_named(text);
  return looks_like_edgelist(text) ? parse_edgelist_named(text) : parse_enewick_named(text);
}

// display name for a vertex: its label if a leaf, otherwise @<canonical rank>
std::string vertex_name(const Network& n, Vertex v) {
  if (n.is_leaf(v)) return n.label(v);
  return "@" + std::to_string(n.canonical_rank(v));
}

std::string serialize_for(const Network& n, const std::string& out_path) {
  if (out_path.size() >= 4 && out_path.compare(out_path.size() - 4, 4, ".edl") == 0)
    return serialize_edgelist(n);
  return serialize_enewick(n);
}

void emit(const ordered_json& payload, bool json, const std::string& human) {
  if (json)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << human;
}

std::string newick_of_mask(const Network& n, std::uint64_t mask) {
  return tree_newick(embedding_to_tree(n, embedding_from_mask(n, mask)));
}

int run_validate(const std::string& file, bool json) {
  ParsedNetwork pn = load_network(file);
  const Network& n = pn.net;
  bool tc = is_tree_child(n);
  bool no3 = !has_3cycle(n);
  bool normal = tc && is_normal_network(n);
  ordered_json out;
  out["valid"] = true;
  out["vertices"] = n.vertex_count();
  out["arcs"] = n.arc_count();
  out["leaves"] = n.leaf_count();
  out["reticulations"] = n.reticulation_count();
  out["tree_child"] = tc;
  out["three_cycle_free"] = no3;
  out["normal"] = normal;
  out["canonical_code"] = n.canonical_code();
  std::ostringstream human;
  human << "valid: yes\n"
        << "vertices: " << n.vertex_count() << "\narcs: " << n.arc_count()
        << "\nleaves: " << n.leaf_count() << "\nreticulations: " << n.reticulation_count()
        << "\ntree-child: " << (tc ? "yes" : "no") << "\n3-cycle-free: " << (no3 ? "yes" : "no")
        << "\nnormal: " << (normal ? "yes" : "no") << "\n";
  emit(out, json, human.str());
  return 0;
}

int run_count(const std::string& file, int cap, bool multiplicities, bool json) {
  Network n = load_network(file).net;
  ordered_json out;
  std::ostringstream human;
  if (!multiplicities) {
    std::int64_t count = count_displayed(n, cap);
    out["count"] = count;
    human << count << "\n";
  } else {
    DisplaySummary summary = displayed_trees(n, cap);
    out["count"] = summary.count();
    out["embeddings"] = summary.embeddings;
    ordered_json trees = ordered_json::array();
    for (const DisplayedTree& t : summary.trees) {
      std::string nwk = newick_of_mask(n, t.example_mask);
      ordered_json row;
      row["newick"] = nwk;
      row["multiplicity"] = t.multiplicity;
      trees.push_back(std::move(row));
      human << t.multiplicity << "\t" << nwk << "\n";
    }
    out["trees"] = std::move(trees);
  }
  emit(out, json, human.str());
  return 0;
}

int run_enumerate(const std::string& file, int cap, const std::string& out_path, bool json) {
  Network n = load_network(file).net;
  DisplaySummary summary = displayed_trees(n, cap);
  std::vector<std::string> newicks;
  for (const DisplayedTree& t : summary.trees)
    newicks.push_back(newick_of_mask(n, t.example_mask));
  ordered_json out;
  out["count"] = newicks.size();
  out["trees"] = newicks;
  std::ostringstream human;
  if (!out_path.empty()) {
    std::ostringstream filebuf;
    for (const std::string& nwk : newicks) filebuf << nwk << "\n";
    write_file(out_path, filebuf.str());
    out["out"] = out_path;
    human << "wrote " << newicks.size() << " trees to " << out_path << "\n";
  } else {
    for (const std::string& nwk : newicks) human << nwk << "\n";
  }
  emit(out, json, human.str());
  return 0;
}

int run_delete_arc(const std::string& file, const std::string& arc_text,
                   const std::string& out_path, bool json) {
  ParsedNetwork pn = load_network(file);
  auto comma = arc_text.find(',');
  if (comma == std::string::npos)
    fail(ErrorCode::SyntaxError, "--arc expects '<tail>,<head>' with vertex names");
  std::string tail_name = arc_text.substr(0, comma);
  std::string head_name = arc_text.substr(comma + 1);
  auto resolve = [&](const std::string& name) {
    auto it = pn.names.find(name);
    if (it == pn.names.end())
      fail(ErrorCode::UnknownLabel,
           "unknown vertex '" + name + "' (use leaf labels, #H tags, or @<rank>)");
    return it->second;
  };
  Arc e{resolve(tail_name), resolve(head_name)};
  auto [result, trace] = delete_reticulation_arc(pn.net, e);
  std::string serialized =
      out_path.empty() ? serialize_enewick(result) : serialize_for(result, out_path);
  ordered_json out;
  out["enewick"] = serialize_enewick(result);
  out["root_deleted"] = trace.root_deleted;
  out["suppressed_count"] = trace.suppressed.size();
  std::ostringstream human;
  if (!out_path.empty()) {
    write_file(out_path, serialized + (serialized.back() == '\n' ? "" : "\n"));
    out["out"] = out_path;
    human << "wrote " << out_path << "\n";
  } else {
    human << serialized << "\n";
  }
  emit(out, json, human.str());
  return 0;
}

int run_nonessential(const std::string& file, int cap, bool json) {
  Network n = load_network(file).net;
  std::vector<Arc> arcs = non_essential_arcs(n, cap);
  ordered_json rows = ordered_json::array();
  std::ostringstream human;
  for (const Arc& a : arcs) {
    ordered_json row;
    row["tail"] = vertex_name(n, a.tail);
    row["head"] = vertex_name(n, a.head);
    rows.push_back(std::move(row));
    human << vertex_name(n, a.tail) << " " << vertex_name(n, a.head) << "\n";
  }
  ordered_json out;
  out["count"] = arcs.size();
  out["arcs"] = std::move(rows);
  emit(out, json, human.str());
  return 0;
}

int run_octopus_build(const std::string& spec_file, const std::string& out_path, bool json) {
  std::string text = read_file(spec_file);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  OctopusSpec spec = parse_octopus_spec(text);
  Network n = build_octopus(spec);
  std::string serialized = out_path.empty() ? serialize_enewick(n) : serialize_for(n, out_path);
  ordered_json out;
  out["enewick"] = serialize_enewick(n);
  out["leaves"] = n.leaf_count();
  out["reticulations"] = n.reticulation_count();
  out["spec"] = format_octopus_spec(spec);
  std::ostringstream human;
  if (!out_path.empty()) {
    write_file(out_path, serialized + (serialized.back() == '\n' ? "" : "\n"));
    out["out"] = out_path;
    human << "wrote " << out_path << "\n";
  } else {
    human << serialized << "\n";
  }
  emit(out, json, human.str());
  return 0;
}

int run_octopus_check(const std::string& file, bool json) {
  Network n = load_network(file).net;
  OctopusCheck check = is_octopus(n);
  ordered_json out;
  out["octopus"] = check.value;
  out["vacuous"] = check.vacuous;
  out["order2_components"] = check.order2_components;
  out["order3_components"] = check.order3_components;
  out["unmatched_components"] = check.unmatched_components;
  if (check.value) {
    auto spec = extract_octopus_spec(n);
    if (spec) out["spec"] = format_octopus_spec(*spec);
  }
  emit(out, json, std::string(check.value ? "true" : "false") + "\n");
  return 0;
}

int run_bound(std::int64_t n, std::int64_t k, bool json) {
  std::int64_t b = t_bound(n, k);
  ordered_json out;
  out["n"] = n;
  out["k"] = k;
  out["bound"] = b;
  emit(out, json, std::to_string(b) + "\n");
  return 0;
}

int run_census(int max_leaves, bool forbid_3cycles, int jobs, const std::string& report_path,
               const std::string& csv_path, const std::string& artifact_dir, bool inject,
               bool json) {
  CensusOptions opts;
  opts.forbid_3cycles = forbid_3cycles;
  opts.jobs = jobs;
  opts.artifact_dir = artifact_dir;
  opts.inject_fake_violation = inject;
  CensusReport report = verify_main_theorem(max_leaves, opts);
  ordered_json out = census_report_json(report);
  if (!report_path.empty()) write_file(report_path, out.dump(2) + "\n");
  if (!csv_path.empty()) write_file(csv_path, census_report_csv(report));
  std::ostringstream human;
  human << census_report_csv(report);
  human << "violations: " << report.violation_total()
        << "; oracle_certified: " << (report.oracle_certified ? "yes" : "no")
        << "; wall_ms: " << report.wall_ms << "\n";
  for (const std::string& path : report.artifacts) human << "artifact: " << path << "\n";
  emit(out, json, human.str());
  return report.ok() ? 0 : 4;
}

int run_ladder(int order, const std::string& labels_csv, const std::string& out_path, bool json) {
  std::vector<std::string> labels;
  if (labels_csv.empty()) {
    for (int i = 0; i <= order; ++i) labels.push_back("l" + std::to_string(i));
  } else {
    std::istringstream in(labels_csv);
    std::string item;
    while (std::getline(in, item, ',')) labels.push_back(item);
  }
  BuiltLadder built = build_tight_ladder(order, labels);
  const Network& n = built.net;
  std::string serialized = out_path.empty() ? serialize_enewick(n) : serialize_for(n, out_path);
  ordered_json rungs = ordered_json::array();
  for (const Arc& r : built.embed.rungs)
    rungs.push_back({vertex_name(n, r.tail), vertex_name(n, r.head)});
  ordered_json out;
  out["enewick"] = serialize_enewick(n);
  out["order"] = order;
  out["rungs"] = std::move(rungs);
  std::ostringstream human;
  if (!out_path.empty()) {
    write_file(out_path, serialized + (serialized.back() == '\n' ? "" : "\n"));
    out["out"] = out_path;
    human << "wrote " << out_path << "\n";
  } else {
    human << serialized << "\n";
  }
  emit(out, json, human.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for rooted binary tree-child phylogenetic networks"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "emit machine-readable JSON on stdout");

  auto* cmd_validate = app.add_subcommand("validate", "parse a network file and report its shape");
  std::string validate_file;
  cmd_validate->add_option("file", validate_file, "input (.enwk or .edl)")->required();

  auto* cmd_count = app.add_subcommand("count", "count the distinct displayed trees");
  std::string count_file;
  int count_cap = kDefaultReticulationCap;
  bool count_mult = false;
  cmd_count->add_option("file", count_file)->required();
  cmd_count->add_option("--cap", count_cap, "max reticulations to enumerate over");
  cmd_count->add_flag("--multiplicities", count_mult, "list each tree with its embedding count");

  auto* cmd_enum = app.add_subcommand("enumerate", "list the displayed trees as Newick");
  std::string enum_file, enum_out;
  int enum_cap = kDefaultReticulationCap;
  cmd_enum->add_option("file", enum_file)->required();
  cmd_enum->add_option("--cap", enum_cap, "max reticulations to enumerate over");
  cmd_enum->add_option("--out", enum_out, "write trees to this file instead of stdout");

  auto* cmd_del = app.add_subcommand("delete-arc", "delete a reticulation arc (with suppression)");
  std::string del_file, del_arc, del_out;
  cmd_del->add_option("file", del_file)->required();
  cmd_del->add_option("--arc", del_arc, "<tail>,<head> using leaf labels, #H tags, or @<rank>")
      ->required();
  cmd_del->add_option("--out", del_out, "write the result here (.edl for edge list)");

  auto* cmd_ness = app.add_subcommand("nonessential", "list the non-essential reticulation arcs");
  std::string ness_file;
  int ness_cap = kDefaultReticulationCap;
  cmd_ness->add_option("file", ness_file)->required();
  cmd_ness->add_option("--cap", ness_cap, "max reticulations to enumerate over");

  auto* cmd_oct = app.add_subcommand("octopus", "build or recognize octopuses");
  cmd_oct->require_subcommand(1);
  auto* oct_build = cmd_oct->add_subcommand("build", "materialize a network from a spec file");
  std::string oct_spec, oct_out;
  oct_build->add_option("--spec", oct_spec, "spec file (grammar in README)")->required();
  oct_build->add_option("--out", oct_out, "write the network here (.edl for edge list)");
  auto* oct_check = cmd_oct->add_subcommand("check", "decide whether a network is an octopus");
  std::string oct_file;
  oct_check->add_option("file", oct_file)->required();

  auto* cmd_bound = app.add_subcommand("bound", "the sharp lower bound t(n,k)");
  std::int64_t bound_n = 0, bound_k = 0;
  cmd_bound->add_option("n", bound_n, "leaf count")->required();
  cmd_bound->add_option("k", bound_k, "reticulation count")->required();

  auto* cmd_census = app.add_subcommand(
      "census", "exhaustively generate tree-child networks and verify the bound");
  int census_max = 4, census_jobs = 1;
  bool census_forbid = false, census_inject = false;
  std::string census_report, census_csv, census_artifacts;
  cmd_census->add_option("--max-leaves", census_max, "largest leaf count (<= 5)");
  cmd_census->add_flag("--forbid-3cycles", census_forbid,
                       "restrict the census to 3-cycle-free networks");
  cmd_census->add_option("--jobs", census_jobs, "worker threads");
  cmd_census->add_option("--report", census_report, "write the JSON report here");
  cmd_census->add_option("--csv", census_csv, "write the CSV report here");
  cmd_census->add_option("--artifact-dir", census_artifacts,
                         "directory for violation artifacts (default: cwd)");
  cmd_census
      ->add_flag("--inject-fake-violation", census_inject,
                 "test hook: force one synthetic violation")
      ->group("");  // hidden

  auto* cmd_ladder = app.add_subcommand("ladder", "build a 2- or 3-tight caterpillar ladder");
  int ladder_order = 0;
  std::string ladder_labels, ladder_out;
  cmd_ladder->add_option("--order", ladder_order, "2 or 3")->required();
  cmd_ladder->add_option("--labels", ladder_labels, "comma-separated leaf labels (order+1 of them)");
  cmd_ladder->add_option("--out", ladder_out, "write the network here (.edl for edge list)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(cmd_validate)) return run_validate(validate_file, json);
    if (app.got_subcommand(cmd_count)) return run_count(count_file, count_cap, count_mult, json);
    if (app.got_subcommand(cmd_enum)) return run_enumerate(enum_file, enum_cap, enum_out, json);
    if (app.got_subcommand(cmd_del)) return run_delete_arc(del_file, del_arc, del_out, json);
    if (app.got_subcommand(cmd_ness)) return run_nonessential(ness_file, ness_cap, json);
    if (app.got_subcommand(cmd_oct)) {
      if (cmd_oct->got_subcommand(oct_build)) return run_octopus_build(oct_spec, oct_out, json);
      return run_octopus_check(oct_file, json);
    }
    if (app.got_subcommand(cmd_bound)) return run_bound(bound_n, bound_k, json);
    if (app.got_subcommand(cmd_census))
      return run_census(census_max, census_forbid, census_jobs, census_report, census_csv,
                        census_artifacts, census_inject, json);
    if (app.got_subcommand(cmd_ladder))
      return run_ladder(ladder_order, ladder_labels, ladder_out, json);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ScaleExceeded || e.code() == ErrorCode::TooManyReticulations
               ? 3
               : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
