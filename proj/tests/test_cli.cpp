#include <filesystem>

#include "doctest.h"
#include "helpers.hpp"
#include "schema_check.hpp"

using namespace tck;
using namespace tckt;
using nlohmann::json;

namespace {

json parse_json(const std::string& text) { return json::parse(text); }

void check_schema(const std::string& schema_name, const json& value) {
  std::string why;
  bool ok = schema_check(load_schema(schema_name), value, why);
  CAPTURE(schema_name);
  CAPTURE(why);
  CHECK(ok);
}

}  // namespace

TEST_CASE("cli: usage errors exit 1") {
  CHECK(run_cli("").status == 1);
  CHECK(run_cli("no-such-command").status == 1);
  CHECK(run_cli("count").status == 1);               // missing file argument
  CHECK(run_cli("ladder").status == 1);              // missing --order
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("census --help").status == 0);
}

TEST_CASE("cli: validate") {
  CliResult r = run_cli("validate " + fixture_path("n4k2_shortcut.enwk"));
  CHECK(r.status == 0);
  CHECK(r.out.find("tree-child: yes") != std::string::npos);
  CHECK(r.out.find("3-cycle-free: yes") != std::string::npos);
  CHECK(r.out.find("reticulations: 2") != std::string::npos);

  CliResult j = run_cli("--json validate " + fixture_path("n4k2_shortcut.enwk"));
  CHECK(j.status == 0);
  json out = parse_json(j.out);
  check_schema("validate.schema.json", out);
  CHECK(out["valid"] == true);
  CHECK(out["leaves"] == 4);
  CHECK(out["reticulations"] == 2);
  CHECK(out["tree_child"] == true);
  CHECK(out["normal"] == false);

  CHECK(run_cli("validate " + fixture_path("corrupt.enwk")).status == 2);
  CHECK(run_cli("validate /nonexistent/file.enwk").status == 2);
}

TEST_CASE("cli: count and enumerate") {
  std::string file = fixture_path("n4k2_shortcut.enwk");
  CliResult r = run_cli("count " + file);
  CHECK(r.status == 0);
  CHECK(r.out == "3\n");

  CliResult m = run_cli("count --multiplicities " + file);
  CHECK(m.status == 0);
  // one "multiplicity<TAB>newick" line per displayed tree
  CHECK(m.out.find("2\t") != std::string::npos);

  CliResult j = run_cli("--json count --multiplicities " + file);
  CHECK(j.status == 0);
  json out = parse_json(j.out);
  check_schema("count.schema.json", out);
  CHECK(out["count"] == 3);
  CHECK(out["embeddings"] == 4);
  REQUIRE(out.contains("trees"));
  std::uint64_t total = 0;
  for (const auto& t : out["trees"]) total += t["multiplicity"].get<std::uint64_t>();
  CHECK(total == 4);

  CliResult e = run_cli("enumerate " + file);
  CHECK(e.status == 0);
  // three newick lines
  int lines = 0;
  for (char c : e.out)
    if (c == '\n') ++lines;
  CHECK(lines == 3);

  namespace fs = std::filesystem;
  std::string out_path = "/tmp/tck_" + std::to_string(::getpid()) + "_enum.txt";
  CliResult eo = run_cli("enumerate --out " + out_path + " " + file);
  CHECK(eo.status == 0);
  CHECK(fs::exists(out_path));
  std::string contents = read_file(out_path);
  CHECK(contents.find("(((x1,x2),x3),x4);") == std::string::npos);  // not displayed
  CHECK(contents.find("((x1,x2),(x3,x4));") != std::string::npos);
  fs::remove(out_path);

  // reticulation cap exits 3
  std::string octo = write_temp("octo.enwk", serialize_enewick(octopus_nested()));
  CHECK(run_cli("count --cap 3 " + octo).status == 3);
  CHECK(run_cli("count " + octo).status == 0);
}

TEST_CASE("cli: delete-arc") {
  std::string file = fixture_path("n4k2_shortcut.enwk");
  Network n = sample_shortcut_net();
  Arc sc = sample_shortcut_arc();
  std::string arc_name = "@" + std::to_string(n.canonical_rank(sc.tail)) + ",@" +
                         std::to_string(n.canonical_rank(sc.head));
  CliResult r = run_cli("--json delete-arc --arc " + arc_name + " " + file);
  CHECK(r.status == 0);
  json out = parse_json(r.out);
  check_schema("delete_arc.schema.json", out);
  CHECK(out["root_deleted"] == false);
  Network m = parse_enewick(out["enewick"].get<std::string>());
  CHECK(m.reticulation_count() == 1);
  CHECK(m.leaf_count() == 4);

  // unknown vertex name
  CHECK(run_cli("delete-arc --arc zz,@1 " + file).status == 2);
  // a tree arc is not deletable
  std::string tree_arc = "@0,@1";
  CliResult t = run_cli("delete-arc --arc " + tree_arc + " " + file);
  CHECK(t.status == 2);
}

TEST_CASE("cli: nonessential") {
  std::string lad = fixture_path("ladder2.edl");
  CliResult r = run_cli("nonessential " + lad);
  CHECK(r.status == 0);
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 2);

  CliResult j = run_cli("--json nonessential " + lad);
  CHECK(j.status == 0);
  json out = parse_json(j.out);
  check_schema("nonessential.schema.json", out);
  CHECK(out["count"] == 2);

  CliResult none = run_cli("nonessential " + fixture_path("n4k2_shortcut.enwk"));
  CHECK(none.status == 0);
  CHECK(none.out.empty());
}

TEST_CASE("cli: octopus build and check") {
  std::string spec = fixture_path("octopus_a.spec");
  CliResult r = run_cli("--json octopus build --spec " + spec);
  CHECK(r.status == 0);
  json out = parse_json(r.out);
  check_schema("octopus_build.schema.json", out);
  CHECK(out["leaves"] == 10);
  CHECK(out["reticulations"] == 7);
  Network built = parse_enewick(out["enewick"].get<std::string>());
  CHECK(built.canonical_code() == octopus_nested().canonical_code());
  // golden: the serialized form on disk
  std::string golden = read_file(fixture_path("octopus_a.enwk"));
  while (!golden.empty() && golden.back() == '\n') golden.pop_back();
  CHECK(out["enewick"].get<std::string>() == golden);

  CliResult b = run_cli("--json octopus build --spec " + fixture_path("octopus_b.spec"));
  CHECK(b.status == 0);
  json bout = parse_json(b.out);
  CHECK(parse_enewick(bout["enewick"].get<std::string>()).canonical_code() ==
        octopus_flat().canonical_code());

  CliResult chk = run_cli("octopus check " + fixture_path("octopus_a.enwk"));
  CHECK(chk.status == 0);
  CHECK(chk.out == "true\n");

  CliResult neg = run_cli("octopus check " + fixture_path("n4k2_shortcut.enwk"));
  CHECK(neg.status == 0);
  CHECK(neg.out == "false\n");

  CliResult jc = run_cli("--json octopus check " + fixture_path("octopus_a.enwk"));
  CHECK(jc.status == 0);
  json jout = parse_json(jc.out);
  check_schema("octopus_check.schema.json", jout);
  CHECK(jout["octopus"] == true);
  CHECK(jout["order2_components"] == 2);
  CHECK(jout["order3_components"] == 1);
  REQUIRE(jout.contains("spec"));
  CHECK(jout["spec"].get<std::string>().find("L3(") != std::string::npos);

  // k = 1 networks are outside the definition: validation error
  std::string k1 = write_temp("k1.enwk", serialize_enewick(smallest_retic_net()));
  CHECK(run_cli("octopus check " + k1).status == 2);

  // bad spec file
  std::string bad = write_temp("bad.spec", "(x1,x1)");
  CHECK(run_cli("octopus build --spec " + bad).status == 2);
}

TEST_CASE("cli: bound") {
  CliResult r = run_cli("bound 10 7");
  CHECK(r.status == 0);
  CHECK(r.out == "12\n");
  CliResult j = run_cli("--json bound 10 7");
  json out = parse_json(j.out);
  check_schema("bound.schema.json", out);
  CHECK(out["n"] == 10);
  CHECK(out["k"] == 7);
  CHECK(out["bound"] == 12);
  CHECK(run_cli("bound 3 5").status == 2);  // out of range
}

TEST_CASE("cli: ladder") {
  CliResult j = run_cli("--json ladder --order 2");
  CHECK(j.status == 0);
  json out = parse_json(j.out);
  check_schema("ladder.schema.json", out);
  CHECK(out["order"] == 2);
  REQUIRE(out.contains("rungs"));
  CHECK(out["rungs"].size() == 4);
  Network n = parse_enewick(out["enewick"].get<std::string>());
  CHECK(n.canonical_code() == build_tight_ladder(2, {"l0", "l1", "l2"}).net.canonical_code());

  CliResult named = run_cli("--json ladder --order 3 --labels a,b,c,d");
  CHECK(named.status == 0);
  json nout = parse_json(named.out);
  CHECK(nout["rungs"].size() == 6);
  CHECK(run_cli("ladder --order 4").status == 2);
  CHECK(run_cli("ladder --order 2 --labels a,b").status == 2);
}

TEST_CASE("cli: census") {
  CliResult r = run_cli("census --max-leaves 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("n,k,generated") != std::string::npos);

  std::string report_path = "/tmp/tck_" + std::to_string(::getpid()) + "_census.json";
  CliResult j = run_cli("--json census --max-leaves 3 --forbid-3cycles --report " + report_path);
  CHECK(j.status == 0);
  json out = parse_json(j.out);
  check_schema("census_report.schema.json", out);
  CHECK(out["meta"]["n_max"] == 3);
  CHECK(out["meta"]["forbid_3cycles"] == true);
  CHECK(out["meta"]["oracle_certified"] == true);
  CHECK(std::filesystem::exists(report_path));
  json on_disk = parse_json(read_file(report_path));
  CHECK(on_disk == out);
  std::filesystem::remove(report_path);

  // scale guard
  CHECK(run_cli("census --max-leaves 6").status == 3);

  // the hidden injection hook trips the violation exit code and writes an
  // artifact
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("tck_cli_artifacts_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  CliResult v = run_cli("census --max-leaves 2 --inject-fake-violation --artifact-dir " +
                        dir.string());
  CHECK(v.status == 4);
  bool wrote = false;
  for (const auto& entry : fs::directory_iterator(dir)) {
    (void)entry;
    wrote = true;
  }
  CHECK(wrote);
  fs::remove_all(dir);
}

TEST_CASE("cli: reads edge lists by extension and by sniffing") {
  std::string as_edl = write_temp("net.edl", serialize_edgelist(sample_shortcut_net()));
  CliResult r = run_cli("count " + as_edl);
  CHECK(r.status == 0);
  CHECK(r.out == "3\n");

  // same content, neutral extension: sniffed by the leaves: header
  std::string sniffed = write_temp("net.txt", serialize_edgelist(sample_shortcut_net()));
  CliResult s = run_cli("count " + sniffed);
  CHECK(s.status == 0);
  CHECK(s.out == "3\n");

  std::string as_enwk = write_temp("net2.txt", serialize_enewick(sample_shortcut_net()));
  CliResult e = run_cli("count " + as_enwk);
  CHECK(e.status == 0);
  CHECK(e.out == "3\n");
}
