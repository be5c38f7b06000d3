// End-to-end tests of the command-line tool: each case launches the real
// binary (path injected by the build as REGMAP_CLI_PATH) and inspects its
// exit code and combined output.  The shipped verification suites live in
// REGMAP_SUITE_DIR.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "regmap/atlas.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;  // stdout and stderr interleaved
};

// Runs `<cli> <args>` through the shell; `prefix` may carry environment
// variable assignments like "REGMAP_JOBS=3 ".
RunResult run_cli(const std::string& args, const std::string& prefix = "") {
  RunResult r;
  const std::string cmd = prefix + std::string(REGMAP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  r.code = WEXITSTATUS(status);
  return r;
}

size_t count_of(const std::string& text, const std::string& needle) {
  size_t n = 0;
  for (size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++n;
  return n;
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("enumerate prints one row per map class") {
  auto r = run_cli("enumerate psl2:7");
  CHECK(r.code == 0);
  CHECK(count_of(r.out, "maps 5") == 1);
  CHECK(count_of(r.out, "{7,3}") == 1);
  CHECK(count_of(r.out, "{3,7}") == 1);
  CHECK(count_of(r.out, "{7,7}") == 1);
  CHECK(count_of(r.out, "outer-regular") == 5);
}

TEST_CASE("enumerate covers the smallest text-book groups") {
  auto d2 = run_cli("enumerate dihedral:2");
  CHECK(d2.code == 0);
  CHECK(count_of(d2.out, "maps 1") == 1);
  CHECK(count_of(d2.out, "{2,2}") == 1);

  auto s4 = run_cli("enumerate sym:4");
  CHECK(s4.code == 0);
  CHECK(count_of(s4.out, "maps 2") == 1);
  CHECK(count_of(s4.out, "{3,4}") == 1);
  CHECK(count_of(s4.out, "{4,3}") == 1);
}

TEST_CASE("enumerate restricted to one valency") {
  auto r = run_cli("enumerate psl2:7 --valency 7");
  CHECK(r.code == 0);
  CHECK(count_of(r.out, "maps 3") == 1);
  CHECK(count_of(r.out, "{7,3}") == 0);
}

TEST_CASE("enumerate writes JSON identical to the library serialization") {
  const fs::path out = temp_file("regmap_enum.json");
  fs::remove(out);
  auto r = run_cli("enumerate psl2:7 --json " + out.string());
  CHECK(r.code == 0);
  json j = json::parse(slurp(out));
  CHECK(j["group"] == "psl2:7");
  CHECK(j["aut_order"] == 336);
  REQUIRE(j["maps"].size() == 5);
  CHECK(j["maps"][0]["p"] == 7);
  CHECK(j["maps"][0]["q"] == 3);
  CHECK(j["maps"][0]["r"] == 8);
  CHECK(j["maps"][0]["genus"] == 3);
  CHECK(j["maps"][4]["genus"] == 19);

  // byte-for-byte what maps_to_json produces in process
  auto G = regmap::FiniteGroup::build("psl2:7");
  auto A = regmap::compute_aut(G);
  auto maps = regmap::enumerate_maps(G, A);
  CHECK(slurp(out) == regmap::maps_to_json("psl2:7", A.order(), maps));
  fs::remove(out);
}

TEST_CASE("graph emits the dual and hole structure in DOT") {
  auto r = run_cli("graph psl2:7 --ops D,H2 --format dot");
  CHECK(r.code == 0);
  CHECK(count_of(r.out, "[label=\"4: {") == 1);      // five vertices 0..4
  CHECK(count_of(r.out, "[label=\"5: {") == 0);
  CHECK(count_of(r.out, "label=\"H2\"") == 3);       // directed 3-cycle
  CHECK(count_of(r.out, "style=dashed") == 2);       // two dual edges
}

TEST_CASE("graph default operations leave the tetrahedron alone") {
  auto r = run_cli("graph alt:4");
  CHECK(r.code == 0);
  CHECK(count_of(r.out, "v0 [label") == 1);
  CHECK(count_of(r.out, "->") == 0);  // self-dual and reflexible: no edges
}

TEST_CASE("graph JSON round-trips through the parser") {
  auto r = run_cli("graph psl2:7 --ops D,H2 --format json");
  CHECK(r.code == 0);
  auto g = regmap::parse_atlas(r.out);
  CHECK(g.group_spec == "psl2:7");
  CHECK(g.maps.size() == 5);
  CHECK(g.edges.size() == 5);
  REQUIRE(g.components.size() == 1);
}

TEST_CASE("graph honors --output") {
  const fs::path out = temp_file("regmap_graph.dot");
  fs::remove(out);
  auto r = run_cli("graph psl2:7 --ops D,H2 --output " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(count_of(slurp(out), "digraph") == 1);
  fs::remove(out);
}

TEST_CASE("count methods agree and report the map count") {
  auto direct = run_cli("count psl2:7 --method direct");
  auto moebius = run_cli("count psl2:7 --method moebius");
  REQUIRE(direct.code == 0);
  REQUIRE(moebius.code == 0);
  json jd = json::parse(direct.out), jm = json::parse(moebius.out);
  CHECK(jd["phi"] == 1680);
  CHECK(jm["phi"] == 1680);
  CHECK(jd["o_size"] == 5);
  CHECK(jm["o_size"] == 5);
  CHECK(jd["aut_order"] == 336);

  auto formula = run_cli("count sl2:8 --method formula");
  REQUIRE(formula.code == 0);
  json jf = json::parse(formula.out);
  CHECK(jf["o_size"] == 14);
  CHECK(jf["phi"] == 14 * 1512);
}

TEST_CASE("count flags the y = 1 convention on cyclic groups") {
  auto r = run_cli("count \"perm:(1,2,3,4,5,6)\"");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  // phi = 2 pairs with y = 1 plus 4 with y the involution, over |Aut| = 2;
  // the enumerator sees only the y != 1 classes {3,6} and {6,3}
  CHECK(j["phi"] == 6);
  CHECK(j["o_size"] == 3);
  CHECK(j["enumerated_maps"] == 2);
  CHECK(count_of(j["note"], "cyclic") == 1);
}

TEST_CASE("count --per-class lists the nonzero class triples") {
  auto r = run_cli("count psl2:7 --per-class");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.contains("per_class_triples"));
  uint64_t total = 0, generating = 0;
  bool saw_7a7a = false;
  for (const auto& rec : j["per_class_triples"]) {
    CHECK(rec["y_class"] == "2A");
    CHECK(rec["total"] > 0u);
    total += rec["total"].get<uint64_t>();
    generating += rec["generating"].get<uint64_t>();
    if (rec["x_class"] == "7A" && rec["z_class"] == "7A") {
      saw_7a7a = true;
      CHECK(rec["total"] == 168);
      CHECK(rec["generating"] == 168);
    }
  }
  CHECK(saw_7a7a);
  // all triples with y an involution account for every (x, y) pair,
  // and the generating ones recover phi minus the empty y = 1 share
  CHECK(total == 167 * 21 + 21);
  CHECK(generating == 1680);
}

TEST_CASE("worker count never changes the bytes") {
  auto one = run_cli("count psl2:7 --method direct");
  auto three = run_cli("--jobs 3 count psl2:7 --method direct");
  auto after = run_cli("count psl2:7 --method direct --jobs 4");
  auto env = run_cli("count psl2:7 --method direct", "REGMAP_JOBS=2 ");
  CHECK(one.code == 0);
  CHECK(one.out == three.out);
  CHECK(one.out == after.out);
  CHECK(one.out == env.out);

  auto e1 = run_cli("enumerate sym:5");
  auto e2 = run_cli("--jobs 5 enumerate sym:5");
  CHECK(e1.out == e2.out);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const std::string args :
       {std::string("enumerate sl2:8"), std::string("graph sym:5 --ops D,H2 --format json"),
        std::string("count alt:5 --method moebius")}) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("triples reports one classwise record") {
  auto r = run_cli("triples psl2:7 7A 2A 7A");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["total"] == 168);
  CHECK(j["generating"] == 168);

  auto cross = run_cli("triples psl2:7 7A 2A 7B");
  json jc = json::parse(cross.out);
  CHECK(jc["total"] == 0);

  auto split = run_cli("triples sl2:8 7A 2A 7B");
  json js = json::parse(split.out);
  CHECK(js["total"] == 504);
  CHECK(js["generating"] == 504);
}

TEST_CASE("holes reports hole lengths and zigzag word orders") {
  auto r = run_cli("holes sl2:8 --id 2 --word 2,4,4");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["p"] == 3);
  CHECK(j["q"] == 7);
  CHECK(j["petrie"] == 18);
  CHECK(j["hole_lengths"] ==
        json({{1, 3}, {2, 7}, {3, 9}, {4, 9}, {5, 7}, {6, 3}}));
  CHECK(j["word_order"] == 2);

  auto bad = run_cli("holes sl2:8 --id 99");
  CHECK(bad.code == 2);
  CHECK(count_of(bad.out, "out of range") == 1);
}

TEST_CASE("verify runs the shipped suites clean") {
  auto r = run_cli("verify all --suite-dir " + std::string(REGMAP_SUITE_DIR));
  CHECK(r.code == 0);
  CHECK(count_of(r.out, "FAIL") == 0);
  CHECK(count_of(r.out, "passed ") == 6);

  auto one = run_cli("verify psl2_7 --suite-dir " + std::string(REGMAP_SUITE_DIR));
  CHECK(one.code == 0);
  CHECK(count_of(one.out, "passed psl2_7") == 1);
}

TEST_CASE("verify fails loudly on wrong expectations") {
  const fs::path dir = temp_file("regmap_badsuites");
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "broken.json")
      << R"({"name": "broken", "group": "psl2:7",
             "expect": {"map_count": 4, "aut_order": 336}})";
  auto r = run_cli("verify all --suite-dir " + dir.string());
  CHECK(r.code == 1);
  CHECK(count_of(r.out, "FAIL broken: map count") == 1);
  CHECK(count_of(r.out, "ok   broken: automorphism group order") == 1);
  fs::remove_all(dir);
}

TEST_CASE("verify rejects unknown suites and malformed files") {
  auto r = run_cli("verify nosuch --suite-dir " + std::string(REGMAP_SUITE_DIR));
  CHECK(r.code == 2);
  CHECK(count_of(r.out, "unknown suite") == 1);

  const fs::path dir = temp_file("regmap_malformed");
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "oops.json") << "{ not json";
  auto m = run_cli("verify oops --suite-dir " + dir.string());
  CHECK(m.code == 2);
  fs::remove_all(dir);
}

TEST_CASE("exit codes separate usage errors from resource caps") {
  CHECK(run_cli("enumerate nosuch:5").code == 2);
  CHECK(run_cli("enumerate psl2:97").code == 3);  // order 456288 over the cap
  CHECK(run_cli("count psl2:7 --method formula").code == 2);
  CHECK(run_cli("").code == 2);  // a subcommand is required
  CHECK(run_cli("--help >/dev/null").code == 0);
  CHECK(run_cli("triples psl2:7 9Z 2A 7A").code == 2);  // unknown class label
}

TEST_CASE("config file adjusts caps and default operations") {
  const fs::path cfg = temp_file("regmap_cfg.json");
  std::ofstream(cfg) << R"({"order_cap": 100})";
  auto capped = run_cli("--config " + cfg.string() + " enumerate psl2:7");
  CHECK(capped.code == 3);
  CHECK(count_of(capped.out, "above cap") == 1);

  std::ofstream(cfg, std::ios::trunc) << R"({"default_ops": "D,H2"})";
  auto g = run_cli("--config " + cfg.string() + " graph psl2:7 --format dot");
  CHECK(g.code == 0);
  CHECK(count_of(g.out, "label=\"H2\"") == 3);

  std::ofstream(cfg, std::ios::trunc) << "nonsense";
  CHECK(run_cli("--config " + cfg.string() + " enumerate psl2:7").code == 2);
  fs::remove(cfg);
}
