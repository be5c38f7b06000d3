// Command-line front end: enumerate the orientably regular maps on a finite
// rotation group, draw the graph the dual and hole operations induce on them,
// count maps by three independent routes, probe hole and zigzag structure of
// a single map, and check curated fact suites shipped as JSON data.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "regmap/atlas.hpp"
#include "regmap/aut.hpp"
#include "regmap/census.hpp"
#include "regmap/error.hpp"
#include "regmap/group.hpp"
#include "regmap/map.hpp"
#include "regmap/ops.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using namespace regmap;

// Exit codes: 0 success, 1 verification failure (or an internal invariant
// violation), 2 usage error, 3 resource cap exceeded.
constexpr int kOk = 0, kVerifyFail = 1, kUsage = 2, kCap = 3;

struct Settings {
  GroupCaps caps;
  uint32_t lattice_cap = 1200;
  uint32_t generic_cap = 1200;
  std::string default_ops = "D,H-1";
  unsigned jobs = 1;
};

void load_config(Settings& st, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_argument, "cannot read config file " + path);
  ojson j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::bad_argument, "bad config file " + path + ": " + e.what());
  }
  try {
    st.caps.order_cap = j.value("order_cap", st.caps.order_cap);
    st.caps.table_cap = j.value("table_cap", st.caps.table_cap);
    st.lattice_cap = j.value("lattice_cap", st.lattice_cap);
    st.generic_cap = j.value("generic_cap", st.generic_cap);
    st.default_ops = j.value("default_ops", st.default_ops);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::bad_argument, "bad config value in " + path + ": " + e.what());
  }
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::bad_argument, "cannot write " + path);
  out << text;
}

std::vector<long long> parse_longs(const std::string& list) {
  std::vector<long long> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      fail(Errc::bad_argument, "bad exponent entry '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) fail(Errc::bad_argument, "bad exponent entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) fail(Errc::bad_argument, "empty exponent list");
  return out;
}

// The generating-pair count phi(G), split over a worker pool by striding the
// involution list.  The parts are integers summed in a fixed order, so the
// result is identical for every worker count.
uint64_t phi_direct_jobs(const FiniteGroup& G, unsigned jobs) {
  if (jobs <= 1) return phi_direct(G);
  const uint32_t n = G.order();
  std::vector<Elt> invol;
  for (Elt y = 1; y < n; ++y)
    if (G.order_of(y) == 2) invol.push_back(y);
  uint64_t acc = 0;  // y = 1 pairs: (x, 1) generates exactly when x alone does
  for (Elt x = 0; x < n; ++x)
    if (uint32_t(G.order_of(x)) == n) ++acc;
  std::vector<uint64_t> part(jobs, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      uint64_t mine = 0;
      for (size_t i = t; i < invol.size(); i += jobs)
        for (Elt x = 0; x < n; ++x)
          if (G.generates({x, invol[i]})) ++mine;
      part[t] = mine;
    });
  for (auto& th : pool) th.join();
  return std::accumulate(part.begin(), part.end(), acc);
}

// Classwise triple counts for every involution class y and every (x, z)
// class pair, one generation test per pair (x, y); records with total zero
// are omitted.
ojson per_class_triples(const FiniteGroup& G) {
  ClassData cd = conjugacy_classes(G);
  const size_t k = cd.classes.size();
  ojson arr = ojson::array();
  for (size_t yi = 0; yi < k; ++yi) {
    if (cd.classes[yi].order != 2) continue;
    for (size_t xi = 0; xi < k; ++xi) {
      std::vector<uint64_t> tot(k, 0), gen(k, 0);
      for (Elt x : cd.classes[xi].members)
        for (Elt y : cd.classes[yi].members) {
          uint16_t zc = cd.class_of[G.inv(G.mul(x, y))];
          ++tot[zc];
          if (G.generates({x, y})) ++gen[zc];
        }
      for (size_t zi = 0; zi < k; ++zi) {
        if (!tot[zi]) continue;
        ojson rec;
        rec["x_class"] = cd.classes[xi].name;
        rec["y_class"] = cd.classes[yi].name;
        rec["z_class"] = cd.classes[zi].name;
        rec["total"] = tot[zi];
        rec["generating"] = gen[zi];
        arr.push_back(std::move(rec));
      }
    }
  }
  return arr;
}

int cmd_enumerate(const Settings& st, const std::string& spec,
                  std::optional<uint32_t> valency, const std::string& json_path) {
  FiniteGroup G = FiniteGroup::build(spec, st.caps);
  AutGroup A = compute_aut(G, st.generic_cap);
  std::vector<MapClass> maps = enumerate_maps(G, A, valency);
  if (!json_path.empty()) {
    write_out(json_path, maps_to_json(G.spec(), A.order(), maps));
    return kOk;
  }
  std::cout << "group " << G.spec() << "  order " << G.order() << "  aut "
            << A.order() << "  maps " << maps.size() << "\n";
  std::cout << std::right << std::setw(4) << "id"
            << "  " << std::left << std::setw(10) << "type" << std::right
            << std::setw(6) << "petrie" << std::setw(7) << "genus"
            << "  " << std::left << std::setw(15) << "reflexibility"
            << std::setw(9) << "trace"
            << "cotrace" << "\n";
  for (const auto& c : maps) {
    std::ostringstream type;
    type << '{' << c.inv.p << ',' << c.inv.q << '}';
    std::cout << std::right << std::setw(4) << c.id << "  " << std::left
              << std::setw(10) << type.str() << std::right << std::setw(6)
              << c.inv.r << std::setw(7) << c.inv.genus << "  " << std::left
              << std::setw(15) << to_string(c.inv.reflexibility) << std::setw(9)
              << c.inv.trace.value_or("-") << c.inv.cotrace.value_or("-")
              << "\n";
  }
  return kOk;
}

int cmd_graph(const Settings& st, const std::string& spec, std::string ops_list,
              const std::string& format, const std::string& out_path) {
  FiniteGroup G = FiniteGroup::build(spec, st.caps);
  AutGroup A = compute_aut(G, st.generic_cap);
  if (ops_list.empty()) ops_list = st.default_ops;
  AtlasGraph g = build_atlas(G, A, parse_ops(ops_list));
  write_out(out_path, format == "json" ? to_json(g) : to_dot(g));
  return kOk;
}

int cmd_count(const Settings& st, const std::string& spec,
              const std::string& method, bool per_class) {
  FiniteGroup G = FiniteGroup::build(spec, st.caps);
  AutGroup A = compute_aut(G, st.generic_cap);
  uint64_t phi = 0;
  if (method == "direct") {
    phi = phi_direct_jobs(G, st.jobs);
  } else if (method == "moebius") {
    long long m = phi_moebius(G, subgroup_lattice(G, st.lattice_cap));
    if (m < 0) throw std::logic_error("Moebius inversion produced a negative count");
    phi = uint64_t(m);
  } else {  // formula
    const bool char2 =
        (G.backend() == Backend::psl2 || G.backend() == Backend::sl2) &&
        G.field().p() == 2;
    if (!char2)
      fail(Errc::bad_argument, "the closed formula covers PSL2(2^e) backends only");
    phi = psl2_even_closed_form(G.field().e()) * A.order();
  }
  if (phi % A.order() != 0)
    throw std::logic_error("|Aut G| does not divide the generating-pair count");
  ojson out;
  out["group"] = G.spec();
  out["method"] = method;
  out["phi"] = phi;
  out["aut_order"] = A.order();
  out["o_size"] = phi / A.order();
  const uint32_t n = G.order();
  bool cyclic = (n == 1);
  for (Elt x = 1; x < n && !cyclic; ++x)
    if (uint32_t(G.order_of(x)) == n) cyclic = true;
  if (cyclic) {
    // phi admits y = 1, which never yields a map; report both conventions.
    out["note"] = "cyclic group: o_size counts pairs with y = 1 as well";
    out["enumerated_maps"] = enumerate_maps(G, A).size();
  }
  if (per_class) out["per_class_triples"] = per_class_triples(G);
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_triples(const Settings& st, const std::string& spec, const std::string& X,
                const std::string& Y, const std::string& Z) {
  FiniteGroup G = FiniteGroup::build(spec, st.caps);
  ClassData cd = conjugacy_classes(G);
  TripleCount tc = count_triples(G, cd, X, Y, Z);
  ojson out;
  out["group"] = G.spec();
  out["x_class"] = tc.x_class;
  out["y_class"] = tc.y_class;
  out["z_class"] = tc.z_class;
  out["total"] = tc.total;
  out["generating"] = tc.generating;
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_holes(const Settings& st, const std::string& spec, uint32_t id,
              const std::string& word) {
  FiniteGroup G = FiniteGroup::build(spec, st.caps);
  AutGroup A = compute_aut(G, st.generic_cap);
  std::vector<MapClass> maps = enumerate_maps(G, A);
  if (id >= maps.size())
    fail(Errc::bad_argument, "map id " + std::to_string(id) + " out of range (" +
                                 std::to_string(maps.size()) + " maps)");
  const MapClass& c = maps[id];
  ojson out;
  out["group"] = G.spec();
  out["id"] = c.id;
  out["p"] = c.inv.p;
  out["q"] = c.inv.q;
  out["petrie"] = c.inv.r;
  ojson holes = ojson::array();
  for (uint32_t j = 1; j < c.inv.q; ++j)
    if (std::gcd(j, c.inv.q) == 1)
      holes.push_back({j, hole_length(c.rep, j)});
  out["hole_lengths"] = holes;  // pairs [j, face length of the j-hole map]
  if (!word.empty()) {
    out["word"] = word;
    out["word_order"] = word_order(c.rep, parse_longs(word));
  }
  std::cout << out.dump(2) << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// verify: curated fact suites as JSON data

struct FactLog {
  std::string suite;
  int ok = 0, fail = 0;

  void pass(const std::string& fact, const std::string& detail) {
    ++ok;
    std::cout << "ok   " << suite << ": " << fact;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
  }
  void miss(const std::string& fact, const std::string& detail) {
    ++fail;
    std::cout << "FAIL " << suite << ": " << fact << ": " << detail << "\n";
  }
  // Compares as plain (unordered-object) JSON so key order never matters.
  void check(const std::string& fact, const ojson& got, const ojson& want) {
    if (nlohmann::json(got) == nlohmann::json(want))
      pass(fact, got.dump());
    else
      miss(fact, "expected " + want.dump() + ", got " + got.dump());
  }
};

int run_suite(const Settings& st, const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) fail(Errc::bad_argument, "cannot read suite " + file.string());
  ojson suite;
  try {
    in >> suite;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::bad_argument, "bad suite " + file.string() + ": " + e.what());
  }
  if (!suite.contains("group") || !suite.contains("expect"))
    fail(Errc::bad_argument, "suite " + file.string() + " needs group and expect");

  FactLog log;
  log.suite = suite.value("name", file.stem().string());
  FiniteGroup G = FiniteGroup::build(suite["group"].get<std::string>(), st.caps);
  AutGroup A = compute_aut(G, st.generic_cap);
  std::vector<MapClass> maps = enumerate_maps(G, A);
  const ojson& expect = suite["expect"];

  if (expect.contains("map_count"))
    log.check("map count", maps.size(), expect["map_count"]);
  if (expect.contains("aut_order"))
    log.check("automorphism group order", A.order(), expect["aut_order"]);
  if (expect.contains("types")) {
    ojson got = ojson::array();
    for (const auto& c : maps) got.push_back({c.inv.p, c.inv.q, c.inv.r});
    log.check("extended types [p, q, petrie] in id order", got, expect["types"]);
  }
  if (expect.contains("genera")) {
    ojson got = ojson::array();
    for (const auto& c : maps) got.push_back(c.inv.genus);
    log.check("genera in id order", got, expect["genera"]);
  }
  if (expect.contains("reflexibility")) {
    std::map<std::string, uint64_t> counts;
    for (const auto& c : maps) ++counts[to_string(c.inv.reflexibility)];
    log.check("reflexibility classes", ojson(counts), expect["reflexibility"]);
  }
  if (expect.contains("quotient_genus_offset")) {
    bool all = true;
    for (const auto& c : maps)
      all = all && c.inv.quotient_genus && *c.inv.quotient_genus == c.inv.genus + 1;
    log.check("non-orientable quotient genus = genus + 1 on every map", all,
              expect["quotient_genus_offset"]);
  }
  if (expect.contains("component_sizes")) {
    if (!suite.contains("ops"))
      fail(Errc::bad_argument,
           "suite " + file.string() + " checks components but names no ops");
    const std::string ops = suite["ops"].get<std::string>();
    AtlasGraph g = build_atlas(G, A, parse_ops(ops));
    std::vector<size_t> sizes;
    for (const auto& comp : g.components) sizes.push_back(comp.size());
    std::sort(sizes.rbegin(), sizes.rend());
    log.check("component sizes under " + ops, ojson(sizes),
              expect["component_sizes"]);
  }
  if (expect.contains("triples")) {
    ClassData cd = conjugacy_classes(G);
    for (const auto& t : expect["triples"]) {
      TripleCount tc =
          count_triples(G, cd, t.at("x").get<std::string>(),
                        t.at("y").get<std::string>(), t.at("z").get<std::string>());
      ojson got;
      got["total"] = tc.total;
      got["generating"] = tc.generating;
      ojson want;
      want["total"] = t.at("total");
      want["generating"] = t.at("generating");
      log.check("triples (" + tc.x_class + ", " + tc.y_class + ", " + tc.z_class + ")",
                got, want);
    }
  }
  if (expect.contains("dual_equals_mirror")) {
    bool all = true;
    for (const auto& c : maps) {
      MapTriple d = dual(c.rep), m = mirror(c.rep);
      all = all && A.orbit_key(d.x, d.y) == A.orbit_key(m.x, m.y);
    }
    log.check("dual image and mirror image share an orbit on every map", all,
              expect["dual_equals_mirror"]);
  }

  std::cout << (log.fail ? "FAILED " : "passed ") << log.suite << ": " << log.ok
            << " ok, " << log.fail << " failed\n";
  return log.fail ? kVerifyFail : kOk;
}

int cmd_verify(const Settings& st, const std::string& name, const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (name == "all") {
    if (!fs::is_directory(dir))
      fail(Errc::bad_argument, "no suite directory " + dir);
    for (const auto& ent : fs::directory_iterator(dir))
      if (ent.path().extension() == ".json") files.push_back(ent.path());
    if (files.empty()) fail(Errc::bad_argument, "no suites in " + dir);
    std::sort(files.begin(), files.end());
  } else {
    fs::path file = fs::path(dir) / (name + ".json");
    if (!fs::exists(file)) fail(Errc::bad_argument, "unknown suite " + name);
    files.push_back(file);
  }
  int rc = kOk;
  for (const auto& f : files) {
    int one = kOk;
    try {
      one = run_suite(st, f);
    } catch (const nlohmann::json::exception& e) {
      fail(Errc::bad_argument, "bad suite " + f.string() + ": " + e.what());
    }
    rc = std::max(rc, one);
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "orientably regular maps on a finite rotation group:\n"
      "enumeration, dual/hole operation graphs, independent counts"};
  app.require_subcommand(1);

  Settings st;
  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON config: order_cap, table_cap, lattice_cap, generic_cap, "
                 "default_ops");
  app.add_option("--jobs", st.jobs, "worker threads for sweeps (default 1)")
      ->envname("REGMAP_JOBS")
      ->check(CLI::PositiveNumber);

  std::string spec, ops_list, format = "dot", out_path, json_path, word;
  std::string method = "direct", xc, yc, zc, suite, suite_dir = "data/suites";
  uint32_t valency = 0, map_id = 0;
  bool per_class = false;

  CLI::App* enumerate = app.add_subcommand("enumerate", "list every map class of a group");
  enumerate->add_option("spec", spec, "group spec, e.g. psl2:7 or sym:5")->required();
  CLI::Option* vopt =
      enumerate->add_option("--valency", valency, "restrict to one vertex valency");
  enumerate->add_option("--json", json_path,
                        "write JSON to this file instead of a table ('-' for stdout)");

  CLI::App* graph = app.add_subcommand("graph", "operation graph over the map classes");
  graph->add_option("spec", spec, "group spec")->required();
  graph->add_option("--ops", ops_list, "operations, e.g. D,H2,H-1 (default from config)");
  graph->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--output", out_path, "output file (default stdout)");

  CLI::App* count = app.add_subcommand("count", "count maps without enumerating them");
  count->add_option("spec", spec, "group spec")->required();
  count->add_option("--method", method, "direct, moebius, or formula")
      ->check(CLI::IsMember({"direct", "moebius", "formula"}));
  count->add_flag("--per-class", per_class, "include classwise triple counts");

  CLI::App* triples =
      app.add_subcommand("triples", "count triples (x, y, z) with xyz = 1 classwise");
  triples->add_option("spec", spec, "group spec")->required();
  triples->add_option("x", xc, "conjugacy class of x, e.g. 7A")->required();
  triples->add_option("y", yc, "conjugacy class of y (an involution class)")->required();
  triples->add_option("z", zc, "conjugacy class of z")->required();

  CLI::App* holes =
      app.add_subcommand("holes", "hole lengths and zigzag word orders of one map");
  holes->add_option("spec", spec, "group spec")->required();
  holes->add_option("--id", map_id, "map id from enumerate")->required();
  holes->add_option("--word", word, "comma-separated zigzag exponents d1,d2,...");

  CLI::App* verify = app.add_subcommand("verify", "check curated fact suites");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--suite-dir", suite_dir, "directory of suite JSON files");

  for (CLI::App* sc : app.get_subcommands(nullptr)) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (!config_path.empty()) load_config(st, config_path);
    if (app.got_subcommand(enumerate))
      return cmd_enumerate(
          st, spec, vopt->count() ? std::optional<uint32_t>(valency) : std::nullopt,
          json_path);
    if (app.got_subcommand(graph)) return cmd_graph(st, spec, ops_list, format, out_path);
    if (app.got_subcommand(count)) return cmd_count(st, spec, method, per_class);
    if (app.got_subcommand(triples)) return cmd_triples(st, spec, xc, yc, zc);
    if (app.got_subcommand(holes)) return cmd_holes(st, spec, map_id, word);
    if (app.got_subcommand(verify)) return cmd_verify(st, suite, suite_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::cap_exceeded ? kCap : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFail;
  }
  return kUsage;
}
