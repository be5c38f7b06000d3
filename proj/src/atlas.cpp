#include "regmap/atlas.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "regmap/error.hpp"

namespace regmap {

namespace {

using ojson = nlohmann::ordered_json;

// Sweep representative for one involution orbit: the standard antidiagonal
// involution when it lies in the orbit (keeping matrix traces comparable),
// otherwise the orbit's least element.
Elt sweep_rep(const FiniteGroup& G, const AutGroup& A, Elt orbit_rep) {
  auto ystd = standard_antidiagonal(G);
  if (!ystd || *ystd == orbit_rep) return orbit_rep;
  auto orb = A.orbit(orbit_rep);
  return std::binary_search(orb.begin(), orb.end(), *ystd) ? *ystd : orbit_rep;
}

std::array<uint64_t, 4> sort_key(const MapClass& c) {
  return {uint64_t(c.inv.q), uint64_t(c.inv.p),
          (uint64_t(c.inv.r) << 32) | c.inv.genus,
          (uint64_t(c.canon.first) << 16) | c.canon.second};
}

Reflexibility reflexibility_from_string(const std::string& s) {
  if (s == "chiral") return Reflexibility::chiral;
  if (s == "inner-regular") return Reflexibility::inner_regular;
  if (s == "outer-regular") return Reflexibility::outer_regular;
  fail(Errc::bad_argument, "unknown reflexibility '" + s + "'");
}

struct Dsu {
  std::vector<uint32_t> parent;
  explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  uint32_t find(uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(uint32_t a, uint32_t b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<uint32_t>> partition_components(size_t n,
                                                        const std::vector<AtlasEdge>& edges) {
  Dsu dsu(n);
  for (const auto& e : edges) dsu.unite(e.src, e.dst);
  std::map<uint32_t, std::vector<uint32_t>> groups;
  for (uint32_t v = 0; v < n; ++v) groups[dsu.find(v)].push_back(v);
  std::vector<std::vector<uint32_t>> out;
  out.reserve(groups.size());
  for (auto& [root, ids] : groups) out.push_back(std::move(ids));
  std::sort(out.begin(), out.end());  // each group is ascending; order by least id
  return out;
}

}  // namespace

std::vector<MapClass> enumerate_maps(const FiniteGroup& G, const AutGroup& A,
                                     std::optional<uint32_t> valency) {
  std::vector<MapClass> out;
  for (const auto& ob : involution_orbits(G, A)) {
    if (!ob.useful) continue;
    Elt y = sweep_rep(G, A, ob.rep);
    std::map<std::pair<Elt, Elt>, Elt> first_x;  // orbit invariant -> least x
    for (uint32_t xi = 0; xi < G.order(); ++xi) {
      Elt x = Elt(xi);
      if (valency && uint32_t(G.order_of(x)) != *valency) continue;
      if (!G.generates({x, y})) continue;
      first_x.emplace(A.orbit_key(x, y), x);
    }
    for (const auto& [key, x] : first_x) {
      MapClass c;
      c.rep = make_map(G, x, y);
      c.canon = A.canon_pair(x, y);
      c.inv = invariants(c.rep, A);
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const MapClass& a, const MapClass& b) { return sort_key(a) < sort_key(b); });
  for (size_t i = 0; i < out.size(); ++i) {
    out[i].id = uint32_t(i);
    if (i && out[i - 1].canon == out[i].canon)
      throw std::logic_error("two map classes share a canonical pair");
  }
  return out;
}

AtlasGraph build_atlas(const FiniteGroup& G, const AutGroup& A,
                       const std::vector<MapOperation>& ops) {
  if (ops.empty()) fail(Errc::bad_argument, "operation set must be nonempty");
  AtlasGraph g;
  g.group_spec = G.spec();
  g.aut_order = A.order();
  for (const auto& op : ops) g.op_labels.push_back(op.name());
  g.maps = enumerate_maps(G, A);

  std::map<std::pair<Elt, Elt>, uint32_t> class_of;
  for (const auto& c : g.maps) class_of[A.orbit_key(c.rep.x, c.rep.y)] = c.id;

  std::set<std::tuple<uint32_t, uint32_t, std::string, bool>> edge_set;
  for (const auto& c : g.maps) {
    for (const auto& op : ops) {
      MapTriple img;
      if (op.kind == MapOperation::Kind::hole) {
        long long q = c.inv.q;
        if (std::gcd(((op.j % q) + q) % q, q) != 1) continue;  // inapplicable here
        img = hole(c.rep, op.j);
      } else {
        img = dual(c.rep);
      }
      auto it = class_of.find(A.orbit_key(img.x, img.y));
      if (it == class_of.end())
        throw std::logic_error("operation image is not an enumerated class");
      uint32_t dst = it->second;
      if (dst == c.id) continue;  // loops omitted
      bool undirected = op.kind == MapOperation::Kind::dual || op.j == -1;
      uint32_t s = c.id, d = dst;
      if (undirected && s > d) std::swap(s, d);
      edge_set.insert({s, d, op.name(), !undirected});
    }
  }
  for (const auto& [s, d, label, directed] : edge_set)
    g.edges.push_back({s, d, label, directed});

  g.components = partition_components(g.maps.size(), g.edges);
  component_summaries(g, A);  // asserts per-component constancy
  return g;
}

std::vector<ComponentSummary> component_summaries(const AtlasGraph& g,
                                                  const AutGroup& A) {
  std::vector<ComponentSummary> out;
  for (const auto& ids : g.components) {
    if (ids.empty()) throw std::logic_error("empty component");
    ComponentSummary s;
    s.ids = ids;
    s.reflexibility = g.maps[ids[0]].inv.reflexibility;
    s.y_least = A.orbit(g.maps[ids[0]].rep.y).front();
    for (uint32_t id : ids) {
      if (g.maps[id].inv.reflexibility != s.reflexibility)
        throw std::logic_error("component mixes reflexibility classes");
      if (A.orbit(g.maps[id].rep.y).front() != s.y_least)
        throw std::logic_error("component mixes involution orbits");
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

ojson map_entry(const MapClass& c) {
  ojson m;
  m["id"] = c.id;
  m["p"] = c.inv.p;
  m["q"] = c.inv.q;
  m["r"] = c.inv.r;
  m["genus"] = c.inv.genus;
  m["reflexibility"] = to_string(c.inv.reflexibility);
  if (c.inv.trace) m["trace"] = *c.inv.trace;
  if (c.inv.cotrace) m["cotrace"] = *c.inv.cotrace;
  m["x_index"] = c.rep.x;
  m["y_index"] = c.rep.y;
  return m;
}

}  // namespace

std::string maps_to_json(const std::string& group_spec, uint64_t aut_order,
                         const std::vector<MapClass>& maps) {
  ojson j;
  j["group"] = group_spec;
  j["aut_order"] = aut_order;
  j["maps"] = ojson::array();
  for (const auto& c : maps) j["maps"].push_back(map_entry(c));
  return j.dump(2) + "\n";
}

std::string to_json(const AtlasGraph& g) {
  ojson j;
  j["group"] = g.group_spec;
  j["aut_order"] = g.aut_order;
  j["ops"] = g.op_labels;
  j["maps"] = ojson::array();
  for (const auto& c : g.maps) j["maps"].push_back(map_entry(c));
  j["edges"] = ojson::array();
  for (const auto& e : g.edges) {
    ojson je;
    je["src"] = e.src;
    je["dst"] = e.dst;
    je["label"] = e.label;
    je["directed"] = e.directed;
    j["edges"].push_back(std::move(je));
  }
  j["components"] = g.components;
  return j.dump(2) + "\n";
}

AtlasGraph parse_atlas(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::bad_argument, std::string("bad atlas JSON: ") + e.what());
  }
  AtlasGraph g;
  try {
    g.group_spec = j.at("group").get<std::string>();
    g.aut_order = j.at("aut_order").get<uint64_t>();
    g.op_labels = j.at("ops").get<std::vector<std::string>>();
    for (const auto& m : j.at("maps")) {
      MapClass c;
      c.id = m.at("id").get<uint32_t>();
      c.inv.p = m.at("p").get<uint32_t>();
      c.inv.q = m.at("q").get<uint32_t>();
      c.inv.r = m.at("r").get<uint32_t>();
      c.inv.genus = m.at("genus").get<uint64_t>();
      c.inv.reflexibility = reflexibility_from_string(m.at("reflexibility").get<std::string>());
      if (m.contains("trace")) c.inv.trace = m.at("trace").get<std::string>();
      if (m.contains("cotrace")) c.inv.cotrace = m.at("cotrace").get<std::string>();
      c.rep.group = nullptr;
      c.rep.x = m.at("x_index").get<Elt>();
      c.rep.y = m.at("y_index").get<Elt>();
      c.canon = {c.rep.x, c.rep.y};
      g.maps.push_back(std::move(c));
    }
    for (const auto& e : j.at("edges")) {
      g.edges.push_back({e.at("src").get<uint32_t>(), e.at("dst").get<uint32_t>(),
                         e.at("label").get<std::string>(), e.at("directed").get<bool>()});
    }
    g.components = j.at("components").get<std::vector<std::vector<uint32_t>>>();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::bad_argument, std::string("bad atlas JSON: ") + e.what());
  }
  return g;
}

std::string to_dot(const AtlasGraph& g) {
  std::ostringstream os;
  os << "digraph atlas {\n";
  os << "  label=\"" << g.group_spec << "  |Aut|=" << g.aut_order << "\";\n";
  os << "  node [shape=box];\n";
  for (const auto& c : g.maps) {
    os << "  v" << c.id << " [label=\"" << c.id << ": {" << c.inv.p << ","
       << c.inv.q << "}_" << c.inv.r << " g" << c.inv.genus << " "
       << to_string(c.inv.reflexibility) << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.label << "\"";
    if (!e.directed) {
      os << ", dir=none, style=" << (e.label == "D" ? "dashed" : "dotted");
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace regmap
