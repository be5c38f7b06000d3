#pragma once

// Enumeration of all maps on a group up to isomorphism, and the graph that
// the dual and hole operations induce on them.
//
// Map classes correspond bijectively to Aut(G)-orbits of generating pairs
// (x, y) with y an involution.  The enumerator picks one involution per
// useful orbit (preferring the standard antidiagonal one on matrix groups,
// so traces stay comparable), sweeps x, and dedupes by a complete orbit
// invariant; class ids are assigned after a deterministic global sort.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regmap/aut.hpp"
#include "regmap/map.hpp"
#include "regmap/ops.hpp"

namespace regmap {

struct MapClass {
  uint32_t id = 0;
  std::pair<Elt, Elt> canon;  // least (alpha(x), alpha(y)) over Aut(G)
  MapTriple rep;              // deterministic representative triple
  MapInvariants inv;
};

struct AtlasEdge {
  uint32_t src = 0, dst = 0;
  std::string label;    // "D", "H2", "H-1", ...
  bool directed = true; // D and H-1 edges are undirected
};

struct AtlasGraph {
  std::string group_spec;
  uint64_t aut_order = 0;
  std::vector<std::string> op_labels;
  std::vector<MapClass> maps;                    // sorted, ids = positions
  std::vector<AtlasEdge> edges;                  // sorted, loops omitted
  std::vector<std::vector<uint32_t>> components; // sorted id partitions
};

// One MapClass per orbit of generating pairs; optionally restricted to maps
// of one vertex valency (order of x).  Sort order: (q, p, r, genus, canon).
std::vector<MapClass> enumerate_maps(const FiniteGroup& G, const AutGroup& A,
                                     std::optional<uint32_t> valency = std::nullopt);

// Applies every operation at every vertex, records non-loop edges (dedup
// for the undirected D and H-1), and splits into connected components.
// Verifies that reflexibility class and the orbit of y are constant on each
// component.
AtlasGraph build_atlas(const FiniteGroup& G, const AutGroup& A,
                       const std::vector<MapOperation>& ops);

struct ComponentSummary {
  std::vector<uint32_t> ids;
  Reflexibility reflexibility;  // shared by every map in the component
  Elt y_least;                  // least element of the shared y-orbit
};

std::vector<ComponentSummary> component_summaries(const AtlasGraph& g,
                                                  const AutGroup& A);

// JSON object {group, aut_order, ops, maps, edges, components}; each map
// record carries {id, p, q, r, genus, reflexibility, trace?, cotrace?,
// x_index, y_index}.  Output is byte-stable for a fixed input.
std::string to_json(const AtlasGraph& g);

// Edge-free JSON object {group, aut_order, maps} with the same map records
// as to_json, for plain enumeration listings.
std::string maps_to_json(const std::string& group_spec, uint64_t aut_order,
                         const std::vector<MapClass>& maps);

// Inverse of to_json up to the live group reference: representative triples
// come back as bare indexes with a null group pointer.
AtlasGraph parse_atlas(const std::string& json_text);

// Graphviz source: undirected dashed edges for D, dotted for H-1, solid
// directed edges for other H_j; vertices labeled with extended type, genus,
// and reflexibility.
std::string to_dot(const AtlasGraph& g);

}  // namespace regmap
