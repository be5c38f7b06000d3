#pragma once

// Dual and hole operations on map triples.
//
// D sends (x, y, z) to (z, y, x^y), exchanging vertices with faces; H_j
// replaces the vertex rotation x by x^j for j coprime to the valency,
// re-tracing the faces along j-holes.  H_{-1} is the mirror image.  All
// operations preserve the group, the generation property, and the
// reflexibility class; whether one fixes a map is decided on Aut-orbits of
// pairs, not on raw triples.

#include <cstdint>
#include <string>
#include <vector>

#include "regmap/map.hpp"

namespace regmap {

struct MapOperation {
  enum class Kind { dual, hole };
  Kind kind = Kind::dual;
  long long j = 0;  // hole exponent, nonzero; unused for dual

  std::string name() const;  // "D", "H2", "H-1", ...
};

MapTriple dual(const MapTriple& m);
MapTriple hole(const MapTriple& m, long long j);  // requires gcd(j, q) = 1
MapTriple mirror(const MapTriple& m);             // hole(m, q - 1)

MapTriple apply_op(const MapTriple& m, const MapOperation& op);

// Parses a comma-separated operation list like "D,H2,H3,H-1".
std::vector<MapOperation> parse_ops(const std::string& list);

}  // namespace regmap
