#pragma once

// Orientably regular maps as generating triples.
//
// A map on group G is a pair (x, y) with y an involution and <x, y> = G,
// closed into a triple by z = (xy)^-1 so that x y z = 1.  The local rotation
// x walks the arcs around a vertex (valency q = order(x)), y swaps the two
// arcs of an edge, and z walks a face boundary (face length p = order(z)).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regmap/aut.hpp"
#include "regmap/group.hpp"

namespace regmap {

struct MapTriple {
  const FiniteGroup* group = nullptr;
  Elt x{}, y{}, z{};
};

// chiral: no automorphism inverts x while fixing y (the mirror image is a
// different map).  Otherwise the unique such automorphism is the reflection;
// inner_regular / outer_regular record whether it is inner.
enum class Reflexibility { chiral, inner_regular, outer_regular };

std::string to_string(Reflexibility r);

struct MapInvariants {
  uint32_t q = 0;  // vertex valency = order(x)
  uint32_t p = 0;  // face length = order(z)
  uint32_t r = 0;  // Petrie length = 2 * order([x, y])
  uint64_t genus = 0;
  Reflexibility reflexibility = Reflexibility::chiral;
  // Conjugation-invariant trace of x and of z, only for matrix backends with
  // y in the standard antidiagonal form (see trace_cotrace).
  std::optional<std::string> trace, cotrace;
  // Genus of the non-orientable quotient surface, present exactly when the
  // map is inner-regular and the group has trivial centre; equals genus + 1.
  std::optional<uint64_t> quotient_genus;
};

// Builds the triple, rejecting pairs that do not define a map.  The two
// failure modes throw distinct error codes: Errc::not_involution when
// order(y) != 2 and Errc::not_generating when <x, y> is a proper subgroup.
MapTriple make_map(const FiniteGroup& G, Elt x, Elt y);

// Exact genus from the Euler characteristic: V - E + F with V = |G|/q,
// E = |G|/2, F = |G|/p.  Throws logic_error if the result is not a
// non-negative integer (impossible for a valid triple).
uint64_t genus_of(uint64_t group_order, uint32_t p, uint32_t q);

MapInvariants invariants(const MapTriple& m, const AutGroup& A);

// Order of (x^j y)^-1, the face length of the j-hole map.  Requires
// gcd(j, order(x)) = 1; j may be negative (taken mod order(x)).
uint32_t hole_length(const MapTriple& m, long long j);

// Order of x^{d1} y x^{d2} y ... x^{dm} y; the closed zigzags of exponent
// pattern (d1..dm) repeat that pattern word_order times.  Exponents may be
// negative (taken mod order(x)); the list must be nonempty.
uint32_t word_order(const MapTriple& m, const std::vector<long long>& exponents);

// Evaluates words in R = x and S = z against the identity, one flag per
// word.  Grammar: atoms R and S with optional integer exponents, `*` for
// concatenation, parenthesized subwords with exponents -- e.g. `R^-7`,
// `(R*S)^2`, `(S^-1*R)^3`.  The empty word is the identity.  Malformed
// words throw Errc::bad_argument.
std::vector<bool> check_relators(const MapTriple& m,
                                 const std::vector<std::string>& relators);

// Trace of x and of z as conjugation-invariant labels, for matrix backends
// whose y is the standard antidiagonal involution [[0,1],[-1,0]] (so the
// labels are comparable across maps).  Throws Errc::bad_argument otherwise.
std::pair<std::string, std::string> trace_cotrace(const MapTriple& m);

// The element [[0,1],[-1,0]] of a matrix group, or nullopt for other
// backends; the preferred shared y when enumerating maps.
std::optional<Elt> standard_antidiagonal(const FiniteGroup& G);

}  // namespace regmap
