#pragma once

// Automorphism groups of the supported finite groups.
//
// Family constructions (symmetric/alternating, PSL2/SL2, AGL1 over GF(2^e))
// supply known generators whose generated order is verified honestly by a
// BFS orbit of the group's generating tuple; every other backend falls back
// to a generic search over generator images filtered by order and class
// size.  Automorphisms are stored as image tables on element indexes.
//
// Canonical pairs: canon_pair(x, y) is the lexicographically least
// (alpha(x), alpha(y)) over the whole automorphism group, found by a BFS of
// the pair orbit.  orbit_key(x, y) is a cheaper complete orbit invariant for
// hot loops: it minimizes y over its orbit, then minimizes the transported x
// under the cached stabilizer of that least involution.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regmap/group.hpp"

namespace regmap {

struct Automorphism {
  std::vector<Elt> perm;  // image table, perm[e] = alpha(e)
  Elt operator()(Elt e) const { return perm[e]; }
};

Automorphism compose(const Automorphism& a, const Automorphism& b);  // a after b
Automorphism inverse_of(const Automorphism& a);

class AutGroup {
 public:
  const FiniteGroup& group() const { return *G_; }
  uint64_t order() const { return order_; }
  uint64_t inner_order() const { return inner_order_; }
  const std::vector<Automorphism>& generators() const { return gens_; }

  // Every automorphism, lex-sorted by image table.  Throws cap_exceeded when
  // order * |G| is unreasonably large to hold in memory.
  const std::vector<Automorphism>& all() const;

  // Sorted orbit of an element index.
  std::vector<Elt> orbit(Elt e) const;

  // Least (alpha(x), alpha(y)) over all automorphisms alpha, compared with
  // the first coordinate dominant.
  std::pair<Elt, Elt> canon_pair(Elt x, Elt y) const;

  // A complete invariant of the orbit of (x, y) that is cheaper to evaluate
  // than canon_pair when many pairs share one y; the value is some fixed
  // representative of the orbit, not necessarily the least pair.
  std::pair<Elt, Elt> orbit_key(Elt x, Elt y) const;

  // The subgroup fixing the given element, as materialized image tables.
  const std::vector<Automorphism>& stabilizer(Elt fixed) const;

 private:
  friend AutGroup compute_aut(const FiniteGroup&, uint32_t);
  friend AutGroup compute_aut_generic(const FiniteGroup&, uint32_t);
  AutGroup() = default;

  struct YOrbit {
    Elt least;
    Automorphism to_least;  // maps the queried y to the least orbit element
  };
  const YOrbit& y_orbit(Elt y) const;

  const FiniteGroup* G_ = nullptr;
  std::vector<Automorphism> gens_;
  uint64_t order_ = 1;
  uint64_t inner_order_ = 1;
  mutable std::vector<Automorphism> all_;
  mutable std::map<Elt, YOrbit> y_cache_;
  mutable std::map<Elt, std::vector<Automorphism>> stab_cache_;
};

// Family shortcut when available, generic search otherwise.  generic_cap
// bounds the group order admitted to the generic search.
AutGroup compute_aut(const FiniteGroup& G, uint32_t generic_cap = 1200);
// Force the generic search (for cross-validation against the shortcuts).
AutGroup compute_aut_generic(const FiniteGroup& G, uint32_t generic_cap = 1200);

// Least group element whose conjugation action equals the image table, if any.
std::optional<Elt> inner_witness(const FiniteGroup& G, const std::vector<Elt>& perm);

struct InvolutionOrbit {
  Elt rep;        // least involution in the orbit
  uint32_t size;
  bool useful;    // some x makes (x, rep) a generating pair
};

// Aut-orbits of involutions, sorted by representative; the count of useful
// orbits is i(G).
std::vector<InvolutionOrbit> involution_orbits(const FiniteGroup& G, const AutGroup& A);

// Standalone symmetric-group closure test for degrees past the group cap:
// ranks permutations by Lehmer code into a bitset, BFS from the pair,
// early-accepting once more than n!/2 elements appear.  Images are 0-based,
// 2 <= n <= 10.
bool sym_pair_generates(int n, const std::vector<int>& x_images,
                        const std::vector<int>& y_images);

struct SymInvolutionWitness {
  int transpositions;           // class parameter t, y = (1,2)(3,4)...(2t-1,2t)
  std::string y_cycles;
  std::optional<std::string> x_cycles;  // verified generating partner
};

// One witness row per involution class of S_n (t = 1..n/2), each verified by
// sym_pair_generates.  5 <= n <= 9 is the intended range; 2 <= n <= 10 works.
std::vector<SymInvolutionWitness> sym_useful_witnesses(int n);

}  // namespace regmap
