#pragma once

// Counting orientably regular maps without enumerating them: direct
// class-based triple counts (the character-free Frobenius cross-check),
// Moebius inversion over the subgroup lattice, the closed formula for
// PSL2(2^e), and Hall's trace criterion for Hurwitz maps.

#include <cstdint>
#include <string>
#include <vector>

#include "regmap/aut.hpp"
#include "regmap/group.hpp"
#include "regmap/map.hpp"

namespace regmap {

struct SubgroupLattice {
  // Sorted element-index lists, one per subgroup, ordered by (size, content):
  // first the trivial subgroup, last the whole group.
  std::vector<std::vector<Elt>> subgroups;
  // Moebius function per subgroup: mu(G) = 1 and, for every proper H,
  // the sum of mu(K) over K >= H vanishes.
  std::vector<long long> mu;

  size_t size() const { return subgroups.size(); }
  // True iff subgroups[i] is contained in subgroups[j].
  bool subset(size_t i, size_t j) const;
};

// Every subgroup of G by bottom-up closure: seed with all cyclic subgroups,
// then join <H, g> over prime-power-order generators g to a fixpoint,
// processing subgroups smallest-first.  mu is computed top-down from
// mu(G) = 1 by the defining recurrence.  Throws cap_exceeded when |G| > cap.
SubgroupLattice subgroup_lattice(const FiniteGroup& G, uint32_t cap = 1200);

// Hall's weight |H| * (number of involutions in H + 1); the "+ 1" counts the
// identity as an admissible y.
uint64_t sigma(const FiniteGroup& G, const std::vector<Elt>& H);

struct TripleCount {
  std::string x_class, y_class, z_class;
  uint64_t total = 0;       // triples (x, y, z) with xyz = 1, classwise
  uint64_t generating = 0;  // those with <x, y> = G
};

// Counts triples (x, y, z) with x in X, y in Y, z in Z and xyz = 1 by a
// direct double loop over X x Y, membership-testing (xy)^-1 into Z through
// the class-of-element table.  No character tables are involved; by
// Frobenius's theorem the totals equal the character-sum values.
TripleCount count_triples(const FiniteGroup& G, const ClassData& cd,
                          const std::string& X, const std::string& Y,
                          const std::string& Z);

// phi(G) = sum over the lattice of mu(H) sigma(H): the number of pairs
// (x, y) with y^2 = 1 (y = 1 allowed) generating G, by Moebius inversion.
long long phi_moebius(const FiniteGroup& G, const SubgroupLattice& L);

// The same count by a direct sweep over candidate pairs.
uint64_t phi_direct(const FiniteGroup& G);

// phi(G) / |Aut G|: the number of orientably regular maps with rotation
// group G whenever G is not cyclic (for cyclic G the y = 1 pairs inflate
// phi, and the CLI reports both conventions).  Automorphisms act freely on
// generating pairs, so divisibility is a theorem; a failure is reported as
// logic_error because it always indicates an automorphism-group bug.
uint64_t order_of_O(const FiniteGroup& G, const AutGroup& A);

// (1/e) sum over f | e of mu(e/f) (2^f - 1)(2^f - 2): the map count for
// PSL2(2^e).  Requires e >= 2 (throws bad_argument below that).
uint64_t psl2_even_closed_form(int e);

// Hall's criterion for a Hurwitz map (type {3,7}) on a PSL2(q) backend:
// inner-regular iff 3 - tau^2 is a square in F_q, where tau is the trace of
// either lift of x to SL2(q) (tau enters squared, so the sign ambiguity
// between the two lifts is immaterial).  Throws bad_argument for a non-PSL2
// backend or a map of the wrong type.  Cross-validated per map against the
// automorphism-based classification for q = 7, 13, 27, 29, and against the
// known inner-regular Hurwitz map counts for q = 43, 167, 181 (two, none,
// and all three).
Reflexibility hall_square_criterion(const FiniteGroup& G, const MapTriple& m);

}  // namespace regmap
