#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "regmap/atlas.hpp"
#include "regmap/census.hpp"
#include "regmap/error.hpp"

using namespace regmap;

namespace {

// Exhaustive checks of the lattice contract: orders divide |G|, the defining
// recurrence of mu holds at every proper subgroup, and the subgroup set is
// closed under pairwise intersection.
void check_lattice_contract(const FiniteGroup& G, const SubgroupLattice& L) {
  REQUIRE(!L.subgroups.empty());
  CHECK(L.subgroups.front().size() == 1);
  CHECK(L.subgroups.back().size() == G.order());
  CHECK(L.mu.back() == 1);
  for (const auto& H : L.subgroups) CHECK(G.order() % H.size() == 0);

  for (size_t i = 0; i + 1 < L.size(); ++i) {
    long long acc = L.mu[i];
    for (size_t j = i + 1; j < L.size(); ++j)
      if (L.subgroups[j].size() % L.subgroups[i].size() == 0 &&
          L.subgroups[j].size() != L.subgroups[i].size() && L.subset(i, j))
        acc += L.mu[j];
    CHECK(acc == 0);
  }

  std::set<std::vector<Elt>> have(L.subgroups.begin(), L.subgroups.end());
  for (size_t i = 0; i < L.size(); ++i)
    for (size_t j = i + 1; j < L.size(); ++j) {
      std::vector<Elt> meet;
      std::set_intersection(L.subgroups[i].begin(), L.subgroups[i].end(),
                            L.subgroups[j].begin(), L.subgroups[j].end(),
                            std::back_inserter(meet));
      CHECK(have.count(meet) == 1);
    }
}

long long mu_of_class(const FiniteGroup& G, const SubgroupLattice& L,
                      size_t order, bool* uniform = nullptr) {
  long long value = 0;
  bool seen = false, same = true;
  for (size_t i = 0; i < L.size(); ++i) {
    if (L.subgroups[i].size() != order) continue;
    if (!seen) {
      value = L.mu[i];
      seen = true;
    } else if (L.mu[i] != value) {
      same = false;
    }
  }
  REQUIRE(seen);
  if (uniform) *uniform = same;
  return value;
}

}  // namespace

TEST_CASE("lattice of a cyclic prime group is the two-element chain") {
  auto G = FiniteGroup::build("perm:(1,2,3,4,5)");
  auto L = subgroup_lattice(G);
  REQUIRE(L.size() == 2);
  CHECK(L.subgroups[0] == std::vector<Elt>{0});
  CHECK(L.subgroups[1].size() == 5);
  CHECK(L.mu[1] == 1);
  CHECK(L.mu[0] == -1);
  check_lattice_contract(G, L);
}

TEST_CASE("lattice and mu of the symmetric group on three points") {
  auto G = FiniteGroup::build("sym:3");
  auto L = subgroup_lattice(G);
  REQUIRE(L.size() == 6);  // 1, three C2, C3, S3
  CHECK(L.mu.back() == 1);
  CHECK(mu_of_class(G, L, 3) == -1);
  bool uniform = false;
  CHECK(mu_of_class(G, L, 2, &uniform) == -1);
  CHECK(uniform);
  CHECK(L.mu.front() == 3);
  check_lattice_contract(G, L);
}

TEST_CASE("lattice of the alternating group on four points") {
  auto G = FiniteGroup::build("alt:4");
  auto L = subgroup_lattice(G);
  REQUIRE(L.size() == 10);  // 1, three C2, four C3, V4, A4
  CHECK(mu_of_class(G, L, 12) == 1);
  CHECK(mu_of_class(G, L, 4) == -1);
  bool uniform = false;
  CHECK(mu_of_class(G, L, 3, &uniform) == -1);
  CHECK(uniform);
  CHECK(mu_of_class(G, L, 2, &uniform) == 0);
  CHECK(uniform);
  CHECK(L.mu.front() == 4);
  check_lattice_contract(G, L);
}

TEST_CASE("lattice contract holds for assorted small groups") {
  for (const char* spec : {"sym:4", "dihedral:6", "perm:(1,2,3,4,5,6,7,8,9,10,11,12)",
                           "dihedral:4", "alt:5"}) {
    CAPTURE(spec);
    auto G = FiniteGroup::build(spec);
    auto L = subgroup_lattice(G);
    check_lattice_contract(G, L);
  }
  CHECK(subgroup_lattice(FiniteGroup::build("sym:4")).size() == 30);
  CHECK(subgroup_lattice(FiniteGroup::build("alt:5")).size() == 59);
}

TEST_CASE("lattice cap rejects oversized groups") {
  auto G = FiniteGroup::build("sym:4");
  CHECK_THROWS_AS(subgroup_lattice(G, 10), Error);
  auto big = FiniteGroup::build("psl2:16");
  CHECK_THROWS_AS(subgroup_lattice(big), Error);
  try {
    subgroup_lattice(big);
    FAIL("expected cap_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cap_exceeded);
  }
}

TEST_CASE("sigma weights subgroups by involution count plus one") {
  auto G = FiniteGroup::build("psl2:7");
  auto L = subgroup_lattice(G);
  CHECK(sigma(G, L.subgroups.front()) == 1);  // trivial subgroup
  uint64_t c2 = 0;
  for (const auto& H : L.subgroups)
    if (H.size() == 2) c2 = sigma(G, H);
  CHECK(c2 == 4);  // |C2| * (1 involution + 1)
  CHECK(sigma(G, L.subgroups.back()) == 3696);  // 168 * (21 + 1)
}

TEST_CASE("generating-pair counts by Moebius inversion and by direct sweep") {
  // Cyclic groups: both routes include the y = 1 pairs, e.g. phi(C2) = 3
  // from (g,1), (g,g), (1,g).
  {
    auto C2 = FiniteGroup::build("perm:(1,2)");
    auto L = subgroup_lattice(C2);
    CHECK(phi_moebius(C2, L) == 3);
    CHECK(phi_direct(C2) == 3);
  }
  for (const char* spec :
       {"perm:(1,2,3)", "perm:(1,2,3,4)", "perm:(1,2,3,4,5,6)",
        "perm:(1,2,3,4,5,6,7,8,9,10,11,12)", "sym:3", "sym:4", "alt:4",
        "alt:5", "dihedral:2", "dihedral:3", "dihedral:5", "dihedral:8"}) {
    CAPTURE(spec);
    auto G = FiniteGroup::build(spec);
    auto L = subgroup_lattice(G);
    auto phi = phi_moebius(G, L);
    REQUIRE(phi >= 0);
    CHECK(uint64_t(phi) == phi_direct(G));
  }
}

TEST_CASE("map counts for the Klein quartic group and its relatives") {
  auto G = FiniteGroup::build("psl2:7");
  auto L = subgroup_lattice(G);
  CHECK(L.size() == 179);
  check_lattice_contract(G, L);
  CHECK(phi_moebius(G, L) == 1680);  // 5 maps x |PGL2(7)|
  CHECK(phi_direct(G) == 1680);
  auto A = compute_aut(G);
  CHECK(order_of_O(G, A) == 5);
}

TEST_CASE("map counts match the enumerator across backends") {
  struct Row {
    const char* spec;
    uint64_t maps;
  };
  // AGL1(2^e) realizes phi(2^e - 1)/e maps: 1, 2, 2, 6 for e = 2..5.
  for (Row row : {Row{"alt:4", 1}, Row{"sym:4", 2}, Row{"alt:5", 3},
                  Row{"sym:5", 7}, Row{"sl2:8", 14}, Row{"agl1:4", 1},
                  Row{"agl1:8", 2}, Row{"agl1:16", 2}, Row{"agl1:32", 6}}) {
    CAPTURE(row.spec);
    auto G = FiniteGroup::build(row.spec);
    auto A = compute_aut(G);
    CHECK(order_of_O(G, A) == row.maps);
    CHECK(enumerate_maps(G, A).size() == row.maps);
  }
}

TEST_CASE("triple counts for the Klein quartic group") {
  auto G = FiniteGroup::build("psl2:7");
  auto cd = conjugacy_classes(G);

  // Mixed order-7 classes admit no triples at all.
  auto mixed = count_triples(G, cd, "7A", "2A", "7B");
  CHECK(mixed.total == 0);
  CHECK(mixed.generating == 0);
  auto mixed2 = count_triples(G, cd, "7B", "2A", "7A");
  CHECK(mixed2.total == 0);

  // Equal order-7 classes: 336 triples in all, every one generating.
  auto aa = count_triples(G, cd, "7A", "2A", "7A");
  auto bb = count_triples(G, cd, "7B", "2A", "7B");
  CHECK(aa.total + bb.total == 336);
  CHECK(aa.generating == aa.total);
  CHECK(bb.generating == bb.total);
  CHECK(aa.total == bb.total);  // swapped by the outer automorphism
  // Inner automorphisms act freely and preserve class labels.
  CHECK(aa.generating % G.order() == 0);

  CHECK_THROWS_AS(count_triples(G, cd, "7A", "2A", "9Z"), Error);
}

TEST_CASE("triple totals decompose the involution pair count") {
  auto G = FiniteGroup::build("psl2:7");
  auto cd = conjugacy_classes(G);
  auto A = compute_aut(G);
  uint64_t total = 0, generating = 0;
  for (const auto& cx : cd.classes)
    for (const auto& cz : cd.classes) {
      auto tc = count_triples(G, cd, cx.name, "2A", cz.name);
      total += tc.total;
      generating += tc.generating;
    }
  // Every pair (x, y) with y in 2A determines one triple, so the totals sum
  // to |G| * |2A|; the generating ones are exactly the maps-times-Aut count.
  CHECK(total == uint64_t(168) * 21);
  CHECK(generating == 1680);
  CHECK(generating % A.order() == 0);
}

TEST_CASE("order-7 triple counts for the Macbeath-Hurwitz group of genus 7") {
  auto G = FiniteGroup::build("sl2:8");
  auto cd = conjugacy_classes(G);
  std::vector<std::string> sevens;
  for (const auto& c : cd.classes)
    if (c.order == 7) sevens.push_back(c.name);
  REQUIRE(sevens.size() == 3);

  uint64_t distinct_total = 0;
  for (const auto& x : sevens)
    for (const auto& z : sevens) {
      auto tc = count_triples(G, cd, x, "2A", z);
      if (x == z) {
        CHECK(tc.generating == 0);  // equal classes never generate
      } else {
        CHECK(tc.generating == tc.total);
        distinct_total += tc.total;
      }
    }
  CHECK(distinct_total == 3024);  // 2^4 * 3^3 * 7 = 2 |Aut SL2(8)|
  auto A = compute_aut(G);
  CHECK(distinct_total == 2 * A.order());

  uint64_t equal_total = 0;
  for (const auto& x : sevens)
    equal_total += count_triples(G, cd, x, "2A", x).total;
  CHECK(equal_total == 3024);  // same count, none generating
}

TEST_CASE("closed formula for the simple groups PSL2(2^e)") {
  CHECK(psl2_even_closed_form(2) == 3);   // PSL2(4) = A5
  CHECK(psl2_even_closed_form(3) == 14);  // PSL2(8) = SL2(8)
  CHECK(psl2_even_closed_form(4) == 51);
  CHECK(psl2_even_closed_form(5) == 186);  // (31 * 30) / 5
  CHECK_THROWS_AS(psl2_even_closed_form(1), Error);
  CHECK_THROWS_AS(psl2_even_closed_form(0), Error);

  // e = 2, 3 against independent enumeration.
  for (const char* spec : {"alt:5", "sl2:8"}) {
    auto G = FiniteGroup::build(spec);
    auto A = compute_aut(G);
    CHECK(enumerate_maps(G, A).size() ==
          psl2_even_closed_form(spec[0] == 'a' ? 2 : 3));
  }
}

TEST_CASE("counts for the smallest Hurwitz group with mixed regularity") {
  auto G = FiniteGroup::build("psl2:13");
  auto L = subgroup_lattice(G);
  check_lattice_contract(G, L);
  CHECK(phi_moebius(G, L) == 72072);  // 33 maps x |PGL2(13)| = 33 * 2184
  CHECK(phi_direct(G) == 72072);
  auto A = compute_aut(G);
  CHECK(A.order() == 2184);
  CHECK(order_of_O(G, A) == 33);
}

TEST_CASE("trace criterion separates inner and outer Hurwitz maps") {
  // PSL2(13): three Hurwitz maps, extended types {3,7}_12, {3,7}_26 and
  // {3,7}_14; exactly the Petrie-26 one is inner-regular.
  auto G = FiniteGroup::build("psl2:13");
  auto A = compute_aut(G);
  auto maps = enumerate_maps(G, A, 7);
  std::vector<const MapClass*> hurwitz;
  for (const auto& c : maps)
    if (c.inv.p == 3) hurwitz.push_back(&c);
  REQUIRE(hurwitz.size() == 3);
  std::multiset<uint32_t> petrie;
  int inner = 0;
  for (const MapClass* c : hurwitz) {
    petrie.insert(c->inv.r);
    if (c->inv.reflexibility == Reflexibility::inner_regular) {
      ++inner;
      CHECK(c->inv.r == 26);
    }
    CHECK(hall_square_criterion(G, c->rep) == c->inv.reflexibility);
  }
  CHECK(petrie == std::multiset<uint32_t>{12, 14, 26});
  CHECK(inner == 1);
}

TEST_CASE("trace criterion in characteristic two is trivially inner") {
  // Every field element is a square in GF(8), matching the fact that all
  // maps on this group are inner-regular.
  auto G = FiniteGroup::build("sl2:8");
  auto A = compute_aut(G);
  for (const auto& c : enumerate_maps(G, A, 7)) {
    if (c.inv.p != 3) continue;
    CHECK(c.inv.reflexibility == Reflexibility::inner_regular);
    CHECK(hall_square_criterion(G, c.rep) == Reflexibility::inner_regular);
  }
}

TEST_CASE("trace criterion in characteristic seven: unipotent rotations") {
  // For q = 7 the order-7 rotations are unipotent with trace representatives
  // +-2; both give 3 - tau^2 = -1 = 6 mod 7, a non-square consistently, so
  // the criterion answers outer -- matching the Klein map's classification.
  auto G = FiniteGroup::build("psl2:7");
  auto A = compute_aut(G);
  bool saw = false;
  for (const auto& c : enumerate_maps(G, A, 7)) {
    if (c.inv.p != 3) continue;
    saw = true;
    CHECK(c.inv.reflexibility == Reflexibility::outer_regular);
    CHECK(hall_square_criterion(G, c.rep) == Reflexibility::outer_regular);
  }
  CHECK(saw);
}

TEST_CASE("trace criterion agrees with brute classification over F29") {
  // Three Hurwitz maps again (29 = 1 mod 7, the split-torus case); exactly
  // one is inner-regular.
  auto G = FiniteGroup::build("psl2:29");
  auto A = compute_aut(G);
  int inner = 0, seen = 0;
  for (const auto& c : enumerate_maps(G, A, 7)) {
    if (c.inv.p != 3) continue;
    ++seen;
    if (c.inv.reflexibility == Reflexibility::inner_regular) ++inner;
    CHECK(hall_square_criterion(G, c.rep) == c.inv.reflexibility);
  }
  CHECK(seen == 3);
  CHECK(inner == 1);
}

TEST_CASE("trace criterion over the cubic field F27") {
  // The field automorphism of GF(27) lies in Aut(PSL2(27)) and fuses the
  // three order-7 trace pairs, so a single Hurwitz map remains.
  auto G = FiniteGroup::build("psl2:27");
  auto A = compute_aut(G);
  int seen = 0;
  for (const auto& c : enumerate_maps(G, A, 7)) {
    if (c.inv.p != 3) continue;
    ++seen;
    CHECK(c.inv.reflexibility == Reflexibility::outer_regular);
    CHECK(hall_square_criterion(G, c.rep) == c.inv.reflexibility);
  }
  CHECK(seen == 1);
}

TEST_CASE("trace criterion rejects wrong backends and wrong types") {
  auto S = FiniteGroup::build("sym:4");
  auto AS = compute_aut(S);
  auto sym_maps = enumerate_maps(S, AS);
  REQUIRE(!sym_maps.empty());
  CHECK_THROWS_AS(hall_square_criterion(S, sym_maps.front().rep), Error);

  auto G = FiniteGroup::build("psl2:7");
  auto A = compute_aut(G);
  for (const auto& c : enumerate_maps(G, A)) {
    if (c.inv.p == 3 && c.inv.q == 7) continue;
    CHECK_THROWS_AS(hall_square_criterion(G, c.rep), Error);
  }

  // sl2 backends over odd fields carry no maps at all (the only involution
  // is central), so the nearest wrong-backend case with real maps is pgl2.
  auto P = FiniteGroup::build("pgl2:5");
  auto ap = compute_aut(P);
  auto pgl_maps = enumerate_maps(P, ap);
  REQUIRE(!pgl_maps.empty());
  CHECK_THROWS_AS(hall_square_criterion(P, pgl_maps.front().rep), Error);
}
