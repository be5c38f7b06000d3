#include "regmap/census.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "regmap/error.hpp"

namespace regmap {

namespace {

bool is_prime_power(int m) {
  if (m < 2) return false;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      return m == 1;
    }
  }
  return true;  // prime
}

int moebius_int(int m) {
  int r = 1;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;
      r = -r;
    }
  }
  if (m > 1) r = -r;
  return r;
}

}  // namespace

bool SubgroupLattice::subset(size_t i, size_t j) const {
  return std::includes(subgroups[j].begin(), subgroups[j].end(),
                       subgroups[i].begin(), subgroups[i].end());
}

SubgroupLattice subgroup_lattice(const FiniteGroup& G, uint32_t cap) {
  if (G.order() > cap) fail(Errc::cap_exceeded, "group order exceeds the lattice cap");
  const uint32_t n = G.order();

  std::map<std::vector<Elt>, size_t> index_of;
  std::vector<std::vector<Elt>> subs;   // sorted element lists
  std::vector<std::vector<Elt>> spans;  // small generating set per subgroup
  auto add = [&](std::vector<Elt> elems, std::vector<Elt> gens) -> bool {
    auto [it, fresh] = index_of.try_emplace(std::move(elems), subs.size());
    if (fresh) {
      subs.push_back(it->first);
      spans.push_back(std::move(gens));
    }
    return fresh;
  };

  add({0}, {});
  {
    std::vector<Elt> whole(n);
    std::iota(whole.begin(), whole.end(), Elt(0));
    add(std::move(whole), G.generators());
  }

  // Seed with every cyclic subgroup.  Joins only need adjoining generators of
  // prime-power order: every subgroup is the join of its prime-power cyclic
  // subgroups, so the fixpoint below still reaches everything.
  std::vector<Elt> seeds;
  for (Elt g = 1; g < n; ++g) {
    bool fresh = add(G.closure({g}), {g});
    if (fresh && is_prime_power(G.order_of(g))) seeds.push_back(g);
  }

  // Join <H, g> to a fixpoint, smallest subgroups first.  Joins that reach
  // the whole group are detected by the early-accepting generation test and
  // never materialized.
  std::set<std::pair<uint32_t, size_t>> pending;
  for (size_t i = 0; i < subs.size(); ++i)
    pending.insert({uint32_t(subs[i].size()), i});
  while (!pending.empty()) {
    size_t hi = pending.begin()->second;
    pending.erase(pending.begin());
    if (subs[hi].size() == n || subs[hi].size() == 1) continue;
    for (Elt g : seeds) {
      if (std::binary_search(subs[hi].begin(), subs[hi].end(), g)) continue;
      std::vector<Elt> gens = spans[hi];
      gens.push_back(g);
      if (G.generates(gens)) continue;
      auto join = G.closure(gens);
      auto [it, fresh] = index_of.try_emplace(std::move(join), subs.size());
      if (fresh) {
        subs.push_back(it->first);
        spans.push_back(std::move(gens));
        pending.insert({uint32_t(subs.back().size()), subs.size() - 1});
      }
    }
  }

  SubgroupLattice L;
  L.subgroups = std::move(subs);
  std::sort(L.subgroups.begin(), L.subgroups.end(),
            [](const std::vector<Elt>& a, const std::vector<Elt>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });

  // mu top-down: mu(G) = 1; each proper H gets minus the sum over its proper
  // supergroups, which all sit later in the size-sorted order.
  L.mu.assign(L.subgroups.size(), 0);
  L.mu.back() = 1;
  for (size_t i = L.subgroups.size() - 1; i-- > 0;) {
    long long acc = 0;
    for (size_t j = i + 1; j < L.subgroups.size(); ++j) {
      if (L.subgroups[j].size() % L.subgroups[i].size() != 0) continue;
      if (L.subgroups[j].size() == L.subgroups[i].size()) continue;
      if (L.subset(i, j)) acc += L.mu[j];
    }
    L.mu[i] = -acc;
  }
  return L;
}

uint64_t sigma(const FiniteGroup& G, const std::vector<Elt>& H) {
  uint64_t invol = 0;
  for (Elt h : H)
    if (G.order_of(h) == 2) ++invol;
  return uint64_t(H.size()) * (invol + 1);
}

TripleCount count_triples(const FiniteGroup& G, const ClassData& cd,
                          const std::string& X, const std::string& Y,
                          const std::string& Z) {
  auto xc = cd.find(X), yc = cd.find(Y), zc = cd.find(Z);
  if (!xc || !yc || !zc) fail(Errc::bad_argument, "unknown conjugacy class label");
  TripleCount tc;
  tc.x_class = X;
  tc.y_class = Y;
  tc.z_class = Z;
  const auto& xs = cd.classes[*xc].members;
  const auto& ys = cd.classes[*yc].members;
  for (Elt x : xs)
    for (Elt y : ys) {
      if (cd.class_of[G.inv(G.mul(x, y))] != *zc) continue;
      ++tc.total;
      if (G.generates({x, y})) ++tc.generating;
    }
  return tc;
}

long long phi_moebius(const FiniteGroup& G, const SubgroupLattice& L) {
  long long acc = 0;
  for (size_t i = 0; i < L.size(); ++i)
    acc += L.mu[i] * (long long)sigma(G, L.subgroups[i]);
  return acc;
}

uint64_t phi_direct(const FiniteGroup& G) {
  const uint32_t n = G.order();
  uint64_t acc = 0;
  // y = 1 pairs: (x, 1) generates exactly when x alone does.
  for (Elt x = 0; x < n; ++x)
    if (uint32_t(G.order_of(x)) == n) ++acc;
  for (Elt y = 1; y < n; ++y) {
    if (G.order_of(y) != 2) continue;
    for (Elt x = 0; x < n; ++x)
      if (G.generates({x, y})) ++acc;
  }
  return acc;
}

uint64_t order_of_O(const FiniteGroup& G, const AutGroup& A) {
  uint64_t phi = phi_direct(G);
  if (phi % A.order() != 0)
    throw std::logic_error("|Aut G| does not divide the generating-pair count");
  return phi / A.order();
}

uint64_t psl2_even_closed_form(int e) {
  if (e < 2) fail(Errc::bad_argument, "closed form needs e >= 2");
  if (e > 31) fail(Errc::bad_argument, "closed form overflows past e = 31");
  long long acc = 0;
  for (int f = 1; f <= e; ++f) {
    if (e % f != 0) continue;
    long long pf = (1LL << f);
    acc += (long long)moebius_int(e / f) * (pf - 1) * (pf - 2);
  }
  if (acc < 0 || acc % e != 0)
    throw std::logic_error("closed-form sum is not a positive multiple of e");
  return uint64_t(acc) / e;
}

Reflexibility hall_square_criterion(const FiniteGroup& G, const MapTriple& m) {
  const bool psl_like =
      G.backend() == Backend::psl2 ||
      (G.backend() == Backend::sl2 && G.field().p() == 2);
  if (!psl_like) fail(Errc::bad_argument, "trace criterion needs a PSL2 backend");
  if (G.order_of(m.x) != 7 || G.order_of(m.z) != 3)
    fail(Errc::bad_argument, "trace criterion needs a map of type {3,7}");
  const Gf& F = G.field();
  uint64_t c = G.code_of(m.x);
  // tau enters squared, so either lift of x to SL2 serves as well.
  uint32_t tau = F.add(uint32_t(c >> 24) & 0xff, uint32_t(c) & 0xff);
  uint32_t three = F.add(F.add(1, 1), 1);
  uint32_t s = F.sub(three, F.mul(tau, tau));
  // s is never zero: tau^2 = 3 combined with the order-7 trace relation
  // tau^3 + tau^2 - 2 tau - 1 = 0 would force tau = -2 and 4 = 3.
  return F.is_square(s) ? Reflexibility::inner_regular
                        : Reflexibility::outer_regular;
}

}  // namespace regmap
