#include "regmap/aut.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "regmap/error.hpp"

namespace regmap {

namespace {

uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= uint64_t(i);
  return f;
}

Automorphism identity_auto(uint32_t n) {
  Automorphism a;
  a.perm.resize(n);
  std::iota(a.perm.begin(), a.perm.end(), Elt(0));
  return a;
}

Automorphism conj_auto(const FiniteGroup& G, Elt s) {
  Automorphism a;
  a.perm.resize(G.order());
  for (uint32_t e = 0; e < G.order(); ++e) a.perm[e] = G.conj(Elt(e), s);
  return a;
}

// alpha must be a bijection fixing the identity and multiplicative against
// the group's generators; catches construction bugs early.
void verify_automorphism(const FiniteGroup& G, const std::vector<Elt>& perm) {
  std::vector<uint8_t> used(G.order(), 0);
  for (Elt v : perm) {
    if (used[v]) throw std::logic_error("automorphism image table not bijective");
    used[v] = 1;
  }
  if (perm[0] != 0) throw std::logic_error("automorphism moves the identity");
  for (uint32_t g = 0; g < G.order(); ++g)
    for (Elt s : G.generators())
      if (perm[G.mul(Elt(g), s)] != G.mul(perm[g], perm[s]))
        throw std::logic_error("automorphism image table not multiplicative");
}

Automorphism matrix_frobenius_auto(const FiniteGroup& G) {
  const Gf& F = G.field();
  Automorphism a;
  a.perm.resize(G.order());
  for (uint32_t e = 0; e < G.order(); ++e) {
    uint64_t c = G.code_of(Elt(e));
    uint64_t f = (uint64_t(F.frobenius(uint32_t(c >> 24) & 255)) << 24) |
                 (uint64_t(F.frobenius(uint32_t(c >> 16) & 255)) << 16) |
                 (uint64_t(F.frobenius(uint32_t(c >> 8) & 255)) << 8) |
                 F.frobenius(uint32_t(c) & 255);
    a.perm[e] = G.lookup(G.canon_code(f));
  }
  return a;
}

Automorphism affine_frobenius_auto(const FiniteGroup& G) {
  const Gf& F = G.field();
  Automorphism a;
  a.perm.resize(G.order());
  for (uint32_t e = 0; e < G.order(); ++e) {
    uint64_t c = G.code_of(Elt(e));
    a.perm[e] = G.lookup(uint64_t(F.frobenius(uint32_t(c >> 8))) << 8 |
                         F.frobenius(uint32_t(c) & 255));
  }
  return a;
}

// Conjugation by diag(v, 1) with v a non-square: the outer half of PGL2
// acting on PSL2/SL2 for odd q.  Sends [[a,b],[c,d]] to [[a, b/v],[c v, d]].
Automorphism diag_conj_auto(const FiniteGroup& G) {
  const Gf& F = G.field();
  uint32_t v = 0;
  for (uint32_t e = 2; e < F.q(); ++e)
    if (!F.is_square(e)) { v = e; break; }
  Automorphism a;
  a.perm.resize(G.order());
  for (uint32_t e = 0; e < G.order(); ++e) {
    uint64_t c = G.code_of(Elt(e));
    uint64_t f = (c & 0xff000000ull) |
                 (uint64_t(F.mul(uint32_t(c >> 16) & 255, F.inv(v))) << 16) |
                 (uint64_t(F.mul(uint32_t(c >> 8) & 255, v)) << 8) | (c & 255);
    a.perm[e] = G.lookup(G.canon_code(f));
  }
  return a;
}

// Conjugation of alt:n by the transposition (1,2) of the ambient sym:n.
Automorphism transposition_conj_auto(const FiniteGroup& G) {
  int d = G.degree();
  std::vector<int> im(d);
  std::iota(im.begin(), im.end(), 0);
  std::swap(im[0], im[1]);
  uint64_t t = 0;
  for (int x : im) t = (t << 4) | uint64_t(x);
  Automorphism a;
  a.perm.resize(G.order());
  for (uint32_t e = 0; e < G.order(); ++e)
    a.perm[e] = G.lookup(G.mul_code(G.mul_code(t, G.code_of(Elt(e))), t));
  return a;
}

struct FamilyGens {
  std::vector<Automorphism> gens;
  uint64_t expected_order;
};

std::optional<FamilyGens> family_gens(const FiniteGroup& G) {
  const std::string& spec = G.spec();
  std::string fam = spec.substr(0, spec.find(':'));
  FamilyGens out;
  auto inn = [&] {
    for (Elt s : G.generators()) out.gens.push_back(conj_auto(G, s));
  };
  if (fam == "sym") {
    if (G.degree() < 3) return FamilyGens{{}, 1};
    if (G.degree() == 6) return std::nullopt;  // exceptional outer case, generic
    inn();
    out.expected_order = factorial(G.degree());
    return out;
  }
  if (fam == "alt") {
    if (G.degree() < 3) return FamilyGens{{}, 1};
    if (G.degree() == 3 || G.degree() == 6) return std::nullopt;
    inn();
    out.gens.push_back(transposition_conj_auto(G));
    out.expected_order = factorial(G.degree());
    return out;
  }
  if (fam == "psl2" || fam == "sl2") {
    const Gf& F = G.field();
    inn();
    if (F.e() > 1) out.gens.push_back(matrix_frobenius_auto(G));
    if (F.p() != 2) out.gens.push_back(diag_conj_auto(G));
    uint64_t q = F.q();
    out.expected_order = (q * q * q - q) * F.e();
    return out;
  }
  if (fam == "agl1" && G.field().p() == 2) {
    const Gf& F = G.field();
    if (F.q() == 2) return FamilyGens{{}, 1};
    inn();
    if (F.e() > 1) out.gens.push_back(affine_frobenius_auto(G));
    out.expected_order = uint64_t(F.e()) * F.q() * (F.q() - 1);
    return out;
  }
  return std::nullopt;
}

// Only the identity automorphism fixes a generating tuple pointwise, so the
// orbit of the tuple has the exact size of the generated subgroup of Aut.
uint64_t tuple_orbit_order(const FiniteGroup& G, const std::vector<Automorphism>& gens) {
  std::vector<Elt> start = G.generators();
  std::set<std::vector<Elt>> seen{start};
  std::vector<std::vector<Elt>> queue{start};
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<Elt> u = queue[head];
    for (const auto& a : gens) {
      std::vector<Elt> v(u.size());
      for (size_t i = 0; i < u.size(); ++i) v[i] = a.perm[u[i]];
      if (seen.insert(v).second) {
        if (seen.size() > 1000000) throw std::logic_error("automorphism orbit runaway");
        queue.push_back(std::move(v));
      }
    }
  }
  return seen.size();
}

std::vector<Elt> choose_search_tuple(const FiniteGroup& G, const ClassData& cd) {
  uint32_t n = G.order();
  for (uint32_t e = 1; e < n; ++e)
    if (uint32_t(G.order_of(Elt(e))) == n) return {Elt(e)};
  std::vector<uint32_t> idx(cd.classes.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
    const ConjClass &x = cd.classes[a], &y = cd.classes[b];
    if (x.order != y.order) return x.order > y.order;
    if (x.size != y.size) return x.size < y.size;
    return x.rep < y.rep;
  });
  for (uint32_t c : idx) {
    Elt a = cd.classes[c].rep;
    if (a == 0) continue;
    for (uint32_t b = 1; b < n; ++b)
      if (G.generates({a, Elt(b)})) return {a, Elt(b)};
  }
  return G.generators();
}

std::vector<Automorphism> generic_all(const FiniteGroup& G, uint32_t cap) {
  if (G.order() > cap)
    fail(Errc::cap_exceeded, "group order " + std::to_string(G.order()) +
                                 " above automorphism search cap " + std::to_string(cap));
  uint32_t n = G.order();
  if (n == 1) return {identity_auto(1)};
  auto cd = conjugacy_classes(G);
  std::vector<Elt> tup = choose_search_tuple(G, cd);

  // BFS spanning tree of the Cayley graph on the chosen tuple
  std::vector<Elt> parent(n, 0);
  std::vector<int> via(n, -1);
  std::vector<Elt> visit;
  visit.reserve(n);
  visit.push_back(0);
  via[0] = 0;
  for (size_t head = 0; head < visit.size(); ++head) {
    Elt u = visit[head];
    for (size_t i = 0; i < tup.size(); ++i) {
      Elt v = G.mul(u, tup[i]);
      if (via[v] < 0) {
        via[v] = int(i);
        parent[v] = u;
        visit.push_back(v);
      }
    }
  }
  if (visit.size() != n) throw std::logic_error("search tuple does not generate");

  std::vector<std::vector<Elt>> cands(tup.size());
  uint64_t space = 1;
  for (size_t i = 0; i < tup.size(); ++i) {
    int o = G.order_of(tup[i]);
    uint32_t cs = cd.classes[cd.class_of[tup[i]]].size;
    for (uint32_t e = 1; e < n; ++e)
      if (G.order_of(Elt(e)) == o && cd.classes[cd.class_of[e]].size == cs)
        cands[i].push_back(Elt(e));
    space *= cands[i].size();
  }
  if (space > 5000000)
    fail(Errc::cap_exceeded, "automorphism candidate space too large");

  std::vector<std::vector<Elt>> found;
  std::vector<size_t> pick(tup.size(), 0);
  std::vector<Elt> img(n);
  std::vector<uint8_t> used(n);
  while (true) {
    std::vector<Elt> imgs(tup.size());
    for (size_t i = 0; i < tup.size(); ++i) imgs[i] = cands[i][pick[i]];
    std::fill(used.begin(), used.end(), 0);
    img[0] = 0;
    used[0] = 1;
    bool ok = true;
    for (size_t k = 1; k < n && ok; ++k) {
      Elt v = visit[k];
      Elt w = G.mul(img[parent[v]], imgs[via[v]]);
      if (used[w]) ok = false;
      img[v] = w;
      used[w] = 1;
    }
    for (uint32_t g = 0; g < n && ok; ++g)
      for (size_t i = 0; i < tup.size() && ok; ++i)
        if (img[G.mul(Elt(g), tup[i])] != G.mul(img[g], imgs[i])) ok = false;
    if (ok) found.push_back(img);

    size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == cands[pos].size()) pick[pos++] = 0;
    if (pos == pick.size()) break;
  }
  std::sort(found.begin(), found.end());
  std::vector<Automorphism> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back({std::move(f)});
  return out;
}

std::vector<Automorphism> greedy_reduce(uint32_t n, const std::vector<Automorphism>& all) {
  std::vector<Automorphism> gens;
  std::set<std::vector<Elt>> cl{identity_auto(n).perm};
  for (const auto& a : all) {
    if (cl.count(a.perm)) continue;
    gens.push_back(a);
    cl.clear();
    std::vector<std::vector<Elt>> queue{identity_auto(n).perm};
    cl.insert(queue[0]);
    for (size_t head = 0; head < queue.size(); ++head) {
      for (const auto& g : gens) {
        std::vector<Elt> c(n);
        for (uint32_t e = 0; e < n; ++e) c[e] = g.perm[queue[head][e]];
        if (cl.insert(c).second) queue.push_back(std::move(c));
      }
    }
    if (cl.size() == all.size()) break;
  }
  return gens;
}

}  // namespace

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism c;
  c.perm.resize(b.perm.size());
  for (size_t e = 0; e < b.perm.size(); ++e) c.perm[e] = a.perm[b.perm[e]];
  return c;
}

Automorphism inverse_of(const Automorphism& a) {
  Automorphism c;
  c.perm.resize(a.perm.size());
  for (size_t e = 0; e < a.perm.size(); ++e) c.perm[a.perm[e]] = Elt(e);
  return c;
}

AutGroup compute_aut(const FiniteGroup& G, uint32_t generic_cap) {
  auto fam = family_gens(G);
  if (!fam) return compute_aut_generic(G, generic_cap);
  AutGroup A;
  A.G_ = &G;
  A.inner_order_ = G.order() / uint32_t(G.center().size());
  for (const auto& a : fam->gens) verify_automorphism(G, a.perm);
  A.gens_ = std::move(fam->gens);
  A.order_ = tuple_orbit_order(G, A.gens_);
  if (A.order_ != fam->expected_order)
    throw std::logic_error("family automorphism generators reach order " +
                           std::to_string(A.order_) + ", expected " +
                           std::to_string(fam->expected_order));
  return A;
}

AutGroup compute_aut_generic(const FiniteGroup& G, uint32_t generic_cap) {
  AutGroup A;
  A.G_ = &G;
  A.inner_order_ = G.order() / uint32_t(G.center().size());
  A.all_ = generic_all(G, generic_cap);
  A.order_ = A.all_.size();
  A.gens_ = greedy_reduce(G.order(), A.all_);
  if (A.order_ % A.inner_order_ != 0)
    throw std::logic_error("inner automorphism group order does not divide |Aut|");
  return A;
}

const std::vector<Automorphism>& AutGroup::all() const {
  if (!all_.empty()) return all_;
  if (order_ * G_->order() > 30000000)
    fail(Errc::cap_exceeded, "automorphism list too large to materialize");
  std::set<std::vector<Elt>> seen{identity_auto(G_->order()).perm};
  std::vector<std::vector<Elt>> queue{*seen.begin()};
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens_) {
      std::vector<Elt> c(G_->order());
      for (uint32_t e = 0; e < G_->order(); ++e) c[e] = g.perm[queue[head][e]];
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
  }
  if (seen.size() != order_) throw std::logic_error("materialized Aut size mismatch");
  for (const auto& p : seen) all_.push_back({p});
  return all_;
}

std::vector<Elt> AutGroup::orbit(Elt e) const {
  std::vector<Elt> orb{e};
  std::set<Elt> seen{e};
  for (size_t head = 0; head < orb.size(); ++head) {
    for (const auto& g : gens_) {
      Elt v = g.perm[orb[head]];
      if (seen.insert(v).second) orb.push_back(v);
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

const AutGroup::YOrbit& AutGroup::y_orbit(Elt y) const {
  auto it = y_cache_.find(y);
  if (it != y_cache_.end()) return it->second;
  std::map<Elt, Automorphism> trans;
  trans[y] = identity_auto(G_->order());
  std::vector<Elt> queue{y};
  for (size_t head = 0; head < queue.size(); ++head) {
    Elt u = queue[head];
    for (const auto& g : gens_) {
      Elt v = g.perm[u];
      if (!trans.count(v)) {
        trans[v] = compose(g, trans[u]);
        queue.push_back(v);
      }
    }
  }
  Elt least = trans.begin()->first;
  YOrbit yo{least, std::move(trans[least])};
  return y_cache_.emplace(y, std::move(yo)).first->second;
}

const std::vector<Automorphism>& AutGroup::stabilizer(Elt fixed) const {
  auto it = stab_cache_.find(fixed);
  if (it != stab_cache_.end()) return it->second;
  std::map<Elt, Automorphism> trans;
  trans[fixed] = identity_auto(G_->order());
  std::vector<Elt> queue{fixed};
  for (size_t head = 0; head < queue.size(); ++head) {
    Elt u = queue[head];
    for (const auto& g : gens_) {
      Elt v = g.perm[u];
      if (!trans.count(v)) {
        trans[v] = compose(g, trans[u]);
        queue.push_back(v);
      }
    }
  }
  // Schreier generators of the point stabilizer, then closure
  std::set<std::vector<Elt>> sgens;
  for (const auto& [u, tu] : trans) {
    for (const auto& g : gens_) {
      Automorphism s = compose(inverse_of(trans[g.perm[u]]), compose(g, tu));
      if (s.perm[fixed] != fixed) throw std::logic_error("Schreier generator moves base");
      sgens.insert(std::move(s.perm));
    }
  }
  std::set<std::vector<Elt>> cl{identity_auto(G_->order()).perm};
  std::vector<std::vector<Elt>> cq{*cl.begin()};
  for (size_t head = 0; head < cq.size(); ++head) {
    for (const auto& s : sgens) {
      std::vector<Elt> c(G_->order());
      for (uint32_t e = 0; e < G_->order(); ++e) c[e] = s[cq[head][e]];
      if (cl.insert(c).second) cq.push_back(std::move(c));
    }
  }
  if (cl.size() * trans.size() != order_)
    throw std::logic_error("stabilizer order inconsistent with orbit");
  std::vector<Automorphism> stab;
  stab.reserve(cl.size());
  for (const auto& p : cl) stab.push_back({p});
  return stab_cache_.emplace(fixed, std::move(stab)).first->second;
}

std::pair<Elt, Elt> AutGroup::canon_pair(Elt x, Elt y) const {
  // lexicographically least image of the pair, first coordinate dominant;
  // BFS over the diagonal action keeps this at most |Aut| pair nodes
  auto key = [](Elt a, Elt b) { return (uint32_t(a) << 16) | uint32_t(b); };
  uint32_t start = key(x, y);
  std::set<uint32_t> seen{start};
  std::vector<std::pair<Elt, Elt>> queue{{x, y}};
  uint32_t best = start;
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [a, b] = queue[head];
    for (const auto& g : gens_) {
      Elt a2 = g.perm[a], b2 = g.perm[b];
      uint32_t k = key(a2, b2);
      if (seen.insert(k).second) {
        best = std::min(best, k);
        queue.emplace_back(a2, b2);
      }
    }
  }
  return {Elt(best >> 16), Elt(best & 0xffff)};
}

std::pair<Elt, Elt> AutGroup::orbit_key(Elt x, Elt y) const {
  // complete invariant of the orbit of (x, y), cheaper than canon_pair when
  // many pairs share one y: send y to its least image once, then minimize x
  // over the cached stabilizer of that image
  const YOrbit& yo = y_orbit(y);
  Elt x0 = yo.to_least(x);
  Elt best = x0;
  for (const auto& s : stabilizer(yo.least)) best = std::min(best, s.perm[x0]);
  return {best, yo.least};
}

std::optional<Elt> inner_witness(const FiniteGroup& G, const std::vector<Elt>& perm) {
  for (uint32_t c = 0; c < G.order(); ++c) {
    bool ok = true;
    for (Elt s : G.generators())
      if (perm[s] != G.conj(s, Elt(c))) { ok = false; break; }
    if (ok) return Elt(c);
  }
  return std::nullopt;
}

std::vector<InvolutionOrbit> involution_orbits(const FiniteGroup& G, const AutGroup& A) {
  std::vector<InvolutionOrbit> out;
  std::vector<uint8_t> seen(G.order(), 0);
  for (uint32_t e = 1; e < G.order(); ++e) {
    if (G.order_of(Elt(e)) != 2 || seen[e]) continue;
    auto orb = A.orbit(Elt(e));
    for (Elt v : orb) seen[v] = 1;
    bool useful = false;
    for (uint32_t x = 1; x < G.order(); ++x)
      if (G.generates({Elt(x), Elt(e)})) { useful = true; break; }
    out.push_back({Elt(e), uint32_t(orb.size()), useful});
  }
  return out;
}

// ---- symmetric groups past the element-table cap --------------------------

namespace {

int packed_img(uint64_t code, int i, int n) { return int(code >> (4 * (n - 1 - i))) & 15; }

uint64_t pack_images(const std::vector<int>& im) {
  uint64_t c = 0;
  for (int v : im) c = (c << 4) | uint64_t(v);
  return c;
}

uint64_t compose_packed(uint64_t a, uint64_t b, int n) {  // (a.b)(i) = a(b(i))
  uint64_t c = 0;
  for (int i = 0; i < n; ++i) c = (c << 4) | uint64_t(packed_img(a, packed_img(b, i, n), n));
  return c;
}

uint32_t lehmer_rank(uint64_t code, int n, const uint64_t* fact) {
  uint32_t r = 0;
  for (int i = 0; i < n - 1; ++i) {
    int vi = packed_img(code, i, n), smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (packed_img(code, j, n) < vi) ++smaller;
    r += uint32_t(smaller * fact[n - 1 - i]);
  }
  return r;
}

std::string cycles_of_images(const std::vector<int>& im) {
  int n = int(im.size());
  std::string s;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i] || im[i] == i) continue;
    s += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) s += ",";
      s += std::to_string(j + 1);
      first = false;
      j = im[j];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

void check_perm_images(int n, const std::vector<int>& im) {
  if (n < 2 || n > 10) fail(Errc::bad_argument, "degree must be in 2..10");
  if (int(im.size()) != n) fail(Errc::bad_argument, "image list has wrong length");
  std::vector<bool> hit(n, false);
  for (int v : im) {
    if (v < 0 || v >= n || hit[v]) fail(Errc::bad_argument, "images are not a permutation");
    hit[v] = true;
  }
}

}  // namespace

bool sym_pair_generates(int n, const std::vector<int>& x_images,
                        const std::vector<int>& y_images) {
  check_perm_images(n, x_images);
  check_perm_images(n, y_images);
  uint64_t fact[11];
  fact[0] = 1;
  for (int i = 1; i <= 10; ++i) fact[i] = fact[i - 1] * uint64_t(i);
  uint64_t total = fact[n], half = total / 2;
  std::vector<uint64_t> bits(size_t(total / 64 + 1), 0);
  auto test_set = [&](uint32_t r) {
    uint64_t& w = bits[r >> 6];
    uint64_t m = 1ull << (r & 63);
    if (w & m) return false;
    w |= m;
    return true;
  };
  uint64_t gens[2] = {pack_images(x_images), pack_images(y_images)};
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<uint64_t> queue{pack_images(id)};
  test_set(lehmer_rank(queue[0], n, fact));
  uint64_t count = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    uint64_t u = queue[head];
    for (uint64_t g : gens) {
      uint64_t v = compose_packed(u, g, n);
      if (test_set(lehmer_rank(v, n, fact))) {
        if (++count > half) return true;  // proper subgroups have index >= 2
        queue.push_back(v);
      }
    }
  }
  return count == total;
}

std::vector<SymInvolutionWitness> sym_useful_witnesses(int n) {
  if (n < 2 || n > 10) fail(Errc::bad_argument, "degree must be in 2..10");
  auto cycle_perm = [&](int a, int b) {  // cycle on points a..b, rest fixed
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    if (a < 0 || b >= n || a >= b) return im;  // degenerate at tiny degrees
    for (int i = a; i < b; ++i) im[i] = i + 1;
    im[b] = a;
    return im;
  };
  auto with_swap = [&](std::vector<int> im, int a, int b) {
    if (a >= 0 && b >= 0 && a < n && b < n) std::swap(im[a], im[b]);
    return im;
  };
  std::vector<SymInvolutionWitness> out;
  for (int t = 1; t <= n / 2; ++t) {
    std::vector<int> y(n);
    std::iota(y.begin(), y.end(), 0);
    for (int i = 0; i < t; ++i) std::swap(y[2 * i], y[2 * i + 1]);
    SymInvolutionWitness w;
    w.transpositions = t;
    w.y_cycles = cycles_of_images(y);
    // mixed parities and support shapes; full cycles alone miss a few
    // degrees (e.g. a 6-cycle with a double transposition lands in the
    // transitive copy of S5 inside S6), hence the composite shapes
    std::vector<std::vector<int>> cands{
        cycle_perm(0, n - 1),
        cycle_perm(1, n - 1),
        cycle_perm(0, n - 2),
        with_swap(cycle_perm(0, n - 3), n - 2, n - 1),
        with_swap(cycle_perm(2, n - 1), 0, 2),
        with_swap(cycle_perm(1, n - 2), 0, n - 1),
        with_swap(cycle_perm(0, n - 2), 1, n - 1),
        with_swap(cycle_perm(0, n - 3), 1, n - 1),
        with_swap(cycle_perm(3, n - 1), 1, 2),   // (2,3) * cycle on 4..n
        with_swap(cycle_perm(0, n - 4), n - 3, n - 2),
    };
    for (const auto& x : cands) {
      if (sym_pair_generates(n, x, y)) {
        w.x_cycles = cycles_of_images(x);
        break;
      }
    }
    if (!w.x_cycles) {
      // deterministic fallback: seeded Fisher-Yates shuffles until one
      // generates; covers shapes the structured list above does not
      uint64_t state = 0x9e3779b97f4a7c15ull ^ (uint64_t(n) << 32) ^ uint64_t(t);
      auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return uint32_t(state >> 33);
      };
      std::vector<int> x(n);
      for (int attempt = 0; attempt < 500 && !w.x_cycles; ++attempt) {
        std::iota(x.begin(), x.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(x[i], x[next() % (i + 1)]);
        if (sym_pair_generates(n, x, y)) w.x_cycles = cycles_of_images(x);
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace regmap
