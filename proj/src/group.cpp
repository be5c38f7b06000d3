#include "regmap/group.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

#include "regmap/error.hpp"

namespace regmap {

namespace {

// ---- permutation codes: 4 bits per point, point 0 topmost -----------------

int perm_img(uint64_t code, int i, int d) { return int(code >> (4 * (d - 1 - i))) & 15; }

uint64_t perm_encode(const std::vector<int>& images) {
  uint64_t c = 0;
  for (int v : images) c = (c << 4) | uint64_t(v);
  return c;
}

uint64_t perm_identity(int d) {
  std::vector<int> im(d);
  for (int i = 0; i < d; ++i) im[i] = i;
  return perm_encode(im);
}

uint64_t perm_compose(uint64_t a, uint64_t b, int d) {  // (a.b)(i) = a(b(i))
  uint64_t c = 0;
  for (int i = 0; i < d; ++i) c = (c << 4) | uint64_t(perm_img(a, perm_img(b, i, d), d));
  return c;
}

uint64_t perm_inverse(uint64_t a, int d) {
  std::vector<int> im(d);
  for (int i = 0; i < d; ++i) im[perm_img(a, i, d)] = i;
  return perm_encode(im);
}

std::string perm_cycles(uint64_t a, int d) {
  std::string s;
  std::vector<bool> seen(d, false);
  for (int i = 0; i < d; ++i) {
    if (seen[i] || perm_img(a, i, d) == i) continue;
    s += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) s += ",";
      s += std::to_string(j + 1);
      first = false;
      j = perm_img(a, j, d);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

// ---- spec string utilities ------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_int(const std::string& s) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    fail(Errc::bad_argument, "expected integer in group spec: '" + s + "'");
  }
  if (used != s.size()) fail(Errc::bad_argument, "expected integer in group spec: '" + s + "'");
  return v;
}

// "(1,2,3)(4,5)" -> 0-based image vector of length degree
std::vector<int> parse_cycles(const std::string& text, int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  std::vector<bool> moved(degree, false);
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(uint8_t(text[i]))) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(Errc::bad_argument, "expected '(' in cycles: " + text);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      size_t j = i;
      while (j < text.size() && std::isdigit(uint8_t(text[j]))) ++j;
      if (j == i) fail(Errc::bad_argument, "expected point in cycles: " + text);
      int pt = parse_int(text.substr(i, j - i));
      if (pt < 1 || pt > degree) fail(Errc::bad_argument, "point out of range in cycles: " + text);
      cyc.push_back(pt - 1);
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i < text.size() && text[i] == ')') { ++i; break; }
      fail(Errc::bad_argument, "expected ',' or ')' in cycles: " + text);
    }
    for (int pt : cyc) {
      if (moved[pt]) fail(Errc::bad_argument, "point repeated in cycles: " + text);
      moved[pt] = true;
    }
    for (size_t k = 0; k < cyc.size(); ++k) im[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return im;
}

int max_point(const std::string& text) {
  int mx = 0, cur = -1;
  for (char ch : text) {
    if (std::isdigit(uint8_t(ch))) {
      cur = (cur < 0 ? 0 : cur) * 10 + (ch - '0');
    } else {
      mx = std::max(mx, cur);
      cur = -1;
    }
  }
  return std::max(mx, cur);
}

uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= uint64_t(i);
  return f;
}

}  // namespace

// ---- payload arithmetic ---------------------------------------------------

uint64_t FiniteGroup::canon_code(uint64_t a) const {
  switch (kind_) {
    case Backend::psl2: {
      const Gf& F = *field_;
      uint64_t neg = (uint64_t(F.neg((a >> 24) & 255)) << 24) |
                     (uint64_t(F.neg((a >> 16) & 255)) << 16) |
                     (uint64_t(F.neg((a >> 8) & 255)) << 8) | F.neg(a & 255);
      return std::min(a, neg);
    }
    case Backend::pgl2: {
      const Gf& F = *field_;
      uint32_t e[4] = {uint32_t(a >> 24) & 255, uint32_t(a >> 16) & 255,
                       uint32_t(a >> 8) & 255, uint32_t(a) & 255};
      uint32_t s = 0;
      for (uint32_t v : e)
        if (v != 0) { s = F.inv(v); break; }
      return (uint64_t(F.mul(e[0], s)) << 24) | (uint64_t(F.mul(e[1], s)) << 16) |
             (uint64_t(F.mul(e[2], s)) << 8) | F.mul(e[3], s);
    }
    default:
      return a;
  }
}

uint64_t FiniteGroup::mul_code(uint64_t a, uint64_t b) const {
  switch (kind_) {
    case Backend::perm:
      return perm_compose(a, b, degree_);
    case Backend::dihedral: {
      // (r^i s^u)(r^j s^v) = r^{i + (u ? -j : j)} s^{u^v}, rotations mod degree
      int n = degree_;
      int i = int(a >> 1), u = int(a & 1), j = int(b >> 1), v = int(b & 1);
      int k = u ? (i - j + n) % n : (i + j) % n;
      return uint64_t(k) << 1 | uint64_t(u ^ v);
    }
    case Backend::affine: {
      const Gf& F = *field_;
      uint32_t a1 = uint32_t(a >> 8), b1 = uint32_t(a & 255);
      uint32_t a2 = uint32_t(b >> 8), b2 = uint32_t(b & 255);
      return uint64_t(F.mul(a1, a2)) << 8 | F.add(F.mul(a1, b2), b1);
    }
    default: {
      const Gf& F = *field_;
      uint32_t a1 = uint32_t(a >> 24) & 255, b1 = uint32_t(a >> 16) & 255,
               c1 = uint32_t(a >> 8) & 255, d1 = uint32_t(a) & 255;
      uint32_t a2 = uint32_t(b >> 24) & 255, b2 = uint32_t(b >> 16) & 255,
               c2 = uint32_t(b >> 8) & 255, d2 = uint32_t(b) & 255;
      uint64_t r = (uint64_t(F.add(F.mul(a1, a2), F.mul(b1, c2))) << 24) |
                   (uint64_t(F.add(F.mul(a1, b2), F.mul(b1, d2))) << 16) |
                   (uint64_t(F.add(F.mul(c1, a2), F.mul(d1, c2))) << 8) |
                   F.add(F.mul(c1, b2), F.mul(d1, d2));
      return canon_code(r);
    }
  }
}

uint64_t FiniteGroup::inv_code(uint64_t a) const {
  switch (kind_) {
    case Backend::perm:
      return perm_inverse(a, degree_);
    case Backend::dihedral: {
      int n = degree_;
      int i = int(a >> 1), u = int(a & 1);
      return u ? a : uint64_t((n - i) % n) << 1;
    }
    case Backend::affine: {
      const Gf& F = *field_;
      uint32_t ai = F.inv(uint32_t(a >> 8));
      return uint64_t(ai) << 8 | F.neg(F.mul(ai, uint32_t(a & 255)));
    }
    default: {
      // adjugate [[d,-b],[-c,a]]; exact inverse for det 1, projective otherwise
      const Gf& F = *field_;
      uint64_t adj = (uint64_t(a & 255) << 24) |
                     (uint64_t(F.neg((a >> 16) & 255)) << 16) |
                     (uint64_t(F.neg((a >> 8) & 255)) << 8) | ((a >> 24) & 255);
      return canon_code(adj);
    }
  }
}

uint64_t FiniteGroup::identity_code() const {
  switch (kind_) {
    case Backend::perm:
      return perm_identity(degree_);
    case Backend::dihedral:
      return 0;
    case Backend::affine:
      return uint64_t(1) << 8;
    default:
      return (uint64_t(1) << 24) | 1;
  }
}

// ---- construction ---------------------------------------------------------

FiniteGroup FiniteGroup::build(const std::string& raw, const GroupCaps& caps) {
  std::string spec;
  for (char ch : raw)
    if (!std::isspace(uint8_t(ch))) spec += ch;
  if (spec.empty()) fail(Errc::bad_argument, "empty group spec");
  auto parts = split(spec, ':');
  const std::string& family = parts[0];

  FiniteGroup G;
  G.spec_ = spec;
  std::vector<uint64_t> codes;

  auto parse_field = [&](size_t qpos) {
    if (parts.size() <= qpos) fail(Errc::bad_argument, "missing field order in: " + spec);
    int p = 0, e = 0;
    auto pe = split(parts[qpos], ',');
    if (pe.size() == 2) {
      p = parse_int(pe[0]);
      e = parse_int(pe[1]);
      if (!is_prime(p) || e < 1) fail(Errc::bad_argument, "bad p,e in: " + spec);
    } else if (pe.size() == 1) {
      factor_prime_power(parse_int(pe[0]), p, e);
    } else {
      fail(Errc::bad_argument, "bad field order in: " + spec);
    }
    if (parts.size() > qpos + 1) {
      std::vector<int> mod;
      for (const auto& tok : split(parts[qpos + 1], ',')) mod.push_back(parse_int(tok));
      G.field_ = std::make_shared<Gf>(p, e, mod);
    } else {
      G.field_ = std::make_shared<Gf>(p, e);
    }
    if (parts.size() > qpos + 2) fail(Errc::bad_argument, "trailing spec parts in: " + spec);
  };

  auto check_cap = [&](uint64_t expected) {
    if (expected > caps.order_cap)
      fail(Errc::cap_exceeded, "group order " + std::to_string(expected) +
                                   " above cap " + std::to_string(caps.order_cap));
  };

  auto perm_closure = [&](const std::vector<uint64_t>& gens) {
    std::unordered_set<uint64_t> seen;
    std::vector<uint64_t> queue{perm_identity(G.degree_)};
    seen.insert(queue[0]);
    for (size_t head = 0; head < queue.size(); ++head) {
      uint64_t u = queue[head];
      for (uint64_t s : gens) {
        uint64_t v = perm_compose(u, s, G.degree_);
        if (seen.insert(v).second) {
          if (seen.size() > caps.order_cap)
            fail(Errc::cap_exceeded, "group order above cap " + std::to_string(caps.order_cap));
          queue.push_back(v);
        }
      }
    }
    return std::vector<uint64_t>(seen.begin(), seen.end());
  };

  if (family == "psl2" || family == "sl2") {
    G.kind_ = family == "psl2" ? Backend::psl2 : Backend::sl2;
    parse_field(1);
    const Gf& F = *G.field_;
    uint32_t q = F.q();
    uint64_t sl_order = uint64_t(q) * q * q - q;
    bool identify = G.kind_ == Backend::psl2 && F.p() != 2;
    check_cap(identify ? sl_order / 2 : sl_order);
    codes.reserve(identify ? sl_order / 2 : sl_order);
    for (uint32_t a = 0; a < q; ++a) {
      for (uint32_t b = 0; b < q; ++b) {
        for (uint32_t c = 0; c < q; ++c) {
          if (a != 0) {
            uint32_t d = F.mul(F.add(1, F.mul(b, c)), F.inv(a));
            codes.push_back(G.canon_code((uint64_t(a) << 24) | (uint64_t(b) << 16) |
                                         (uint64_t(c) << 8) | d));
          } else if (b != 0 && c == F.neg(F.inv(b))) {
            for (uint32_t d = 0; d < q; ++d)
              codes.push_back(G.canon_code((uint64_t(b) << 16) | (uint64_t(c) << 8) | d));
          }
        }
      }
    }
  } else if (family == "pgl2") {
    G.kind_ = Backend::pgl2;
    parse_field(1);
    const Gf& F = *G.field_;
    uint32_t q = F.q();
    check_cap(uint64_t(q) * q * q - q);
    for (uint32_t a = 0; a < q; ++a)
      for (uint32_t b = 0; b < q; ++b)
        for (uint32_t c = 0; c < q; ++c)
          for (uint32_t d = 0; d < q; ++d) {
            if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) continue;
            codes.push_back(G.canon_code((uint64_t(a) << 24) | (uint64_t(b) << 16) |
                                         (uint64_t(c) << 8) | d));
          }
  } else if (family == "agl1") {
    G.kind_ = Backend::affine;
    parse_field(1);
    const Gf& F = *G.field_;
    check_cap(uint64_t(F.q()) * (F.q() - 1));
    for (uint32_t a = 1; a < F.q(); ++a)
      for (uint32_t b = 0; b < F.q(); ++b) codes.push_back(uint64_t(a) << 8 | b);
  } else if (family == "dihedral") {
    if (parts.size() != 2) fail(Errc::bad_argument, "dihedral:n expected: " + spec);
    int n = parse_int(parts[1]);
    if (n < 1) fail(Errc::bad_argument, "dihedral order parameter must be positive");
    G.kind_ = Backend::dihedral;
    G.degree_ = n;
    check_cap(2 * uint64_t(n));
    for (int i = 0; i < 2 * n; ++i) codes.push_back(uint64_t(i));
  } else if (family == "sym" || family == "alt") {
    if (parts.size() != 2) fail(Errc::bad_argument, family + ":n expected: " + spec);
    int n = parse_int(parts[1]);
    if (n < 1 || n > 16) fail(Errc::bad_argument, "degree must be in 1..16: " + spec);
    G.kind_ = Backend::perm;
    G.degree_ = n;
    check_cap(family == "sym" ? factorial(n) : std::max<uint64_t>(factorial(n) / 2, 1));
    std::vector<uint64_t> gens;
    if (family == "sym") {
      if (n >= 2) {
        gens.push_back(perm_encode(parse_cycles("(1,2)", n)));
        std::string cyc = "(1";
        for (int i = 2; i <= n; ++i) cyc += "," + std::to_string(i);
        gens.push_back(perm_encode(parse_cycles(cyc + ")", n)));
      }
    } else {
      if (n >= 3) {
        gens.push_back(perm_encode(parse_cycles("(1,2,3)", n)));
        std::string cyc = n % 2 ? "(1" : "(2";
        for (int i = (n % 2 ? 2 : 3); i <= n; ++i) cyc += "," + std::to_string(i);
        if (n > 3) gens.push_back(perm_encode(parse_cycles(cyc + ")", n)));
      }
    }
    codes = perm_closure(gens);
  } else if (family == "perm") {
    std::string body = spec.substr(5);
    if (body.empty()) fail(Errc::bad_argument, "perm spec needs generators");
    G.kind_ = Backend::perm;
    G.degree_ = max_point(body);
    if (G.degree_ < 1 || G.degree_ > 16)
      fail(Errc::bad_argument, "permutation degree must be in 1..16: " + spec);
    std::vector<uint64_t> gens;
    for (const auto& g : split(body, ';'))
      gens.push_back(perm_encode(parse_cycles(g, G.degree_)));
    codes = perm_closure(gens);
  } else {
    fail(Errc::bad_argument, "unknown group family: " + family);
  }

  G.finish(caps, std::move(codes));
  return G;
}

void FiniteGroup::finish(const GroupCaps& caps, std::vector<uint64_t> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  if (codes.size() > std::min<uint64_t>(caps.order_cap, 65535))
    fail(Errc::cap_exceeded, "group order above cap " + std::to_string(caps.order_cap));

  uint64_t id = identity_code();
  auto it = std::lower_bound(codes.begin(), codes.end(), id);
  if (it == codes.end() || *it != id) throw std::logic_error("identity missing from element table");
  codes.erase(it);
  code_.clear();
  code_.push_back(id);
  code_.insert(code_.end(), codes.begin(), codes.end());
  n_ = uint32_t(code_.size());

  inv_.resize(n_);
  for (uint32_t i = 0; i < n_; ++i) inv_[i] = lookup(inv_code(code_[i]));

  if (n_ <= caps.table_cap) {
    mul_tab_.resize(size_t(n_) * n_);
    for (uint32_t i = 0; i < n_; ++i)
      for (uint32_t j = 0; j < n_; ++j)
        mul_tab_[size_t(i) * n_ + j] = lookup(mul_code(code_[i], code_[j]));
  }

  ord_.resize(n_);
  n_invol_ = 0;
  for (uint32_t i = 0; i < n_; ++i) {
    int k = 1;
    Elt x = Elt(i);
    while (x != 0) {
      x = mul(x, Elt(i));
      ++k;
    }
    ord_[i] = uint16_t(k);
    if (k == 2) ++n_invol_;
  }

  gens_.clear();
  std::vector<Elt> cl = closure(gens_);
  while (cl.size() < n_) {
    Elt next = 0;
    for (uint32_t i = 0; i < cl.size(); ++i) {
      if (cl[i] != i) { next = Elt(i); break; }
    }
    if (next == 0) next = Elt(cl.size());
    gens_.push_back(next);
    cl = closure(gens_);
  }
}

const Gf& FiniteGroup::field() const {
  if (!field_) fail(Errc::bad_argument, "group backend has no field");
  return *field_;
}

Elt FiniteGroup::lookup(uint64_t code) const {
  if (code == code_[0]) return 0;
  auto it = std::lower_bound(code_.begin() + 1, code_.end(), code);
  if (it == code_.end() || *it != code) throw std::logic_error("element code not in group");
  return Elt(it - code_.begin());
}

std::optional<Elt> FiniteGroup::find_code(uint64_t code) const {
  if (code == code_[0]) return Elt(0);
  auto it = std::lower_bound(code_.begin() + 1, code_.end(), code);
  if (it == code_.end() || *it != code) return std::nullopt;
  return Elt(it - code_.begin());
}

Elt FiniteGroup::power(Elt a, long long k) const {
  int d = ord_[a];
  long long r = k % d;
  if (r < 0) r += d;
  Elt acc = 0, base = a;
  while (r > 0) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}

std::vector<Elt> FiniteGroup::center() const {
  std::vector<Elt> z;
  for (uint32_t g = 0; g < n_; ++g) {
    bool central = true;
    for (Elt s : gens_)
      if (mul(Elt(g), s) != mul(s, Elt(g))) { central = false; break; }
    if (central) z.push_back(Elt(g));
  }
  return z;
}

std::vector<Elt> FiniteGroup::closure(const std::vector<Elt>& s) const {
  std::vector<uint8_t> seen(n_, 0);
  std::vector<Elt> members;
  seen[0] = 1;
  members.push_back(0);
  for (Elt g : s) {
    if (!seen[g]) {
      seen[g] = 1;
      members.push_back(g);
    }
  }
  for (size_t head = 0; head < members.size(); ++head) {
    Elt u = members[head];
    for (Elt g : s) {
      Elt v = mul(u, g);
      if (!seen[v]) {
        seen[v] = 1;
        members.push_back(v);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool FiniteGroup::generates(const std::vector<Elt>& s) const {
  std::vector<uint8_t> seen(n_, 0);
  std::vector<Elt> queue;
  seen[0] = 1;
  queue.push_back(0);
  size_t count = 1;
  const size_t half = n_ / 2;
  for (Elt g : s) {
    if (!seen[g]) {
      seen[g] = 1;
      queue.push_back(g);
      ++count;
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    Elt u = queue[head];
    for (Elt g : s) {
      Elt v = mul(u, g);
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
        if (++count > half) return true;  // proper subgroup order divides |G|
      }
    }
  }
  return count == n_;
}

Elt FiniteGroup::from_matrix(const std::array<uint32_t, 4>& m) const {
  if (!is_matrix()) fail(Errc::bad_argument, "not a matrix backend");
  for (uint32_t v : m)
    if (v >= field_->q()) fail(Errc::bad_argument, "matrix entry outside field");
  uint64_t code = canon_code((uint64_t(m[0]) << 24) | (uint64_t(m[1]) << 16) |
                             (uint64_t(m[2]) << 8) | m[3]);
  auto e = find_code(code);
  if (!e) fail(Errc::bad_argument, "matrix not in group");
  return *e;
}

Elt FiniteGroup::from_affine(uint32_t a, uint32_t b) const {
  if (kind_ != Backend::affine) fail(Errc::bad_argument, "not an affine backend");
  if (a == 0 || a >= field_->q() || b >= field_->q())
    fail(Errc::bad_argument, "bad affine coefficients");
  return lookup(uint64_t(a) << 8 | b);
}

Elt FiniteGroup::from_cycles(const std::string& cycles) const {
  if (kind_ != Backend::perm) fail(Errc::bad_argument, "not a permutation backend");
  auto e = find_code(perm_encode(parse_cycles(cycles, degree_)));
  if (!e) fail(Errc::bad_argument, "permutation not in group: " + cycles);
  return *e;
}

std::string FiniteGroup::describe(Elt a) const {
  uint64_t c = code_[a];
  switch (kind_) {
    case Backend::perm:
      return perm_cycles(c, degree_);
    case Backend::dihedral: {
      int i = int(c >> 1), u = int(c & 1);
      std::string s;
      if (i != 0) s = i == 1 ? "r" : "r^" + std::to_string(i);
      if (u) s += s.empty() ? "s" : "*s";
      return s.empty() ? "1" : s;
    }
    case Backend::affine: {
      const Gf& F = *field_;
      return "(" + F.to_string(uint32_t(c >> 8)) + ", " + F.to_string(uint32_t(c & 255)) + ")";
    }
    default: {
      const Gf& F = *field_;
      return "[[" + F.to_string(uint32_t(c >> 24) & 255) + "," +
             F.to_string(uint32_t(c >> 16) & 255) + "],[" +
             F.to_string(uint32_t(c >> 8) & 255) + "," + F.to_string(uint32_t(c) & 255) + "]]";
    }
  }
}

// ---- conjugacy classes ----------------------------------------------------

uint32_t trace_pair_label(const FiniteGroup& G, Elt g) {
  if (!G.is_matrix()) fail(Errc::bad_argument, "trace-pair needs a matrix backend");
  const Gf& F = G.field();
  uint64_t c = G.code_of(g);
  uint32_t a = uint32_t(c >> 24) & 255, b = uint32_t(c >> 16) & 255,
           cc = uint32_t(c >> 8) & 255, d = uint32_t(c) & 255;
  uint32_t tr = F.add(a, d);
  switch (G.backend()) {
    case Backend::psl2:
      return F.pm_canon(tr);
    case Backend::sl2:
      return tr;
    default: {  // PGL: tr^2/det is invariant under scaling and conjugation
      uint32_t det = F.sub(F.mul(a, d), F.mul(b, cc));
      return F.mul(F.mul(tr, tr), F.inv(det));
    }
  }
}

std::string trace_pair_string(const FiniteGroup& G, uint32_t label) {
  const Gf& F = G.field();
  if (G.backend() == Backend::psl2 && F.p() != 2) return "±" + F.to_string(label);
  return F.to_string(label);
}

ClassData conjugacy_classes(const FiniteGroup& G) {
  const uint32_t n = G.order();
  ClassData cd;
  cd.class_of.assign(n, uint16_t(0xffff));
  for (uint32_t e = 0; e < n; ++e) {
    if (cd.class_of[e] != 0xffff) continue;
    uint16_t id = uint16_t(cd.classes.size());
    ConjClass cl;
    cl.rep = Elt(e);  // scan order makes this the least index in the class
    cl.order = G.order_of(Elt(e));
    std::vector<Elt> queue{Elt(e)};
    cd.class_of[e] = id;
    for (size_t head = 0; head < queue.size(); ++head) {
      Elt u = queue[head];
      for (Elt s : G.generators()) {
        Elt v = G.conj(u, s);
        if (cd.class_of[v] == 0xffff) {
          cd.class_of[v] = id;
          queue.push_back(v);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    cl.size = uint32_t(queue.size());
    cl.members = std::move(queue);
    if (G.is_matrix()) cl.trace = trace_pair_label(G, cl.rep);
    cd.classes.push_back(std::move(cl));
  }

  std::vector<uint16_t> perm(cd.classes.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = uint16_t(i);
  std::sort(perm.begin(), perm.end(), [&](uint16_t a, uint16_t b) {
    const ConjClass &x = cd.classes[a], &y = cd.classes[b];
    if (x.order != y.order) return x.order < y.order;
    if (x.size != y.size) return x.size < y.size;
    return x.rep < y.rep;
  });
  std::vector<ConjClass> sorted;
  sorted.reserve(cd.classes.size());
  std::vector<uint16_t> newid(cd.classes.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    newid[perm[i]] = uint16_t(i);
    sorted.push_back(std::move(cd.classes[perm[i]]));
  }
  cd.classes = std::move(sorted);
  for (auto& c : cd.class_of) c = newid[c];
  int letter = 0, last_order = -1;
  for (auto& cl : cd.classes) {
    letter = cl.order == last_order ? letter + 1 : 0;
    last_order = cl.order;
    cl.name = std::to_string(cl.order) + char('A' + letter);
  }
  return cd;
}

uint32_t ClassData::power_class(const FiniteGroup& G, uint32_t c, long long k) const {
  return class_of[G.power(classes[c].rep, k)];
}

std::optional<uint32_t> ClassData::find(const std::string& name) const {
  for (uint32_t i = 0; i < classes.size(); ++i)
    if (classes[i].name == name) return i;
  return std::nullopt;
}

}  // namespace regmap
