#include "regmap/map.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "regmap/error.hpp"

namespace regmap {

std::optional<Elt> standard_antidiagonal(const FiniteGroup& G) {
  if (!G.is_matrix()) return std::nullopt;
  const Gf& F = G.field();
  uint64_t code = (uint64_t(0) << 24) | (uint64_t(1) << 16) |
                  (uint64_t(F.neg(1)) << 8) | uint64_t(0);
  return G.find_code(G.canon_code(code));
}

std::string to_string(Reflexibility r) {
  switch (r) {
    case Reflexibility::chiral: return "chiral";
    case Reflexibility::inner_regular: return "inner-regular";
    case Reflexibility::outer_regular: return "outer-regular";
  }
  return "?";
}

MapTriple make_map(const FiniteGroup& G, Elt x, Elt y) {
  if (G.order_of(y) != 2)
    throw Error(Errc::not_involution,
                "y must have order 2, got order " + std::to_string(G.order_of(y)));
  if (!G.generates({x, y}))
    throw Error(Errc::not_generating, "the pair (x, y) generates a proper subgroup");
  MapTriple m;
  m.group = &G;
  m.x = x;
  m.y = y;
  m.z = G.inv(G.mul(x, y));
  return m;
}

uint64_t genus_of(uint64_t group_order, uint32_t p, uint32_t q) {
  if (p == 0 || q == 0 || group_order % 2 || group_order % p || group_order % q)
    throw std::logic_error("genus_of: orders must divide the (even) group order");
  long long n = (long long)group_order;
  long long chi = n / q - n / 2 + n / p;  // vertices - edges + faces
  long long twice_genus = 2 - chi;
  if (twice_genus < 0 || twice_genus % 2)
    throw std::logic_error("genus_of: Euler characteristic is not that of a closed orientable surface");
  return (uint64_t)(twice_genus / 2);
}

MapInvariants invariants(const MapTriple& m, const AutGroup& A) {
  const FiniteGroup& G = *m.group;
  if (&A.group() != m.group)
    throw std::logic_error("invariants: automorphism group built for a different group");
  MapInvariants inv;
  inv.q = G.order_of(m.x);
  inv.p = G.order_of(m.z);
  inv.r = 2 * G.order_of(G.commutator(m.x, m.y));
  inv.genus = genus_of(G.order(), inv.p, inv.q);

  // The mirror image is (x^-1, y); the map equals it exactly when some
  // automorphism sends x to x^-1 fixing y.  Such a reflection is unique --
  // two of them would differ by an automorphism fixing both generators --
  // so inner/outer is a property of the map, not of a chosen witness.
  Elt x_inv = G.inv(m.x);
  const Automorphism* reflection = nullptr;
  for (const auto& s : A.stabilizer(m.y)) {
    if (s.perm[m.x] == x_inv) {
      reflection = &s;
      break;
    }
  }
  if (!reflection) {
    inv.reflexibility = Reflexibility::chiral;
  } else if (inner_witness(G, reflection->perm)) {
    inv.reflexibility = Reflexibility::inner_regular;
    if (G.center().size() == 1) inv.quotient_genus = inv.genus + 1;
  } else {
    inv.reflexibility = Reflexibility::outer_regular;
  }

  if (G.is_matrix() && standard_antidiagonal(G) == std::optional<Elt>(m.y)) {
    auto [t, ct] = trace_cotrace(m);
    inv.trace = t;
    inv.cotrace = ct;
  }
  return inv;
}

uint32_t hole_length(const MapTriple& m, long long j) {
  const FiniteGroup& G = *m.group;
  long long q = G.order_of(m.x);
  long long jm = ((j % q) + q) % q;
  if (std::gcd(jm, q) != 1)
    fail(Errc::bad_argument, "hole exponent " + std::to_string(j) +
                                 " is not coprime to the valency " + std::to_string(q));
  return G.order_of(G.inv(G.mul(G.power(m.x, jm), m.y)));
}

uint32_t word_order(const MapTriple& m, const std::vector<long long>& exponents) {
  if (exponents.empty()) fail(Errc::bad_argument, "exponent list must be nonempty");
  const FiniteGroup& G = *m.group;
  Elt w = 0;
  for (long long d : exponents) w = G.mul(G.mul(w, G.power(m.x, d)), m.y);
  return G.order_of(w);
}

namespace {

// Recursive-descent evaluator for relator words:
//   word    := (factor ('*' factor)*)?        empty word = identity
//   factor  := primary ('^' integer)?
//   primary := 'R' | 'S' | '(' word ')'
struct WordParser {
  const FiniteGroup& G;
  const std::string& s;
  Elt x, z;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool at_end_or_close() {
    skip_ws();
    return pos >= s.size() || s[pos] == ')';
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == digits)
      fail(Errc::bad_argument, "relator: expected an integer after '^' in '" + s + "'");
    return std::stoll(s.substr(start, pos - start));
  }
  Elt primary() {
    skip_ws();
    if (pos >= s.size()) fail(Errc::bad_argument, "relator: unexpected end of '" + s + "'");
    char c = s[pos];
    if (c == 'R') { ++pos; return x; }
    if (c == 'S') { ++pos; return z; }
    if (c == '(') {
      ++pos;
      Elt v = word();
      skip_ws();
      if (pos >= s.size() || s[pos] != ')')
        fail(Errc::bad_argument, "relator: missing ')' in '" + s + "'");
      ++pos;
      return v;
    }
    fail(Errc::bad_argument, std::string("relator: unexpected character '") + c +
                                 "' in '" + s + "'");
  }
  Elt factor() {
    Elt v = primary();
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      v = G.power(v, integer());
    }
    return v;
  }
  Elt word() {
    if (at_end_or_close()) return Elt(0);
    Elt acc = factor();
    while (!at_end_or_close()) {
      if (s[pos] != '*')
        fail(Errc::bad_argument, std::string("relator: expected '*' before '") +
                                     s[pos] + "' in '" + s + "'");
      ++pos;
      acc = G.mul(acc, factor());
    }
    return acc;
  }
};

}  // namespace

std::vector<bool> check_relators(const MapTriple& m,
                                 const std::vector<std::string>& relators) {
  const FiniteGroup& G = *m.group;
  std::vector<bool> out;
  out.reserve(relators.size());
  for (const std::string& rel : relators) {
    WordParser parser{G, rel, m.x, m.z};
    Elt v = parser.word();
    parser.skip_ws();
    if (parser.pos != rel.size())
      fail(Errc::bad_argument, "relator: trailing text in '" + rel + "'");
    out.push_back(v == Elt(0));
  }
  return out;
}

std::pair<std::string, std::string> trace_cotrace(const MapTriple& m) {
  const FiniteGroup& G = *m.group;
  if (!G.is_matrix())
    fail(Errc::bad_argument, "trace is defined only for matrix groups");
  if (standard_antidiagonal(G) != std::optional<Elt>(m.y))
    fail(Errc::bad_argument,
         "trace requires y in the standard antidiagonal form [[0,1],[-1,0]]");
  return {trace_pair_string(G, trace_pair_label(G, m.x)),
          trace_pair_string(G, trace_pair_label(G, m.z))};
}

}  // namespace regmap
