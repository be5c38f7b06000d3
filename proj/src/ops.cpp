#include "regmap/ops.hpp"

#include <numeric>

#include "regmap/error.hpp"

namespace regmap {

std::string MapOperation::name() const {
  return kind == Kind::dual ? "D" : "H" + std::to_string(j);
}

MapTriple dual(const MapTriple& m) {
  const FiniteGroup& G = *m.group;
  MapTriple d;
  d.group = m.group;
  d.x = m.z;
  d.y = m.y;
  d.z = G.conj(m.x, m.y);  // z * y * x^y = (xy)^-1 * (xy) = 1
  return d;
}

MapTriple hole(const MapTriple& m, long long j) {
  const FiniteGroup& G = *m.group;
  long long q = G.order_of(m.x);
  long long jm = ((j % q) + q) % q;
  if (std::gcd(jm, q) != 1)
    fail(Errc::bad_argument, "hole exponent " + std::to_string(j) +
                                 " is not coprime to the valency " + std::to_string(q));
  MapTriple h;
  h.group = m.group;
  h.x = G.power(m.x, jm);
  h.y = m.y;
  h.z = G.inv(G.mul(h.x, h.y));
  return h;
}

MapTriple mirror(const MapTriple& m) {
  return hole(m, (long long)m.group->order_of(m.x) - 1);
}

MapTriple apply_op(const MapTriple& m, const MapOperation& op) {
  return op.kind == MapOperation::Kind::dual ? dual(m) : hole(m, op.j);
}

std::vector<MapOperation> parse_ops(const std::string& list) {
  std::vector<MapOperation> out;
  size_t pos = 0;
  while (true) {
    size_t comma = list.find(',', pos);
    std::string tok = list.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    tok = (a == std::string::npos) ? "" : tok.substr(a, b - a + 1);
    if (tok.empty()) fail(Errc::bad_argument, "operation list has an empty entry");
    if (tok == "D") {
      out.push_back({MapOperation::Kind::dual, 0});
    } else if (tok[0] == 'H') {
      size_t used = 0;
      long long j = 0;
      try {
        j = std::stoll(tok.substr(1), &used);
      } catch (const std::exception&) {
        fail(Errc::bad_argument, "bad operation '" + tok + "' (want D or H<integer>)");
      }
      if (used + 1 != tok.size())
        fail(Errc::bad_argument, "bad operation '" + tok + "' (want D or H<integer>)");
      if (j == 0) fail(Errc::bad_argument, "hole exponent must be nonzero");
      out.push_back({MapOperation::Kind::hole, j});
    } else {
      fail(Errc::bad_argument, "bad operation '" + tok + "' (want D or H<integer>)");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace regmap
