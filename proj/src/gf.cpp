#include "regmap/gf.hpp"

#include <algorithm>
#include <numeric>

#include "regmap/error.hpp"

namespace regmap {

namespace {

constexpr uint32_t kMaxQ = 256;  // payload byte packing bound in group backends

// Dense coefficient vectors over Z/p, constant term first, no trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& f, const Poly& g, int p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  trim(h);
  return h;
}

// Remainder of f modulo monic m.
Poly poly_mod(Poly f, const Poly& m, int p) {
  trim(f);
  while (f.size() >= m.size()) {
    int lead = f.back();
    size_t shift = f.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      f[shift + i] = ((f[shift + i] - lead * m[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

bool poly_divides(const Poly& d, const Poly& f, int p) {
  return poly_mod(f, d, p).empty();
}

Poly decode_poly(uint32_t idx, int p, int e) {
  Poly f(e, 0);
  for (int i = 0; i < e; ++i) {
    f[i] = idx % p;
    idx /= p;
  }
  trim(f);
  return f;
}

uint32_t encode_poly(const Poly& f, int p) {
  uint32_t idx = 0;
  for (size_t i = f.size(); i-- > 0;) idx = idx * p + f[i];
  return idx;
}

bool is_irreducible(const Poly& f, int p) {
  int deg = int(f.size()) - 1;
  if (deg <= 0) return false;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    uint32_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (uint32_t lo = 0; lo < count; ++lo) {
      Poly g = decode_poly(lo, p, d);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (poly_divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void factor_prime_power(int q, int& p, int& e) {
  if (q < 2) fail(Errc::bad_argument, "field order must be at least 2");
  for (p = 2; p * p <= q; ++p) {
    if (q % p == 0) break;
  }
  if (p * p > q) p = q;
  e = 0;
  int m = q;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1 || !is_prime(p))
    fail(Errc::bad_argument, std::to_string(q) + " is not a prime power");
}

std::vector<int> default_modulus(int p, int e) {
  if (!is_prime(p)) fail(Errc::bad_argument, "characteristic must be prime");
  if (e < 1) fail(Errc::bad_argument, "extension degree must be positive");
  if (e == 1) return {0, 1};
  // Least index encoding = compare coefficients from the top degree down.
  uint32_t count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (uint32_t lo = 0; lo < count; ++lo) {
    Poly f = decode_poly(lo, p, e);
    f.resize(e + 1, 0);
    f[e] = 1;
    if (is_irreducible(f, p)) {
      return std::vector<int>(f.begin(), f.end());
    }
  }
  fail(Errc::bad_argument, "no irreducible modulus found");  // unreachable
}

Gf::Gf(int p, int e) : Gf(p, e, default_modulus(p, e)) {}

Gf::Gf(int p, int e, const std::vector<int>& modulus) : p_(p), e_(e) {
  if (!is_prime(p)) fail(Errc::bad_argument, "characteristic must be prime");
  if (e < 1) fail(Errc::bad_argument, "extension degree must be positive");
  uint64_t q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  if (q > kMaxQ) fail(Errc::bad_argument, "field order above " + std::to_string(kMaxQ));
  q_ = uint32_t(q);
  if (modulus.size() != size_t(e) + 1 || modulus[e] != 1)
    fail(Errc::bad_argument, "modulus must be monic of degree e");
  for (int c : modulus)
    if (c < 0 || c >= p) fail(Errc::bad_argument, "modulus coefficient out of range");
  mod_.assign(modulus.begin(), modulus.end());
  Poly m(mod_.begin(), mod_.end());
  if (!is_irreducible(m, p)) fail(Errc::bad_argument, "modulus is reducible");
  build_tables();
}

void Gf::build_tables() {
  Poly m(mod_.begin(), mod_.end());
  add_.resize(size_t(q_) * q_);
  mul_.resize(size_t(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  square_.assign(q_, 0);
  for (uint32_t a = 0; a < q_; ++a) {
    Poly fa = decode_poly(a, p_, e_);
    Poly na(fa.size());
    for (size_t i = 0; i < fa.size(); ++i) na[i] = (p_ - fa[i]) % p_;
    trim(na);
    neg_[a] = uint16_t(encode_poly(na, p_));
    for (uint32_t b = 0; b < q_; ++b) {
      Poly fb = decode_poly(b, p_, e_);
      Poly s(std::max(fa.size(), fb.size()), 0);
      for (size_t i = 0; i < s.size(); ++i) {
        int x = (i < fa.size() ? fa[i] : 0) + (i < fb.size() ? fb[i] : 0);
        s[i] = x % p_;
      }
      trim(s);
      add_[a * q_ + b] = uint16_t(encode_poly(s, p_));
      mul_[a * q_ + b] = uint16_t(encode_poly(poly_mod(poly_mul(fa, fb, p_), m, p_), p_));
    }
  }
  for (uint32_t a = 1; a < q_; ++a) {
    for (uint32_t b = 1; b < q_; ++b) {
      if (mul(a, b) == 1) {
        inv_[a] = uint16_t(b);
        break;
      }
    }
    if (inv_[a] == 0) fail(Errc::bad_argument, "modulus is reducible");
    square_[mul(a, a)] = 1;
  }
  square_[0] = 1;
}

uint32_t Gf::inv(uint32_t a) const {
  if (a == 0) fail(Errc::bad_argument, "zero has no inverse");
  return inv_[a];
}

uint32_t Gf::pow(uint32_t a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  uint32_t r = 1;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

uint32_t Gf::frobenius(uint32_t a, int k) const {
  k %= e_;
  if (k < 0) k += e_;
  for (int i = 0; i < k; ++i) a = pow(a, p_);
  return a;
}

int Gf::mul_order(uint32_t a) const {
  if (a == 0) fail(Errc::bad_argument, "zero has no multiplicative order");
  int n = 1;
  uint32_t x = a;
  while (x != 1) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

std::string Gf::to_string(uint32_t a) const {
  if (e_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::string s;
  for (int d = e_ - 1; d >= 0; --d) {
    uint32_t pd = 1;
    for (int i = 0; i < d; ++i) pd *= p_;
    int c = int(a / pd % uint32_t(p_));
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (d == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c);
      s += (d == 1) ? "t" : "t^" + std::to_string(d);
    }
  }
  return s;
}

}  // namespace regmap
