#pragma once

// Arithmetic in GF(p^e) on element indexes.
//
// The element with coefficient vector (c0, c1, ..., c_{e-1}), constant term
// first, has index c0 + c1*p + ... + c_{e-1}*p^{e-1}.  Index order is the
// field's total element order.  The default modulus is the monic irreducible
// of degree e with the least index encoding; GF(8) gets t^3+t+1.  Overriding
// the modulus changes indexing, not field isomorphism type.

#include <cstdint>
#include <string>
#include <vector>

namespace regmap {

class Gf {
 public:
  Gf(int p, int e);
  Gf(int p, int e, const std::vector<int>& modulus);  // coeffs c0..ce, ce = 1

  int p() const { return p_; }
  int e() const { return e_; }
  uint32_t q() const { return q_; }
  const std::vector<int>& modulus() const { return mod_; }

  uint32_t add(uint32_t a, uint32_t b) const { return add_[a * q_ + b]; }
  uint32_t mul(uint32_t a, uint32_t b) const { return mul_[a * q_ + b]; }
  uint32_t neg(uint32_t a) const { return neg_[a]; }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t inv(uint32_t a) const;  // a != 0
  uint32_t pow(uint32_t a, long long k) const;
  uint32_t frobenius(uint32_t a, int k = 1) const;  // a^(p^k)
  int mul_order(uint32_t a) const;                  // a != 0
  bool is_square(uint32_t a) const { return square_[a] != 0; }

  // Least of {a, -a} in index order; the label shared by a trace pair.
  uint32_t pm_canon(uint32_t a) const { return std::min(a, neg(a)); }

  std::string to_string(uint32_t a) const;  // polynomial in t, "t^2+t+1"

 private:
  int p_, e_;
  uint32_t q_;
  std::vector<int> mod_;
  std::vector<uint16_t> add_, mul_, inv_, neg_;
  std::vector<uint8_t> square_;
  void build_tables();
};

// Coefficients c0..ce (ce = 1) of the default modulus for GF(p^e).
std::vector<int> default_modulus(int p, int e);

bool is_prime(int n);

// Factors q as p^e with p prime; throws bad_argument otherwise.
void factor_prime_power(int q, int& p, int& e);

}  // namespace regmap
