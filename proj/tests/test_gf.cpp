#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regmap/error.hpp"
#include "regmap/gf.hpp"

using regmap::Errc;
using regmap::Error;
using regmap::Gf;

TEST_CASE("default moduli are the least-index irreducibles") {
  CHECK(regmap::default_modulus(2, 2) == std::vector<int>{1, 1, 1});
  CHECK(regmap::default_modulus(2, 3) == std::vector<int>{1, 1, 0, 1});
  CHECK(regmap::default_modulus(2, 4) == std::vector<int>{1, 1, 0, 0, 1});
  CHECK(regmap::default_modulus(2, 5) == std::vector<int>{1, 0, 1, 0, 0, 1});
  CHECK(regmap::default_modulus(3, 2) == std::vector<int>{1, 0, 1});
  CHECK(regmap::default_modulus(7, 1) == std::vector<int>{0, 1});
}

TEST_CASE("GF(8) powers of t under t^3 = t + 1") {
  Gf f(2, 3);
  const uint32_t t = 2;
  CHECK(f.mul(t, t) == 4);          // t^2
  CHECK(f.pow(t, 3) == 3);          // t + 1
  CHECK(f.mul(t, f.pow(t, 3)) == 6);  // t^4 = t^2 + t
  CHECK(f.pow(t, 5) == 7);          // t^2 + t + 1
  CHECK(f.pow(t, 6) == 5);          // t^2 + 1
  CHECK(f.pow(t, 7) == 1);
  CHECK(f.mul_order(t) == 7);
}

TEST_CASE("prime field arithmetic") {
  Gf f(7, 1);
  CHECK(f.add(3, 5) == 1);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.neg(2) == 5);
  CHECK(f.pow(3, -1) == 5);
}

static void check_axioms(const Gf& f) {
  const uint32_t q = f.q();
  for (uint32_t a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    for (uint32_t b = 0; b < q; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      for (uint32_t c = 0; c < q; ++c) {
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST_CASE("field axioms, exhaustive") {
  check_axioms(Gf(2, 3));
  check_axioms(Gf(3, 2));
  check_axioms(Gf(2, 4));
  check_axioms(Gf(5, 2));
  check_axioms(Gf(3, 3));
}

TEST_CASE("frobenius is a field automorphism of order e fixing GF(p)") {
  for (auto [p, e] : {std::pair{2, 3}, {2, 4}, {3, 2}, {7, 2}, {3, 3}}) {
    Gf f(p, e);
    for (uint32_t a = 0; a < f.q(); ++a) {
      CHECK(f.frobenius(a, 0) == a);
      CHECK(f.frobenius(a, e) == a);
      CHECK(f.frobenius(a) == f.pow(a, p));
      for (uint32_t b = 0; b < f.q(); ++b) {
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
      }
    }
    for (uint32_t a = 0; a < uint32_t(p); ++a) CHECK(f.frobenius(a) == a);
  }
}

TEST_CASE("GF(32) multiplicative group is cyclic of prime order 31") {
  Gf f(2, 5);
  for (uint32_t a = 2; a < f.q(); ++a) CHECK(f.mul_order(a) == 31);
  CHECK(f.mul_order(1) == 1);
}

TEST_CASE("quadratic residues") {
  Gf f13(13, 1);
  for (uint32_t a : {0u, 1u, 3u, 4u, 9u, 10u, 12u}) CHECK(f13.is_square(a));
  for (uint32_t a : {2u, 5u, 6u, 7u, 8u, 11u}) CHECK(!f13.is_square(a));
  Gf f8(2, 3);  // squaring is bijective in characteristic 2
  for (uint32_t a = 0; a < 8; ++a) CHECK(f8.is_square(a));
}

TEST_CASE("element formatting") {
  Gf f8(2, 3);
  CHECK(f8.to_string(0) == "0");
  CHECK(f8.to_string(1) == "1");
  CHECK(f8.to_string(2) == "t");
  CHECK(f8.to_string(6) == "t^2+t");
  CHECK(f8.to_string(7) == "t^2+t+1");
  Gf f13(13, 1);
  CHECK(f13.to_string(5) == "5");
  Gf f9(3, 2);
  CHECK(f9.to_string(7) == "2t+1");
}

TEST_CASE("pm_canon picks the least of a pair") {
  Gf f(13, 1);
  CHECK(f.pm_canon(7) == 6);
  CHECK(f.pm_canon(6) == 6);
  CHECK(f.pm_canon(0) == 0);
  Gf f8(2, 3);  // characteristic 2: -a = a
  for (uint32_t a = 0; a < 8; ++a) CHECK(f8.pm_canon(a) == a);
}

TEST_CASE("invalid constructions are rejected") {
  CHECK_THROWS_AS(Gf(4, 1), Error);
  CHECK_THROWS_AS(Gf(2, 0), Error);
  CHECK_THROWS_AS(Gf(2, 9), Error);                          // above order bound
  CHECK_THROWS_AS(Gf(2, 3, {1, 0, 0, 1}), Error);            // t^3+1 reducible
  CHECK_THROWS_AS(Gf(2, 3, {1, 1, 1}), Error);               // wrong degree
  CHECK_THROWS_AS(Gf(2, 3, {2, 1, 0, 1}), Error);            // coefficient range
  Gf f(2, 3);
  CHECK_THROWS_AS(f.inv(0), Error);
  try {
    Gf g(6, 1);
    FAIL("expected throw");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::bad_argument);
  }
}

TEST_CASE("prime power factoring") {
  int p = 0, e = 0;
  regmap::factor_prime_power(8, p, e);
  CHECK(p == 2);
  CHECK(e == 3);
  regmap::factor_prime_power(49, p, e);
  CHECK(p == 7);
  CHECK(e == 2);
  regmap::factor_prime_power(13, p, e);
  CHECK(p == 13);
  CHECK(e == 1);
  CHECK_THROWS_AS(regmap::factor_prime_power(12, p, e), Error);
  CHECK_THROWS_AS(regmap::factor_prime_power(1, p, e), Error);
}
