#include <doctest.h>

#include <random>
#include <set>

#include "chaincode/chain.hpp"

using namespace chaincode;

namespace {

Poly from_ints(const Fq& F, const std::vector<std::int64_t>& v) {
  Poly p;
  for (auto x : v) p.c.push_back(F.from_int(x));
  return poly_trim(F, std::move(p));
}

// K = F_3[x]/<(x-1)^6>, lambda = 2, p^k = 3
ChainRing make_k36() {
  Fq F3(3, 1);
  return ChainRing(F3, from_ints(F3, {-1, 1}), 2, 3);
}

}  // namespace

TEST_CASE("pi nilpotency and unit recognition") {
  ChainRing K = make_k36();
  CHECK(K.nil() == 6);
  CHECK(K.is_zero(K.mul(K.pi_pow(5), K.pi_pow(1))));
  CHECK(K.is_zero(K.pi_pow(6)));
  CHECK(!K.is_unit(K.pi_pow(1)));
  CHECK(K.is_unit(K.one()));
  CHECK(K.is_unit(K.add(K.one(), K.pi_pow(1))));
}

TEST_CASE("inverse of 1 + pi by Hensel lifting") {
  ChainRing K = make_k36();
  ChainElem a = K.add(K.one(), K.pi_pow(1));
  ChainElem ai = K.inv(a);
  CHECK(K.eq(K.mul(a, ai), K.one()));
  CHECK_THROWS_AS(K.inv(K.pi_pow(1)), NotAUnit);
}

TEST_CASE("random units invert") {
  ChainRing K = make_k36();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> dist(0, 728);
  int tested = 0;
  while (tested < 100) {
    ChainElem a = K.element_at(dist(rng));
    if (!K.is_unit(a)) continue;
    ++tested;
    CHECK(K.eq(K.mul(a, K.inv(a)), K.one()));
  }
}

TEST_CASE("pi-degree") {
  ChainRing K = make_k36();
  CHECK(K.pi_degree(K.zero()) == 6);  // convention for 0
  CHECK(K.pi_degree(K.one()) == 0);
  ChainElem w = K.add(K.one(), K.pi_pow(1));
  CHECK(K.pi_degree(K.mul(K.pi_pow(2), w)) == 2);
  auto [t, unit] = K.unit_split(K.mul(K.pi_pow(2), w));
  CHECK(t == 2);
  CHECK(K.eq(K.mul_pi_pow(unit, 2), K.mul(K.pi_pow(2), w)));
  CHECK(K.is_unit(unit));
}

TEST_CASE("pi-adic expansion round trip") {
  ChainRing K = make_k36();
  const Fq& F = K.field();
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> dist(0, 2);
  for (int i = 0; i < 1000; ++i) {
    Poly raw;
    for (int j = 0; j < 6; ++j) raw.c.push_back(F.from_int(dist(rng)));
    raw = poly_trim(F, std::move(raw));
    ChainElem e = K.from_poly(raw);
    CHECK(K.to_poly(e) == raw);
    CHECK(K.eq(K.from_poly(K.to_poly(e)), e));
  }
}

TEST_CASE("|K| matches p^(m d lambda p^k) exhaustively") {
  ChainRing K = make_k36();
  CHECK(K.size_logp() == 6);
  std::set<std::vector<coeff_t>> seen;
  for (std::uint64_t i = 0; i < 729; ++i) {
    ChainElem e = K.element_at(i);
    seen.insert(K.serialize(e));
    CHECK(K.eq(K.from_poly(K.to_poly(e)), e));
  }
  CHECK(seen.size() == 729);
}

TEST_CASE("omega for an irreducible x^n - delta0 is alpha^{-1}") {
  // r = 1: cofactor F_1 = 1, so omega = alpha^{-1}; 3^{-1} = 2 in F_5
  Fq F5(5, 1);
  ChainRing K(F5, from_ints(F5, {-2, 1}), 2, 5);
  ChainElem omega = compute_omega(K, F5.from_int(3), poly_one(F5));
  CHECK(K.eq(omega, K.from_tpoly(from_ints(F5, {2}))));
}

TEST_CASE("omega satisfies alpha^{-1}(x^{np^k} - delta) = omega pi^{p^k}") {
  Fq F3(3, 1);
  // p=3, n=2, delta0=1, f = x-1, lambda=2, k=1
  for (std::int64_t alpha_int : {1, 2}) {
    FieldElem alpha = F3.from_int(alpha_int);
    Poly f = from_ints(F3, {-1, 1});
    ChainRing K(F3, f, 2, 3);
    Poly cof = from_ints(F3, {1, 1});  // (x^2-1)/(x-1) = x+1
    ChainElem omega = compute_omega(K, alpha, cof);
    CHECK(K.is_unit(omega));
    Poly lhs = poly_scale(F3, F3.inv(alpha), xn_minus(F3, 6, F3.one()));
    CHECK(K.eq(K.from_poly(lhs), K.mul_pi_pow(omega, 3)));
    CHECK(K.eq(K.mul(omega, K.inv(omega)), K.one()));
  }
}

TEST_CASE("idempotent system for r = 2") {
  Fq F3(3, 1);
  auto factors = factor_xn_minus(F3, F3.one(), 2, 0);
  CrtData crt = compute_idempotents(F3, factors, 2, 3, F3.one(), F3.one());
  REQUIRE(crt.factors.size() == 2);
  const Fq& F = F3;
  Poly sum = poly_add(F, crt.eps[0], crt.eps[1]);
  CHECK(sum == poly_one(F));
  Poly prod = poly_mod(F, poly_mul(F, crt.eps[0], crt.eps[1]), crt.modulus);
  CHECK(poly_is_zero(prod));
  for (int j = 0; j < 2; ++j) {
    Poly sq = poly_mod(F, poly_mul(F, crt.eps[j], crt.eps[j]), crt.modulus);
    CHECK(sq == crt.eps[j]);
    Poly killed = poly_mod(
        F, poly_mul(F, crt.eps[j], crt.factors[j].f_pow(crt.factors[j].nil())),
        crt.modulus);
    CHECK(poly_is_zero(killed));
  }
}

TEST_CASE("idempotent system for r = 1 is trivial") {
  Fq F5(5, 1);
  auto factors = factor_xn_minus(F5, F5.from_int(2), 1, 0);
  CrtData crt = compute_idempotents(F5, factors, 2, 5, F5.from_int(2), F5.from_int(3));
  REQUIRE(crt.eps.size() == 1);
  CHECK(crt.eps[0] == poly_one(F5));
}
