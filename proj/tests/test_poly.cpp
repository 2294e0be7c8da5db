#include <doctest.h>

#include <random>

#include "chaincode/poly.hpp"

using namespace chaincode;

namespace {

Poly from_ints(const Fq& F, const std::vector<std::int64_t>& v) {
  Poly p;
  for (auto x : v) p.c.push_back(F.from_int(x));
  return poly_trim(F, std::move(p));
}

Poly random_poly(const Fq& F, int deg_bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, F.order() - 1);
  Poly p;
  for (int i = 0; i < deg_bound; ++i) p.c.push_back(F.element_at(dist(rng)));
  return poly_trim(F, std::move(p));
}

}  // namespace

TEST_CASE("degree convention") {
  Fq F3(3, 1);
  CHECK(poly_deg(poly_zero()) == -1);  // stands in for deg(0) = -infinity
  CHECK(poly_deg(poly_one(F3)) == 0);
  CHECK(poly_deg(from_ints(F3, {0, 0, 1})) == 2);
  CHECK(poly_is_zero(from_ints(F3, {0, 0, 0})));
}

TEST_CASE("divmod examples") {
  Fq F3(3, 1);
  Poly x3 = from_ints(F3, {0, 0, 0, 1});
  Poly x = from_ints(F3, {0, 1});
  auto [q, r] = poly_divmod(F3, x3, x);
  CHECK(q == from_ints(F3, {0, 0, 1}));
  CHECK(poly_is_zero(r));
  CHECK_THROWS_AS(poly_divmod(F3, x3, poly_zero()), DivisionByZero);
}

TEST_CASE("gcd of f and 0 is monic f") {
  Fq F5(5, 1);
  Poly f = from_ints(F5, {2, 4});  // 2 + 4x
  Poly g = poly_gcd(F5, f, poly_zero());
  CHECK(g == from_ints(F5, {3, 1}));  // scaled monic: (2+4x)/4 = 3+x
}

TEST_CASE("xgcd of x-1 and x+1 over F_3") {
  Fq F3(3, 1);
  Poly a = from_ints(F3, {-1, 1});
  Poly b = from_ints(F3, {1, 1});
  PolyXgcd x = poly_xgcd(F3, a, b);
  CHECK(x.g == poly_one(F3));
  // the Bezout identity holds after the monic rescaling
  Poly lhs = poly_add(F3, poly_mul(F3, x.s, a), poly_mul(F3, x.t, b));
  CHECK(lhs == poly_one(F3));
}

TEST_CASE("divmod and xgcd identities on random inputs") {
  Fq F9(3, 2);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Poly a = random_poly(F9, 8, rng);
    Poly b = random_poly(F9, 5, rng);
    if (poly_is_zero(b)) continue;
    auto [q, r] = poly_divmod(F9, a, b);
    CHECK(poly_add(F9, poly_mul(F9, q, b), r) == a);
    CHECK(poly_deg(r) < poly_deg(b));
    PolyXgcd x = poly_xgcd(F9, a, b);
    Poly lhs = poly_add(F9, poly_mul(F9, x.s, a), poly_mul(F9, x.t, b));
    CHECK(lhs == x.g);
    if (!poly_is_zero(x.g)) CHECK(F9.is_one(x.g.c.back()));
  }
}

TEST_CASE("irreducibility checks") {
  Fq F3(3, 1);
  CHECK(poly_is_irreducible(F3, from_ints(F3, {1, 0, 1})));   // x^2+1
  CHECK(!poly_is_irreducible(F3, from_ints(F3, {2, 0, 1})));  // x^2+2
  CHECK(poly_is_irreducible(F3, from_ints(F3, {1, 2, 0, 1})));  // no root
  // degree 4 via Rabin: x^4 + x + 2 over F_3
  CHECK(poly_is_irreducible(F3, from_ints(F3, {2, 1, 0, 0, 1})));
  CHECK(!poly_is_irreducible(F3, from_ints(F3, {1, 0, 0, 0, 1})));  // (x^2+x+2)(x^2+2x+2)
}

TEST_CASE("factor x - delta0 for n = 1") {
  Fq F5(5, 1);
  auto fs = factor_xn_minus(F5, F5.from_int(2), 1, 0);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0] == from_ints(F5, {3, 1}));  // x - 2 = x + 3
}

TEST_CASE("factor x^2 - 1 over F_3") {
  Fq F3(3, 1);
  auto fs = factor_xn_minus(F3, F3.one(), 2, 0);
  REQUIRE(fs.size() == 2);
  // canonical order: coefficient tuples from the constant term up
  CHECK(fs[0] == from_ints(F3, {1, 1}));  // x + 1 = x - 2
  CHECK(fs[1] == from_ints(F3, {2, 1}));  // x + 2 = x - 1
}

TEST_CASE("factor requires gcd(n, p) = 1") {
  Fq F5(5, 1);
  CHECK_THROWS_AS(factor_xn_minus(F5, F5.one(), 5, 0), NotCoprimeToP);
  CHECK_THROWS_AS(factor_xn_minus(F5, F5.zero(), 2, 0), ZeroInput);
}

TEST_CASE("factorization invariants over several parameter sets") {
  struct Case {
    std::int64_t p;
    int m, n;
    std::int64_t delta0_index;
  };
  for (const Case& c : {Case{3, 1, 8, 2}, Case{5, 1, 4, 3}, Case{3, 2, 4, 5},
                        Case{7, 1, 6, 2}, Case{5, 1, 12, 2}}) {
    Fq F(c.p, c.m);
    FieldElem d0 = F.element_at(c.delta0_index);
    auto fs = factor_xn_minus(F, d0, c.n, 0);
    auto fs2 = factor_xn_minus(F, d0, c.n, 12345);
    CHECK(fs == fs2);  // content and order independent of the seed
    Poly prod = poly_one(F);
    for (const auto& f : fs) {
      CHECK(F.is_one(f.c.back()));
      CHECK(poly_is_irreducible(F, f));
      prod = poly_mul(F, prod, f);
    }
    CHECK(prod == xn_minus(F, c.n, d0));
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j)
        CHECK(poly_gcd(F, fs[i], fs[j]) == poly_one(F));
    // sorted canonically
    for (std::size_t i = 0; i + 1 < fs.size(); ++i)
      CHECK(poly_canonical_less(F, fs[i], fs[i + 1]));
  }
}
