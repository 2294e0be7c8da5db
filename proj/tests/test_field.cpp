#include <doctest.h>

#include <random>

#include "chaincode/field.hpp"

using namespace chaincode;

TEST_CASE("prime field construction") {
  Fq F5(5, 1);
  CHECK(F5.order() == 5);
  CHECK(F5.modulus() == std::vector<coeff_t>{0, 1});  // modulus y
  CHECK_THROWS_AS(Fq(4, 1), NotPrime);
  CHECK_THROWS_AS(Fq(9, 1), NotPrime);
  CHECK_THROWS_AS(Fq(2, 1), EvenPrimeUnsupported);
}

TEST_CASE("default modulus is the lex-smallest monic irreducible") {
  Fq F9(3, 2);
  // y^2 + 1: the first monic quadratic over F_3 without a root
  CHECK(F9.modulus() == std::vector<coeff_t>{1, 0, 1});
  CHECK(F9.order() == 9);

  Fq F25(5, 2);
  // y^2, y^2+1 (root 2), y^2+2 is irreducible: 0,1,4 are squares mod 5
  CHECK(F25.modulus() == std::vector<coeff_t>{2, 0, 1});
}

TEST_CASE("user modulus is verified") {
  CHECK_NOTHROW(Fq(3, 2, {1, 0, 1}));
  CHECK_THROWS_AS(Fq(3, 2, {2, 0, 1}), NotIrreducible);  // y^2+2 = (y+1)(y+2)
  CHECK_THROWS_AS(Fq(3, 2, {1, 0, 2}), InvalidParams);   // not monic
}

TEST_CASE("basic arithmetic examples") {
  Fq F5(5, 1);
  CHECK(F5.inv(F5.from_int(4)) == F5.from_int(4));  // 4*4 = 16 = 1
  CHECK(F5.pow(F5.from_int(2), 5) == F5.from_int(2));
  Fq F3(3, 1);
  CHECK_THROWS_AS(F3.inv(F3.zero()), DivisionByZero);
}

TEST_CASE("pk_root examples") {
  Fq F5(5, 1);
  CHECK(F5.pk_root(F5.from_int(2), 1) == F5.from_int(2));  // 2^5 = 32 = 2
  CHECK(F5.pk_root(F5.one(), 3) == F5.one());
  Fq F3(3, 1);
  CHECK(F3.pk_root(F3.from_int(2), 1) == F3.from_int(2));  // 2^3 = 8 = 2
  CHECK_THROWS_AS(F3.pk_root(F3.zero(), 1), ZeroInput);
}

TEST_CASE("field axioms on seeded random triples") {
  for (auto [p, m] : {std::pair<std::int64_t, int>{3, 2},
                      std::pair<std::int64_t, int>{5, 1},
                      std::pair<std::int64_t, int>{7, 2}}) {
    Fq F(p, m);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> dist(0, F.order() - 1);
    for (int i = 0; i < 1000; ++i) {
      FieldElem a = F.element_at(dist(rng));
      FieldElem b = F.element_at(dist(rng));
      FieldElem c = F.element_at(dist(rng));
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, b) == F.mul(b, a));
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    }
  }
}

TEST_CASE("inverses: exhaustive for p^m <= 81") {
  for (auto [p, m] : {std::pair<std::int64_t, int>{3, 4},
                      std::pair<std::int64_t, int>{5, 2},
                      std::pair<std::int64_t, int>{79, 1}}) {
    Fq F(p, m);
    for (std::int64_t i = 1; i < F.order(); ++i) {
      FieldElem a = F.element_at(i);
      CHECK(F.is_one(F.mul(a, F.inv(a))));
    }
  }
}

TEST_CASE("pk_root exhaustive for p^m <= 125") {
  for (auto [p, m] : {std::pair<std::int64_t, int>{5, 3},
                      std::pair<std::int64_t, int>{3, 3},
                      std::pair<std::int64_t, int>{11, 1}}) {
    Fq F(p, m);
    for (int k = 1; k <= 2; ++k) {
      // p^k mod group order, for the exact verification power
      std::int64_t r = 1;
      for (int i = 0; i < k; ++i) r = (r * (p % (F.order() - 1))) % (F.order() - 1);
      for (std::int64_t i = 1; i < F.order(); ++i) {
        FieldElem d = F.element_at(i);
        FieldElem root = F.pk_root(d, k);
        CHECK(F.pow(root, r) == d);
      }
    }
  }
}

TEST_CASE("element serialization order") {
  Fq F9(3, 2);
  // a + b y <-> [a, b]
  FieldElem e = F9.from_coeffs({2, 1});
  CHECK(e.c == std::vector<coeff_t>{2, 1});
  CHECK(F9.index_of(e) == 2 + 1 * 3);
  CHECK(F9.element_at(5) == e);
}
