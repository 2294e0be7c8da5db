#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <unordered_set>

#include "chaincode/quad.hpp"

using namespace chaincode;

namespace {

Poly from_ints(const Fq& F, const std::vector<std::int64_t>& v) {
  Poly p;
  for (auto x : v) p.c.push_back(F.from_int(x));
  return poly_trim(F, std::move(p));
}

// K + uK over F_3[x]/<(x-1)^6>, omega = 1 (valid: any unit works for the
// ring-level tests; code-level omegas come from compute_omega)
QuadRing make_q36() {
  Fq F3(3, 1);
  ChainRing K(F3, from_ints(F3, {-1, 1}), 2, 3);
  return QuadRing(K, K.one());
}

QuadRing make_q(std::int64_t p, int m, int k, int lambda, int d) {
  Fq F(p, m);
  Poly f;
  if (d == 1) {
    f = from_ints(F, {-1, 1});
  } else {
    // a monic irreducible of degree d: search
    for (std::int64_t idx = 0;; ++idx) {
      Poly cand;
      std::int64_t v = idx;
      for (int i = 0; i < d; ++i) {
        cand.c.push_back(F.element_at(v % F.order()));
        v /= F.order();
      }
      cand.c.push_back(F.one());
      if (poly_is_irreducible(F, cand)) {
        f = cand;
        break;
      }
    }
  }
  std::int64_t ppk = 1;
  for (int i = 0; i < k; ++i) ppk *= p;
  ChainRing K(F, f, lambda, ppk);
  return QuadRing(K, K.one());
}

std::uint64_t pack(const QuadRing& R, const QuadElem& q) {
  std::uint64_t key = 0;
  for (coeff_t c : R.serialize(q)) key = key * R.base().field().p() + c;
  return key;
}

// explicit element set of the ideal: additive closure of the K-multiples of
// the generators and their u-images
std::size_t ideal_element_count(const QuadRing& R, const IdealDesc& d) {
  const ChainRing& K = R.base();
  GenPair g = ideal_generators(R, d);
  std::vector<QuadElem> seeds{g.g1, R.mul_u(g.g1)};
  if (g.has_g2) {
    seeds.push_back(g.g2);
    seeds.push_back(R.mul_u(g.g2));
  }
  // K-multiples are spanned by x^e * seed over F_p (m = 1 in these tests)
  std::vector<QuadElem> orbit;
  ChainElem x = K.from_poly(poly_monomial(K.field(), K.field().one(), 1));
  for (const auto& s : seeds) {
    QuadElem v = s;
    for (int e = 0; e < K.d() * K.nil(); ++e) {
      if (!R.is_zero(v)) orbit.push_back(v);
      v = R.scalar(x, v);
    }
  }
  std::unordered_set<std::uint64_t> set;
  std::vector<QuadElem> work;
  set.insert(pack(R, R.zero()));
  work.push_back(R.zero());
  while (!work.empty()) {
    QuadElem v = work.back();
    work.pop_back();
    for (const auto& w : orbit) {
      QuadElem s = R.add(v, w);
      if (set.insert(pack(R, s)).second) work.push_back(s);
    }
  }
  return set.size();
}

}  // namespace

TEST_CASE("u squared is omega pi^{p^k}") {
  QuadRing R = make_q36();
  QuadElem uu = R.mul(R.u(), R.u());
  CHECK(R.eq(uu, R.make(R.u_sq(), R.base().zero())));
  CHECK(R.base().eq(R.u_sq(), R.base().pi_pow(3)));  // omega = 1 here
}

TEST_CASE("difference of squares with u") {
  QuadRing R = make_q36();
  const ChainRing& K = R.base();
  QuadElem a = R.add(R.one(), R.u());
  QuadElem b = R.sub(R.one(), R.u());
  CHECK(R.eq(R.mul(a, b), R.make(K.sub(K.one(), R.u_sq()), K.zero())));
}

TEST_CASE("u^{2 lambda} = 0") {
  QuadRing R = make_q36();
  QuadElem v = R.one();
  for (int i = 0; i < 2 * R.base().lambda(); ++i) v = R.mul_u(v);
  CHECK(R.is_zero(v));
}

TEST_CASE("generator examples") {
  QuadRing R = make_q36();
  const ChainRing& K = R.base();

  IdealDesc unit{IdealCase::II, 0, 0, {}, {}};
  GenPair g = ideal_generators(R, unit);
  CHECK(R.eq(g.g1, R.one()));
  CHECK(!g.has_g2);

  IdealDesc i1{IdealCase::I1, 0, 0, {}, {}};
  g = ideal_generators(R, i1);
  CHECK(R.eq(g.g1, R.make(K.zero(), K.pi_pow(5))));

  IdealDesc iv1{IdealCase::IV1, 1, 0, {}, {}};
  g = ideal_generators(R, iv1);
  CHECK(R.eq(g.g1, R.make(K.pi_pow(2), K.zero())));
  REQUIRE(g.has_g2);
  CHECK(R.eq(g.g2, R.make(K.zero(), K.pi_pow(1))));
}

TEST_CASE("size exponents") {
  QuadRing R = make_q36();
  CHECK(ideal_size_logp(R, {IdealCase::I1, 0, 0, {}, {}}) == 1);
  CHECK(ideal_size_logp(R, {IdealCase::II, 6, 0, {}, {}}) == 0);   // zero ideal
  CHECK(ideal_size_logp(R, {IdealCase::II, 0, 0, {}, {}}) == 12);  // unit ideal
  CHECK(ideal_size_logp(R, {IdealCase::II, 2, 0, {}, {}}) == 8);
  CHECK(ideal_size_logp(R, {IdealCase::III1, 0, 0, {}, {}}) == 11);
}

TEST_CASE("annihilator examples") {
  QuadRing R = make_q36();
  const Fq& F = R.base().field();

  IdealDesc ii{IdealCase::II, 2, 0, {}, {}};
  IdealDesc a = annihilator(R, ii);
  CHECK(a.kase == IdealCase::II);
  CHECK(a.s == 4);

  IdealDesc i1{IdealCase::I1, 0, 0, {}, {}};
  CHECK(annihilator(R, i1).kase == IdealCase::III1);

  IdealDesc i2{IdealCase::I2, 0, 0, from_ints(F, {2}), {}};
  IdealDesc a2 = annihilator(R, i2);
  CHECK(a2.kase == IdealCase::III2);
  CHECK(a2.b == from_ints(F, {1}));  // -2 = 1 mod 3
}

TEST_CASE("descriptor validation rejects out-of-range parameters") {
  QuadRing R = make_q36();
  CHECK_THROWS_AS(validate_ideal(R, {IdealCase::II, 7, 0, {}, {}}), InvalidDescriptor);
  CHECK_THROWS_AS(validate_ideal(R, {IdealCase::I3, 2, 4, {}, {}}), InvalidDescriptor);
  CHECK_THROWS_AS(validate_ideal(R, {IdealCase::IV3, 3, 3, {}, {}}), InvalidDescriptor);
  // IV3 s=2,t=3 needs floor(3/2) = 1 digit
  CHECK_THROWS_AS(validate_ideal(R, {IdealCase::IV3, 2, 3, {}, {}}), InvalidDescriptor);
  CHECK_NOTHROW(validate_ideal(R, {IdealCase::IV3, 2, 3, {}, {poly_zero()}}));
}

TEST_CASE("enumeration counts match the closed form") {
  CHECK(count_ideals(5, 1, 1, 2, 1) == 431);
  CHECK(count_ideals(3, 1, 1, 2, 1) == 40);
  CHECK(count_ideals(3, 1, 1, 3, 1) == 64);

  struct P {
    std::int64_t p;
    int m, k, lambda, d;
  };
  for (const P& c : {P{3, 1, 1, 2, 1}, P{3, 1, 1, 3, 1}, P{5, 1, 1, 2, 1},
                     P{3, 2, 1, 2, 1}, P{3, 1, 1, 2, 2}, P{3, 1, 2, 2, 1},
                     P{7, 1, 1, 2, 1}}) {
    QuadRing R = make_q(c.p, c.m, c.k, c.lambda, c.d);
    cpp_int expect = count_ideals(c.p, c.m, c.k, c.lambda, c.d);
    cpp_int seen = 0;
    int zero_seen = 0, unit_seen = 0;
    for_each_ideal(R, [&](const IdealDesc& d) {
      ++seen;
      validate_ideal(R, d);
      if (d.kase == IdealCase::II && d.s == R.base().nil()) ++zero_seen;
      if (d.kase == IdealCase::II && d.s == 0) ++unit_seen;
    });
    CHECK(seen == expect);
    CHECK(zero_seen == 1);
    CHECK(unit_seen == 1);
  }
}

TEST_CASE("nth_ideal reproduces the stream") {
  QuadRing R = make_q36();
  cpp_int i = 0;
  for_each_ideal(R, [&](const IdealDesc& d) {
    CHECK(nth_ideal(R, i) == d);
    ++i;
  });
  CHECK(i == 40);
  CHECK_THROWS_AS(nth_ideal(R, 40), InvalidInput);
}

TEST_CASE("membership examples") {
  QuadRing R = make_q36();
  const ChainRing& K = R.base();
  IdealDesc unit{IdealCase::II, 0, 0, {}, {}};
  IdealDesc i1{IdealCase::I1, 0, 0, {}, {}};
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> dist(0, 728);
  for (int i = 0; i < 20; ++i) {
    QuadElem x = R.make(K.element_at(dist(rng)), K.element_at(dist(rng)));
    CHECK(membership(R, unit, x));
  }
  CHECK(membership(R, i1, R.make(K.zero(), K.pi_pow(5))));
  CHECK(!membership(R, i1, R.one()));
}

TEST_CASE("pairwise distinctness of all 40 ideals under the slow path") {
  QuadRing R = make_q36();
  std::vector<IdealDesc> all;
  for_each_ideal(R, [&](const IdealDesc& d) { all.push_back(d); });
  REQUIRE(all.size() == 40);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      CHECK(!ideal_equal(all[i], all[j]));
      CHECK(!ideal_equal_slow(R, all[i], all[j]));
    }
  for (const auto& d : all) CHECK(ideal_equal_slow(R, d, d));
}

TEST_CASE("cardinality identity, involution, condition (4), annihilation") {
  for (auto [p, lambda] : {std::pair<std::int64_t, int>{3, 2},
                           std::pair<std::int64_t, int>{3, 3}}) {
    QuadRing R = make_q(p, 1, 1, lambda, 1);
    const long long full = 2 * R.base().size_logp();
    for_each_ideal(R, [&](const IdealDesc& d) {
      IdealDesc ann = annihilator(R, d);
      validate_ideal(R, ann);
      CHECK(ideal_size_logp(R, d) + ideal_size_logp(R, ann) == full);
      CHECK(annihilator(R, ann) == d);
      GenPair g = ideal_generators(R, d);
      GenPair ag = ideal_generators(R, ann);
      // condition (4): u-closure of the module
      CHECK(membership(R, d, R.mul_u(g.g1)));
      if (g.has_g2) CHECK(membership(R, d, R.mul_u(g.g2)));
      // annihilation is real, not just formal
      for (const QuadElem& x : {g.g1, g.g2})
        for (const QuadElem& y : {ag.g1, ag.g2})
          CHECK(R.is_zero(R.mul(x, y)));
      // canonical module agrees with the case table on size
      CHECK(module_size_logp(R.base(), ideal_module(R, d)) ==
            ideal_size_logp(R, d));
    });
  }
}

TEST_CASE("explicit element sets match the size exponents at (3,1,1,2,1)") {
  QuadRing R = make_q36();
  for_each_ideal(R, [&](const IdealDesc& d) {
    std::size_t count = ideal_element_count(R, d);
    std::size_t want = 1;
    for (long long i = 0; i < ideal_size_logp(R, d); ++i) want *= 3;
    CHECK(count == want);
  });
}

TEST_CASE("count splits into principal and non-principal") {
  QuadRing R = make_q(5, 1, 1, 2, 1);
  CHECK(count_principal_ideals(R) == 72);
  cpp_int principal = 0;
  for_each_ideal(R, [&](const IdealDesc& d) {
    if (ideal_is_principal(d)) ++principal;
  });
  CHECK(principal == 72);
}
