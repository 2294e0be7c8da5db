#include <doctest.h>

#include <map>
#include <random>

#include "chaincode/code.hpp"
#include "chaincode/table5.hpp"

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

TEST_CASE("system constants at the p = 5 parameters") {
  CodeSystem S = make_system(5, 1, 1, 1, 2, {2}, {3}, 0);
  const Fq& F = S.P.F;
  CHECK(S.P.delta0 == F.from_int(2));
  // (2+3u^2)^{-1} = 3+3u^2
  RElem expect = S.R.add(S.R.from_field(F.from_int(3)),
                         S.R.monomial(F.from_int(3), 2));
  CHECK(S.gamma_inv == expect);
  // omega = alpha^{-1} = 2 for the single factor
  CHECK(S.locals[0].base().eq(S.crt.omegas[0],
                              S.locals[0].base().from_tpoly(from_ints(F, {2}))));
  // theta = 3 and -theta^{-1} = 3
  RElem theta = theta_unit(S);
  CHECK(theta == S.R.from_field(F.from_int(3)));
  CHECK(S.R.neg(S.R.inv(theta)) == S.R.from_field(F.from_int(3)));
}

TEST_CASE("R ring inverses and u-truncation") {
  CodeSystem S = make_system(5, 1, 1, 1, 2, {2}, {3}, 0);
  CHECK(S.R.is_zero(S.R.sub(S.R.mul(S.gamma, S.gamma_inv), S.R.one())));
  CHECK_THROWS_AS(S.R.inv(S.R.monomial(S.P.F.one(), 1)), NotAUnit);
}

TEST_CASE("theta matches the alternating series for lambda = 2 and 3") {
  for (int lambda : {2, 3}) {
    CodeSystem S = make_system(5, 1, 1, 1, lambda, {2}, {3}, 0);
    const Fq& F = S.P.F;
    // theta = -delta^{-2} alpha + sum_{j>=2} (-1)^j delta^{-(j+1)} alpha^j u^{2j-2}
    RElem want = S.R.zero();
    FieldElem dinv = F.inv(S.P.delta);
    for (int j = 1; j <= lambda - 1; ++j) {
      FieldElem c = F.mul(F.pow(dinv, j + 1), F.pow(S.P.alpha, j));
      if (j % 2 == 1) c = F.neg(c);
      want = S.R.add(want, S.R.monomial(c, 2 * j - 2));
    }
    CHECK(theta_unit(S) == want);
  }
}

TEST_CASE("psi fixes low powers of x and sends the ideal generator to u^2") {
  for (auto params : {std::tuple<std::int64_t, int, int>{3, 1, 1},
                      std::tuple<std::int64_t, int, int>{3, 2, 1},
                      std::tuple<std::int64_t, int, int>{5, 1, 1}}) {
    auto [p, n, k] = params;
    CodeSystem S = make_system(p, 1, n, k, 2, {1}, {1}, 0);
    const Fq& F = S.P.F;
    for (int i = 0; i < S.P.N; ++i)
      CHECK(psi_forward(S, poly_monomial(F, F.one(), i), poly_zero()) ==
            S.primal.x_pow(i));
    Poly usq_pre = poly_scale(F, F.inv(S.P.alpha), xn_minus(F, S.P.N, S.P.delta));
    CHECK(psi_forward(S, usq_pre, poly_zero()) == S.primal.u_pow(2));
    CHECK(psi_forward(S, poly_zero(), poly_one(F)) == S.primal.u_pow(1));
    CHECK(psi_forward(S, poly_monomial(F, F.one(), S.P.N), poly_zero()) ==
          S.primal.from_scalar(S.gamma));  // Psi(x^N) = delta + alpha u^2
  }
}

TEST_CASE("psi is a ring isomorphism on random pairs") {
  struct P {
    std::int64_t p;
    int n;
    std::vector<std::int64_t> delta, alpha;
  };
  for (const P& c : {P{3, 1, {2}, {1}}, P{3, 2, {1}, {1}}, P{5, 1, {2}, {3}}}) {
    CodeSystem S = make_system(c.p, 1, c.n, 1, 2, c.delta, c.alpha, 0);
    const Fq& F = S.P.F;
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
      std::pair<Poly, Poly> x{random_poly(F, S.P.lambda * S.P.N, rng),
                              random_poly(F, S.P.lambda * S.P.N, rng)};
      std::pair<Poly, Poly> y{random_poly(F, S.P.lambda * S.P.N, rng),
                              random_poly(F, S.P.lambda * S.P.N, rng)};
      AmbientElem px = psi_forward(S, x.first, x.second);
      AmbientElem py = psi_forward(S, y.first, y.second);
      auto sum = aua_add(S, x, y);
      auto prod = aua_mul(S, x, y);
      CHECK(psi_forward(S, sum.first, sum.second) == S.primal.add(px, py));
      CHECK(psi_forward(S, prod.first, prod.second) == S.primal.mul(px, py));
      auto back = psi_inverse(S, px);
      CHECK(back.first == x.first);
      CHECK(back.second == x.second);
    }
  }
}

TEST_CASE("psi round trip is exhaustive at (3,1,1,2,n=1)") {
  CodeSystem S = make_system(3, 1, 1, 1, 2, {1}, {1}, 0);
  const Fq& F = S.P.F;
  // all 3^6 * 3^6 pairs of components of degree < lambda N = 6
  for (std::uint64_t a = 0; a < 729; ++a) {
    Poly xi0;
    std::uint64_t v = a;
    for (int i = 0; i < 6; ++i) {
      xi0.c.push_back(F.from_int(static_cast<std::int64_t>(v % 3)));
      v /= 3;
    }
    xi0 = poly_trim(F, std::move(xi0));
    for (std::uint64_t b = 0; b < 729; ++b) {
      Poly xi1;
      std::uint64_t w = b;
      for (int i = 0; i < 6; ++i) {
        xi1.c.push_back(F.from_int(static_cast<std::int64_t>(w % 3)));
        w /= 3;
      }
      xi1 = poly_trim(F, std::move(xi1));
      auto back = psi_inverse(S, psi_forward(S, xi0, xi1));
      REQUIRE(back.first == xi0);
      REQUIRE(back.second == xi1);
    }
  }
}

TEST_CASE("psi rejects overflowing degrees") {
  CodeSystem S = make_system(3, 1, 1, 1, 2, {1}, {1}, 0);
  const Fq& F = S.P.F;
  CHECK_THROWS_AS(psi_forward(S, poly_monomial(F, F.one(), 6), poly_zero()),
                  DegreeOverflow);
}

TEST_CASE("ambient multiplication and the gamma reduction") {
  CodeSystem S = make_system(5, 1, 1, 1, 2, {2}, {3}, 0);
  AmbientElem x = S.primal.x_pow(1);
  AmbientElem xN1 = S.primal.x_pow(S.P.N - 1);
  CHECK(S.primal.mul(xN1, x) == S.primal.from_scalar(S.gamma));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(0, 4);
  AmbientElem a = S.primal.zero();
  for (auto& r : a.c)
    for (auto& f : r.d) f = S.P.F.element_at(dist(rng));
  CHECK(S.primal.mul(a, S.primal.one()) == a);
  // u^{2 lambda - 1} * u = 0
  CHECK(S.primal.is_zero(
      S.primal.mul(S.primal.u_pow(2 * S.P.lambda - 1), S.primal.u_pow(1))));
}

TEST_CASE("ambient ring tags cannot be mixed") {
  CodeSystem S = make_system(5, 1, 1, 1, 2, {2}, {3}, 0);
  CHECK_THROWS_AS(S.primal.add(S.primal.one(), S.dual.one()), InvalidInput);
}

TEST_CASE("tau is a ring isomorphism onto the dual ambient") {
  CodeSystem S = make_system(5, 1, 1, 1, 2, {2}, {3}, 0);
  CHECK(tau_map(S, S.primal.one()) == S.dual.one());
  AmbientElem tx = tau_map(S, S.primal.x_pow(1));
  // tau(x) = (delta + alpha u^2) x^{N-1}
  CHECK(tx == S.dual.scale(S.gamma, S.dual.x_pow(S.P.N - 1)));
  // tau is multiplicative, so tau(x) tau(x^{N-1}) = tau(x^N) = tau(gamma) = gamma,
  // while the dual ring's own x^N reduces to gamma^{-1}
  AmbientElem t2 = tau_map(S, S.primal.x_pow(S.P.N - 1));
  CHECK(S.dual.mul(tx, t2) == S.dual.from_scalar(S.gamma));
  CHECK(S.dual.mul(S.dual.x_pow(S.P.N - 1), S.dual.x_pow(1)) ==
        S.dual.from_scalar(S.gamma_inv));
  // round trip and homomorphism on random elements
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> dist(0, 4);
  for (int i = 0; i < 50; ++i) {
    AmbientElem a = S.primal.zero(), b = S.primal.zero();
    for (auto& r : a.c)
      for (auto& f : r.d) f = S.P.F.element_at(dist(rng));
    for (auto& r : b.c)
      for (auto& f : r.d) f = S.P.F.element_at(dist(rng));
    CHECK(tau_inv(S, tau_map(S, a)) == a);
    CHECK(tau_map(S, S.primal.mul(a, b)) == S.dual.mul(tau_map(S, a), tau_map(S, b)));
    CHECK(tau_map(S, S.primal.add(a, b)) == S.dual.add(tau_map(S, a), tau_map(S, b)));
  }
}

TEST_CASE("build_code examples") {
  CodeSystem S = make_system(5, 1, 1, 1, 2, {2}, {3}, 0);
  const Fq& F = S.P.F;

  CodeDesc unit{{IdealDesc{IdealCase::II, 0, 0, {}, {}}}};
  auto gens = build_code(S, unit);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0] == S.primal.one());

  // local I1 at n=1: theta_1 = alpha^{lambda-1} (x-delta0)^{p^k-1} u^{2 lambda-1}
  CodeDesc i1{{IdealDesc{IdealCase::I1, 0, 0, {}, {}}}};
  gens = build_code(S, i1);
  REQUIRE(gens.size() == 1);
  Poly pi4 = poly_pow(F, xn_minus(F, 1, S.P.delta0), 4);
  AmbientElem want = S.primal.from_poly_at_udigit(
      poly_scale(F, F.pow(S.P.alpha, S.P.lambda - 1), pi4), 2 * S.P.lambda - 1);
  CHECK(gens[0] == want);

  CodeDesc zero{{IdealDesc{IdealCase::II, 10, 0, {}, {}}}};
  gens = build_code(S, zero);
  REQUIRE(gens.size() == 1);
  CHECK(S.primal.is_zero(gens[0]));
  // dual of the zero code is the unit code
  auto dual_gens = dual_code_gens(S, zero);
  REQUIRE(dual_gens.size() == 1);
  CHECK(dual_gens[0] == S.dual.one());
}

TEST_CASE("idempotent images behave like idempotents, r = 2") {
  CodeSystem S = make_system(3, 1, 2, 1, 2, {1}, {1}, 0);
  REQUIRE(S.r() == 2);
  CHECK(S.primal.add(S.e[0], S.e[1]) == S.primal.one());
  CHECK(S.primal.mul(S.e[0], S.e[1]) == S.primal.zero());
  for (int j = 0; j < 2; ++j)
    CHECK(S.primal.mul(S.e[j], S.e[j]) == S.e[j]);
  CHECK(S.dual.add(S.e_dual[0], S.e_dual[1]) == S.dual.one());
  CHECK(S.dual.mul(S.e_dual[0], S.e_dual[1]) == S.dual.zero());
}

TEST_CASE("code counting") {
  CodeSystem S5 = make_system(5, 1, 1, 1, 2, {2}, {3}, 0);
  CHECK(count_codes(S5) == 431);
  CHECK(count_codes_1gen(S5) == 72);
  CHECK(count_codes(S5) - count_codes_1gen(S5) == 359);

  CodeSystem S32 = make_system(3, 1, 2, 1, 2, {1}, {1}, 0);
  CHECK(count_codes(S32) == 1600);
  CHECK(count_codes_1gen(S32) == 196);

  // tally the principal codes across the whole p = 5 enumeration
  cpp_int principal = 0, total = 0;
  for_each_code(S5, [&](const CodeDesc& d) {
    ++total;
    if (code_is_principal(S5, d)) ++principal;
  });
  CHECK(total == 431);
  CHECK(principal == 72);
}

TEST_CASE("size, duality and orthogonality across all 40 codes at (3,1,1,2)") {
  CodeSystem S = make_system(3, 1, 1, 1, 2, {1}, {1}, 0);
  const long long full = 12;  // N * 2 m lambda = 3 * 4
  cpp_int count = 0;
  for_each_code(S, [&](const CodeDesc& d) {
    ++count;
    auto gens = build_code(S, d);
    auto dgens = dual_code_gens(S, d);
    CHECK(span_rank_logp(S, gens) == code_size_logp(S, d));
    CHECK(span_rank_logp(S, dgens) == code_size_logp(S, dual_desc(S, d)));
    CHECK(code_size_logp(S, d) + code_size_logp(S, dual_desc(S, d)) == full);
    CHECK(orthogonal_generators(S, gens, dgens));
    // constacyclic closure: x * g stays in the code
    AmbientElem x = S.primal.x_pow(1);
    for (const auto& g : gens) CHECK(global_member(S, d, S.primal.mul(g, x)));
    for (const auto& g : gens) CHECK(global_member(S, d, g));
    for (const auto& h : dgens) CHECK(dual_member(S, d, h));
  });
  CHECK(count == 40);
}

TEST_CASE("sampled codes at r = 2 parameters") {
  CodeSystem S = make_system(3, 1, 2, 1, 2, {1}, {1}, 0);
  const long long full = 24;  // N * 2 m lambda = 6 * 4
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 20; ++i) {
    cpp_int idx = rng() % 1600;
    CodeDesc d = nth_code(S, idx);
    auto gens = build_code(S, d);
    auto dgens = dual_code_gens(S, d);
    CHECK(span_rank_logp(S, gens) == code_size_logp(S, d));
    CHECK(code_size_logp(S, d) + code_size_logp(S, dual_desc(S, d)) == full);
    CHECK(orthogonal_generators(S, gens, dgens));
    AmbientElem x = S.primal.x_pow(1);
    for (const auto& g : gens) CHECK(global_member(S, d, S.primal.mul(g, x)));
  }
}

TEST_CASE("specialize_n1 demands an irreducible x^n - delta0") {
  CodeSystem S = make_system(3, 1, 2, 1, 2, {1}, {1}, 0);
  CHECK_THROWS_AS(specialize_n1(S, [](const SpecialEntry&) {}), NotIrreducible);
}

TEST_CASE("specialize_n1 emits 431 validated entries at the p = 5 parameters") {
  CodeSystem S = make_system(5, 1, 1, 1, 2, {2}, {3}, 0);
  int count = 0;
  std::map<std::string, int> by_label;
  specialize_n1(S, [&](const SpecialEntry& e) {
    ++count;
    by_label[e.label] += 1;
  });
  CHECK(count == 431);
  CHECK(by_label["i-1"] == 1);
  CHECK(by_label["i-2"] == 5);
  CHECK(by_label["i-3"] == 55);
  CHECK(by_label["ii"] == 11);
  CHECK(by_label["iii-1"] == 1);
  CHECK(by_label["iii-2"] == 5);
  CHECK(by_label["iii-3-1"] == 25);
  CHECK(by_label["iii-3-2"] == 30);
  CHECK(by_label["iv-1"] == 8);
  CHECK(by_label["iv-2"] == 35);
  CHECK(by_label["iv-3-1"] == 75);
  CHECK(by_label["iv-3-2"] == 25);
  CHECK(by_label["iv-3-3"] == 40);
  CHECK(by_label["iv-3-4"] == 55);
  CHECK(by_label["iv-3-5"] == 60);
}

TEST_CASE("specialize_n1 works at a larger irreducible block, n = 2 over F_3") {
  // x^2 - 2 is irreducible over F_3 (2 is not a square); delta = 2^3 = 2
  CodeSystem S = make_system(3, 1, 2, 1, 2, {2}, {1}, 0);
  REQUIRE(S.r() == 1);
  REQUIRE(S.locals[0].base().d() == 2);
  int count = 0;
  specialize_n1(S, [&](const SpecialEntry& e) {
    ++count;
    CHECK(orthogonal_generators(S, e.gens, e.dual_gens));
  });
  CHECK(cpp_int(count) == count_ideals(S.locals[0]));
}

TEST_CASE("table5 grouping matches the published counts") {
  std::vector<Table5Row> rows = table5_rows(0);
  REQUIRE(rows.size() == 431);
  for (int g = 0; g < 24; ++g) {
    int count = 0;
    for (const auto& r : rows)
      if (r.group == g) ++count;
    CHECK(count == kTable5GroupSizes[static_cast<std::size_t>(g)]);
  }
  for (const auto& r : rows) CHECK(r.verified);
  // the non-obvious spot rows
  CHECK(rows[0].gens == "<3*pi^4*u^3>");
  CHECK(rows[0].dual_gens == "<u ; pih>");
  CHECK(rows[0].size_logp == 1);
}
