#include "chaincode/poly.hpp"

#include <algorithm>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

namespace chaincode {

using boost::multiprecision::cpp_int;

int poly_deg(const Poly& a) { return static_cast<int>(a.c.size()) - 1; }

bool poly_is_zero(const Poly& a) { return a.c.empty(); }

Poly poly_zero() { return {}; }

Poly poly_one(const Fq& F) { return Poly{{F.one()}}; }

Poly poly_const(const Fq& F, const FieldElem& e) {
  if (F.is_zero(e)) return {};
  return Poly{{e}};
}

Poly poly_monomial(const Fq& F, const FieldElem& e, int i) {
  if (F.is_zero(e)) return {};
  Poly r;
  r.c.assign(i + 1, F.zero());
  r.c[i] = e;
  return r;
}

Poly poly_trim(const Fq& F, Poly a) {
  while (!a.c.empty() && F.is_zero(a.c.back())) a.c.pop_back();
  return a;
}

FieldElem poly_coeff(const Fq& F, const Poly& a, int i) {
  if (i < 0 || i >= static_cast<int>(a.c.size())) return F.zero();
  return a.c[i];
}

Poly poly_add(const Fq& F, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = F.add(poly_coeff(F, a, static_cast<int>(i)),
                   poly_coeff(F, b, static_cast<int>(i)));
  return poly_trim(F, std::move(r));
}

Poly poly_sub(const Fq& F, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = F.sub(poly_coeff(F, a, static_cast<int>(i)),
                   poly_coeff(F, b, static_cast<int>(i)));
  return poly_trim(F, std::move(r));
}

Poly poly_neg(const Fq& F, const Poly& a) { return poly_sub(F, poly_zero(), a); }

Poly poly_scale(const Fq& F, const FieldElem& s, const Poly& a) {
  if (F.is_zero(s)) return {};
  Poly r = a;
  for (auto& e : r.c) e = F.mul(s, e);
  return poly_trim(F, std::move(r));
}

Poly poly_mul(const Fq& F, const Poly& a, const Poly& b) {
  if (poly_is_zero(a) || poly_is_zero(b)) return {};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (F.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return poly_trim(F, std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Fq& F, const Poly& a, const Poly& b) {
  if (poly_is_zero(b)) throw DivisionByZero("polynomial division by zero");
  Poly rem = a;
  int db = poly_deg(b);
  FieldElem lead_inv = F.inv(b.c.back());
  Poly q;
  if (poly_deg(a) >= db) q.c.assign(poly_deg(a) - db + 1, F.zero());
  while (poly_deg(rem) >= db) {
    FieldElem c = F.mul(rem.c.back(), lead_inv);
    int shift = poly_deg(rem) - db;
    q.c[shift] = c;
    for (int i = 0; i <= db; ++i)
      rem.c[i + shift] = F.sub(rem.c[i + shift], F.mul(c, b.c[i]));
    rem = poly_trim(F, std::move(rem));
  }
  return {poly_trim(F, std::move(q)), rem};
}

Poly poly_mod(const Fq& F, const Poly& a, const Poly& b) {
  return poly_divmod(F, a, b).second;
}

Poly poly_monic(const Fq& F, const Poly& a) {
  if (poly_is_zero(a)) return a;
  return poly_scale(F, F.inv(a.c.back()), a);
}

Poly poly_gcd(const Fq& F, Poly a, Poly b) {
  while (!poly_is_zero(b)) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

PolyXgcd poly_xgcd(const Fq& F, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = poly_one(F), s1 = poly_zero();
  Poly t0 = poly_zero(), t1 = poly_one(F);
  while (!poly_is_zero(r1)) {
    auto [q, r2] = poly_divmod(F, r0, r1);
    Poly s2 = poly_sub(F, s0, poly_mul(F, q, s1));
    Poly t2 = poly_sub(F, t0, poly_mul(F, q, t1));
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (!poly_is_zero(r0)) {
    FieldElem li = F.inv(r0.c.back());
    r0 = poly_scale(F, li, r0);
    s0 = poly_scale(F, li, s0);
    t0 = poly_scale(F, li, t0);
  }
  return {r0, s0, t0};
}

Poly poly_pow(const Fq& F, const Poly& a, std::int64_t e) {
  if (e < 0) throw InvalidInput("negative polynomial power");
  Poly base = a, acc = poly_one(F);
  while (e > 0) {
    if (e & 1) acc = poly_mul(F, acc, base);
    base = poly_mul(F, base, base);
    e >>= 1;
  }
  return acc;
}

Poly poly_powmod(const Fq& F, const Poly& a, std::int64_t e, const Poly& mod) {
  Poly base = poly_mod(F, a, mod), acc = poly_mod(F, poly_one(F), mod);
  while (e > 0) {
    if (e & 1) acc = poly_mod(F, poly_mul(F, acc, base), mod);
    base = poly_mod(F, poly_mul(F, base, base), mod);
    e >>= 1;
  }
  return acc;
}

namespace {

Poly poly_powmod_big(const Fq& F, const Poly& a, cpp_int e, const Poly& mod) {
  Poly base = poly_mod(F, a, mod), acc = poly_mod(F, poly_one(F), mod);
  while (e > 0) {
    if ((e & 1) != 0) acc = poly_mod(F, poly_mul(F, acc, base), mod);
    base = poly_mod(F, poly_mul(F, base, base), mod);
    e >>= 1;
  }
  return acc;
}

}  // namespace

FieldElem poly_eval(const Fq& F, const Poly& a, const FieldElem& x) {
  FieldElem acc = F.zero();
  for (int i = poly_deg(a); i >= 0; --i) acc = F.add(F.mul(acc, x), a.c[i]);
  return acc;
}

Poly xn_minus(const Fq& F, int n, const FieldElem& delta0) {
  Poly r;
  r.c.assign(n + 1, F.zero());
  r.c[0] = F.neg(delta0);
  r.c[n] = F.one();
  return r;
}

bool poly_canonical_less(const Fq& F, const Poly& a, const Poly& b) {
  if (poly_deg(a) != poly_deg(b)) return poly_deg(a) < poly_deg(b);
  for (int i = 0; i <= poly_deg(a); ++i) {
    std::int64_t ia = F.index_of(a.c[i]);
    std::int64_t ib = F.index_of(b.c[i]);
    if (ia != ib) return ia < ib;
  }
  return false;
}

bool poly_is_irreducible(const Fq& F, const Poly& f) {
  int d = poly_deg(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  if (d <= 3) {
    // degree 2 or 3: irreducible iff no root in F_{p^m}
    for (std::int64_t i = 0; i < F.order(); ++i)
      if (F.is_zero(poly_eval(F, f, F.element_at(i)))) return false;
    return true;
  }
  // Rabin's criterion
  Poly x = poly_monomial(F, F.one(), 1);
  Poly h = x;
  for (int i = 0; i < d; ++i) h = poly_powmod(F, h, F.order(), f);
  if (!poly_is_zero(poly_sub(F, h, poly_mod(F, x, f)))) return false;
  for (int q = 2; q <= d; ++q) {
    if (d % q != 0) continue;
    bool qprime = true;
    for (int t = 2; t * t <= q; ++t)
      if (q % t == 0) qprime = false;
    if (!qprime) continue;
    Poly g = x;
    for (int i = 0; i < d / q; ++i) g = poly_powmod(F, g, F.order(), f);
    Poly gc = poly_gcd(F, poly_sub(F, g, x), f);
    if (!(gc == poly_one(F))) return false;
  }
  return true;
}

namespace {

Poly random_poly_below(const Fq& F, int deg_bound, std::mt19937_64& rng) {
  Poly r;
  r.c.reserve(deg_bound);
  std::uniform_int_distribution<std::int64_t> dist(0, F.order() - 1);
  for (int i = 0; i < deg_bound; ++i) r.c.push_back(F.element_at(dist(rng)));
  return poly_trim(F, std::move(r));
}

// Cantor-Zassenhaus equal-degree splitting; f squarefree, all factors of
// degree d, q odd.
void edf(const Fq& F, const Poly& f, int d, std::mt19937_64& rng,
         std::vector<Poly>& out) {
  if (poly_deg(f) == d) {
    out.push_back(poly_monic(F, f));
    return;
  }
  cpp_int e = (boost::multiprecision::pow(cpp_int(F.order()), d) - 1) / 2;
  for (;;) {
    Poly a = random_poly_below(F, poly_deg(f), rng);
    if (poly_deg(a) < 1) continue;
    Poly g = poly_gcd(F, a, f);
    if (poly_deg(g) > 0 && poly_deg(g) < poly_deg(f)) {
      edf(F, g, d, rng, out);
      edf(F, poly_divmod(F, f, g).first, d, rng, out);
      return;
    }
    Poly b = poly_powmod_big(F, a, e, f);
    Poly h = poly_gcd(F, poly_sub(F, b, poly_one(F)), f);
    if (poly_deg(h) > 0 && poly_deg(h) < poly_deg(f)) {
      edf(F, h, d, rng, out);
      edf(F, poly_divmod(F, f, h).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_xn_minus(const Fq& F, const FieldElem& delta0, int n,
                                  std::uint64_t seed) {
  if (n < 1) throw InvalidParams("n must be >= 1");
  if (n % F.p() == 0)
    throw NotCoprimeToP("gcd(n, p) != 1 for n = " + std::to_string(n));
  if (F.is_zero(delta0)) throw ZeroInput("delta0 must be nonzero");

  Poly f = xn_minus(F, n, delta0);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Poly> factors;

  // distinct-degree splitting, then equal-degree splitting per block
  Poly rest = f;
  Poly x = poly_monomial(F, F.one(), 1);
  Poly h = poly_mod(F, x, rest);
  for (int d = 1; 2 * d <= poly_deg(rest); ++d) {
    h = poly_powmod(F, h, F.order(), rest);
    Poly g = poly_gcd(F, poly_sub(F, h, x), rest);
    if (poly_deg(g) > 0) {
      edf(F, g, d, rng, factors);
      rest = poly_divmod(F, rest, g).first;
      h = poly_mod(F, h, rest);
    }
  }
  if (poly_deg(rest) > 0) factors.push_back(poly_monic(F, rest));

  std::sort(factors.begin(), factors.end(),
            [&](const Poly& a, const Poly& b) { return poly_canonical_less(F, a, b); });

  // x^n - delta0 is squarefree here, so the factors must be distinct,
  // pairwise coprime, and multiply back to the input
  Poly prod = poly_one(F);
  for (const auto& g : factors) prod = poly_mul(F, prod, g);
  if (!(prod == f)) throw InternalError("factorization product check failed");
  return factors;
}

}  // namespace chaincode
