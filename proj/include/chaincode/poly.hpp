#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chaincode/field.hpp"

namespace chaincode {

/// Dense univariate polynomial over F_{p^m}; index = degree, trailing zeros
/// trimmed so the representation is canonical.  The zero polynomial is the
/// empty vector and its degree is reported as -1 (standing in for -infinity).
struct Poly {
  std::vector<FieldElem> c;
  bool operator==(const Poly& o) const { return c == o.c; }
};

int poly_deg(const Poly& a);
bool poly_is_zero(const Poly& a);

Poly poly_zero();
Poly poly_one(const Fq& F);
Poly poly_const(const Fq& F, const FieldElem& e);
Poly poly_monomial(const Fq& F, const FieldElem& e, int i);
Poly poly_trim(const Fq& F, Poly a);
FieldElem poly_coeff(const Fq& F, const Poly& a, int i);

Poly poly_add(const Fq& F, const Poly& a, const Poly& b);
Poly poly_sub(const Fq& F, const Poly& a, const Poly& b);
Poly poly_neg(const Fq& F, const Poly& a);
Poly poly_scale(const Fq& F, const FieldElem& s, const Poly& a);
Poly poly_mul(const Fq& F, const Poly& a, const Poly& b);

/// Quotient and remainder with deg(r) < deg(b); throws DivisionByZero.
std::pair<Poly, Poly> poly_divmod(const Fq& F, const Poly& a, const Poly& b);
Poly poly_mod(const Fq& F, const Poly& a, const Poly& b);

/// Monic gcd; gcd(f, 0) = monic(f).
Poly poly_gcd(const Fq& F, Poly a, Poly b);

struct PolyXgcd {
  Poly g, s, t;  // s*a + t*b = g, g monic (or zero)
};
PolyXgcd poly_xgcd(const Fq& F, const Poly& a, const Poly& b);

Poly poly_pow(const Fq& F, const Poly& a, std::int64_t e);
Poly poly_powmod(const Fq& F, const Poly& a, std::int64_t e, const Poly& mod);
Poly poly_monic(const Fq& F, const Poly& a);
FieldElem poly_eval(const Fq& F, const Poly& a, const FieldElem& x);

/// x^n - delta0.
Poly xn_minus(const Fq& F, int n, const FieldElem& delta0);

/// Canonical order: degree first, then coefficient tuples compared from the
/// constant term up (each coefficient by its coordinate tuple).
bool poly_canonical_less(const Fq& F, const Poly& a, const Poly& b);

/// True for deg <= 3 root tests and Rabin's criterion above that.
bool poly_is_irreducible(const Fq& F, const Poly& f);

/// Complete factorization of x^n - delta0 into distinct monic irreducibles,
/// sorted canonically.  Requires gcd(n, p) = 1 (throws NotCoprimeToP) and
/// delta0 != 0 (throws ZeroInput).  Deterministic for a fixed seed, and the
/// sorted result is independent of the seed.
std::vector<Poly> factor_xn_minus(const Fq& F, const FieldElem& delta0, int n,
                                  std::uint64_t seed);

}  // namespace chaincode
