#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chaincode/poly.hpp"

namespace chaincode {

/// Element of K = F_{p^m}[x]/<f^{lambda p^k}> in pi-adic normal form:
/// digits[s] is the coefficient of pi^s = f^s, a polynomial of degree < deg f.
struct ChainElem {
  std::vector<Poly> d;
  bool operator==(const ChainElem& o) const { return d == o.d; }
};

/// The local chain ring K = F_{p^m}[x]/<f(x)^{lambda p^k}> for a monic
/// irreducible f.  pi = f generates the maximal ideal; its nilpotency index
/// is lambda p^k.  Immutable; operations are pure.
class ChainRing {
 public:
  ChainRing(Fq F, Poly f, int lambda, std::int64_t p_pow_k);

  const Fq& field() const { return F_; }
  const Poly& f() const { return f_; }
  int d() const { return d_; }
  int lambda() const { return lambda_; }
  std::int64_t p_pow_k() const { return ppk_; }
  int nil() const { return nil_; }  // lambda * p^k
  const Poly& f_pow(int s) const { return f_pows_[s]; }
  bool same(const ChainRing& o) const {
    return F_.same(o.F_) && f_ == o.f_ && nil_ == o.nil_;
  }

  ChainElem zero() const;
  ChainElem one() const;
  ChainElem pi_pow(int s) const;  // pi^s, zero for s >= nil
  ChainElem from_tpoly(const Poly& t) const;  // deg t < d, as digit 0
  ChainElem from_poly(const Poly& a) const;   // reduce mod f^nil, digitize
  Poly to_poly(const ChainElem& a) const;
  ChainElem from_digits(std::vector<Poly> digits) const;

  bool is_zero(const ChainElem& a) const;
  bool eq(const ChainElem& a, const ChainElem& b) const;
  ChainElem add(const ChainElem& a, const ChainElem& b) const;
  ChainElem sub(const ChainElem& a, const ChainElem& b) const;
  ChainElem neg(const ChainElem& a) const;
  ChainElem mul(const ChainElem& a, const ChainElem& b) const;
  /// pi^s * a: an exact digit shift.
  ChainElem mul_pi_pow(const ChainElem& a, int s) const;

  /// Unit iff digit 0 is nonzero.
  bool is_unit(const ChainElem& a) const;
  /// Inverse of a unit by Hensel lifting; throws NotAUnit.
  ChainElem inv(const ChainElem& a) const;
  /// Smallest s with a nonzero digit; nil for the zero element.
  int pi_degree(const ChainElem& a) const;
  /// a = pi^t * w with w a unit; requires a != 0.
  std::pair<int, ChainElem> unit_split(const ChainElem& a) const;

  /// Number of elements as an exponent: log_p |K| = m * d * nil.
  long long size_logp() const;
  /// Element whose digit coefficients are the base-p expansion of index;
  /// index ranges over [0, p^{m d nil}).
  ChainElem element_at(std::uint64_t index) const;

  std::vector<coeff_t> serialize(const ChainElem& a) const;

 private:
  Fq F_;
  Poly f_;
  int d_, lambda_, nil_;
  std::int64_t ppk_;
  std::vector<Poly> f_pows_;  // f^0 .. f^nil
};

/// CRT data for A = F_{p^m}[x]/<(x^n - delta0)^{lambda p^k}>: the local rings
/// K_j, the idempotents eps_j, and the units omega_j with
/// alpha^{-1}(x^{n p^k} - delta) = omega_j f_j^{p^k} in K_j.
struct CrtData {
  std::vector<ChainRing> factors;
  std::vector<Poly> eps;
  std::vector<ChainElem> omegas;
  std::vector<ChainElem> omega_invs;
  Poly modulus;  // (x^n - delta0)^{lambda p^k}
};

/// omega = alpha^{-1} * cofactor^{p^k} reduced in K; cofactor is
/// F_j(x) = (x^n - delta0) / f_j(x).  The result is always a unit.
ChainElem compute_omega(const ChainRing& K, const FieldElem& alpha,
                        const Poly& cofactor);

/// Builds the idempotent system from the canonical factor list.  The
/// orthogonality and partition-of-unity identities are verified before
/// returning; failure indicates a factorization bug upstream.
CrtData compute_idempotents(const Fq& F, const std::vector<Poly>& factors,
                            int lambda, std::int64_t p_pow_k,
                            const FieldElem& delta0, const FieldElem& alpha);

}  // namespace chaincode
