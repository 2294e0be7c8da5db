#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaincode/quad.hpp"

namespace chaincode {

/// Element of R = F_{p^m}[u]/<u^{2 lambda}>: u-adic digits, index = power of u.
struct RElem {
  std::vector<FieldElem> d;
  bool operator==(const RElem& o) const { return d == o.d; }
};

/// The coefficient ring R = F_{p^m}[u]/<u^e>, e = 2 lambda.
class RRing {
 public:
  RRing(Fq F, int lambda);
  const Fq& field() const { return F_; }
  int e() const { return e_; }
  int lambda() const { return e_ / 2; }

  RElem zero() const;
  RElem one() const;
  RElem from_field(const FieldElem& a) const;
  RElem monomial(const FieldElem& a, int upow) const;

  bool is_zero(const RElem& a) const;
  bool is_unit(const RElem& a) const;  // digit 0 nonzero
  RElem add(const RElem& a, const RElem& b) const;
  RElem sub(const RElem& a, const RElem& b) const;
  RElem neg(const RElem& a) const;
  RElem mul(const RElem& a, const RElem& b) const;
  RElem scale(const FieldElem& s, const RElem& a) const;
  RElem inv(const RElem& a) const;  // throws NotAUnit
  /// a / u^2 for elements with digits 0 and 1 zero.
  RElem shift_down2(const RElem& a) const;

 private:
  Fq F_;
  int e_;
};

/// Element of an ambient ring R[x]/<x^N - gamma>; carries the id of the
/// ambient it lives in so primal/dual elements cannot be mixed silently.
struct AmbientElem {
  std::vector<RElem> c;  // length N, index = power of x
  std::uint8_t ring_id = 0;
  bool operator==(const AmbientElem& o) const {
    return ring_id == o.ring_id && c == o.c;
  }
};

/// R[x]/<x^N - gamma> for a Type-2 unit gamma.  id 0 = primal ring with
/// gamma = delta + alpha u^2, id 1 = dual ring with gamma^{-1}.
class AmbientRing {
 public:
  AmbientRing(RRing R, int N, RElem gamma, std::uint8_t id);
  const RRing& r() const { return R_; }
  int N() const { return N_; }
  const RElem& gamma() const { return gamma_; }
  std::uint8_t id() const { return id_; }

  AmbientElem zero() const;
  AmbientElem one() const;
  AmbientElem x_pow(int i) const;  // 0 <= i < N
  AmbientElem u_pow(int s) const;
  AmbientElem from_scalar(const RElem& r) const;
  /// Polynomial (deg < N) placed at u-digit s.
  AmbientElem from_poly_at_udigit(const Poly& a, int s) const;

  void check(const AmbientElem& a) const;
  bool is_zero(const AmbientElem& a) const;
  AmbientElem add(const AmbientElem& a, const AmbientElem& b) const;
  AmbientElem sub(const AmbientElem& a, const AmbientElem& b) const;
  AmbientElem neg(const AmbientElem& a) const;
  AmbientElem mul(const AmbientElem& a, const AmbientElem& b) const;
  AmbientElem pow(const AmbientElem& a, std::int64_t e) const;
  AmbientElem scale(const RElem& s, const AmbientElem& a) const;

  std::vector<coeff_t> serialize(const AmbientElem& a) const;

 private:
  RRing R_;
  int N_;
  RElem gamma_;
  std::uint8_t id_;
};

/// Euclidean pairing [a, b] = sum a_i b_i in R of two codeword vectors;
/// deliberately ignores the ambient tags (it pairs raw vectors of R^N).
RElem inner_product(const RRing& R, const AmbientElem& a, const AmbientElem& b);

/// Global parameter block for (delta + alpha u^2)-constacyclic codes of
/// length n p^k over R = F_{p^m}[u]/<u^{2 lambda}>.
struct CodeParams {
  Fq F;
  std::int64_t p = 0;
  int m = 0, n = 0, k = 0, lambda = 0;
  std::int64_t p_pow_k = 0;
  int N = 0;  // n * p^k
  FieldElem delta, alpha, delta0;
  std::uint64_t seed = 0;
};

/// Everything derived from the parameters: the canonical factorization of
/// x^n - delta0, the local rings with their omegas, the CRT idempotents,
/// both ambient rings, and the idempotent images e_j = Psi(eps_j) together
/// with their tau images.
struct CodeSystem {
  CodeParams P;
  CrtData crt;
  std::vector<QuadRing> locals;
  RRing R;
  AmbientRing primal, dual;
  RElem gamma, gamma_inv;
  std::vector<AmbientElem> e;       // Psi(eps_j), primal
  std::vector<AmbientElem> e_dual;  // tau(e_j), dual
  std::size_t r() const { return locals.size(); }
};

CodeSystem make_system(std::int64_t p, int m, int n, int k, int lambda,
                       const std::vector<std::int64_t>& delta,
                       const std::vector<std::int64_t>& alpha,
                       std::uint64_t seed,
                       const std::vector<std::int64_t>* field_modulus = nullptr);

/// Psi: A + uA -> R[x]/<x^N - (delta + alpha u^2)> for A with
/// (x^N - delta)^lambda = 0.  Inputs are the two polynomial components,
/// each of degree < lambda N (throws DegreeOverflow otherwise).
AmbientElem psi_forward(const CodeSystem& S, const Poly& xi0, const Poly& xi1);
std::pair<Poly, Poly> psi_inverse(const CodeSystem& S, const AmbientElem& a);

/// Arithmetic in A + uA itself (polynomial pairs mod (x^N - delta)^lambda),
/// used to exercise the ring isomorphism property of Psi.
std::pair<Poly, Poly> aua_add(const CodeSystem& S, const std::pair<Poly, Poly>& x,
                              const std::pair<Poly, Poly>& y);
std::pair<Poly, Poly> aua_mul(const CodeSystem& S, const std::pair<Poly, Poly>& x,
                              const std::pair<Poly, Poly>& y);

/// tau(a)(x) = a(x^{-1}): ring isomorphism primal -> dual.
AmbientElem tau_map(const CodeSystem& S, const AmbientElem& a);
AmbientElem tau_inv(const CodeSystem& S, const AmbientElem& a);

/// A code: one local ideal descriptor per canonical factor.
struct CodeDesc {
  std::vector<IdealDesc> locals;
  bool operator==(const CodeDesc& o) const = default;
};

void validate_code(const CodeSystem& S, const CodeDesc& d);

/// Global generators theta_1 (and theta_2 when some local needs two).
std::vector<AmbientElem> build_code(const CodeSystem& S, const CodeDesc& d);
long long code_size_logp(const CodeSystem& S, const CodeDesc& d);
bool code_is_principal(const CodeSystem& S, const CodeDesc& d);
cpp_int count_codes(const CodeSystem& S);
cpp_int count_codes_1gen(const CodeSystem& S);

/// Descriptor of the dual code (annihilators componentwise, in the dual ring).
CodeDesc dual_desc(const CodeSystem& S, const CodeDesc& d);
/// Generators of the dual code, sum of e_j(x^{-1}) tau(Psi(.)) over factors.
std::vector<AmbientElem> dual_code_gens(const CodeSystem& S, const CodeDesc& d);

/// Membership of a primal ambient element in the code (CRT projection of
/// Psi^{-1} against each local descriptor).
bool global_member(const CodeSystem& S, const CodeDesc& d, const AmbientElem& a);
/// Membership of a dual ambient element in the dual code.
bool dual_member(const CodeSystem& S, const CodeDesc& d, const AmbientElem& a);

/// [x^i g, h] = 0 for all generators g of the code, h of the dual candidate,
/// all shifts 0 <= i < N.  Sufficient for full orthogonality since both sides
/// are R[x]-modules.
bool orthogonal_generators(const CodeSystem& S,
                           const std::vector<AmbientElem>& gens,
                           const std::vector<AmbientElem>& dual_gens);

/// log_p of the cardinality of the R[x]-span of the given ambient elements,
/// computed as an F_p-rank over the monomial multiples u^a y^b x^i g.
long long span_rank_logp(const CodeSystem& S, const std::vector<AmbientElem>& gens);

/// Enumeration of all codes: Cartesian product over factors, last factor
/// varying fastest.  Streams descriptors in that documented order.
void for_each_code(const CodeSystem& S, const std::function<void(const CodeDesc&)>& fn);
CodeDesc nth_code(const CodeSystem& S, cpp_int index);

// ---------------------------------------------------------------------------
// Specialization for r = 1 (x^n - delta0 irreducible): emits each code in the
// (l0, l1, t)-parameterized shape via exponent splitting s = l0 + l1 p^k, with
// closed-form dual generators in addition for n = 1.  The generic dual is the
// ground truth; closed forms are validated against it before being returned.
// ---------------------------------------------------------------------------

struct SpecialEntry {
  CodeDesc desc;
  std::string label;  // i-1, i-2, i-3, ii, iii-1, iii-2, iii-3-1, iii-3-2,
                      // iv-1, iv-2, iv-3-1 .. iv-3-5
  int l0 = 0, l1 = 0, t = 0;
  long long size_logp = 0;
  std::vector<AmbientElem> gens;
  std::vector<AmbientElem> dual_gens;  // closed form for n = 1, generic otherwise
};

/// Unit theta with (x - delta0^{-1})^{p^k} = theta u^2 in the dual ring (n=1).
RElem theta_unit(const CodeSystem& S);
/// varrho = -delta0 (delta + alpha u^2) x^{p^k - 1} in the dual ring (n=1).
AmbientElem varrho(const CodeSystem& S);

/// Throws NotIrreducible when r > 1.
void specialize_n1(const CodeSystem& S, const std::function<void(const SpecialEntry&)>& fn);

}  // namespace chaincode
