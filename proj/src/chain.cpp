#include "chaincode/chain.hpp"

#include <algorithm>
#include <utility>

namespace chaincode {

ChainRing::ChainRing(Fq F, Poly f, int lambda, std::int64_t p_pow_k)
    : F_(std::move(F)), f_(std::move(f)), lambda_(lambda), ppk_(p_pow_k) {
  d_ = poly_deg(f_);
  if (d_ < 1) throw InvalidParams("chain ring modulus must be nonconstant");
  if (!F_.is_one(f_.c.back())) throw InvalidParams("chain ring modulus must be monic");
  if (lambda_ < 2) throw InvalidParams("lambda must be >= 2 (e = 2*lambda >= 4)");
  if (ppk_ < 1) throw InvalidParams("p^k must be >= 1");
  std::int64_t nil = static_cast<std::int64_t>(lambda_) * ppk_;
  if (nil > 1 << 16) throw InvalidParams("lambda * p^k too large for desk scale");
  nil_ = static_cast<int>(nil);
  f_pows_.reserve(nil_ + 1);
  f_pows_.push_back(poly_one(F_));
  for (int s = 1; s <= nil_; ++s)
    f_pows_.push_back(poly_mul(F_, f_pows_.back(), f_));
}

ChainElem ChainRing::zero() const {
  return ChainElem{std::vector<Poly>(nil_, poly_zero())};
}

ChainElem ChainRing::one() const {
  ChainElem e = zero();
  e.d[0] = poly_one(F_);
  return e;
}

ChainElem ChainRing::pi_pow(int s) const {
  ChainElem e = zero();
  if (s < nil_) e.d[s] = poly_one(F_);
  return e;
}

ChainElem ChainRing::from_tpoly(const Poly& t) const {
  if (poly_deg(t) >= d_) throw InvalidInput("digit polynomial degree too large");
  ChainElem e = zero();
  e.d[0] = t;
  return e;
}

ChainElem ChainRing::from_poly(const Poly& a) const {
  Poly r = poly_mod(F_, a, f_pows_[nil_]);
  ChainElem e = zero();
  for (int s = 0; s < nil_ && !poly_is_zero(r); ++s) {
    auto [q, rem] = poly_divmod(F_, r, f_);
    e.d[s] = rem;
    r = std::move(q);
  }
  if (!poly_is_zero(r)) throw InternalError("digitize overflow");
  return e;
}

Poly ChainRing::to_poly(const ChainElem& a) const {
  Poly acc = poly_zero();
  for (int s = nil_ - 1; s >= 0; --s)
    acc = poly_add(F_, poly_mul(F_, acc, f_), a.d[s]);
  return acc;
}

ChainElem ChainRing::from_digits(std::vector<Poly> digits) const {
  if (static_cast<int>(digits.size()) > nil_)
    throw InvalidInput("too many pi-adic digits");
  digits.resize(nil_, poly_zero());
  for (const auto& t : digits)
    if (poly_deg(t) >= d_) throw InvalidInput("digit polynomial degree too large");
  return ChainElem{std::move(digits)};
}

bool ChainRing::is_zero(const ChainElem& a) const {
  for (const auto& t : a.d)
    if (!poly_is_zero(t)) return false;
  return true;
}

bool ChainRing::eq(const ChainElem& a, const ChainElem& b) const {
  return a.d == b.d;
}

ChainElem ChainRing::add(const ChainElem& a, const ChainElem& b) const {
  // digits have degree < d, so addition carries nothing between digits
  ChainElem r = zero();
  for (int s = 0; s < nil_; ++s) r.d[s] = poly_add(F_, a.d[s], b.d[s]);
  return r;
}

ChainElem ChainRing::sub(const ChainElem& a, const ChainElem& b) const {
  ChainElem r = zero();
  for (int s = 0; s < nil_; ++s) r.d[s] = poly_sub(F_, a.d[s], b.d[s]);
  return r;
}

ChainElem ChainRing::neg(const ChainElem& a) const { return sub(zero(), a); }

ChainElem ChainRing::mul(const ChainElem& a, const ChainElem& b) const {
  return from_poly(poly_mul(F_, to_poly(a), to_poly(b)));
}

ChainElem ChainRing::mul_pi_pow(const ChainElem& a, int s) const {
  ChainElem r = zero();
  for (int i = 0; i + s < nil_; ++i) r.d[i + s] = a.d[i];
  return r;
}

bool ChainRing::is_unit(const ChainElem& a) const {
  return !poly_is_zero(a.d[0]);
}

ChainElem ChainRing::inv(const ChainElem& a) const {
  if (!is_unit(a)) throw NotAUnit("chain ring element is not a unit");
  Poly av = to_poly(a);
  // invert digit 0 in the residue field, then lift by Newton iteration
  PolyXgcd x = poly_xgcd(F_, a.d[0], f_);
  if (!(x.g == poly_one(F_))) throw InternalError("residue field inverse failed");
  Poly y = poly_mod(F_, x.s, f_);
  int prec = 1;
  Poly two = poly_const(F_, F_.from_int(2));
  while (prec < nil_) {
    prec = std::min(2 * prec, nil_);
    const Poly& mod = f_pows_[prec];
    Poly ay = poly_mod(F_, poly_mul(F_, av, y), mod);
    y = poly_mod(F_, poly_mul(F_, y, poly_sub(F_, two, ay)), mod);
  }
  ChainElem r = from_poly(y);
  if (!eq(mul(r, a), one())) throw InternalError("Hensel inverse check failed");
  return r;
}

int ChainRing::pi_degree(const ChainElem& a) const {
  for (int s = 0; s < nil_; ++s)
    if (!poly_is_zero(a.d[s])) return s;
  return nil_;
}

std::pair<int, ChainElem> ChainRing::unit_split(const ChainElem& a) const {
  int t = pi_degree(a);
  if (t == nil_) throw ZeroInput("unit_split of zero");
  // shifting digits down is exact: a = pi^t * w
  ChainElem w = zero();
  for (int i = t; i < nil_; ++i) w.d[i - t] = a.d[i];
  return {t, w};
}

long long ChainRing::size_logp() const {
  return static_cast<long long>(F_.m()) * d_ * nil_;
}

ChainElem ChainRing::element_at(std::uint64_t index) const {
  ChainElem e = zero();
  std::uint64_t q = static_cast<std::uint64_t>(F_.order());
  for (int s = 0; s < nil_; ++s) {
    Poly t;
    t.c.reserve(d_);
    for (int i = 0; i < d_; ++i) {
      t.c.push_back(F_.element_at(static_cast<std::int64_t>(index % q)));
      index /= q;
    }
    e.d[s] = poly_trim(F_, std::move(t));
  }
  if (index != 0) throw InvalidInput("chain element index out of range");
  return e;
}

std::vector<coeff_t> ChainRing::serialize(const ChainElem& a) const {
  std::vector<coeff_t> out;
  out.reserve(static_cast<std::size_t>(nil_) * d_ * F_.m());
  for (int s = 0; s < nil_; ++s)
    for (int i = 0; i < d_; ++i) {
      FieldElem e = poly_coeff(F_, a.d[s], i);
      out.insert(out.end(), e.c.begin(), e.c.end());
    }
  return out;
}

ChainElem compute_omega(const ChainRing& K, const FieldElem& alpha,
                        const Poly& cofactor) {
  const Fq& F = K.field();
  Poly w = poly_powmod(F, cofactor, K.p_pow_k(), K.f_pow(K.nil()));
  w = poly_scale(F, F.inv(alpha), w);
  ChainElem omega = K.from_poly(w);
  if (!K.is_unit(omega)) throw InternalError("omega is not a unit");
  return omega;
}

CrtData compute_idempotents(const Fq& F, const std::vector<Poly>& factors,
                            int lambda, std::int64_t p_pow_k,
                            const FieldElem& delta0, const FieldElem& alpha) {
  if (factors.empty()) throw InvalidParams("empty factor list");
  CrtData crt;
  int n = 0;
  for (const auto& f : factors) n += poly_deg(f);
  Poly xn = xn_minus(F, n, delta0);

  std::int64_t nil64 = static_cast<std::int64_t>(lambda) * p_pow_k;
  crt.modulus = poly_pow(F, xn, nil64);

  for (const auto& f : factors) {
    ChainRing K(F, f, lambda, p_pow_k);
    Poly cof = poly_divmod(F, xn, f).first;
    Poly cof_big = poly_pow(F, cof, nil64);
    Poly f_big = K.f_pow(K.nil());
    PolyXgcd x = poly_xgcd(F, cof_big, f_big);
    if (!(x.g == poly_one(F)))
      throw InternalError("factor cofactors are not coprime");
    Poly eps = poly_mod(F, poly_mul(F, x.s, cof_big), crt.modulus);
    ChainElem omega = compute_omega(K, alpha, cof);
    crt.omega_invs.push_back(K.inv(omega));
    crt.omegas.push_back(std::move(omega));
    crt.eps.push_back(std::move(eps));
    crt.factors.push_back(std::move(K));
  }

  // partition of unity and orthogonality, verified eagerly
  Poly sum = poly_zero();
  for (const auto& e : crt.eps) sum = poly_add(F, sum, e);
  if (!(sum == poly_one(F))) throw InternalError("idempotents do not sum to 1");
  for (std::size_t j = 0; j < crt.eps.size(); ++j) {
    Poly sq = poly_mod(F, poly_mul(F, crt.eps[j], crt.eps[j]), crt.modulus);
    if (!(sq == crt.eps[j])) throw InternalError("idempotent not idempotent");
    Poly ann = poly_mod(
        F, poly_mul(F, crt.eps[j], crt.factors[j].f_pow(crt.factors[j].nil())),
        crt.modulus);
    if (!poly_is_zero(ann))
      throw InternalError("idempotent does not kill its own factor power");
    for (std::size_t l = j + 1; l < crt.eps.size(); ++l) {
      Poly pr = poly_mod(F, poly_mul(F, crt.eps[j], crt.eps[l]), crt.modulus);
      if (!poly_is_zero(pr)) throw InternalError("idempotents not orthogonal");
    }
  }
  return crt;
}

}  // namespace chaincode
