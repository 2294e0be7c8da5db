#include "chaincode/field.hpp"

#include <algorithm>

namespace chaincode {
namespace {

// ---- polynomial helpers over F_p (dense coeff_t vectors, ascending) ----

using FpPoly = std::vector<coeff_t>;

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

coeff_t fp_mod(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<coeff_t>(r);
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t v = static_cast<std::int64_t>(i < a.size() ? a[i] : 0) +
                     static_cast<std::int64_t>(i < b.size() ? b[i] : 0);
    r[i] = static_cast<coeff_t>(v % p);
  }
  fp_trim(r);
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t v = static_cast<std::int64_t>(i < a.size() ? a[i] : 0) -
                     static_cast<std::int64_t>(i < b.size() ? b[i] : 0);
    r[i] = fp_mod(v, p);
  }
  fp_trim(r);
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<coeff_t>(
          (r[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
    }
  }
  fp_trim(r);
  return r;
}

std::int64_t int_inv_mod(std::int64_t a, std::int64_t n) {
  // extended Euclid; gcd(a, n) must be 1
  std::int64_t r0 = n, r1 = a % n, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1; r1 = r2; s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw InternalError("int_inv_mod: not invertible");
  return ((s0 % n) + n) % n;
}

// remainder of a mod b; b nonzero
FpPoly fp_rem(FpPoly a, const FpPoly& b, std::int64_t p) {
  std::int64_t lead_inv = int_inv_mod(b.back(), p);
  while (fp_deg(a) >= fp_deg(b)) {
    std::int64_t c = (static_cast<std::int64_t>(a.back()) * lead_inv) % p;
    int shift = fp_deg(a) - fp_deg(b);
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::int64_t v = a[i + shift] - c * b[i];
      a[i + shift] = fp_mod(v, p);
    }
    fp_trim(a);
    if (a.empty()) break;
  }
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {  // make monic
    std::int64_t li = int_inv_mod(a.back(), p);
    for (auto& c : a) c = static_cast<coeff_t>((c * li) % p);
  }
  return a;
}

// extended gcd over F_p[y]: returns (g, s) with s*a = g mod b_context... full
// version returning both cofactors; g monic.
struct FpXgcd {
  FpPoly g, s, t;
};

FpXgcd fp_xgcd(FpPoly a, FpPoly b, std::int64_t p) {
  fp_trim(a);
  fp_trim(b);
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = {1}, s1 = {};
  FpPoly t0 = {}, t1 = {1};
  while (!r1.empty()) {
    // divide r0 by r1
    FpPoly q;
    FpPoly rem = r0;
    std::int64_t li = int_inv_mod(r1.back(), p);
    q.assign(std::max<int>(fp_deg(r0) - fp_deg(r1) + 1, 0), 0);
    while (fp_deg(rem) >= fp_deg(r1)) {
      std::int64_t c = (static_cast<std::int64_t>(rem.back()) * li) % p;
      int shift = fp_deg(rem) - fp_deg(r1);
      q[shift] = static_cast<coeff_t>(c);
      for (std::size_t i = 0; i < r1.size(); ++i)
        rem[i + shift] = fp_mod(rem[i + shift] - c * static_cast<std::int64_t>(r1[i]), p);
      fp_trim(rem);
      if (rem.empty()) break;
    }
    fp_trim(q);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1); r1 = std::move(rem);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (!r0.empty()) {
    std::int64_t li = int_inv_mod(r0.back(), p);
    for (auto& c : r0) c = static_cast<coeff_t>((c * li) % p);
    for (auto& c : s0) c = static_cast<coeff_t>((c * li) % p);
    for (auto& c : t0) c = static_cast<coeff_t>((c * li) % p);
  }
  return {r0, s0, t0};
}

FpPoly fp_powmod(const FpPoly& a, std::int64_t e, const FpPoly& mod, std::int64_t p) {
  FpPoly base = fp_rem(a, mod, p);
  FpPoly acc = {1};
  while (e > 0) {
    if (e & 1) acc = fp_rem(fp_mul(acc, base, p), mod, p);
    base = fp_rem(fp_mul(base, base, p), mod, p);
    e >>= 1;
  }
  return acc;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Rabin irreducibility test for a monic f of degree m over F_p.
bool fp_is_irreducible(const FpPoly& f, std::int64_t p) {
  int m = fp_deg(f);
  if (m <= 0) return false;
  if (m == 1) return true;
  FpPoly x = {0, 1};
  // x^(p^m) == x (mod f)
  FpPoly h = x;
  for (int i = 0; i < m; ++i) h = fp_powmod(h, p, f, p);
  if (fp_sub(h, x, p) != FpPoly{}) return false;
  // gcd(x^(p^(m/q)) - x, f) == 1 for every prime q | m
  for (int q = 2; q <= m; ++q) {
    if (m % q != 0) continue;
    bool qprime = true;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) qprime = false;
    if (!qprime) continue;
    FpPoly g = x;
    for (int i = 0; i < m / q; ++i) g = fp_powmod(g, p, f, p);
    if (fp_gcd(fp_sub(g, x, p), f, p) != FpPoly{1}) return false;
  }
  return true;
}

}  // namespace

Fq::Fq(std::int64_t p, int m) : p_(p), m_(m) {
  if (p == 2) throw EvenPrimeUnsupported("p = 2 is not supported");
  if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw InvalidParams("extension degree m must be >= 1");
  q_ = 1;
  for (int i = 0; i < m; ++i) {
    if (q_ > (std::int64_t{1} << 40) / p)
      throw InvalidParams("field order p^m too large");
    q_ *= p;
  }
  // deterministic search: coefficient tuples ordered from the constant term up
  for (std::int64_t idx = 0;; ++idx) {
    if (idx >= q_) throw InternalError("no irreducible modulus found");
    FpPoly f(m + 1, 0);
    std::int64_t v = idx;
    for (int i = 0; i < m; ++i) {
      f[i] = static_cast<coeff_t>(v % p);
      v /= p;
    }
    f[m] = 1;
    if (fp_is_irreducible(f, p)) {
      mod_ = f;
      break;
    }
  }
}

Fq::Fq(std::int64_t p, int m, const std::vector<std::int64_t>& modulus)
    : p_(p), m_(m) {
  if (p == 2) throw EvenPrimeUnsupported("p = 2 is not supported");
  if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw InvalidParams("extension degree m must be >= 1");
  q_ = 1;
  for (int i = 0; i < m; ++i) {
    if (q_ > (std::int64_t{1} << 40) / p)
      throw InvalidParams("field order p^m too large");
    q_ *= p;
  }
  if (static_cast<int>(modulus.size()) != m + 1)
    throw InvalidParams("modulus must have degree m");
  FpPoly f(m + 1);
  for (int i = 0; i <= m; ++i) f[i] = fp_mod(modulus[i], p);
  if (f[m] != 1) throw InvalidParams("modulus must be monic");
  if (!fp_is_irreducible(f, p))
    throw NotIrreducible("modulus is not irreducible over F_p");
  mod_ = f;
}

void Fq::check_elem(const FieldElem& a) const {
  if (static_cast<int>(a.c.size()) != m_)
    throw InvalidInput("field element has wrong coordinate count");
}

FieldElem Fq::zero() const { return FieldElem{std::vector<coeff_t>(m_, 0)}; }

FieldElem Fq::one() const {
  FieldElem e = zero();
  e.c[0] = 1;
  return e;
}

FieldElem Fq::gen() const {
  if (m_ < 2) throw InvalidInput("prime field has no generator y");
  FieldElem e = zero();
  e.c[1] = 1;
  return e;
}

FieldElem Fq::from_int(std::int64_t v) const {
  FieldElem e = zero();
  e.c[0] = fp_mod(v, p_);
  return e;
}

FieldElem Fq::from_coeffs(const std::vector<std::int64_t>& v) const {
  if (static_cast<int>(v.size()) > m_)
    throw InvalidInput("too many coordinates for this field");
  FieldElem e = zero();
  for (std::size_t i = 0; i < v.size(); ++i) e.c[i] = fp_mod(v[i], p_);
  return e;
}

FieldElem Fq::element_at(std::int64_t index) const {
  if (index < 0 || index >= q_) throw InvalidInput("element index out of range");
  FieldElem e = zero();
  for (int i = 0; i < m_; ++i) {
    e.c[i] = static_cast<coeff_t>(index % p_);
    index /= p_;
  }
  return e;
}

std::int64_t Fq::index_of(const FieldElem& a) const {
  check_elem(a);
  std::int64_t idx = 0;
  for (int i = m_ - 1; i >= 0; --i) idx = idx * p_ + a.c[i];
  return idx;
}

bool Fq::is_zero(const FieldElem& a) const {
  check_elem(a);
  return std::all_of(a.c.begin(), a.c.end(), [](coeff_t c) { return c == 0; });
}

bool Fq::is_one(const FieldElem& a) const {
  check_elem(a);
  if (a.c[0] != 1) return false;
  for (int i = 1; i < m_; ++i)
    if (a.c[i] != 0) return false;
  return true;
}

FieldElem Fq::add(const FieldElem& a, const FieldElem& b) const {
  check_elem(a);
  check_elem(b);
  FieldElem r = zero();
  for (int i = 0; i < m_; ++i)
    r.c[i] = static_cast<coeff_t>((a.c[i] + static_cast<std::int64_t>(b.c[i])) % p_);
  return r;
}

FieldElem Fq::sub(const FieldElem& a, const FieldElem& b) const {
  check_elem(a);
  check_elem(b);
  FieldElem r = zero();
  for (int i = 0; i < m_; ++i)
    r.c[i] = fp_mod(static_cast<std::int64_t>(a.c[i]) - b.c[i], p_);
  return r;
}

FieldElem Fq::neg(const FieldElem& a) const { return sub(zero(), a); }

FieldElem Fq::mul(const FieldElem& a, const FieldElem& b) const {
  check_elem(a);
  check_elem(b);
  FpPoly prod = fp_mul(FpPoly(a.c), FpPoly(b.c), p_);
  // note: fp_mul trims; re-reduce mod the field modulus
  FpPoly red = fp_rem(std::move(prod), mod_, p_);
  FieldElem r = zero();
  for (std::size_t i = 0; i < red.size(); ++i) r.c[i] = red[i];
  return r;
}

FieldElem Fq::inv(const FieldElem& a) const {
  if (is_zero(a)) throw DivisionByZero("field inverse of zero");
  FpPoly ap(a.c);
  fp_trim(ap);
  FpXgcd x = fp_xgcd(ap, mod_, p_);
  if (x.g != FpPoly{1}) throw InternalError("field modulus not irreducible?");
  FpPoly red = fp_rem(std::move(x.s), mod_, p_);
  FieldElem r = zero();
  for (std::size_t i = 0; i < red.size(); ++i) r.c[i] = red[i];
  return r;
}

FieldElem Fq::pow(const FieldElem& a, std::int64_t e) const {
  if (e < 0) return pow(inv(a), -e);
  FieldElem base = a;
  FieldElem acc = one();
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

FieldElem Fq::pk_root(const FieldElem& delta, int k) const {
  if (is_zero(delta)) throw ZeroInput("pk_root of zero");
  if (k < 0) throw InvalidParams("k must be nonnegative");
  std::int64_t n = q_ - 1;  // group order, >= 2 since p odd
  // r = p^k mod n; gcd(p, n) = 1, so r is invertible mod n
  std::int64_t r = 1 % n;
  for (int i = 0; i < k; ++i) r = (r * (p_ % n)) % n;
  std::int64_t t = int_inv_mod(r, n);
  FieldElem root = pow(delta, t);
  // exact verification (exponents taken mod the group order)
  if (!(pow(root, r) == delta)) throw InternalError("pk_root verification failed");
  return root;
}

}  // namespace chaincode
