#include "chaincode/quad.hpp"

#include <algorithm>
#include <utility>

namespace chaincode {

QuadRing::QuadRing(ChainRing K, ChainElem omega) : K_(std::move(K)) {
  if (!K_.is_unit(omega)) throw NotAUnit("omega must be a unit of K");
  omega_inv_ = K_.inv(omega);
  u_sq_ = K_.mul_pi_pow(omega, static_cast<int>(K_.p_pow_k()));
  omega_ = std::move(omega);
}

QuadElem QuadRing::zero() const { return {K_.zero(), K_.zero()}; }
QuadElem QuadRing::one() const { return {K_.one(), K_.zero()}; }
QuadElem QuadRing::u() const { return {K_.zero(), K_.one()}; }

QuadElem QuadRing::make(ChainElem a0, ChainElem a1) const {
  return {std::move(a0), std::move(a1)};
}

bool QuadRing::is_zero(const QuadElem& a) const {
  return K_.is_zero(a.a0) && K_.is_zero(a.a1);
}

bool QuadRing::eq(const QuadElem& a, const QuadElem& b) const {
  return a.a0 == b.a0 && a.a1 == b.a1;
}

QuadElem QuadRing::add(const QuadElem& a, const QuadElem& b) const {
  return {K_.add(a.a0, b.a0), K_.add(a.a1, b.a1)};
}

QuadElem QuadRing::sub(const QuadElem& a, const QuadElem& b) const {
  return {K_.sub(a.a0, b.a0), K_.sub(a.a1, b.a1)};
}

QuadElem QuadRing::neg(const QuadElem& a) const {
  return {K_.neg(a.a0), K_.neg(a.a1)};
}

QuadElem QuadRing::mul(const QuadElem& a, const QuadElem& b) const {
  // (a0 + u a1)(b0 + u b1) = (a0 b0 + u^2 a1 b1) + u (a0 b1 + a1 b0)
  ChainElem c0 = K_.add(K_.mul(a.a0, b.a0), K_.mul(u_sq_, K_.mul(a.a1, b.a1)));
  ChainElem c1 = K_.add(K_.mul(a.a0, b.a1), K_.mul(a.a1, b.a0));
  return {std::move(c0), std::move(c1)};
}

QuadElem QuadRing::mul_u(const QuadElem& a) const {
  return {K_.mul(u_sq_, a.a1), a.a0};
}

QuadElem QuadRing::scalar(const ChainElem& s, const QuadElem& a) const {
  return {K_.mul(s, a.a0), K_.mul(s, a.a1)};
}

long long QuadRing::size_logp() const { return 2 * K_.size_logp(); }

std::vector<coeff_t> QuadRing::serialize(const QuadElem& a) const {
  std::vector<coeff_t> out = K_.serialize(a.a0);
  std::vector<coeff_t> hi = K_.serialize(a.a1);
  out.insert(out.end(), hi.begin(), hi.end());
  return out;
}

// --------------------------- taxonomy -------------------------------------

std::string ideal_case_name(IdealCase c) {
  switch (c) {
    case IdealCase::I1: return "I1";
    case IdealCase::I2: return "I2";
    case IdealCase::I3: return "I3";
    case IdealCase::II: return "II";
    case IdealCase::III1: return "III1";
    case IdealCase::III2: return "III2";
    case IdealCase::III3: return "III3";
    case IdealCase::IV1: return "IV1";
    case IdealCase::IV2: return "IV2";
    case IdealCase::IV3: return "IV3";
  }
  throw InternalError("bad ideal case");
}

IdealCase ideal_case_from_name(const std::string& s) {
  for (auto c : {IdealCase::I1, IdealCase::I2, IdealCase::I3, IdealCase::II,
                 IdealCase::III1, IdealCase::III2, IdealCase::III3,
                 IdealCase::IV1, IdealCase::IV2, IdealCase::IV3})
    if (ideal_case_name(c) == s) return c;
  throw InvalidDescriptor("unknown ideal case '" + s + "'");
}

namespace {

int ceil_half(int t) { return (t + 1) / 2; }
int floor_half(int t) { return t / 2; }

void check_residue_digits(const QuadRing& R, const std::vector<Poly>& h, int count) {
  if (static_cast<int>(h.size()) != count)
    throw InvalidDescriptor("residue h has wrong digit count");
  for (const auto& t : h)
    if (poly_deg(t) >= R.base().d())
      throw InvalidDescriptor("residue digit degree too large");
}

ChainElem residue_elem(const QuadRing& R, const std::vector<Poly>& h) {
  std::vector<Poly> digits = h;
  return R.base().from_digits(std::move(digits));
}

}  // namespace

void validate_ideal(const QuadRing& R, const IdealDesc& d) {
  const int nil = R.base().nil();
  const int pk = static_cast<int>(R.base().p_pow_k());
  const int lambda = R.base().lambda();
  switch (d.kase) {
    case IdealCase::I1:
    case IdealCase::III1:
      return;
    case IdealCase::I2:
    case IdealCase::III2:
      if (poly_deg(d.b) >= R.base().d())
        throw InvalidDescriptor("b degree too large");
      return;
    case IdealCase::I3:
      if (d.s < (lambda - 1) * pk || d.s > nil - 3)
        throw InvalidDescriptor("I3: s out of range");
      if (d.t != nil - d.s) throw InvalidDescriptor("I3: t must equal nil - s");
      check_residue_digits(R, d.h, floor_half(d.t));
      return;
    case IdealCase::II:
      if (d.s < 0 || d.s > nil) throw InvalidDescriptor("II: s out of range");
      return;
    case IdealCase::III3:
      if (d.t < 3 || d.t > pk) throw InvalidDescriptor("III3: t out of range");
      check_residue_digits(R, d.h, floor_half(d.t));
      return;
    case IdealCase::IV1:
      if (d.s < 1 || d.s > nil - 2) throw InvalidDescriptor("IV1: s out of range");
      return;
    case IdealCase::IV2:
      if (d.s < 1 || d.s > nil - 3) throw InvalidDescriptor("IV2: s out of range");
      if (poly_deg(d.b) >= R.base().d())
        throw InvalidDescriptor("b degree too large");
      return;
    case IdealCase::IV3:
      if (d.t < 3 || d.t > pk) throw InvalidDescriptor("IV3: t out of range");
      if (d.s < 1 || d.s > nil - 1 - d.t)
        throw InvalidDescriptor("IV3: s out of range");
      check_residue_digits(R, d.h, floor_half(d.t));
      return;
  }
  throw InvalidDescriptor("bad ideal case");
}

bool ideal_is_principal(const IdealDesc& d) {
  switch (d.kase) {
    case IdealCase::I1:
    case IdealCase::I2:
    case IdealCase::I3:
    case IdealCase::II:
      return true;
    default:
      return false;
  }
}

GenPair ideal_generators(const QuadRing& R, const IdealDesc& d) {
  validate_ideal(R, d);
  const ChainRing& K = R.base();
  const int nil = K.nil();
  GenPair g;
  g.g2 = R.zero();
  switch (d.kase) {
    case IdealCase::I1:
      g.g1 = R.make(K.zero(), K.pi_pow(nil - 1));
      return g;
    case IdealCase::I2:
      g.g1 = R.make(K.mul_pi_pow(K.from_tpoly(d.b), nil - 1), K.pi_pow(nil - 2));
      return g;
    case IdealCase::I3:
      g.g1 = R.make(K.mul_pi_pow(residue_elem(R, d.h), ceil_half(d.t) + d.s),
                    K.pi_pow(d.s));
      return g;
    case IdealCase::II:
      g.g1 = R.make(K.pi_pow(d.s), K.zero());
      return g;
    case IdealCase::III1:
      g.g1 = R.u();
      g.g2 = R.make(K.pi_pow(1), K.zero());
      g.has_g2 = true;
      return g;
    case IdealCase::III2:
      g.g1 = R.make(K.mul_pi_pow(K.from_tpoly(d.b), 1), K.one());
      g.g2 = R.make(K.pi_pow(2), K.zero());
      g.has_g2 = true;
      return g;
    case IdealCase::III3:
      g.g1 = R.make(K.mul_pi_pow(residue_elem(R, d.h), ceil_half(d.t)), K.one());
      g.g2 = R.make(K.pi_pow(d.t), K.zero());
      g.has_g2 = true;
      return g;
    case IdealCase::IV1:
      g.g1 = R.make(K.pi_pow(d.s + 1), K.zero());
      g.g2 = R.make(K.zero(), K.pi_pow(d.s));
      g.has_g2 = true;
      return g;
    case IdealCase::IV2:
      g.g1 = R.make(K.mul_pi_pow(K.from_tpoly(d.b), d.s + 1), K.pi_pow(d.s));
      g.g2 = R.make(K.pi_pow(d.s + 2), K.zero());
      g.has_g2 = true;
      return g;
    case IdealCase::IV3:
      g.g1 = R.make(K.mul_pi_pow(residue_elem(R, d.h), d.s + ceil_half(d.t)),
                    K.pi_pow(d.s));
      g.g2 = R.make(K.pi_pow(d.s + d.t), K.zero());
      g.has_g2 = true;
      return g;
  }
  throw InvalidDescriptor("bad ideal case");
}

long long ideal_size_logp(const QuadRing& R, const IdealDesc& d) {
  validate_ideal(R, d);
  const long long md = static_cast<long long>(R.base().field().m()) * R.base().d();
  const long long nil = R.base().nil();
  switch (d.kase) {
    case IdealCase::I1: return md;
    case IdealCase::I2: return 2 * md;
    case IdealCase::I3: return md * (nil - d.s);
    case IdealCase::II: return 2 * md * (nil - d.s);
    case IdealCase::III1: return md * (2 * nil - 1);
    case IdealCase::III2: return 2 * md * (nil - 1);
    case IdealCase::III3: return md * (2 * nil - d.t);
    case IdealCase::IV1: return md * (2 * nil - 2 * d.s - 1);
    case IdealCase::IV2: return 2 * md * (nil - d.s - 1);
    case IdealCase::IV3: return md * (2 * nil - 2 * d.s - d.t);
  }
  throw InvalidDescriptor("bad ideal case");
}

namespace {

Poly neg_digit(const Fq& F, const Poly& b) { return poly_neg(F, b); }

std::vector<Poly> neg_digits(const Fq& F, const std::vector<Poly>& h) {
  std::vector<Poly> r;
  r.reserve(h.size());
  for (const auto& t : h) r.push_back(poly_neg(F, t));
  return r;
}

}  // namespace

IdealDesc annihilator(const QuadRing& R, const IdealDesc& d) {
  validate_ideal(R, d);
  const Fq& F = R.base().field();
  const int nil = R.base().nil();
  IdealDesc a;
  switch (d.kase) {
    case IdealCase::I1:
      a.kase = IdealCase::III1;
      return a;
    case IdealCase::I2:
      a.kase = IdealCase::III2;
      a.b = neg_digit(F, d.b);
      return a;
    case IdealCase::I3:
      a.kase = IdealCase::III3;
      a.t = d.t;  // = nil - s
      a.h = neg_digits(F, d.h);
      return a;
    case IdealCase::II:
      a.kase = IdealCase::II;
      a.s = nil - d.s;
      return a;
    case IdealCase::III1:
      a.kase = IdealCase::I1;
      return a;
    case IdealCase::III2:
      a.kase = IdealCase::I2;
      a.b = neg_digit(F, d.b);
      return a;
    case IdealCase::III3:
      a.kase = IdealCase::I3;
      a.s = nil - d.t;
      a.t = d.t;
      a.h = neg_digits(F, d.h);
      return a;
    case IdealCase::IV1:
      a.kase = IdealCase::IV1;
      a.s = nil - d.s - 1;
      return a;
    case IdealCase::IV2:
      a.kase = IdealCase::IV2;
      a.s = nil - d.s - 2;
      a.b = neg_digit(F, d.b);
      return a;
    case IdealCase::IV3:
      a.kase = IdealCase::IV3;
      a.s = nil - d.s - d.t;
      a.t = d.t;
      a.h = neg_digits(F, d.h);
      return a;
  }
  throw InvalidDescriptor("bad ideal case");
}

cpp_int count_ideals(std::int64_t p, int m, int k, int lambda, int d) {
  if (p < 3 || p % 2 == 0) throw InvalidParams("p must be an odd prime");
  if (lambda < 2) throw InvalidParams("lambda must be >= 2");
  cpp_int pk = boost::multiprecision::pow(cpp_int(p), k);
  cpp_int n = 0;
  cpp_int pmd = boost::multiprecision::pow(cpp_int(p), m * d);
  cpp_int top = (pk - 1) / 2;
  cpp_int power = 1;
  for (cpp_int l = 0; l <= top; ++l) {
    n += (1 + 2 * lambda * pk - 4 * l) * power;
    power *= pmd;
  }
  return n;
}

cpp_int count_ideals(const QuadRing& R) {
  const ChainRing& K = R.base();
  // recover k from p^k
  std::int64_t p = K.field().p(), ppk = K.p_pow_k();
  int k = 0;
  for (std::int64_t v = 1; v < ppk; v *= p) ++k;
  return count_ideals(p, K.field().m(), k, K.lambda(), K.d());
}

cpp_int count_principal_ideals(const QuadRing& R) {
  const ChainRing& K = R.base();
  cpp_int pmd = boost::multiprecision::pow(cpp_int(K.field().p()),
                                           K.field().m() * K.d());
  cpp_int n = 2 + K.nil() + pmd;
  for (int t = 3; t <= K.p_pow_k(); ++t)
    n += boost::multiprecision::pow(pmd, t / 2);
  return n;
}

// ------------------------- enumeration ------------------------------------

IdealEnumerator::IdealEnumerator(const QuadRing& R) : R_(&R) {
  const int nil = R.base().nil();
  const int pk = static_cast<int>(R.base().p_pow_k());
  const int lambda = R.base().lambda();
  blocks_.push_back({IdealCase::I1, 0, 0, 0});
  blocks_.push_back({IdealCase::I2, 0, 0, 1});
  for (int s = (lambda - 1) * pk; s <= nil - 3; ++s)
    blocks_.push_back({IdealCase::I3, s, nil - s, floor_half(nil - s)});
  for (int s = 0; s <= nil; ++s) blocks_.push_back({IdealCase::II, s, 0, 0});
  blocks_.push_back({IdealCase::III1, 0, 0, 0});
  blocks_.push_back({IdealCase::III2, 0, 0, 1});
  for (int t = 3; t <= pk; ++t)
    blocks_.push_back({IdealCase::III3, 0, t, floor_half(t)});
  for (int s = 1; s <= nil - 2; ++s) blocks_.push_back({IdealCase::IV1, s, 0, 0});
  for (int s = 1; s <= nil - 3; ++s) blocks_.push_back({IdealCase::IV2, s, 0, 1});
  for (int s = 1; s <= nil - 4; ++s)
    for (int t = 3; t <= std::min(pk, nil - 1 - s); ++t)
      blocks_.push_back({IdealCase::IV3, s, t, floor_half(t)});
  block_ = 0;
  residue_ = 0;
  if (!blocks_.empty()) {
    cpp_int q = R.base().field().order();
    residue_count_ = boost::multiprecision::pow(
        q, blocks_[0].free_digits * R.base().d());
  }
}

IdealDesc IdealEnumerator::materialize() const {
  const Block& blk = blocks_[block_];
  const ChainRing& K = R_->base();
  const Fq& F = K.field();
  IdealDesc d;
  d.kase = blk.kase;
  d.s = blk.s;
  d.t = blk.t;
  if (blk.free_digits > 0) {
    // residue digits from the index, first coordinate most significant
    int coords = blk.free_digits * K.d();
    std::vector<std::int64_t> digits(coords, 0);
    cpp_int rem = residue_;
    cpp_int q = F.order();
    for (int i = coords - 1; i >= 0; --i) {
      digits[i] = static_cast<std::int64_t>(rem % q);
      rem /= q;
    }
    std::vector<Poly> hd(blk.free_digits);
    for (int g = 0; g < blk.free_digits; ++g) {
      Poly t;
      t.c.reserve(K.d());
      for (int i = 0; i < K.d(); ++i)
        t.c.push_back(F.element_at(digits[g * K.d() + i]));
      hd[g] = poly_trim(F, std::move(t));
    }
    bool is_b = (blk.kase == IdealCase::I2 || blk.kase == IdealCase::III2 ||
                 blk.kase == IdealCase::IV2);
    if (is_b)
      d.b = hd[0];
    else
      d.h = std::move(hd);
  }
  return d;
}

std::optional<IdealDesc> IdealEnumerator::next() {
  while (block_ < blocks_.size()) {
    if (residue_ < residue_count_) {
      IdealDesc d = materialize();
      ++residue_;
      return d;
    }
    ++block_;
    residue_ = 0;
    if (block_ < blocks_.size()) {
      cpp_int q = R_->base().field().order();
      residue_count_ = boost::multiprecision::pow(
          q, blocks_[block_].free_digits * R_->base().d());
    }
  }
  return std::nullopt;
}

void for_each_ideal(const QuadRing& R,
                    const std::function<void(const IdealDesc&)>& fn) {
  IdealEnumerator e(R);
  while (auto d = e.next()) fn(*d);
}

IdealDesc nth_ideal(const QuadRing& R, cpp_int index) {
  // walk block sizes without materializing every residue; the block order
  // here must match IdealEnumerator exactly
  const ChainRing& K = R.base();
  cpp_int q = K.field().order();
  std::vector<std::pair<IdealDesc, int>> blocks;  // template desc + free digit count
  const int nil = K.nil();
  const int pk = static_cast<int>(K.p_pow_k());
  const int lambda = K.lambda();
  auto add = [&](IdealCase c, int s, int t, int fd) {
    IdealDesc d;
    d.kase = c;
    d.s = s;
    d.t = t;
    blocks.push_back({d, fd});
  };
  add(IdealCase::I1, 0, 0, 0);
  add(IdealCase::I2, 0, 0, 1);
  for (int s = (lambda - 1) * pk; s <= nil - 3; ++s)
    add(IdealCase::I3, s, nil - s, (nil - s) / 2);
  for (int s = 0; s <= nil; ++s) add(IdealCase::II, s, 0, 0);
  add(IdealCase::III1, 0, 0, 0);
  add(IdealCase::III2, 0, 0, 1);
  for (int t = 3; t <= pk; ++t) add(IdealCase::III3, 0, t, t / 2);
  for (int s = 1; s <= nil - 2; ++s) add(IdealCase::IV1, s, 0, 0);
  for (int s = 1; s <= nil - 3; ++s) add(IdealCase::IV2, s, 0, 1);
  for (int s = 1; s <= nil - 4; ++s)
    for (int t = 3; t <= std::min(pk, nil - 1 - s); ++t)
      add(IdealCase::IV3, s, t, t / 2);

  const Fq& F = K.field();
  for (auto& [tmpl, fd] : blocks) {
    cpp_int count = boost::multiprecision::pow(q, fd * K.d());
    if (index >= count) {
      index -= count;
      continue;
    }
    IdealDesc d = tmpl;
    if (fd > 0) {
      int coords = fd * K.d();
      std::vector<std::int64_t> digits(coords, 0);
      cpp_int rem = index;
      for (int i = coords - 1; i >= 0; --i) {
        digits[i] = static_cast<std::int64_t>(rem % q);
        rem /= q;
      }
      std::vector<Poly> hd(fd);
      for (int g = 0; g < fd; ++g) {
        Poly t;
        t.c.reserve(K.d());
        for (int i = 0; i < K.d(); ++i)
          t.c.push_back(F.element_at(digits[g * K.d() + i]));
        hd[g] = poly_trim(F, std::move(t));
      }
      bool is_b = (d.kase == IdealCase::I2 || d.kase == IdealCase::III2 ||
                   d.kase == IdealCase::IV2);
      if (is_b)
        d.b = hd[0];
      else
        d.h = std::move(hd);
    }
    return d;
  }
  throw InvalidInput("ideal index out of range");
}

// ---------------------- canonical modules ---------------------------------

CanonicalModule canonicalize_rows(const ChainRing& K, std::vector<ModuleRow> rows) {
  const int nil = K.nil();
  // drop zero rows
  std::vector<ModuleRow> live;
  for (auto& r : rows)
    if (!K.is_zero(r[0]) || !K.is_zero(r[1])) live.push_back(std::move(r));

  CanonicalModule M;
  M.c = K.zero();
  if (live.empty()) {
    M.a = M.b = nil;
    return M;
  }

  // pivot in column 0: minimal pi-degree across generators
  int a = nil;
  std::size_t piv = live.size();
  for (std::size_t i = 0; i < live.size(); ++i) {
    int t = K.pi_degree(live[i][0]);
    if (t < a) {
      a = t;
      piv = i;
    }
  }

  std::vector<ChainElem> pool;  // column-1 entries of rows with column 0 = 0
  ChainElem c = K.zero();
  if (a < nil) {
    ChainElem w0 = K.unit_split(live[piv][0]).second;
    ChainElem w0i = K.inv(w0);
    ModuleRow pivot = {K.mul(w0i, live[piv][0]), K.mul(w0i, live[piv][1])};
    // pivot[0] == pi^a exactly
    for (std::size_t i = 0; i < live.size(); ++i) {
      if (i == piv) continue;
      ModuleRow r = live[i];
      if (!K.is_zero(r[0])) {
        auto [t, w] = K.unit_split(r[0]);
        ChainElem factor = K.mul_pi_pow(w, t - a);
        r[0] = K.sub(r[0], K.mul(factor, pivot[0]));  // exact zero
        r[1] = K.sub(r[1], K.mul(factor, pivot[1]));
        if (!K.is_zero(r[0])) throw InternalError("column elimination not exact");
      }
      pool.push_back(r[1]);
    }
    // torsion of the pivot row: pi^{nil-a} * pivot = (0, pi^{nil-a} c)
    pool.push_back(K.mul_pi_pow(pivot[1], nil - a));
    c = pivot[1];
  } else {
    for (auto& r : live) pool.push_back(r[1]);
  }

  int b = nil;
  for (const auto& v : pool) b = std::min(b, K.pi_degree(v));

  if (a < nil && b < nil) {
    // reduce c mod pi^b: clear digits at positions >= b
    for (int i = b; i < nil; ++i) c.d[i] = poly_zero();
  }
  M.a = a;
  M.b = b;
  M.c = (a < nil) ? c : K.zero();
  return M;
}

bool module_member(const ChainRing& K, const CanonicalModule& M, const ModuleRow& v) {
  const int nil = K.nil();
  ChainElem x0 = v[0], x1 = v[1];
  if (!K.is_zero(x0)) {
    if (M.a == nil) return false;
    auto [t, w] = K.unit_split(x0);
    if (t < M.a) return false;
    ChainElem factor = K.mul_pi_pow(w, t - M.a);
    // subtract factor * (pi^a, c): column 0 becomes exactly zero
    x1 = K.sub(x1, K.mul(factor, M.c));
  }
  if (!K.is_zero(x1)) {
    if (M.b == nil) return false;
    if (K.pi_degree(x1) < M.b) return false;
    // x1 in <pi^b> iff its pi-degree is >= b
  }
  return true;
}

long long module_size_logp(const ChainRing& K, const CanonicalModule& M) {
  const long long md = static_cast<long long>(K.field().m()) * K.d();
  long long logp = 0;
  if (M.a < K.nil()) logp += md * (K.nil() - M.a);
  if (M.b < K.nil()) logp += md * (K.nil() - M.b);
  return logp;
}

std::vector<coeff_t> module_fingerprint(const ChainRing& K, const CanonicalModule& M) {
  std::vector<coeff_t> out;
  out.push_back(static_cast<coeff_t>(M.a));
  out.push_back(static_cast<coeff_t>(M.b));
  auto cs = K.serialize(M.c);
  out.insert(out.end(), cs.begin(), cs.end());
  return out;
}

CanonicalModule ideal_module(const QuadRing& R, const IdealDesc& d) {
  GenPair g = ideal_generators(R, d);
  std::vector<ModuleRow> rows;
  auto push = [&](const QuadElem& q) {
    rows.push_back({q.a0, q.a1});
    QuadElem uq = R.mul_u(q);
    rows.push_back({uq.a0, uq.a1});
  };
  push(g.g1);
  if (g.has_g2) push(g.g2);
  return canonicalize_rows(R.base(), std::move(rows));
}

bool membership(const QuadRing& R, const IdealDesc& d, const QuadElem& x) {
  CanonicalModule M = ideal_module(R, d);
  return module_member(R.base(), M, {x.a0, x.a1});
}

bool ideal_equal(const IdealDesc& a, const IdealDesc& b) { return a == b; }

bool ideal_equal_slow(const QuadRing& R, const IdealDesc& a, const IdealDesc& b) {
  CanonicalModule Ma = ideal_module(R, a);
  CanonicalModule Mb = ideal_module(R, b);
  return module_fingerprint(R.base(), Ma) == module_fingerprint(R.base(), Mb);
}

}  // namespace chaincode
