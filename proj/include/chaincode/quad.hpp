#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chaincode/chain.hpp"

namespace chaincode {

using boost::multiprecision::cpp_int;

/// Element a0 + u*a1 of the quadratic extension K + uK with
/// u^2 = omega * pi^{p^k}.
struct QuadElem {
  ChainElem a0, a1;
  bool operator==(const QuadElem& o) const { return a0 == o.a0 && a1 == o.a1; }
};

/// The ring K + uK over a local chain ring K, with u^2 = omega * pi^{p^k}
/// for a fixed unit omega of K.
class QuadRing {
 public:
  QuadRing(ChainRing K, ChainElem omega);

  const ChainRing& base() const { return K_; }
  const ChainElem& omega() const { return omega_; }
  const ChainElem& omega_inv() const { return omega_inv_; }
  const ChainElem& u_sq() const { return u_sq_; }  // omega * pi^{p^k}

  QuadElem zero() const;
  QuadElem one() const;
  QuadElem u() const;
  QuadElem make(ChainElem a0, ChainElem a1) const;

  bool is_zero(const QuadElem& a) const;
  bool eq(const QuadElem& a, const QuadElem& b) const;
  QuadElem add(const QuadElem& a, const QuadElem& b) const;
  QuadElem sub(const QuadElem& a, const QuadElem& b) const;
  QuadElem neg(const QuadElem& a) const;
  QuadElem mul(const QuadElem& a, const QuadElem& b) const;
  QuadElem mul_u(const QuadElem& a) const;  // u * a = (u_sq*a1, a0)
  QuadElem scalar(const ChainElem& s, const QuadElem& a) const;

  long long size_logp() const;  // log_p |K + uK| = 2 m d nil
  std::vector<coeff_t> serialize(const QuadElem& a) const;

 private:
  ChainRing K_;
  ChainElem omega_, omega_inv_, u_sq_;
};

// ---------------------------------------------------------------------------
// Ideal taxonomy of K + uK.
//
// Every ideal is exactly one of ten canonical shapes; a descriptor stores the
// shape tag together with its free parameters:
//   I1            <u pi^{nil-1}>
//   I2   (b)      <pi^{nil-1} b + u pi^{nil-2}>
//   I3   (s, h)   <pi^{ceil(t/2)+s} h + u pi^s>,  t = nil - s,
//                 (lambda-1)p^k <= s <= nil-3,  h: floor(t/2) digits
//   II   (s)      <pi^s>, 0 <= s <= nil
//   III1          <u, pi>
//   III2 (b)      <pi b + u, pi^2>
//   III3 (t, h)   <pi^{ceil(t/2)} h + u, pi^t>, 3 <= t <= p^k
//   IV1  (s)      <pi^{s+1}, u pi^s>, 1 <= s <= nil-2
//   IV2  (s, b)   <pi^{s+1} b + u pi^s, pi^{s+2}>, 1 <= s <= nil-3
//   IV3  (s,t,h)  <pi^{s+ceil(t/2)} h + u pi^s, pi^{s+t}>,
//                 3 <= t <= p^k, 1 <= s <= nil-1-t
// with b a single digit (deg < d) and h a vector of floor(t/2) digits.
// Canonicity makes descriptor equality the same as ideal equality.
// ---------------------------------------------------------------------------

enum class IdealCase : std::uint8_t { I1, I2, I3, II, III1, III2, III3, IV1, IV2, IV3 };

std::string ideal_case_name(IdealCase c);
IdealCase ideal_case_from_name(const std::string& s);

struct IdealDesc {
  IdealCase kase = IdealCase::II;
  int s = 0;
  int t = 0;
  Poly b;                // cases I2 / III2 / IV2
  std::vector<Poly> h;   // cases I3 / III3 / IV3, exactly floor(t/2) digits
  bool operator==(const IdealDesc& o) const = default;
};

/// Throws InvalidDescriptor unless every parameter is inside the ranges of
/// the shape table above.
void validate_ideal(const QuadRing& R, const IdealDesc& d);

struct GenPair {
  QuadElem g1, g2;
  bool has_g2 = false;
};

GenPair ideal_generators(const QuadRing& R, const IdealDesc& d);
bool ideal_is_principal(const IdealDesc& d);
long long ideal_size_logp(const QuadRing& R, const IdealDesc& d);
IdealDesc annihilator(const QuadRing& R, const IdealDesc& d);

/// N_{(p^m, 2 lambda, p^k, d)} = sum_{l=0}^{(p^k-1)/2} (1 + 2 lambda p^k - 4l) p^{l m d}.
cpp_int count_ideals(std::int64_t p, int m, int k, int lambda, int d);
cpp_int count_ideals(const QuadRing& R);
/// Number of principal ideals: 2 + lambda p^k + p^{md} + sum_{t=3}^{p^k} p^{md floor(t/2)}.
cpp_int count_principal_ideals(const QuadRing& R);

/// Streams every descriptor exactly once in the documented order:
/// case tag, then s ascending, then t ascending, then residue digits in
/// lexicographic order (first coordinate most significant).
class IdealEnumerator {
 public:
  explicit IdealEnumerator(const QuadRing& R);
  std::optional<IdealDesc> next();

 private:
  struct Block {
    IdealCase kase;
    int s, t;
    int free_digits;  // residue digit count (1 for b-cases)
  };
  const QuadRing* R_;
  std::vector<Block> blocks_;
  std::size_t block_ = 0;
  cpp_int residue_ = 0, residue_count_ = 0;
  IdealDesc materialize() const;
};

void for_each_ideal(const QuadRing& R, const std::function<void(const IdealDesc&)>& fn);
/// Descriptor at a given position of the enumeration order.
IdealDesc nth_ideal(const QuadRing& R, cpp_int index);

// ---------------------------------------------------------------------------
// K-submodules of K^2 in canonical staircase form, used for membership tests
// and as the brute-force oracle's normal form.  Rows: (pi^a, c) and (0, pi^b)
// with c reduced mod pi^b; a = b = nil encodes the zero module, and a missing
// pivot is likewise encoded as nil.
// ---------------------------------------------------------------------------

using ModuleRow = std::array<ChainElem, 2>;

struct CanonicalModule {
  int a = 0, b = 0;
  ChainElem c;
};

CanonicalModule canonicalize_rows(const ChainRing& K, std::vector<ModuleRow> rows);
bool module_member(const ChainRing& K, const CanonicalModule& M, const ModuleRow& v);
long long module_size_logp(const ChainRing& K, const CanonicalModule& M);
std::vector<coeff_t> module_fingerprint(const ChainRing& K, const CanonicalModule& M);

/// theta^{-1} image of the ideal as a K-submodule of K^2 (rows from the
/// generators and their u-multiples).
CanonicalModule ideal_module(const QuadRing& R, const IdealDesc& d);

bool membership(const QuadRing& R, const IdealDesc& d, const QuadElem& x);
/// Fast path: descriptor equality (canonical by the classification).
bool ideal_equal(const IdealDesc& a, const IdealDesc& b);
/// Slow validation path: mutual membership of generators.
bool ideal_equal_slow(const QuadRing& R, const IdealDesc& a, const IdealDesc& b);

}  // namespace chaincode
