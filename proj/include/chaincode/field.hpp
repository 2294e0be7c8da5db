#pragma once

#include <cstdint>
#include <vector>

#include "chaincode/errors.hpp"

namespace chaincode {

using coeff_t = std::uint32_t;

/// Element of F_{p^m}: coordinates in the power basis of the field modulus,
/// index i = coefficient of y^i.  Always fully reduced mod p.
struct FieldElem {
  std::vector<coeff_t> c;
  bool operator==(const FieldElem& o) const { return c == o.c; }
};

/// F_{p^m} = F_p[y]/<modulus> for an odd prime p and a monic irreducible
/// modulus of degree m.  Immutable after construction; every operation is a
/// pure function of its inputs, so contexts can be shared across threads.
class Fq {
 public:
  /// Uses the lexicographically smallest monic irreducible of degree m
  /// (coefficient tuples compared from the constant term up).
  Fq(std::int64_t p, int m);
  /// User-supplied modulus, verified irreducible.
  Fq(std::int64_t p, int m, const std::vector<std::int64_t>& modulus);

  std::int64_t p() const { return p_; }
  int m() const { return m_; }
  std::int64_t order() const { return q_; }  // p^m
  const std::vector<coeff_t>& modulus() const { return mod_; }
  bool same(const Fq& o) const { return p_ == o.p_ && mod_ == o.mod_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem gen() const;  // the class of y
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_coeffs(const std::vector<std::int64_t>& v) const;
  /// Element whose coordinates are the base-p digits of index (0 <= index < p^m).
  FieldElem element_at(std::int64_t index) const;
  std::int64_t index_of(const FieldElem& a) const;

  bool is_zero(const FieldElem& a) const;
  bool is_one(const FieldElem& a) const;
  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem inv(const FieldElem& a) const;  // throws DivisionByZero
  /// a^e; negative e allowed for nonzero a.
  FieldElem pow(const FieldElem& a, std::int64_t e) const;

  /// The unique delta0 with delta0^{p^k} = delta, computed as
  /// delta^((p^k)^{-1} mod (p^m - 1)).  Throws ZeroInput on delta = 0.
  FieldElem pk_root(const FieldElem& delta, int k) const;

 private:
  void check_elem(const FieldElem& a) const;

  std::int64_t p_ = 0;
  int m_ = 0;
  std::int64_t q_ = 0;
  std::vector<coeff_t> mod_;  // monic, size m+1
};

}  // namespace chaincode
