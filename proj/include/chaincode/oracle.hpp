#pragma once

#include <cstdint>
#include <vector>

#include "chaincode/code.hpp"

namespace chaincode {

/// Hard tractability guards: deterministic pass/fail, no timeouts.
inline constexpr std::uint64_t kRingScanGuard = 729;       // 3^6 elements
inline constexpr std::uint64_t kAmbientScanGuard = 531441; // 3^12 elements

/// All K-submodules of K^2, enumerated shape by shape and returned in
/// canonical staircase form.  Throws TooLarge when |K| exceeds the ring
/// scan guard.  Pairwise distinctness is verified via the canonical forms.
struct BfModules {
  cpp_int expected_count;  // closed-form count
  std::vector<CanonicalModule> modules;
};
BfModules bf_submodules(const ChainRing& K);

/// Submodules surviving the u-closure condition
/// (omega pi^{p^k} a1, a0) in S for all (a0, a1) in S.
std::vector<CanonicalModule> bf_condition4_filter(const QuadRing& R);

/// Explicit codeword sets over R^N with set semantics: sorted, deduplicated
/// packed words.  Valid only under the ambient scan guard.
struct ElementSet {
  std::vector<std::uint64_t> keys;
  bool operator==(const ElementSet& o) const { return keys == o.keys; }
  std::size_t size() const { return keys.size(); }
};

std::uint64_t pack_word(const CodeSystem& S, const AmbientElem& a);

/// R[x]-module closure of the generators (addition, R-scalars, mult by x).
/// The generators' ring tag decides whether x acts with gamma or gamma^{-1}.
/// Throws TooLarge if the closure would exceed the ambient scan guard.
ElementSet bf_codewords(const CodeSystem& S, const std::vector<AmbientElem>& gens,
                        bool dual_ring);

/// Exact Euclidean orthogonal complement of the code generated by the given
/// primal generators: scans every word of R^N (guarded) and keeps those
/// orthogonal to all x-shifts of the generators.
ElementSet bf_orthogonal_complement(const CodeSystem& S,
                                    const std::vector<AmbientElem>& primal_gens);

}  // namespace chaincode
