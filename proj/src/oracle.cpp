#include "chaincode/oracle.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace chaincode {

namespace {

std::uint64_t ring_card(const ChainRing& K) {
  long long logp = K.size_logp();
  std::uint64_t card = 1;
  for (long long i = 0; i < logp; ++i) {
    if (card > kAmbientScanGuard) return card;  // already beyond any guard
    card *= static_cast<std::uint64_t>(K.field().p());
  }
  return card;
}

// residues of K/<pi^len> as elements of K (digits >= len zero)
std::vector<ChainElem> quotient_residues(const ChainRing& K, int len, bool pi_multiples) {
  const Fq& F = K.field();
  std::uint64_t q = static_cast<std::uint64_t>(F.order());
  int lo = pi_multiples ? 1 : 0;
  int free_digits = std::max(len - lo, 0);
  std::uint64_t total = 1;
  for (int i = 0; i < free_digits * K.d(); ++i) total *= q;
  std::vector<ChainElem> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    ChainElem e = K.zero();
    std::uint64_t rem = idx;
    for (int g = lo; g < len; ++g) {
      Poly t;
      t.c.reserve(K.d());
      for (int i = 0; i < K.d(); ++i) {
        t.c.push_back(F.element_at(static_cast<std::int64_t>(rem % q)));
        rem /= q;
      }
      e.d[g] = poly_trim(F, std::move(t));
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

BfModules bf_submodules(const ChainRing& K) {
  if (ring_card(K) > kRingScanGuard)
    throw TooLarge("bf_submodules: |K| exceeds the ring scan guard (3^6)");

  const int nil = K.nil();
  BfModules out;

  // closed form: sum_{i=0}^{nil} (2i+1) p^{md(nil-i)}
  {
    cpp_int pmd = boost::multiprecision::pow(cpp_int(K.field().p()),
                                             K.field().m() * K.d());
    out.expected_count = 0;
    for (int i = 0; i <= nil; ++i)
      out.expected_count +=
          cpp_int(2 * i + 1) * boost::multiprecision::pow(pmd, nil - i);
  }

  auto add = [&](std::vector<ModuleRow> rows) {
    out.modules.push_back(canonicalize_rows(K, std::move(rows)));
  };

  // the nine generator-matrix shapes of rank <= 2 over a chain ring
  // (i)  (1, a), a in K
  for (const auto& a : quotient_residues(K, nil, false))
    add({ModuleRow{K.one(), a}});
  // (ii) (pi^s, pi^s a), a in K/<pi^{nil-s}>, 1 <= s <= nil-1
  for (int s = 1; s <= nil - 1; ++s)
    for (const auto& a : quotient_residues(K, nil - s, false))
      add({ModuleRow{K.pi_pow(s), K.mul_pi_pow(a, s)}});
  // (iii) (pi b, 1), b in K/<pi^{nil-1}>
  for (const auto& b : quotient_residues(K, nil - 1, false))
    add({ModuleRow{K.mul_pi_pow(b, 1), K.one()}});
  // (iv) (pi^{s+1} b, pi^s), b in K/<pi^{nil-1-s}>, 1 <= s <= nil-1
  for (int s = 1; s <= nil - 1; ++s)
    for (const auto& b : quotient_residues(K, nil - 1 - s, false))
      add({ModuleRow{K.mul_pi_pow(b, s + 1), K.pi_pow(s)}});
  // (v) diag(pi^s, pi^s), 0 <= s <= nil
  for (int s = 0; s <= nil; ++s)
    add({ModuleRow{K.pi_pow(s), K.zero()}, ModuleRow{K.zero(), K.pi_pow(s)}});
  // (vi) [[1, c], [0, pi^t]], c in K/<pi^t>, 1 <= t <= nil-1
  for (int t = 1; t <= nil - 1; ++t)
    for (const auto& c : quotient_residues(K, t, false))
      add({ModuleRow{K.one(), c}, ModuleRow{K.zero(), K.pi_pow(t)}});
  // (vii) [[pi^s, pi^s c], [0, pi^{s+t}]], c in K/<pi^t>,
  //       1 <= t <= nil-1-s, 1 <= s <= nil-2
  for (int s = 1; s <= nil - 2; ++s)
    for (int t = 1; t <= nil - 1 - s; ++t)
      for (const auto& c : quotient_residues(K, t, false))
        add({ModuleRow{K.pi_pow(s), K.mul_pi_pow(c, s)},
             ModuleRow{K.zero(), K.pi_pow(s + t)}});
  // (viii) [[c, 1], [pi^t, 0]], c in pi(K/<pi^t>), 1 <= t <= nil-1
  for (int t = 1; t <= nil - 1; ++t)
    for (const auto& c : quotient_residues(K, t, true))
      add({ModuleRow{c, K.one()}, ModuleRow{K.pi_pow(t), K.zero()}});
  // (ix) [[pi^s c, pi^s], [pi^{s+t}, 0]], c in pi(K/<pi^t>),
  //      1 <= t <= nil-1-s, 1 <= s <= nil-2
  for (int s = 1; s <= nil - 2; ++s)
    for (int t = 1; t <= nil - 1 - s; ++t)
      for (const auto& c : quotient_residues(K, t, true))
        add({ModuleRow{K.mul_pi_pow(c, s), K.pi_pow(s)},
             ModuleRow{K.pi_pow(s + t), K.zero()}});

  // verify pairwise distinctness via canonical fingerprints
  std::set<std::vector<coeff_t>> seen;
  for (const auto& M : out.modules)
    if (!seen.insert(module_fingerprint(K, M)).second)
      throw InternalError("bf_submodules produced a duplicate module");
  if (cpp_int(out.modules.size()) != out.expected_count)
    throw InternalError("bf_submodules count disagrees with the closed form");
  return out;
}

std::vector<CanonicalModule> bf_condition4_filter(const QuadRing& R) {
  const ChainRing& K = R.base();
  BfModules all = bf_submodules(K);
  std::vector<CanonicalModule> survivors;
  const int nil = K.nil();
  for (const auto& M : all.modules) {
    // generator rows of the canonical module
    std::vector<ModuleRow> rows;
    if (M.a < nil) rows.push_back({K.pi_pow(M.a), M.c});
    if (M.b < nil) rows.push_back({K.zero(), K.pi_pow(M.b)});
    bool ok = true;
    for (const auto& r : rows) {
      // u-image of (a0, a1) is (u_sq * a1, a0); checking generators suffices
      ModuleRow img{K.mul(R.u_sq(), r[1]), r[0]};
      if (!module_member(K, M, img)) {
        ok = false;
        break;
      }
    }
    if (ok) survivors.push_back(M);
  }
  return survivors;
}

std::uint64_t pack_word(const CodeSystem& S, const AmbientElem& a) {
  const std::uint64_t p = static_cast<std::uint64_t>(S.P.p);
  std::uint64_t key = 0;
  for (const auto& r : a.c)
    for (const auto& f : r.d)
      for (coeff_t c : f.c) key = key * p + c;
  return key;
}

ElementSet bf_codewords(const CodeSystem& S, const std::vector<AmbientElem>& gens,
                        bool dual_ring) {
  const AmbientRing& ring = dual_ring ? S.dual : S.primal;
  const Fq& F = S.P.F;

  // multiplicative orbit of the generators under x, u and the field generator
  std::vector<AmbientElem> orbit;
  {
    std::unordered_set<std::uint64_t> seen;
    std::vector<AmbientElem> work;
    for (const auto& g : gens) {
      ring.check(g);
      if (ring.is_zero(g)) continue;
      if (seen.insert(pack_word(S, g)).second) {
        orbit.push_back(g);
        work.push_back(g);
      }
    }
    AmbientElem x = ring.x_pow(1);
    RElem u = S.R.monomial(F.one(), 1);
    while (!work.empty()) {
      AmbientElem v = std::move(work.back());
      work.pop_back();
      std::vector<AmbientElem> next;
      next.push_back(ring.mul(v, x));
      next.push_back(ring.scale(u, v));
      if (S.P.m > 1) next.push_back(ring.scale(S.R.from_field(F.gen()), v));
      for (auto& w : next) {
        if (ring.is_zero(w)) continue;
        if (seen.insert(pack_word(S, w)).second) {
          orbit.push_back(w);
          work.push_back(std::move(w));
        }
      }
    }
  }

  // additive closure from 0: a worklist with a hash set of packed words
  std::unordered_set<std::uint64_t> set;
  std::vector<AmbientElem> work;
  AmbientElem zero = ring.zero();
  set.insert(pack_word(S, zero));
  work.push_back(zero);
  while (!work.empty()) {
    AmbientElem v = std::move(work.back());
    work.pop_back();
    for (const auto& w : orbit) {
      AmbientElem s = ring.add(v, w);
      std::uint64_t key = pack_word(S, s);
      if (set.insert(key).second) {
        if (set.size() > kAmbientScanGuard)
          throw TooLarge("bf_codewords: closure exceeds the ambient scan guard (3^12)");
        work.push_back(std::move(s));
      }
    }
  }

  ElementSet out;
  out.keys.assign(set.begin(), set.end());
  std::sort(out.keys.begin(), out.keys.end());
  return out;
}

ElementSet bf_orthogonal_complement(const CodeSystem& S,
                                    const std::vector<AmbientElem>& primal_gens) {
  // total ambient size must stay under the scan guard
  long long dim = static_cast<long long>(S.P.N) * 2 * S.P.lambda * S.P.m;
  std::uint64_t total = 1;
  for (long long i = 0; i < dim; ++i) {
    total *= static_cast<std::uint64_t>(S.P.p);
    if (total > kAmbientScanGuard)
      throw TooLarge("bf_orthogonal_complement: |R|^N exceeds the scan guard (3^12)");
  }

  // all x-shifts of the generators; orthogonality to these is equivalent to
  // orthogonality to the whole code, by R-bilinearity of the pairing
  std::vector<AmbientElem> targets;
  AmbientElem x = S.primal.x_pow(1);
  for (const auto& g : primal_gens) {
    S.primal.check(g);
    AmbientElem shifted = g;
    for (int i = 0; i < S.P.N; ++i) {
      if (!S.primal.is_zero(shifted)) targets.push_back(shifted);
      shifted = S.primal.mul(shifted, x);
    }
  }

  const Fq& F = S.P.F;
  ElementSet out;
  AmbientElem cand = S.dual.zero();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    // unpack idx into the candidate word (digit order matches pack_word)
    std::uint64_t rem = idx;
    for (int i = S.P.N; i-- > 0;)
      for (int s = 2 * S.P.lambda; s-- > 0;)
        for (int b = S.P.m; b-- > 0;) {
          cand.c[i].d[s].c[b] = static_cast<coeff_t>(rem % S.P.p);
          rem /= static_cast<std::uint64_t>(S.P.p);
        }
    bool ortho = true;
    for (const auto& t : targets) {
      if (!S.R.is_zero(inner_product(S.R, cand, t))) {
        ortho = false;
        break;
      }
    }
    if (ortho) out.keys.push_back(pack_word(S, cand));
  }
  std::sort(out.keys.begin(), out.keys.end());
  return out;
}

}  // namespace chaincode
