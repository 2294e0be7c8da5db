#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "chaincode/code.hpp"

namespace chaincode {

/// Expansion of an ambient element in the basis pi^i u^s (pi = x^n - delta0
/// in the primal ring, pihat = x^n - delta0^{-1} in the dual ring):
/// result[s][i] is the coefficient polynomial in x of degree < n.
std::vector<std::vector<Poly>> pi_basis(const CodeSystem& S, const AmbientElem& a);

/// Human-readable form of an ambient element as a sum of c * sym^i * u^s
/// terms, e.g. "3*pi^4*u^2 + pi^3*u^3".  sym is "pi" or "pih" by ring.
std::string pretty_ambient(const CodeSystem& S, const AmbientElem& a);
std::string pretty_gens(const CodeSystem& S, const std::vector<AmbientElem>& gens);

/// One row of the length-5 classification table over F_5[u]/<u^4> with
/// gamma = 2 + 3u^2 (431 rows in 24 case groups).
struct Table5Row {
  int group = 0;           // 0..23
  std::string group_name;  // i-1 .. iv-3-5
  std::string params;      // local descriptor and (l0, l1, t) split
  std::string gens;
  long long size_logp = 0;
  std::string dual_gens;
  bool verified = false;
};

extern const std::array<int, 24> kTable5GroupSizes;
extern const std::array<const char*, 24> kTable5GroupNames;

/// All 431 rows, grouped by case in the documented order; every row has
/// passed the generator/dual orthogonality check before emission.
std::vector<Table5Row> table5_rows(std::uint64_t seed);

/// Renders rows: format is "text", "csv" or "json"; max_rows < 0 means all.
void write_table5(std::ostream& out, const std::vector<Table5Row>& rows,
                  const std::string& format, long long max_rows);

}  // namespace chaincode
