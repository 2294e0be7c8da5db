#include "chaincode/table5.hpp"

#include <sstream>

#include <json.hpp>

#include "chaincode/util.hpp"

namespace chaincode {

std::vector<std::vector<Poly>> pi_basis(const CodeSystem& S, const AmbientElem& a) {
  const Fq& F = S.P.F;
  const bool dual = a.ring_id == 1;
  FieldElem root = dual ? F.inv(S.P.delta0) : S.P.delta0;
  Poly pi = xn_minus(F, S.P.n, root);
  std::vector<std::vector<Poly>> out(2 * S.P.lambda);
  for (int s = 0; s < 2 * S.P.lambda; ++s) {
    Poly as;
    as.c.resize(S.P.N, F.zero());
    for (int i = 0; i < S.P.N; ++i) as.c[i] = a.c[i].d[s];
    as = poly_trim(F, std::move(as));
    std::vector<Poly>& digits = out[s];
    while (!poly_is_zero(as)) {
      auto [q, r] = poly_divmod(F, as, pi);
      digits.push_back(std::move(r));
      as = std::move(q);
    }
    digits.resize(static_cast<std::size_t>(S.P.p_pow_k), poly_zero());
  }
  return out;
}

namespace {

std::string coeff_string(const Fq& F, const Poly& c) {
  // polynomial in x, compact: "2", "x", "3x", "1+2x", ...
  if (poly_is_zero(c)) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= poly_deg(c); ++i) {
    const FieldElem& e = c.c[i];
    if (F.is_zero(e)) continue;
    if (!first) os << "+";
    first = false;
    std::string val;
    if (F.m() == 1) {
      val = std::to_string(e.c[0]);
    } else {
      std::ostringstream vs;
      vs << "(";
      bool vfirst = true;
      for (int b = 0; b < F.m(); ++b) {
        if (e.c[b] == 0) continue;
        if (!vfirst) vs << "+";
        vfirst = false;
        if (b == 0)
          vs << e.c[b];
        else {
          if (e.c[b] != 1) vs << e.c[b] << "*";
          vs << "y";
          if (b > 1) vs << "^" << b;
        }
      }
      vs << ")";
      val = vs.str();
    }
    if (i == 0) {
      os << val;
    } else {
      if (val != "1") os << val << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace

std::string pretty_ambient(const CodeSystem& S, const AmbientElem& a) {
  const Fq& F = S.P.F;
  const char* sym = (a.ring_id == 1) ? "pih" : "pi";
  std::vector<std::vector<Poly>> basis = pi_basis(S, a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t s = 0; s < basis.size(); ++s) {
    for (std::size_t i = 0; i < basis[s].size(); ++i) {
      const Poly& c = basis[s][i];
      if (poly_is_zero(c)) continue;
      if (!first) os << " + ";
      first = false;
      std::string cs = coeff_string(F, c);
      bool needs_paren = cs.find('+') != std::string::npos;
      bool has_monomial = (i > 0) || (s > 0);
      bool wrote_coeff = false;
      if (cs != "1" || !has_monomial) {
        if (needs_paren && has_monomial)
          os << "(" << cs << ")";
        else
          os << cs;
        wrote_coeff = true;
      }
      if (i > 0) {
        if (wrote_coeff) os << "*";
        os << sym;
        if (i > 1) os << "^" << i;
        wrote_coeff = true;
      }
      if (s > 0) {
        if (wrote_coeff) os << "*";
        os << "u";
        if (s > 1) os << "^" << s;
      }
    }
  }
  if (first) return "0";
  return os.str();
}

std::string pretty_gens(const CodeSystem& S, const std::vector<AmbientElem>& gens) {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << " ; ";
    os << pretty_ambient(S, gens[i]);
  }
  os << ">";
  return os.str();
}

const std::array<int, 24> kTable5GroupSizes = {1,  5,  25, 25, 5,  1,  10, 1,
                                               5,  25, 25, 5,  3,  1,  1,  3,
                                               5,  15, 15, 75, 25, 40, 55, 60};

const std::array<const char*, 24> kTable5GroupNames = {
    "i-1",    "i-2",    "i-3-1",  "i-3-2",  "i-3-3",  "ii-1",   "ii-2",
    "iii-1",  "iii-2",  "iii-3-1", "iii-3-2", "iii-3-3", "iv-1-1", "iv-1-2",
    "iv-1-3", "iv-1-4", "iv-2-1", "iv-2-2", "iv-2-3", "iv-3-1", "iv-3-2",
    "iv-3-3", "iv-3-4", "iv-3-5"};

namespace {

// group index within the fixed (p, m, n, k, lambda) = (5, 1, 1, 1, 2) table
int table5_group(const SpecialEntry& e) {
  const IdealDesc& d = e.desc.locals[0];
  switch (d.kase) {
    case IdealCase::I1: return 0;
    case IdealCase::I2: return 1;
    case IdealCase::I3: return 2 + e.l0;  // l0 in {0, 1, 2}
    case IdealCase::II: return (d.s == 10) ? 5 : 6;
    case IdealCase::III1: return 7;
    case IdealCase::III2: return 8;
    case IdealCase::III3: return 9 + (5 - d.t);  // t = 5, 4, 3
    case IdealCase::IV1:
      if (d.s <= 3) return 12;
      if (d.s == 4) return 13;
      if (d.s == 5) return 14;
      return 15;
    case IdealCase::IV2:
      if (d.s == 4) return 16;
      if (d.s <= 3) return 17;
      return 18;
    case IdealCase::IV3:
      if (e.label == "iv-3-1") return 19;
      if (e.label == "iv-3-2") return 20;
      if (e.label == "iv-3-3") return 21;
      if (e.label == "iv-3-4") return 22;
      return 23;
  }
  throw InternalError("unclassified table row");
}

std::string param_string(const SpecialEntry& e) {
  const IdealDesc& d = e.desc.locals[0];
  std::ostringstream os;
  os << "local=" << ideal_case_name(d.kase);
  switch (d.kase) {
    case IdealCase::I3:
    case IdealCase::IV3:
      os << "(s=" << d.s << ",t=" << d.t << ")";
      break;
    case IdealCase::II:
    case IdealCase::IV1:
    case IdealCase::IV2:
      os << "(s=" << d.s << ")";
      break;
    case IdealCase::III3:
      os << "(t=" << d.t << ")";
      break;
    default:
      break;
  }
  if (e.label != "i-1" && e.label != "i-2" && e.label != "iii-1" &&
      e.label != "iii-2") {
    os << " l0=" << e.l0 << " l1=" << e.l1;
    if (e.t > 0) os << " t=" << e.t;
  }
  return os.str();
}

}  // namespace

std::vector<Table5Row> table5_rows(std::uint64_t seed) {
  CodeSystem S = make_system(5, 1, 1, 1, 2, {2}, {3}, seed);

  std::vector<SpecialEntry> entries;
  specialize_n1(S, [&](const SpecialEntry& e) { entries.push_back(e); });

  std::vector<Table5Row> rows(entries.size());
  parallel_for(entries.size(), [&](std::size_t i) {
    const SpecialEntry& e = entries[i];
    Table5Row r;
    r.group = table5_group(e);
    r.group_name = kTable5GroupNames[static_cast<std::size_t>(r.group)];
    r.params = param_string(e);
    r.gens = pretty_gens(S, e.gens);
    r.size_logp = e.size_logp;
    r.dual_gens = pretty_gens(S, e.dual_gens);
    // re-check orthogonality row by row before emission
    r.verified = orthogonal_generators(S, e.gens, e.dual_gens);
    rows[i] = std::move(r);
  });

  // group the rows in the documented order, keeping the enumeration order
  // (case, s, t, residue-lex) within each group
  std::vector<Table5Row> grouped;
  grouped.reserve(rows.size());
  for (int g = 0; g < 24; ++g)
    for (const auto& r : rows)
      if (r.group == g) grouped.push_back(r);
  if (grouped.size() != rows.size()) throw InternalError("table grouping lost rows");
  return grouped;
}

void write_table5(std::ostream& out, const std::vector<Table5Row>& rows,
                  const std::string& format, long long max_rows) {
  long long limit = (max_rows < 0) ? static_cast<long long>(rows.size()) : max_rows;
  if (format == "csv") {
    out << "case,params,generators,size_log_p,dual_generators,verified\n";
    long long n = 0;
    for (const auto& r : rows) {
      if (n++ >= limit) break;
      out << r.group_name << "," << r.params << "," << r.gens << ","
          << r.size_logp << "," << r.dual_gens << ","
          << (r.verified ? "yes" : "no") << "\n";
    }
    return;
  }
  if (format == "json") {
    long long n = 0;
    for (const auto& r : rows) {
      if (n++ >= limit) break;
      nlohmann::json j{{"case", r.group_name},     {"params", r.params},
                       {"generators", r.gens},     {"size_log_p", r.size_logp},
                       {"dual_generators", r.dual_gens}, {"verified", r.verified}};
      out << j.dump() << "\n";
    }
    return;
  }
  // text
  out << "# all 431 (2+3u^2)-constacyclic codes of length 5 over F_5[u]/<u^4>\n";
  out << "# gamma = 2+3u^2, gamma^{-1} = 3+3u^2, delta0 = 2, theta = 3, "
         "-theta^{-1} = 3\n";
  out << "# pi = x-2 in the primal ring; pih = x-3 in the dual ring "
         "F_5[u]/<u^4>[x]/<x^5-(3+3u^2)>\n";
  out << "# known erratum in the source table: the i-1 dual code is <u ; pih>, "
         "not <u ; pi>\n";
  out << "# row order inside each group: s ascending, then t, then residue "
         "digits lexicographic\n";
  out << "# columns: case | params | C | size log5|C| | C-perp | verified\n";
  int current = -1;
  long long n = 0;
  for (const auto& r : rows) {
    if (n >= limit) break;
    if (r.group != current) {
      current = r.group;
      int count = 0;
      for (const auto& q : rows)
        if (q.group == current) ++count;
      out << "== " << r.group_name << " (" << count << " codes) ==\n";
    }
    out << r.group_name << " | " << r.params << " | " << r.gens << " | 5^"
        << r.size_logp << " | " << r.dual_gens << " | "
        << (r.verified ? "ok" : "FAIL") << "\n";
    ++n;
  }
}

}  // namespace chaincode
