#include "chaincode/json_io.hpp"

namespace chaincode {

json field_to_json(const FieldElem& a) {
  json j = json::array();
  for (coeff_t c : a.c) j.push_back(c);
  return j;
}

FieldElem field_from_json(const Fq& F, const json& j) {
  if (!j.is_array()) throw InvalidInput("field element must be a JSON array");
  std::vector<std::int64_t> v;
  for (const auto& c : j) v.push_back(c.get<std::int64_t>());
  return F.from_coeffs(v);
}

json poly_to_json(const Poly& a) {
  json j = json::array();
  for (const auto& e : a.c) j.push_back(field_to_json(e));
  return j;
}

Poly poly_from_json(const Fq& F, const json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial must be a JSON array");
  Poly p;
  for (const auto& e : j) p.c.push_back(field_from_json(F, e));
  return poly_trim(F, std::move(p));
}

json ideal_to_json(const IdealDesc& d) {
  json j;
  j["case"] = ideal_case_name(d.kase);
  switch (d.kase) {
    case IdealCase::I1:
    case IdealCase::III1:
      break;
    case IdealCase::I2:
    case IdealCase::III2:
      j["b"] = poly_to_json(d.b);
      break;
    case IdealCase::I3:
      j["s"] = d.s;
      j["t"] = d.t;
      j["h_digits"] = json::array();
      for (const auto& t : d.h) j["h_digits"].push_back(poly_to_json(t));
      break;
    case IdealCase::II:
      j["s"] = d.s;
      break;
    case IdealCase::III3:
      j["t"] = d.t;
      j["h_digits"] = json::array();
      for (const auto& t : d.h) j["h_digits"].push_back(poly_to_json(t));
      break;
    case IdealCase::IV1:
      j["s"] = d.s;
      break;
    case IdealCase::IV2:
      j["s"] = d.s;
      j["b"] = poly_to_json(d.b);
      break;
    case IdealCase::IV3:
      j["s"] = d.s;
      j["t"] = d.t;
      j["h_digits"] = json::array();
      for (const auto& t : d.h) j["h_digits"].push_back(poly_to_json(t));
      break;
  }
  return j;
}

IdealDesc ideal_from_json(const Fq& F, const json& j) {
  IdealDesc d;
  d.kase = ideal_case_from_name(j.at("case").get<std::string>());
  if (j.contains("s")) d.s = j.at("s").get<int>();
  if (j.contains("t")) d.t = j.at("t").get<int>();
  if (j.contains("b")) d.b = poly_from_json(F, j.at("b"));
  if (j.contains("h_digits"))
    for (const auto& t : j.at("h_digits")) d.h.push_back(poly_from_json(F, t));
  return d;
}

json code_to_json(const CodeSystem& S, const CodeDesc& d) {
  json params;
  params["p"] = S.P.p;
  params["m"] = S.P.m;
  params["n"] = S.P.n;
  params["k"] = S.P.k;
  params["lambda"] = S.P.lambda;
  params["delta"] = field_to_json(S.P.delta);
  params["alpha"] = field_to_json(S.P.alpha);
  json mod = json::array();
  for (coeff_t c : S.P.F.modulus()) mod.push_back(c);
  params["field_modulus"] = mod;
  json locals = json::array();
  for (const auto& l : d.locals) locals.push_back(ideal_to_json(l));
  return json{{"params", params}, {"locals", locals}};
}

std::pair<CodeSystem, CodeDesc> code_from_json(const json& j, std::uint64_t seed) {
  const json& params = j.at("params");
  std::vector<std::int64_t> delta, alpha, modulus;
  for (const auto& c : params.at("delta")) delta.push_back(c.get<std::int64_t>());
  for (const auto& c : params.at("alpha")) alpha.push_back(c.get<std::int64_t>());
  const std::vector<std::int64_t>* modp = nullptr;
  if (params.contains("field_modulus")) {
    for (const auto& c : params.at("field_modulus"))
      modulus.push_back(c.get<std::int64_t>());
    modp = &modulus;
  }
  CodeSystem S = make_system(params.at("p").get<std::int64_t>(),
                             params.at("m").get<int>(), params.at("n").get<int>(),
                             params.at("k").get<int>(),
                             params.at("lambda").get<int>(), delta, alpha, seed,
                             modp);
  CodeDesc d;
  for (const auto& l : j.at("locals"))
    d.locals.push_back(ideal_from_json(S.P.F, l));
  validate_code(S, d);
  return {std::move(S), std::move(d)};
}

json generator_to_json(const CodeSystem& S, const AmbientElem& a) {
  json rows = json::array();
  for (int i = 0; i < S.P.N; ++i) {
    json digits = json::array();
    for (int s = 0; s < 2 * S.P.lambda; ++s)
      digits.push_back(field_to_json(a.c[i].d[s]));
    rows.push_back(digits);
  }
  return rows;
}

json generators_to_json(const CodeSystem& S, const std::vector<AmbientElem>& gens) {
  json j = json::array();
  for (const auto& g : gens) j.push_back(generator_to_json(S, g));
  return j;
}

}  // namespace chaincode
