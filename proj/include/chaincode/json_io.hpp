#pragma once

#include <json.hpp>

#include "chaincode/code.hpp"

namespace chaincode {

using json = nlohmann::json;

/// Field elements serialize as little-endian coefficient lists of integers,
/// e.g. the F_9 element a + b*y becomes [a, b].
json field_to_json(const FieldElem& a);
FieldElem field_from_json(const Fq& F, const json& j);

/// Polynomials serialize as lists of serialized field elements, ascending
/// degree.
json poly_to_json(const Poly& a);
Poly poly_from_json(const Fq& F, const json& j);

/// Tagged record: {case, s?, t?, b?, h_digits?}.
json ideal_to_json(const IdealDesc& d);
IdealDesc ideal_from_json(const Fq& F, const json& j);

/// {params: {p, m, n, k, lambda, delta, alpha, field_modulus},
///  locals: [one IdealDesc per factor in canonical factor order]}.
json code_to_json(const CodeSystem& S, const CodeDesc& d);
/// Rebuilds the system from the params block (factorization is canonical, so
/// the factor order is reproducible) and parses the locals.
std::pair<CodeSystem, CodeDesc> code_from_json(const json& j, std::uint64_t seed);

/// Generator matrix: N rows of 2*lambda u-digits, each a field element.
json generator_to_json(const CodeSystem& S, const AmbientElem& a);
json generators_to_json(const CodeSystem& S, const std::vector<AmbientElem>& gens);

}  // namespace chaincode
