#pragma once

#include "jacsym/dependence.hpp"
#include "jacsym/pattern.hpp"
#include "jacsym/polymap.hpp"

#include <json.hpp>

#include <string>

namespace jacsym {

using Json = nlohmann::ordered_json;

// Scalar <-> "a|b|c|d" with each part "p" or "p/q".
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// Poly <-> array of term objects {"c": scalar string, "e": [e1..en]};
// the zero polynomial is the empty array.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, int arity);
/// Arity read from the first term; `fallback_arity` used for the empty array.
Poly poly_from_json_infer(const Json& j, int fallback_arity);

Json map_to_json(const PolyMap& f);
PolyMap map_from_json(const Json& j);

Json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const Json& j);

Json scalar_matrix_to_json(const ScalarMatrix& m);
ScalarMatrix scalar_matrix_from_json(const Json& j);

// Raw patterns: {"dimension": N, "constraints": [{"map", "sign", "region"?}], "name"?}.
Json pattern_to_json(const Pattern& p);
Pattern pattern_from_json(const Json& j);

Json witnesses_to_json(const std::vector<DependenceWitness>& ws);
Json planar_form_to_json(const PlanarHessianForm& f);

/// FNV-1a hash of the canonical JSON dump, as fixed-width hex.
std::string digest(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace jacsym
