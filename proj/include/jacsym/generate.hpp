#pragma once

#include "jacsym/pattern.hpp"
#include "jacsym/rng.hpp"

#include <cstdint>
#include <set>

namespace jacsym {

/// Random polynomial with term degrees drawn from `degrees`, at most
/// max_terms terms, nonzero small rational coefficients.
Poly random_poly(Rng& rng, int arity, const std::set<int>& degrees, int max_terms);

/// Same over Q(i) (for realification inputs).
Poly random_gauss_poly(Rng& rng, int arity, const std::set<int>& degrees, int max_terms);

/// Random H with the given component count; term degrees within `degrees`.
PolyMap random_h(Rng& rng, int n, const std::set<int>& degrees, int max_terms);

/// Strictly triangular H (component i only uses variables beyond i), so JH is
/// nilpotent and x + H is a Keller map.
PolyMap random_triangular_h(Rng& rng, int n, const std::set<int>& degrees, int max_terms);

/// Seeded instance of a symmetry class: returns H with
/// pattern_holds(jacobian(H), spec.pattern) and term degrees within the
/// degree set. Deterministic in (spec, seed).
PolyMap generate_instance(const InstanceSpec& spec, std::uint64_t seed);

}  // namespace jacsym
