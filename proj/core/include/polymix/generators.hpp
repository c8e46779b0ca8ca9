#pragma once

#include <cstdint>
#include <utility>

#include "polymix/polytope.hpp"
#include "polymix/rng.hpp"
#include "polymix/toric.hpp"

namespace polymix {

/// Deterministic instance recipe: the same spec always produces the same
/// geometry, and the seed is folded into every report digest.
struct InstanceSpec {
  uint64_t seed = 0;
  int dim = 2;
  int vertex_budget = 6;
  int coordinate_height = 16;  // max numerator/denominator magnitude
};

Rat random_rat(SplitMix64& rng, int height);
Rat random_positive_rat(SplitMix64& rng, int height);
RatVec random_point(SplitMix64& rng, int dim, int height);
IntVec random_primitive_direction(SplitMix64& rng, int dim, int height);

/// Hull of vertex_budget random points; may be lower-dimensional.
Polytope random_polytope(SplitMix64& rng, const InstanceSpec& spec);

/// Retries until the hull is full-dimensional.
Polytope random_fulldim_polytope(SplitMix64& rng, const InstanceSpec& spec);

/// Random full-dimensional Newton polytope presented as rays/coefficients
/// (the facet data of a random polytope).
ToricData random_toric_ambient(SplitMix64& rng, const InstanceSpec& spec);

/// Hull of random convex combinations of the outer body's vertices; contained
/// in outer by construction.
Polytope random_subbody(SplitMix64& rng, const Polytope& outer, int budget);
Polytope random_fulldim_subbody(SplitMix64& rng, const Polytope& outer, int budget);

/// Nested pair (T, S) with body(T) inside body(S) inside the Newton polytope.
std::pair<NewtonBody, NewtonBody> random_nested_pair(const InstanceSpec& spec,
                                                     const ToricData& ambient);

}  // namespace polymix
