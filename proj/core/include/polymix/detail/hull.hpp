#pragma once

#include <vector>

#include "polymix/polytope_types.hpp"
#include "polymix/rat.hpp"

namespace polymix::detail {

struct HullOutput {
  int ambient_dim = 0;
  int intrinsic_dim = 0;
  std::vector<RatVec> vertices;      // extreme points, lex sorted
  std::vector<Halfspace> halfspaces; // facet inequalities, plus equality pairs
                                     // spanning the affine hull when the body
                                     // is lower-dimensional; canonically sorted
  Rat volume;                        // ambient-dimensional volume
};

/// Exact convex hull by incremental insertion with simplicial boundary
/// facets. Coplanar degeneracies are resolved by merging facets that share a
/// supporting hyperplane; interior and non-extreme input points are dropped.
HullOutput convex_hull(std::vector<RatVec> points);

}  // namespace polymix::detail
