#pragma once

#include <vector>

#include "polymix/polytope_types.hpp"
#include "polymix/rat.hpp"

namespace polymix::detail {

struct VertexEnumeration {
  bool empty = false;
  bool unbounded = false;
  IntVec direction;               // one recession direction when unbounded
  std::vector<RatVec> vertices;   // extreme points (unnormalized order)
};

/// Vertex enumeration for {x : <x, h.normal> >= h.offset for all h} by the
/// double description method on the homogenization cone. Empty and unbounded
/// systems are reported, not thrown.
VertexEnumeration enumerate_vertices(const std::vector<Halfspace>& halfspaces, int dim);

}  // namespace polymix::detail
