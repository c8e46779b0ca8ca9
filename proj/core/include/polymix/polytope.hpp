#pragma once

#include <optional>
#include <vector>

#include "polymix/polytope_types.hpp"
#include "polymix/rat.hpp"
#include "polymix/unimodular.hpp"

namespace polymix {

class Polytope;

namespace detail {
Polytope assemble(int ambient_dim, int intrinsic_dim, std::vector<RatVec> vertices,
                  std::vector<Halfspace> halfspaces, Rat volume);
}

/// Compact convex polytope with exact rational data. Canonical form: the
/// vertex list holds exactly the extreme points in lexicographic order, and
/// the halfspace list holds the facet inequalities (plus a pair of opposite
/// halfspaces per affine-hull equation when the body is lower-dimensional).
/// Immutable after construction; all operations below are pure.
class Polytope {
 public:
  int ambient_dim() const { return ambient_dim_; }
  int intrinsic_dim() const { return intrinsic_dim_; }
  bool full_dim() const { return intrinsic_dim_ == ambient_dim_; }
  bool is_point() const { return vertices_.size() == 1; }

  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

  /// Exact Euclidean volume; zero for lower-dimensional bodies.
  const Rat& volume() const { return volume_; }

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend Polytope detail::assemble(int, int, std::vector<RatVec>, std::vector<Halfspace>, Rat);
  Polytope() = default;

  int ambient_dim_ = 0;
  int intrinsic_dim_ = 0;
  std::vector<RatVec> vertices_;
  std::vector<Halfspace> halfspaces_;
  Rat volume_;
};

/// Convex hull of a point cloud. Interior points are dropped;
/// lower-dimensional hulls are allowed.
Polytope make_polytope(const std::vector<RatVec>& points);

/// Bounded nonempty intersection of halfspaces. Throws EmptyRegion or
/// UnboundedRegion otherwise.
Polytope from_halfspaces(const std::vector<Halfspace>& halfspaces, int dim);

Rat support_value(const Polytope& p, const RatVec& u);
Rat support_value(const Polytope& p, const IntVec& u);

/// Face where the support value in direction u is attained (u != 0).
Polytope face(const Polytope& p, const RatVec& u);
Polytope face(const Polytope& p, const IntVec& u);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// {lambda x + shift : x in p}, lambda >= 0.
Polytope affine_image(const Polytope& p, const Rat& lambda, const RatVec& shift);
Polytope translate(const Polytope& p, const RatVec& shift);
Polytope dilate(const Polytope& p, const Rat& lambda);

/// Image under an integer linear map (rows of `matrix`).
Polytope linear_image(const std::vector<IntVec>& matrix, const Polytope& p);

bool contains_point(const Polytope& p, const RatVec& x);
bool contains_body(const Polytope& outer, const Polytope& inner);

std::optional<Polytope> intersect_halfspace(const Polytope& p, const Halfspace& h);

/// Lattice-normalized slice {y : <x,u> = t section of p written in quotient
/// coordinates}. u must be primitive. The empty slice is a regular outcome.
std::optional<Polytope> lattice_slice(const Polytope& p, const IntVec& u, const Rat& t);

/// Interval [min, max] of <x, u> over p.
std::pair<Rat, Rat> support_range(const Polytope& p, const IntVec& u);

}  // namespace polymix
