#pragma once

#include <vector>

#include "polymix/polytope.hpp"
#include "polymix/report.hpp"

namespace polymix {

/// Toric divisor data: primitive rays u with rational coefficients a, one per
/// ray. Induces the Newton polytope {m : <m, u> >= -a for every ray}. Only
/// rays and coefficients matter here; no fan combinatorics is kept.
struct ToricData {
  int dim = 0;
  std::vector<IntVec> rays;
  std::vector<Rat> coeffs;
};

bool operator==(const ToricData& a, const ToricData& b);

/// Throws InvalidArgument on non-primitive or repeated rays, or mismatched
/// coefficient count.
void validate_toric(const ToricData& data);

/// Newton polytope of the divisor. Throws EmptyRegion / UnboundedRegion when
/// the ray system is infeasible or not big.
Polytope newton_polytope(const ToricData& data);

/// A convex body inside the Newton polytope of its ambient divisor,
/// representing a toric-invariant positive current up to singularity
/// equivalence.
struct NewtonBody {
  ToricData ambient;
  Polytope body;
};

/// Validates containment of the body in the Newton polytope.
NewtonBody make_newton_body(const ToricData& ambient, Polytope body);

/// The body of the full class: the Newton polytope itself.
NewtonBody class_body(const ToricData& ambient);

/// Generic Lelong number along the divisor of the given ray:
/// min over the body of <m, u> + a.
Rat lelong_number(const NewtonBody& nb, int ray_index);

/// n! times the Euclidean volume of the body.
Rat current_volume(const NewtonBody& nb);

struct WidthInfo {
  Rat nu_min;   // minimal Lelong number in the class
  Rat nu_max;   // maximal Lelong number in the class
  Rat width;    // nu_max - nu_min; positive for full-dimensional classes
};

/// Extremal Lelong numbers of the class along a ray, evaluated on the Newton
/// polytope. Throws DegenerateGeometry when the polytope is
/// lower-dimensional, where the width may legitimately vanish.
WidthInfo nu_max_and_width(const ToricData& data, int ray_index);

struct RestrictedVolume {
  Rat value;
  bool in_range;  // false when t is outside [nu, nu_max] of the body
};

/// Lattice-normalized restricted volume (n-1)! vol of the slice of the body
/// at Lelong level t along the ray. Out-of-range t yields value zero with
/// in_range = false rather than an error.
RestrictedVolume restricted_volume(const NewtonBody& nb, int ray_index, const Rat& t);

/// Top-degree mixed restricted volume along a ray: (n-1)! times the
/// lattice-normalized mixed volume of the minimal-level support faces of the
/// n-1 bodies. All bodies must share the ambient divisor data.
Rat mixed_restricted_volume(const std::vector<NewtonBody>& bodies, int ray_index);

/// Dimension-one loss-of-mass identity: the volume difference of nested
/// interval bodies equals the sum of Lelong number differences over the two
/// rays. Exact equality report.
Report riemann_surface_difference(const NewtonBody& t_body, const NewtonBody& tprime_body);

}  // namespace polymix
