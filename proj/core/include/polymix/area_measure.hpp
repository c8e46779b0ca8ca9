#pragma once

#include <vector>

#include "polymix/mixed_volume.hpp"
#include "polymix/polytope.hpp"
#include "polymix/report.hpp"

namespace polymix {

/// Finite atomic measure on primitive integer directions. For polytopes the
/// mixed area measure lives on the outer facet normals of the Minkowski sum;
/// weights are lattice-normalized (n-1)-dimensional mixed volumes of the
/// support faces, so the pairing with support functions needs no unit-sphere
/// rescaling.
struct MeasureAtom {
  IntVec direction;  // primitive, outer
  Rat weight;        // > 0; zero atoms are dropped
};

struct MixedAreaMeasure {
  int dim = 0;
  std::vector<MeasureAtom> atoms;  // sorted by direction
};

/// S(P_1, ..., P_{n-1}) for n-1 bodies in dimension dim = n. The tuple's sum
/// must be full-dimensional. For dim == 1 the tuple is empty and the measure
/// is the counting measure on {+1, -1}.
MixedAreaMeasure mixed_area_measure(const PolytopeTuple& bodies, int dim);

/// (1/n) sum over atoms of (Supp_{Q'} - Supp_Q) * weight.
Rat support_integral(const MixedAreaMeasure& measure, const Polytope& qprime, const Polytope& q);

/// Checks V(P_1..P_{n-1}, Q') - V(P_1..P_{n-1}, Q) against the support
/// integral of the mixed area measure, exactly. Requires Q inside Q'.
Report minkowski_formula_check(const PolytopeTuple& p_list, const Polytope& q,
                               const Polytope& qprime);

}  // namespace polymix
