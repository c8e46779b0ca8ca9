#pragma once

#include <vector>

#include "polymix/polytope.hpp"

namespace polymix {

/// Tuple of bodies in a common ambient dimension; length n for mixed volumes,
/// n-1 for area measures.
using PolytopeTuple = std::vector<Polytope>;

/// Mixed volume V(P_1, ..., P_n), normalized so that V(P, ..., P) = vol(P).
/// Computed by polarization over the 2^n - 1 Minkowski subset sums.
Rat mixed_volume(const PolytopeTuple& bodies);

/// Independent route: vol(l_1 P_1 + ... + l_n P_n) is a homogeneous
/// polynomial of degree n in l; fit it exactly on a rational grid and read
/// off the coefficient of l_1 ... l_n. Must equal mixed_volume exactly.
Rat mixed_volume_oracle(const PolytopeTuple& bodies);

/// V(P_1..P_{n-1}, Q') - V(P_1..P_{n-1}, Q). Subset sums without the last
/// slot cancel in the polarization, so only 2^(n-1) pairs are expanded.
Rat mixed_volume_difference(const PolytopeTuple& leading, const Polytope& qprime,
                            const Polytope& q);

/// vol(P+Q)^(1/n) - vol(P)^(1/n) - vol(Q)^(1/n) in floating point. The only
/// inexact quantity in this module; nonnegative up to kBrunnMinkowskiTol.
double brunn_minkowski_gap(const Polytope& p, const Polytope& q);

inline constexpr double kBrunnMinkowskiTol = 1e-9;

}  // namespace polymix
