#pragma once

#include <vector>

#include "polymix/rat.hpp"

namespace polymix {

/// Integer change of lattice basis: an n x n matrix with determinant +-1,
/// stored together with its (integer) inverse.
struct UnimodularMap {
  std::vector<IntVec> fwd;
  std::vector<IntVec> inv;

  int dim() const { return static_cast<int>(fwd.size()); }
};

/// Validates fwd * inv == identity and |det fwd| == 1.
bool is_valid_unimodular(const UnimodularMap& m);

/// Builds M with M u = e1 for a primitive integer vector u, by a gcd chain of
/// elementary row operations. The matrix is not unique; only quantities that
/// are invariant under the choice (volumes of lattice slices) may be tested
/// against it.
UnimodularMap unimodular_to_e1(const IntVec& u);

RatVec apply_matrix(const std::vector<IntVec>& matrix, const RatVec& x);
IntVec apply_matrix(const std::vector<IntVec>& matrix, const IntVec& x);

/// Rows of the transpose, used when mapping normals of halfspaces.
std::vector<IntVec> transpose(const std::vector<IntVec>& matrix);

}  // namespace polymix
