#pragma once

#include <optional>
#include <vector>

#include "polymix/rat.hpp"

namespace polymix {

// Row-major dense rational matrix. Small and exact; dimensions here never
// exceed a handful of rows beyond the ambient dimension (n <= 5).
using Matrix = std::vector<RatVec>;

int rank(Matrix a);

/// Determinant of a square matrix by fraction-free elimination.
Rat det(Matrix a);

/// Basis of {x : a x = 0}. Columns indexed by a[0].size().
std::vector<RatVec> nullspace(const Matrix& a, int cols);

std::optional<Matrix> inverse(Matrix a);

/// Solves the square system a x = b; nullopt when singular.
std::optional<RatVec> solve(Matrix a, RatVec b);

/// Incremental independence tracker: rows are accepted only when they extend
/// the span of the rows accepted so far.
class IndependentRows {
 public:
  explicit IndependentRows(int cols) : cols_(cols) {}
  bool try_add(RatVec row);
  int rank() const { return static_cast<int>(reduced_.size()); }
  const std::vector<int>& pivot_cols() const { return pivot_cols_; }

 private:
  int cols_;
  std::vector<RatVec> reduced_;
  std::vector<int> pivot_cols_;
};

}  // namespace polymix
