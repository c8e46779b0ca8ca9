#include "polymix/linalg.hpp"

#include "polymix/errors.hpp"

namespace polymix {

namespace {

// Reduced row echelon form. Returns pivot column per pivot row.
std::vector<int> rref(Matrix& a, int cols) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols && row < static_cast<int>(a.size()); ++col) {
    int pr = -1;
    for (int r = row; r < static_cast<int>(a.size()); ++r) {
      if (sgn(a[r][col]) != 0) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(a[row], a[pr]);
    Rat inv = 1 / a[row][col];
    for (int c = col; c < cols; ++c) a[row][c] *= inv;
    for (int r = 0; r < static_cast<int>(a.size()); ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      Rat f = a[r][col];
      for (int c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(Matrix a) {
  if (a.empty()) return 0;
  int cols = static_cast<int>(a[0].size());
  return static_cast<int>(rref(a, cols).size());
}

Rat det(Matrix a) {
  int n = static_cast<int>(a.size());
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) throw InvalidArgument("det of non-square matrix");
  }
  Rat result = 1;
  for (int col = 0; col < n; ++col) {
    int pr = -1;
    for (int r = col; r < n; ++r) {
      if (sgn(a[r][col]) != 0) {
        pr = r;
        break;
      }
    }
    if (pr < 0) return Rat(0);
    if (pr != col) {
      std::swap(a[pr], a[col]);
      result = -result;
    }
    result *= a[col][col];
    Rat inv = 1 / a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      Rat f = a[r][col] * inv;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return result;
}

std::vector<RatVec> nullspace(const Matrix& a, int cols) {
  Matrix m = a;
  std::vector<int> pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<RatVec> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(cols, Rat(0));
    v[free_col] = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr) {
      v[pivots[pr]] = -m[pr][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(Matrix a) {
  int n = static_cast<int>(a.size());
  for (int r = 0; r < n; ++r) {
    a[r].resize(2 * n, Rat(0));
    a[r][n + r] = 1;
  }
  std::vector<int> pivots = rref(a, 2 * n);
  // Invertible iff the left block reduced to the identity.
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, RatVec(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) inv[r][c] = a[r][n + c];
  }
  return inv;
}

std::optional<RatVec> solve(Matrix a, RatVec b) {
  int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) throw DimensionMismatch("solve: rhs length mismatch");
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(a[r].size()) != n) throw InvalidArgument("solve: non-square system");
    a[r].push_back(b[r]);
  }
  std::vector<int> pivots = rref(a, n + 1);
  // Inconsistent or underdetermined systems both count as singular here.
  if (static_cast<int>(pivots.size()) != n || pivots.back() == n) return std::nullopt;
  RatVec x(n);
  for (int r = 0; r < n; ++r) x[pivots[r]] = a[r][n];
  return x;
}

bool IndependentRows::try_add(RatVec row) {
  if (static_cast<int>(row.size()) != cols_) {
    throw DimensionMismatch("IndependentRows: row length mismatch");
  }
  for (size_t i = 0; i < reduced_.size(); ++i) {
    Rat f = row[pivot_cols_[i]];
    if (sgn(f) == 0) continue;
    for (int c = 0; c < cols_; ++c) row[c] -= f * reduced_[i][c];
  }
  int pivot = -1;
  for (int c = 0; c < cols_; ++c) {
    if (sgn(row[c]) != 0) {
      pivot = c;
      break;
    }
  }
  if (pivot < 0) return false;
  Rat inv = 1 / row[pivot];
  for (int c = 0; c < cols_; ++c) row[c] *= inv;
  reduced_.push_back(std::move(row));
  pivot_cols_.push_back(pivot);
  return true;
}

}  // namespace polymix
