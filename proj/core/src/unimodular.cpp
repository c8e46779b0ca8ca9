#include "polymix/unimodular.hpp"

#include "polymix/errors.hpp"

namespace polymix {

bool is_valid_unimodular(const UnimodularMap& m) {
  int n = m.dim();
  if (static_cast<int>(m.inv.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Int acc = 0;
      for (int k = 0; k < n; ++k) acc += m.fwd[i][k] * m.inv[k][j];
      if (acc != ((i == j) ? 1 : 0)) return false;
    }
  }
  return true;
}

UnimodularMap unimodular_to_e1(const IntVec& u) {
  int n = static_cast<int>(u.size());
  if (n == 0) throw InvalidArgument("unimodular_to_e1: empty vector");
  if (!is_primitive(u)) {
    throw InvalidArgument("unimodular_to_e1: vector is not primitive: " + vec_to_string(u));
  }

  std::vector<IntVec> fwd(n, IntVec(n, 0));
  std::vector<IntVec> inv(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) {
    fwd[i][i] = 1;
    inv[i][i] = 1;
  }
  IntVec g = u;

  // Fold entry i into entry 0 with a determinant-one 2x2 block. Tracking the
  // inverse costs one extra column operation per step.
  for (int i = 1; i < n; ++i) {
    if (sgn(g[i]) == 0) continue;
    Int d, a, b;
    mpz_gcdext(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), g[0].get_mpz_t(), g[i].get_mpz_t());
    Int p = g[0] / d;
    Int q = g[i] / d;
    // rows:    r0 <- a r0 + b ri ; ri <- -q r0 + p ri   (det = a p + b q = 1)
    for (int c = 0; c < n; ++c) {
      Int r0 = fwd[0][c], ri = fwd[i][c];
      fwd[0][c] = a * r0 + b * ri;
      fwd[i][c] = -q * r0 + p * ri;
    }
    // columns of the inverse get the inverse block [[p, -b], [q, a]].
    for (int r = 0; r < n; ++r) {
      Int c0 = inv[r][0], ci = inv[r][i];
      inv[r][0] = p * c0 + q * ci;
      inv[r][i] = -b * c0 + a * ci;
    }
    g[0] = d;
    g[i] = 0;
  }

  if (g[0] == -1) {
    for (int c = 0; c < n; ++c) fwd[0][c] = -fwd[0][c];
    for (int r = 0; r < n; ++r) inv[r][0] = -inv[r][0];
    g[0] = 1;
  }
  // u primitive forces the final gcd to be one.
  return UnimodularMap{std::move(fwd), std::move(inv)};
}

RatVec apply_matrix(const std::vector<IntVec>& matrix, const RatVec& x) {
  int n = static_cast<int>(matrix.size());
  if (n == 0 || matrix[0].size() != x.size()) {
    throw DimensionMismatch("matrix/vector size mismatch");
  }
  RatVec y(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    for (size_t j = 0; j < x.size(); ++j) y[i] += x[j] * matrix[i][j];
  }
  return y;
}

IntVec apply_matrix(const std::vector<IntVec>& matrix, const IntVec& x) {
  int n = static_cast<int>(matrix.size());
  if (n == 0 || matrix[0].size() != x.size()) {
    throw DimensionMismatch("matrix/vector size mismatch");
  }
  IntVec y(n, Int(0));
  for (int i = 0; i < n; ++i) {
    for (size_t j = 0; j < x.size(); ++j) y[i] += x[j] * matrix[i][j];
  }
  return y;
}

std::vector<IntVec> transpose(const std::vector<IntVec>& matrix) {
  int rows = static_cast<int>(matrix.size());
  int cols = rows == 0 ? 0 : static_cast<int>(matrix[0].size());
  std::vector<IntVec> t(cols, IntVec(rows));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) t[c][r] = matrix[r][c];
  }
  return t;
}

}  // namespace polymix
