#include "polymix/detail/vertex_enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "polymix/errors.hpp"
#include "polymix/linalg.hpp"

namespace polymix::detail {

namespace {

// Incidence sets between rays and constraint rows, as packed bit masks.
using Bits = std::vector<uint64_t>;

Bits make_bits(size_t m) { return Bits((m + 63) / 64, 0); }
void set_bit(Bits& b, size_t i) { b[i / 64] |= (uint64_t{1} << (i % 64)); }

size_t and_collect(const Bits& a, const Bits& b, std::vector<int>& out) {
  out.clear();
  for (size_t w = 0; w < a.size(); ++w) {
    uint64_t x = a[w] & b[w];
    while (x) {
      int bit = __builtin_ctzll(x);
      out.push_back(static_cast<int>(w * 64 + bit));
      x &= x - 1;
    }
  }
  return out.size();
}

struct Ray {
  IntVec z;   // homogeneous coordinates (x, t), primitive
  Bits tight; // bits over processed constraint rows
};

}  // namespace

VertexEnumeration enumerate_vertices(const std::vector<Halfspace>& halfspaces, int dim) {
  if (dim < 1) throw InvalidArgument("vertex enumeration needs dimension >= 1");
  const int hd = dim + 1;  // homogenized dimension

  // Rows r act on z = (x, t): r . z >= 0. The final row is t >= 0.
  std::vector<IntVec> rows;
  std::map<IntVec, bool, bool (*)(const IntVec&, const IntVec&)> seen(lex_less);
  auto push_row = [&](const RatVec& r) {
    IntVec w = to_primitive(r);
    if (seen.emplace(w, true).second) rows.push_back(std::move(w));
  };
  for (const Halfspace& h : halfspaces) {
    if (static_cast<int>(h.normal.size()) != dim) {
      throw DimensionMismatch("halfspace normal has wrong dimension");
    }
    if (is_zero(h.normal)) throw InvalidArgument("halfspace with zero normal");
    RatVec r(hd);
    for (int j = 0; j < dim; ++j) r[j] = Rat(h.normal[j]);
    r[dim] = -h.offset;
    push_row(r);
  }
  {
    RatVec t_row(hd, Rat(0));
    t_row[dim] = 1;
    push_row(t_row);
  }

  // Lineality directions (common kernel of all normals) would keep the
  // homogenization cone from being pointed; pin them with equality pairs and
  // remember one as an unboundedness certificate.
  Matrix row_mat;
  row_mat.reserve(rows.size());
  for (const IntVec& r : rows) row_mat.push_back(to_ratvec(r));
  std::vector<RatVec> lin = nullspace(row_mat, hd);
  IntVec lineality_dir;
  for (const RatVec& w : lin) {
    IntVec g = to_primitive(w);
    if (lineality_dir.empty()) {
      lineality_dir.assign(g.begin(), g.begin() + dim);
    }
    rows.push_back(g);
    rows.push_back(negate(g));
  }

  const size_t m = rows.size();

  // Initial simplicial cone from a full-rank subset of rows.
  IndependentRows tracker(hd);
  std::vector<int> basis;
  std::vector<char> in_basis(m, 0);
  for (size_t i = 0; i < m && tracker.rank() < hd; ++i) {
    if (tracker.try_add(to_ratvec(rows[i]))) {
      basis.push_back(static_cast<int>(i));
      in_basis[i] = 1;
    }
  }
  if (static_cast<int>(basis.size()) != hd) {
    throw Error("vertex enumeration: homogenized system is rank deficient");
  }
  Matrix b_mat;
  for (int i : basis) b_mat.push_back(to_ratvec(rows[i]));
  auto inv = inverse(std::move(b_mat));
  if (!inv) throw Error("vertex enumeration: basis inversion failed");

  std::vector<Ray> rays;
  for (int c = 0; c < hd; ++c) {
    RatVec col(hd);
    for (int r = 0; r < hd; ++r) col[r] = (*inv)[r][c];
    rays.push_back(Ray{to_primitive(col), make_bits(m)});
  }

  std::vector<char> processed(m, 0);
  auto refresh_tight = [&](Ray& ray) {
    ray.tight = make_bits(m);
    for (size_t i = 0; i < m; ++i) {
      if (processed[i] && sgn(dot(rows[i], ray.z)) == 0) set_bit(ray.tight, i);
    }
  };
  for (int i : basis) processed[i] = 1;
  for (Ray& r : rays) refresh_tight(r);

  std::vector<int> common;
  for (size_t ci = 0; ci < m; ++ci) {
    if (in_basis[ci]) continue;
    const IntVec& c = rows[ci];

    std::vector<int> pos, neg;
    std::vector<Int> vals(rays.size());
    for (size_t r = 0; r < rays.size(); ++r) {
      vals[r] = dot(c, rays[r].z);
      int s = sgn(vals[r]);
      if (s > 0) {
        pos.push_back(static_cast<int>(r));
      } else if (s < 0) {
        neg.push_back(static_cast<int>(r));
      }
    }
    processed[ci] = 1;

    std::vector<Ray> combos;
    for (int p : pos) {
      for (int q : neg) {
        // Two extreme rays are adjacent iff their common tight rows cut a
        // face of dimension 2, i.e. have rank hd - 2.
        if (static_cast<int>(and_collect(rays[p].tight, rays[q].tight, common)) < hd - 2) {
          continue;
        }
        IndependentRows rk(hd);
        int got = 0;
        for (int i : common) {
          if (rk.try_add(to_ratvec(rows[i]))) {
            if (++got == hd - 2) break;
          }
        }
        if (got < hd - 2) continue;
        Ray w;
        IntVec z(hd);
        for (int j = 0; j < hd; ++j) z[j] = vals[p] * rays[q].z[j] - vals[q] * rays[p].z[j];
        w.z = to_primitive(to_ratvec(z));
        refresh_tight(w);
        combos.push_back(std::move(w));
      }
    }

    std::vector<Ray> next;
    next.reserve(pos.size() + combos.size() + rays.size());
    for (size_t r = 0; r < rays.size(); ++r) {
      if (sgn(vals[r]) >= 0) {
        Ray keep = std::move(rays[r]);
        if (sgn(vals[r]) == 0) set_bit(keep.tight, ci);
        next.push_back(std::move(keep));
      }
    }
    for (Ray& w : combos) next.push_back(std::move(w));
    rays = std::move(next);
  }

  VertexEnumeration result;
  for (const Ray& r : rays) {
    const Int& t = r.z[dim];
    if (sgn(t) > 0) {
      RatVec x(dim);
      for (int j = 0; j < dim; ++j) x[j] = Rat(r.z[j]) / Rat(t);
      result.vertices.push_back(std::move(x));
    } else if (result.direction.empty()) {
      result.direction = IntVec(r.z.begin(), r.z.begin() + dim);
    }
  }
  if (!lineality_dir.empty() && result.direction.empty()) {
    result.direction = lineality_dir;
  }
  if (result.vertices.empty()) {
    result.empty = true;
    result.direction.clear();
  } else if (!result.direction.empty()) {
    result.unbounded = true;
  }
  return result;
}

}  // namespace polymix::detail
