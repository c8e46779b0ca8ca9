#include "polymix/polytope.hpp"

#include <algorithm>

#include "polymix/detail/hull.hpp"
#include "polymix/detail/vertex_enumeration.hpp"
#include "polymix/errors.hpp"

namespace polymix {

bool operator==(const Halfspace& a, const Halfspace& b) {
  return a.normal == b.normal && a.offset == b.offset;
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}

namespace detail {
Polytope assemble(int ambient_dim, int intrinsic_dim, std::vector<RatVec> vertices,
                  std::vector<Halfspace> halfspaces, Rat volume) {
  Polytope p;
  p.ambient_dim_ = ambient_dim;
  p.intrinsic_dim_ = intrinsic_dim;
  p.vertices_ = std::move(vertices);
  p.halfspaces_ = std::move(halfspaces);
  p.volume_ = std::move(volume);
  return p;
}
}  // namespace detail

Polytope make_polytope(const std::vector<RatVec>& points) {
  detail::HullOutput h = detail::convex_hull(points);
  return detail::assemble(h.ambient_dim, h.intrinsic_dim, std::move(h.vertices),
                          std::move(h.halfspaces), std::move(h.volume));
}

Polytope from_halfspaces(const std::vector<Halfspace>& halfspaces, int dim) {
  if (dim < 1) throw InvalidArgument("from_halfspaces: dimension must be >= 1");
  detail::VertexEnumeration ve = detail::enumerate_vertices(halfspaces, dim);
  if (ve.empty) throw EmptyRegion("halfspace system has no feasible point");
  if (ve.unbounded) {
    throw UnboundedRegion("halfspace system is unbounded in direction " +
                          vec_to_string(ve.direction));
  }
  return make_polytope(ve.vertices);
}

namespace {
void check_dim(const Polytope& p, size_t u_size, const char* what) {
  if (u_size != static_cast<size_t>(p.ambient_dim())) {
    throw DimensionMismatch(std::string(what) + ": direction dimension mismatch");
  }
}
}  // namespace

Rat support_value(const Polytope& p, const RatVec& u) {
  check_dim(p, u.size(), "support_value");
  Rat best;
  bool first = true;
  for (const RatVec& v : p.vertices()) {
    Rat s = dot(v, u);
    if (first || s > best) {
      best = std::move(s);
      first = false;
    }
  }
  return best;
}

Rat support_value(const Polytope& p, const IntVec& u) {
  return support_value(p, to_ratvec(u));
}

Polytope face(const Polytope& p, const RatVec& u) {
  check_dim(p, u.size(), "face");
  if (is_zero(u)) throw InvalidArgument("face: zero direction");
  Rat m = support_value(p, u);
  std::vector<RatVec> hit;
  for (const RatVec& v : p.vertices()) {
    if (dot(v, u) == m) hit.push_back(v);
  }
  return make_polytope(hit);
}

Polytope face(const Polytope& p, const IntVec& u) { return face(p, to_ratvec(u)); }

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw DimensionMismatch("minkowski_sum: ambient dimension mismatch");
  }
  std::vector<RatVec> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const RatVec& a : p.vertices()) {
    for (const RatVec& b : q.vertices()) sums.push_back(add(a, b));
  }
  return make_polytope(sums);
}

Polytope affine_image(const Polytope& p, const Rat& lambda, const RatVec& shift) {
  check_dim(p, shift.size(), "affine_image");
  if (sign(lambda) < 0) throw InvalidArgument("affine_image: negative scale factor");
  std::vector<RatVec> pts;
  pts.reserve(p.vertices().size());
  for (const RatVec& v : p.vertices()) pts.push_back(add(scale(lambda, v), shift));
  return make_polytope(pts);
}

Polytope translate(const Polytope& p, const RatVec& shift) {
  return affine_image(p, Rat(1), shift);
}

Polytope dilate(const Polytope& p, const Rat& lambda) {
  return affine_image(p, lambda, zero_vec(p.ambient_dim()));
}

Polytope linear_image(const std::vector<IntVec>& matrix, const Polytope& p) {
  std::vector<RatVec> pts;
  pts.reserve(p.vertices().size());
  for (const RatVec& v : p.vertices()) pts.push_back(apply_matrix(matrix, v));
  return make_polytope(pts);
}

bool contains_point(const Polytope& p, const RatVec& x) {
  check_dim(p, x.size(), "contains_point");
  for (const Halfspace& h : p.halfspaces()) {
    if (dot(x, h.normal) < h.offset) return false;
  }
  return true;
}

bool contains_body(const Polytope& outer, const Polytope& inner) {
  if (outer.ambient_dim() != inner.ambient_dim()) {
    throw DimensionMismatch("contains_body: ambient dimension mismatch");
  }
  for (const RatVec& v : inner.vertices()) {
    if (!contains_point(outer, v)) return false;
  }
  return true;
}

std::optional<Polytope> intersect_halfspace(const Polytope& p, const Halfspace& h) {
  check_dim(p, h.normal.size(), "intersect_halfspace");
  std::vector<Halfspace> hs = p.halfspaces();
  hs.push_back(h);
  detail::VertexEnumeration ve = detail::enumerate_vertices(hs, p.ambient_dim());
  if (ve.empty) return std::nullopt;
  if (ve.unbounded) throw Error("intersect_halfspace: polytope input was unbounded");
  return make_polytope(ve.vertices);
}

std::optional<Polytope> lattice_slice(const Polytope& p, const IntVec& u, const Rat& t) {
  check_dim(p, u.size(), "lattice_slice");
  if (p.ambient_dim() < 2) {
    throw InvalidArgument("lattice_slice: ambient dimension must be >= 2");
  }
  if (!is_primitive(u)) {
    throw InvalidArgument("lattice_slice: direction is not primitive: " + vec_to_string(u));
  }
  // With M u = e1, points transform by the inverse transpose of M, which
  // turns <x, u> into the first coordinate and preserves the lattice.
  UnimodularMap m = unimodular_to_e1(u);
  const int n = p.ambient_dim();
  std::vector<Halfspace> sliced;
  for (const Halfspace& h : p.halfspaces()) {
    IntVec g = apply_matrix(m.fwd, h.normal);
    IntVec tail(g.begin() + 1, g.end());
    Rat off = h.offset - Rat(g[0]) * t;
    if (is_zero(tail)) {
      if (sign(off) > 0) return std::nullopt;  // slice plane misses this constraint
      continue;
    }
    Int content = 0;
    for (const Int& x : tail) {
      Int gg;
      mpz_gcd(gg.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
      content = gg;
    }
    for (Int& x : tail) x /= content;
    sliced.push_back(Halfspace{std::move(tail), off / Rat(content)});
  }
  detail::VertexEnumeration ve = detail::enumerate_vertices(sliced, n - 1);
  if (ve.empty) return std::nullopt;
  if (ve.unbounded) throw Error("lattice_slice: slice of a bounded body came out unbounded");
  return make_polytope(ve.vertices);
}

std::pair<Rat, Rat> support_range(const Polytope& p, const IntVec& u) {
  check_dim(p, u.size(), "support_range");
  Rat lo, hi;
  bool first = true;
  for (const RatVec& v : p.vertices()) {
    Rat s = dot(v, u);
    if (first) {
      lo = s;
      hi = s;
      first = false;
    } else if (s < lo) {
      lo = std::move(s);
    } else if (s > hi) {
      hi = std::move(s);
    }
  }
  return {lo, hi};
}

}  // namespace polymix
