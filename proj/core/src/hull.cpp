#include "polymix/detail/hull.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polymix/errors.hpp"
#include "polymix/linalg.hpp"

namespace polymix::detail {

namespace {

// The full-dimensional hull runs on integer coordinates: every point is
// scaled by the common denominator D once, after which all predicates
// (beyond tests, tightness, determinants) are gcd-free mpz arithmetic.

// Bareiss fraction-free elimination, destroying m in place. The scratch
// register keeps the inner loop free of heap churn.
void det_int_destructive(std::vector<IntVec>& m, Int& scratch, Int& out) {
  int n = static_cast<int>(m.size());
  if (n == 0) {
    out = 1;
    return;
  }
  Int denom = 1;
  int sign_flip = 1;
  for (int col = 0; col < n - 1; ++col) {
    int pr = -1;
    for (int r = col; r < n; ++r) {
      if (sgn(m[r][col]) != 0) {
        pr = r;
        break;
      }
    }
    if (pr < 0) {
      out = 0;
      return;
    }
    if (pr != col) {
      std::swap(m[pr], m[col]);
      sign_flip = -sign_flip;
    }
    for (int r = col + 1; r < n; ++r) {
      for (int c = col + 1; c < n; ++c) {
        mpz_mul(scratch.get_mpz_t(), m[col][col].get_mpz_t(), m[r][c].get_mpz_t());
        mpz_submul(scratch.get_mpz_t(), m[r][col].get_mpz_t(), m[col][c].get_mpz_t());
        mpz_divexact(m[r][c].get_mpz_t(), scratch.get_mpz_t(), denom.get_mpz_t());
      }
    }
    denom = m[col][col];
  }
  if (sign_flip > 0) {
    out = m[n - 1][n - 1];
  } else {
    mpz_neg(out.get_mpz_t(), m[n - 1][n - 1].get_mpz_t());
  }
}

// sign(<p, g> - o) without allocating: acc is a reused register.
int side_of(const IntVec& p, const IntVec& g, const Int& o, Int& acc) {
  mpz_set_ui(acc.get_mpz_t(), 0);
  for (size_t j = 0; j < p.size(); ++j) {
    mpz_addmul(acc.get_mpz_t(), p[j].get_mpz_t(), g[j].get_mpz_t());
  }
  return mpz_cmp(acc.get_mpz_t(), o.get_mpz_t());
}

struct Facet {
  std::vector<int> verts;  // ascending point indices, size n
  std::vector<int> nbr;    // nbr[k]: facet across the ridge dropping verts[k]
  IntVec normal;           // inner normal, primitive
  Int offset;              // <y, normal> >= offset in scaled coordinates
  bool alive = true;
};

struct ScaledCloud {
  std::vector<RatVec> pts;   // canonical order, deduped
  std::vector<IntVec> ints;  // D * point
  Int denom = 1;
};

ScaledCloud scale_points(std::vector<RatVec> pts) {
  ScaledCloud cloud;
  cloud.pts = std::move(pts);
  Int d = 1;
  for (const RatVec& p : cloud.pts) {
    for (const Rat& x : p) {
      Int l;
      mpz_lcm(l.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
      d = l;
    }
  }
  cloud.denom = d;
  cloud.ints.reserve(cloud.pts.size());
  for (const RatVec& p : cloud.pts) {
    IntVec q(p.size());
    for (size_t j = 0; j < p.size(); ++j) q[j] = p[j].get_num() * (d / p[j].get_den());
    cloud.ints.push_back(std::move(q));
  }
  return cloud;
}

// Reused buffers for hyperplane construction and volume determinants.
struct HullScratch {
  std::vector<IntVec> diffs;
  std::vector<IntVec> minor;
  Int reg;     // Bareiss register
  Int det;     // determinant output
  Int acc;     // dot register
  Int content; // gcd register

  explicit HullScratch(int n)
      : diffs(std::max(n - 1, 0), IntVec(n)),
        minor(std::max(n - 1, 0), IntVec(std::max(n - 1, 0))) {}
};

// Generalized cross product: the one-dimensional null direction of the n-1
// difference vectors (in scratch.diffs), by signed maximal minors.
void normal_from_minors(HullScratch& s, int n, IntVec& g) {
  bool nonzero = false;
  for (int j = 0; j < n; ++j) {
    for (int r = 0; r < n - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        mpz_set(s.minor[r][cc++].get_mpz_t(), s.diffs[r][c].get_mpz_t());
      }
    }
    det_int_destructive(s.minor, s.reg, s.det);
    if (j % 2 == 0) {
      g[j] = s.det;
    } else {
      mpz_neg(g[j].get_mpz_t(), s.det.get_mpz_t());
    }
    if (sgn(g[j]) != 0) nonzero = true;
  }
  if (!nonzero) throw Error("hull: facet points are affinely dependent");
  mpz_set_ui(s.content.get_mpz_t(), 0);
  for (const Int& x : g) {
    mpz_gcd(s.content.get_mpz_t(), s.content.get_mpz_t(), x.get_mpz_t());
  }
  if (mpz_cmp_ui(s.content.get_mpz_t(), 1) != 0) {
    for (Int& x : g) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.content.get_mpz_t());
  }
}

// Inner-oriented supporting hyperplane through the n facet points;
// ref_sum is the unscaled vertex sum of the initial simplex.
void set_hyperplane(Facet& f, const ScaledCloud& cloud, const IntVec& ref_sum, int ref_count,
                    int n, HullScratch& s) {
  const IntVec& base = cloud.ints[f.verts[0]];
  for (size_t i = 1; i < f.verts.size(); ++i) {
    for (int j = 0; j < n; ++j) {
      mpz_sub(s.diffs[i - 1][j].get_mpz_t(), cloud.ints[f.verts[i]][j].get_mpz_t(),
              base[j].get_mpz_t());
    }
  }
  IntVec g(n);
  if (n == 1) {
    g[0] = 1;
  } else {
    normal_from_minors(s, n, g);
  }
  Int o;
  mpz_set_ui(o.get_mpz_t(), 0);
  for (int j = 0; j < n; ++j) {
    mpz_addmul(o.get_mpz_t(), base[j].get_mpz_t(), g[j].get_mpz_t());
  }
  // sign(<ref_sum, g> - ref_count * o)
  mpz_set_ui(s.acc.get_mpz_t(), 0);
  for (int j = 0; j < n; ++j) {
    mpz_addmul(s.acc.get_mpz_t(), ref_sum[j].get_mpz_t(), g[j].get_mpz_t());
  }
  mpz_submul_ui(s.acc.get_mpz_t(), o.get_mpz_t(), static_cast<unsigned long>(ref_count));
  int sgn_ref = sgn(s.acc);
  if (sgn_ref == 0) throw Error("hull: interior reference lies on a facet hyperplane");
  if (sgn_ref < 0) {
    for (Int& x : g) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
    mpz_neg(o.get_mpz_t(), o.get_mpz_t());
  }
  f.normal = std::move(g);
  f.offset = std::move(o);
}

std::vector<int> drop_index(const std::vector<int>& v, size_t k) {
  std::vector<int> r;
  r.reserve(v.size() - 1);
  for (size_t i = 0; i < v.size(); ++i) {
    if (i != k) r.push_back(v[i]);
  }
  return r;
}

std::vector<Facet> incremental_hull(const ScaledCloud& cloud, const std::vector<int>& frame,
                                    int n) {
  IntVec ref_sum(n, 0);
  for (int idx : frame) {
    for (int j = 0; j < n; ++j) ref_sum[j] += cloud.ints[idx][j];
  }
  const int ref_count = static_cast<int>(frame.size());
  HullScratch scratch(n);

  std::vector<Facet> facets;
  for (size_t k = 0; k < frame.size(); ++k) {
    Facet f;
    f.verts = drop_index(frame, k);
    std::sort(f.verts.begin(), f.verts.end());
    f.nbr.assign(n, -1);
    set_hyperplane(f, cloud, ref_sum, ref_count, n, scratch);
    facets.push_back(std::move(f));
  }
  for (size_t k = 0; k < frame.size(); ++k) {
    for (size_t j = 0; j < frame.size(); ++j) {
      if (j == k) continue;
      auto& fv = facets[k].verts;
      auto it = std::find(fv.begin(), fv.end(), frame[j]);
      facets[k].nbr[it - fv.begin()] = static_cast<int>(j);
    }
  }

  std::vector<char> in_frame(cloud.ints.size(), 0);
  for (int idx : frame) in_frame[idx] = 1;

  std::vector<char> visible;
  for (int idx = 0; idx < static_cast<int>(cloud.ints.size()); ++idx) {
    if (in_frame[idx]) continue;
    const IntVec& p = cloud.ints[idx];

    visible.assign(facets.size(), 0);
    bool any = false;
    for (size_t f = 0; f < facets.size(); ++f) {
      if (!facets[f].alive) continue;
      if (side_of(p, facets[f].normal, facets[f].offset, scratch.acc) < 0) {
        visible[f] = 1;
        any = true;
      }
    }
    if (!any) continue;  // on or inside the current hull

    struct HorizonEdge {
      std::vector<int> ridge;
      int outside;
    };
    std::vector<HorizonEdge> horizon;
    for (size_t f = 0; f < facets.size(); ++f) {
      if (!facets[f].alive || !visible[f]) continue;
      for (size_t k = 0; k < facets[f].verts.size(); ++k) {
        int nb = facets[f].nbr[k];
        if (nb < 0 || visible[nb]) continue;
        horizon.push_back({drop_index(facets[f].verts, k), nb});
      }
    }

    std::map<std::vector<int>, std::pair<int, int>> open_ridges;
    for (const HorizonEdge& h : horizon) {
      Facet nf;
      nf.verts = h.ridge;
      nf.verts.push_back(idx);
      std::sort(nf.verts.begin(), nf.verts.end());
      nf.nbr.assign(n, -1);
      set_hyperplane(nf, cloud, ref_sum, ref_count, n, scratch);
      int nf_id = static_cast<int>(facets.size());

      std::set<int> ridge_set(h.ridge.begin(), h.ridge.end());
      for (size_t k = 0; k < nf.verts.size(); ++k) {
        if (nf.verts[k] == idx) nf.nbr[k] = h.outside;
      }
      Facet& out = facets[h.outside];
      for (size_t k = 0; k < out.verts.size(); ++k) {
        if (!ridge_set.count(out.verts[k])) out.nbr[k] = nf_id;
      }
      for (size_t k = 0; k < nf.verts.size(); ++k) {
        if (nf.verts[k] == idx) continue;
        std::vector<int> key = drop_index(nf.verts, k);
        auto it = open_ridges.find(key);
        if (it == open_ridges.end()) {
          open_ridges.emplace(std::move(key), std::make_pair(nf_id, static_cast<int>(k)));
        } else {
          nf.nbr[k] = it->second.first;
          facets[it->second.first].nbr[it->second.second] = nf_id;
          open_ridges.erase(it);
        }
      }
      facets.push_back(std::move(nf));
    }
    if (!open_ridges.empty()) throw Error("hull: unmatched ridge in cone construction");

    for (size_t f = 0; f < visible.size(); ++f) {
      if (visible[f]) facets[f].alive = false;
    }
  }
  return facets;
}

struct ScaledHalfspaceLess {
  bool operator()(const std::pair<IntVec, Int>& a, const std::pair<IntVec, Int>& b) const {
    if (a.first != b.first) return lex_less(a.first, b.first);
    return cmp(a.second, b.second) < 0;
  }
};

HullOutput full_dim_output(const ScaledCloud& cloud, const std::vector<int>& frame, int n) {
  std::vector<Facet> facets = incremental_hull(cloud, frame, n);

  std::set<std::pair<IntVec, Int>, ScaledHalfspaceLess> merged;
  std::set<int> corners;
  for (const Facet& f : facets) {
    if (!f.alive) continue;
    merged.emplace(f.normal, f.offset);
    corners.insert(f.verts.begin(), f.verts.end());
  }

  HullOutput out;
  out.ambient_dim = n;
  out.intrinsic_dim = n;
  for (const auto& [g, o] : merged) {
    out.halfspaces.push_back(Halfspace{g, Rat(o) / Rat(cloud.denom)});
  }

  // Corners of the simplicial complex may subdivide a geometric facet; a true
  // vertex is a corner whose active facet normals span the whole space.
  Int acc;
  for (int c : corners) {
    IndependentRows tracker(n);
    for (const auto& [g, o] : merged) {
      if (side_of(cloud.ints[c], g, o, acc) == 0) {
        tracker.try_add(to_ratvec(g));
        if (tracker.rank() == n) break;
      }
    }
    if (tracker.rank() == n) out.vertices.push_back(cloud.pts[c]);
  }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });

  // Fan from the lexicographically least point (index 0 after canonical
  // sorting; always a vertex). Facets through it contribute nothing.
  Int vol_scaled = 0;
  Int reg, d;
  std::vector<IntVec> diffs(n, IntVec(n));
  for (const Facet& f : facets) {
    if (!f.alive) continue;
    if (std::find(f.verts.begin(), f.verts.end(), 0) != f.verts.end()) continue;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        mpz_sub(diffs[i][j].get_mpz_t(), cloud.ints[f.verts[i]][j].get_mpz_t(),
                cloud.ints[0][j].get_mpz_t());
      }
    }
    det_int_destructive(diffs, reg, d);
    mpz_abs(d.get_mpz_t(), d.get_mpz_t());
    vol_scaled += d;
  }
  Rat scale = pow_rat(Rat(cloud.denom), n) * Rat(factorial(n));
  out.volume = Rat(vol_scaled) / scale;
  return out;
}

}  // namespace

HullOutput convex_hull(std::vector<RatVec> points) {
  if (points.empty()) throw InvalidArgument("convex hull of an empty point list");
  size_t n = points[0].size();
  if (n == 0) throw InvalidArgument("convex hull in dimension zero");
  for (const RatVec& p : points) {
    if (p.size() != n) throw DimensionMismatch("convex hull of points in mixed dimensions");
  }

  std::sort(points.begin(), points.end(),
            [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const RatVec& a, const RatVec& b) { return a == b; }),
               points.end());

  // Affinely independent frame, greedy in canonical order.
  IndependentRows tracker(static_cast<int>(n));
  std::vector<int> frame = {0};
  for (int i = 1; i < static_cast<int>(points.size()); ++i) {
    if (tracker.try_add(sub(points[i], points[0]))) frame.push_back(i);
    if (frame.size() == n + 1) break;
  }
  int d = static_cast<int>(frame.size()) - 1;

  if (d == static_cast<int>(n)) {
    return full_dim_output(scale_points(std::move(points)), frame, static_cast<int>(n));
  }

  HullOutput out;
  out.ambient_dim = static_cast<int>(n);
  out.intrinsic_dim = d;
  out.volume = 0;
  const RatVec& base = points[0];

  if (d == 0) {
    out.vertices.push_back(base);
    for (size_t i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = 1;
      out.halfspaces.push_back(Halfspace{e, base[i]});
      out.halfspaces.push_back(Halfspace{negate(e), -base[i]});
    }
    std::sort(out.halfspaces.begin(), out.halfspaces.end(), halfspace_less);
    return out;
  }

  // Project to the pivot coordinates of the direction space; injective on the
  // affine hull, so the hull can be taken in R^d and pulled back.
  const std::vector<int>& piv = tracker.pivot_cols();
  std::map<RatVec, int, bool (*)(const RatVec&, const RatVec&)> back(lex_less);
  std::vector<RatVec> proj;
  proj.reserve(points.size());
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    RatVec y(d);
    for (int j = 0; j < d; ++j) y[j] = points[i][piv[j]] - base[piv[j]];
    back.emplace(y, i);
    proj.push_back(std::move(y));
  }

  HullOutput sub_hull = convex_hull(std::move(proj));

  for (const RatVec& y : sub_hull.vertices) {
    out.vertices.push_back(points.at(back.at(y)));
  }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });

  for (const Halfspace& h : sub_hull.halfspaces) {
    IntVec g(n, 0);
    Rat o = h.offset;
    for (int j = 0; j < d; ++j) {
      g[piv[j]] = h.normal[j];
      o += h.normal[j] * base[piv[j]];
    }
    out.halfspaces.push_back(Halfspace{std::move(g), std::move(o)});
  }

  // Equality pairs pin down the affine hull.
  Matrix dirs;
  for (size_t i = 1; i < frame.size(); ++i) dirs.push_back(sub(points[frame[i]], base));
  for (const RatVec& w : nullspace(dirs, static_cast<int>(n))) {
    IntVec g = to_primitive(w);
    Rat o = dot(base, g);
    out.halfspaces.push_back(Halfspace{g, o});
    out.halfspaces.push_back(Halfspace{negate(g), -o});
  }
  std::sort(out.halfspaces.begin(), out.halfspaces.end(), halfspace_less);
  return out;
}

}  // namespace polymix::detail
