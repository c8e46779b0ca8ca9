#include "polymix/checks.hpp"

#include <cmath>
#include <sstream>

#include "polymix/errors.hpp"
#include "polymix/mixed_volume.hpp"
#include "polymix/rng.hpp"

namespace polymix {

namespace {

std::string poly_blob(const Polytope& p) {
  std::string s;
  for (const RatVec& v : p.vertices()) s += vec_to_string(v);
  return s;
}

std::string toric_blob(const ToricData& d) {
  std::string s = "rays:";
  for (const IntVec& u : d.rays) s += vec_to_string(u);
  s += "coeffs:";
  for (const Rat& a : d.coeffs) s += rat_to_string(a) + ",";
  return s;
}

std::string body_blob(const NewtonBody& b) { return toric_blob(b.ambient) + poly_blob(b.body); }

void require_common_ambient(const std::vector<const NewtonBody*>& bodies) {
  for (size_t i = 1; i < bodies.size(); ++i) {
    if (!(bodies[i]->ambient == bodies[0]->ambient)) {
      throw DimensionMismatch("bodies do not share ambient toric data");
    }
  }
}

Rat min_rat(const Rat& a, const Rat& b) { return a < b ? a : b; }

}  // namespace

Report check_res_vol_lower_bound(const ToricData& ambient, int ray_index, const Rat& t,
                                 const std::string& context) {
  WidthInfo w = nu_max_and_width(ambient, ray_index);
  if (t < w.nu_min || t > w.nu_max) {
    throw InvalidArgument("check_res_vol_lower_bound: t outside [nu, nu_max]");
  }
  NewtonBody cls = class_body(ambient);
  int n = ambient.dim;

  Rat lhs = restricted_volume(cls, ray_index, t).value;
  Rat rhs = current_volume(cls) / pow_rat(w.width, n) *
            pow_rat(min_rat(t - w.nu_min, w.nu_max - t), n - 1);

  std::string blob = "res-vol:" + toric_blob(ambient) + "ray=" + std::to_string(ray_index) +
                     ";t=" + rat_to_string(t) + ";" + context;
  return make_exact_report("res-vol-lower-bound", digest_hex(blob), std::move(lhs),
                           std::move(rhs), Relation::kGreaterEqual);
}

Report check_loss_single(const NewtonBody& t_body, const NewtonBody& s_body, int ray_index,
                         const std::string& context) {
  require_common_ambient({&t_body, &s_body});
  if (!contains_body(s_body.body, t_body.body)) {
    throw DegenerateGeometry("check_loss_single: T body not contained in S body");
  }
  int n = t_body.ambient.dim;
  WidthInfo w = nu_max_and_width(t_body.ambient, ray_index);

  Rat gap = lelong_number(t_body, ray_index) - lelong_number(s_body, ray_index);
  Rat lhs = current_volume(s_body) - current_volume(t_body);
  Rat sharp = pow_rat(gap, n) * current_volume(s_body) / pow_rat(w.width, n);
  Rat rhs = sharp / pow_rat(Rat(2), n - 1);

  std::string notes;
  if (lhs >= sharp) {
    notes = "sharp form (no 2^(n-1) factor) holds; sharp rhs = " + rat_to_string(sharp);
  } else {
    notes = "sharp form FAILED: sharp rhs = " + rat_to_string(sharp);
  }
  std::string blob = "loss-single:" + body_blob(t_body) + poly_blob(s_body.body) +
                     "ray=" + std::to_string(ray_index) + ";" + context;
  Report r = make_exact_report("loss-of-mass-single", digest_hex(blob), std::move(lhs),
                               std::move(rhs), Relation::kGreaterEqual, std::move(notes));
  r.holds = r.holds && std::get<Rat>(r.lhs) >= sharp;
  return r;
}

namespace {

struct PairData {
  int n = 0;
  Rat lhs;                 // n! (V(S's) - V(T's))
  std::vector<Rat> gaps;   // nu(T_i) - nu(S_i)
  std::vector<Rat> s_vols; // current volumes of the S bodies
  std::vector<Rat> s_nus;  // nu(S_i) along the ray
  WidthInfo width;
  std::string blob;
};

PairData analyze_pairs(const std::vector<std::pair<NewtonBody, NewtonBody>>& pairs,
                       int ray_index, const char* who) {
  if (pairs.empty()) throw InvalidArgument(std::string(who) + ": no pairs");
  std::vector<const NewtonBody*> all;
  for (const auto& [t, s] : pairs) {
    all.push_back(&t);
    all.push_back(&s);
  }
  require_common_ambient(all);
  PairData d;
  d.n = pairs[0].first.ambient.dim;
  if (static_cast<int>(pairs.size()) != d.n) {
    throw DimensionMismatch(std::string(who) + ": needs n pairs in dimension n");
  }
  if (d.n < 2) throw InvalidArgument(std::string(who) + ": needs dimension >= 2");
  d.width = nu_max_and_width(pairs[0].first.ambient, ray_index);

  PolytopeTuple s_tuple, t_tuple;
  for (const auto& [t, s] : pairs) {
    if (!contains_body(s.body, t.body)) {
      throw DegenerateGeometry(std::string(who) + ": pair violates containment");
    }
    d.gaps.push_back(lelong_number(t, ray_index) - lelong_number(s, ray_index));
    d.s_vols.push_back(current_volume(s));
    d.s_nus.push_back(lelong_number(s, ray_index));
    s_tuple.push_back(s.body);
    t_tuple.push_back(t.body);
    d.blob += body_blob(t) + poly_blob(s.body);
  }
  Rat nf(factorial(d.n));
  d.lhs = nf * mixed_volume(s_tuple) - nf * mixed_volume(t_tuple);
  return d;
}

}  // namespace

Report check_loss_mixed(const std::vector<std::pair<NewtonBody, NewtonBody>>& pairs,
                        int ray_index, const std::string& context) {
  PairData d = analyze_pairs(pairs, ray_index, "check_loss_mixed");
  int n = d.n;
  for (int j = 1; j < n; ++j) {
    if (sign(d.s_vols[j]) <= 0) {
      throw DegenerateGeometry("check_loss_mixed: vol S_j vanishes for j >= 2");
    }
  }

  // Exact route: both sides are nonnegative, so compare (n-1)-th powers.
  Rat gap_prod = 1;
  for (const Rat& g : d.gaps) gap_prod *= g;
  Rat rhs_pow = pow_rat(gap_prod, n - 1) / pow_rat(Rat(2), (n - 1) * (n - 1));
  for (int j = 1; j < n; ++j) {
    rhs_pow *= d.s_vols[j] / pow_rat(d.width.nu_max - d.s_nus[j], n);
  }
  Rat lhs_pow = pow_rat(d.lhs, n - 1);

  // Float route, for the record.
  double rhs_f = to_double(gap_prod) / std::pow(2.0, n - 1);
  for (int j = 1; j < n; ++j) {
    rhs_f *= std::pow(to_double(d.s_vols[j] / pow_rat(d.width.nu_max - d.s_nus[j], n)),
                      1.0 / (n - 1));
  }
  double lhs_f = to_double(d.lhs);
  std::ostringstream notes;
  notes << "comparison raised to power n-1 = " << (n - 1) << "; float check: lhs=" << lhs_f
        << " rhs=" << rhs_f << " margin=" << (lhs_f - rhs_f)
        << (lhs_f >= rhs_f - kFloatCheckTol ? " ok" : " FAILED");

  std::string blob = "loss-mixed:" + d.blob + "ray=" + std::to_string(ray_index) + ";" + context;
  return make_exact_report("loss-of-mass-mixed", digest_hex(blob), std::move(lhs_pow),
                           std::move(rhs_pow), Relation::kGreaterEqual, notes.str());
}

Report check_loss_product(const std::vector<std::pair<NewtonBody, NewtonBody>>& pairs,
                          int ray_index, const std::string& context) {
  PairData d = analyze_pairs(pairs, ray_index, "check_loss_product");
  int n = d.n;

  Rat gap_prod = 1;
  for (const Rat& g : d.gaps) gap_prod *= g;

  Rat best = 0;
  bool first = true;
  for (int omit = 0; omit < n; ++omit) {
    std::vector<NewtonBody> rest;
    for (int j = 0; j < n; ++j) {
      if (j != omit) rest.push_back(pairs[j].second);
    }
    Rat candidate = gap_prod * mixed_restricted_volume(rest, ray_index) /
                    pow_rat(d.width.width, n - 1);
    if (first || candidate > best) {
      best = std::move(candidate);
      first = false;
    }
  }

  std::string blob = "loss-product:" + d.blob + "ray=" + std::to_string(ray_index) + ";" + context;
  return make_exact_report("loss-of-mass-product", digest_hex(blob), Rat(d.lhs), std::move(best),
                           Relation::kGreaterEqual);
}

Report check_alpha_T_mixed(const std::vector<NewtonBody>& bodies, int ray_index,
                           const std::string& context) {
  if (bodies.empty()) throw InvalidArgument("check_alpha_T_mixed: no bodies");
  std::vector<const NewtonBody*> all;
  for (const NewtonBody& b : bodies) all.push_back(&b);
  require_common_ambient(all);
  int n = bodies[0].ambient.dim;
  if (n < 2) throw InvalidArgument("check_alpha_T_mixed: needs dimension >= 2");
  if (static_cast<int>(bodies.size()) != n) {
    throw DimensionMismatch("check_alpha_T_mixed: needs n bodies in dimension n");
  }
  WidthInfo w = nu_max_and_width(bodies[0].ambient, ray_index);
  NewtonBody cls = class_body(bodies[0].ambient);

  PolytopeTuple t_tuple;
  Rat gap_prod = 1;
  std::string blob = "alpha-t:" + toric_blob(bodies[0].ambient);
  for (const NewtonBody& b : bodies) {
    t_tuple.push_back(b.body);
    gap_prod *= lelong_number(b, ray_index) - w.nu_min;
    blob += poly_blob(b.body);
  }
  Rat nf(factorial(n));
  Rat lhs = current_volume(cls) - nf * mixed_volume(t_tuple);
  // All classes coincide, so the (n-1)-th roots collapse and the bound
  // is rational: gaps * vol(alpha) / (2^(n-1) wid^n).
  Rat rhs = gap_prod * current_volume(cls) / (pow_rat(Rat(2), n - 1) * pow_rat(w.width, n));

  blob += "ray=" + std::to_string(ray_index) + ";" + context;
  return make_exact_report("alpha-t-mixed-loss", digest_hex(blob), std::move(lhs), std::move(rhs),
                           Relation::kGreaterEqual,
                           "common-class form; fractional powers collapse rationally");
}

namespace {

// Exact integral of (a + b t)^n over [x0, x1].
Rat affine_power_integral(const Rat& a, const Rat& b, int n, const Rat& x0, const Rat& x1) {
  if (sign(b) == 0) return pow_rat(a, n) * (x1 - x0);
  Rat upper = pow_rat(a + b * x1, n + 1);
  Rat lower = pow_rat(a + b * x0, n + 1);
  return (upper - lower) / (Rat(n + 1) * b);
}

Rat eval_pl(const PiecewiseLinear& f, const Rat& x) {
  const auto& k = f.knots;
  for (size_t i = 0; i + 1 < k.size(); ++i) {
    if (x >= k[i].first && x <= k[i + 1].first) {
      Rat slope = (k[i + 1].second - k[i].second) / (k[i + 1].first - k[i].first);
      return k[i].second + slope * (x - k[i].first);
    }
  }
  throw InvalidArgument("piecewise-linear evaluation outside the knot range");
}

}  // namespace

Report check_concave_integral(const PiecewiseLinear& f, const Rat& t0, int n,
                              const std::string& context) {
  const auto& k = f.knots;
  if (k.size() < 2) throw InvalidArgument("check_concave_integral: need at least two knots");
  if (n < 1) throw InvalidArgument("check_concave_integral: power must be >= 1");
  if (sign(k.front().first) != 0) {
    throw InvalidArgument("check_concave_integral: domain must start at 0");
  }
  for (size_t i = 0; i + 1 < k.size(); ++i) {
    if (!(k[i].first < k[i + 1].first)) {
      throw InvalidArgument("check_concave_integral: knots not strictly increasing");
    }
  }
  Rat prev_slope;
  bool have_prev = false;
  for (size_t i = 0; i + 1 < k.size(); ++i) {
    if (sign(k[i].second) < 0 || sign(k[i + 1].second) < 0) {
      throw InvalidArgument("check_concave_integral: function must be nonnegative");
    }
    Rat slope = (k[i + 1].second - k[i].second) / (k[i + 1].first - k[i].first);
    if (have_prev && slope > prev_slope) {
      throw InvalidArgument("check_concave_integral: knot data is not concave");
    }
    prev_slope = std::move(slope);
    have_prev = true;
  }
  const Rat& a_len = k.back().first;
  if (!(t0 > 0 && t0 < a_len)) {
    throw InvalidArgument("check_concave_integral: t0 must lie strictly inside (0, A)");
  }

  Rat integral = 0;
  for (size_t i = 0; i + 1 < k.size(); ++i) {
    Rat slope = (k[i + 1].second - k[i].second) / (k[i + 1].first - k[i].first);
    Rat intercept = k[i].second - slope * k[i].first;
    integral += affine_power_integral(intercept, slope, n, k[i].first, k[i + 1].first);
  }
  Rat bound = pow_rat(eval_pl(f, t0), n) * pow_rat(a_len, n + 1) /
              (Rat(n + 1) * pow_rat(min_rat(t0, a_len - t0), n));

  std::string blob = "concave-integral:";
  for (const auto& [x, y] : k) blob += rat_to_string(x) + ":" + rat_to_string(y) + ",";
  blob += "t0=" + rat_to_string(t0) + ";n=" + std::to_string(n) + ";" + context;
  return make_exact_report("concave-integral-bound", digest_hex(blob), std::move(integral),
                           std::move(bound), Relation::kLessEqual);
}

Report check_slice_lower_bound(const Polytope& p, const IntVec& u, const Rat& t0,
                               const std::string& context) {
  int n = p.ambient_dim();
  if (n < 2) throw InvalidArgument("check_slice_lower_bound: needs dimension >= 2");
  if (!p.full_dim()) {
    throw DegenerateGeometry("check_slice_lower_bound: body must be full-dimensional");
  }
  auto [lo, hi] = support_range(p, u);
  Rat a_len = hi - lo;
  if (t0 < 0 || t0 > a_len) {
    throw InvalidArgument("check_slice_lower_bound: t0 outside [0, A]");
  }

  auto slice = lattice_slice(p, u, lo + t0);
  Rat lhs = slice ? slice->volume() : Rat(0);
  Rat rhs = Rat(n) / pow_rat(a_len, n) * p.volume() * pow_rat(min_rat(t0, a_len - t0), n - 1);

  std::string blob = "slice-bound:" + poly_blob(p) + "u=" + vec_to_string(u) +
                     ";t0=" + rat_to_string(t0) + ";" + context;
  return make_exact_report("slice-lower-bound", digest_hex(blob), std::move(lhs), std::move(rhs),
                           Relation::kGreaterEqual);
}

Report check_ratio_monotone(const Polytope& p, const Polytope& q, const IntVec& u,
                            int grid_points, const std::string& context) {
  if (!contains_body(p, q)) {
    throw DegenerateGeometry("check_ratio_monotone: inner body not contained");
  }
  if (!p.full_dim()) {
    throw DegenerateGeometry("check_ratio_monotone: outer body must be full-dimensional");
  }
  if (grid_points < 1) throw InvalidArgument("check_ratio_monotone: empty grid");
  int n = p.ambient_dim();
  auto [plo, phi] = support_range(p, u);
  auto [qlo, qhi] = support_range(q, u);
  (void)qhi;
  Rat a_len = phi - plo;
  Rat gap = qlo - plo;

  Rat lhs = p.volume() - q.volume();
  Rat rhs = p.volume() * pow_rat(gap / a_len, n);

  // Monotone ratio: s -> vol(P cut below level s)/s^n, nonincreasing on the grid.
  bool monotone = true;
  Rat prev_ratio;
  bool have_prev = false;
  for (int i = 1; i <= grid_points; ++i) {
    Rat s = Rat(i) * a_len / Rat(grid_points);
    Halfspace below{negate(u), -(plo + s)};
    auto cut = intersect_halfspace(p, below);
    Rat vol_below = cut ? cut->volume() : Rat(0);
    Rat ratio = vol_below / pow_rat(s, n);
    if (have_prev && ratio > prev_ratio) {
      monotone = false;
      break;
    }
    prev_ratio = std::move(ratio);
    have_prev = true;
  }

  std::string blob = "ratio-monotone:" + poly_blob(p) + poly_blob(q) + "u=" + vec_to_string(u) +
                     ";grid=" + std::to_string(grid_points) + ";" + context;
  Report r = make_exact_report(
      "ratio-monotone", digest_hex(blob), std::move(lhs), std::move(rhs),
      Relation::kGreaterEqual,
      monotone ? "grid ratio monotonicity holds" : "grid ratio monotonicity FAILED");
  r.holds = r.holds && monotone;
  return r;
}

std::vector<Report> reproduce_count_su(int n, const Rat& eps, const std::vector<Rat>& t_grid,
                                       const std::string& context) {
  if (n < 2 || n > 5) throw InvalidArgument("reproduce_count_su: dimension must be in [2, 5]");
  if (sign(eps) <= 0) throw InvalidArgument("reproduce_count_su: eps must be positive");

  // Simplex with apex at the origin and an eps-scaled face in the x1 = 1 plane.
  std::vector<RatVec> verts;
  verts.push_back(zero_vec(n));
  RatVec e1 = zero_vec(n);
  e1[0] = 1;
  verts.push_back(e1);
  for (int i = 1; i < n; ++i) {
    RatVec v = e1;
    v[i] = eps;
    verts.push_back(std::move(v));
  }
  Polytope q = make_polytope(verts);

  Rat expected_c = pow_rat(eps, n - 1) / Rat(factorial(n));

  std::vector<Report> reports;
  for (const Rat& t : t_grid) {
    if (!(t > 0 && t < 1)) throw InvalidArgument("reproduce_count_su: t must lie in (0, 1)");
    IntVec e1_dir(n, 0);
    e1_dir[0] = 1;
    auto qt = intersect_halfspace(q, Halfspace{e1_dir, t});
    Rat diff = q.volume() - (qt ? qt->volume() : Rat(0));
    Rat closed_form = pow_rat(t, n) * expected_c;
    Rat c = diff / pow_rat(t, n);

    std::string blob = "count-su:n=" + std::to_string(n) + ";eps=" + rat_to_string(eps) +
                       ";t=" + rat_to_string(t) + ";" + context;
    reports.push_back(make_exact_report("count-su-volume-difference", digest_hex(blob), diff,
                                        closed_form, Relation::kEqual,
                                        "per-instance constant c = " + rat_to_string(c)));
    reports.push_back(make_exact_report("count-su-constant", digest_hex(blob + "c"), c,
                                        expected_c, Relation::kEqual,
                                        "c = eps^(n-1)/n! shrinks with eps"));
  }
  return reports;
}

MonteCarloEstimate monte_carlo_volume(const Polytope& p, long samples, uint64_t seed) {
  if (samples <= 0) throw InvalidArgument("monte_carlo_volume: need a positive sample count");
  int n = p.ambient_dim();
  std::vector<double> lo(n), span(n);
  double box_vol = 1;
  for (int i = 0; i < n; ++i) {
    Rat mn = p.vertices()[0][i], mx = p.vertices()[0][i];
    for (const RatVec& v : p.vertices()) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = to_double(mn);
    span[i] = to_double(mx - mn);
    box_vol *= span[i];
  }
  MonteCarloEstimate est;
  est.samples = samples;
  if (box_vol <= 0 || !p.full_dim()) return est;  // flat box: exact volume is zero

  struct DoubleHs {
    std::vector<double> normal;
    double offset;
  };
  std::vector<DoubleHs> hs;
  for (const Halfspace& h : p.halfspaces()) {
    DoubleHs d;
    d.offset = to_double(h.offset);
    for (const Int& c : h.normal) d.normal.push_back(c.get_d());
    hs.push_back(std::move(d));
  }

  SplitMix64 rng(seed);
  long hits = 0;
  std::vector<double> x(n);
  for (long s = 0; s < samples; ++s) {
    for (int i = 0; i < n; ++i) x[i] = lo[i] + span[i] * rng.next_double();
    bool inside = true;
    for (const DoubleHs& h : hs) {
      double acc = 0;
      for (int i = 0; i < n; ++i) acc += h.normal[i] * x[i];
      if (acc < h.offset) {
        inside = false;
        break;
      }
    }
    if (inside) ++hits;
  }
  double p_hat = static_cast<double>(hits) / static_cast<double>(samples);
  est.estimate = box_vol * p_hat;
  est.std_error = box_vol * std::sqrt(p_hat * (1 - p_hat) / static_cast<double>(samples));
  return est;
}

}  // namespace polymix
