#include "polymix/batch.hpp"

#include <algorithm>
#include <cmath>

#include "polymix/area_measure.hpp"
#include "polymix/checks.hpp"
#include "polymix/errors.hpp"
#include "polymix/generators.hpp"
#include "polymix/mixed_volume.hpp"

namespace polymix {

namespace {

std::string seed_context(const BatchSpec& spec, uint64_t seed) {
  return "statement=" + spec.statement + ";dim=" + std::to_string(spec.dim) +
         ";seed=" + std::to_string(seed);
}

void fold_seed(Report& r, const std::string& context) {
  r.inputs_digest = digest_hex(r.inputs_digest + ";" + context);
}

InstanceSpec instance_of(const BatchSpec& spec, uint64_t seed) {
  return InstanceSpec{seed, spec.dim, spec.vertex_budget, spec.coordinate_height};
}

Rat random_fraction(SplitMix64& rng, int height) {  // in [0, 1]
  long den = rng.next_int(1, height);
  long num = rng.next_int(0, den);
  return make_rat(num, den);
}

Rat random_interior_fraction(SplitMix64& rng, int height) {  // in (0, 1)
  long den = rng.next_int(2, std::max(2, height));
  long num = rng.next_int(1, den - 1);
  return make_rat(num, den);
}

int random_ray(SplitMix64& rng, const ToricData& d) {
  return static_cast<int>(rng.next_below(d.rays.size()));
}

PiecewiseLinear random_concave_pl(SplitMix64& rng, int height) {
  int segments = static_cast<int>(rng.next_below(3)) + 1;
  Rat a_len = random_positive_rat(rng, height);
  std::vector<Rat> xs = {Rat(0)};
  std::vector<Rat> interior;
  for (int i = 0; i + 1 < segments; ++i) {
    interior.push_back(random_interior_fraction(rng, height) * a_len);
  }
  std::sort(interior.begin(), interior.end());
  interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
  for (const Rat& x : interior) xs.push_back(x);
  xs.push_back(a_len);

  std::vector<Rat> slopes;
  for (size_t i = 0; i + 1 < xs.size(); ++i) slopes.push_back(random_rat(rng, height));
  std::sort(slopes.begin(), slopes.end(), [](const Rat& a, const Rat& b) { return a > b; });

  PiecewiseLinear f;
  Rat y = random_positive_rat(rng, height);
  Rat min_y = y;
  f.knots.emplace_back(xs[0], y);
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    y += slopes[i] * (xs[i + 1] - xs[i]);
    if (y < min_y) min_y = y;
    f.knots.emplace_back(xs[i + 1], y);
  }
  if (sign(min_y) < 0) {
    for (auto& [x, v] : f.knots) v -= min_y;  // lift to stay nonnegative, still concave
  }
  return f;
}

using PairVec = std::vector<std::pair<NewtonBody, NewtonBody>>;

PairVec random_pair_tuple(SplitMix64& rng, const BatchSpec& spec, const ToricData& ambient) {
  Polytope ph = newton_polytope(ambient);
  int budget = std::max(spec.vertex_budget, spec.dim + 1);
  PairVec pairs;
  for (int i = 0; i < spec.dim; ++i) {
    Polytope s = random_fulldim_subbody(rng, ph, budget);
    Polytope t = random_subbody(rng, s, spec.vertex_budget);
    pairs.emplace_back(make_newton_body(ambient, std::move(t)),
                       make_newton_body(ambient, std::move(s)));
  }
  return pairs;
}

// One report per instance; if an identity fails on some ray, that ray's
// values are reported so the exactness contract stays honest.
Report worst_ray_report(const std::string& statement, const std::string& blob,
                        const std::vector<std::pair<Rat, Rat>>& per_ray, Relation rel) {
  size_t pick = 0;
  for (size_t i = 0; i < per_ray.size(); ++i) {
    const auto& [l, r] = per_ray[i];
    bool ok = rel == Relation::kEqual ? l == r : l >= r;
    if (!ok) {
      pick = i;
      break;
    }
  }
  Report rep = make_exact_report(statement, digest_hex(blob), per_ray[pick].first,
                                 per_ray[pick].second, rel,
                                 "ray " + std::to_string(pick) + " of " +
                                     std::to_string(per_ray.size()));
  if (rel == Relation::kEqual) {
    for (const auto& [l, r] : per_ray) rep.holds = rep.holds && l == r;
  } else {
    for (const auto& [l, r] : per_ray) rep.holds = rep.holds && l >= r;
  }
  return rep;
}

}  // namespace

const std::vector<std::string>& known_statements() {
  static const std::vector<std::string> kStatements = {
      "minkowski",
      "res-vol-lower-bound",
      "loss-single",
      "loss-mixed",
      "loss-product",
      "alpha-t-mixed",
      "concave-integral",
      "slice-lower-bound",
      "ratio-monotone",
      "riemann-surface",
      "oracle-equivalence",
      "mc-volume",
      "brunn-minkowski",
      "dictionary-additivity",
      "dictionary-shift-scale",
      "dictionary-monotonicity",
  };
  return kStatements;
}

std::vector<Report> run_statement_batch(const BatchSpec& spec) {
  if (std::find(known_statements().begin(), known_statements().end(), spec.statement) ==
      known_statements().end()) {
    throw InvalidArgument("unknown statement id: " + spec.statement);
  }
  if (spec.seed_end < spec.seed_begin) throw InvalidArgument("empty seed range");
  if (spec.dim < 1 || spec.dim > 5) throw InvalidArgument("dimension must be in [1, 5]");

  std::vector<Report> reports;
  for (uint64_t seed = spec.seed_begin; seed <= spec.seed_end; ++seed) {
    SplitMix64 rng(seed);
    const std::string ctx = seed_context(spec, seed);
    const InstanceSpec inst = instance_of(spec, seed);

    if (spec.statement == "minkowski") {
      PolytopeTuple p_list;
      for (int i = 0; i + 1 < spec.dim; ++i) p_list.push_back(random_fulldim_polytope(rng, inst));
      Polytope qprime = random_polytope(rng, inst);
      Polytope q = random_subbody(rng, qprime, spec.vertex_budget);
      Report r = minkowski_formula_check(p_list, q, qprime);
      fold_seed(r, ctx);
      reports.push_back(std::move(r));

    } else if (spec.statement == "res-vol-lower-bound") {
      ToricData ambient = random_toric_ambient(rng, inst);
      int ray = random_ray(rng, ambient);
      WidthInfo w = nu_max_and_width(ambient, ray);
      Rat t = w.nu_min + random_fraction(rng, spec.coordinate_height) * w.width;
      reports.push_back(check_res_vol_lower_bound(ambient, ray, t, ctx));

    } else if (spec.statement == "loss-single") {
      ToricData ambient = random_toric_ambient(rng, inst);
      int ray = random_ray(rng, ambient);
      InstanceSpec pair_spec = inst;
      pair_spec.seed = rng.next_u64();
      auto [t_body, s_body] = random_nested_pair(pair_spec, ambient);
      reports.push_back(check_loss_single(t_body, s_body, ray, ctx));

    } else if (spec.statement == "loss-mixed" || spec.statement == "loss-product") {
      ToricData ambient = random_toric_ambient(rng, inst);
      int ray = random_ray(rng, ambient);
      PairVec pairs = random_pair_tuple(rng, spec, ambient);
      reports.push_back(spec.statement == "loss-mixed" ? check_loss_mixed(pairs, ray, ctx)
                                                       : check_loss_product(pairs, ray, ctx));

    } else if (spec.statement == "alpha-t-mixed") {
      ToricData ambient = random_toric_ambient(rng, inst);
      int ray = random_ray(rng, ambient);
      Polytope ph = newton_polytope(ambient);
      std::vector<NewtonBody> bodies;
      for (int i = 0; i < spec.dim; ++i) {
        bodies.push_back(make_newton_body(ambient, random_subbody(rng, ph, spec.vertex_budget)));
      }
      reports.push_back(check_alpha_T_mixed(bodies, ray, ctx));

    } else if (spec.statement == "concave-integral") {
      PiecewiseLinear f = random_concave_pl(rng, spec.coordinate_height);
      Rat a_len = f.knots.back().first;
      Rat t0 = random_interior_fraction(rng, spec.coordinate_height) * a_len;
      int n = static_cast<int>(rng.next_below(4)) + 1;
      reports.push_back(check_concave_integral(f, t0, n, ctx));

    } else if (spec.statement == "slice-lower-bound") {
      Polytope p = random_fulldim_polytope(rng, inst);
      IntVec u = random_primitive_direction(rng, spec.dim, 3);
      auto [lo, hi] = support_range(p, u);
      Rat t0 = random_fraction(rng, spec.coordinate_height) * (hi - lo);
      reports.push_back(check_slice_lower_bound(p, u, t0, ctx));

    } else if (spec.statement == "ratio-monotone") {
      Polytope p = random_fulldim_polytope(rng, inst);
      Polytope q = random_subbody(rng, p, spec.vertex_budget);
      IntVec u = random_primitive_direction(rng, spec.dim, 3);
      reports.push_back(check_ratio_monotone(p, q, u, spec.grid_points, ctx));

    } else if (spec.statement == "riemann-surface") {
      Rat left = random_rat(rng, spec.coordinate_height);
      Rat len = random_positive_rat(rng, spec.coordinate_height);
      ToricData ambient{1, {IntVec{Int(1)}, IntVec{Int(-1)}}, {-left, left + len}};
      InstanceSpec pair_spec = inst;
      pair_spec.seed = rng.next_u64();
      pair_spec.dim = 1;
      auto [t_body, s_body] = random_nested_pair(pair_spec, ambient);
      Report r = riemann_surface_difference(t_body, s_body);
      fold_seed(r, ctx);
      reports.push_back(std::move(r));

    } else if (spec.statement == "oracle-equivalence") {
      PolytopeTuple bodies;
      for (int i = 0; i < spec.dim; ++i) {
        // Mix in occasional degenerate arguments.
        if (rng.next_below(4) == 0) {
          InstanceSpec thin = inst;
          thin.vertex_budget = 2;
          bodies.push_back(random_polytope(rng, thin));
        } else {
          bodies.push_back(random_fulldim_polytope(rng, inst));
        }
      }
      Rat lhs = mixed_volume(bodies);
      Rat rhs = mixed_volume_oracle(bodies);
      std::string blob = "oracle:" + ctx;
      reports.push_back(make_exact_report("oracle-equivalence", digest_hex(blob), std::move(lhs),
                                          std::move(rhs), Relation::kEqual,
                                          "polarization vs polynomial fit"));

    } else if (spec.statement == "mc-volume") {
      Polytope p = random_fulldim_polytope(rng, inst);
      MonteCarloEstimate est = monte_carlo_volume(p, spec.mc_samples, rng.next_u64());
      Rat box = 1;
      for (int i = 0; i < spec.dim; ++i) {
        auto [lo, hi] = support_range(p, [&] {
          IntVec e(spec.dim, 0);
          e[i] = 1;
          return e;
        }());
        box *= hi - lo;
      }
      double p_true = to_double(p.volume() / box);
      double sigma = to_double(box) *
                     std::sqrt(p_true * (1 - p_true) / static_cast<double>(spec.mc_samples));
      std::string blob = "mc:" + ctx;
      reports.push_back(make_float_report("mc-volume", digest_hex(blob), est.estimate,
                                          to_double(p.volume()), Relation::kEqual, 4 * sigma,
                                          "binomial 4-sigma window"));

    } else if (spec.statement == "brunn-minkowski") {
      Polytope p = random_polytope(rng, inst);
      Polytope q = random_polytope(rng, inst);
      double gap = brunn_minkowski_gap(p, q);
      std::string blob = "bm:" + ctx;
      reports.push_back(make_float_report("brunn-minkowski", digest_hex(blob), gap, 0.0,
                                          Relation::kGreaterEqual, kBrunnMinkowskiTol,
                                          "vol(P+Q)^(1/n) - vol(P)^(1/n) - vol(Q)^(1/n)"));

    } else if (spec.statement == "dictionary-additivity") {
      ToricData ambient = random_toric_ambient(rng, inst);
      Polytope ph = newton_polytope(ambient);
      NewtonBody t = make_newton_body(ambient, random_subbody(rng, ph, spec.vertex_budget));
      NewtonBody s = make_newton_body(ambient, random_subbody(rng, ph, spec.vertex_budget));
      ToricData doubled = ambient;
      for (Rat& a : doubled.coeffs) a *= 2;
      NewtonBody sum = make_newton_body(doubled, minkowski_sum(t.body, s.body));
      std::vector<std::pair<Rat, Rat>> per_ray;
      for (size_t r = 0; r < ambient.rays.size(); ++r) {
        per_ray.emplace_back(lelong_number(sum, static_cast<int>(r)),
                             lelong_number(t, static_cast<int>(r)) +
                                 lelong_number(s, static_cast<int>(r)));
      }
      reports.push_back(
          worst_ray_report("dictionary-lelong-additivity", "dict-add:" + ctx, per_ray,
                           Relation::kEqual));

    } else if (spec.statement == "dictionary-shift-scale") {
      ToricData ambient = random_toric_ambient(rng, inst);
      int ray = random_ray(rng, ambient);
      WidthInfo w = nu_max_and_width(ambient, ray);

      Rat t = random_positive_rat(rng, spec.coordinate_height);
      ToricData shifted = ambient;
      shifted.coeffs[ray] += t;
      WidthInfo ws = nu_max_and_width(shifted, ray);
      reports.push_back(make_exact_report("dictionary-numax-shift",
                                          digest_hex("dict-shift:" + ctx), ws.nu_max,
                                          w.nu_max + t, Relation::kEqual,
                                          "nu_max(alpha + t D) = nu_max(alpha) + t"));

      Rat lambda = random_positive_rat(rng, spec.coordinate_height);
      ToricData scaled = ambient;
      for (Rat& a : scaled.coeffs) a *= lambda;
      WidthInfo wl = nu_max_and_width(scaled, ray);
      Report scale_rep = make_exact_report("dictionary-numax-scale",
                                           digest_hex("dict-scale:" + ctx), wl.nu_max,
                                           lambda * w.nu_max, Relation::kEqual,
                                           "width scales alongside");
      scale_rep.holds = scale_rep.holds && wl.width == lambda * w.width;
      reports.push_back(std::move(scale_rep));

      ToricData recentred = ambient;
      recentred.coeffs[ray] -= w.nu_min;
      WidthInfo wr = nu_max_and_width(recentred, ray);
      reports.push_back(make_exact_report("dictionary-width-shift-invariance",
                                          digest_hex("dict-wid:" + ctx), wr.width, w.width,
                                          Relation::kEqual,
                                          "width survives removing the minimal Lelong number"));

    } else if (spec.statement == "dictionary-monotonicity") {
      ToricData ambient = random_toric_ambient(rng, inst);
      InstanceSpec pair_spec = inst;
      pair_spec.seed = rng.next_u64();
      auto [t_body, s_body] = random_nested_pair(pair_spec, ambient);
      std::vector<std::pair<Rat, Rat>> per_ray;
      for (size_t r = 0; r < ambient.rays.size(); ++r) {
        per_ray.emplace_back(lelong_number(t_body, static_cast<int>(r)),
                             lelong_number(s_body, static_cast<int>(r)));
      }
      reports.push_back(worst_ray_report("dictionary-lelong-monotonicity", "dict-mono:" + ctx,
                                         per_ray, Relation::kGreaterEqual));
    }
  }
  return reports;
}

}  // namespace polymix
