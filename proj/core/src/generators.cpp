#include "polymix/generators.hpp"

#include "polymix/errors.hpp"

namespace polymix {

Rat random_rat(SplitMix64& rng, int height) {
  long num = rng.next_int(-height, height);
  long den = rng.next_int(1, height);
  return make_rat(num, den);
}

Rat random_positive_rat(SplitMix64& rng, int height) {
  long num = rng.next_int(1, height);
  long den = rng.next_int(1, height);
  return make_rat(num, den);
}

RatVec random_point(SplitMix64& rng, int dim, int height) {
  RatVec p(dim);
  for (int i = 0; i < dim; ++i) p[i] = random_rat(rng, height);
  return p;
}

IntVec random_primitive_direction(SplitMix64& rng, int dim, int height) {
  for (;;) {
    IntVec u(dim);
    bool nonzero = false;
    for (int i = 0; i < dim; ++i) {
      u[i] = Int(rng.next_int(-height, height));
      if (sgn(u[i]) != 0) nonzero = true;
    }
    if (nonzero) return to_primitive(u);
  }
}

Polytope random_polytope(SplitMix64& rng, const InstanceSpec& spec) {
  if (spec.vertex_budget < 1) {
    throw InvalidArgument("random_polytope: vertex budget must be >= 1");
  }
  std::vector<RatVec> pts;
  pts.reserve(spec.vertex_budget);
  for (int i = 0; i < spec.vertex_budget; ++i) {
    pts.push_back(random_point(rng, spec.dim, spec.coordinate_height));
  }
  return make_polytope(pts);
}

Polytope random_fulldim_polytope(SplitMix64& rng, const InstanceSpec& spec) {
  if (spec.vertex_budget < spec.dim + 1) {
    throw InvalidArgument("random_fulldim_polytope: vertex budget below dim+1");
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    Polytope p = random_polytope(rng, spec);
    if (p.full_dim()) return p;
  }
  throw Error("random_fulldim_polytope: exhausted attempts");
}

ToricData random_toric_ambient(SplitMix64& rng, const InstanceSpec& spec) {
  Polytope p = random_fulldim_polytope(rng, spec);
  ToricData data;
  data.dim = spec.dim;
  for (const Halfspace& h : p.halfspaces()) {
    data.rays.push_back(h.normal);
    data.coeffs.push_back(-h.offset);
  }
  return data;
}

Polytope random_subbody(SplitMix64& rng, const Polytope& outer, int budget) {
  if (budget < 1) throw InvalidArgument("random_subbody: budget must be >= 1");
  const auto& verts = outer.vertices();
  std::vector<RatVec> pts;
  pts.reserve(budget);
  for (int i = 0; i < budget; ++i) {
    // Random convex combination with small-denominator weights.
    std::vector<long> w(verts.size());
    long total = 0;
    for (size_t j = 0; j < verts.size(); ++j) {
      w[j] = rng.next_int(0, 8);
      total += w[j];
    }
    if (total == 0) {
      w[rng.next_below(verts.size())] = 1;
      total = 1;
    }
    RatVec p = zero_vec(outer.ambient_dim());
    for (size_t j = 0; j < verts.size(); ++j) {
      if (w[j] == 0) continue;
      p = add(p, scale(make_rat(w[j], total), verts[j]));
    }
    pts.push_back(std::move(p));
  }
  return make_polytope(pts);
}

Polytope random_fulldim_subbody(SplitMix64& rng, const Polytope& outer, int budget) {
  if (!outer.full_dim()) {
    throw DegenerateGeometry("random_fulldim_subbody: outer body is lower-dimensional");
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    Polytope p = random_subbody(rng, outer, budget);
    if (p.full_dim()) return p;
  }
  // A positive-measure event at budget >= dim+1; practically unreachable.
  throw Error("random_fulldim_subbody: exhausted attempts");
}

std::pair<NewtonBody, NewtonBody> random_nested_pair(const InstanceSpec& spec,
                                                     const ToricData& ambient) {
  SplitMix64 rng(spec.seed);
  Polytope ph = newton_polytope(ambient);
  Polytope s = random_subbody(rng, ph, spec.vertex_budget);
  Polytope t = random_subbody(rng, s, spec.vertex_budget);
  NewtonBody s_body = make_newton_body(ambient, std::move(s));
  NewtonBody t_body = make_newton_body(ambient, std::move(t));
  if (!contains_body(s_body.body, t_body.body)) {
    throw Error("random_nested_pair: containment certificate failed");
  }
  return {std::move(t_body), std::move(s_body)};
}

}  // namespace polymix
