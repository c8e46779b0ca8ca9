#include "polymix/toric.hpp"

#include <algorithm>
#include <sstream>

#include "polymix/errors.hpp"
#include "polymix/mixed_volume.hpp"
#include "polymix/unimodular.hpp"

namespace polymix {

bool operator==(const ToricData& a, const ToricData& b) {
  return a.dim == b.dim && a.rays == b.rays && a.coeffs == b.coeffs;
}

void validate_toric(const ToricData& data) {
  if (data.dim < 1) throw InvalidArgument("toric data: dimension must be >= 1");
  if (data.rays.size() != data.coeffs.size()) {
    throw InvalidArgument("toric data: rays and coefficients differ in length");
  }
  if (data.rays.empty()) throw InvalidArgument("toric data: no rays");
  for (const IntVec& u : data.rays) {
    if (static_cast<int>(u.size()) != data.dim) {
      throw DimensionMismatch("toric data: ray dimension mismatch");
    }
    if (!is_primitive(u)) {
      throw InvalidArgument("toric data: ray is not primitive: " + vec_to_string(u));
    }
  }
  for (size_t i = 0; i < data.rays.size(); ++i) {
    for (size_t j = i + 1; j < data.rays.size(); ++j) {
      if (data.rays[i] == data.rays[j]) {
        throw InvalidArgument("toric data: repeated ray " + vec_to_string(data.rays[i]));
      }
    }
  }
}

namespace {

void check_ray_index(const ToricData& data, int ray_index) {
  if (ray_index < 0 || ray_index >= static_cast<int>(data.rays.size())) {
    throw InvalidArgument("ray index out of range");
  }
}

std::string toric_blob(const ToricData& data) {
  std::string blob = "toric:";
  for (const IntVec& u : data.rays) blob += vec_to_string(u);
  blob += "|";
  for (const Rat& a : data.coeffs) blob += rat_to_string(a) + ",";
  return blob;
}

std::string body_blob(const NewtonBody& nb) {
  std::string blob = toric_blob(nb.ambient) + "body:";
  for (const RatVec& v : nb.body.vertices()) blob += vec_to_string(v);
  return blob;
}

}  // namespace

Polytope newton_polytope(const ToricData& data) {
  validate_toric(data);
  std::vector<Halfspace> hs;
  hs.reserve(data.rays.size());
  for (size_t i = 0; i < data.rays.size(); ++i) {
    hs.push_back(Halfspace{data.rays[i], -data.coeffs[i]});
  }
  return from_halfspaces(hs, data.dim);
}

NewtonBody make_newton_body(const ToricData& ambient, Polytope body) {
  Polytope ph = newton_polytope(ambient);
  if (body.ambient_dim() != ambient.dim) {
    throw DimensionMismatch("newton body: dimension mismatch with ambient");
  }
  if (!contains_body(ph, body)) {
    throw DegenerateGeometry("newton body is not contained in the Newton polytope");
  }
  return NewtonBody{ambient, std::move(body)};
}

NewtonBody class_body(const ToricData& ambient) {
  Polytope ph = newton_polytope(ambient);
  return NewtonBody{ambient, std::move(ph)};
}

Rat lelong_number(const NewtonBody& nb, int ray_index) {
  check_ray_index(nb.ambient, ray_index);
  const IntVec& u = nb.ambient.rays[ray_index];
  auto [lo, hi] = support_range(nb.body, u);
  (void)hi;
  return lo + nb.ambient.coeffs[ray_index];
}

Rat current_volume(const NewtonBody& nb) {
  return Rat(factorial(nb.ambient.dim)) * nb.body.volume();
}

WidthInfo nu_max_and_width(const ToricData& data, int ray_index) {
  check_ray_index(data, ray_index);
  Polytope ph = newton_polytope(data);
  if (!ph.full_dim()) {
    std::ostringstream os;
    os << "nu_max_and_width: Newton polytope is " << ph.intrinsic_dim()
       << "-dimensional; the width along a ray may vanish";
    throw DegenerateGeometry(os.str());
  }
  auto [lo, hi] = support_range(ph, data.rays[ray_index]);
  const Rat& a = data.coeffs[ray_index];
  return WidthInfo{lo + a, hi + a, hi - lo};
}

RestrictedVolume restricted_volume(const NewtonBody& nb, int ray_index, const Rat& t) {
  check_ray_index(nb.ambient, ray_index);
  const IntVec& u = nb.ambient.rays[ray_index];
  const Rat& a = nb.ambient.coeffs[ray_index];
  auto [lo, hi] = support_range(nb.body, u);
  Rat nu = lo + a;
  Rat nu_max = hi + a;
  if (t < nu || t > nu_max) return RestrictedVolume{Rat(0), false};

  int n = nb.ambient.dim;
  if (n == 1) return RestrictedVolume{Rat(1), true};

  auto slice = lattice_slice(nb.body, u, t - a);
  if (!slice) return RestrictedVolume{Rat(0), true};  // touching slice of a face
  return RestrictedVolume{Rat(factorial(n - 1)) * slice->volume(), true};
}

Rat mixed_restricted_volume(const std::vector<NewtonBody>& bodies, int ray_index) {
  if (bodies.empty()) throw InvalidArgument("mixed_restricted_volume: empty tuple");
  const ToricData& ambient = bodies[0].ambient;
  int n = ambient.dim;
  if (n < 2) throw InvalidArgument("mixed_restricted_volume: needs dimension >= 2");
  if (static_cast<int>(bodies.size()) != n - 1) {
    throw DimensionMismatch("mixed_restricted_volume needs n-1 bodies in dimension n");
  }
  for (const NewtonBody& b : bodies) {
    if (!(b.ambient == ambient)) {
      throw DimensionMismatch("mixed_restricted_volume: bodies have different ambients");
    }
  }
  check_ray_index(ambient, ray_index);

  // Faces at the minimal support level along the ray, written in the
  // lattice-normalized quotient coordinates of u.
  const IntVec& u = ambient.rays[ray_index];
  UnimodularMap m = unimodular_to_e1(u);
  std::vector<IntVec> a = transpose(m.inv);
  PolytopeTuple faces;
  faces.reserve(bodies.size());
  for (const NewtonBody& b : bodies) {
    Polytope f = face(b.body, negate(u));
    std::vector<RatVec> dropped;
    dropped.reserve(f.vertices().size());
    for (const RatVec& v : f.vertices()) {
      RatVec y = apply_matrix(a, v);
      dropped.emplace_back(y.begin() + 1, y.end());
    }
    faces.push_back(make_polytope(dropped));
  }
  return Rat(factorial(n - 1)) * mixed_volume(faces);
}

Report riemann_surface_difference(const NewtonBody& t_body, const NewtonBody& tprime_body) {
  const ToricData& ambient = t_body.ambient;
  if (ambient.dim != 1) {
    throw InvalidArgument("riemann_surface_difference is a dimension-one identity");
  }
  if (!(tprime_body.ambient == ambient)) {
    throw DimensionMismatch("riemann_surface_difference: bodies in different ambients");
  }
  if (ambient.rays.size() != 2) {
    throw InvalidArgument("riemann_surface_difference: ambient needs the two rays +1, -1");
  }
  if (!contains_body(tprime_body.body, t_body.body)) {
    throw DegenerateGeometry("riemann_surface_difference: containment violated");
  }

  Rat lhs = current_volume(tprime_body) - current_volume(t_body);
  Rat rhs = 0;
  for (int i = 0; i < 2; ++i) {
    rhs += lelong_number(t_body, i) - lelong_number(tprime_body, i);
  }
  std::string blob = "riemann-surface:" + body_blob(t_body) + body_blob(tprime_body);
  return make_exact_report("riemann-surface-identity", digest_hex(blob), std::move(lhs),
                           std::move(rhs), Relation::kEqual);
}

}  // namespace polymix
