#include "polymix/area_measure.hpp"

#include <algorithm>
#include <sstream>

#include "polymix/errors.hpp"
#include "polymix/unimodular.hpp"

namespace polymix {

namespace {

/// Writes the face F(P, u) in the lattice-normalized coordinates of the
/// quotient by u: transform so <x, u> becomes the first coordinate, then drop
/// it. The face lies in a single level set, so nothing is distorted.
Polytope face_in_quotient(const Polytope& body, const UnimodularMap& m, const IntVec& u) {
  Polytope f = face(body, u);
  std::vector<RatVec> dropped;
  dropped.reserve(f.vertices().size());
  std::vector<IntVec> a = transpose(m.inv);  // inverse transpose of fwd
  for (const RatVec& v : f.vertices()) {
    RatVec y = apply_matrix(a, v);
    dropped.emplace_back(y.begin() + 1, y.end());
  }
  return make_polytope(dropped);
}

}  // namespace

MixedAreaMeasure mixed_area_measure(const PolytopeTuple& bodies, int dim) {
  if (dim < 1) throw InvalidArgument("mixed_area_measure: dimension must be >= 1");
  if (static_cast<int>(bodies.size()) != dim - 1) {
    throw DimensionMismatch("mixed_area_measure needs n-1 bodies in dimension n");
  }
  for (const Polytope& b : bodies) {
    if (b.ambient_dim() != dim) {
      throw DimensionMismatch("mixed_area_measure: body dimension mismatch");
    }
  }

  MixedAreaMeasure measure;
  measure.dim = dim;

  if (dim == 1) {
    measure.atoms.push_back(MeasureAtom{IntVec{Int(-1)}, Rat(1)});
    measure.atoms.push_back(MeasureAtom{IntVec{Int(1)}, Rat(1)});
    return measure;
  }

  Polytope sum = bodies[0];
  for (size_t i = 1; i < bodies.size(); ++i) sum = minkowski_sum(sum, bodies[i]);
  if (!sum.full_dim()) {
    std::ostringstream os;
    os << "mixed_area_measure: tuple sum is " << sum.intrinsic_dim()
       << "-dimensional in dimension " << dim;
    for (const Halfspace& h : sum.halfspaces()) {
      Halfspace flip{negate(h.normal), -h.offset};
      auto it = std::find_if(sum.halfspaces().begin(), sum.halfspaces().end(),
                             [&](const Halfspace& o) { return o == flip; });
      if (it != sum.halfspaces().end()) {
        os << "; deficient along " << vec_to_string(h.normal);
        break;
      }
    }
    throw DegenerateGeometry(os.str());
  }

  for (const Halfspace& h : sum.halfspaces()) {
    // Inner normal stored, outer direction measured.
    IntVec u = negate(h.normal);
    UnimodularMap m = unimodular_to_e1(u);
    PolytopeTuple faces;
    faces.reserve(bodies.size());
    for (const Polytope& b : bodies) faces.push_back(face_in_quotient(b, m, u));
    Rat w = mixed_volume(faces);
    if (sign(w) > 0) measure.atoms.push_back(MeasureAtom{std::move(u), std::move(w)});
  }
  std::sort(measure.atoms.begin(), measure.atoms.end(),
            [](const MeasureAtom& a, const MeasureAtom& b) {
              return lex_less(a.direction, b.direction);
            });
  return measure;
}

Rat support_integral(const MixedAreaMeasure& measure, const Polytope& qprime, const Polytope& q) {
  if (qprime.ambient_dim() != measure.dim || q.ambient_dim() != measure.dim) {
    throw DimensionMismatch("support_integral: dimension mismatch");
  }
  Rat acc = 0;
  for (const MeasureAtom& atom : measure.atoms) {
    acc += (support_value(qprime, atom.direction) - support_value(q, atom.direction)) *
           atom.weight;
  }
  return acc / Rat(measure.dim);
}

Report minkowski_formula_check(const PolytopeTuple& p_list, const Polytope& q,
                               const Polytope& qprime) {
  if (!contains_body(qprime, q)) {
    throw DegenerateGeometry("minkowski_formula_check: Q is not contained in Q'");
  }
  int n = q.ambient_dim();
  if (static_cast<int>(p_list.size()) != n - 1) {
    throw DimensionMismatch("minkowski_formula_check needs n-1 leading bodies");
  }

  PolytopeTuple with_qprime = p_list;
  with_qprime.push_back(qprime);
  PolytopeTuple with_q = p_list;
  with_q.push_back(q);
  Rat lhs = mixed_volume(with_qprime) - mixed_volume(with_q);
  Rat rhs = support_integral(mixed_area_measure(p_list, n), qprime, q);

  std::string blob = "minkowski";
  for (const Polytope& p : p_list) {
    for (const RatVec& v : p.vertices()) blob += vec_to_string(v);
  }
  for (const RatVec& v : q.vertices()) blob += vec_to_string(v);
  for (const RatVec& v : qprime.vertices()) blob += vec_to_string(v);
  return make_exact_report("minkowski-volume-formula", digest_hex(blob), std::move(lhs),
                           std::move(rhs), Relation::kEqual);
}

}  // namespace polymix
