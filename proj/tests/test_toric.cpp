#include "polymix/toric.hpp"

#include "doctest.h"
#include "polymix/errors.hpp"
#include "polymix/generators.hpp"
#include "polymix/linalg.hpp"
#include "polymix/rng.hpp"

using namespace polymix;

namespace {

RatVec pt(std::initializer_list<const char*> xs) {
  RatVec v;
  for (const char* x : xs) v.push_back(parse_rat(x));
  return v;
}

// O(1,1) on P^1 x P^1: Newton polytope [0,1]^2.
ToricData square_data() {
  return ToricData{2,
                   {IntVec{1, 0}, IntVec{-1, 0}, IntVec{0, 1}, IntVec{0, -1}},
                   {Rat(0), Rat(1), Rat(0), Rat(1)}};
}

Polytope unit_square() {
  return make_polytope({pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1"}), pt({"1", "1"})});
}

}  // namespace

TEST_CASE("newton polytopes of the standard examples") {
  CHECK(newton_polytope(square_data()) == unit_square());

  ToricData p2{2, {IntVec{1, 0}, IntVec{0, 1}, IntVec{-1, -1}}, {Rat(0), Rat(0), Rat(1)}};
  CHECK(newton_polytope(p2) ==
        make_polytope({pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1"})}));

  ToricData point1{1, {IntVec{Int(1)}, IntVec{Int(-1)}}, {Rat(0), Rat(0)}};
  Polytope p = newton_polytope(point1);
  CHECK(p.is_point());
  CHECK(p.vertices()[0] == pt({"0"}));
}

TEST_CASE("newton polytope failure modes") {
  ToricData unbounded{2, {IntVec{1, 0}, IntVec{0, 1}}, {Rat(0), Rat(0)}};
  CHECK_THROWS_AS(newton_polytope(unbounded), UnboundedRegion);

  ToricData empty{1, {IntVec{Int(1)}, IntVec{Int(-1)}}, {Rat(-2), Rat(1)}};
  CHECK_THROWS_AS(newton_polytope(empty), EmptyRegion);

  ToricData bad_ray{2, {IntVec{2, 0}, IntVec{-1, 0}, IntVec{0, 1}, IntVec{0, -1}},
                    {Rat(0), Rat(1), Rat(0), Rat(1)}};
  CHECK_THROWS_AS(newton_polytope(bad_ray), InvalidArgument);
}

TEST_CASE("lelong numbers") {
  ToricData d = square_data();
  NewtonBody full = class_body(d);
  CHECK(lelong_number(full, 0) == 0);

  NewtonBody half = make_newton_body(
      d, make_polytope({pt({"1/2", "0"}), pt({"1", "0"}), pt({"1/2", "1"}), pt({"1", "1"})}));
  CHECK(lelong_number(half, 0) == parse_rat("1/2"));
  CHECK(lelong_number(half, 1) == 0);

  CHECK_THROWS_AS(lelong_number(full, 7), InvalidArgument);

  // Sliced-simplex family: the body cut at x1 >= t has Lelong number t along
  // the ray (1, 0, ...).
  for (int n = 2; n <= 3; ++n) {
    std::vector<IntVec> rays;
    std::vector<Rat> coeffs;
    for (int i = 0; i < n; ++i) {
      IntVec plus(n, 0), minus(n, 0);
      plus[i] = 1;
      minus[i] = -1;
      rays.push_back(plus);
      coeffs.push_back(Rat(0));
      rays.push_back(minus);
      coeffs.push_back(Rat(1));
    }
    ToricData cube_data{n, rays, coeffs};

    Rat eps = parse_rat("1/2");
    std::vector<RatVec> verts;
    verts.push_back(zero_vec(n));
    RatVec e1v = zero_vec(n);
    e1v[0] = 1;
    verts.push_back(e1v);
    for (int i = 1; i < n; ++i) {
      RatVec v = e1v;
      v[i] = eps;
      verts.push_back(v);
    }
    Polytope q = make_polytope(verts);
    Rat t = parse_rat("1/3");
    IntVec e1(n, 0);
    e1[0] = 1;
    auto qt = intersect_halfspace(q, Halfspace{e1, t});
    REQUIRE(qt);
    NewtonBody body = make_newton_body(cube_data, *qt);
    CHECK(lelong_number(body, 0) == t);
  }
}

TEST_CASE("current volume") {
  ToricData d = square_data();
  CHECK(current_volume(class_body(d)) == 2);
  NewtonBody point = make_newton_body(d, make_polytope({pt({"1/2", "1/2"})}));
  CHECK(current_volume(point) == 0);
  ToricData tri{2, {IntVec{1, 0}, IntVec{0, 1}, IntVec{-1, -2}}, {Rat(0), Rat(0), Rat(1)}};
  // Newton polytope conv{(0,0),(1,0),(1,1/2)}... built directly as a body:
  NewtonBody skew = make_newton_body(
      d, make_polytope({pt({"0", "0"}), pt({"1", "0"}), pt({"1", "1/2"})}));
  CHECK(current_volume(skew) == parse_rat("1/2"));
  (void)tri;
}

TEST_CASE("nu_max and width") {
  ToricData d = square_data();
  WidthInfo w = nu_max_and_width(d, 0);
  CHECK(w.nu_max == 1);
  CHECK(w.width == 1);
  CHECK(w.nu_min == 0);

  // Non-fan direction (1,1) as an extra ray with slack coefficient.
  ToricData diag = d;
  diag.rays.push_back(IntVec{1, 1});
  diag.coeffs.push_back(Rat(1));  // x + y >= -1 is slack on [0,1]^2
  WidthInfo wd = nu_max_and_width(diag, 4);
  CHECK(wd.nu_max == 3);  // max(x+y) + 1
  CHECK(wd.nu_min == 1);  // min(x+y) + 1
  CHECK(wd.width == 2);

  // Adding t{D} shifts nu_max by t (the relaxed region gains no larger
  // pairing values); subtracting the minimal Lelong number keeps the width.
  ToricData shifted = d;
  shifted.coeffs[0] += parse_rat("3/7");
  WidthInfo ws = nu_max_and_width(shifted, 0);
  CHECK(ws.nu_max == w.nu_max + parse_rat("3/7"));

  ToricData recentred = diag;
  recentred.coeffs[4] -= wd.nu_min;
  WidthInfo wr = nu_max_and_width(recentred, 4);
  CHECK(wr.nu_min == 0);
  CHECK(wr.width == wd.width);

  ToricData flat{2,
                 {IntVec{1, 0}, IntVec{-1, 0}, IntVec{0, 1}, IntVec{0, -1}},
                 {Rat(0), Rat(0), Rat(0), Rat(1)}};  // segment {0} x [0,1]
  CHECK_THROWS_AS(nu_max_and_width(flat, 0), DegenerateGeometry);
}

TEST_CASE("restricted volumes") {
  ToricData d = square_data();
  NewtonBody full = class_body(d);
  RestrictedVolume rv = restricted_volume(full, 0, parse_rat("1/2"));
  CHECK(rv.in_range);
  CHECK(rv.value == 1);

  // Out of range: zero with a note, not an error.
  RestrictedVolume out = restricted_volume(full, 0, Rat(2));
  CHECK_FALSE(out.in_range);
  CHECK(out.value == 0);

  // Sliced-simplex: slice length at level t is t/2, so the restricted volume
  // is 1! * t/2.
  NewtonBody skew = make_newton_body(
      d, make_polytope({pt({"0", "0"}), pt({"1", "0"}), pt({"1", "1/2"})}));
  Rat t = parse_rat("2/3");
  CHECK(restricted_volume(skew, 0, t).value == t / 2);

  // Equality instance of the lower bound: box at midpoint.
  WidthInfo w = nu_max_and_width(d, 0);
  Rat bound = current_volume(full) / pow_rat(w.width, 2) *
              pow_rat(std::min(parse_rat("1/2") - w.nu_min, w.nu_max - parse_rat("1/2")), 1);
  CHECK(restricted_volume(full, 0, parse_rat("1/2")).value == bound);

  // Dimension one: the slice is a point while t stays in range.
  ToricData seg{1, {IntVec{Int(1)}, IntVec{Int(-1)}}, {Rat(0), Rat(1)}};
  CHECK(restricted_volume(class_body(seg), 0, parse_rat("1/3")).value == 1);
  CHECK_FALSE(restricted_volume(class_body(seg), 0, Rat(2)).in_range);
}

TEST_CASE("mixed restricted volumes") {
  ToricData d = square_data();
  NewtonBody full = class_body(d);
  CHECK(mixed_restricted_volume({full}, 0) == 1);

  NewtonBody point = make_newton_body(d, make_polytope({pt({"1/2", "1/2"})}));
  CHECK(mixed_restricted_volume({point}, 0) == 0);

  // n = 3 cube: the face along -e1 is a unit square of lattice area 1.
  std::vector<IntVec> rays;
  std::vector<Rat> coeffs;
  for (int i = 0; i < 3; ++i) {
    IntVec plus(3, 0), minus(3, 0);
    plus[i] = 1;
    minus[i] = -1;
    rays.push_back(plus);
    coeffs.push_back(Rat(0));
    rays.push_back(minus);
    coeffs.push_back(Rat(1));
  }
  ToricData cube{3, rays, coeffs};
  NewtonBody cb = class_body(cube);
  CHECK(mixed_restricted_volume({cb, cb}, 0) == 2);  // 2! * area 1

  CHECK_THROWS_AS(mixed_restricted_volume({full, full}, 0), DimensionMismatch);
}

TEST_CASE("riemann surface identity") {
  ToricData seg{1, {IntVec{Int(1)}, IntVec{Int(-1)}}, {Rat(0), Rat(1)}};
  NewtonBody t_body = make_newton_body(seg, make_polytope({pt({"1/3"}), pt({"1/2"})}));
  NewtonBody s_body = make_newton_body(seg, make_polytope({pt({"0"}), pt({"1"})}));
  Report r = riemann_surface_difference(t_body, s_body);
  CHECK(r.holds);
  CHECK(std::get<Rat>(r.lhs) == parse_rat("5/6"));
  CHECK(std::get<Rat>(r.rhs) == parse_rat("5/6"));

  Report same = riemann_surface_difference(t_body, t_body);
  CHECK(same.holds);
  CHECK(std::get<Rat>(same.lhs) == 0);

  CHECK_THROWS_AS(riemann_surface_difference(s_body, t_body), DegenerateGeometry);
}

TEST_CASE("dictionary linearity: lelong numbers add under Minkowski sums") {
  SplitMix64 rng(307);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(2));
    InstanceSpec spec{rng.next_u64(), n, n + 3, 8};
    SplitMix64 sub(spec.seed);
    ToricData ambient = random_toric_ambient(sub, spec);
    Polytope ph = newton_polytope(ambient);
    NewtonBody a = make_newton_body(ambient, random_subbody(sub, ph, spec.vertex_budget));
    NewtonBody b = make_newton_body(ambient, random_subbody(sub, ph, spec.vertex_budget));
    ToricData doubled = ambient;
    for (Rat& c : doubled.coeffs) c *= 2;
    NewtonBody s = make_newton_body(doubled, minkowski_sum(a.body, b.body));
    for (size_t ray = 0; ray < ambient.rays.size(); ++ray) {
      int r = static_cast<int>(ray);
      CHECK(lelong_number(s, r) == lelong_number(a, r) + lelong_number(b, r));
    }
  }
}

TEST_CASE("dictionary monotonicity: containment reverses lelong order") {
  SplitMix64 rng(311);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(3));
    InstanceSpec spec{rng.next_u64(), n, n + 3, 8};
    SplitMix64 sub(spec.seed);
    ToricData ambient = n == 1 ? ToricData{1, {IntVec{Int(1)}, IntVec{Int(-1)}}, {Rat(1), Rat(2)}}
                               : random_toric_ambient(sub, spec);
    InstanceSpec pair_spec = spec;
    pair_spec.seed = sub.next_u64();
    auto [t_body, s_body] = random_nested_pair(pair_spec, ambient);
    for (size_t ray = 0; ray < ambient.rays.size(); ++ray) {
      int r = static_cast<int>(ray);
      CHECK(lelong_number(t_body, r) >= lelong_number(s_body, r));
    }
  }
}

TEST_CASE("fubini: exact slice integral recovers the volume") {
  // The slice volume is a piecewise polynomial of degree <= n-1 between
  // vertex levels; interpolate it exactly on each interval and integrate.
  SplitMix64 rng(313);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(2));
    InstanceSpec spec{rng.next_u64(), n, n + 3, 6};
    SplitMix64 sub(spec.seed);
    Polytope p = random_fulldim_polytope(sub, spec);
    IntVec u = random_primitive_direction(sub, n, 4);

    std::vector<Rat> knots;
    for (const RatVec& v : p.vertices()) knots.push_back(dot(v, u));
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

    auto slice_vol = [&](const Rat& t) {
      auto s = lattice_slice(p, u, t);
      return s ? s->volume() : Rat(0);
    };

    Rat total = 0;
    for (size_t i = 0; i + 1 < knots.size(); ++i) {
      const Rat &a = knots[i], &b = knots[i + 1];
      // n interpolation nodes strictly inside (a, b) pin the degree <= n-1
      // polynomial; an extra node validates the fit.
      std::vector<Rat> xs;
      for (int k = 1; k <= n + 1; ++k) xs.push_back(a + (b - a) * Rat(k) / Rat(n + 2));
      Matrix system;
      RatVec rhs;
      for (int k = 0; k < n; ++k) {
        RatVec row;
        for (int e = 0; e < n; ++e) row.push_back(pow_rat(xs[k], e));
        system.push_back(std::move(row));
        rhs.push_back(slice_vol(xs[k]));
      }
      auto coef = solve(system, rhs);
      REQUIRE(coef);
      Rat check_val = 0;
      for (int e = 0; e < n; ++e) check_val += (*coef)[e] * pow_rat(xs[n], e);
      CHECK(check_val == slice_vol(xs[n]));

      for (int e = 0; e < n; ++e) {
        total += (*coef)[e] * (pow_rat(b, e + 1) - pow_rat(a, e + 1)) / Rat(e + 1);
      }
    }
    CHECK(total == p.volume());
  }
}
