#include "polymix/mixed_volume.hpp"

#include <algorithm>

#include "doctest.h"
#include "polymix/errors.hpp"
#include "polymix/generators.hpp"
#include "polymix/rng.hpp"

using namespace polymix;

namespace {

RatVec pt(std::initializer_list<const char*> xs) {
  RatVec v;
  for (const char* x : xs) v.push_back(parse_rat(x));
  return v;
}

Polytope unit_square() {
  return make_polytope({pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1"}), pt({"1", "1"})});
}

}  // namespace

TEST_CASE("diagonal mixed volume is the volume") {
  Polytope sq = unit_square();
  CHECK(mixed_volume({sq, sq}) == 1);
  Polytope tri = make_polytope({pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1"})});
  CHECK(mixed_volume({tri, tri}) == tri.volume());
}

TEST_CASE("orthogonal segments") {
  Polytope sx = make_polytope({pt({"0", "0"}), pt({"1", "0"})});
  Polytope sy = make_polytope({pt({"0", "0"}), pt({"0", "1"})});
  CHECK(mixed_volume({sx, sy}) == parse_rat("1/2"));
  CHECK(mixed_volume_oracle({sx, sy}) == parse_rat("1/2"));
}

TEST_CASE("degenerate argument: square with a point") {
  Polytope sq = unit_square();
  Polytope point = make_polytope({pt({"3", "4"})});
  CHECK(mixed_volume({sq, point}) == 0);
  CHECK(mixed_volume_oracle({sq, point}) == 0);
}

TEST_CASE("arity and dimension validation") {
  Polytope sq = unit_square();
  CHECK_THROWS_AS(mixed_volume({sq}), DimensionMismatch);
  CHECK_THROWS_AS(mixed_volume({}), InvalidArgument);
  Polytope seg1 = make_polytope({pt({"0"}), pt({"1"})});
  CHECK_THROWS_AS(mixed_volume({sq, seg1}), DimensionMismatch);
}

TEST_CASE("one dimensional mixed volume is length") {
  Polytope seg = make_polytope({pt({"-1/2"}), pt({"2"})});
  CHECK(mixed_volume({seg}) == parse_rat("5/2"));
  CHECK(mixed_volume_oracle({seg}) == parse_rat("5/2"));
}

TEST_CASE("symmetry under all permutations, n <= 4") {
  SplitMix64 rng(101);
  for (int n = 2; n <= 4; ++n) {
    InstanceSpec spec{rng.next_u64(), n, n + 2, 5};
    SplitMix64 sub(spec.seed);
    PolytopeTuple bodies;
    for (int i = 0; i < n; ++i) bodies.push_back(random_polytope(sub, spec));
    Rat base = mixed_volume(bodies);

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      PolytopeTuple shuffled;
      for (int i : perm) shuffled.push_back(bodies[i]);
      CHECK(mixed_volume(shuffled) == base);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("multilinearity, homogeneity, translation invariance, monotonicity") {
  SplitMix64 rng(103);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(2));
    InstanceSpec spec{rng.next_u64(), n, n + 3, 6};
    SplitMix64 sub(spec.seed);
    PolytopeTuple rest;
    for (int i = 0; i + 1 < n; ++i) rest.push_back(random_polytope(sub, spec));
    Polytope p = random_polytope(sub, spec);
    Polytope q = random_polytope(sub, spec);

    auto with_last = [&](const Polytope& last) {
      PolytopeTuple t = rest;
      t.push_back(last);
      return mixed_volume(t);
    };

    CHECK(with_last(minkowski_sum(p, q)) == with_last(p) + with_last(q));

    Rat lambda = random_positive_rat(sub, 6);
    CHECK(with_last(dilate(p, lambda)) == lambda * with_last(p));

    RatVec shift = random_point(sub, n, 6);
    CHECK(with_last(translate(p, shift)) == with_last(p));

    Polytope inner = random_subbody(sub, p, spec.vertex_budget);
    CHECK(with_last(inner) <= with_last(p));
  }
}

TEST_CASE("polarization equals the polynomial-fit oracle") {
  SplitMix64 rng(107);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(3));
    InstanceSpec spec{rng.next_u64(), n, n + 2, 4};
    SplitMix64 sub(spec.seed);
    PolytopeTuple bodies;
    for (int i = 0; i < n; ++i) {
      if (sub.next_below(4) == 0) {
        InstanceSpec thin = spec;
        thin.vertex_budget = 2;
        bodies.push_back(random_polytope(sub, thin));
      } else {
        bodies.push_back(random_polytope(sub, spec));
      }
    }
    CHECK(mixed_volume(bodies) == mixed_volume_oracle(bodies));
  }
}

TEST_CASE("Brunn-Minkowski gap") {
  Polytope sq = unit_square();
  CHECK(brunn_minkowski_gap(sq, sq) == doctest::Approx(0.0).epsilon(1e-12));

  Polytope sx = make_polytope({pt({"0", "0"}), pt({"1", "0"})});
  Polytope sy = make_polytope({pt({"0", "0"}), pt({"0", "1"})});
  CHECK(brunn_minkowski_gap(sx, sy) == doctest::Approx(1.0));

  SplitMix64 rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(3));
    InstanceSpec spec{rng.next_u64(), n, n + 3, 8};
    SplitMix64 sub(spec.seed);
    Polytope p = random_polytope(sub, spec);
    Polytope q = random_polytope(sub, spec);
    CHECK(brunn_minkowski_gap(p, q) >= -kBrunnMinkowskiTol);
  }
}
