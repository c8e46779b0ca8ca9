#include "polymix/mixed_volume.hpp"

#include <cmath>

#include "polymix/errors.hpp"
#include "polymix/linalg.hpp"

namespace polymix {

namespace {

int checked_arity(const PolytopeTuple& bodies) {
  if (bodies.empty()) throw InvalidArgument("mixed volume of an empty tuple");
  int n = bodies[0].ambient_dim();
  if (static_cast<int>(bodies.size()) != n) {
    throw DimensionMismatch("mixed volume needs exactly n bodies in dimension n");
  }
  for (const Polytope& b : bodies) {
    if (b.ambient_dim() != n) throw DimensionMismatch("mixed volume: dimension mismatch");
  }
  return n;
}

}  // namespace

Rat mixed_volume(const PolytopeTuple& bodies) {
  int n = checked_arity(bodies);

  // Subset sums share work along the lattice: sum(S) = sum(S minus low bit) + body.
  std::vector<Rat> vol_of_mask(size_t{1} << n);
  std::vector<std::optional<Polytope>> sum_of_mask(size_t{1} << n);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    unsigned low = mask & (mask - 1);
    int bit = __builtin_ctz(mask);
    if (low == 0) {
      sum_of_mask[mask] = bodies[bit];
    } else {
      sum_of_mask[mask] = minkowski_sum(*sum_of_mask[low], bodies[bit]);
    }
    vol_of_mask[mask] = sum_of_mask[mask]->volume();
  }

  Rat acc = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int k = __builtin_popcount(mask);
    if ((n - k) % 2 == 0) {
      acc += vol_of_mask[mask];
    } else {
      acc -= vol_of_mask[mask];
    }
  }
  return acc / Rat(factorial(n));
}

Rat mixed_volume_difference(const PolytopeTuple& leading, const Polytope& qprime,
                            const Polytope& q) {
  int n = qprime.ambient_dim();
  if (q.ambient_dim() != n) throw DimensionMismatch("mixed_volume_difference: dimension mismatch");
  if (static_cast<int>(leading.size()) != n - 1) {
    throw DimensionMismatch("mixed_volume_difference needs n-1 leading bodies");
  }
  for (const Polytope& b : leading) {
    if (b.ambient_dim() != n) throw DimensionMismatch("mixed_volume_difference: dimension mismatch");
  }

  std::vector<std::optional<Polytope>> sum_of_mask(size_t{1} << (n - 1));
  Rat acc = 0;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    Rat term;
    if (mask == 0) {
      term = qprime.volume() - q.volume();
    } else {
      unsigned low = mask & (mask - 1);
      int bit = __builtin_ctz(mask);
      if (low == 0) {
        sum_of_mask[mask] = leading[bit];
      } else {
        sum_of_mask[mask] = minkowski_sum(*sum_of_mask[low], leading[bit]);
      }
      term = minkowski_sum(*sum_of_mask[mask], qprime).volume() -
             minkowski_sum(*sum_of_mask[mask], q).volume();
    }
    int k = __builtin_popcount(mask);
    if ((n - 1 - k) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc / Rat(factorial(n));
}

Rat mixed_volume_oracle(const PolytopeTuple& bodies) {
  int n = checked_arity(bodies);

  // Homogeneous degree-n monomials in n variables, and evaluation points
  // (1, mu) with mu on the principal lattice {mu >= 0, |mu| <= n}; the
  // dehomogenized interpolation problem on that simplex lattice is unisolvent.
  std::vector<std::vector<int>> monomials;
  std::vector<int> k(n, 0);
  auto gen = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      k[pos] = left;
      monomials.push_back(k);
      return;
    }
    for (int take = 0; take <= left; ++take) {
      k[pos] = take;
      self(self, pos + 1, left - take);
    }
  };
  gen(gen, 0, n);

  std::vector<std::vector<int>> points;
  std::vector<int> mu(n - 1, 0);
  auto gen_pts = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      std::vector<int> lambda(n);
      lambda[0] = 1;
      for (int i = 0; i < n - 1; ++i) lambda[i + 1] = mu[i];
      points.push_back(std::move(lambda));
      return;
    }
    for (int take = 0; take <= left; ++take) {
      mu[pos] = take;
      self(self, pos + 1, left - take);
    }
  };
  if (n == 1) {
    points.push_back({1});
  } else {
    gen_pts(gen_pts, 0, n);
  }

  if (points.size() != monomials.size()) {
    throw Error("mixed_volume_oracle: interpolation grid size mismatch");
  }

  Matrix system;
  RatVec rhs;
  for (const std::vector<int>& lambda : points) {
    RatVec row;
    row.reserve(monomials.size());
    for (const std::vector<int>& mono : monomials) {
      long val = 1;
      for (int i = 0; i < n; ++i) {
        for (int e = 0; e < mono[i]; ++e) val *= lambda[i];
      }
      row.push_back(Rat(val));
    }
    system.push_back(std::move(row));

    std::vector<RatVec> pts;
    bool started = false;
    for (int i = 0; i < n; ++i) {
      if (lambda[i] == 0) continue;
      Polytope scaled = dilate(bodies[i], Rat(lambda[i]));
      if (!started) {
        pts = scaled.vertices();
        started = true;
      } else {
        std::vector<RatVec> next;
        next.reserve(pts.size() * scaled.vertices().size());
        for (const RatVec& a : pts) {
          for (const RatVec& b : scaled.vertices()) next.push_back(add(a, b));
        }
        pts = make_polytope(next).vertices();
      }
    }
    rhs.push_back(started ? make_polytope(pts).volume() : Rat(0));
  }

  auto coeffs = solve(std::move(system), std::move(rhs));
  if (!coeffs) throw Error("mixed_volume_oracle: singular interpolation system");

  for (size_t i = 0; i < monomials.size(); ++i) {
    bool all_ones = true;
    for (int e : monomials[i]) {
      if (e != 1) {
        all_ones = false;
        break;
      }
    }
    if (all_ones) return (*coeffs)[i] / Rat(factorial(n));
  }
  throw Error("mixed_volume_oracle: missing multilinear monomial");
}

double brunn_minkowski_gap(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw DimensionMismatch("brunn_minkowski_gap: dimension mismatch");
  }
  double n = p.ambient_dim();
  double vol_sum = to_double(minkowski_sum(p, q).volume());
  return std::pow(vol_sum, 1.0 / n) - std::pow(to_double(p.volume()), 1.0 / n) -
         std::pow(to_double(q.volume()), 1.0 / n);
}

}  // namespace polymix
