#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polymix/polytope.hpp"
#include "polymix/report.hpp"
#include "polymix/toric.hpp"

namespace polymix {

/// Every checker verifies one quantitative statement on explicit inputs and
/// returns a Report. Exact statements compare rationals with zero tolerance;
/// the only floating checks are the ones involving fractional powers, and
/// those also get an equivalent exact restatement whenever both sides are
/// nonnegative. `context` is folded into the report digest (batch drivers put
/// the seed there).

inline constexpr double kFloatCheckTol = 1e-9;

/// Restricted volume of the full class against vol/width^n times the
/// distance-to-endpoint power. Exact.
Report check_res_vol_lower_bound(const ToricData& ambient, int ray_index, const Rat& t,
                                 const std::string& context = "");

/// Volume loss of a nested pair against the Lelong gap power. The reported
/// rhs carries the 2^(n-1) denominator; the sharpened form without it is
/// asserted as well. Exact.
Report check_loss_single(const NewtonBody& t_body, const NewtonBody& s_body, int ray_index,
                         const std::string& context = "");

/// Mixed-volume loss over n nested pairs; fractional powers are checked in
/// floating point and, raised to the (n-1)-th power, exactly. The report
/// carries the exact powered comparison; notes carry the float one.
Report check_loss_mixed(const std::vector<std::pair<NewtonBody, NewtonBody>>& pairs,
                        int ray_index, const std::string& context = "");

/// Product form: the loss bounded by the best omitted-index mixed restricted
/// volume over the width product. Exact.
Report check_loss_product(const std::vector<std::pair<NewtonBody, NewtonBody>>& pairs,
                          int ray_index, const std::string& context = "");

/// Class-vs-currents mixed loss. With a common ambient class the fractional
/// powers collapse, so the check is exact.
Report check_alpha_T_mixed(const std::vector<NewtonBody>& bodies, int ray_index,
                           const std::string& context = "");

/// Piecewise-linear concave function on [0, A] given by its knots.
struct PiecewiseLinear {
  std::vector<std::pair<Rat, Rat>> knots;  // (x, f(x)), x strictly increasing
};

/// Exact integral of f(t)^n on a knot interval basis against the
/// concave-integral bound at t0.
Report check_concave_integral(const PiecewiseLinear& f, const Rat& t0, int n,
                              const std::string& context = "");

/// Slice volume of a full-dimensional body at relative height t0 against
/// (n/A^n) vol P min{t0, A-t0}^(n-1). Exact.
Report check_slice_lower_bound(const Polytope& p, const IntVec& u, const Rat& t0,
                               const std::string& context = "");

/// Two facts of the equal-classes remark: the volume-ratio inequality for a
/// nested pair, and monotonicity of s -> vol(P below level s)/s^n on a grid.
Report check_ratio_monotone(const Polytope& p, const Polytope& q, const IntVec& u,
                            int grid_points, const std::string& context = "");

/// The sliced-simplex family: exact volume-difference law and the implied
/// per-instance constant, two reports per grid value.
std::vector<Report> reproduce_count_su(int n, const Rat& eps, const std::vector<Rat>& t_grid,
                                       const std::string& context = "");

struct MonteCarloEstimate {
  double estimate = 0;
  double std_error = 0;
  long samples = 0;
};

/// Rejection sampling in the bounding box; deterministic for a fixed seed.
MonteCarloEstimate monte_carlo_volume(const Polytope& p, long samples, uint64_t seed);

}  // namespace polymix
