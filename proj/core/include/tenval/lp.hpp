#pragma once

#include <optional>
#include <vector>

#include "tenval/rational.hpp"

namespace tenval {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  Rat value;  // objective at the optimum (minimization); meaningful for Optimal
  VecQ x;     // optimal point; meaningful for Optimal
};

// Solves  minimize c^T x  subject to  A x = b, x >= 0  exactly over the
// rationals with the two-phase simplex method and Bland's anti-cycling rule.
// Rows of A may be given with either sign of b.
LpResult solve_lp(const std::vector<VecQ>& a, const VecQ& b, const VecQ& c);

// True iff q lies in the convex hull of the given points.
bool point_in_hull(const std::vector<VecQ>& points, const VecQ& q);

// Largest t >= 0 such that q = sum lambda_i p_i with sum lambda_i = 1 and
// every lambda_i >= t. Returns nullopt when q is outside the hull; the value
// is strictly positive exactly when q lies in the relative interior.
std::optional<Rat> hull_membership_margin(const std::vector<VecQ>& points, const VecQ& q);

// Smallest t >= 0 with t*v in the convex hull of the points. Returns nullopt
// when the ray from the origin through v never meets the hull at t >= 0.
std::optional<Rat> min_ray_scale(const std::vector<VecQ>& points, const VecQ& v);

}  // namespace tenval
