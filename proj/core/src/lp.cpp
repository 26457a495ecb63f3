#include "tenval/lp.hpp"

#include <stdexcept>

namespace tenval {

namespace {

// Dense simplex tableau kept in canonical form: basis columns are unit
// columns, b >= 0 throughout, and the cost row holds reduced costs.
struct Tableau {
  int m = 0;                  // rows (constraints)
  int n = 0;                  // columns (variables)
  std::vector<VecQ> a;        // m x n
  VecQ b;                     // m
  VecQ r;                     // n reduced costs
  Rat z;                      // objective value (negated bookkeeping-free)
  std::vector<int> basis;     // basis[i] = column basic in row i

  void pivot(int row, int col) {
    const Rat p = a[row][col];
    for (int j = 0; j < n; ++j) a[row][j] /= p;
    b[row] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == row || sign(a[i][col]) == 0) continue;
      const Rat f = a[i][col];
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    if (sign(r[col]) != 0) {
      const Rat f = r[col];
      for (int j = 0; j < n; ++j) r[j] -= f * a[row][j];
      z -= f * b[row];
    }
    basis[row] = col;
  }

  // Runs simplex minimization with Bland's rule. Returns false on unbounded.
  bool minimize() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (sign(r[j]) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;  // optimal
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (sign(a[i][enter]) <= 0) continue;
        Rat ratio = b[i] / a[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const std::vector<VecQ>& a_in, const VecQ& b_in, const VecQ& c) {
  const int m = static_cast<int>(a_in.size());
  const int nvars = static_cast<int>(c.size());
  if (static_cast<int>(b_in.size()) != m) throw std::invalid_argument("solve_lp: row count mismatch");
  for (const auto& row : a_in)
    if (static_cast<int>(row.size()) != nvars) throw std::invalid_argument("solve_lp: column count mismatch");

  // Phase 1: minimize the sum of one artificial variable per row.
  Tableau t;
  t.m = m;
  t.n = nvars + m;
  t.a.assign(m, VecQ(t.n, Rat(0)));
  t.b.assign(m, Rat(0));
  t.r.assign(t.n, Rat(0));
  t.z = 0;
  t.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    const bool flip = sign(b_in[i]) < 0;
    for (int j = 0; j < nvars; ++j) t.a[i][j] = flip ? Rat(-a_in[i][j]) : a_in[i][j];
    t.b[i] = flip ? Rat(-b_in[i]) : b_in[i];
    t.a[i][nvars + i] = 1;
    t.basis[i] = nvars + i;
  }
  // Reduced costs for cost = sum of artificials with the artificial basis:
  // r_j = -sum_i a[i][j] for structural columns, 0 for basic artificials.
  for (int j = 0; j < nvars; ++j) {
    Rat s(0);
    for (int i = 0; i < m; ++i) s += t.a[i][j];
    t.r[j] = -s;
  }
  for (int i = 0; i < m; ++i) t.z -= t.b[i];  // z tracks -(current cost)
  if (!t.minimize()) throw std::logic_error("solve_lp: phase 1 unbounded");
  if (sign(t.z) != 0) return {LpStatus::Infeasible, Rat(0), {}};

  // Drive any artificial still basic (at value 0) out of the basis; a row
  // with no structural pivot available is redundant and can be cleared.
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < nvars) continue;
    int col = -1;
    for (int j = 0; j < nvars; ++j)
      if (sign(t.a[i][j]) != 0) {
        col = j;
        break;
      }
    if (col >= 0) t.pivot(i, col);
  }

  // Phase 2: restore the real objective on the current basis.
  for (int j = nvars; j < t.n; ++j)
    for (int i = 0; i < m; ++i) t.a[i][j] = 0;  // forbid artificials from re-entering
  t.r.assign(t.n, Rat(0));
  for (int j = 0; j < nvars; ++j) t.r[j] = c[j];
  t.z = 0;
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] >= nvars) continue;  // redundant row, contributes nothing
    const Rat cb = c[t.basis[i]];
    if (sign(cb) == 0) continue;
    for (int j = 0; j < t.n; ++j) t.r[j] -= cb * t.a[i][j];
    t.z -= cb * t.b[i];
  }
  if (!t.minimize()) return {LpStatus::Unbounded, Rat(0), {}};

  VecQ x(nvars, Rat(0));
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < nvars) x[t.basis[i]] = t.b[i];
  Rat value(0);
  for (int j = 0; j < nvars; ++j) value += c[j] * x[j];
  return {LpStatus::Optimal, value, std::move(x)};
}

namespace {

int ambient_dimension(const std::vector<VecQ>& points) {
  if (points.empty()) return 0;
  return static_cast<int>(points.front().size());
}

}  // namespace

bool point_in_hull(const std::vector<VecQ>& points, const VecQ& q) {
  if (points.empty()) return false;
  const int n = ambient_dimension(points);
  const int m = static_cast<int>(points.size());
  // Variables: lambda_1..lambda_m >= 0.
  std::vector<VecQ> a(n + 1, VecQ(m, Rat(0)));
  VecQ b(n + 1, Rat(0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < m; ++k) a[i][k] = points[k][i];
    b[i] = q[i];
  }
  for (int k = 0; k < m; ++k) a[n][k] = 1;
  b[n] = 1;
  return solve_lp(a, b, VecQ(m, Rat(0))).status == LpStatus::Optimal;
}

std::optional<Rat> hull_membership_margin(const std::vector<VecQ>& points, const VecQ& q) {
  if (points.empty()) return std::nullopt;
  const int n = ambient_dimension(points);
  const int m = static_cast<int>(points.size());
  // Variables: mu_1..mu_m >= 0 and t >= 0 with lambda_i = t + mu_i;
  // maximize t, i.e. minimize -t.
  std::vector<VecQ> a(n + 1, VecQ(m + 1, Rat(0)));
  VecQ b(n + 1, Rat(0));
  for (int i = 0; i < n; ++i) {
    Rat psum(0);
    for (int k = 0; k < m; ++k) {
      a[i][k] = points[k][i];
      psum += points[k][i];
    }
    a[i][m] = psum;
    b[i] = q[i];
  }
  for (int k = 0; k < m; ++k) a[n][k] = 1;
  a[n][m] = m;
  b[n] = 1;
  VecQ c(m + 1, Rat(0));
  c[m] = -1;
  const LpResult res = solve_lp(a, b, c);
  if (res.status == LpStatus::Infeasible) return std::nullopt;
  if (res.status != LpStatus::Optimal) throw std::logic_error("hull_membership_margin: unexpected LP status");
  return Rat(-res.value);
}

std::optional<Rat> min_ray_scale(const std::vector<VecQ>& points, const VecQ& v) {
  if (points.empty()) return std::nullopt;
  const int n = ambient_dimension(points);
  const int m = static_cast<int>(points.size());
  // Variables: lambda_1..lambda_m >= 0, t >= 0; minimize t subject to
  // sum lambda_i p_i - t v = 0, sum lambda_i = 1.
  std::vector<VecQ> a(n + 1, VecQ(m + 1, Rat(0)));
  VecQ b(n + 1, Rat(0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < m; ++k) a[i][k] = points[k][i];
    a[i][m] = -v[i];
  }
  for (int k = 0; k < m; ++k) a[n][k] = 1;
  b[n] = 1;
  VecQ c(m + 1, Rat(0));
  c[m] = 1;
  const LpResult res = solve_lp(a, b, c);
  if (res.status == LpStatus::Infeasible) return std::nullopt;
  if (res.status != LpStatus::Optimal) throw std::logic_error("min_ray_scale: unexpected LP status");
  return res.value;
}

}  // namespace tenval
