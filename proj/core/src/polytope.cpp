#include "tenval/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "tenval/lp.hpp"

namespace tenval {

namespace {

bool lex_less(const VecQ& a, const VecQ& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const int c = mpq_cmp(a[i].get_mpq_t(), b[i].get_mpq_t());
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

Rat dot(const VecQ& a, const VecQ& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot_zq(const VecZ& a, const VecQ& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

struct RankInfo {
  int rank = 0;
  std::vector<int> pivot_cols;
  std::vector<int> pivot_rows;  // indices into the original row list
};

// Row echelon form over the rationals; records pivot columns and a set of
// original rows forming a basis of the row space.
RankInfo row_reduce(std::vector<VecQ> rows) {
  RankInfo info;
  if (rows.empty()) return info;
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows.front().size());
  std::vector<int> orig(m);
  for (int i = 0; i < m; ++i) orig[i] = i;
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    int pivot = -1;
    for (int i = r; i < m; ++i)
      if (sign(rows[i][col]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[r]);
    std::swap(orig[pivot], orig[r]);
    for (int i = r + 1; i < m; ++i) {
      if (sign(rows[i][col]) == 0) continue;
      const Rat f = rows[i][col] / rows[r][col];
      for (int j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    info.pivot_cols.push_back(col);
    info.pivot_rows.push_back(orig[r]);
    ++r;
  }
  info.rank = r;
  return info;
}

std::vector<VecQ> edge_vectors(const std::vector<VecQ>& pts) {
  std::vector<VecQ> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    VecQ d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    rows.push_back(std::move(d));
  }
  return rows;
}

// Primitive integer vector pointing in the direction of v (positive scaling).
VecZ primitive(const VecQ& v) {
  Int l(1);
  for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  VecZ w(v.size());
  Int g(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(l);
    w[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
  }
  if (sign(g) == 0) throw std::invalid_argument("primitive: zero vector");
  for (Int& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return w;
}

struct FacetKeyLess {
  bool operator()(const std::pair<VecZ, Rat>& a, const std::pair<VecZ, Rat>& b) const {
    for (std::size_t i = 0; i < a.first.size(); ++i) {
      const int c = mpz_cmp(a.first[i].get_mpz_t(), b.first[i].get_mpz_t());
      if (c != 0) return c < 0;
    }
    return mpq_cmp(a.second.get_mpq_t(), b.second.get_mpq_t()) < 0;
  }
};

struct RawFacet {
  VecZ normal;
  Rat support;
  std::vector<int> vertex_ids;
};

// Facets of a full-dimensional point set: every supporting hyperplane spanned
// by n affinely independent points. Each candidate subset is oriented so that
// the polytope lies on the non-positive side of (normal, support).
std::vector<RawFacet> enumerate_facets_full_dim(const std::vector<VecQ>& pts, int n) {
  std::vector<RawFacet> out;
  const int m = static_cast<int>(pts.size());
  if (n == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < m; ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    out.push_back({VecZ{Int(1)}, pts[hi][0], {hi}});
    out.push_back({VecZ{Int(-1)}, Rat(-pts[lo][0]), {lo}});
    return out;
  }

  std::map<std::pair<VecZ, Rat>, bool, FacetKeyLess> seen;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  if (m < n) return out;
  for (;;) {
    // Hyperplane through the chosen subset, when affinely independent.
    std::vector<VecQ> edges;
    for (int i = 1; i < n; ++i) {
      VecQ d(n);
      for (int j = 0; j < n; ++j) d[j] = pts[idx[i]][j] - pts[idx[0]][j];
      edges.push_back(std::move(d));
    }
    VecQ nu_q = normal_vector(edges);
    bool zero = true;
    for (const Rat& x : nu_q)
      if (sign(x) != 0) {
        zero = false;
        break;
      }
    if (!zero) {
      const Rat h0 = dot(nu_q, pts[idx[0]]);
      bool above = false, below = false;
      for (int i = 0; i < m && !(above && below); ++i) {
        const int s = sign(Rat(dot(nu_q, pts[i]) - h0));
        if (s > 0) above = true;
        if (s < 0) below = true;
      }
      if (!(above && below)) {
        if (above) {
          for (Rat& x : nu_q) x = -x;
        }
        VecZ nu = primitive(nu_q);
        const Rat h = dot_zq(nu, pts[idx[0]]);
        auto key = std::make_pair(nu, h);
        if (!seen.count(key)) {
          seen[key] = true;
          RawFacet f;
          f.normal = std::move(nu);
          f.support = h;
          for (int i = 0; i < m; ++i)
            if (dot_zq(f.normal, pts[i]) == f.support) f.vertex_ids.push_back(i);
          out.push_back(std::move(f));
        }
      }
    }
    // next combination
    int k = n - 1;
    while (k >= 0 && idx[k] == m - n + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int i = k + 1; i < n; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

// Counter-clockwise ordering of planar points around their centroid.
std::vector<int> ccw_order(const std::vector<VecQ>& pts) {
  const int m = static_cast<int>(pts.size());
  VecQ c{Rat(0), Rat(0)};
  for (const VecQ& p : pts) {
    c[0] += p[0];
    c[1] += p[1];
  }
  c[0] /= m;
  c[1] /= m;
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  auto half = [&](int i) {
    const Rat y = pts[i][1] - c[1];
    const Rat x = pts[i][0] - c[0];
    return (sign(y) > 0 || (sign(y) == 0 && sign(x) > 0)) ? 0 : 1;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    const Rat cross = (pts[a][0] - c[0]) * (pts[b][1] - c[1]) - (pts[a][1] - c[1]) * (pts[b][0] - c[0]);
    return sign(cross) > 0;
  });
  return order;
}

// Triangulation of the convex hull of distinct extreme points of any
// dimension; returns tuples of indices into pts.
std::vector<std::vector<int>> triangulate_set(const std::vector<VecQ>& pts) {
  const int m = static_cast<int>(pts.size());
  if (m == 0) return {};
  if (m == 1) return {{0}};
  const int ambient = static_cast<int>(pts.front().size());
  const RankInfo info = row_reduce(edge_vectors(pts));
  const int d = info.rank;
  if (d == 0) throw std::logic_error("triangulate_set: repeated points");

  if (d < ambient) {
    // Project to the pivot coordinates; affine-injective on the hull.
    std::vector<VecQ> proj(m, VecQ(d));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < d; ++j) proj[i][j] = pts[i][info.pivot_cols[j]];
    return triangulate_set(proj);
  }

  if (d == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < m; ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    return {{lo, hi}};
  }

  if (d == 2) {
    const std::vector<int> cycle = ccw_order(pts);
    std::vector<std::vector<int>> tris;
    for (int i = 1; i + 1 < m; ++i) tris.push_back({cycle[0], cycle[i], cycle[i + 1]});
    return tris;
  }

  // Pull the lexicographically smallest point over the facets avoiding it.
  int apex = 0;
  for (int i = 1; i < m; ++i)
    if (lex_less(pts[i], pts[apex])) apex = i;
  std::vector<std::vector<int>> out;
  for (const RawFacet& f : enumerate_facets_full_dim(pts, d)) {
    bool contains_apex = false;
    for (int id : f.vertex_ids)
      if (id == apex) {
        contains_apex = true;
        break;
      }
    if (contains_apex) continue;
    std::vector<VecQ> sub;
    for (int id : f.vertex_ids) sub.push_back(pts[id]);
    for (const std::vector<int>& tuple : triangulate_set(sub)) {
      std::vector<int> mapped{apex};
      for (int t : tuple) mapped.push_back(f.vertex_ids[t]);
      out.push_back(std::move(mapped));
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polytope

Polytope::Polytope(int n, std::vector<VecQ> sorted_vertices, bool /*assume_extreme*/)
    : n_(n), verts_(std::move(sorted_vertices)) {
  if (verts_.empty()) {
    dim_ = -1;
    return;
  }
  dim_ = row_reduce(edge_vectors(verts_)).rank;

  if (dim_ == n_) {
    for (RawFacet& f : enumerate_facets_full_dim(verts_, n_))
      facets_.push_back({std::move(f.normal), std::move(f.support), std::move(f.vertex_ids), 0});
  } else if (dim_ == n_ - 1) {
    // The polytope spans a hyperplane: record both sides.
    VecZ nu;
    if (n_ == 1) {
      nu = VecZ{Int(1)};
    } else {
      const RankInfo info = row_reduce(edge_vectors(verts_));
      std::vector<VecQ> basis;
      const std::vector<VecQ> edges = edge_vectors(verts_);
      for (int r : info.pivot_rows) basis.push_back(edges[r]);
      VecQ nu_q = normal_vector(basis);
      nu = primitive(nu_q);
    }
    // Canonical sign: first nonzero entry positive gets side_tag +1.
    int lead = 0;
    for (const Int& x : nu)
      if (sign(x) != 0) {
        lead = sign(x);
        break;
      }
    if (lead < 0)
      for (Int& x : nu) x = -x;
    std::vector<int> all_ids(verts_.size());
    for (int i = 0; i < static_cast<int>(all_ids.size()); ++i) all_ids[i] = i;
    const Rat h = dot_zq(nu, verts_[0]);
    VecZ neg(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) neg[i] = -nu[i];
    facets_.push_back({nu, h, all_ids, +1});
    facets_.push_back({std::move(neg), Rat(-h), std::move(all_ids), -1});
  }
}

Polytope Polytope::hull(int n, const std::vector<VecQ>& points) {
  if (points.empty()) throw std::invalid_argument("hull: empty point list (use Polytope::empty)");
  for (const VecQ& p : points)
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("hull: point dimension mismatch");
  std::vector<VecQ> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  // Keep exactly the extreme points (not in the hull of the others).
  std::vector<VecQ> kept;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<VecQ> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!point_in_hull(others, pts[i])) kept.push_back(pts[i]);
  }
  return Polytope(n, std::move(kept), true);
}

Polytope Polytope::empty(int n) { return Polytope(n, {}, true); }

Polytope Polytope::point(const VecQ& v) { return Polytope(static_cast<int>(v.size()), {v}, true); }

Polytope Polytope::standard_simplex(int n, int d, const Rat& s) {
  if (d < 0 || d > n) throw std::invalid_argument("standard_simplex: need 0 <= d <= n");
  if (sign(s) <= 0) throw std::invalid_argument("standard_simplex: need s > 0");
  std::vector<VecQ> pts{VecQ(n, Rat(0))};
  for (int i = 0; i < d; ++i) {
    VecQ v(n, Rat(0));
    v[i] = s;
    pts.push_back(std::move(v));
  }
  return hull(n, pts);
}

Polytope Polytope::basis_simplex(int n, int d, const Rat& s) {
  if (d < 1 || d > n) throw std::invalid_argument("basis_simplex: need 1 <= d <= n");
  if (sign(s) <= 0) throw std::invalid_argument("basis_simplex: need s > 0");
  std::vector<VecQ> pts;
  for (int i = 0; i < d; ++i) {
    VecQ v(n, Rat(0));
    v[i] = s;
    pts.push_back(std::move(v));
  }
  return hull(n, pts);
}

Rat Polytope::support_value(const VecQ& u) const {
  if (is_empty()) throw std::invalid_argument("support_value: empty polytope");
  Rat best = dot(u, verts_[0]);
  for (std::size_t i = 1; i < verts_.size(); ++i) {
    Rat v = dot(u, verts_[i]);
    if (v > best) best = v;
  }
  return best;
}

std::vector<int> Polytope::support_set(const VecQ& u) const {
  const Rat h = support_value(u);
  std::vector<int> ids;
  for (int i = 0; i < vertex_count(); ++i)
    if (dot(u, verts_[i]) == h) ids.push_back(i);
  return ids;
}

OriginFlags Polytope::origin_flags() const {
  OriginFlags flags;
  if (is_empty()) return flags;
  const auto margin = hull_membership_margin(verts_, VecQ(n_, Rat(0)));
  if (!margin) return flags;
  flags.contains = true;
  flags.in_relint = sign(*margin) > 0;
  return flags;
}

std::vector<int> Polytope::visible_vertices() const {
  std::vector<int> out;
  if (is_empty() || origin_flags().contains) return out;
  for (int i = 0; i < vertex_count(); ++i) {
    const auto t0 = min_ray_scale(verts_, verts_[i]);
    if (t0 && *t0 == Rat(1)) out.push_back(i);
  }
  return out;
}

Polytope Polytope::transform(const Matrix& phi) const {
  if (is_empty()) return empty(n_);
  std::vector<VecQ> pts;
  pts.reserve(verts_.size());
  for (const VecQ& v : verts_) pts.push_back(phi.apply(v));
  return hull(n_, pts);
}

Polytope Polytope::translate(const VecQ& t) const {
  if (is_empty()) return empty(n_);
  std::vector<VecQ> pts = verts_;
  for (VecQ& v : pts)
    for (int j = 0; j < n_; ++j) v[j] += t[j];
  return hull(n_, pts);
}

Polytope Polytope::cone_over_origin() const {
  if (is_empty()) return point(VecQ(n_, Rat(0)));
  std::vector<VecQ> pts = verts_;
  pts.emplace_back(n_, Rat(0));
  return hull(n_, pts);
}

CutResult Polytope::cut(const Hyperplane& h) const {
  if (static_cast<int>(h.normal.size()) != n_) throw std::invalid_argument("cut: hyperplane dimension mismatch");
  bool normal_zero = true;
  for (const Rat& x : h.normal)
    if (sign(x) != 0) {
      normal_zero = false;
      break;
    }
  if (normal_zero) throw std::invalid_argument("cut: zero normal");
  CutResult res{empty(n_), empty(n_), empty(n_)};
  if (is_empty()) return res;

  const int m = vertex_count();
  std::vector<Rat> val(m);
  std::vector<int> sgn(m);
  for (int i = 0; i < m; ++i) {
    val[i] = dot(h.normal, verts_[i]) - h.offset;
    sgn[i] = sign(val[i]);
  }
  std::vector<VecQ> minus_pts, plus_pts, slice_pts;
  for (int i = 0; i < m; ++i) {
    if (sgn[i] <= 0) minus_pts.push_back(verts_[i]);
    if (sgn[i] >= 0) plus_pts.push_back(verts_[i]);
    if (sgn[i] == 0) slice_pts.push_back(verts_[i]);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (sgn[i] * sgn[j] >= 0) continue;
      const Rat t = val[i] / (val[i] - val[j]);
      VecQ x(n_);
      for (int k = 0; k < n_; ++k) x[k] = verts_[i][k] + t * (verts_[j][k] - verts_[i][k]);
      minus_pts.push_back(x);
      plus_pts.push_back(x);
      slice_pts.push_back(std::move(x));
    }
  if (!minus_pts.empty()) res.minus = hull(n_, minus_pts);
  if (!plus_pts.empty()) res.plus = hull(n_, plus_pts);
  if (!slice_pts.empty()) res.slice = hull(n_, slice_pts);
  return res;
}

std::vector<std::vector<int>> Polytope::triangulation() const {
  if (is_empty()) return {};
  return triangulate_set(verts_);
}

std::vector<std::vector<int>> Polytope::facet_triangulation(int facet_index) const {
  if (facet_index < 0 || facet_index >= static_cast<int>(facets_.size()))
    throw std::out_of_range("facet_triangulation: bad facet index");
  const FacetData& f = facets_[facet_index];
  std::vector<VecQ> sub;
  for (int id : f.vertex_ids) sub.push_back(verts_[id]);
  std::vector<std::vector<int>> out;
  for (const std::vector<int>& tuple : triangulate_set(sub)) {
    std::vector<int> mapped;
    for (int t : tuple) mapped.push_back(f.vertex_ids[t]);
    out.push_back(std::move(mapped));
  }
  return out;
}

std::vector<int> Polytope::planar_boundary_cycle() const {
  if (n_ != 2 || dim_ != 2) throw std::logic_error("planar_boundary_cycle: needs a full-dimensional planar polytope");
  std::vector<int> cycle = ccw_order(verts_);
  // Deterministic start: rotate the smallest vertex id to the front.
  const auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

}  // namespace tenval
