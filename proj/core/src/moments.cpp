#include "tenval/moments.hpp"

#include <stdexcept>
#include <vector>

namespace tenval {
namespace {

Rat inverse_factorial(int k) {
  Rat inv(1);
  for (int i = 2; i <= k; ++i) inv /= i;
  return inv;
}

template <typename S>
S abs_value(S x) {
  if (x < S(0)) return -x;
  return x;
}

// Determinant by Gaussian elimination with pivoting on the largest available
// absolute value (exact over the rationals, numerically sane over doubles).
template <typename S>
S det_rows(std::vector<VecT<S>> rows) {
  const int k = static_cast<int>(rows.size());
  S det(1);
  bool negate = false;
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int r = col; r < k; ++r) {
      if (rows[r][col] == S(0)) continue;
      if (pivot < 0 || abs_value<S>(rows[r][col]) > abs_value<S>(rows[pivot][col])) pivot = r;
    }
    if (pivot < 0) return S(0);
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      negate = !negate;
    }
    const S lead = rows[col][col];
    det *= lead;
    for (int r = col + 1; r < k; ++r) {
      if (rows[r][col] == S(0)) continue;
      const S factor = rows[r][col] / lead;
      for (int c = col; c < k; ++c) rows[r][c] -= factor * rows[col][c];
    }
  }
  if (negate) return -det;
  return det;
}

// v with ⟨v, x⟩ = det(w_1, ..., w_{n-1}, x); the length of v equals the
// (n-1)-volume of the parallelepiped spanned by the w_i.
template <typename S>
VecT<S> orthogonal_vector(int n, const std::vector<VecT<S>>& w) {
  VecT<S> out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) {
    std::vector<VecT<S>> rows = w;
    VecT<S> ej(n, S(0));
    ej[j] = S(1);
    rows.push_back(std::move(ej));
    out.push_back(det_rows<S>(std::move(rows)));
  }
  return out;
}

// Edge matrix of a simplex given by vertex ids: rows v_i - v_0 in field S.
template <typename S>
std::vector<VecT<S>> edge_rows(const Polytope& p, const std::vector<int>& tuple) {
  const VecT<S> base = vector_cast<S>(p.vertex(tuple[0]));
  std::vector<VecT<S>> rows;
  rows.reserve(tuple.size() - 1);
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    VecT<S> row = vector_cast<S>(p.vertex(tuple[i]));
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= base[j];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

template <typename S>
S volume(const Polytope& p) {
  const int n = p.ambient_dim();
  if (p.dim() < n) return S(0);
  const S inv_nfact = scalar_cast<S>(inverse_factorial(n));
  S total(0);
  for (const std::vector<int>& tuple : p.triangulation()) {
    total += abs_value<S>(det_rows<S>(edge_rows<S>(p, tuple))) * inv_nfact;
  }
  return total;
}

template <typename S>
VecT<S> moment_vector(const Polytope& p) {
  const int n = p.ambient_dim();
  VecT<S> total(n, S(0));
  if (p.dim() < n) return total;
  const S inv = scalar_cast<S>(inverse_factorial(n) / (n + 1));
  for (const std::vector<int>& tuple : p.triangulation()) {
    const S weight = abs_value<S>(det_rows<S>(edge_rows<S>(p, tuple))) * inv;
    for (int id : tuple) {
      const VecT<S> v = vector_cast<S>(p.vertex(id));
      for (int j = 0; j < n; ++j) total[j] += weight * v[j];
    }
  }
  return total;
}

template <typename S>
Tensor<S> moment_tensor(const Polytope& p, int order) {
  if (order < 0) throw std::invalid_argument("moment_tensor: negative order");
  const int n = p.ambient_dim();
  Tensor<S> total(n, order);
  if (p.dim() < n) return total;
  const S inv = scalar_cast<S>(inverse_factorial(n + order));
  for (const std::vector<int>& tuple : p.triangulation()) {
    const S weight = abs_value<S>(det_rows<S>(edge_rows<S>(p, tuple))) * inv;
    std::vector<VecT<S>> verts;
    verts.reserve(tuple.size());
    for (int id : tuple) verts.push_back(vector_cast<S>(p.vertex(id)));
    // Slot assignment f: {1..order} -> simplex vertices, weighted by the
    // factorials of the multiplicities with which each vertex is used.
    std::vector<int> f(order, 0);
    for (;;) {
      std::vector<int> mult(verts.size(), 0);
      for (int x : f) ++mult[x];
      Int coeff(1);
      for (int m : mult)
        for (int i = 2; i <= m; ++i) coeff *= i;
      const S scale = weight * scalar_cast<S>(Rat(coeff));
      // Add scale · v_{f(1)} ⊗ ... ⊗ v_{f(order)}.
      std::vector<int> idx(order, 0);
      for (std::size_t flat = 0; flat < total.size(); ++flat) {
        S term = scale;
        for (int k = 0; k < order; ++k) term *= verts[f[k]][idx[k]];
        total[flat] += term;
        for (int k = order - 1; k >= 0; --k) {
          if (++idx[k] < n) break;
          idx[k] = 0;
        }
      }
      int k = order - 1;
      for (; k >= 0; --k) {
        if (++f[k] < static_cast<int>(verts.size())) break;
        f[k] = 0;
      }
      if (k < 0) break;
    }
  }
  return total;
}

template <typename S>
FacetGeometry<S> facet_geometry(const Polytope& p, int facet_index) {
  const int n = p.ambient_dim();
  if (facet_index < 0 || facet_index >= static_cast<int>(p.facets().size()))
    throw std::out_of_range("facet_geometry: bad facet index");
  const FacetData& facet = p.facets()[facet_index];
  const S inv_fact = scalar_cast<S>(inverse_factorial(n - 1));
  VecT<S> normal_s;
  normal_s.reserve(n);
  for (const Int& x : facet.normal) normal_s.push_back(scalar_cast<S>(Rat(x)));

  FacetGeometry<S> out;
  out.area_vector.assign(n, S(0));
  VecT<S> centroid_num(n, S(0));
  S measure_den(0);
  for (const std::vector<int>& tuple : p.facet_triangulation(facet_index)) {
    // Orientation of this piece relative to the outward normal, decided in
    // exact arithmetic so both scalar fields walk the same branch.
    const VecQ piece_exact = normal_vector(edge_rows<Rat>(p, tuple));
    Rat along(0);
    for (int j = 0; j < n; ++j) along += Rat(facet.normal[j]) * piece_exact[j];
    const int orient = sign(along);
    if (orient == 0) throw std::logic_error("facet_geometry: degenerate facet piece");

    VecT<S> piece = orthogonal_vector<S>(n, edge_rows<S>(p, tuple));
    for (int j = 0; j < n; ++j) {
      piece[j] *= inv_fact;
      if (orient < 0) piece[j] = -piece[j];
    }
    S piece_weight(0);
    for (int j = 0; j < n; ++j) piece_weight += piece[j] * normal_s[j];
    VecT<S> piece_centroid(n, S(0));
    for (int id : tuple) {
      const VecT<S> v = vector_cast<S>(p.vertex(id));
      for (int j = 0; j < n; ++j) piece_centroid[j] += v[j];
    }
    for (int j = 0; j < n; ++j) {
      out.area_vector[j] += piece[j];
      centroid_num[j] += piece_weight * piece_centroid[j] / S(n);
    }
    measure_den += piece_weight;
  }
  if (measure_den == S(0)) throw std::logic_error("facet_geometry: zero facet measure");
  out.centroid.assign(n, S(0));
  for (int j = 0; j < n; ++j) out.centroid[j] = centroid_num[j] / measure_den;

  const VecT<S> w0 = vector_cast<S>(p.vertex(facet.vertex_ids.front()));
  S cone(0);
  for (int j = 0; j < n; ++j) cone += w0[j] * out.area_vector[j];
  out.cone_volume = cone / S(n);
  return out;
}

template Rat volume<Rat>(const Polytope&);
template double volume<double>(const Polytope&);
template VecQ moment_vector<Rat>(const Polytope&);
template VecT<double> moment_vector<double>(const Polytope&);
template Tensor<Rat> moment_tensor<Rat>(const Polytope&, int);
template Tensor<double> moment_tensor<double>(const Polytope&, int);
template FacetGeometry<Rat> facet_geometry<Rat>(const Polytope&, int);
template FacetGeometry<double> facet_geometry<double>(const Polytope&, int);

}  // namespace tenval
