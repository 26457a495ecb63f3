#pragma once

#include <vector>

#include "tenval/rational.hpp"
#include "tenval/tensor.hpp"

namespace tenval {

// H = { x : <normal, x> = offset }.
struct Hyperplane {
  VecQ normal;
  Rat offset;
};

// One facet record. For a full-dimensional polytope there is one record per
// facet with side_tag = 0 and the outward primitive integer normal. An
// (n-1)-dimensional polytope carries exactly two records, side_tag = +1/-1,
// whose normals are opposite and whose vertex list is the whole polytope.
struct FacetData {
  VecZ normal;
  Rat support;  // <w, normal> for any w in the facet
  std::vector<int> vertex_ids;
  int side_tag = 0;
};

struct OriginFlags {
  bool contains = false;   // o in P
  bool in_relint = false;  // o in relint P
};

// Convex polytope with exact rational vertices, stored irredundantly in
// lexicographic order. Geometry and combinatorics are always exact.
struct CutResult;

class Polytope {
 public:
  // Convex hull of the given points; drops duplicates and non-extreme points.
  // Throws std::invalid_argument on an empty point list (use empty()).
  static Polytope hull(int n, const std::vector<VecQ>& points);
  static Polytope empty(int n);
  static Polytope point(const VecQ& v);
  // s * conv{o, e_1, ..., e_d} embedded in R^n (d = 0 gives {o}).
  static Polytope standard_simplex(int n, int d, const Rat& s);
  // s * conv{e_1, ..., e_d} embedded in R^n (no origin vertex), d >= 1.
  static Polytope basis_simplex(int n, int d, const Rat& s);

  int ambient_dim() const { return n_; }
  int dim() const { return dim_; }  // -1 when empty
  bool is_empty() const { return verts_.empty(); }
  int vertex_count() const { return static_cast<int>(verts_.size()); }
  const std::vector<VecQ>& vertices() const { return verts_; }
  const VecQ& vertex(int i) const { return verts_[i]; }
  // Populated when dim P is n or n-1; empty otherwise.
  const std::vector<FacetData>& facets() const { return facets_; }

  Rat support_value(const VecQ& u) const;             // max_{v in P} <u, v>
  std::vector<int> support_set(const VecQ& u) const;  // maximizing vertex ids

  OriginFlags origin_flags() const;
  // Vertex ids v with P meeting relint [o, v] empty; empty list when o in P.
  std::vector<int> visible_vertices() const;

  Polytope transform(const Matrix& phi) const;
  Polytope translate(const VecQ& t) const;
  // Convex hull of {o} and P.
  Polytope cone_over_origin() const;

  CutResult cut(const Hyperplane& h) const;

  // Simplices (vertex-id tuples of size dim+1) triangulating P; the tuples
  // are produced by pulling the lexicographically first vertex recursively.
  std::vector<std::vector<int>> triangulation() const;
  // Triangulation of facets()[facet_index] into (dim)-simplices given as
  // tuples of polytope vertex ids (each of size n when dim P = n).
  std::vector<std::vector<int>> facet_triangulation(int facet_index) const;

  // Vertex ids in counter-clockwise boundary order; requires n = 2, dim = 2.
  std::vector<int> planar_boundary_cycle() const;

  bool operator==(const Polytope& other) const { return n_ == other.n_ && verts_ == other.verts_; }
  bool operator!=(const Polytope& other) const { return !(*this == other); }

 private:
  Polytope(int n, std::vector<VecQ> sorted_vertices, bool assume_extreme);

  int n_ = 0;
  int dim_ = -1;
  std::vector<VecQ> verts_;
  std::vector<FacetData> facets_;
};

// The three pieces of a hyperplane cut: P ∩ H^-, P ∩ H^+, and P ∩ H.
struct CutResult {
  Polytope minus, plus, slice;
};

}  // namespace tenval
