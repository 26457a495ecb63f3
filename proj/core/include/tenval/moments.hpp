#pragma once

#include "tenval/polytope.hpp"
#include "tenval/rational.hpp"
#include "tenval/tensor.hpp"

namespace tenval {

// n-dimensional Lebesgue volume of P; zero when dim P < n.
template <typename S>
S volume(const Polytope& p);

// Lebesgue moment vector ∫_P x dx; zero when dim P < n.
template <typename S>
VecT<S> moment_vector(const Polytope& p);

// Moment tensor ∫_P x^{⊗order} dx of shape (n, order); zero when dim P < n.
// order = 0 yields the volume as a rank-0 tensor.
template <typename S>
Tensor<S> moment_tensor(const Polytope& p, int order);

// Exact geometry of one facet record of P.
//
// area_vector points along the record's outward normal and has length equal
// to the facet's (n-1)-dimensional volume, so for a unit outward normal u the
// pair (measure · u) is recovered without leaving the scalar field.
// centroid is the (n-1)-dimensional barycenter of the facet.  cone_volume is
// the signed volume (1/n)·⟨w, area_vector⟩ of the cone over the facet with
// apex o, where w is any point of the facet; summed over all facet records it
// reproduces the volume of a full-dimensional P and 0 for dim P = n-1.
template <typename S>
struct FacetGeometry {
  VecT<S> area_vector;
  VecT<S> centroid;
  S cone_volume;
};

template <typename S>
FacetGeometry<S> facet_geometry(const Polytope& p, int facet_index);

extern template Rat volume<Rat>(const Polytope&);
extern template double volume<double>(const Polytope&);
extern template VecQ moment_vector<Rat>(const Polytope&);
extern template VecT<double> moment_vector<double>(const Polytope&);
extern template Tensor<Rat> moment_tensor<Rat>(const Polytope&, int);
extern template Tensor<double> moment_tensor<double>(const Polytope&, int);
extern template FacetGeometry<Rat> facet_geometry<Rat>(const Polytope&, int);
extern template FacetGeometry<double> facet_geometry<double>(const Polytope&, int);

}  // namespace tenval
