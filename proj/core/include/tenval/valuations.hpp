#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tenval/moments.hpp"
#include "tenval/polytope.hpp"
#include "tenval/rational.hpp"
#include "tenval/tensor.hpp"

namespace tenval {

// Coefficient function applied to signed cone volumes and volumes.  Every
// kind satisfies f(0) = 0 and the odd extension f(-t) = -f(t); the linear
// kind is additive on all rationals and is the one used by the additivity
// test suites.  Only computable kinds are representable: general additive
// functions on the reals have no finite description, and the identities under
// test only ever evaluate f on finitely many rational arguments.
class CoefFn {
 public:
  enum class Kind { Linear, Power, Table };

  // The zero function (linear with coefficient 0).
  CoefFn() : kind_(Kind::Linear), c_(0) {}

  static CoefFn linear(const Rat& c);
  // c * t^e with rational e > 0; exact evaluation requires the rational
  // root to exist and throws std::domain_error otherwise.
  static CoefFn power(const Rat& c, const Rat& exponent);
  // Explicit values on positive arguments, extended oddly; evaluation off
  // the grid throws std::out_of_range.  Exact-mode only.
  static CoefFn table(std::map<Rat, Rat, RatLess> values);

  Kind kind() const { return kind_; }
  bool is_linear() const { return kind_ == Kind::Linear; }
  bool is_zero() const { return kind_ == Kind::Linear && sign(c_) == 0; }
  const Rat& coefficient() const { return c_; }
  const Rat& exponent() const { return exponent_; }
  const std::map<Rat, Rat, RatLess>& values() const { return values_; }

  Rat operator()(const Rat& t) const;
  // Floating path: table kind throws std::logic_error (no principled way to
  // interpolate a grid), the others evaluate with std::pow / multiplication.
  double operator()(double t) const;

 private:
  Kind kind_;
  Rat c_;
  Rat exponent_;
  std::map<Rat, Rat, RatLess> values_;
};

enum class FacetScope { OriginAvoiding, All };  // N_o(P) vs N(P)

// A description of one classified valuation (or a sum of them), loadable
// from JSON.  Field use per family:
//   sym           p = tensor order, zeta = coefficient function
//   cross_moment  params: c
//   facet_cross   scope, params: r (slot shift), c
//   euler         params: c_relint, c_const, c_origin; zeta = eta
//   planar_moment params: a                                  (n = 2)
//   theta         p = order, pre_rotate, params: b           (n = 2)
//   theta_visible p = order, params: b                       (n = 2)
//   boundary_walk params: d0..d4; zeta, eta                  (n = 2)
//   composite     terms = summands
// compose_hull_origin evaluates the family on conv({o} ∪ P) instead of P.
struct ValuationSpec {
  std::string family;
  int n = 2;
  int p = 2;
  std::map<std::string, Rat> params;
  CoefFn zeta;
  CoefFn eta;
  FacetScope scope = FacetScope::OriginAvoiding;
  bool pre_rotate = true;
  bool compose_hull_origin = false;
  std::vector<ValuationSpec> terms;

  Rat param(const std::string& key, const Rat& fallback = Rat(0)) const;
};

// Throws std::invalid_argument on malformed specs (unknown family, bad
// dimension/order combinations, shift out of range, ...).
void validate_spec(const ValuationSpec& spec);

// Tensor order of the evaluation result.
int tensor_order(const ValuationSpec& spec);

// Sign exponent delta of the grading Z(phi P) = (det phi)^delta phi^{-t}·Z(P)
// over maps with |det phi| = 1.  Returns 0 or 1, or -1 when the spec is only
// contravariant under det phi = +1 (mixed composites, boundary_walk).
int grading_parity(const ValuationSpec& spec);

// The quarter-turn (x, y) -> (y, -x); conjugation by it turns SL(2)
// contravariance into covariance, which is why several planar families are
// stated on the rotated polytope.
Matrix planar_rotation();

// Symmetric facet-normal family: sum over origin-avoiding facet records of
// h^{-p}(u) zeta(V(P,u)) u^{(x)p}, evaluated in the scale-invariant rational
// encoding (primitive normal, support value, signed cone volume).
template <typename S>
Tensor<S> val_sym(const Polytope& P, int p, const CoefFn& zeta);

// c · cross tensor of the Lebesgue moment vector of P.
template <typename S>
Tensor<S> val_cross_moment(const Polytope& P, const Rat& c);

// c · sigma^shift applied to  sum over facet records of
// (facet moment vector)^x (x) u  in the centroid/area-vector encoding.
template <typename S>
Tensor<S> val_facet_cross(const Polytope& P, FacetScope scope, int shift, const Rat& c);

// (c_relint (-1)^{dim P} [o in relint P] + c_const [P nonempty]
//  + c_origin [o in P] + eta(V_n(P))) · levi_civita.
template <typename S>
Tensor<S> val_euler(const Polytope& P, const Rat& c_relint, const Rat& c_const,
                    const Rat& c_origin, const CoefFn& eta);

// a · second moment tensor of the rotated polytope (n = 2).
template <typename S>
Tensor<S> val_planar_moment(const Polytope& P, const Rat& a);

// b · Theta^order of P (rotated first when pre_rotate): v^p + w^p for the two
// boundary neighbors of o on a 2-dimensional P, 2(v^p + w^p) for a segment
// containing o, zero otherwise.
template <typename S>
Tensor<S> val_theta(const Polytope& P, int order, bool pre_rotate, const Rat& b);

// b · Theta^order(rho · conv({o} ∪ {visible vertices of P})).
template <typename S>
Tensor<S> val_theta_visible(const Polytope& P, int order, const Rat& b);

// Planar boundary-walk representation on polytopes containing the origin:
//   d3·M^{2,0}(rho P) + d1·Theta^2(rho P) + d4·F(rho P)
//   + G_eta(rho P) + H_zeta(rho P)
//   + ((d2 - d0)(-1)^{dim P} [o in relint P] - d2) · levi_civita
// where, walking the boundary of rho P counter-clockwise away from o (or from
// the vertex of minimal polar angle when o is interior, in which case the
// closing edge is included), F compares the squares of the first and last
// walk vertices and H, G sum zeta(det)/det^2 (v-w)^{(x)2} and
// eta(det)/det (v (x) w - w (x) v) over the walk edges not incident to o.
template <typename S>
Tensor<S> val_boundary_walk(const Polytope& P, const std::array<Rat, 5>& d,
                            const CoefFn& zeta, const CoefFn& eta);

// Evaluate any spec (validates first).  S = Rat for exact arithmetic,
// S = double for the floating profile (combinatorial decisions stay exact).
template <typename S>
Tensor<S> evaluate(const ValuationSpec& spec, const Polytope& P);

extern template Tensor<Rat> val_sym<Rat>(const Polytope&, int, const CoefFn&);
extern template Tensor<double> val_sym<double>(const Polytope&, int, const CoefFn&);
extern template Tensor<Rat> val_cross_moment<Rat>(const Polytope&, const Rat&);
extern template Tensor<double> val_cross_moment<double>(const Polytope&, const Rat&);
extern template Tensor<Rat> val_facet_cross<Rat>(const Polytope&, FacetScope, int, const Rat&);
extern template Tensor<double> val_facet_cross<double>(const Polytope&, FacetScope, int, const Rat&);
extern template Tensor<Rat> val_euler<Rat>(const Polytope&, const Rat&, const Rat&, const Rat&,
                                           const CoefFn&);
extern template Tensor<double> val_euler<double>(const Polytope&, const Rat&, const Rat&,
                                                 const Rat&, const CoefFn&);
extern template Tensor<Rat> val_planar_moment<Rat>(const Polytope&, const Rat&);
extern template Tensor<double> val_planar_moment<double>(const Polytope&, const Rat&);
extern template Tensor<Rat> val_theta<Rat>(const Polytope&, int, bool, const Rat&);
extern template Tensor<double> val_theta<double>(const Polytope&, int, bool, const Rat&);
extern template Tensor<Rat> val_theta_visible<Rat>(const Polytope&, int, const Rat&);
extern template Tensor<double> val_theta_visible<double>(const Polytope&, int, const Rat&);
extern template Tensor<Rat> val_boundary_walk<Rat>(const Polytope&, const std::array<Rat, 5>&,
                                                   const CoefFn&, const CoefFn&);
extern template Tensor<double> val_boundary_walk<double>(const Polytope&,
                                                         const std::array<Rat, 5>&, const CoefFn&,
                                                         const CoefFn&);
extern template Tensor<Rat> evaluate<Rat>(const ValuationSpec&, const Polytope&);
extern template Tensor<double> evaluate<double>(const ValuationSpec&, const Polytope&);

}  // namespace tenval
