#include "tenval/valuations.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

namespace tenval {
namespace {

template <typename S>
VecT<S> cast_int_vector(const VecZ& v) {
  VecT<S> out;
  out.reserve(v.size());
  for (const Int& x : v) out.push_back(scalar_cast<S>(Rat(x)));
  return out;
}

Rat det2(const VecQ& a, const VecQ& b) { return a[0] * b[1] - a[1] * b[0]; }

Rat dot2(const VecQ& a, const VecQ& b) { return a[0] * b[0] + a[1] * b[1]; }

bool is_origin(const VecQ& v) {
  for (const Rat& x : v)
    if (sign(x) != 0) return false;
  return true;
}

// 0 when the polar angle of v lies in [0, pi), 1 otherwise.
int half_plane(const VecQ& v) {
  const int sy = sign(v[1]);
  if (sy > 0) return 0;
  if (sy == 0 && sign(v[0]) > 0) return 0;
  return 1;
}

bool polar_angle_less(const VecQ& a, const VecQ& b) {
  const int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return sign(det2(a, b)) > 0;
}

// Counter-clockwise boundary vertices of a 2-dimensional Q with o on its
// boundary, starting at the vertex after o and ending at the vertex before o
// (o itself excluded; when o sits inside an edge, that edge's endpoints are
// the last and first entries).
std::vector<VecQ> walk_from_origin(const Polytope& q) {
  const std::vector<int> cycle = q.planar_boundary_cycle();
  const int m = static_cast<int>(cycle.size());
  int at = -1;
  for (int i = 0; i < m; ++i) {
    if (is_origin(q.vertex(cycle[i]))) {
      at = i;
      break;
    }
  }
  std::vector<VecQ> walk;
  if (at >= 0) {
    walk.reserve(m - 1);
    for (int i = 1; i < m; ++i) walk.push_back(q.vertex(cycle[(at + i) % m]));
    return walk;
  }
  for (int i = 0; i < m; ++i) {
    const VecQ& a = q.vertex(cycle[i]);
    const VecQ& b = q.vertex(cycle[(i + 1) % m]);
    if (sign(det2(a, b)) == 0 && sign(dot2(a, b)) < 0) {
      // o lies strictly inside the edge a -> b; the walk starts at b.
      walk.reserve(m);
      for (int k = 0; k < m; ++k) walk.push_back(q.vertex(cycle[(i + 1 + k) % m]));
      return walk;
    }
  }
  throw std::logic_error("walk_from_origin: origin not found on the boundary");
}

// Counter-clockwise boundary vertices of a 2-dimensional Q with o in its
// interior, starting at the vertex of minimal polar angle.
std::vector<VecQ> walk_from_min_angle(const Polytope& q) {
  const std::vector<int> cycle = q.planar_boundary_cycle();
  const int m = static_cast<int>(cycle.size());
  int best = 0;
  for (int i = 1; i < m; ++i) {
    if (polar_angle_less(q.vertex(cycle[i]), q.vertex(cycle[best]))) best = i;
  }
  std::vector<VecQ> walk;
  walk.reserve(m);
  for (int k = 0; k < m; ++k) walk.push_back(q.vertex(cycle[(best + k) % m]));
  return walk;
}

// Theta^p of Q itself (no rotation, no coefficient).
template <typename S>
Tensor<S> theta_raw(const Polytope& q, int order) {
  Tensor<S> out(2, order);
  if (q.is_empty()) return out;
  const OriginFlags flags = q.origin_flags();
  if (!flags.contains) return out;
  if (q.dim() == 2 && !flags.in_relint) {
    const std::vector<VecQ> walk = walk_from_origin(q);
    out += tensor_power<S>(vector_cast<S>(walk.front()), order);
    out += tensor_power<S>(vector_cast<S>(walk.back()), order);
    return out;
  }
  if (q.dim() == 1) {
    Tensor<S> pair(2, order);
    pair += tensor_power<S>(vector_cast<S>(q.vertex(0)), order);
    pair += tensor_power<S>(vector_cast<S>(q.vertex(1)), order);
    out += pair;
    out += pair;
    return out;
  }
  return out;  // a point, or o in the interior
}

const char* kKnownFamilies[] = {"sym",           "cross_moment", "facet_cross",
                                "euler",         "planar_moment", "theta",
                                "theta_visible", "boundary_walk", "composite"};

bool known_family(const std::string& f) {
  for (const char* k : kKnownFamilies)
    if (f == k) return true;
  return false;
}

}  // namespace

CoefFn CoefFn::linear(const Rat& c) {
  CoefFn f;
  f.kind_ = Kind::Linear;
  f.c_ = c;
  return f;
}

CoefFn CoefFn::power(const Rat& c, const Rat& exponent) {
  if (sign(exponent) <= 0) throw std::invalid_argument("CoefFn::power: exponent must be positive");
  if (!exponent.get_num().fits_ulong_p() || !exponent.get_den().fits_ulong_p())
    throw std::invalid_argument("CoefFn::power: exponent out of range");
  CoefFn f;
  f.kind_ = Kind::Power;
  f.c_ = c;
  f.exponent_ = exponent;
  return f;
}

CoefFn CoefFn::table(std::map<Rat, Rat, RatLess> values) {
  for (const auto& [t, v] : values) {
    if (sign(t) < 0) throw std::invalid_argument("CoefFn::table: keys must be positive");
    if (sign(t) == 0 && sign(v) != 0)
      throw std::invalid_argument("CoefFn::table: value at 0 must be 0");
  }
  CoefFn f;
  f.kind_ = Kind::Table;
  f.values_ = std::move(values);
  return f;
}

Rat CoefFn::operator()(const Rat& t) const {
  if (sign(t) == 0) return Rat(0);
  if (sign(t) < 0) {
    const Rat neg = -t;
    return -(*this)(neg);
  }
  switch (kind_) {
    case Kind::Linear:
      return c_ * t;
    case Kind::Power: {
      const unsigned long ue = exponent_.get_num().get_ui();
      const unsigned long ve = exponent_.get_den().get_ui();
      Int tn = t.get_num(), td = t.get_den();
      Int np, dp;
      mpz_pow_ui(np.get_mpz_t(), tn.get_mpz_t(), ue);
      mpz_pow_ui(dp.get_mpz_t(), td.get_mpz_t(), ue);
      if (ve > 1) {
        Int rn, rd;
        if (!mpz_root(rn.get_mpz_t(), np.get_mpz_t(), ve) ||
            !mpz_root(rd.get_mpz_t(), dp.get_mpz_t(), ve))
          throw std::domain_error("CoefFn: argument has no exact rational power");
        np = rn;
        dp = rd;
      }
      Rat r(np, dp);
      r.canonicalize();
      return c_ * r;
    }
    case Kind::Table: {
      const auto it = values_.find(t);
      if (it == values_.end())
        throw std::out_of_range("CoefFn: no table entry for " + format_rational(t));
      return it->second;
    }
  }
  throw std::logic_error("CoefFn: unknown kind");
}

double CoefFn::operator()(double t) const {
  if (t == 0.0) return 0.0;
  if (t < 0.0) return -(*this)(-t);
  switch (kind_) {
    case Kind::Linear:
      return to_double(c_) * t;
    case Kind::Power:
      return to_double(c_) * std::pow(t, to_double(exponent_));
    case Kind::Table:
      throw std::logic_error("CoefFn: table kind has no floating evaluation");
  }
  throw std::logic_error("CoefFn: unknown kind");
}

Rat ValuationSpec::param(const std::string& key, const Rat& fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

Matrix planar_rotation() {
  return Matrix(2, {Rat(0), Rat(1), Rat(-1), Rat(0)});
}

void validate_spec(const ValuationSpec& spec) {
  if (!known_family(spec.family))
    throw std::invalid_argument("unknown valuation family: " + spec.family);
  if (spec.n < 1) throw std::invalid_argument("valuation spec: n must be positive");
  if (spec.family == "sym") {
    if (spec.p < 0) throw std::invalid_argument("sym: order must be nonnegative");
  } else if (spec.family == "cross_moment") {
    if (spec.n < 2) throw std::invalid_argument("cross_moment: requires n >= 2");
  } else if (spec.family == "facet_cross") {
    if (spec.n < 2) throw std::invalid_argument("facet_cross: requires n >= 2");
    const Rat r = spec.param("r");
    if (r.get_den() != 1 || sign(r) < 0 || r >= Rat(spec.n))
      throw std::invalid_argument("facet_cross: shift r must be an integer in [0, n-1]");
  } else if (spec.family == "euler") {
    if (spec.n < 2) throw std::invalid_argument("euler: requires n >= 2");
  } else if (spec.family == "planar_moment" || spec.family == "theta" ||
             spec.family == "theta_visible" || spec.family == "boundary_walk") {
    if (spec.n != 2) throw std::invalid_argument(spec.family + ": requires n = 2");
    if ((spec.family == "theta" || spec.family == "theta_visible") && spec.p < 1)
      throw std::invalid_argument(spec.family + ": order must be >= 1");
  } else if (spec.family == "composite") {
    if (spec.terms.empty()) throw std::invalid_argument("composite: no terms");
    if (spec.compose_hull_origin)
      throw std::invalid_argument("composite: set compose_hull_origin on the terms instead");
    const int order = tensor_order(spec.terms.front());
    for (const ValuationSpec& term : spec.terms) {
      if (term.n != spec.n) throw std::invalid_argument("composite: mixed dimensions");
      validate_spec(term);
      if (tensor_order(term) != order)
        throw std::invalid_argument("composite: mixed tensor orders");
    }
  }
}

int tensor_order(const ValuationSpec& spec) {
  if (spec.family == "sym" || spec.family == "theta" || spec.family == "theta_visible")
    return spec.p;
  if (spec.family == "cross_moment") return spec.n - 1;
  if (spec.family == "facet_cross" || spec.family == "euler") return spec.n;
  if (spec.family == "planar_moment" || spec.family == "boundary_walk") return 2;
  if (spec.family == "composite" && !spec.terms.empty()) return tensor_order(spec.terms.front());
  throw std::invalid_argument("tensor_order: unknown family " + spec.family);
}

int grading_parity(const ValuationSpec& spec) {
  if (spec.family == "sym" || spec.family == "planar_moment") return 0;
  if (spec.family == "cross_moment" || spec.family == "facet_cross" || spec.family == "euler")
    return 1;
  if (spec.family == "theta") return spec.pre_rotate ? spec.p % 2 : -1;
  if (spec.family == "theta_visible") return spec.p % 2;
  if (spec.family == "boundary_walk") return -1;
  if (spec.family == "composite") {
    int common = -2;
    for (const ValuationSpec& term : spec.terms) {
      const int d = grading_parity(term);
      if (d < 0) return -1;
      if (common == -2) common = d;
      if (d != common) return -1;
    }
    return common < 0 ? -1 : common;
  }
  throw std::invalid_argument("grading_parity: unknown family " + spec.family);
}

template <typename S>
Tensor<S> val_sym(const Polytope& P, int p, const CoefFn& zeta) {
  const int n = P.ambient_dim();
  Tensor<S> out(n, p);
  for (int fi = 0; fi < static_cast<int>(P.facets().size()); ++fi) {
    const FacetData& f = P.facets()[fi];
    if (sign(f.support) == 0) continue;  // facet hyperplane through o
    const FacetGeometry<S> g = facet_geometry<S>(P, fi);
    const S h = scalar_cast<S>(f.support);
    S weight = zeta(g.cone_volume);
    for (int k = 0; k < p; ++k) weight /= h;
    out += weight * tensor_power<S>(cast_int_vector<S>(f.normal), p);
  }
  return out;
}

template <typename S>
Tensor<S> val_cross_moment(const Polytope& P, const Rat& c) {
  const VecT<S> m = moment_vector<S>(P);
  Tensor<S> t = cross_tensor<S>(m);
  t *= scalar_cast<S>(c);
  return t;
}

template <typename S>
Tensor<S> val_facet_cross(const Polytope& P, FacetScope scope, int shift, const Rat& c) {
  const int n = P.ambient_dim();
  if (n < 2) throw std::invalid_argument("val_facet_cross: requires n >= 2");
  if (shift < 0 || shift >= n) throw std::invalid_argument("val_facet_cross: bad shift");
  Tensor<S> acc(n, n);
  for (int fi = 0; fi < static_cast<int>(P.facets().size()); ++fi) {
    const FacetData& f = P.facets()[fi];
    if (scope == FacetScope::OriginAvoiding && sign(f.support) == 0) continue;
    const FacetGeometry<S> g = facet_geometry<S>(P, fi);
    acc += outer_product(cross_tensor<S>(g.centroid), tensor_of_vector<S>(g.area_vector));
  }
  if (shift != 0) acc = permute_action(Permutation::circular_shift(n, shift), acc);
  acc *= scalar_cast<S>(c);
  return acc;
}

template <typename S>
Tensor<S> val_euler(const Polytope& P, const Rat& c_relint, const Rat& c_const,
                    const Rat& c_origin, const CoefFn& eta) {
  const int n = P.ambient_dim();
  Tensor<S> out(n, n);
  if (P.is_empty()) return out;
  const OriginFlags flags = P.origin_flags();
  S coeff = scalar_cast<S>(c_const);
  if (flags.in_relint) {
    const Rat signed_c = P.dim() % 2 == 0 ? c_relint : Rat(-c_relint);
    coeff += scalar_cast<S>(signed_c);
  }
  if (flags.contains) coeff += scalar_cast<S>(c_origin);
  coeff += eta(volume<S>(P));
  Tensor<S> eps = levi_civita<S>(n);
  eps *= coeff;
  return eps;
}

template <typename S>
Tensor<S> val_planar_moment(const Polytope& P, const Rat& a) {
  if (P.ambient_dim() != 2) throw std::invalid_argument("val_planar_moment: requires n = 2");
  Tensor<S> m = moment_tensor<S>(P.transform(planar_rotation()), 2);
  m *= scalar_cast<S>(a);
  return m;
}

template <typename S>
Tensor<S> val_theta(const Polytope& P, int order, bool pre_rotate, const Rat& b) {
  if (P.ambient_dim() != 2) throw std::invalid_argument("val_theta: requires n = 2");
  if (order < 1) throw std::invalid_argument("val_theta: order must be >= 1");
  Tensor<S> t = pre_rotate ? theta_raw<S>(P.transform(planar_rotation()), order)
                           : theta_raw<S>(P, order);
  t *= scalar_cast<S>(b);
  return t;
}

template <typename S>
Tensor<S> val_theta_visible(const Polytope& P, int order, const Rat& b) {
  if (P.ambient_dim() != 2) throw std::invalid_argument("val_theta_visible: requires n = 2");
  std::vector<VecQ> pts{VecQ(2, Rat(0))};
  for (int id : P.visible_vertices()) pts.push_back(P.vertex(id));
  return val_theta<S>(Polytope::hull(2, pts), order, true, b);
}

template <typename S>
Tensor<S> val_boundary_walk(const Polytope& P, const std::array<Rat, 5>& d, const CoefFn& zeta,
                            const CoefFn& eta) {
  if (P.ambient_dim() != 2) throw std::invalid_argument("val_boundary_walk: requires n = 2");
  if (P.is_empty() || !P.origin_flags().contains)
    throw std::invalid_argument("val_boundary_walk: polytope must contain the origin");
  const Polytope Q = P.transform(planar_rotation());
  Tensor<S> out(2, 2);

  if (sign(d[3]) != 0) out += scalar_cast<S>(d[3]) * moment_tensor<S>(Q, 2);
  if (sign(d[1]) != 0) out += scalar_cast<S>(d[1]) * theta_raw<S>(Q, 2);

  const OriginFlags flags = Q.origin_flags();
  if (Q.dim() == 2) {
    const bool origin_interior = flags.in_relint;
    const std::vector<VecQ> walk =
        origin_interior ? walk_from_min_angle(Q) : walk_from_origin(Q);
    const int r = static_cast<int>(walk.size());

    if (!origin_interior && sign(d[4]) != 0) {
      // F: the squares of the walk's first and last vertices.
      out += scalar_cast<S>(d[4]) *
             (tensor_power<S>(vector_cast<S>(walk.front()), 2) -
              tensor_power<S>(vector_cast<S>(walk.back()), 2));
    }

    const int edge_count = origin_interior ? r : r - 1;
    for (int i = 0; i < edge_count; ++i) {
      const VecQ& a = walk[i];
      const VecQ& b = walk[(i + 1) % r];
      const Rat dq = det2(a, b);
      if (sign(dq) <= 0)
        throw std::logic_error("val_boundary_walk: non-positive edge determinant");
      const VecT<S> as = vector_cast<S>(a);
      const VecT<S> bs = vector_cast<S>(b);
      const S ds = scalar_cast<S>(dq);
      if (!zeta.is_zero()) {
        VecT<S> diff(2);
        for (int j = 0; j < 2; ++j) diff[j] = as[j] - bs[j];
        const S w = zeta(ds) / (ds * ds);
        out += w * tensor_power<S>(diff, 2);
      }
      if (!eta.is_zero()) {
        const S w = eta(ds) / ds;
        out += w * (outer_product(tensor_of_vector<S>(as), tensor_of_vector<S>(bs)) -
                    outer_product(tensor_of_vector<S>(bs), tensor_of_vector<S>(as)));
      }
    }
  }

  // Euler-type closing term: (d2 - d0)(-1)^{dim P} on o in relint, minus d2.
  Rat coeff = -d[2];
  if (flags.in_relint) {
    const Rat swing = d[2] - d[0];
    coeff += P.dim() % 2 == 0 ? swing : Rat(-swing);
  }
  if (sign(coeff) != 0) out += scalar_cast<S>(coeff) * levi_civita<S>(2);
  return out;
}

template <typename S>
Tensor<S> evaluate(const ValuationSpec& spec, const Polytope& P) {
  validate_spec(spec);
  if (P.ambient_dim() != spec.n)
    throw std::invalid_argument("evaluate: polytope/spec dimension mismatch");
  if (spec.family == "composite") {
    Tensor<S> acc(spec.n, tensor_order(spec));
    for (const ValuationSpec& term : spec.terms) acc += evaluate<S>(term, P);
    return acc;
  }
  std::optional<Polytope> coned;
  if (spec.compose_hull_origin) coned = P.cone_over_origin();
  const Polytope* target = coned ? &*coned : &P;
  if (spec.family == "sym") return val_sym<S>(*target, spec.p, spec.zeta);
  if (spec.family == "cross_moment")
    return val_cross_moment<S>(*target, spec.param("c", Rat(1)));
  if (spec.family == "facet_cross")
    return val_facet_cross<S>(*target, spec.scope,
                              static_cast<int>(spec.param("r").get_num().get_si()),
                              spec.param("c", Rat(1)));
  if (spec.family == "euler")
    return val_euler<S>(*target, spec.param("c_relint"), spec.param("c_const"),
                        spec.param("c_origin"), spec.zeta);
  if (spec.family == "planar_moment") return val_planar_moment<S>(*target, spec.param("a", Rat(1)));
  if (spec.family == "theta")
    return val_theta<S>(*target, spec.p, spec.pre_rotate, spec.param("b", Rat(1)));
  if (spec.family == "theta_visible")
    return val_theta_visible<S>(*target, spec.p, spec.param("b", Rat(1)));
  if (spec.family == "boundary_walk") {
    const std::array<Rat, 5> d{spec.param("d0"), spec.param("d1"), spec.param("d2"),
                               spec.param("d3"), spec.param("d4")};
    return val_boundary_walk<S>(*target, d, spec.zeta, spec.eta);
  }
  throw std::invalid_argument("evaluate: unknown family " + spec.family);
}

template Tensor<Rat> val_sym<Rat>(const Polytope&, int, const CoefFn&);
template Tensor<double> val_sym<double>(const Polytope&, int, const CoefFn&);
template Tensor<Rat> val_cross_moment<Rat>(const Polytope&, const Rat&);
template Tensor<double> val_cross_moment<double>(const Polytope&, const Rat&);
template Tensor<Rat> val_facet_cross<Rat>(const Polytope&, FacetScope, int, const Rat&);
template Tensor<double> val_facet_cross<double>(const Polytope&, FacetScope, int, const Rat&);
template Tensor<Rat> val_euler<Rat>(const Polytope&, const Rat&, const Rat&, const Rat&,
                                    const CoefFn&);
template Tensor<double> val_euler<double>(const Polytope&, const Rat&, const Rat&, const Rat&,
                                          const CoefFn&);
template Tensor<Rat> val_planar_moment<Rat>(const Polytope&, const Rat&);
template Tensor<double> val_planar_moment<double>(const Polytope&, const Rat&);
template Tensor<Rat> val_theta<Rat>(const Polytope&, int, bool, const Rat&);
template Tensor<double> val_theta<double>(const Polytope&, int, bool, const Rat&);
template Tensor<Rat> val_theta_visible<Rat>(const Polytope&, int, const Rat&);
template Tensor<double> val_theta_visible<double>(const Polytope&, int, const Rat&);
template Tensor<Rat> val_boundary_walk<Rat>(const Polytope&, const std::array<Rat, 5>&,
                                            const CoefFn&, const CoefFn&);
template Tensor<double> val_boundary_walk<double>(const Polytope&, const std::array<Rat, 5>&,
                                                  const CoefFn&, const CoefFn&);
template Tensor<Rat> evaluate<Rat>(const ValuationSpec&, const Polytope&);
template Tensor<double> evaluate<double>(const ValuationSpec&, const Polytope&);

}  // namespace tenval
