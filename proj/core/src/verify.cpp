#include "tenval/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tenval/moments.hpp"

namespace tenval {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t fold(std::uint64_t a, std::uint64_t b) {
  Rng r(a + (b + 1) * kGolden);
  r.next();
  return r.next();
}

Matrix identity_matrix(int n) {
  std::vector<Rat> e(static_cast<std::size_t>(n) * n, Rat(0));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = Rat(1);
  return Matrix(n, e);
}

Tensor<Rat> identity_tensor(int n, const Rat& scale) {
  Tensor<Rat> t(n, 2);
  for (int i = 0; i < n; ++i) t.at({i, i}) = scale;
  return t;
}

std::string describe(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// Track a float evaluation against its exact counterpart; records a failure
// when the relative error exceeds the tolerance.
void track_float(VerifyReport& rep, const Tensor<Rat>& exact, const Tensor<double>& approx,
                 const CheckOptions& opt, const char* what) {
  const double err = relative_error(exact, approx);
  if (!rep.max_rel_err || err > *rep.max_rel_err) rep.max_rel_err = err;
  if (err > opt.tolerance) {
    Counterexample ce;
    ce.expected = exact;
    ce.note = std::string(what) + ": float relative error " + describe(err);
    rep.record_failure(std::move(ce));
  }
}

Polytope make_full_dim_polytope(Rng& rng, int n, int numerator_bound, int denominator_bound) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const int k = rng.uniform(n + 1, 12);
    std::vector<VecQ> pts;
    pts.reserve(k);
    for (int i = 0; i < k; ++i) {
      VecQ v(n);
      for (int j = 0; j < n; ++j) v[j] = rng.rational(numerator_bound, denominator_bound);
      pts.push_back(std::move(v));
    }
    Polytope P = Polytope::hull(n, pts);
    if (P.dim() == n) return P;
  }
  throw std::logic_error("make_full_dim_polytope: retry cap exceeded");
}

VecQ random_nonzero_vector(Rng& rng, int n, int numerator_bound, int denominator_bound) {
  for (;;) {
    VecQ v(n);
    bool nonzero = false;
    for (int j = 0; j < n; ++j) {
      v[j] = rng.rational(numerator_bound, denominator_bound);
      nonzero = nonzero || sign(v[j]) != 0;
    }
    if (nonzero) return v;
  }
}

Rat positive_rational(Rng& rng, int numerator_bound, int denominator_bound) {
  Rat r(rng.uniform(1, numerator_bound), rng.uniform(1, denominator_bound));
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Suite family tables
// ---------------------------------------------------------------------------

struct SuiteCase {
  std::string tag;
  ValuationSpec spec;
  bool origin_domain = false;  // polytopes contain o; cuts pass through o
};

ValuationSpec make_sym(int n, int p, const CoefFn& zeta) {
  ValuationSpec s;
  s.family = "sym";
  s.n = n;
  s.p = p;
  s.zeta = zeta;
  return s;
}

ValuationSpec make_facet_cross(int n, FacetScope scope, int r, const Rat& c) {
  ValuationSpec s;
  s.family = "facet_cross";
  s.n = n;
  s.scope = scope;
  s.params["r"] = Rat(r);
  s.params["c"] = c;
  return s;
}

ValuationSpec make_euler(int n, const Rat& cr, const Rat& cc, const Rat& co, const CoefFn& eta) {
  ValuationSpec s;
  s.family = "euler";
  s.n = n;
  s.params["c_relint"] = cr;
  s.params["c_const"] = cc;
  s.params["c_origin"] = co;
  s.zeta = eta;
  return s;
}

std::vector<SuiteCase> family_cases(int n) {
  std::vector<SuiteCase> cases;
  cases.push_back({"sym_p1", make_sym(n, 1, CoefFn::linear(Rat(2))), false});
  cases.push_back({"sym_p2", make_sym(n, 2, CoefFn::linear(Rat(3, 2))), false});
  if (n > 2) cases.push_back({"sym_pn", make_sym(n, n, CoefFn::linear(Rat(1))), false});

  {
    ValuationSpec s;
    s.family = "cross_moment";
    s.n = n;
    s.params["c"] = Rat(5, 3);
    cases.push_back({"cross_moment", s, false});
  }
  cases.push_back(
      {"facet_cross_no", make_facet_cross(n, FacetScope::OriginAvoiding, 0, Rat(1)), false});
  cases.push_back({"facet_cross_all", make_facet_cross(n, FacetScope::All, 1, Rat(2)), false});
  cases.push_back(
      {"euler", make_euler(n, Rat(3, 2), Rat(-2), Rat(1, 3), CoefFn::linear(Rat(2))), false});

  // A two-term sum with the second term evaluated on conv({o} ∪ P).
  {
    ValuationSpec cone_sym = make_sym(n, 2, CoefFn::linear(Rat(3, 2)));
    cone_sym.compose_hull_origin = true;
    ValuationSpec comp;
    comp.family = "composite";
    comp.n = n;
    comp.terms = {make_sym(n, 2, CoefFn::linear(Rat(1))), cone_sym};
    cases.push_back({"cone_sym", comp, false});
  }
  if (n >= 3) {
    ValuationSpec cm1;
    cm1.family = "cross_moment";
    cm1.n = n;
    cm1.params["c"] = Rat(2);
    ValuationSpec cm2 = cm1;
    cm2.params["c"] = Rat(-1, 3);
    cm2.compose_hull_origin = true;
    ValuationSpec comp;
    comp.family = "composite";
    comp.n = n;
    comp.terms = {cm1, cm2};
    cases.push_back({"cone_cross_moment", comp, false});

    ValuationSpec fc1 = make_facet_cross(n, FacetScope::OriginAvoiding, 0, Rat(1));
    ValuationSpec fc2 = make_facet_cross(n, FacetScope::OriginAvoiding, 0, Rat(5, 2));
    fc2.compose_hull_origin = true;
    ValuationSpec compf;
    compf.family = "composite";
    compf.n = n;
    compf.terms = {fc1, fc2};
    cases.push_back({"cone_facet_cross", compf, false});
  }

  if (n == 2) {
    {
      ValuationSpec s;
      s.family = "planar_moment";
      s.n = 2;
      s.params["a"] = Rat(4, 7);
      cases.push_back({"planar_moment", s, false});
    }
    {
      ValuationSpec s;
      s.family = "theta";
      s.n = 2;
      s.p = 2;
      s.params["b"] = Rat(3, 2);
      cases.push_back({"theta_p2", s, true});
      s.p = 3;
      s.params["b"] = Rat(1);
      cases.push_back({"theta_p3", s, true});
    }
    {
      ValuationSpec s;
      s.family = "theta_visible";
      s.n = 2;
      s.p = 2;
      s.params["b"] = Rat(2, 5);
      cases.push_back({"theta_visible", s, false});
    }
    {
      const std::array<Rat, 5> d{Rat(2, 3), Rat(5, 7), Rat(-3, 2), Rat(4, 5), Rat(7, 11)};
      ValuationSpec walk =
          boundary_walk_spec(d, CoefFn::linear(Rat(11, 5)), CoefFn::linear(Rat(-2, 9)));
      cases.push_back({"boundary_walk", walk, true});
      cases.push_back({"walk_dictionary", classified_equivalent(walk), true});
    }
    {
      // The widest planar sum: direct and cone-composed terms together.
      ValuationSpec sym1 = make_sym(2, 2, CoefFn::linear(Rat(1)));
      ValuationSpec sym2 = make_sym(2, 2, CoefFn::linear(Rat(-1, 2)));
      sym2.compose_hull_origin = true;
      ValuationSpec fc = make_facet_cross(2, FacetScope::OriginAvoiding, 0, Rat(3));
      fc.compose_hull_origin = true;
      ValuationSpec eu = make_euler(2, Rat(1, 2), Rat(2), Rat(-1), CoefFn::linear(Rat(1)));
      ValuationSpec pm;
      pm.family = "planar_moment";
      pm.n = 2;
      pm.params["a"] = Rat(1, 4);
      ValuationSpec pmc = pm;
      pmc.params["a"] = Rat(2);
      pmc.compose_hull_origin = true;
      ValuationSpec th;
      th.family = "theta";
      th.n = 2;
      th.p = 2;
      th.params["b"] = Rat(5, 6);
      th.compose_hull_origin = true;
      ValuationSpec tv;
      tv.family = "theta_visible";
      tv.n = 2;
      tv.p = 2;
      tv.params["b"] = Rat(-3, 4);
      ValuationSpec comp;
      comp.family = "composite";
      comp.n = 2;
      comp.terms = {sym1, sym2, fc, eu, pm, pmc, th, tv};
      cases.push_back({"cone_mix", comp, false});
    }
  }
  return cases;
}

Polytope case_polytope(const SuiteCase& c, Rng& rng, int n) {
  if (c.origin_domain) return random_planar_origin_polytope(rng, 8, 4);
  // Mix in lower-dimensional and origin-containing bodies for coverage.
  const int kind = rng.uniform(0, 5);
  if (kind == 0) return random_flat_polytope(rng, n, 6, 3);
  if (kind == 1 && n == 2) return random_planar_origin_polytope(rng, 8, 4);
  return make_full_dim_polytope(rng, n, 8, 4);
}

}  // namespace

// ---------------------------------------------------------------------------
// Rng
// ---------------------------------------------------------------------------

std::uint64_t Rng::next() {
  state_ += kGolden;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

Rat Rng::rational(int numerator_bound, int denominator_bound) {
  Rat r(uniform(-numerator_bound, numerator_bound), uniform(1, denominator_bound));
  r.canonicalize();
  return r;
}

Rat Rng::nonzero_rational(int numerator_bound, int denominator_bound) {
  for (;;) {
    Rat r = rational(numerator_bound, denominator_bound);
    if (sign(r) != 0) return r;
  }
}

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  Rng base(seed);
  const std::uint64_t a = base.next();
  Rng mix(a ^ ((trial + 1) * kGolden));
  return Rng(mix.next());
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

void VerifyReport::record_failure(Counterexample ce) {
  ++failures;
  if (!counterexample) counterexample = std::move(ce);
}

void VerifyReport::absorb(const VerifyReport& other) {
  trials += other.trials;
  failures += other.failures;
  if (other.max_rel_err && (!max_rel_err || *other.max_rel_err > *max_rel_err))
    max_rel_err = other.max_rel_err;
  if (!counterexample && other.counterexample) counterexample = other.counterexample;
}

double relative_error(const Tensor<Rat>& exact, const Tensor<double>& approx) {
  double maxabs = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i)
    maxabs = std::max(maxabs, std::fabs(to_double(exact[i])));
  const double floor = std::max(1.0, maxabs);
  double worst = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double e = to_double(exact[i]);
    const double denom = e != 0.0 ? std::fabs(e) : floor;
    worst = std::max(worst, std::fabs(e - approx[i]) / denom);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

Matrix random_unimodular(Rng& rng, int n, int target_det) {
  Matrix m = identity_matrix(n);
  const int shears = rng.uniform(1, 6);
  for (int s = 0; s < shears; ++s) {
    const int i = rng.uniform(0, n - 1);
    int j = rng.uniform(0, n - 2);
    if (j >= i) ++j;
    int c = rng.uniform(-3, 3);
    if (c == 0) c = 1;
    // Left-multiply by the elementary shear I + c E_ij: row i += c · row j.
    for (int k = 0; k < n; ++k) m.at(i, k) += Rat(c) * m.at(j, k);
  }
  // Apply a signed permutation of the rows.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform(0, i)]);
  std::vector<Rat> rows(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const Rat s = rng.uniform(0, 1) == 0 ? Rat(1) : Rat(-1);
    for (int k = 0; k < n; ++k)
      rows[static_cast<std::size_t>(i) * n + k] = s * m.at(perm[i], k);
  }
  Matrix out(n, rows);
  const Rat det = out.determinant();
  if (det != Rat(target_det)) {
    for (int k = 0; k < n; ++k) out.at(0, k) = -out.at(0, k);
  }
  if (out.determinant() != Rat(target_det))
    throw std::logic_error("random_unimodular: determinant normalization failed");
  return out;
}

Hyperplane random_hyperplane(Rng& rng, int n, int numerator_bound, int denominator_bound,
                             bool through_origin) {
  VecQ normal(n);
  for (;;) {
    bool nonzero = false;
    for (int j = 0; j < n; ++j) {
      normal[j] = Rat(rng.uniform(-3, 3));
      nonzero = nonzero || sign(normal[j]) != 0;
    }
    if (nonzero) break;
  }
  Rat offset(0);
  if (!through_origin) {
    for (int j = 0; j < n; ++j)
      offset += normal[j] * rng.rational(numerator_bound, denominator_bound);
  }
  return Hyperplane{normal, offset};
}

Polytope random_flat_polytope(Rng& rng, int n, int numerator_bound, int denominator_bound) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const int k = rng.uniform(n, 10);
    std::vector<VecQ> pts;
    pts.reserve(k);
    for (int i = 0; i < k; ++i) {
      VecQ v(n, Rat(0));
      for (int j = 0; j + 1 < n; ++j) v[j] = rng.rational(numerator_bound, denominator_bound);
      pts.push_back(std::move(v));
    }
    Polytope flat = Polytope::hull(n, pts);
    if (flat.dim() != n - 1) continue;
    const Matrix phi = random_unimodular(rng, n, rng.uniform(0, 1) == 0 ? 1 : -1);
    const VecQ shift = random_nonzero_vector(rng, n, numerator_bound, denominator_bound);
    return flat.transform(phi).translate(shift);
  }
  throw std::logic_error("random_flat_polytope: retry cap exceeded");
}

Polytope random_planar_origin_polytope(Rng& rng, int numerator_bound, int denominator_bound) {
  const VecQ origin(2, Rat(0));
  const int stratum = rng.uniform(0, 6);
  switch (stratum) {
    case 0:
      return Polytope::point(origin);
    case 1: {
      const VecQ w = random_nonzero_vector(rng, 2, numerator_bound, denominator_bound);
      return Polytope::hull(2, {origin, w});
    }
    case 2: {
      const VecQ a = random_nonzero_vector(rng, 2, numerator_bound, denominator_bound);
      const Rat t = positive_rational(rng, numerator_bound, denominator_bound);
      VecQ b{-t * a[0], -t * a[1]};
      return Polytope::hull(2, {a, b});
    }
    case 3: {
      // Origin a vertex: every other point has positive first coordinate.
      for (int attempt = 0; attempt < 64; ++attempt) {
        const int k = rng.uniform(2, 6);
        std::vector<VecQ> pts{origin};
        for (int i = 0; i < k; ++i) {
          pts.push_back(VecQ{positive_rational(rng, numerator_bound, denominator_bound),
                             rng.rational(numerator_bound, denominator_bound)});
        }
        Polytope P = Polytope::hull(2, pts);
        if (P.dim() == 2) return P;
      }
      throw std::logic_error("random_planar_origin_polytope: vertex stratum retry cap");
    }
    case 4: {
      // Origin strictly inside a boundary edge along the line through ±a.
      const VecQ a = random_nonzero_vector(rng, 2, numerator_bound, denominator_bound);
      const Rat t = positive_rational(rng, numerator_bound, denominator_bound);
      const VecQ b{-t * a[0], -t * a[1]};
      const int k = rng.uniform(1, 5);
      std::vector<VecQ> pts{a, b};
      for (int i = 0; i < k; ++i) {
        for (;;) {
          const VecQ c = random_nonzero_vector(rng, 2, numerator_bound, denominator_bound);
          if (sign(a[0] * c[1] - a[1] * c[0]) > 0) {
            pts.push_back(c);
            break;
          }
        }
      }
      return Polytope::hull(2, pts);
    }
    default: {
      // Origin interior: one point per open quadrant, plus extras.
      std::vector<VecQ> pts;
      const auto pos = [&] { return positive_rational(rng, numerator_bound, denominator_bound); };
      pts.push_back(VecQ{pos(), pos()});
      pts.push_back(VecQ{-pos(), pos()});
      pts.push_back(VecQ{-pos(), -pos()});
      pts.push_back(VecQ{pos(), -pos()});
      if (stratum == 6) {
        const int extra = rng.uniform(1, 4);
        for (int i = 0; i < extra; ++i)
          pts.push_back(random_nonzero_vector(rng, 2, numerator_bound, denominator_bound));
      }
      return Polytope::hull(2, pts);
    }
  }
}

InstanceSet random_instances(std::uint64_t seed, int n, int count, int numerator_bound,
                             int denominator_bound) {
  InstanceSet out;
  out.polytopes.reserve(count);
  out.transforms.reserve(count);
  out.cuts.reserve(count);
  for (int i = 0; i < count; ++i) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(i));
    out.polytopes.push_back(make_full_dim_polytope(rng, n, numerator_bound, denominator_bound));
    out.transforms.push_back(random_unimodular(rng, n, i % 2 == 0 ? 1 : -1));
    out.cuts.push_back(random_hyperplane(rng, n, numerator_bound, denominator_bound, false));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Single-instance checks
// ---------------------------------------------------------------------------

VerifyReport check_additivity(const ValuationSpec& spec, const Polytope& P, const Hyperplane& H,
                              const CheckOptions& opt) {
  VerifyReport rep;
  rep.check = "additivity";
  rep.trials = 1;
  const CutResult cut = P.cut(H);
  const Tensor<Rat> whole = evaluate<Rat>(spec, P);
  const Tensor<Rat> slice = evaluate<Rat>(spec, cut.slice);
  const Tensor<Rat> lo = evaluate<Rat>(spec, cut.minus);
  const Tensor<Rat> hi = evaluate<Rat>(spec, cut.plus);
  const Tensor<Rat> lhs = lo + hi;
  const Tensor<Rat> rhs = whole + slice;
  if (!(lhs == rhs)) {
    Counterexample ce;
    ce.polytope = P;
    ce.cut = H;
    ce.expected = rhs;
    ce.actual = lhs;
    ce.note = "piece sum != whole + slice";
    rep.record_failure(std::move(ce));
  }
  if (opt.mode == Mode::Float) {
    track_float(rep, whole, evaluate<double>(spec, P), opt, "whole");
    track_float(rep, slice, evaluate<double>(spec, cut.slice), opt, "slice");
    track_float(rep, lo, evaluate<double>(spec, cut.minus), opt, "lower piece");
    track_float(rep, hi, evaluate<double>(spec, cut.plus), opt, "upper piece");
  }
  return rep;
}

VerifyReport check_contravariance(const ValuationSpec& spec, const Polytope& P, const Matrix& phi,
                                  const CheckOptions& opt) {
  VerifyReport rep;
  rep.check = "contravariance";
  rep.trials = 1;
  const Rat det = phi.determinant();
  if (det != Rat(1) && det != Rat(-1))
    throw std::invalid_argument("check_contravariance: transform must be unimodular");
  const int delta = grading_parity(spec);
  if (delta < 0 && det != Rat(1))
    throw std::invalid_argument(
        "check_contravariance: this spec is only covariant under determinant +1");
  const Tensor<Rat> direct = evaluate<Rat>(spec, P.transform(phi));
  Tensor<Rat> expected = gl_action(phi.inverse_transpose(), evaluate<Rat>(spec, P));
  if (delta == 1 && det == Rat(-1)) expected = -expected;
  if (!(direct == expected)) {
    Counterexample ce;
    ce.polytope = P;
    ce.transform = phi;
    ce.expected = expected;
    ce.actual = direct;
    ce.note = "transformed evaluation != contravariant action";
    rep.record_failure(std::move(ce));
  }
  if (opt.mode == Mode::Float) {
    track_float(rep, direct, evaluate<double>(spec, P.transform(phi)), opt, "transformed");
    track_float(rep, expected,
                delta == 1 && det == Rat(-1)
                    ? -gl_action(phi.inverse_transpose(), evaluate<double>(spec, P))
                    : gl_action(phi.inverse_transpose(), evaluate<double>(spec, P)),
                opt, "action side");
  }
  return rep;
}

std::pair<Tensor<Rat>, Tensor<Rat>> decompose_pm(const ValuationSpec& spec, const Polytope& P) {
  const int n = spec.n;
  if (n < 2) throw std::invalid_argument("decompose_pm: requires n >= 2");
  const auto reflect_part = [&](int axis) {
    Matrix th = identity_matrix(n);
    th.at(axis, axis) = Rat(-1);
    const Tensor<Rat> z = evaluate<Rat>(spec, P.transform(th));
    return gl_action(th, z);  // th is symmetric and involutive
  };
  const Tensor<Rat> z = evaluate<Rat>(spec, P);
  const Tensor<Rat> r1 = reflect_part(n - 1);
  const Tensor<Rat> r2 = reflect_part(0);
  const Rat half(1, 2);
  const Tensor<Rat> plus = half * (z + r1);
  const Tensor<Rat> minus = half * (z - r1);
  const Tensor<Rat> plus2 = half * (z + r2);
  const Tensor<Rat> minus2 = half * (z - r2);
  if (!(plus == plus2) || !(minus == minus2))
    throw std::logic_error("decompose_pm: decomposition depends on the reflection choice");
  if (!(plus + minus == z)) throw std::logic_error("decompose_pm: parts do not sum back");
  return {plus, minus};
}

VerifyReport check_grading(const ValuationSpec& spec, const Polytope& P,
                           const CheckOptions& opt) {
  VerifyReport rep;
  rep.check = "grading";
  rep.trials = 1;
  const int delta = grading_parity(spec);
  if (delta < 0)
    throw std::invalid_argument("check_grading: spec has no two-sided determinant grading");
  const auto [plus, minus] = decompose_pm(spec, P);
  const Tensor<Rat>& must_vanish = delta == 0 ? minus : plus;
  if (!must_vanish.is_zero()) {
    Counterexample ce;
    ce.polytope = P;
    ce.actual = must_vanish;
    ce.note = delta == 0 ? "odd part nonzero on an even family"
                         : "even part nonzero on an odd family";
    rep.record_failure(std::move(ce));
  }
  if (opt.mode == Mode::Float) {
    track_float(rep, evaluate<Rat>(spec, P), evaluate<double>(spec, P), opt, "evaluation");
  }
  return rep;
}

VerifyReport check_mr(const Polytope& P, MrKind kind, const CheckOptions& opt) {
  VerifyReport rep;
  rep.check = kind == MrKind::MR1 ? "mr1" : "mr2";
  rep.trials = 1;
  const int n = P.ambient_dim();
  if (P.dim() < n) throw std::invalid_argument("check_mr: requires a full-dimensional polytope");
  if (kind == MrKind::MR1) {
    const Tensor<Rat> lhs = val_facet_cross<Rat>(P, FacetScope::All, 0, Rat(1));
    Tensor<Rat> rhs = levi_civita<Rat>(n);
    const Rat vol = volume<Rat>(P);
    rhs *= vol;
    if (!(lhs == rhs)) {
      Counterexample ce;
      ce.polytope = P;
      ce.expected = rhs;
      ce.actual = lhs;
      ce.note = "facet cross sum != volume · alternating tensor";
      rep.record_failure(std::move(ce));
    }
    if (opt.mode == Mode::Float) {
      track_float(rep, lhs, val_facet_cross<double>(P, FacetScope::All, 0, Rat(1)), opt,
                  "facet cross sum");
      Tensor<double> rhsf = levi_civita<double>(n);
      rhsf *= volume<double>(P);
      track_float(rep, rhs, rhsf, opt, "volume side");
    }
    return rep;
  }
  // MR2: signed slot-shift sum over facets whose hyperplanes contain o.
  const Tensor<Rat> through = val_facet_cross<Rat>(P, FacetScope::All, 0, Rat(1)) -
                              val_facet_cross<Rat>(P, FacetScope::OriginAvoiding, 0, Rat(1));
  Tensor<Rat> acc(n, n);
  for (int r = 1; r <= n; ++r) {
    const Permutation shift = Permutation::circular_shift(n, r);
    Tensor<Rat> term = permute_action(shift, through);
    term *= Rat(shift.sign());
    acc += term;
  }
  if (!acc.is_zero()) {
    Counterexample ce;
    ce.polytope = P;
    ce.actual = acc;
    ce.note = "signed shift sum over origin-containing facets nonzero";
    rep.record_failure(std::move(ce));
  }
  if (opt.mode == Mode::Float) {
    const Tensor<double> throughf =
        val_facet_cross<double>(P, FacetScope::All, 0, Rat(1)) -
        val_facet_cross<double>(P, FacetScope::OriginAvoiding, 0, Rat(1));
    Tensor<double> accf(n, n);
    for (int r = 1; r <= n; ++r) {
      const Permutation shift = Permutation::circular_shift(n, r);
      Tensor<double> term = permute_action(shift, throughf);
      term *= static_cast<double>(shift.sign());
      accf += term;
    }
    track_float(rep, acc, accf, opt, "shift sum");
  }
  return rep;
}

VerifyReport check_simplex_forms(int n, int p, const std::vector<Rat>& s_values,
                                 const CheckOptions& opt) {
  VerifyReport rep;
  rep.check = "simplex_forms";
  if (n < 2 || p < 0 || p > n)
    throw std::invalid_argument("check_simplex_forms: need n >= 2 and 0 <= p <= n");
  Rat nfact(1);
  for (int k = 2; k <= n; ++k) nfact *= k;

  const std::vector<CoefFn> zetas = {CoefFn::linear(Rat(1)), CoefFn::linear(Rat(7, 3)),
                                     CoefFn::power(Rat(3), Rat(2))};
  const Rat cr(5, 2), cc(-3), co(7, 3);
  const CoefFn eta = CoefFn::linear(Rat(4, 3));

  const auto fail = [&](const Polytope& body, const Tensor<Rat>& expected,
                        const Tensor<Rat>& actual, const std::string& note) {
    Counterexample ce;
    ce.polytope = body;
    ce.expected = expected;
    ce.actual = actual;
    ce.note = note;
    rep.record_failure(std::move(ce));
  };

  for (const Rat& s : s_values) {
    Rat spow_n(1);  // s^n
    for (int k = 0; k < n; ++k) spow_n *= s;
    Rat sp(1);  // s^p
    for (int k = 0; k < p; ++k) sp *= s;

    for (int d = 0; d <= n; ++d) {
      const Polytope body = Polytope::standard_simplex(n, d, s);

      // Facet-normal family: zero below full dimension, constant components
      // at d = n.
      for (const CoefFn& zeta : zetas) {
        ++rep.trials;
        const Tensor<Rat> got = val_sym<Rat>(body, p, zeta);
        Tensor<Rat> expected(n, p);
        if (d == n) {
          const Rat c = zeta(spow_n / nfact) / sp;
          for (std::size_t f = 0; f < expected.size(); ++f) expected[f] = c;
        }
        if (!(got == expected)) fail(body, expected, got, "facet-normal closed form");
        if (opt.mode == Mode::Float)
          track_float(rep, got, val_sym<double>(body, p, zeta), opt, "facet-normal form");
      }

      // Moment cross family.
      {
        ++rep.trials;
        const Tensor<Rat> got = val_cross_moment<Rat>(body, Rat(1));
        Tensor<Rat> expected(n, n - 1);
        if (d == n) {
          const VecT<Rat> ones(n, Rat(1));
          expected = cross_tensor<Rat>(ones);
          expected *= spow_n * s / (nfact * (n + 1));
        }
        if (!(got == expected)) fail(body, expected, got, "moment cross closed form");
        if (opt.mode == Mode::Float)
          track_float(rep, got, val_cross_moment<double>(body, Rat(1)), opt, "moment cross form");
      }

      // Euler-type family: coefficient pattern on every simplex.
      {
        ++rep.trials;
        const Tensor<Rat> got = val_euler<Rat>(body, cr, cc, co, eta);
        Rat coeff = d == 0 ? cr + cc + co : cc + co;
        if (d == n) coeff += eta(spow_n / nfact);
        Tensor<Rat> expected = levi_civita<Rat>(n);
        expected *= coeff;
        if (!(got == expected)) fail(body, expected, got, "Euler-type coefficient pattern");
        if (opt.mode == Mode::Float)
          track_float(rep, got, val_euler<double>(body, cr, cc, co, eta), opt, "Euler-type form");
      }
    }

    // Moment vector of the full-dimensional simplex.
    {
      ++rep.trials;
      const Polytope body = Polytope::standard_simplex(n, n, s);
      const VecQ m = moment_vector<Rat>(body);
      const Rat want = spow_n * s / (nfact * (n + 1));
      bool ok = true;
      for (int j = 0; j < n; ++j) ok = ok && m[j] == want;
      if (!ok) {
        Counterexample ce;
        ce.polytope = body;
        ce.note = "moment vector of the scaled simplex off closed form";
        rep.record_failure(std::move(ce));
      }
      if (opt.mode == Mode::Float) {
        Tensor<Rat> exact(n, 1);
        Tensor<double> approx(n, 1);
        const VecT<double> mf = moment_vector<double>(body);
        for (int j = 0; j < n; ++j) {
          exact.at({j}) = m[j];
          approx.at({j}) = mf[j];
        }
        track_float(rep, exact, approx, opt, "moment vector");
      }

      // Coordinate-facet data: for the facet with primitive normal -e_i the
      // area vector is -s^{n-1}/(n-1)!·e_i, the centroid is (s/n)·Σ_{j≠i}e_j,
      // and their product reproduces the facet moment (s^n/n!)·Σ_{j≠i}e_j.
      const Rat measure = spow_n / s / (nfact / n);  // s^{n-1}/(n-1)!
      for (int i = 0; i < n; ++i) {
        ++rep.trials;
        int found = -1;
        for (int fi = 0; fi < static_cast<int>(body.facets().size()); ++fi) {
          const VecZ& nu = body.facets()[fi].normal;
          bool match = true;
          for (int j = 0; j < n; ++j) match = match && nu[j] == (j == i ? -1 : 0);
          if (match) {
            found = fi;
            break;
          }
        }
        if (found < 0) {
          Counterexample ce;
          ce.polytope = body;
          ce.note = "missing coordinate facet";
          rep.record_failure(std::move(ce));
          continue;
        }
        const FacetGeometry<Rat> g = facet_geometry<Rat>(body, found);
        bool ok = true;
        for (int j = 0; j < n; ++j) {
          const Rat want_area = j == i ? -measure : Rat(0);
          const Rat want_centroid = j == i ? Rat(0) : s / n;
          const Rat want_moment = j == i ? Rat(0) : spow_n / nfact;
          ok = ok && g.area_vector[j] == want_area && g.centroid[j] == want_centroid &&
               g.centroid[j] * measure == want_moment;
        }
        if (!ok) {
          Counterexample ce;
          ce.polytope = body;
          ce.note = "coordinate facet centroid/area data off closed form";
          rep.record_failure(std::move(ce));
        }
      }
    }
  }
  return rep;
}

VerifyReport check_green_minkowski(const Polytope& P, const CheckOptions& opt) {
  VerifyReport rep;
  rep.check = "green_minkowski";
  rep.trials = 1;
  const int n = P.ambient_dim();
  if (P.dim() < n)
    throw std::invalid_argument("check_green_minkowski: requires a full-dimensional polytope");
  Tensor<Rat> acc(n, 2);
  for (int fi = 0; fi < static_cast<int>(P.facets().size()); ++fi) {
    const FacetGeometry<Rat> g = facet_geometry<Rat>(P, fi);
    acc += outer_product(tensor_of_vector<Rat>(g.centroid), tensor_of_vector<Rat>(g.area_vector));
    acc += outer_product(tensor_of_vector<Rat>(g.area_vector), tensor_of_vector<Rat>(g.centroid));
  }
  acc *= Rat(1, 2);
  const Tensor<Rat> expected = identity_tensor(n, volume<Rat>(P));
  if (!(acc == expected)) {
    Counterexample ce;
    ce.polytope = P;
    ce.expected = expected;
    ce.actual = acc;
    ce.note = "symmetrized centroid-area sum != volume · identity";
    rep.record_failure(std::move(ce));
  }
  if (opt.mode == Mode::Float) {
    Tensor<double> accf(n, 2);
    for (int fi = 0; fi < static_cast<int>(P.facets().size()); ++fi) {
      const FacetGeometry<double> g = facet_geometry<double>(P, fi);
      accf +=
          outer_product(tensor_of_vector<double>(g.centroid), tensor_of_vector<double>(g.area_vector));
      accf +=
          outer_product(tensor_of_vector<double>(g.area_vector), tensor_of_vector<double>(g.centroid));
    }
    accf *= 0.5;
    track_float(rep, acc, accf, opt, "facet data sum");
  }
  return rep;
}

VerifyReport check_uniqueness_transfer(const ValuationSpec& a, const ValuationSpec& b,
                                       const std::vector<Polytope>& corpus,
                                       const CheckOptions& opt) {
  VerifyReport rep;
  rep.check = "uniqueness_transfer";
  validate_spec(a);
  validate_spec(b);
  if (a.n != b.n || tensor_order(a) != tensor_order(b))
    throw std::invalid_argument("check_uniqueness_transfer: incompatible specs");
  const int n = a.n;
  const std::vector<Rat> scales = {Rat(1, 2), Rat(1), Rat(2), Rat(3)};

  const auto compare_on = [&](const Polytope& body, const char* where) {
    Tensor<Rat> za(n, 0), zb(n, 0);
    try {
      za = evaluate<Rat>(a, body);
      zb = evaluate<Rat>(b, body);
    } catch (const std::invalid_argument&) {
      return;  // outside the common domain (e.g. origin-membership families)
    }
    ++rep.trials;
    if (!(za == zb)) {
      Counterexample ce;
      ce.polytope = body;
      ce.expected = za;
      ce.actual = zb;
      ce.note = std::string("specs disagree on ") + where;
      rep.record_failure(std::move(ce));
    }
    if (opt.mode == Mode::Float) {
      track_float(rep, za, evaluate<double>(a, body), opt, "first spec");
      track_float(rep, zb, evaluate<double>(b, body), opt, "second spec");
    }
  };

  for (const Rat& s : scales) {
    for (int d = 0; d <= n; ++d) compare_on(Polytope::standard_simplex(n, d, s), "generator");
    for (int d = 1; d <= n; ++d) compare_on(Polytope::basis_simplex(n, d, s), "generator");
  }
  for (const Polytope& body : corpus) compare_on(body, "corpus");
  return rep;
}

VerifyReport check_flat_vanishing(const Polytope& flat, int p, const CheckOptions& opt) {
  VerifyReport rep;
  rep.check = "flat_vanishing";
  const int n = flat.ambient_dim();
  if (flat.dim() != n - 1)
    throw std::invalid_argument("check_flat_vanishing: requires dimension n-1");
  const std::vector<CoefFn> zetas = {CoefFn::linear(Rat(1)), CoefFn::linear(Rat(-7, 2)),
                                     CoefFn::power(Rat(2), Rat(3))};
  for (const CoefFn& zeta : zetas) {
    ++rep.trials;
    const Tensor<Rat> got = val_sym<Rat>(flat, p, zeta);
    if (!got.is_zero()) {
      Counterexample ce;
      ce.polytope = flat;
      ce.actual = got;
      ce.note = "facet-normal family nonzero on a lower-dimensional body";
      rep.record_failure(std::move(ce));
    }
    if (opt.mode == Mode::Float)
      track_float(rep, got, val_sym<double>(flat, p, zeta), opt, "flat facet-normal");
  }
  for (int r = 0; r < n; ++r) {
    ++rep.trials;
    const Tensor<Rat> got = val_facet_cross<Rat>(flat, FacetScope::OriginAvoiding, r, Rat(1));
    if (!got.is_zero()) {
      Counterexample ce;
      ce.polytope = flat;
      ce.actual = got;
      ce.note = "origin-avoiding facet cross nonzero on a lower-dimensional body";
      rep.record_failure(std::move(ce));
    }
    if (opt.mode == Mode::Float)
      track_float(rep, got, val_facet_cross<double>(flat, FacetScope::OriginAvoiding, r, Rat(1)),
                  opt, "flat facet cross");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Dictionary specs
// ---------------------------------------------------------------------------

ValuationSpec boundary_walk_spec(const std::array<Rat, 5>& d, const CoefFn& zeta_walk,
                                 const CoefFn& eta_walk) {
  ValuationSpec s;
  s.family = "boundary_walk";
  s.n = 2;
  for (int i = 0; i < 5; ++i) s.params["d" + std::to_string(i)] = d[i];
  s.zeta = zeta_walk;
  s.eta = eta_walk;
  return s;
}

namespace {

CoefFn doubled(const CoefFn& f) {
  switch (f.kind()) {
    case CoefFn::Kind::Linear:
      return CoefFn::linear(2 * f.coefficient());
    case CoefFn::Kind::Power:
      return CoefFn::power(2 * f.coefficient(), f.exponent());
    case CoefFn::Kind::Table: {
      std::map<Rat, Rat, RatLess> v;
      for (const auto& [t, y] : f.values()) v[t] = 2 * y;
      return CoefFn::table(std::move(v));
    }
  }
  throw std::logic_error("doubled: unknown coefficient kind");
}

}  // namespace

ValuationSpec classified_equivalent(const ValuationSpec& walk) {
  if (walk.family != "boundary_walk")
    throw std::invalid_argument("classified_equivalent: input must be a boundary-walk spec");
  const Rat d0 = walk.param("d0"), d1 = walk.param("d1"), d2 = walk.param("d2"),
            d3 = walk.param("d3"), d4 = walk.param("d4");

  CoefFn eta;
  if (walk.eta.is_linear()) {
    eta = CoefFn::linear(2 * walk.eta.coefficient() + 2 * d4);
  } else if (walk.eta.kind() == CoefFn::Kind::Table) {
    std::map<Rat, Rat, RatLess> v;
    for (const auto& [t, y] : walk.eta.values()) {
      Rat val = 2 * y + 2 * d4 * t;
      v[t] = val;
    }
    eta = CoefFn::table(std::move(v));
  } else {
    throw std::invalid_argument(
        "classified_equivalent: a power-law edge coefficient plus the linear correction is not "
        "one representable coefficient function");
  }

  ValuationSpec sym = make_sym(2, 2, doubled(walk.zeta));
  ValuationSpec fc = make_facet_cross(2, FacetScope::OriginAvoiding, 0, -2 * d4);
  ValuationSpec eu = make_euler(2, d2 - d0, -d2, Rat(0), eta);
  ValuationSpec pm;
  pm.family = "planar_moment";
  pm.n = 2;
  pm.params["a"] = d3;
  ValuationSpec th;
  th.family = "theta";
  th.n = 2;
  th.p = 2;
  th.params["b"] = d1;
  ValuationSpec comp;
  comp.family = "composite";
  comp.n = 2;
  comp.terms = {sym, fc, eu, pm, th};
  return comp;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace {

CheckOptions options_of(const SuiteConfig& cfg) {
  CheckOptions opt;
  opt.mode = cfg.mode;
  opt.tolerance = cfg.tolerance;
  return opt;
}

std::string suite_report_name(const std::string& suite, const std::string& tag, int n) {
  std::ostringstream os;
  os << suite << "/" << tag << "/n=" << n;
  return os.str();
}

std::vector<VerifyReport> suite_additivity(const SuiteConfig& cfg) {
  const CheckOptions opt = options_of(cfg);
  const int trials = cfg.trials > 0 ? cfg.trials : 100;
  std::vector<VerifyReport> out;
  for (int n : cfg.dims) {
    int case_idx = 0;
    for (const SuiteCase& c : family_cases(n)) {
      VerifyReport rep;
      rep.check = suite_report_name("additivity", c.tag, n);
      const std::uint64_t stream = fold(fold(cfg.seed, 0xADD), fold(n, case_idx++));
      for (int t = 0; t < trials; ++t) {
        Rng rng = trial_rng(stream, t);
        const Polytope P = case_polytope(c, rng, n);
        const Hyperplane H = random_hyperplane(rng, n, 8, 4, c.origin_domain);
        rep.absorb(check_additivity(c.spec, P, H, opt));
      }
      out.push_back(std::move(rep));
    }
  }
  return out;
}

std::vector<VerifyReport> suite_contravariance(const SuiteConfig& cfg) {
  const CheckOptions opt = options_of(cfg);
  const int trials = cfg.trials > 0 ? cfg.trials : 50;
  std::vector<VerifyReport> out;
  for (int n : cfg.dims) {
    int case_idx = 0;
    for (const SuiteCase& c : family_cases(n)) {
      VerifyReport rep;
      rep.check = suite_report_name("contravariance", c.tag, n);
      const bool sl_only = grading_parity(c.spec) < 0;
      const std::uint64_t stream = fold(fold(cfg.seed, 0xC0B), fold(n, case_idx++));
      for (int t = 0; t < trials; ++t) {
        Rng rng = trial_rng(stream, t);
        const Polytope P = case_polytope(c, rng, n);
        const int target_det = sl_only ? 1 : (t % 2 == 0 ? 1 : -1);
        const Matrix phi = random_unimodular(rng, n, target_det);
        rep.absorb(check_contravariance(c.spec, P, phi, opt));
      }
      out.push_back(std::move(rep));
    }
  }
  return out;
}

std::vector<VerifyReport> suite_grading(const SuiteConfig& cfg) {
  const CheckOptions opt = options_of(cfg);
  const int trials = cfg.trials > 0 ? cfg.trials : 50;
  std::vector<VerifyReport> out;
  for (int n : cfg.dims) {
    int case_idx = 0;
    for (const SuiteCase& c : family_cases(n)) {
      ++case_idx;
      if (grading_parity(c.spec) < 0) continue;  // no two-sided grading to test
      VerifyReport rep;
      rep.check = suite_report_name("grading", c.tag, n);
      const std::uint64_t stream = fold(fold(cfg.seed, 0x64AD), fold(n, case_idx));
      for (int t = 0; t < trials; ++t) {
        Rng rng = trial_rng(stream, t);
        const Polytope P = case_polytope(c, rng, n);
        rep.absorb(check_grading(c.spec, P, opt));
      }
      out.push_back(std::move(rep));
    }
  }
  return out;
}

std::vector<VerifyReport> suite_mr(const SuiteConfig& cfg) {
  const CheckOptions opt = options_of(cfg);
  const int trials = cfg.trials > 0 ? cfg.trials : 20;
  std::vector<VerifyReport> out;
  for (int n : cfg.dims) {
    VerifyReport rep1, rep2;
    rep1.check = suite_report_name("mr", "facet_sum", n);
    rep2.check = suite_report_name("mr", "shift_sum", n);
    const InstanceSet inst = random_instances(fold(cfg.seed, fold(0x3124, n)), n, trials, 8, 4);
    for (const Polytope& P : inst.polytopes) {
      rep1.absorb(check_mr(P, MrKind::MR1, opt));
      rep2.absorb(check_mr(P, MrKind::MR2, opt));
    }
    for (const Rat& s : {Rat(1, 2), Rat(1), Rat(2)}) {
      rep2.absorb(check_mr(Polytope::standard_simplex(n, n, s), MrKind::MR2, opt));
    }
    out.push_back(std::move(rep1));
    out.push_back(std::move(rep2));
  }
  return out;
}

std::vector<VerifyReport> suite_simplex(const SuiteConfig& cfg) {
  const CheckOptions opt = options_of(cfg);
  const std::vector<Rat> scales = {Rat(1, 2), Rat(1), Rat(2), Rat(3)};
  std::vector<VerifyReport> out;
  for (int n : cfg.dims) {
    VerifyReport rep;
    rep.check = suite_report_name("simplex", "closed_forms", n);
    for (int p = 0; p <= n; ++p) rep.absorb(check_simplex_forms(n, p, scales, opt));
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<VerifyReport> suite_green_minkowski(const SuiteConfig& cfg) {
  const CheckOptions opt = options_of(cfg);
  const int trials = cfg.trials > 0 ? cfg.trials : 20;
  std::vector<VerifyReport> out;
  for (int n : cfg.dims) {
    VerifyReport rep;
    rep.check = suite_report_name("green-minkowski", "facet_identity", n);
    const InstanceSet inst = random_instances(fold(cfg.seed, fold(0x63EE, n)), n, trials, 8, 4);
    for (const Polytope& P : inst.polytopes) rep.absorb(check_green_minkowski(P, opt));
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<VerifyReport> suite_planar_equivalence(const SuiteConfig& cfg) {
  const CheckOptions opt = options_of(cfg);
  const int trials = cfg.trials > 0 ? cfg.trials : 100;
  const std::array<Rat, 5> d{Rat(2, 3), Rat(5, 7), Rat(-3, 2), Rat(4, 5), Rat(7, 11)};
  const ValuationSpec walk =
      boundary_walk_spec(d, CoefFn::linear(Rat(11, 5)), CoefFn::linear(Rat(-2, 9)));
  const ValuationSpec classified = classified_equivalent(walk);
  std::vector<Polytope> corpus;
  corpus.reserve(trials);
  const std::uint64_t stream = fold(cfg.seed, 0x97AA);
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(stream, t);
    corpus.push_back(random_planar_origin_polytope(rng, 8, 4));
  }
  VerifyReport rep = check_uniqueness_transfer(walk, classified, corpus, opt);
  rep.check = "planar-equivalence/dictionary/n=2";
  return {rep};
}

}  // namespace

std::vector<VerifyReport> run_suite(const std::string& suite, const SuiteConfig& cfg) {
  if (suite == "additivity") return suite_additivity(cfg);
  if (suite == "contravariance") return suite_contravariance(cfg);
  if (suite == "grading") return suite_grading(cfg);
  if (suite == "mr") return suite_mr(cfg);
  if (suite == "simplex") return suite_simplex(cfg);
  if (suite == "green-minkowski") return suite_green_minkowski(cfg);
  if (suite == "planar-equivalence") return suite_planar_equivalence(cfg);
  if (suite == "all") {
    std::vector<VerifyReport> out;
    for (const char* name : {"additivity", "contravariance", "grading", "mr", "simplex",
                             "green-minkowski", "planar-equivalence"}) {
      std::vector<VerifyReport> part = run_suite(name, cfg);
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    return out;
  }
  throw std::invalid_argument("unknown verification suite: " + suite);
}

}  // namespace tenval
