#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tenval/polytope.hpp"
#include "tenval/rational.hpp"
#include "tenval/tensor.hpp"
#include "tenval/valuations.hpp"

namespace tenval {

// Deterministic 64-bit generator (splitmix64).  Every randomized trial
// derives its own Rng from (seed, trial index), so results are independent
// of scheduling and of how many trials run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform integer in [lo, hi], inclusive.
  int uniform(int lo, int hi);
  // Rational with |numerator| <= numerator_bound and 1 <= denominator
  // <= denominator_bound (canonicalized, so the reduced parts can be
  // smaller).
  Rat rational(int numerator_bound, int denominator_bound);
  // Nonzero variant of the above.
  Rat nonzero_rational(int numerator_bound, int denominator_bound);

 private:
  std::uint64_t state_;
};

// The generator for one trial of one seeded stream.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

enum class Mode { Exact, Float };

struct CheckOptions {
  Mode mode = Mode::Exact;
  double tolerance = 1e-9;  // float-mode relative tolerance
};

// First failing instance of a check, replayable: re-running the check on the
// stored polytope/transform/cut reproduces the failure bit-exactly.
struct Counterexample {
  std::optional<Polytope> polytope;
  std::optional<Matrix> transform;
  std::optional<Hyperplane> cut;
  std::optional<Tensor<Rat>> expected;
  std::optional<Tensor<Rat>> actual;
  std::string note;
};

struct VerifyReport {
  std::string check;
  int trials = 0;
  int failures = 0;
  // Worst componentwise relative float-vs-exact error seen; only set when
  // the check ran in float mode.
  std::optional<double> max_rel_err;
  std::optional<Counterexample> counterexample;

  bool passed() const { return failures == 0; }
  void record_failure(Counterexample ce);
  void absorb(const VerifyReport& other);
};

// Componentwise relative error of a floating tensor against the exact one:
// |E_i - F_i| / |E_i|, with zero components measured against
// max(1, max_j |E_j|).
double relative_error(const Tensor<Rat>& exact, const Tensor<double>& approx);

// ---------------------------------------------------------------------------
// Random instance streams
// ---------------------------------------------------------------------------

struct InstanceSet {
  std::vector<Polytope> polytopes;      // full-dimensional
  std::vector<Matrix> transforms;       // unimodular, det alternating +1/-1
  std::vector<Hyperplane> cuts;
};

// Deterministic stream of `count` instances: full-dimensional polytopes
// (hulls of up to 12 rational points, numerators bounded by
// numerator_bound, denominators by denominator_bound), unimodular integer
// matrices (products of up to 6 elementary shears and a signed permutation),
// and hyperplanes through random rational points with small integer normals.
InstanceSet random_instances(std::uint64_t seed, int n, int count, int numerator_bound,
                             int denominator_bound);

// A random polytope of dimension exactly n-1: a full-dimensional body built
// in the first n-1 coordinates, then pushed through a random unimodular map
// and a rational translation.
Polytope random_flat_polytope(Rng& rng, int n, int numerator_bound, int denominator_bound);

// A random planar polytope containing the origin, cycling through every
// stratum: {o}, segments with o an endpoint or interior, and polygons with o
// a vertex, inside an edge, or interior.
Polytope random_planar_origin_polytope(Rng& rng, int numerator_bound, int denominator_bound);

// A random unimodular integer matrix with the requested determinant (+1/-1).
Matrix random_unimodular(Rng& rng, int n, int target_det);

// A random hyperplane; when through_origin is set the offset is zero, so the
// cut preserves origin membership on both sides.
Hyperplane random_hyperplane(Rng& rng, int n, int numerator_bound, int denominator_bound,
                             bool through_origin);

// ---------------------------------------------------------------------------
// Identity checks (single instance)
// ---------------------------------------------------------------------------

// Z(P cut-) + Z(P cut+) = Z(P) + Z(P on-cut).
VerifyReport check_additivity(const ValuationSpec& spec, const Polytope& P, const Hyperplane& H,
                              const CheckOptions& opt = {});

// Z(phi P) = (det phi)^delta phi^{-t}·Z(P) with the family's declared delta.
// Specs graded -1 (only SL-contravariant) require det phi = +1.
VerifyReport check_contravariance(const ValuationSpec& spec, const Polytope& P, const Matrix& phi,
                                  const CheckOptions& opt = {});

// (Z+, Z-) with Z± = (Z(P) ± theta^t·Z(theta P))/2, theta = diag(1,..,1,-1).
// Verifies the same decomposition against a second reflection and throws
// std::logic_error if the two disagree (the decomposition must not depend on
// the choice).
std::pair<Tensor<Rat>, Tensor<Rat>> decompose_pm(const ValuationSpec& spec, const Polytope& P);

// The ± decomposition kills the off-parity part: Z- = 0 for parity-0
// families, Z+ = 0 for parity-1 families.
VerifyReport check_grading(const ValuationSpec& spec, const Polytope& P,
                           const CheckOptions& opt = {});

enum class MrKind { MR1, MR2 };

// MR1: the facet cross sum over all facets equals volume times the
// Levi-Civita tensor.  MR2: the signed slot-shift sum over the facets whose
// hyperplanes pass through the origin vanishes.
VerifyReport check_mr(const Polytope& P, MrKind kind, const CheckOptions& opt = {});

// Closed forms on the scaled simplices sT^d, d = 0..n: the facet-normal
// family, the moment cross family, the moment vector and coordinate-facet
// data, and the Euler-type coefficient pattern on lower-dimensional
// simplices.
VerifyReport check_simplex_forms(int n, int p, const std::vector<Rat>& s_values,
                                 const CheckOptions& opt = {});

// Sum over all facets of centroid ⊙ area-vector equals volume times the
// identity (the symmetrized first-order Minkowski identity).
VerifyReport check_green_minkowski(const Polytope& P, const CheckOptions& opt = {});

// If two specs agree on the generating simplices (sT^d and the scaled basis
// simplices, sampled over s), they must agree on every corpus polytope.
VerifyReport check_uniqueness_transfer(const ValuationSpec& a, const ValuationSpec& b,
                                       const std::vector<Polytope>& corpus,
                                       const CheckOptions& opt = {});

// val_sym and origin-avoiding val_facet_cross vanish on bodies of dimension
// n-1 (two-sided facet records cancel through the odd coefficient
// extension).
VerifyReport check_flat_vanishing(const Polytope& flat, int p, const CheckOptions& opt = {});

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

struct SuiteConfig {
  Mode mode = Mode::Exact;
  std::uint64_t seed = 0;
  int trials = 0;  // 0 = per-suite default
  std::vector<int> dims = {2, 3, 4};
  double tolerance = 1e-9;
};

// The planar boundary-walk spec for given constants.
ValuationSpec boundary_walk_spec(const std::array<Rat, 5>& d, const CoefFn& zeta_walk,
                                 const CoefFn& eta_walk);

// The classified-family composite equivalent to a boundary-walk spec under
// the constant dictionary zeta = 2 zeta~, c1 = -2 d4,
// eta(t) = 2 eta~(t) + 2 d4 t, a = d3, b = d1, c0 = -d2, c0' = d2 - d0.
// Requires eta~ linear or tabulated (a power law plus a linear term is not a
// single representable coefficient function).
ValuationSpec classified_equivalent(const ValuationSpec& walk);

// suite ∈ {additivity, contravariance, grading, mr, simplex, green-minkowski,
// planar-equivalence, all}; throws std::invalid_argument otherwise.
std::vector<VerifyReport> run_suite(const std::string& suite, const SuiteConfig& cfg);

}  // namespace tenval
