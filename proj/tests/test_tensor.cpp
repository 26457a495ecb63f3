#include "tenval/tensor.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

namespace tenval {
namespace {

// Small deterministic generator for test inputs.
struct TestRng {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int range(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rat rat() {
    Rat r(range(-8, 8), range(1, 4));
    r.canonicalize();
    return r;
  }
  VecQ vec(int n) {
    VecQ v(n);
    for (int i = 0; i < n; ++i) v[i] = rat();
    return v;
  }
};

// Independent determinant oracle: full permutation expansion.
Rat det_by_permutation_expansion(const Matrix& m) {
  const int n = m.n();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Rat total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rat term(inversions % 2 == 0 ? 1 : -1);
    for (int i = 0; i < n; ++i) term *= m.at(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Matrix random_matrix(TestRng& rng, int n) {
  VecQ e(static_cast<std::size_t>(n) * n);
  for (auto& x : e) x = rng.rat();
  return Matrix(n, std::move(e));
}

VecQ basis_vector(int n, int i) {
  VecQ v(n, Rat(0));
  v[i] = 1;
  return v;
}

TEST(Permutation, IdentityComposeInverseSign) {
  const Permutation id = Permutation::identity(4);
  EXPECT_EQ(id.sign(), 1);
  const Permutation tau({1, 0, 2, 3});  // transposition
  EXPECT_EQ(tau.sign(), -1);
  EXPECT_TRUE(tau.compose(tau) == id);
  EXPECT_TRUE(tau.inverse() == tau);
  const Permutation c = Permutation::circular_shift(4, 1);
  EXPECT_EQ(c(0), 1);
  EXPECT_EQ(c(3), 0);
  EXPECT_TRUE(c.compose(c.inverse()) == id);
  EXPECT_TRUE(Permutation::circular_shift(4, 4) == id);
}

TEST(Permutation, CircularShiftSign) {
  // sgn(sigma^r) = (-1)^{(p-1) r}
  for (int p = 2; p <= 6; ++p) {
    for (int r = 0; r <= p; ++r) {
      const int expected = ((p - 1) * r) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(Permutation::circular_shift(p, r).sign(), expected) << "p=" << p << " r=" << r;
    }
  }
}

TEST(Matrix, DeterminantMatchesPermutationExpansion) {
  TestRng rng{7};
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix m = random_matrix(rng, n);
      EXPECT_EQ(m.determinant(), det_by_permutation_expansion(m)) << "n=" << n << " trial=" << trial;
    }
  }
}

TEST(Matrix, DeterminantKnownValues) {
  EXPECT_EQ(Matrix::identity(4).determinant(), Rat(1));
  EXPECT_EQ(Matrix::diagonal({Rat(2), Rat(1, 2)}).determinant(), Rat(1));
  // Singular: repeated rows.
  Matrix s(3, {Rat(1), Rat(2), Rat(3), Rat(1), Rat(2), Rat(3), Rat(0), Rat(1), Rat(1)});
  EXPECT_EQ(s.determinant(), Rat(0));
}

TEST(Matrix, InverseRoundTrip) {
  TestRng rng{11};
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix m = random_matrix(rng, n);
      if (sign(m.determinant()) == 0) continue;
      EXPECT_TRUE(m.multiply(m.inverse()) == Matrix::identity(n));
      EXPECT_TRUE(m.inverse_transpose() == m.inverse().transpose());
    }
  }
}

TEST(Matrix, DeterminantCacheSurvivesRecompute) {
  Matrix m(2, {Rat(3), Rat(1), Rat(2), Rat(5)});
  const Rat d1 = m.determinant();
  const Rat d2 = m.determinant();
  EXPECT_EQ(d1, d2);
  EXPECT_EQ(d1, Rat(13));
}

TEST(Tensor, OuterProductBasis) {
  // e1 (x) e2 in R^2 has a single nonzero component at (0, 1).
  const Tensor<Rat> t = outer_product(tensor_of_vector(basis_vector(2, 0)), tensor_of_vector(basis_vector(2, 1)));
  EXPECT_EQ(t.at({0, 1}), Rat(1));
  EXPECT_EQ(t.at({0, 0}), Rat(0));
  EXPECT_EQ(t.at({1, 0}), Rat(0));
  EXPECT_EQ(t.at({1, 1}), Rat(0));
}

TEST(Tensor, TensorPowerAllOnes) {
  const Tensor<Rat> t = tensor_power(VecQ{Rat(1), Rat(1)}, 2);
  for (std::size_t f = 0; f < t.size(); ++f) EXPECT_EQ(t[f], Rat(1));
  const Tensor<Rat> scalar = tensor_power(VecQ{Rat(5), Rat(7)}, 0);
  EXPECT_EQ(scalar.order(), 0);
  EXPECT_EQ(scalar[0], Rat(1));
}

TEST(Tensor, GlActionDiagonalOnBasisSquare) {
  const Matrix phi = Matrix::diagonal({Rat(2), Rat(1, 2)});
  const Tensor<Rat> t = tensor_power(basis_vector(2, 0), 2);
  const Tensor<Rat> out = gl_action(phi, t);
  EXPECT_EQ(out.at({0, 0}), Rat(4));
  EXPECT_EQ(out.at({0, 1}), Rat(0));
  EXPECT_EQ(out.at({1, 1}), Rat(0));
}

TEST(Tensor, GlActionMatchesTensorPowerOfImage) {
  // phi . (v^p) = (phi v)^p  (slot-wise contraction against rows).
  TestRng rng{23};
  for (int n = 2; n <= 4; ++n) {
    for (int p = 1; p <= 3; ++p) {
      const Matrix phi = random_matrix(rng, n);
      const VecQ v = rng.vec(n);
      EXPECT_TRUE(gl_action(phi, tensor_power(v, p)) == tensor_power(phi.apply(v), p)) << "n=" << n << " p=" << p;
    }
  }
}

TEST(Tensor, GlActionFunctorial) {
  TestRng rng{31};
  for (int trial = 0; trial < 8; ++trial) {
    const int n = rng.range(2, 3);
    const int p = rng.range(1, 3);
    const Matrix a = random_matrix(rng, n);
    const Matrix b = random_matrix(rng, n);
    Tensor<Rat> t(n, p);
    for (std::size_t f = 0; f < t.size(); ++f) t[f] = rng.rat();
    EXPECT_TRUE(gl_action(a.multiply(b), t) == gl_action(a, gl_action(b, t)));
  }
}

TEST(Tensor, PermuteActionTransposesSlots) {
  TestRng rng{37};
  Tensor<Rat> t(3, 2);
  for (std::size_t f = 0; f < t.size(); ++f) t[f] = rng.rat();
  const Tensor<Rat> swapped = permute_action(Permutation({1, 0}), t);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(swapped.at({i, j}), t.at({j, i}));
}

TEST(Tensor, PermuteActionIsGroupAction) {
  // (sigma tau) T = sigma (tau T) with composition (sigma tau)(i) = sigma(tau(i)).
  TestRng rng{41};
  Tensor<Rat> t(2, 4);
  for (std::size_t f = 0; f < t.size(); ++f) t[f] = rng.rat();
  const Permutation sigma({2, 0, 3, 1});
  const Permutation tau({1, 3, 0, 2});
  EXPECT_TRUE(permute_action(sigma.compose(tau), t) == permute_action(sigma, permute_action(tau, t)));
}

TEST(Tensor, LeviCivitaEvaluatesAsDeterminant) {
  TestRng rng{43};
  for (int n = 2; n <= 4; ++n) {
    const Tensor<Rat> eps = levi_civita<Rat>(n);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<VecQ> args;
      for (int i = 0; i < n; ++i) args.push_back(rng.vec(n));
      EXPECT_EQ(evaluate(eps, args), det_columns(args)) << "n=" << n;
    }
  }
}

TEST(Tensor, LeviCivitaAlternates) {
  const Tensor<Rat> eps = levi_civita<Rat>(3);
  const Permutation tau({1, 0, 2});
  EXPECT_TRUE(permute_action(tau, eps) == -eps);
  const Permutation rot = Permutation::circular_shift(3, 1);
  EXPECT_TRUE(permute_action(rot, eps) == eps);  // even permutation of 3 slots
}

TEST(Tensor, InverseTransposeActionOnLeviCivita) {
  // phi^{-t} . eps = det(phi)^{-1} eps.
  const Tensor<Rat> eps2 = levi_civita<Rat>(2);
  const Matrix shear(2, {Rat(1), Rat(1), Rat(0), Rat(1)});
  EXPECT_TRUE(gl_action(shear.inverse_transpose(), eps2) == eps2);
  const Matrix stretch = Matrix::diagonal({Rat(2), Rat(3)});
  EXPECT_TRUE(gl_action(stretch.inverse_transpose(), eps2) == Rat(1, 6) * eps2);
  TestRng rng{47};
  for (int n = 2; n <= 4; ++n) {
    Matrix phi = random_matrix(rng, n);
    while (sign(phi.determinant()) == 0) phi = random_matrix(rng, n);
    const Tensor<Rat> eps = levi_civita<Rat>(n);
    const Rat inv_det = Rat(1) / phi.determinant();
    EXPECT_TRUE(gl_action(phi.inverse_transpose(), eps) == inv_det * eps);
  }
}

TEST(Tensor, CrossTensorMatchesDeterminantOracle) {
  TestRng rng{53};
  for (int n = 2; n <= 5; ++n) {
    const VecQ y = rng.vec(n);
    const Tensor<Rat> c = cross_tensor(y);
    EXPECT_EQ(c.order(), n - 1);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<VecQ> args;
      for (int i = 0; i < n - 1; ++i) args.push_back(rng.vec(n));
      std::vector<VecQ> cols = args;
      cols.push_back(y);
      EXPECT_EQ(evaluate(c, args), det_columns(cols)) << "n=" << n;
    }
  }
}

TEST(Tensor, CrossTensorPlanarRotation) {
  // In R^2 the cross tensor of y is the clockwise quarter rotation of y.
  const VecQ y{Rat(3), Rat(5)};
  const Tensor<Rat> c = cross_tensor(y);
  EXPECT_EQ(c.at({0}), Rat(5));
  EXPECT_EQ(c.at({1}), Rat(-3));
}

TEST(Tensor, EvaluateReproducesComponents) {
  TestRng rng{59};
  Tensor<Rat> t(3, 3);
  for (std::size_t f = 0; f < t.size(); ++f) t[f] = rng.rat();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const std::vector<VecQ> args{basis_vector(3, a), basis_vector(3, b), basis_vector(3, c)};
        EXPECT_EQ(evaluate(t, args), t.at({a, b, c}));
      }
}

TEST(Tensor, EvaluateMultilinear) {
  TestRng rng{61};
  Tensor<Rat> t(3, 2);
  for (std::size_t f = 0; f < t.size(); ++f) t[f] = rng.rat();
  const VecQ x = rng.vec(3), y = rng.vec(3), z = rng.vec(3);
  const Rat a = rng.rat();
  VecQ combo(3);
  for (int i = 0; i < 3; ++i) combo[i] = a * x[i] + y[i];
  EXPECT_EQ(evaluate(t, {combo, z}), a * evaluate(t, {x, z}) + evaluate(t, {y, z}));
}

TEST(Tensor, ArithmeticAndShapeChecks) {
  Tensor<Rat> a(2, 2), b(2, 2);
  a.at({0, 1}) = Rat(3);
  b.at({0, 1}) = Rat(1, 3);
  EXPECT_EQ((a + b).at({0, 1}), Rat(10, 3));
  EXPECT_EQ((a - b).at({0, 1}), Rat(8, 3));
  EXPECT_TRUE((Rat(0) * a).is_zero());
  Tensor<Rat> c(2, 3);
  EXPECT_THROW(a += c, std::invalid_argument);
  EXPECT_THROW(a.at({0, 2}), std::out_of_range);
  EXPECT_THROW(Tensor<Rat>(0, 1), std::invalid_argument);
}

TEST(Tensor, NormalVectorIsOrthogonal) {
  TestRng rng{67};
  for (int n = 2; n <= 5; ++n) {
    std::vector<VecQ> w;
    for (int i = 0; i + 1 < n; ++i) w.push_back(rng.vec(n));
    const VecQ v = normal_vector(w);
    for (const VecQ& wi : w) {
      Rat dot(0);
      for (int j = 0; j < n; ++j) dot += v[j] * wi[j];
      EXPECT_EQ(dot, Rat(0));
    }
    // <v, x> = det(w_1, ..., w_{n-1}, x) for a random probe x.
    const VecQ x = rng.vec(n);
    std::vector<VecQ> cols = w;
    cols.push_back(x);
    Rat dot(0);
    for (int j = 0; j < n; ++j) dot += v[j] * x[j];
    EXPECT_EQ(dot, det_columns(cols));
  }
}

TEST(Tensor, DoubleInstantiationBasics) {
  const Tensor<double> eps = levi_civita<double>(3);
  const std::vector<std::vector<double>> args{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_DOUBLE_EQ(evaluate(eps, args), 1.0);
  const Tensor<double> p = tensor_power(std::vector<double>{1.5, -2.0}, 2);
  EXPECT_DOUBLE_EQ(p.at({0, 1}), -3.0);
}

}  // namespace
}  // namespace tenval
