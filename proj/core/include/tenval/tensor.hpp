#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "tenval/rational.hpp"

namespace tenval {

std::size_t ipow(std::size_t base, std::size_t exp);

// Permutation of the slot set {0, ..., p-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int p);
  // The cycle (0 1 2 ... p-1) raised to the r-th power: i -> i + r (mod p).
  static Permutation circular_shift(int p, int r);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  Permutation inverse() const;
  // (a.compose(b))(i) = a(b(i))
  Permutation compose(const Permutation& other) const;
  int sign() const;
  bool operator==(const Permutation& other) const { return images_ == other.images_; }

 private:
  std::vector<int> images_;
};

// Square matrix with exact rational entries (group elements, normal frames).
class Matrix {
 public:
  Matrix(int n, VecQ entries);  // row-major, n*n entries
  static Matrix identity(int n);
  static Matrix diagonal(const VecQ& d);
  static Matrix zero(int n);

  int n() const { return n_; }
  const Rat& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  Rat& at(int i, int j) {
    det_.reset();
    return e_[static_cast<std::size_t>(i) * n_ + j];
  }

  Matrix transpose() const;
  Matrix multiply(const Matrix& other) const;
  VecQ apply(const VecQ& v) const;
  const Rat& determinant() const;  // cached; exact division-free elimination
  Matrix inverse() const;          // throws std::domain_error if singular
  Matrix inverse_transpose() const;
  bool operator==(const Matrix& other) const { return n_ == other.n_ && e_ == other.e_; }

 private:
  int n_;
  VecQ e_;
  mutable std::optional<Rat> det_;
};

// Determinant of n column vectors written next to each other.
Rat det_columns(const std::vector<VecQ>& columns);

// The vector v with <v, x> = det(w_1, ..., w_{n-1}, x) for all x; orthogonal
// to every w_i. Used to produce hyperplane normals.
VecQ normal_vector(const std::vector<VecQ>& w);

// Dense tensor of order p on R^n, components indexed row-major by
// (alpha_1, ..., alpha_p) with alpha_i in {0, ..., n-1}.
template <class S>
class Tensor {
 public:
  Tensor(int n, int p);  // zero tensor
  Tensor(int n, int p, std::vector<S> components);

  int n() const { return n_; }
  int order() const { return p_; }
  std::size_t size() const { return c_.size(); }

  const S& operator[](std::size_t flat) const { return c_[flat]; }
  S& operator[](std::size_t flat) { return c_[flat]; }
  const S& at(const std::vector<int>& idx) const { return c_[flat_index(idx)]; }
  S& at(const std::vector<int>& idx) { return c_[flat_index(idx)]; }
  const S& at(std::initializer_list<int> idx) const { return at(std::vector<int>(idx)); }
  S& at(std::initializer_list<int> idx) { return at(std::vector<int>(idx)); }
  const std::vector<S>& components() const { return c_; }

  std::size_t flat_index(const std::vector<int>& idx) const;
  std::vector<int> multi_index(std::size_t flat) const;

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(const S& scalar);
  Tensor operator+(const Tensor& other) const;
  Tensor operator-(const Tensor& other) const;
  Tensor operator-() const;
  bool operator==(const Tensor& other) const;
  bool is_zero() const;

 private:
  int n_;
  int p_;
  std::vector<S> c_;
};

template <class S>
Tensor<S> operator*(const S& scalar, const Tensor<S>& t);

// T (x) U: slots of T first, then slots of U.
template <class S>
Tensor<S> outer_product(const Tensor<S>& t, const Tensor<S>& u);

// Order-1 tensor carrying the coordinates of v.
template <class S>
Tensor<S> tensor_of_vector(const VecT<S>& v);

// v^{(x) p}; p = 0 yields the scalar 1.
template <class S>
Tensor<S> tensor_power(const VecT<S>& v, int p);

// (phi . T)(x_1, ..., x_p) = T(phi^t x_1, ..., phi^t x_p), i.e. componentwise
// (phi . T)_{beta} = sum_alpha T_alpha prod_i phi_{beta_i alpha_i}.
template <class S>
Tensor<S> gl_action(const Matrix& phi, const Tensor<S>& t);

// (tau T)(y_1, ..., y_p) = T(y_{tau^{-1}(1)}, ..., y_{tau^{-1}(p)}).
template <class S>
Tensor<S> permute_action(const Permutation& tau, const Tensor<S>& t);

// Full evaluation on p vectors.
template <class S>
S evaluate(const Tensor<S>& t, const std::vector<VecT<S>>& args);

// The alternating order-n tensor with eps(x_1, ..., x_n) = det(x_1, ..., x_n).
template <class S>
Tensor<S> levi_civita(int n);

// y^x of order n-1: (y^x)(x_1, ..., x_{n-1}) = det(x_1, ..., x_{n-1}, y).
template <class S>
Tensor<S> cross_tensor(const VecT<S>& y);

extern template class Tensor<Rat>;
extern template class Tensor<double>;

}  // namespace tenval
