#include "tenval/tensor.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tenval {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int p = static_cast<int>(images_.size());
  std::vector<bool> seen(p, false);
  for (int v : images_) {
    if (v < 0 || v >= p || seen[v]) throw std::invalid_argument("invalid permutation image list");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int p) {
  std::vector<int> im(p);
  for (int i = 0; i < p; ++i) im[i] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::circular_shift(int p, int r) {
  if (p <= 0) throw std::invalid_argument("circular_shift needs p >= 1");
  std::vector<int> im(p);
  const int rr = ((r % p) + p) % p;
  for (int i = 0; i < p; ++i) im[i] = (i + rr) % p;
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[i] = images_[other.images_[i]];
  return Permutation(std::move(im));
}

int Permutation::sign() const {
  int inversions = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (images_[i] > images_[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(int n, VecQ entries) : n_(n), e_(std::move(entries)) {
  if (n <= 0 || e_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("matrix entry count does not match dimension");
}

Matrix Matrix::identity(int n) {
  Matrix m = zero(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const VecQ& d) {
  Matrix m = zero(static_cast<int>(d.size()));
  for (int i = 0; i < m.n(); ++i) m.at(i, i) = d[i];
  return m;
}

Matrix Matrix::zero(int n) { return Matrix(n, VecQ(static_cast<std::size_t>(n) * n, Rat(0))); }

Matrix Matrix::transpose() const {
  Matrix m = zero(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::multiply(const Matrix& other) const {
  if (n_ != other.n_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix m = zero(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if (sign(at(i, k)) == 0) continue;
      for (int j = 0; j < n_; ++j) m.at(i, j) += at(i, k) * other.at(k, j);
    }
  return m;
}

VecQ Matrix::apply(const VecQ& v) const {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("vector dimension mismatch");
  VecQ out(n_, Rat(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

namespace {

// Fraction-free (Bareiss) determinant of an integer matrix; all interior
// divisions are exact.
Int bareiss_det(std::vector<VecZ> a) {
  const int n = static_cast<int>(a.size());
  int sgn = 1;
  Int prev(1);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (sign(a[r][k]) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Int(0);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sgn = -sgn;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sgn > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

}  // namespace

const Rat& Matrix::determinant() const {
  if (det_) return *det_;
  // Clear denominators row by row, then run the integer algorithm.
  std::vector<VecZ> a(n_, VecZ(n_));
  Int scale(1);
  for (int i = 0; i < n_; ++i) {
    Int l(1);
    for (int j = 0; j < n_; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < n_; ++j) {
      Rat scaled = at(i, j) * Rat(l);
      a[i][j] = scaled.get_num();  // denominator is 1 after scaling
    }
    scale *= l;
  }
  Rat d(bareiss_det(std::move(a)));
  d /= Rat(scale);
  d.canonicalize();
  det_ = std::move(d);
  return *det_;
}

Matrix Matrix::inverse() const {
  // Gauss-Jordan elimination over the rationals.
  Matrix a = *this;
  Matrix inv = identity(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r)
      if (sign(a.at(r, col)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("matrix is singular");
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) {
        std::swap(a.at(col, j), a.at(pivot, j));
        std::swap(inv.at(col, j), inv.at(pivot, j));
      }
    }
    const Rat p = a.at(col, col);
    for (int j = 0; j < n_; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col || sign(a.at(r, col)) == 0) continue;
      const Rat f = a.at(r, col);
      for (int j = 0; j < n_; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Matrix Matrix::inverse_transpose() const { return inverse().transpose(); }

Rat det_columns(const std::vector<VecQ>& columns) {
  const int n = static_cast<int>(columns.size());
  VecQ entries(static_cast<std::size_t>(n) * n, Rat(0));
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(columns[j].size()) != n)
      throw std::invalid_argument("det_columns: column dimension mismatch");
    for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i) * n + j] = columns[j][i];
  }
  return Matrix(n, std::move(entries)).determinant();
}

VecQ normal_vector(const std::vector<VecQ>& w) {
  if (w.empty()) throw std::invalid_argument("normal_vector needs n >= 2");
  const int n = static_cast<int>(w.size()) + 1;
  VecQ v(n, Rat(0));
  std::vector<VecQ> cols = w;
  cols.emplace_back(n, Rat(0));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) cols.back()[i] = (i == j) ? 1 : 0;
    v[j] = det_columns(cols);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Tensor

namespace {

std::size_t checked_tensor_size(int n, int p) {
  if (n <= 0 || p < 0) throw std::invalid_argument("tensor needs n >= 1, p >= 0");
  return ipow(static_cast<std::size_t>(n), static_cast<std::size_t>(p));
}

}  // namespace

template <class S>
Tensor<S>::Tensor(int n, int p) : n_(n), p_(p), c_(checked_tensor_size(n, p), S(0)) {}

template <class S>
Tensor<S>::Tensor(int n, int p, std::vector<S> components) : n_(n), p_(p), c_(std::move(components)) {
  if (c_.size() != checked_tensor_size(n, p)) throw std::invalid_argument("tensor component count mismatch");
}

template <class S>
std::size_t Tensor<S>::flat_index(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != p_) throw std::invalid_argument("multi-index length mismatch");
  std::size_t f = 0;
  for (int i : idx) {
    if (i < 0 || i >= n_) throw std::out_of_range("multi-index entry out of range");
    f = f * n_ + static_cast<std::size_t>(i);
  }
  return f;
}

template <class S>
std::vector<int> Tensor<S>::multi_index(std::size_t flat) const {
  std::vector<int> idx(p_, 0);
  for (int i = p_ - 1; i >= 0; --i) {
    idx[i] = static_cast<int>(flat % n_);
    flat /= n_;
  }
  return idx;
}

template <class S>
Tensor<S>& Tensor<S>::operator+=(const Tensor& other) {
  if (n_ != other.n_ || p_ != other.p_) throw std::invalid_argument("tensor shape mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

template <class S>
Tensor<S>& Tensor<S>::operator-=(const Tensor& other) {
  if (n_ != other.n_ || p_ != other.p_) throw std::invalid_argument("tensor shape mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
  return *this;
}

template <class S>
Tensor<S>& Tensor<S>::operator*=(const S& scalar) {
  for (S& x : c_) x *= scalar;
  return *this;
}

template <class S>
Tensor<S> Tensor<S>::operator+(const Tensor& other) const {
  Tensor out = *this;
  out += other;
  return out;
}

template <class S>
Tensor<S> Tensor<S>::operator-(const Tensor& other) const {
  Tensor out = *this;
  out -= other;
  return out;
}

template <class S>
Tensor<S> Tensor<S>::operator-() const {
  Tensor out = *this;
  out *= S(-1);
  return out;
}

template <class S>
bool Tensor<S>::operator==(const Tensor& other) const {
  return n_ == other.n_ && p_ == other.p_ && c_ == other.c_;
}

template <class S>
bool Tensor<S>::is_zero() const {
  for (const S& x : c_)
    if (!(x == S(0))) return false;
  return true;
}

template <class S>
Tensor<S> operator*(const S& scalar, const Tensor<S>& t) {
  Tensor<S> out = t;
  out *= scalar;
  return out;
}

template <class S>
Tensor<S> outer_product(const Tensor<S>& t, const Tensor<S>& u) {
  if (t.n() != u.n()) throw std::invalid_argument("outer_product dimension mismatch");
  Tensor<S> out(t.n(), t.order() + u.order());
  const std::size_t us = u.size();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == S(0)) continue;
    for (std::size_t j = 0; j < us; ++j) out[i * us + j] = t[i] * u[j];
  }
  return out;
}

template <class S>
Tensor<S> tensor_of_vector(const VecT<S>& v) {
  Tensor<S> out(static_cast<int>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

template <class S>
Tensor<S> tensor_power(const VecT<S>& v, int p) {
  const int n = static_cast<int>(v.size());
  if (p == 0) {
    Tensor<S> one(n, 0);
    one[0] = S(1);
    return one;
  }
  Tensor<S> out = tensor_of_vector(v);
  for (int k = 1; k < p; ++k) out = outer_product(out, tensor_of_vector(v));
  return out;
}

template <class S>
Tensor<S> gl_action(const Matrix& phi, const Tensor<S>& t) {
  if (phi.n() != t.n()) throw std::invalid_argument("gl_action dimension mismatch");
  const int n = t.n();
  const int p = t.order();
  // Cast the matrix once into the working scalar type.
  std::vector<S> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] = scalar_cast<S>(phi.at(i, j));
  // Contract one slot at a time against the rows of phi.
  Tensor<S> cur = t;
  std::size_t stride = ipow(n, p > 0 ? p - 1 : 0);
  for (int slot = 0; slot < p; ++slot) {
    Tensor<S> next(n, p);
    for (std::size_t f = 0; f < cur.size(); ++f) {
      if (cur[f] == S(0)) continue;
      const int a = static_cast<int>((f / stride) % n);
      const std::size_t base = f - static_cast<std::size_t>(a) * stride;
      for (int b = 0; b < n; ++b) {
        const S& coeff = m[static_cast<std::size_t>(b) * n + a];
        if (coeff == S(0)) continue;
        next[base + static_cast<std::size_t>(b) * stride] += coeff * cur[f];
      }
    }
    cur = std::move(next);
    stride /= n;
  }
  return cur;
}

template <class S>
Tensor<S> permute_action(const Permutation& tau, const Tensor<S>& t) {
  if (tau.size() != t.order()) throw std::invalid_argument("permutation order mismatch");
  const Permutation inv = tau.inverse();
  Tensor<S> out(t.n(), t.order());
  std::vector<int> beta(t.order());
  for (std::size_t f = 0; f < out.size(); ++f) {
    const std::vector<int> alpha = out.multi_index(f);
    for (int i = 0; i < t.order(); ++i) beta[i] = alpha[inv(i)];
    out[f] = t[t.flat_index(beta)];
  }
  return out;
}

template <class S>
S evaluate(const Tensor<S>& t, const std::vector<VecT<S>>& args) {
  if (static_cast<int>(args.size()) != t.order()) throw std::invalid_argument("evaluate: argument count mismatch");
  for (const auto& a : args)
    if (static_cast<int>(a.size()) != t.n()) throw std::invalid_argument("evaluate: argument dimension mismatch");
  S total(0);
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (t[f] == S(0)) continue;
    const std::vector<int> idx = t.multi_index(f);
    S term = t[f];
    for (int i = 0; i < t.order(); ++i) term *= args[i][idx[i]];
    total += term;
  }
  return total;
}

namespace {

// Sign of the sequence as a permutation of {0..n-1}; 0 if any entry repeats.
int sequence_sign(const std::vector<int>& idx) {
  int inversions = 0;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) ++inversions;
    }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

template <class S>
Tensor<S> levi_civita(int n) {
  Tensor<S> out(n, n);
  for (std::size_t f = 0; f < out.size(); ++f) {
    const int s = sequence_sign(out.multi_index(f));
    if (s != 0) out[f] = S(s);
  }
  return out;
}

template <class S>
Tensor<S> cross_tensor(const VecT<S>& y) {
  const int n = static_cast<int>(y.size());
  if (n < 2) throw std::invalid_argument("cross_tensor needs n >= 2");
  Tensor<S> out(n, n - 1);
  std::vector<int> idx(n);
  for (std::size_t f = 0; f < out.size(); ++f) {
    std::vector<int> head = out.multi_index(f);
    // Only multi-indices missing exactly one value contribute.
    std::vector<bool> seen(n, false);
    bool repeat = false;
    for (int v : head) {
      if (seen[v]) {
        repeat = true;
        break;
      }
      seen[v] = true;
    }
    if (repeat) continue;
    int missing = -1;
    for (int v = 0; v < n; ++v)
      if (!seen[v]) {
        missing = v;
        break;
      }
    for (int i = 0; i < n - 1; ++i) idx[i] = head[i];
    idx[n - 1] = missing;
    out[f] = S(sequence_sign(idx)) * y[missing];
  }
  return out;
}

template class Tensor<Rat>;
template class Tensor<double>;

template Tensor<Rat> operator*(const Rat&, const Tensor<Rat>&);
template Tensor<double> operator*(const double&, const Tensor<double>&);
template Tensor<Rat> outer_product(const Tensor<Rat>&, const Tensor<Rat>&);
template Tensor<double> outer_product(const Tensor<double>&, const Tensor<double>&);
template Tensor<Rat> tensor_of_vector(const VecT<Rat>&);
template Tensor<double> tensor_of_vector(const VecT<double>&);
template Tensor<Rat> tensor_power(const VecT<Rat>&, int);
template Tensor<double> tensor_power(const VecT<double>&, int);
template Tensor<Rat> gl_action(const Matrix&, const Tensor<Rat>&);
template Tensor<double> gl_action(const Matrix&, const Tensor<double>&);
template Tensor<Rat> permute_action(const Permutation&, const Tensor<Rat>&);
template Tensor<double> permute_action(const Permutation&, const Tensor<double>&);
template Rat evaluate(const Tensor<Rat>&, const std::vector<VecT<Rat>>&);
template double evaluate(const Tensor<double>&, const std::vector<VecT<double>>&);
template Tensor<Rat> levi_civita(int);
template Tensor<double> levi_civita(int);
template Tensor<Rat> cross_tensor(const VecT<Rat>&);
template Tensor<double> cross_tensor(const VecT<double>&);

}  // namespace tenval
