#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "antileib/errors.hpp"

namespace antileib {

template <class F>
using Vec = std::vector<typename F::Elem>;

/// Dense row-major matrix over a field F. A plain container; all arithmetic
/// lives in free functions that take the field as an explicit argument.
template <class F>
struct Matrix {
  using Elem = typename F::Elem;

  size_t rows = 0;
  size_t cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(size_t r, size_t c, Elem fill) : rows(r), cols(c), a(r * c, fill) {}

  static Matrix zero(const F& f, size_t r, size_t c) {
    return Matrix(r, c, f.zero());
  }
  static Matrix identity(const F& f, size_t n) {
    Matrix m = zero(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  Elem& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Elem& at(size_t i, size_t j) const { return a[i * cols + j]; }

  Vec<F> row(size_t i) const {
    return Vec<F>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
  }
};

template <class F>
Vec<F> zero_vec(const F& f, size_t n) {
  return Vec<F>(n, f.zero());
}

template <class F>
bool is_zero_vec(const F& f, const Vec<F>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

template <class F>
bool vec_eq(const F& f, const Vec<F>& u, const Vec<F>& v) {
  if (u.size() != v.size()) return false;
  for (size_t i = 0; i < u.size(); ++i)
    if (!f.eq(u[i], v[i])) return false;
  return true;
}

template <class F>
void add_into(const F& f, Vec<F>& acc, const Vec<F>& v) {
  for (size_t i = 0; i < acc.size(); ++i) acc[i] = f.add(acc[i], v[i]);
}

template <class F>
void sub_into(const F& f, Vec<F>& acc, const Vec<F>& v) {
  for (size_t i = 0; i < acc.size(); ++i) acc[i] = f.sub(acc[i], v[i]);
}

template <class F>
void scale_into(const F& f, Vec<F>& v, const typename F::Elem& c) {
  for (auto& x : v) x = f.mul(x, c);
}

template <class F>
void axpy_into(const F& f, Vec<F>& acc, const typename F::Elem& c,
               const Vec<F>& v) {
  for (size_t i = 0; i < acc.size(); ++i)
    acc[i] = f.add(acc[i], f.mul(c, v[i]));
}

/// out := m * v. out may not alias v.
template <class F>
void matvec_into(const F& f, const Matrix<F>& m, const Vec<F>& v, Vec<F>& out) {
  if (m.cols != v.size()) throw value_error("matvec dimension mismatch");
  out.assign(m.rows, f.zero());
  for (size_t i = 0; i < m.rows; ++i) {
    auto acc = f.zero();
    for (size_t j = 0; j < m.cols; ++j)
      acc = f.add(acc, f.mul(m.at(i, j), v[j]));
    out[i] = acc;
  }
}

template <class F>
Vec<F> matvec(const F& f, const Matrix<F>& m, const Vec<F>& v) {
  Vec<F> out;
  matvec_into(f, m, v, out);
  return out;
}

template <class F>
Matrix<F> matmul(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  if (x.cols != y.rows) throw value_error("matmul dimension mismatch");
  Matrix<F> out = Matrix<F>::zero(f, x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      const auto& c = x.at(i, k);
      if (f.is_zero(c)) continue;
      for (size_t j = 0; j < y.cols; ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(c, y.at(k, j)));
    }
  return out;
}

template <class F>
Matrix<F> mat_add(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw value_error("matrix add dimension mismatch");
  Matrix<F> out = x;
  for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = f.add(out.a[i], y.a[i]);
  return out;
}

template <class F>
Matrix<F> mat_sub(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw value_error("matrix sub dimension mismatch");
  Matrix<F> out = x;
  for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = f.sub(out.a[i], y.a[i]);
  return out;
}

template <class F>
Matrix<F> mat_neg(const F& f, const Matrix<F>& x) {
  Matrix<F> out = x;
  for (auto& e : out.a) e = f.neg(e);
  return out;
}

template <class F>
Matrix<F> transpose(const F&, const Matrix<F>& m) {
  Matrix<F> out;
  out.rows = m.cols;
  out.cols = m.rows;
  out.a.resize(m.a.size(), m.a.empty() ? typename F::Elem{} : m.a[0]);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

template <class F>
bool mat_eq(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!f.eq(x.a[i], y.a[i])) return false;
  return true;
}

template <class F>
bool mat_is_zero(const F& f, const Matrix<F>& x) {
  for (const auto& e : x.a)
    if (!f.is_zero(e)) return false;
  return true;
}

/// In-place reduced row echelon form: pivots scaled to 1, pivot columns
/// cleared above and below, zero rows dropped. Returns the pivot columns in
/// increasing order; on return m.rows == rank.
template <class F>
std::vector<size_t> rref_in_place(const F& f, Matrix<F>& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t sel = r;
    while (sel < m.rows && f.is_zero(m.at(sel, c))) ++sel;
    if (sel == m.rows) continue;
    if (sel != r)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    auto piv_inv = f.inv(m.at(r, c));
    for (size_t j = c; j < m.cols; ++j)
      m.at(r, j) = f.mul(m.at(r, j), piv_inv);
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      auto factor = m.at(i, c);
      for (size_t j = c; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  m.a.resize(r * m.cols);
  m.rows = r;
  return pivots;
}

/// Subspace of F^n held as a canonical reduced-echelon basis, so two subspaces
/// are equal iff their stored bases are elementwise equal.
template <class F>
class Subspace {
public:
  Subspace(const F& f, size_t ambient_dim,
           const std::vector<Vec<F>>& spanning_vectors)
      : ambient_(ambient_dim), basis_(Matrix<F>::zero(f, 0, ambient_dim)) {
    Matrix<F> m = Matrix<F>::zero(f, spanning_vectors.size(), ambient_dim);
    for (size_t i = 0; i < spanning_vectors.size(); ++i) {
      if (spanning_vectors[i].size() != ambient_dim)
        throw value_error("spanning vector has wrong length");
      for (size_t j = 0; j < ambient_dim; ++j)
        m.at(i, j) = spanning_vectors[i][j];
    }
    pivots_ = rref_in_place(f, m);
    basis_ = std::move(m);
  }

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows; }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  /// Subtracts the projection onto the subspace along pivot coordinates;
  /// the result is zero iff v lies in the subspace.
  Vec<F> reduce(const F& f, const Vec<F>& v) const {
    if (v.size() != ambient_) throw value_error("reduce dimension mismatch");
    Vec<F> r = v;
    reduce_in_place(f, r);
    return r;
  }

  void reduce_in_place(const F& f, Vec<F>& r) const {
    for (size_t i = 0; i < basis_.rows; ++i) {
      const auto& c = r[pivots_[i]];
      if (f.is_zero(c)) continue;
      auto factor = c;
      for (size_t j = 0; j < ambient_; ++j)
        r[j] = f.sub(r[j], f.mul(factor, basis_.at(i, j)));
    }
  }

  bool contains(const F& f, const Vec<F>& v) const {
    return is_zero_vec(f, reduce(f, v));
  }

  bool operator_eq(const F& f, const Subspace& o) const {
    return ambient_ == o.ambient_ && mat_eq(f, basis_, o.basis_);
  }

private:
  size_t ambient_;
  Matrix<F> basis_;
  std::vector<size_t> pivots_;
};

/// Solves m * x = rhs; returns false when the system is inconsistent. When
/// the solution is not unique the free variables are set to zero.
template <class F>
bool solve_linear(const F& f, const Matrix<F>& m, const Vec<F>& rhs,
                  Vec<F>& out) {
  if (m.rows != rhs.size()) throw value_error("solve dimension mismatch");
  Matrix<F> aug = Matrix<F>::zero(f, m.rows, m.cols + 1);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = rhs[i];
  }
  auto pivots = rref_in_place(f, aug);
  out.assign(m.cols, f.zero());
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols) return false;
    out[pivots[i]] = aug.at(i, m.cols);
  }
  return true;
}

/// Inverse of a square matrix; throws value_error when singular.
template <class F>
Matrix<F> mat_inverse(const F& f, const Matrix<F>& m) {
  if (m.rows != m.cols) throw value_error("inverse of non-square matrix");
  size_t n = m.rows;
  Matrix<F> aug = Matrix<F>::zero(f, n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = f.one();
  }
  auto pivots = rref_in_place(f, aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw value_error("matrix is singular");
  Matrix<F> out = Matrix<F>::zero(f, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

} // namespace antileib
