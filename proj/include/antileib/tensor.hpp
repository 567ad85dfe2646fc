#pragma once

#include <cstddef>
#include <vector>

#include "antileib/errors.hpp"
#include "antileib/linalg.hpp"

namespace antileib {

/// Structure constants of one bilinear product on an n-dimensional space:
/// product(e_i, e_j) = sum_k c(i,j,k) e_k, stored flat in (i,j,k) order.
template <class F>
class StructureTensor {
public:
  using Elem = typename F::Elem;

  StructureTensor() = default;
  StructureTensor(const F& f, size_t n) : n_(n), c_(n * n * n, f.zero()) {}

  size_t dim() const { return n_; }

  Elem& at(size_t i, size_t j, size_t k) { return c_[(i * n_ + j) * n_ + k]; }
  const Elem& at(size_t i, size_t j, size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }

  const std::vector<Elem>& flat() const { return c_; }
  std::vector<Elem>& flat() { return c_; }

  /// out := product(e_i, e_j).
  void slice_into(size_t i, size_t j, Vec<F>& out) const {
    out.assign(c_.begin() + (i * n_ + j) * n_,
               c_.begin() + (i * n_ + j + 1) * n_);
  }

  /// out += product(e_i, v).
  void lmul_basis_acc(const F& f, size_t i, const Vec<F>& v, Vec<F>& out) const {
    for (size_t j = 0; j < n_; ++j) {
      const Elem& vj = v[j];
      if (f.is_zero(vj)) continue;
      const Elem* row = &c_[(i * n_ + j) * n_];
      for (size_t k = 0; k < n_; ++k)
        out[k] = f.add(out[k], f.mul(vj, row[k]));
    }
  }

  /// out += product(v, e_j).
  void rmul_basis_acc(const F& f, const Vec<F>& v, size_t j, Vec<F>& out) const {
    for (size_t i = 0; i < n_; ++i) {
      const Elem& vi = v[i];
      if (f.is_zero(vi)) continue;
      const Elem* row = &c_[(i * n_ + j) * n_];
      for (size_t k = 0; k < n_; ++k)
        out[k] = f.add(out[k], f.mul(vi, row[k]));
    }
  }

  void lmul_basis_into(const F& f, size_t i, const Vec<F>& v, Vec<F>& out) const {
    out.assign(n_, f.zero());
    lmul_basis_acc(f, i, v, out);
  }

  void rmul_basis_into(const F& f, const Vec<F>& v, size_t j, Vec<F>& out) const {
    out.assign(n_, f.zero());
    rmul_basis_acc(f, v, j, out);
  }

  /// out := product(x, y) for coordinate vectors x, y. out may not alias x, y.
  void eval_into(const F& f, const Vec<F>& x, const Vec<F>& y,
                 Vec<F>& out) const {
    if (x.size() != n_ || y.size() != n_)
      throw value_error("product argument has wrong length");
    out.assign(n_, f.zero());
    for (size_t i = 0; i < n_; ++i) {
      if (f.is_zero(x[i])) continue;
      for (size_t j = 0; j < n_; ++j) {
        if (f.is_zero(y[j])) continue;
        Elem s = f.mul(x[i], y[j]);
        const Elem* row = &c_[(i * n_ + j) * n_];
        for (size_t k = 0; k < n_; ++k)
          out[k] = f.add(out[k], f.mul(s, row[k]));
      }
    }
  }

  Vec<F> eval(const F& f, const Vec<F>& x, const Vec<F>& y) const {
    Vec<F> out;
    eval_into(f, x, y, out);
    return out;
  }

  /// Tensor of the opposite product: c_op(i,j,k) = c(j,i,k).
  StructureTensor opposite(const F& f) const {
    StructureTensor t(f, n_);
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j)
        for (size_t k = 0; k < n_; ++k) t.at(i, j, k) = at(j, i, k);
    return t;
  }

  /// Matrix of left multiplication by e_i: rows indexed by output coordinate.
  Matrix<F> left_mult_matrix(const F& f, size_t i) const {
    Matrix<F> m = Matrix<F>::zero(f, n_, n_);
    for (size_t j = 0; j < n_; ++j)
      for (size_t k = 0; k < n_; ++k) m.at(k, j) = at(i, j, k);
    return m;
  }

  /// Matrix of right multiplication by e_j.
  Matrix<F> right_mult_matrix(const F& f, size_t j) const {
    Matrix<F> m = Matrix<F>::zero(f, n_, n_);
    for (size_t i = 0; i < n_; ++i)
      for (size_t k = 0; k < n_; ++k) m.at(k, i) = at(i, j, k);
    return m;
  }

  bool is_zero(const F& f) const {
    for (const auto& e : c_)
      if (!f.is_zero(e)) return false;
    return true;
  }

  bool equals(const F& f, const StructureTensor& o) const {
    if (n_ != o.n_) return false;
    for (size_t t = 0; t < c_.size(); ++t)
      if (!f.eq(c_[t], o.c_[t])) return false;
    return true;
  }

  /// Lexicographic comparison of the flat coefficient lists, used to pick
  /// canonical orbit representatives. Requires equal dimensions.
  bool lex_less(const F& f, const StructureTensor& o) const {
    for (size_t t = 0; t < c_.size(); ++t) {
      if (f.less(c_[t], o.c_[t])) return true;
      if (f.less(o.c_[t], c_[t])) return false;
    }
    return false;
  }

private:
  size_t n_ = 0;
  std::vector<Elem> c_;
};

} // namespace antileib
