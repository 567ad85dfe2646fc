#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "antileib/bundle.hpp"
#include "antileib/field.hpp"
#include "antileib/tensor.hpp"

// Shared instances used across the test binaries. Everything is templated on
// the field so the same tables serve both exact rationals and prime fields.
namespace fixtures {

using namespace antileib;

/// Entries are (i, j, k, coefficient) with 0-based indices.
template <class F>
StructureTensor<F> tensor(const F& f, size_t n,
                          std::initializer_list<std::array<long, 4>> entries) {
  StructureTensor<F> t(f, n);
  for (const auto& e : entries)
    t.at(static_cast<size_t>(e[0]), static_cast<size_t>(e[1]),
         static_cast<size_t>(e[2])) = f.from_int(e[3]);
  return t;
}

template <class F>
Matrix<F> mat(const F& f,
              std::initializer_list<std::initializer_list<long>> rows) {
  const size_t r = rows.size();
  const size_t c = rows.begin()->size();
  Matrix<F> m = Matrix<F>::zero(f, r, c);
  size_t i = 0;
  for (const auto& row : rows) {
    size_t j = 0;
    for (long v : row) m.at(i, j++) = f.from_int(v);
    ++i;
  }
  return m;
}

/// e1*e1 = e2, e3*e3 = e2 on three generators; commutative and nilpotent.
template <class F>
AlgebraBundle<F> ml3(const F& f) {
  return make_algebra(f, default_labels(3),
                      tensor(f, 3, {{0, 0, 1, 1}, {2, 2, 1, 1}}),
                      AlgebraClass::mock_lie);
}

/// e1*e1 = e2, e1*e3 = e3*e1 = e4 on four generators.
template <class F>
AlgebraBundle<F> ml4(const F& f) {
  return make_algebra(
      f, default_labels(4),
      tensor(f, 4, {{0, 0, 1, 1}, {0, 2, 3, 1}, {2, 0, 3, 1}}),
      AlgebraClass::mock_lie);
}

/// e1*e1 = e2 padded to three generators.
template <class F>
AlgebraBundle<F> square3(const F& f) {
  return make_algebra(f, default_labels(3), tensor(f, 3, {{0, 0, 1, 1}}),
                      AlgebraClass::mock_lie);
}

/// e1*e1 = e2 on two generators, commutative flavor.
template <class F>
AlgebraBundle<F> ml2(const F& f) {
  return make_algebra(f, default_labels(2), tensor(f, 2, {{0, 0, 1, 1}}),
                      AlgebraClass::mock_lie);
}

/// Three-step nilpotent commutative algebra on x, y, z1, z2, v:
/// x*x = z1, x*y = z2, y*z1 = -2v, x*z2 = v (plus symmetric copies).
template <class F>
AlgebraBundle<F> ml5(const F& f) {
  return make_algebra(f, {"x", "y", "z1", "z2", "v"},
                      tensor(f, 5,
                             {{0, 0, 2, 1},
                              {0, 1, 3, 1},
                              {1, 0, 3, 1},
                              {1, 2, 4, -2},
                              {2, 1, 4, -2},
                              {0, 3, 4, 1},
                              {3, 0, 4, 1}}),
                      AlgebraClass::mock_lie);
}

/// Projection onto span{x, z1} of ml5; an averaging operator there.
template <class F>
LinearMap<F> ml5_projection(const F& f) {
  return LinearMap<F>(f, mat(f, {{1, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 0},
                                 {0, 0, 1, 0, 0},
                                 {0, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 0}}));
}

/// Noncommutative anti-associative algebra: e1*e1 = e2, e1*e2 = e3,
/// e2*e1 = -e3.
template <class F>
AlgebraBundle<F> b3(const F& f) {
  return make_algebra(
      f, default_labels(3),
      tensor(f, 3, {{0, 0, 1, 1}, {0, 1, 2, 1}, {1, 0, 2, -1}}),
      AlgebraClass::anti_assoc);
}

/// e1*e1 = e2 on two generators, anti-associative flavor.
template <class F>
AlgebraBundle<F> aa2(const F& f) {
  return make_algebra(f, default_labels(2), tensor(f, 2, {{0, 0, 1, 1}}),
                      AlgebraClass::anti_assoc);
}

/// e1*e1 = e2 padded to three generators, anti-associative flavor.
template <class F>
AlgebraBundle<F> aa3(const F& f) {
  return make_algebra(f, default_labels(3), tensor(f, 3, {{0, 0, 1, 1}}),
                      AlgebraClass::anti_assoc);
}

/// One idempotent generator e1*e1 = e1; fails every law in the suite.
template <class F>
AlgebraBundle<F> idem1(const F& f) {
  return make_algebra(f, default_labels(1), tensor(f, 1, {{0, 0, 0, 1}}),
                      AlgebraClass::raw);
}

/// Dialgebra with both one-sided products equal to the given tensor.
template <class F>
AlgebraBundle<F> dialg_eq(const F& f, const AlgebraBundle<F>& alg) {
  AlgebraBundle<F> b(f);
  b.dim = alg.dim;
  b.labels = alg.labels;
  b.products.emplace("left", alg.product("mul"));
  b.products.emplace("right", alg.product("mul"));
  b.claimed = AlgebraClass::anti_assoc_dialgebra;
  b.validate();
  return b;
}

/// Dialgebra with independent one-sided products.
template <class F>
AlgebraBundle<F> dialg_pair(const F& f, std::vector<std::string> labels,
                            StructureTensor<F> left,
                            StructureTensor<F> right) {
  AlgebraBundle<F> b(f);
  b.dim = labels.size();
  b.labels = std::move(labels);
  b.products.emplace("left", std::move(left));
  b.products.emplace("right", std::move(right));
  b.claimed = AlgebraClass::anti_assoc_dialgebra;
  b.validate();
  return b;
}

/// Trialgebra with all three products equal to the given tensor.
template <class F>
AlgebraBundle<F> trialg_eq(const F& f, const AlgebraBundle<F>& alg) {
  AlgebraBundle<F> b(f);
  b.dim = alg.dim;
  b.labels = alg.labels;
  b.products.emplace("left", alg.product("mul"));
  b.products.emplace("middle", alg.product("mul"));
  b.products.emplace("right", alg.product("mul"));
  b.claimed = AlgebraClass::anti_assoc_trialgebra;
  b.validate();
  return b;
}

/// Trialgebra with zero one-sided products and the given middle product.
template <class F>
AlgebraBundle<F> trialg_mid(const F& f, const AlgebraBundle<F>& alg) {
  AlgebraBundle<F> b(f);
  b.dim = alg.dim;
  b.labels = alg.labels;
  b.products.emplace("left", StructureTensor<F>(f, alg.dim));
  b.products.emplace("middle", alg.product("mul"));
  b.products.emplace("right", StructureTensor<F>(f, alg.dim));
  b.claimed = AlgebraClass::anti_assoc_trialgebra;
  b.validate();
  return b;
}

/// On ml4: K e1 = K e3 = e1, K e2 = K e4 = e2.
template <class F>
LinearMap<F> k_fold4(const F& f) {
  return LinearMap<F>(f, mat(f, {{1, 0, 1, 0},
                                 {0, 1, 0, 1},
                                 {0, 0, 0, 0},
                                 {0, 0, 0, 0}}));
}

/// On ml4: K e2 = e1, everything else 0.
template <class F>
LinearMap<F> k_bad4(const F& f) {
  return LinearMap<F>(f, mat(f, {{0, 1, 0, 0},
                                 {0, 0, 0, 0},
                                 {0, 0, 0, 0},
                                 {0, 0, 0, 0}}));
}

/// On square3: H e1 = e1, H e2 = e2, H e3 = e2.
template <class F>
LinearMap<F> h_fold3(const F& f) {
  return LinearMap<F>(f, mat(f, {{1, 0, 0}, {0, 1, 1}, {0, 0, 0}}));
}

/// On square3: H e1 = e1, H e2 = H e3 = 0.
template <class F>
LinearMap<F> h_proj3(const F& f) {
  return LinearMap<F>(f, mat(f, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
}

/// Twice the identity on a dim-n space.
template <class F>
LinearMap<F> h_double(const F& f, size_t n) {
  Matrix<F> m = Matrix<F>::identity(f, n);
  for (auto& e : m.a) e = f.add(e, e);
  return LinearMap<F>(f, std::move(m));
}

/// Square-zero derivation on ml3: d e1 = e2, d e2 = 0, d e3 = e2.
template <class F>
LinearMap<F> d_ml3(const F& f) {
  return LinearMap<F>(f, mat(f, {{0, 0, 0}, {1, 0, 1}, {0, 0, 0}}));
}

/// Fixed-seed generator so every run sees the same pseudo-random instances.
inline std::mt19937_64 seeded_rng(std::uint64_t salt = 0) {
  return std::mt19937_64(0x616e74696c656962ULL ^ salt);
}

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  return Rational(num(rng), den(rng));
}

inline std::uint64_t random_residue(const PrimeField& f,
                                    std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, f.characteristic() - 1);
  return d(rng);
}

template <class F, class Gen>
Matrix<F> random_matrix(const F& f, size_t rows, size_t cols, Gen&& gen) {
  Matrix<F> m = Matrix<F>::zero(f, rows, cols);
  for (auto& e : m.a) e = gen();
  return m;
}

} // namespace fixtures
