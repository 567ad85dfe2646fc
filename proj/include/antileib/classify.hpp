#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "antileib/bundle.hpp"
#include "antileib/errors.hpp"
#include "antileib/field.hpp"
#include "antileib/laws.hpp"

namespace antileib {

/// Outcome of solving the one-dimensional case {e1,e1} = c e1: the scalar
/// constraint forced by the left identity and its solution set.
template <class F>
struct Dim1Result {
  std::string constraint;
  std::vector<typename F::Elem> solutions;
};

/// One-dimensional classification. Over the rationals the constraint is
/// solved symbolically; over a prime field every scalar is tested.
template <class F>
Dim1Result<F> classify_dim1(const F& f) {
  Dim1Result<F> out;
  const auto three = f.from_int(3);
  if (f.characteristic() == 0) {
    out.constraint = "3c² = 0 ⇒ c = 0";
    out.solutions.push_back(f.zero());
    return out;
  }
  const bool vacuous = f.is_zero(three);
  out.constraint = vacuous ? "3c² = 0" : "3c² = 0 ⇒ c = 0";
  for (uint64_t c = 0; c < f.characteristic(); ++c) {
    auto e = f.from_int(static_cast<long>(c));
    if (f.is_zero(f.mul(three, f.mul(e, e)))) out.solutions.push_back(e);
  }
  return out;
}

/// Two-parameter family on basis e1, e2 (a and b invertible):
/// {e1,e1} = -a e1 - (a^2/b) e2, {e1,e2} = {e2,e1} = b e1 + a e2,
/// {e2,e2} = -(b^2/a) e1 - b e2.
template <class F>
AlgebraBundle<F> family_a1(const F& f, const typename F::Elem& a,
                           const typename F::Elem& b) {
  if (f.is_zero(a) || f.is_zero(b))
    throw value_error("family_a1 requires invertible parameters");
  StructureTensor<F> t(f, 2);
  const auto a2_over_b = f.div(f.mul(a, a), b);
  const auto b2_over_a = f.div(f.mul(b, b), a);
  t.at(0, 0, 0) = f.neg(a);
  t.at(0, 0, 1) = f.neg(a2_over_b);
  t.at(0, 1, 0) = b;
  t.at(0, 1, 1) = a;
  t.at(1, 0, 0) = b;
  t.at(1, 0, 1) = a;
  t.at(1, 1, 0) = f.neg(b2_over_a);
  t.at(1, 1, 1) = f.neg(b);
  auto bundle = make_algebra(f, default_labels(2), std::move(t),
                             AlgebraClass::anti_leibniz_left);
  if (!law_holds(bundle, LawId::anti_leibniz_left))
    throw certification_error("family_a1 instance fails its defining law");
  return bundle;
}

/// Nilpotent family {e2,e2} = e1.
template <class F>
AlgebraBundle<F> family_a2(const F& f) {
  StructureTensor<F> t(f, 2);
  t.at(1, 1, 0) = f.one();
  auto bundle = make_algebra(f, default_labels(2), std::move(t),
                             AlgebraClass::anti_leibniz_left);
  if (!law_holds(bundle, LawId::anti_leibniz_left))
    throw certification_error("family_a2 instance fails its defining law");
  return bundle;
}

/// Nilpotent family {e1,e1} = e2.
template <class F>
AlgebraBundle<F> family_a3(const F& f) {
  StructureTensor<F> t(f, 2);
  t.at(0, 0, 1) = f.one();
  auto bundle = make_algebra(f, default_labels(2), std::move(t),
                             AlgebraClass::anti_leibniz_left);
  if (!law_holds(bundle, LawId::anti_leibniz_left))
    throw certification_error("family_a3 instance fails its defining law");
  return bundle;
}

/// Named table entry used by match_table.
template <class F>
struct TableEntry {
  std::string name;
  StructureTensor<F> tensor;
};

/// Builds the comparison table in its documented order: A1(a,b) over
/// invertible pairs sorted by (a, b), then A2, then A3.
template <class F>
std::vector<TableEntry<F>> instantiate_table(const F& f) {
  if (f.characteristic() == 0)
    throw value_error("instantiate_table enumerates prime-field parameters");
  std::vector<TableEntry<F>> table;
  for (uint64_t a = 1; a < f.characteristic(); ++a)
    for (uint64_t b = 1; b < f.characteristic(); ++b) {
      auto ea = f.from_int(static_cast<long>(a));
      auto eb = f.from_int(static_cast<long>(b));
      auto alg = family_a1(f, ea, eb);
      table.push_back(TableEntry<F>{
          "A1(" + f.str(ea) + "," + f.str(eb) + ")",
          alg.product("mul")});
    }
  table.push_back(TableEntry<F>{"A2", family_a2(f).product("mul")});
  table.push_back(TableEntry<F>{"A3", family_a3(f).product("mul")});
  return table;
}

/// All two-dimensional structure tensors over F_p satisfying the left
/// identity, in lexicographic order of the flat coefficient vector. Guarded:
/// the p^8 sweep must stay within 10^8 candidates.
inline std::vector<StructureTensor<PrimeField>>
enumerate_dim2(const PrimeField& f) {
  const uint64_t p = f.characteristic();
  double total = 1;
  for (int i = 0; i < 8; ++i) total *= static_cast<double>(p);
  if (total > 1e8)
    throw value_error("enumerate_dim2: p^8 exceeds the 10^8 sweep bound");
  std::vector<StructureTensor<PrimeField>> out;
  StructureTensor<PrimeField> t(f, 2);
  LawScratch<PrimeField> sc;
  std::vector<uint64_t> digits(8, 0);
  while (true) {
    for (size_t i = 0; i < 8; ++i) t.flat()[i] = digits[i];
    LawTensors<PrimeField> ts{&t, nullptr, nullptr};
    if (law_holds(f, LawId::anti_leibniz_left, ts, 2, false, sc))
      out.push_back(t);
    // Odometer increment, least significant digit last to keep lex order.
    size_t pos = 8;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

/// All invertible 2x2 matrices over F_p.
inline std::vector<Matrix<PrimeField>> gl2_elements(const PrimeField& f) {
  const uint64_t p = f.characteristic();
  std::vector<Matrix<PrimeField>> out;
  out.reserve(static_cast<size_t>((p * p - 1) * (p * p - p)));
  Matrix<PrimeField> m = Matrix<PrimeField>::zero(f, 2, 2);
  for (uint64_t a = 0; a < p; ++a)
    for (uint64_t b = 0; b < p; ++b)
      for (uint64_t c = 0; c < p; ++c)
        for (uint64_t d = 0; d < p; ++d) {
          auto det = f.sub(f.mul(a, d), f.mul(b, c));
          if (f.is_zero(det)) continue;
          m.at(0, 0) = a;
          m.at(0, 1) = b;
          m.at(1, 0) = c;
          m.at(1, 1) = d;
          out.push_back(m);
        }
  return out;
}

/// Structure transport along a basis change phi: the returned tensor c'
/// satisfies c'(e_i, e_j) = phi^{-1} c(phi e_i, phi e_j), so phi is an
/// isomorphism from the new presentation onto the old one.
template <class F>
StructureTensor<F> transport(const F& f, const StructureTensor<F>& t,
                             const Matrix<F>& phi, const Matrix<F>& phi_inv) {
  const size_t n = t.dim();
  StructureTensor<F> out(f, n);
  Vec<F> x, y, v, w;
  for (size_t i = 0; i < n; ++i) {
    x.assign(n, f.zero());
    for (size_t r = 0; r < n; ++r) x[r] = phi.at(r, i);
    for (size_t j = 0; j < n; ++j) {
      y.assign(n, f.zero());
      for (size_t r = 0; r < n; ++r) y[r] = phi.at(r, j);
      t.eval_into(f, x, y, v);
      matvec_into(f, phi_inv, v, w);
      for (size_t k = 0; k < n; ++k) out.at(i, j, k) = w[k];
    }
  }
  return out;
}

/// One isomorphism class of the dimension-2 sweep.
template <class F>
struct OrbitClass {
  StructureTensor<F> rep;  // lexicographically least member
  size_t orbit_size = 0;
};

namespace detail {

template <class F>
bool flat_lex_less(const F& f, const std::vector<typename F::Elem>& a,
                   const std::vector<typename F::Elem>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (f.less(a[i], b[i])) return true;
    if (f.less(b[i], a[i])) return false;
  }
  return false;
}

} // namespace detail

/// Groups a transport-closed tensor list into isomorphism classes. Every
/// transported tensor must itself appear in the input; a miss means the
/// input was not closed and raises certification_error. Classes come back
/// sorted by representative.
template <class F>
std::vector<OrbitClass<F>> orbit_reduce(const F& f,
                                        const std::vector<StructureTensor<F>>& ts,
                                        const std::vector<Matrix<F>>& group) {
  using Flat = std::vector<typename F::Elem>;
  std::vector<Flat> keys;
  keys.reserve(ts.size());
  for (const auto& t : ts) keys.push_back(t.flat());
  std::vector<size_t> order(ts.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return detail::flat_lex_less(f, keys[a], keys[b]);
  });
  auto locate = [&](const Flat& k) -> size_t {
    auto it = std::lower_bound(order.begin(), order.end(), k,
                               [&](size_t idx, const Flat& key) {
                                 return detail::flat_lex_less(f, keys[idx],
                                                              key);
                               });
    if (it == order.end() || keys[*it] != k) return ts.size();
    return *it;
  };
  std::vector<char> visited(ts.size(), 0);
  std::vector<OrbitClass<F>> classes;
  std::vector<Matrix<F>> inverses;
  inverses.reserve(group.size());
  for (const auto& g : group) inverses.push_back(mat_inverse(f, g));
  for (size_t start_pos = 0; start_pos < order.size(); ++start_pos) {
    size_t start = order[start_pos];
    if (visited[start]) continue;
    std::vector<Flat> orbit;
    for (size_t gi = 0; gi < group.size(); ++gi) {
      auto moved = transport(f, ts[start], group[gi], inverses[gi]);
      size_t member = locate(moved.flat());
      if (member == ts.size())
        throw certification_error(
            "orbit_reduce: transported tensor missing from the input sweep");
      if (!visited[member]) {
        visited[member] = 1;
        orbit.push_back(moved.flat());
      }
    }
    std::sort(orbit.begin(), orbit.end(), [&](const Flat& a, const Flat& b) {
      return detail::flat_lex_less(f, a, b);
    });
    OrbitClass<F> cls;
    cls.orbit_size = orbit.size();
    StructureTensor<F> rep(f, ts[start].dim());
    rep.flat() = orbit.front();
    cls.rep = std::move(rep);
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [&](const OrbitClass<F>& a, const OrbitClass<F>& b) {
              return detail::flat_lex_less(f, a.rep.flat(), b.rep.flat());
            });
  return classes;
}

/// Names of the table entries isomorphic to a tensor, plus a single primary
/// name. An exact coefficient match wins outright; otherwise the first
/// equivalent entry in table order is primary; no match reports "unmatched".
struct TableMatch {
  std::vector<std::string> equivalent;
  std::string primary = "unmatched";
};

template <class F>
TableMatch match_table(const F& f, const StructureTensor<F>& t,
                       const std::vector<TableEntry<F>>& table,
                       const std::vector<Matrix<F>>& group) {
  using Flat = std::vector<typename F::Elem>;
  std::vector<Flat> orbit;
  for (const auto& g : group)
    orbit.push_back(transport(f, t, g, mat_inverse(f, g)).flat());
  std::sort(orbit.begin(), orbit.end(), [&](const Flat& a, const Flat& b) {
    return detail::flat_lex_less(f, a, b);
  });
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  TableMatch match;
  std::string exact;
  for (const auto& entry : table) {
    const Flat key = entry.tensor.flat();
    if (std::binary_search(orbit.begin(), orbit.end(), key,
                           [&](const Flat& a, const Flat& b) {
                             return detail::flat_lex_less(f, a, b);
                           })) {
      match.equivalent.push_back(entry.name);
      if (exact.empty() && key == t.flat()) exact = entry.name;
    }
  }
  if (!exact.empty())
    match.primary = exact;
  else if (!match.equivalent.empty())
    match.primary = match.equivalent.front();
  return match;
}

/// One reduced class of the dimension-2 classification with its table match.
struct Dim2Class {
  std::vector<std::string> rep_coeffs;  // flat tensor, printed scalars
  size_t orbit_size = 0;
  TableMatch match;
};

struct Dim2Result {
  size_t total_solutions = 0;
  std::vector<Dim2Class> classes;
};

/// Full dimension-2 pipeline over F_p: sweep, orbit-reduce, match.
inline Dim2Result classify_dim2(const PrimeField& f) {
  auto solutions = enumerate_dim2(f);
  auto group = gl2_elements(f);
  auto classes = orbit_reduce(f, solutions, group);
  auto table = instantiate_table(f);
  Dim2Result out;
  out.total_solutions = solutions.size();
  for (const auto& cls : classes) {
    Dim2Class c;
    for (const auto& e : cls.rep.flat()) c.rep_coeffs.push_back(f.str(e));
    c.orbit_size = cls.orbit_size;
    c.match = match_table(f, cls.rep, table, group);
    out.classes.push_back(std::move(c));
  }
  return out;
}

} // namespace antileib
