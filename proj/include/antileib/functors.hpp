#pragma once

#include <string>
#include <utility>
#include <vector>

#include "antileib/bundle.hpp"
#include "antileib/errors.hpp"
#include "antileib/laws.hpp"

namespace antileib {

/// Options shared by all constructions. force skips both the input law check
/// and the output certification, for exploratory use only. swap_convention
/// flips the derived-bracket placement: default {x,y} = x|>y + y<|x, swapped
/// {x,y} = x<|y + y|>x.
struct DeriveOptions {
  bool force = false;
  bool swap_convention = false;
};

namespace detail {

template <class F>
std::string first_witness_note(const CheckReport<F>& r) {
  if (r.witnesses.empty()) return "";
  const auto& w = r.witnesses.front();
  return " (first witness at basis tuple (" + std::to_string(w.i + 1) + ", " +
         std::to_string(w.j + 1) + ", " + std::to_string(w.k + 1) + "), sub " +
         w.sub + ")";
}

template <class F>
void require_law(const AlgebraBundle<F>& alg, LawId law, bool force,
                 const std::string& what) {
  if (force) return;
  auto report = check_law(alg, law);
  if (!report.pass)
    throw precondition_error(what + ": input fails " + law_name(law) +
                             first_witness_note(report));
}

template <class F>
void require_rep(const RepBundle<F>& rep, bool force, const std::string& what) {
  if (force) return;
  if (auto law = class_law(rep_algebra_class(rep.kind)))
    require_law(rep.algebra, *law, force, what);
  auto report = check_representation(rep);
  if (!report.pass)
    throw precondition_error(what + ": representation fails its axioms" +
                             first_witness_note(report));
}

template <class F>
void certify_law(const AlgebraBundle<F>& alg, LawId law, bool force,
                 const std::string& what) {
  if (force) return;
  auto report = check_law(alg, law);
  if (!report.pass)
    throw certification_error(what + ": output fails " + law_name(law) +
                              first_witness_note(report));
}

template <class F>
void certify_rep(const RepBundle<F>& rep, bool force, const std::string& what) {
  if (force) return;
  auto report = check_representation(rep);
  if (!report.pass)
    throw certification_error(what + ": derived representation fails its "
                                     "axioms" +
                              first_witness_note(report));
}

inline std::vector<std::string> suffixed(const std::vector<std::string>& ls,
                                         const std::string& suffix) {
  std::vector<std::string> out;
  out.reserve(ls.size());
  for (const auto& l : ls) out.push_back(l + suffix);
  return out;
}

/// Writes the coefficients of vec into tensor slot (i, j, *) offset by base.
template <class F>
void set_block(StructureTensor<F>& t, size_t i, size_t j, size_t base,
               const Vec<F>& vec) {
  for (size_t k = 0; k < vec.size(); ++k) t.at(i, j, base + k) = vec[k];
}

} // namespace detail

/// Symmetrized product x o y = x * y + y * x of an anti-associative algebra.
template <class F>
AlgebraBundle<F> anticommutator(const AlgebraBundle<F>& alg,
                                const DeriveOptions& opts = {}) {
  alg.validate();
  const F& f = alg.field;
  detail::require_law(alg, LawId::anti_associativity, opts.force,
                      "anticommutator");
  const StructureTensor<F>& t = alg.product("mul");
  StructureTensor<F> out(f, alg.dim);
  for (size_t i = 0; i < alg.dim; ++i)
    for (size_t j = 0; j < alg.dim; ++j)
      for (size_t k = 0; k < alg.dim; ++k)
        out.at(i, j, k) = f.add(t.at(i, j, k), t.at(j, i, k));
  auto b = make_algebra(f, alg.labels, std::move(out), AlgebraClass::mock_lie);
  detail::certify_law(b, LawId::mock_lie, opts.force, "anticommutator");
  return b;
}

namespace detail {

/// Derived bracket of a left/right product pair. Default convention:
/// {x,y} = x|>y + y<|x; swapped: {x,y} = x<|y + y|>x.
template <class F>
StructureTensor<F> dicommutator_tensor(const F& f,
                                       const StructureTensor<F>& left,
                                       const StructureTensor<F>& right,
                                       bool swap) {
  const size_t n = left.dim();
  StructureTensor<F> out(f, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        out.at(i, j, k) =
            swap ? f.add(left.at(i, j, k), right.at(j, i, k))
                 : f.add(right.at(i, j, k), left.at(j, i, k));
  return out;
}

} // namespace detail

/// Derived bracket of an anti-associative dialgebra. The three dialgebra
/// axioms alone do not always make this bracket anti-Leibniz (the strict bar
/// identities close the gap), so the output certification can legitimately
/// fail on inputs passing dialg_all; such inputs raise certification_error.
template <class F>
AlgebraBundle<F> anti_dicommutator(const AlgebraBundle<F>& alg,
                                   const DeriveOptions& opts = {}) {
  alg.validate();
  const F& f = alg.field;
  detail::require_law(alg, LawId::dialg_all, opts.force, "anti_dicommutator");
  auto bracket = detail::dicommutator_tensor(
      f, alg.product("left"), alg.product("right"), opts.swap_convention);
  auto b = make_algebra(f, alg.labels, std::move(bracket),
                        AlgebraClass::anti_leibniz_left);
  detail::certify_law(b, LawId::anti_leibniz_left, opts.force,
                      "anti_dicommutator");
  return b;
}

/// Collapses an anti-associative trialgebra to an anti-Leibniz trialgebra:
/// bracket from the left/right pair as in anti_dicommutator, circle
/// x o y = x . y + y . x from the middle product.
template <class F>
AlgebraBundle<F> trialgebra_collapse(const AlgebraBundle<F>& alg,
                                     const DeriveOptions& opts = {}) {
  alg.validate();
  const F& f = alg.field;
  detail::require_law(alg, LawId::trialg_axioms, opts.force,
                      "trialgebra_collapse");
  auto bracket = detail::dicommutator_tensor(
      f, alg.product("left"), alg.product("right"), opts.swap_convention);
  const StructureTensor<F>& mid = alg.product("middle");
  StructureTensor<F> circ(f, alg.dim);
  for (size_t i = 0; i < alg.dim; ++i)
    for (size_t j = 0; j < alg.dim; ++j)
      for (size_t k = 0; k < alg.dim; ++k)
        circ.at(i, j, k) = f.add(mid.at(i, j, k), mid.at(j, i, k));
  AlgebraBundle<F> b(f);
  b.dim = alg.dim;
  b.labels = alg.labels;
  b.products.emplace("bracket", std::move(bracket));
  b.products.emplace("circ", std::move(circ));
  b.claimed = AlgebraClass::anti_leibniz_trialgebra;
  b.validate();
  detail::certify_law(b, LawId::anti_leib_trialg_full, opts.force,
                      "trialgebra_collapse");
  return b;
}

/// Semidirect product on [A-block | carrier-block]. The cross terms are
/// dictated by the representation kind; action kinds also keep the carrier
/// product on the carrier block. Carrier labels get the suffix "_v".
template <class F>
AlgebraBundle<F> semidirect(const RepBundle<F>& rep,
                            const DeriveOptions& opts = {}) {
  rep.validate();
  const F& f = rep.field;
  detail::require_rep(rep, opts.force, "semidirect");
  const size_t n = rep.algebra.dim;
  const size_t m = rep.carrier_dim;
  StructureTensor<F> t(f, n + m);
  const StructureTensor<F>& base = rep.algebra.product("mul");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) t.at(i, j, k) = base.at(i, j, k);
  auto put_cross = [&](const std::vector<Matrix<F>>& first_slot,
                       const std::vector<Matrix<F>>& second_slot) {
    // first_slot: product(e_i, v_j); second_slot: product(v_j, e_i).
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < m; ++j)
        for (size_t k = 0; k < m; ++k) {
          t.at(i, n + j, n + k) = first_slot[i].at(k, j);
          t.at(n + j, i, n + k) = second_slot[i].at(k, j);
        }
  };
  AlgebraClass out_class = AlgebraClass::mock_lie;
  switch (rep.kind) {
    case RepKind::mlie_rep:
    case RepKind::mlie_action:
      put_cross(rep.map("pi"), rep.map("pi"));
      out_class = AlgebraClass::mock_lie;
      break;
    case RepKind::anti_leib_rep:
      put_cross(rep.map("l"), rep.map("r"));
      out_class = AlgebraClass::anti_leibniz_left;
      break;
    case RepKind::anti_assoc_rep:
    case RepKind::anti_assoc_action:
      put_cross(rep.map("rho"), rep.map("mu"));
      out_class = AlgebraClass::anti_assoc;
      break;
  }
  if (rep_kind_is_action(rep.kind)) {
    const StructureTensor<F>& cp = *rep.carrier_product;
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        for (size_t k = 0; k < m; ++k)
          t.at(n + i, n + j, n + k) = cp.at(i, j, k);
  }
  std::vector<std::string> labels = rep.algebra.labels;
  for (const auto& l : detail::suffixed(rep.carrier_labels, "_v"))
    labels.push_back(l);
  auto b = make_algebra(f, std::move(labels), std::move(t), out_class);
  detail::certify_law(b, *class_law(out_class), opts.force, "semidirect");
  return b;
}

/// One-sided product {x+u, y+v} = x o y + pi(x) v on [A-block | carrier].
/// The output is anti-Leibniz but in general not commutative.
template <class F>
AlgebraBundle<F> hemisemidirect(const RepBundle<F>& rep,
                                const DeriveOptions& opts = {}) {
  rep.validate();
  if (rep.kind != RepKind::mlie_rep)
    throw value_error("hemisemidirect requires a plain mock-Lie representation");
  const F& f = rep.field;
  detail::require_rep(rep, opts.force, "hemisemidirect");
  const size_t n = rep.algebra.dim;
  const size_t m = rep.carrier_dim;
  StructureTensor<F> t(f, n + m);
  const StructureTensor<F>& base = rep.algebra.product("mul");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) t.at(i, j, k) = base.at(i, j, k);
  const auto& P = rep.map("pi");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k) t.at(i, n + j, n + k) = P[i].at(k, j);
  std::vector<std::string> labels = rep.algebra.labels;
  for (const auto& l : detail::suffixed(rep.carrier_labels, "_v"))
    labels.push_back(l);
  auto b = make_algebra(f, std::move(labels), std::move(t),
                        AlgebraClass::anti_leibniz_left);
  detail::certify_law(b, LawId::anti_leibniz_left, opts.force,
                      "hemisemidirect");
  return b;
}

/// Trialgebra on [A-block | carrier] with circle the block-diagonal direct
/// sum (x+a) o (y+b) = x o y + a o b and bracket {x+a, y+b} = x o y + pi(x) b.
template <class F>
AlgebraBundle<F> hemisemidirect_trialgebra(const RepBundle<F>& act,
                                           const DeriveOptions& opts = {}) {
  act.validate();
  if (act.kind != RepKind::mlie_action)
    throw value_error(
        "hemisemidirect_trialgebra requires a mock-Lie action");
  const F& f = act.field;
  detail::require_rep(act, opts.force, "hemisemidirect_trialgebra");
  const size_t n = act.algebra.dim;
  const size_t m = act.carrier_dim;
  const StructureTensor<F>& base = act.algebra.product("mul");
  const StructureTensor<F>& cp = *act.carrier_product;
  StructureTensor<F> circ(f, n + m);
  StructureTensor<F> bracket(f, n + m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        circ.at(i, j, k) = base.at(i, j, k);
        bracket.at(i, j, k) = base.at(i, j, k);
      }
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k)
        circ.at(n + i, n + j, n + k) = cp.at(i, j, k);
  const auto& P = act.map("pi");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k) bracket.at(i, n + j, n + k) = P[i].at(k, j);
  AlgebraBundle<F> b(f);
  b.dim = n + m;
  b.labels = act.algebra.labels;
  for (const auto& l : detail::suffixed(act.carrier_labels, "_v"))
    b.labels.push_back(l);
  b.products.emplace("bracket", std::move(bracket));
  b.products.emplace("circ", std::move(circ));
  b.claimed = AlgebraClass::anti_leibniz_trialgebra;
  b.validate();
  detail::certify_law(b, LawId::anti_leib_trialg_full, opts.force,
                      "hemisemidirect_trialgebra");
  return b;
}

/// Representation on the coordinate-dual carrier. With the dual basis fixed
/// to the coordinate dual, the mock-Lie case is pi*(x) = pi(x)^T and the
/// anti-Leibniz case is (l^T, l^T - r^T). Carrier labels get the suffix "_d".
template <class F>
RepBundle<F> dual_representation(const RepBundle<F>& rep,
                                 const DeriveOptions& opts = {}) {
  rep.validate();
  if (rep.kind != RepKind::mlie_rep && rep.kind != RepKind::anti_leib_rep)
    throw value_error("dual_representation supports only plain mock-Lie and "
                      "anti-Leibniz representations");
  const F& f = rep.field;
  detail::require_rep(rep, opts.force, "dual_representation");
  RepBundle<F> out(f, rep.algebra);
  out.kind = rep.kind;
  out.carrier_dim = rep.carrier_dim;
  out.carrier_labels = detail::suffixed(rep.carrier_labels, "_d");
  if (rep.kind == RepKind::mlie_rep) {
    std::vector<Matrix<F>> dual;
    for (const auto& p : rep.map("pi")) dual.push_back(transpose(f, p));
    out.maps.emplace("pi", std::move(dual));
  } else {
    const auto& L = rep.map("l");
    const auto& R = rep.map("r");
    std::vector<Matrix<F>> dl, dr;
    for (size_t i = 0; i < L.size(); ++i) {
      Matrix<F> lt = transpose(f, L[i]);
      dr.push_back(mat_sub(f, lt, transpose(f, R[i])));
      dl.push_back(std::move(lt));
    }
    out.maps.emplace("l", std::move(dl));
    out.maps.emplace("r", std::move(dr));
  }
  out.validate();
  detail::certify_rep(out, opts.force, "dual_representation");
  return out;
}

/// Adjoint representation of a single-product bundle, in the flavor matching
/// kind. Action kinds reuse the bundle's own product as the carrier product.
template <class F>
RepBundle<F> adjoint_representation(const AlgebraBundle<F>& alg, RepKind kind) {
  alg.validate();
  const F& f = alg.field;
  const StructureTensor<F>& t = alg.product("mul");
  RepBundle<F> rep(f, alg);
  rep.kind = kind;
  rep.carrier_dim = alg.dim;
  rep.carrier_labels = alg.labels;
  std::vector<Matrix<F>> lefts, rights;
  for (size_t i = 0; i < alg.dim; ++i) {
    lefts.push_back(t.left_mult_matrix(f, i));
    rights.push_back(t.right_mult_matrix(f, i));
  }
  switch (kind) {
    case RepKind::mlie_rep:
    case RepKind::mlie_action: rep.maps.emplace("pi", std::move(lefts)); break;
    case RepKind::anti_leib_rep:
      rep.maps.emplace("l", std::move(lefts));
      rep.maps.emplace("r", std::move(rights));
      break;
    case RepKind::anti_assoc_rep:
    case RepKind::anti_assoc_action:
      rep.maps.emplace("rho", std::move(lefts));
      rep.maps.emplace("mu", std::move(rights));
      break;
  }
  if (rep_kind_is_action(kind)) rep.carrier_product = t;
  rep.validate();
  return rep;
}

/// Coadjoint representation: the dual of the adjoint pair (L, R).
template <class F>
RepBundle<F> coadjoint(const AlgebraBundle<F>& alg,
                       const DeriveOptions& opts = {}) {
  alg.validate();
  detail::require_law(alg, LawId::anti_leibniz_left, opts.force, "coadjoint");
  auto adj = adjoint_representation(alg, RepKind::anti_leib_rep);
  DeriveOptions inner = opts;
  // The adjoint of a left anti-Leibniz algebra always satisfies the axioms;
  // re-checking it here would only duplicate the precondition scan.
  inner.force = true;
  auto out = dual_representation(adj, inner);
  detail::certify_rep(out, opts.force, "coadjoint");
  return out;
}

template <class F>
struct KernelQuotient {
  Subspace<F> kernel;
  AlgebraBundle<F> quotient;
};

/// Kernel I = span{ {e_i,e_j} - {e_j,e_i} } of a left anti-Leibniz bundle
/// and the quotient algebra on the non-pivot complement coordinates.
/// Asserts products I * A vanish identically, and certifies the quotient as
/// mock-Lie.
template <class F>
KernelQuotient<F> kernel_and_quotient(const AlgebraBundle<F>& alg,
                                      const DeriveOptions& opts = {}) {
  alg.validate();
  const F& f = alg.field;
  detail::require_law(alg, LawId::anti_leibniz_left, opts.force,
                      "kernel_and_quotient");
  const StructureTensor<F>& t = alg.product("mul");
  const size_t n = alg.dim;
  std::vector<Vec<F>> spanning;
  Vec<F> u, v;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      t.slice_into(i, j, u);
      t.slice_into(j, i, v);
      sub_into(f, u, v);
      if (!is_zero_vec(f, u)) spanning.push_back(u);
    }
  Subspace<F> kernel(f, n, spanning);
  // Kernel elements annihilate the algebra from the left, exactly.
  Vec<F> prod;
  for (size_t r = 0; r < kernel.dim(); ++r) {
    Vec<F> w = kernel.basis().row(r);
    for (size_t j = 0; j < n; ++j) {
      t.rmul_basis_into(f, w, j, prod);
      if (!is_zero_vec(f, prod))
        throw certification_error(
            "kernel_and_quotient: kernel element fails to annihilate");
    }
  }
  // Quotient on the non-pivot coordinates; reduction leaves exactly those
  // coordinates free.
  std::vector<size_t> comp;
  {
    std::vector<bool> is_pivot(n, false);
    for (size_t p : kernel.pivots()) is_pivot[p] = true;
    for (size_t i = 0; i < n; ++i)
      if (!is_pivot[i]) comp.push_back(i);
  }
  const size_t q = comp.size();
  StructureTensor<F> qt(f, q);
  for (size_t a = 0; a < q; ++a)
    for (size_t b = 0; b < q; ++b) {
      t.slice_into(comp[a], comp[b], u);
      kernel.reduce_in_place(f, u);
      for (size_t c = 0; c < q; ++c) qt.at(a, b, c) = u[comp[c]];
    }
  std::vector<std::string> labels;
  for (size_t c : comp) labels.push_back(alg.labels[c]);
  auto quotient =
      make_algebra(f, std::move(labels), std::move(qt), AlgebraClass::mock_lie);
  detail::certify_law(quotient, LawId::mock_lie, opts.force,
                      "kernel_and_quotient");
  return KernelQuotient<F>{std::move(kernel), std::move(quotient)};
}

/// Same labels, product arguments swapped; turns left anti-Leibniz bundles
/// into right ones and back.
template <class F>
AlgebraBundle<F> opposite_algebra(const AlgebraBundle<F>& alg) {
  alg.validate();
  AlgebraBundle<F> out = alg;
  out.products.clear();
  for (const auto& [name, t] : alg.products)
    out.products.emplace(name, t.opposite(alg.field));
  out.claimed = AlgebraClass::raw;
  if (alg.claimed == AlgebraClass::anti_leibniz_left)
    out.claimed = AlgebraClass::anti_leibniz_right;
  else if (alg.claimed == AlgebraClass::anti_leibniz_right)
    out.claimed = AlgebraClass::anti_leibniz_left;
  else if (alg.claimed == AlgebraClass::mock_lie ||
           alg.claimed == AlgebraClass::anti_assoc)
    out.claimed = alg.claimed;
  return out;
}

} // namespace antileib
