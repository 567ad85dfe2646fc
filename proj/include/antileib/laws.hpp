#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "antileib/bundle.hpp"
#include "antileib/errors.hpp"
#include "antileib/linalg.hpp"
#include "antileib/tensor.hpp"

namespace antileib {

/// Checkable laws. Single-product laws read the product "mul"; dialgebra laws
/// read "left"/"right"; trialgebra axioms read "left"/"middle"/"right"; the
/// trialgebra-with-bracket laws read "bracket"/"circ".
enum class LawId {
  commutativity,
  jacobi,
  mock_lie,
  anti_associativity,
  anti_leibniz_left,
  anti_leibniz_right,
  anti_leibniz_symmetric,
  dialg_left_antiassoc,
  dialg_right_antiassoc,
  dialg_inner_antiassoc,
  dialg_all,
  trialg_axioms,
  anti_leib_trialg_compat_1,
  anti_leib_trialg_compat_2,
  anti_leib_trialg_full,
  right_trileib_compat,
};

inline const std::vector<LawId>& all_laws() {
  static const std::vector<LawId> laws = {
      LawId::commutativity,
      LawId::jacobi,
      LawId::mock_lie,
      LawId::anti_associativity,
      LawId::anti_leibniz_left,
      LawId::anti_leibniz_right,
      LawId::anti_leibniz_symmetric,
      LawId::dialg_left_antiassoc,
      LawId::dialg_right_antiassoc,
      LawId::dialg_inner_antiassoc,
      LawId::dialg_all,
      LawId::trialg_axioms,
      LawId::anti_leib_trialg_compat_1,
      LawId::anti_leib_trialg_compat_2,
      LawId::anti_leib_trialg_full,
      LawId::right_trileib_compat,
  };
  return laws;
}

inline const char* law_name(LawId id) {
  switch (id) {
    case LawId::commutativity: return "commutativity";
    case LawId::jacobi: return "jacobi";
    case LawId::mock_lie: return "mock_lie";
    case LawId::anti_associativity: return "anti_associativity";
    case LawId::anti_leibniz_left: return "anti_leibniz_left";
    case LawId::anti_leibniz_right: return "anti_leibniz_right";
    case LawId::anti_leibniz_symmetric: return "anti_leibniz_symmetric";
    case LawId::dialg_left_antiassoc: return "dialg_left_antiassoc";
    case LawId::dialg_right_antiassoc: return "dialg_right_antiassoc";
    case LawId::dialg_inner_antiassoc: return "dialg_inner_antiassoc";
    case LawId::dialg_all: return "dialg_all";
    case LawId::trialg_axioms: return "trialg_axioms";
    case LawId::anti_leib_trialg_compat_1: return "anti_leib_trialg_compat_1";
    case LawId::anti_leib_trialg_compat_2: return "anti_leib_trialg_compat_2";
    case LawId::anti_leib_trialg_full: return "anti_leib_trialg_full";
    case LawId::right_trileib_compat: return "right_trileib_compat";
  }
  return "mock_lie";
}

inline std::optional<LawId> parse_law(const std::string& s) {
  for (LawId id : all_laws())
    if (s == law_name(id)) return id;
  return std::nullopt;
}

/// The law an algebra class certifies as, or nullopt for raw.
inline std::optional<LawId> class_law(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::raw: return std::nullopt;
    case AlgebraClass::mock_lie: return LawId::mock_lie;
    case AlgebraClass::anti_assoc: return LawId::anti_associativity;
    case AlgebraClass::anti_leibniz_left: return LawId::anti_leibniz_left;
    case AlgebraClass::anti_leibniz_right: return LawId::anti_leibniz_right;
    case AlgebraClass::anti_assoc_dialgebra: return LawId::dialg_all;
    case AlgebraClass::anti_assoc_trialgebra: return LawId::trialg_axioms;
    case AlgebraClass::anti_leibniz_trialgebra:
      return LawId::anti_leib_trialg_full;
  }
  return std::nullopt;
}

/// Sub-identities a law decomposes into. Each one is a single polynomial
/// identity evaluated on basis tuples. Tensor slots: single-product laws bind
/// a = the product; dialgebra laws bind a = left, b = right; trialgebra
/// axioms bind a = left, b = right, c = middle; bracket/circ laws bind
/// a = bracket, b = circ.
enum class SubId {
  commutativity,
  jacobi,
  anti_assoc,
  anti_leibniz_left,
  anti_leibniz_right,
  dialg_left_antiassoc,
  dialg_right_antiassoc,
  dialg_inner_antiassoc,
  dialg_bar_left,
  dialg_bar_right,
  trialg_middle_antiassoc,
  trialg_ll_ml,
  trialg_ml_lm,
  trialg_lm_rm,
  trialg_rm_mr,
  trialg_mr_rr,
  circ_commutativity,
  circ_jacobi,
  trileib_compat_1,
  trileib_compat_2,
  rtrileib_compat_1,
  rtrileib_compat_2,
};

inline const char* sub_name(SubId id) {
  switch (id) {
    case SubId::commutativity: return "commutativity";
    case SubId::jacobi: return "jacobi";
    case SubId::anti_assoc: return "anti_associativity";
    case SubId::anti_leibniz_left: return "anti_leibniz_left";
    case SubId::anti_leibniz_right: return "anti_leibniz_right";
    case SubId::dialg_left_antiassoc: return "dialg_left_antiassoc";
    case SubId::dialg_right_antiassoc: return "dialg_right_antiassoc";
    case SubId::dialg_inner_antiassoc: return "dialg_inner_antiassoc";
    case SubId::dialg_bar_left: return "dialg_bar_left";
    case SubId::dialg_bar_right: return "dialg_bar_right";
    case SubId::trialg_middle_antiassoc: return "trialg_middle_antiassoc";
    case SubId::trialg_ll_ml: return "trialg_ll_ml";
    case SubId::trialg_ml_lm: return "trialg_ml_lm";
    case SubId::trialg_lm_rm: return "trialg_lm_rm";
    case SubId::trialg_rm_mr: return "trialg_rm_mr";
    case SubId::trialg_mr_rr: return "trialg_mr_rr";
    case SubId::circ_commutativity: return "circ_commutativity";
    case SubId::circ_jacobi: return "circ_jacobi";
    case SubId::trileib_compat_1: return "anti_leib_trialg_compat_1";
    case SubId::trileib_compat_2: return "anti_leib_trialg_compat_2";
    case SubId::rtrileib_compat_1: return "right_trileib_compat_1";
    case SubId::rtrileib_compat_2: return "right_trileib_compat_2";
  }
  return "";
}

inline size_t sub_arity(SubId id) {
  return (id == SubId::commutativity || id == SubId::circ_commutativity) ? 2
                                                                          : 3;
}

/// Sub-identity list for a law. strict adds the two bar identities that tie
/// the two dialgebra products together; without them the dialgebra axioms do
/// not force the derived bracket to close (see the checker tests for a
/// counterexample).
inline std::vector<SubId> law_subs(LawId law, bool strict) {
  switch (law) {
    case LawId::commutativity: return {SubId::commutativity};
    case LawId::jacobi: return {SubId::jacobi};
    case LawId::mock_lie: return {SubId::commutativity, SubId::jacobi};
    case LawId::anti_associativity: return {SubId::anti_assoc};
    case LawId::anti_leibniz_left: return {SubId::anti_leibniz_left};
    case LawId::anti_leibniz_right: return {SubId::anti_leibniz_right};
    case LawId::anti_leibniz_symmetric:
      return {SubId::anti_leibniz_left, SubId::anti_leibniz_right};
    case LawId::dialg_left_antiassoc: return {SubId::dialg_left_antiassoc};
    case LawId::dialg_right_antiassoc: return {SubId::dialg_right_antiassoc};
    case LawId::dialg_inner_antiassoc: return {SubId::dialg_inner_antiassoc};
    case LawId::dialg_all: {
      std::vector<SubId> subs = {SubId::dialg_left_antiassoc,
                                 SubId::dialg_right_antiassoc,
                                 SubId::dialg_inner_antiassoc};
      if (strict) {
        subs.push_back(SubId::dialg_bar_left);
        subs.push_back(SubId::dialg_bar_right);
      }
      return subs;
    }
    case LawId::trialg_axioms: {
      std::vector<SubId> subs = {
          SubId::dialg_left_antiassoc, SubId::dialg_right_antiassoc,
          SubId::dialg_inner_antiassoc, SubId::trialg_middle_antiassoc,
          SubId::trialg_ll_ml,          SubId::trialg_ml_lm,
          SubId::trialg_lm_rm,          SubId::trialg_rm_mr,
          SubId::trialg_mr_rr};
      if (strict) {
        subs.push_back(SubId::dialg_bar_left);
        subs.push_back(SubId::dialg_bar_right);
      }
      return subs;
    }
    case LawId::anti_leib_trialg_compat_1: return {SubId::trileib_compat_1};
    case LawId::anti_leib_trialg_compat_2: return {SubId::trileib_compat_2};
    case LawId::anti_leib_trialg_full:
      return {SubId::circ_commutativity, SubId::circ_jacobi,
              SubId::anti_leibniz_left, SubId::trileib_compat_1,
              SubId::trileib_compat_2};
    case LawId::right_trileib_compat:
      return {SubId::rtrileib_compat_1, SubId::rtrileib_compat_2};
  }
  return {};
}

/// Product names a law reads from a bundle.
inline std::vector<std::string> law_required_products(LawId law) {
  switch (law) {
    case LawId::commutativity:
    case LawId::jacobi:
    case LawId::mock_lie:
    case LawId::anti_associativity:
    case LawId::anti_leibniz_left:
    case LawId::anti_leibniz_right:
    case LawId::anti_leibniz_symmetric: return {"mul"};
    case LawId::dialg_left_antiassoc: return {"left"};
    case LawId::dialg_right_antiassoc: return {"right"};
    case LawId::dialg_inner_antiassoc:
    case LawId::dialg_all: return {"left", "right"};
    case LawId::trialg_axioms: return {"left", "middle", "right"};
    case LawId::anti_leib_trialg_compat_1:
    case LawId::anti_leib_trialg_compat_2:
    case LawId::anti_leib_trialg_full:
    case LawId::right_trileib_compat: return {"bracket", "circ"};
  }
  return {};
}

/// Tensor slots bound for one law evaluation; see SubId for the convention.
template <class F>
struct LawTensors {
  const StructureTensor<F>* a = nullptr;
  const StructureTensor<F>* b = nullptr;
  const StructureTensor<F>* c = nullptr;
};

template <class F>
LawTensors<F> bind_law_tensors(const AlgebraBundle<F>& alg, LawId law) {
  for (const auto& name : law_required_products(law))
    if (!alg.has_product(name))
      throw value_error(std::string("law '") + law_name(law) +
                        "' requires product '" + name + "'");
  LawTensors<F> ts;
  switch (law) {
    case LawId::commutativity:
    case LawId::jacobi:
    case LawId::mock_lie:
    case LawId::anti_associativity:
    case LawId::anti_leibniz_left:
    case LawId::anti_leibniz_right:
    case LawId::anti_leibniz_symmetric: ts.a = &alg.product("mul"); break;
    case LawId::dialg_left_antiassoc: ts.a = &alg.product("left"); break;
    case LawId::dialg_right_antiassoc: ts.b = &alg.product("right"); break;
    case LawId::dialg_inner_antiassoc:
    case LawId::dialg_all:
      ts.a = &alg.product("left");
      ts.b = &alg.product("right");
      break;
    case LawId::trialg_axioms:
      ts.a = &alg.product("left");
      ts.b = &alg.product("right");
      ts.c = &alg.product("middle");
      break;
    case LawId::anti_leib_trialg_compat_1:
    case LawId::anti_leib_trialg_compat_2:
    case LawId::anti_leib_trialg_full:
    case LawId::right_trileib_compat:
      ts.a = &alg.product("bracket");
      ts.b = &alg.product("circ");
      break;
  }
  return ts;
}

template <class F>
struct LawScratch {
  Vec<F> s1, s2, out;
};

/// Residual of one sub-identity on the basis tuple (i, j, k); for arity-2
/// sub-identities k is ignored. All residuals are written left side minus
/// right side of the defining identity with every term moved left, so a law
/// holds iff every residual vanishes.
template <class F>
void sub_residual(const F& f, SubId id, const LawTensors<F>& ts, size_t i,
                  size_t j, size_t k, LawScratch<F>& sc) {
  const StructureTensor<F>* A = ts.a;
  const StructureTensor<F>* B = ts.b;
  const StructureTensor<F>* C = ts.c;
  Vec<F>& s1 = sc.s1;
  Vec<F>& s2 = sc.s2;
  Vec<F>& out = sc.out;
  switch (id) {
    case SubId::commutativity:
      A->slice_into(i, j, out);
      A->slice_into(j, i, s1);
      sub_into(f, out, s1);
      return;
    case SubId::circ_commutativity:
      B->slice_into(i, j, out);
      B->slice_into(j, i, s1);
      sub_into(f, out, s1);
      return;
    case SubId::jacobi:
      A->slice_into(j, k, s1);
      A->lmul_basis_into(f, i, s1, out);
      A->slice_into(k, i, s1);
      A->lmul_basis_acc(f, j, s1, out);
      A->slice_into(i, j, s1);
      A->lmul_basis_acc(f, k, s1, out);
      return;
    case SubId::circ_jacobi:
      B->slice_into(j, k, s1);
      B->lmul_basis_into(f, i, s1, out);
      B->slice_into(k, i, s1);
      B->lmul_basis_acc(f, j, s1, out);
      B->slice_into(i, j, s1);
      B->lmul_basis_acc(f, k, s1, out);
      return;
    case SubId::anti_assoc:
    case SubId::dialg_left_antiassoc:
      A->slice_into(i, j, s1);
      A->rmul_basis_into(f, s1, k, out);
      A->slice_into(j, k, s1);
      A->lmul_basis_acc(f, i, s1, out);
      return;
    case SubId::dialg_right_antiassoc:
      B->slice_into(i, j, s1);
      B->rmul_basis_into(f, s1, k, out);
      B->slice_into(j, k, s1);
      B->lmul_basis_acc(f, i, s1, out);
      return;
    case SubId::trialg_middle_antiassoc:
      C->slice_into(i, j, s1);
      C->rmul_basis_into(f, s1, k, out);
      C->slice_into(j, k, s1);
      C->lmul_basis_acc(f, i, s1, out);
      return;
    case SubId::dialg_inner_antiassoc:
      // (x |> y) <| z + x |> (y <| z)
      B->slice_into(i, j, s1);
      A->rmul_basis_into(f, s1, k, out);
      A->slice_into(j, k, s1);
      B->lmul_basis_acc(f, i, s1, out);
      return;
    case SubId::dialg_bar_left:
      // x <| (y |> z) - x <| (y <| z)
      B->slice_into(j, k, s1);
      A->lmul_basis_into(f, i, s1, out);
      A->slice_into(j, k, s1);
      A->lmul_basis_into(f, i, s1, s2);
      sub_into(f, out, s2);
      return;
    case SubId::dialg_bar_right:
      // (x <| y) |> z - (x |> y) |> z
      A->slice_into(i, j, s1);
      B->rmul_basis_into(f, s1, k, out);
      B->slice_into(i, j, s1);
      B->rmul_basis_into(f, s1, k, s2);
      sub_into(f, out, s2);
      return;
    case SubId::trialg_ll_ml:
      // (x <| y) <| z + x <| (y . z)
      A->slice_into(i, j, s1);
      A->rmul_basis_into(f, s1, k, out);
      C->slice_into(j, k, s1);
      A->lmul_basis_acc(f, i, s1, out);
      return;
    case SubId::trialg_ml_lm:
      // (x . y) <| z + x . (y <| z)
      C->slice_into(i, j, s1);
      A->rmul_basis_into(f, s1, k, out);
      A->slice_into(j, k, s1);
      C->lmul_basis_acc(f, i, s1, out);
      return;
    case SubId::trialg_lm_rm:
      // (x <| y) . z + x . (y |> z)
      A->slice_into(i, j, s1);
      C->rmul_basis_into(f, s1, k, out);
      B->slice_into(j, k, s1);
      C->lmul_basis_acc(f, i, s1, out);
      return;
    case SubId::trialg_rm_mr:
      // (x |> y) . z + x |> (y . z)
      B->slice_into(i, j, s1);
      C->rmul_basis_into(f, s1, k, out);
      C->slice_into(j, k, s1);
      B->lmul_basis_acc(f, i, s1, out);
      return;
    case SubId::trialg_mr_rr:
      // (x . y) |> z + x |> (y |> z)
      C->slice_into(i, j, s1);
      B->rmul_basis_into(f, s1, k, out);
      B->slice_into(j, k, s1);
      B->lmul_basis_acc(f, i, s1, out);
      return;
    case SubId::anti_leibniz_left:
      // {x,{y,z}} + {{x,y},z} + {y,{x,z}}
      A->slice_into(j, k, s1);
      A->lmul_basis_into(f, i, s1, out);
      A->slice_into(i, j, s1);
      A->rmul_basis_acc(f, s1, k, out);
      A->slice_into(i, k, s1);
      A->lmul_basis_acc(f, j, s1, out);
      return;
    case SubId::anti_leibniz_right:
      // {{x,y},z} + {{x,z},y} + {x,{y,z}}
      A->slice_into(i, j, s1);
      A->rmul_basis_into(f, s1, k, out);
      A->slice_into(i, k, s1);
      A->rmul_basis_acc(f, s1, j, out);
      A->slice_into(j, k, s1);
      A->lmul_basis_acc(f, i, s1, out);
      return;
    case SubId::trileib_compat_1:
      // {x, y o z} + y o {x,z} + z o {x,y}
      B->slice_into(j, k, s1);
      A->lmul_basis_into(f, i, s1, out);
      A->slice_into(i, k, s1);
      B->lmul_basis_acc(f, j, s1, out);
      A->slice_into(i, j, s1);
      B->lmul_basis_acc(f, k, s1, out);
      return;
    case SubId::trileib_compat_2:
      // {x o y, z} - {{x,y}, z}
      B->slice_into(i, j, s1);
      A->rmul_basis_into(f, s1, k, out);
      A->slice_into(i, j, s1);
      A->rmul_basis_into(f, s1, k, s2);
      sub_into(f, out, s2);
      return;
    case SubId::rtrileib_compat_1:
      // {y o z, x} + y o {z,x} + z o {y,x}
      B->slice_into(j, k, s1);
      A->rmul_basis_into(f, s1, i, out);
      A->slice_into(k, i, s1);
      B->lmul_basis_acc(f, j, s1, out);
      A->slice_into(j, i, s1);
      B->lmul_basis_acc(f, k, s1, out);
      return;
    case SubId::rtrileib_compat_2:
      // {z, x o y} - {z, {x,y}}
      B->slice_into(i, j, s1);
      A->lmul_basis_into(f, k, s1, out);
      A->slice_into(i, j, s1);
      A->lmul_basis_into(f, k, s1, s2);
      sub_into(f, out, s2);
      return;
  }
}

struct CheckOptions {
  bool strict_dialgebra = false;
  size_t witness_cap = 16;
};

/// Placeholder for the third index of witnesses produced by pair scans.
inline constexpr size_t no_index = static_cast<size_t>(-1);

template <class F>
struct Witness {
  size_t i = 0, j = 0, k = 0;
  std::string sub;
  Vec<F> residual;
};

/// Result of a law, representation, operator-predicate, or closure check.
/// Witnesses are sorted by (i, j, k, sub) and truncated to witness_cap;
/// witnesses_total always counts all of them.
template <class F>
struct CheckReport {
  std::string law;
  bool pass = true;
  size_t triples_checked = 0;
  size_t witnesses_total = 0;
  size_t witness_cap = 16;
  std::vector<Witness<F>> witnesses;
};

template <class F>
void sort_and_cap_witnesses(CheckReport<F>& report) {
  std::stable_sort(report.witnesses.begin(), report.witnesses.end(),
                   [](const Witness<F>& x, const Witness<F>& y) {
                     if (x.i != y.i) return x.i < y.i;
                     if (x.j != y.j) return x.j < y.j;
                     if (x.k != y.k) return x.k < y.k;
                     return x.sub < y.sub;
                   });
  report.witnesses_total = report.witnesses.size();
  if (report.witnesses.size() > report.witness_cap)
    report.witnesses.resize(report.witness_cap);
  report.pass = report.witnesses_total == 0;
}

/// Checks a law given bound tensors; dim is the underlying dimension.
template <class F>
CheckReport<F> check_law_tensors(const F& f, LawId law, const LawTensors<F>& ts,
                                 size_t dim, const CheckOptions& opts = {}) {
  CheckReport<F> report;
  report.law = law_name(law);
  report.witness_cap = opts.witness_cap;
  LawScratch<F> sc;
  for (SubId sub : law_subs(law, opts.strict_dialgebra)) {
    const size_t kmax = sub_arity(sub) == 2 ? 1 : dim;
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j)
        for (size_t k = 0; k < kmax; ++k) {
          sub_residual(f, sub, ts, i, j, k, sc);
          ++report.triples_checked;
          if (!is_zero_vec(f, sc.out))
            report.witnesses.push_back(
                Witness<F>{i, j, sub_arity(sub) == 2 ? no_index : k,
                           sub_name(sub), sc.out});
        }
  }
  sort_and_cap_witnesses(report);
  return report;
}

/// Checks a law on a bundle; throws value_error when the bundle lacks the
/// products the law reads.
template <class F>
CheckReport<F> check_law(const AlgebraBundle<F>& alg, LawId law,
                         const CheckOptions& opts = {}) {
  alg.validate();
  return check_law_tensors(alg.field, law, bind_law_tensors(alg, law), alg.dim,
                           opts);
}

/// Early-exit law predicate sharing the same residual formulas as check_law.
/// Reuses the caller's scratch, so scans stay allocation-free after warmup.
template <class F>
bool law_holds(const F& f, LawId law, const LawTensors<F>& ts, size_t dim,
               bool strict, LawScratch<F>& sc) {
  for (SubId sub : law_subs(law, strict)) {
    const size_t kmax = sub_arity(sub) == 2 ? 1 : dim;
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j)
        for (size_t k = 0; k < kmax; ++k) {
          sub_residual(f, sub, ts, i, j, k, sc);
          if (!is_zero_vec(f, sc.out)) return false;
        }
  }
  return true;
}

template <class F>
bool law_holds(const AlgebraBundle<F>& alg, LawId law, bool strict = false) {
  LawScratch<F> sc;
  return law_holds(alg.field, law, bind_law_tensors(alg, law), alg.dim, strict,
                   sc);
}

// ---------------------------------------------------------------------------
// Representation checks.
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
Matrix<F> combine_maps(const F& f, const std::vector<Matrix<F>>& ms,
                       const Vec<F>& coeffs, size_t m) {
  Matrix<F> out = Matrix<F>::zero(f, m, m);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (f.is_zero(coeffs[i])) continue;
    for (size_t t = 0; t < out.a.size(); ++t)
      out.a[t] = f.add(out.a[t], f.mul(coeffs[i], ms[i].a[t]));
  }
  return out;
}

/// Records each nonzero column of the residual matrix as a witness (i, j, k)
/// with k the carrier column index.
template <class F>
void record_matrix_residual(const F& f, const Matrix<F>& resid, size_t i,
                            size_t j, const char* sub,
                            CheckReport<F>& report) {
  for (size_t k = 0; k < resid.cols; ++k) {
    bool nonzero = false;
    for (size_t r = 0; r < resid.rows; ++r)
      if (!f.is_zero(resid.at(r, k))) {
        nonzero = true;
        break;
      }
    if (!nonzero) continue;
    Witness<F> w;
    w.i = i;
    w.j = j;
    w.k = k;
    w.sub = sub;
    w.residual.reserve(resid.rows);
    for (size_t r = 0; r < resid.rows; ++r) w.residual.push_back(resid.at(r, k));
    report.witnesses.push_back(std::move(w));
  }
}

template <class F>
Vec<F> mat_col(const Matrix<F>& m, size_t k) {
  Vec<F> out;
  out.reserve(m.rows);
  for (size_t r = 0; r < m.rows; ++r) out.push_back(m.at(r, k));
  return out;
}

} // namespace detail

/// Verifies the defining identities of a representation bundle, and for
/// action kinds also the carrier product law and the compatibility
/// identities. Witness indices (i, j, k): for matrix identities i, j index
/// the algebra basis and k the carrier column; for compatibility identities
/// i indexes the algebra basis and j, k the carrier basis; for carrier laws
/// all indices are carrier indices.
template <class F>
CheckReport<F> check_representation(const RepBundle<F>& rep,
                                    const CheckOptions& opts = {}) {
  rep.validate();
  const F& f = rep.field;
  const size_t n = rep.algebra.dim;
  const size_t m = rep.carrier_dim;
  CheckReport<F> report;
  report.law = rep_kind_name(rep.kind);
  report.witness_cap = opts.witness_cap;

  const StructureTensor<F>& mul = rep.algebra.product("mul");
  Vec<F> cij;

  auto pair_scan = [&](const char* sub, auto&& resid_fn) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        mul.slice_into(i, j, cij);
        Matrix<F> resid = resid_fn(i, j, cij);
        ++report.triples_checked;
        detail::record_matrix_residual(f, resid, i, j, sub, report);
      }
  };

  if (rep.kind == RepKind::mlie_rep || rep.kind == RepKind::mlie_action) {
    const auto& P = rep.map("pi");
    pair_scan("rep_pi", [&](size_t i, size_t j, const Vec<F>& c) {
      Matrix<F> r = detail::combine_maps(f, P, c, m);
      r = mat_add(f, r, matmul(f, P[i], P[j]));
      return mat_add(f, r, matmul(f, P[j], P[i]));
    });
  } else if (rep.kind == RepKind::anti_leib_rep) {
    const auto& L = rep.map("l");
    const auto& R = rep.map("r");
    pair_scan("rep_l", [&](size_t i, size_t j, const Vec<F>& c) {
      Matrix<F> r = detail::combine_maps(f, L, c, m);
      r = mat_add(f, r, matmul(f, L[i], L[j]));
      return mat_add(f, r, matmul(f, L[j], L[i]));
    });
    pair_scan("rep_lr", [&](size_t i, size_t j, const Vec<F>& c) {
      Matrix<F> r = detail::combine_maps(f, R, c, m);
      r = mat_add(f, r, matmul(f, L[i], R[j]));
      return mat_add(f, r, matmul(f, R[j], L[i]));
    });
    pair_scan("rep_rr_collapse", [&](size_t i, size_t j, const Vec<F>&) {
      // r(y) l(x) = r(y) r(x), quantified over pairs (x, y) = (e_i, e_j).
      return matmul(f, R[j], mat_sub(f, L[i], R[i]));
    });
    // Redundant given rep_lr and rep_rr_collapse; kept as a cross-check.
    pair_scan("rep_lr_alt", [&](size_t i, size_t j, const Vec<F>& c) {
      Matrix<F> r = detail::combine_maps(f, R, c, m);
      r = mat_add(f, r, matmul(f, L[i], R[j]));
      return mat_add(f, r, matmul(f, R[j], R[i]));
    });
  } else {
    const auto& Rho = rep.map("rho");
    const auto& Mu = rep.map("mu");
    pair_scan("rep_rho", [&](size_t i, size_t j, const Vec<F>& c) {
      Matrix<F> r = detail::combine_maps(f, Rho, c, m);
      return mat_add(f, r, matmul(f, Rho[i], Rho[j]));
    });
    pair_scan("rep_mu", [&](size_t i, size_t j, const Vec<F>& c) {
      Matrix<F> r = detail::combine_maps(f, Mu, c, m);
      return mat_add(f, r, matmul(f, Mu[j], Mu[i]));
    });
    pair_scan("rep_mu_rho", [&](size_t i, size_t j, const Vec<F>&) {
      return mat_add(f, matmul(f, Mu[i], Rho[j]), matmul(f, Rho[j], Mu[i]));
    });
  }

  if (rep_kind_is_action(rep.kind)) {
    const StructureTensor<F>& cp = *rep.carrier_product;
    // Carrier product law.
    {
      LawTensors<F> ts;
      ts.a = &cp;
      LawId carrier_law = rep.kind == RepKind::mlie_action
                               ? LawId::mock_lie
                               : LawId::anti_associativity;
      LawScratch<F> sc;
      for (SubId sub : law_subs(carrier_law, false)) {
        const size_t kmax = sub_arity(sub) == 2 ? 1 : m;
        for (size_t i = 0; i < m; ++i)
          for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < kmax; ++k) {
              sub_residual(f, sub, ts, i, j, k, sc);
              ++report.triples_checked;
              if (!is_zero_vec(f, sc.out))
                report.witnesses.push_back(Witness<F>{
                    i, j, sub_arity(sub) == 2 ? no_index : k,
                    std::string("carrier_") + sub_name(sub), sc.out});
            }
      }
    }
    // Compatibility identities, quantified over (x, a, b) = (e_i, v_j, v_k).
    Vec<F> s1, s2, out;
    auto triple_scan = [&](const char* sub, auto&& resid_fn) {
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
          for (size_t k = 0; k < m; ++k) {
            resid_fn(i, j, k, out);
            ++report.triples_checked;
            if (!is_zero_vec(f, out))
              report.witnesses.push_back(Witness<F>{i, j, k, sub, out});
          }
    };
    if (rep.kind == RepKind::mlie_action) {
      const auto& P = rep.map("pi");
      triple_scan("act_circ", [&](size_t i, size_t j, size_t k, Vec<F>& o) {
        // pi(x)(a o b) + a o (pi(x) b) + b o (pi(x) a)
        cp.slice_into(j, k, s1);
        matvec_into(f, P[i], s1, o);
        s1 = detail::mat_col(P[i], k);
        cp.lmul_basis_acc(f, j, s1, o);
        s1 = detail::mat_col(P[i], j);
        cp.lmul_basis_acc(f, k, s1, o);
      });
    } else {
      const auto& Rho = rep.map("rho");
      const auto& Mu = rep.map("mu");
      triple_scan("act_rho", [&](size_t i, size_t j, size_t k, Vec<F>& o) {
        // rho(x)(a * b) + (rho(x) a) * b
        cp.slice_into(j, k, s1);
        matvec_into(f, Rho[i], s1, o);
        s1 = detail::mat_col(Rho[i], j);
        cp.rmul_basis_acc(f, s1, k, o);
      });
      triple_scan("act_mu", [&](size_t i, size_t j, size_t k, Vec<F>& o) {
        // mu(x)(a * b) + a * (mu(x) b)
        cp.slice_into(j, k, s1);
        matvec_into(f, Mu[i], s1, o);
        s1 = detail::mat_col(Mu[i], k);
        cp.lmul_basis_acc(f, j, s1, o);
      });
      triple_scan("act_mu_rho", [&](size_t i, size_t j, size_t k, Vec<F>& o) {
        // (mu(x) a) * b + a * (rho(x) b)
        s1 = detail::mat_col(Mu[i], j);
        cp.rmul_basis_into(f, s1, k, o);
        s1 = detail::mat_col(Rho[i], k);
        cp.lmul_basis_acc(f, j, s1, o);
      });
    }
  }

  sort_and_cap_witnesses(report);
  return report;
}

template <class F>
bool representation_holds(const RepBundle<F>& rep) {
  return check_representation(rep).pass;
}

// ---------------------------------------------------------------------------
// Subspace closure and ideal checks.
// ---------------------------------------------------------------------------

/// Checks that products of subspace basis vectors land back in the subspace.
/// Witness (i, j, 0): subspace basis pair whose product escapes; the residual
/// is the off-subspace remainder in ambient coordinates.
template <class F>
CheckReport<F> span_closure_check(const F& f, const StructureTensor<F>& t,
                                  const Subspace<F>& s,
                                  const CheckOptions& opts = {}) {
  if (t.dim() != s.ambient_dim())
    throw value_error("subspace ambient dimension does not match tensor");
  CheckReport<F> report;
  report.law = "span_closure";
  report.witness_cap = opts.witness_cap;
  const size_t d = s.dim();
  Vec<F> prod, u, v;
  for (size_t i = 0; i < d; ++i) {
    u = s.basis().row(i);
    for (size_t j = 0; j < d; ++j) {
      v = s.basis().row(j);
      t.eval_into(f, u, v, prod);
      s.reduce_in_place(f, prod);
      ++report.triples_checked;
      if (!is_zero_vec(f, prod))
        report.witnesses.push_back(
            Witness<F>{i, j, no_index, "span_closure", prod});
    }
  }
  sort_and_cap_witnesses(report);
  return report;
}

enum class IdealSide { left, right, two_sided };

/// Checks A*I (left), I*A (right), or both stay inside the subspace I.
/// Witness (i, j, 0): i is the ambient basis index, j the subspace basis
/// index; the residual is the off-subspace remainder.
template <class F>
CheckReport<F> ideal_check(const F& f, const StructureTensor<F>& t,
                           const Subspace<F>& s, IdealSide side,
                           const CheckOptions& opts = {}) {
  if (t.dim() != s.ambient_dim())
    throw value_error("subspace ambient dimension does not match tensor");
  CheckReport<F> report;
  report.law = side == IdealSide::left    ? "ideal_left"
                   : side == IdealSide::right ? "ideal_right"
                                              : "ideal_two_sided";
  report.witness_cap = opts.witness_cap;
  const size_t n = t.dim();
  const size_t d = s.dim();
  Vec<F> prod, v;
  auto scan = [&](bool algebra_on_left, const char* sub) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < d; ++j) {
        v = s.basis().row(j);
        if (algebra_on_left)
          t.lmul_basis_into(f, i, v, prod);
        else
          t.rmul_basis_into(f, v, i, prod);
        s.reduce_in_place(f, prod);
        ++report.triples_checked;
        if (!is_zero_vec(f, prod))
          report.witnesses.push_back(Witness<F>{i, j, no_index, sub, prod});
      }
  };
  if (side != IdealSide::right) scan(true, "ideal_left");
  if (side != IdealSide::left) scan(false, "ideal_right");
  sort_and_cap_witnesses(report);
  return report;
}

} // namespace antileib
