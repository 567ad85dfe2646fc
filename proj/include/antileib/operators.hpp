#pragma once

#include <string>
#include <utility>
#include <vector>

#include "antileib/bundle.hpp"
#include "antileib/errors.hpp"
#include "antileib/functors.hpp"
#include "antileib/laws.hpp"

namespace antileib {

/// Reusable buffers for the operator scans. Exhaustive searches call the
/// predicates millions of times; after warmup no scan allocates.
template <class F>
struct OpScratch {
  Vec<F> ka, kb, r, t1, t2, t3, t4;
  Matrix<F> m1;
};

namespace detail {

template <class F>
void col_into(const Matrix<F>& m, size_t k, Vec<F>& out) {
  out.resize(m.rows, m.a.empty() ? typename F::Elem{} : m.a[0]);
  for (size_t r = 0; r < m.rows; ++r) out[r] = m.at(r, k);
}

/// out := combine coeffs over maps, applied to carrier basis column b.
template <class F>
void combined_map_col(const F& f, const std::vector<Matrix<F>>& ms,
                      const Vec<F>& coeffs, size_t b, Vec<F>& out) {
  const size_t m = ms.empty() ? 0 : ms[0].rows;
  out.assign(m, f.zero());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (f.is_zero(coeffs[i])) continue;
    for (size_t r = 0; r < m; ++r)
      out[r] = f.add(out[r], f.mul(coeffs[i], ms[i].at(r, b)));
  }
}

// Each *_scan walks its identity's basis domain, invokes
// sink(i, j, sub, residual) on every nonzero residual, stops when the sink
// returns false, and returns the number of residuals evaluated.

/// K(u_a) o K(u_b) = K(pi(K u_a) u_b) over carrier basis pairs (a, b).
template <class F, class Sink>
size_t emten_mlie_scan(const F& f, const StructureTensor<F>& mul,
                       const std::vector<Matrix<F>>& P, const Matrix<F>& K,
                       OpScratch<F>& sc, Sink&& sink) {
  const size_t m = K.cols;
  size_t count = 0;
  for (size_t a = 0; a < m; ++a) {
    col_into(K, a, sc.ka);
    if (is_zero_vec(f, sc.ka)) {
      // Both sides vanish when K u_a = 0.
      count += m;
      continue;
    }
    for (size_t b = 0; b < m; ++b) {
      col_into(K, b, sc.kb);
      mul.eval_into(f, sc.ka, sc.kb, sc.r);
      combined_map_col(f, P, sc.ka, b, sc.t1);   // pi(K u_a) u_b
      matvec_into(f, K, sc.t1, sc.t2);           // K(...)
      sub_into(f, sc.r, sc.t2);
      ++count;
      if (!is_zero_vec(f, sc.r) && !sink(a, b, "emten", sc.r)) return count;
    }
  }
  return count;
}

/// Both anti-associative equalities: K(u_a) * K(u_b) = K(rho(K u_a) u_b)
/// and K(u_a) * K(u_b) = K(mu(K u_b) u_a).
template <class F, class Sink>
size_t emten_aa_scan(const F& f, const StructureTensor<F>& mul,
                     const std::vector<Matrix<F>>& Rho,
                     const std::vector<Matrix<F>>& Mu, const Matrix<F>& K,
                     OpScratch<F>& sc, Sink&& sink) {
  const size_t m = K.cols;
  size_t count = 0;
  for (size_t a = 0; a < m; ++a) {
    col_into(K, a, sc.ka);
    for (size_t b = 0; b < m; ++b) {
      col_into(K, b, sc.kb);
      mul.eval_into(f, sc.ka, sc.kb, sc.t3);
      combined_map_col(f, Rho, sc.ka, b, sc.t1);
      matvec_into(f, K, sc.t1, sc.t2);
      sc.r = sc.t3;
      sub_into(f, sc.r, sc.t2);
      ++count;
      if (!is_zero_vec(f, sc.r) && !sink(a, b, "emten_rho", sc.r))
        return count;
      combined_map_col(f, Mu, sc.kb, a, sc.t1);
      matvec_into(f, K, sc.t1, sc.t2);
      sc.r = std::move(sc.t3);
      sub_into(f, sc.r, sc.t2);
      ++count;
      if (!is_zero_vec(f, sc.r) && !sink(a, b, "emten_mu", sc.r)) return count;
    }
  }
  return count;
}

/// K(e_i) o K(e_j) = K(K(e_i) o e_j) = K(e_i o K(e_j)) over basis pairs.
template <class F, class Sink>
size_t averaging_scan(const F& f, const StructureTensor<F>& mul,
                      const Matrix<F>& K, OpScratch<F>& sc, Sink&& sink) {
  const size_t n = K.cols;
  size_t count = 0;
  for (size_t i = 0; i < n; ++i) {
    col_into(K, i, sc.ka);
    for (size_t j = 0; j < n; ++j) {
      col_into(K, j, sc.kb);
      mul.eval_into(f, sc.ka, sc.kb, sc.t3);
      mul.rmul_basis_into(f, sc.ka, j, sc.t1);   // K(e_i) o e_j
      matvec_into(f, K, sc.t1, sc.t2);
      sc.r = sc.t3;
      sub_into(f, sc.r, sc.t2);
      ++count;
      if (!is_zero_vec(f, sc.r) && !sink(i, j, "avg_left", sc.r)) return count;
      mul.lmul_basis_into(f, i, sc.kb, sc.t1);   // e_i o K(e_j)
      matvec_into(f, K, sc.t1, sc.t2);
      sc.r = std::move(sc.t3);
      sub_into(f, sc.r, sc.t2);
      ++count;
      if (!is_zero_vec(f, sc.r) && !sink(i, j, "avg_right", sc.r))
        return count;
    }
  }
  return count;
}

/// H(a o_B b) = H(a) o_A H(b) over carrier basis pairs.
template <class F, class Sink>
size_t morphism_scan(const F& f, const StructureTensor<F>& mul_a,
                     const StructureTensor<F>& cp, const Matrix<F>& H,
                     OpScratch<F>& sc, Sink&& sink) {
  const size_t m = H.cols;
  size_t count = 0;
  for (size_t a = 0; a < m; ++a) {
    col_into(H, a, sc.ka);
    for (size_t b = 0; b < m; ++b) {
      col_into(H, b, sc.kb);
      cp.slice_into(a, b, sc.t1);
      matvec_into(f, H, sc.t1, sc.r);
      mul_a.eval_into(f, sc.ka, sc.kb, sc.t2);
      sub_into(f, sc.r, sc.t2);
      ++count;
      if (!is_zero_vec(f, sc.r) && !sink(a, b, "morphism", sc.r))
        return count;
    }
  }
  return count;
}

/// N(e_i) . N(e_j) = N( N(e_i) . e_j + e_i . N(e_j) - N(e_i . e_j) ).
template <class F, class Sink>
size_t nijenhuis_scan(const F& f, const StructureTensor<F>& mul,
                      const Matrix<F>& N, OpScratch<F>& sc, Sink&& sink) {
  const size_t n = N.cols;
  size_t count = 0;
  for (size_t i = 0; i < n; ++i) {
    col_into(N, i, sc.ka);
    for (size_t j = 0; j < n; ++j) {
      col_into(N, j, sc.kb);
      mul.eval_into(f, sc.ka, sc.kb, sc.r);
      mul.rmul_basis_into(f, sc.ka, j, sc.t1);
      mul.lmul_basis_acc(f, i, sc.kb, sc.t1);
      mul.slice_into(i, j, sc.t2);
      matvec_into(f, N, sc.t2, sc.t3);
      sub_into(f, sc.t1, sc.t3);
      matvec_into(f, N, sc.t1, sc.t4);
      sub_into(f, sc.r, sc.t4);
      ++count;
      if (!is_zero_vec(f, sc.r) && !sink(i, j, "nijenhuis", sc.r))
        return count;
    }
  }
  return count;
}

template <class F>
void check_map_dims(const LinearMap<F>& K, size_t rows, size_t cols,
                    const char* what) {
  if (K.mat.rows != rows || K.mat.cols != cols)
    throw value_error(std::string(what) + ": map has shape " +
                      std::to_string(K.mat.rows) + "x" +
                      std::to_string(K.mat.cols) + ", expected " +
                      std::to_string(rows) + "x" + std::to_string(cols));
}

template <class F>
auto collecting_sink(CheckReport<F>& report) {
  return [&report](size_t i, size_t j, const char* sub, const Vec<F>& r) {
    report.witnesses.push_back(Witness<F>{i, j, no_index, sub, r});
    return true;
  };
}

struct FalseSink {
  bool* failed;
  template <class V>
  bool operator()(size_t, size_t, const char*, const V&) const {
    *failed = true;
    return false;
  }
};

} // namespace detail

/// Checks the embedding-tensor identity of K : carrier -> algebra against a
/// representation. Mock-Lie kinds check the single identity; anti-associative
/// kinds check both equalities and report which one fails.
template <class F>
CheckReport<F> is_embedding_tensor(const LinearMap<F>& K,
                                   const RepBundle<F>& rep,
                                   const CheckOptions& opts = {}) {
  rep.validate();
  detail::check_map_dims(K, rep.algebra.dim, rep.carrier_dim,
                         "is_embedding_tensor");
  CheckReport<F> report;
  report.law = "embedding_tensor";
  report.witness_cap = opts.witness_cap;
  OpScratch<F> sc;
  const F& f = rep.field;
  const StructureTensor<F>& mul = rep.algebra.product("mul");
  auto sink = detail::collecting_sink(report);
  if (rep.kind == RepKind::mlie_rep || rep.kind == RepKind::mlie_action)
    report.triples_checked =
        detail::emten_mlie_scan(f, mul, rep.map("pi"), K.mat, sc, sink);
  else
    report.triples_checked = detail::emten_aa_scan(
        f, mul, rep.map("rho"), rep.map("mu"), K.mat, sc, sink);
  sort_and_cap_witnesses(report);
  return report;
}

/// Early-exit form of the mock-Lie embedding-tensor identity.
template <class F>
bool embedding_tensor_holds_mlie(const F& f, const StructureTensor<F>& mul,
                                 const std::vector<Matrix<F>>& P,
                                 const Matrix<F>& K, OpScratch<F>& sc) {
  bool failed = false;
  detail::emten_mlie_scan(f, mul, P, K, sc, detail::FalseSink{&failed});
  return !failed;
}

/// Checks both equalities of the averaging chain for a square map K on a
/// single-product bundle.
template <class F>
CheckReport<F> is_averaging(const LinearMap<F>& K, const AlgebraBundle<F>& alg,
                            const CheckOptions& opts = {}) {
  alg.validate();
  detail::check_map_dims(K, alg.dim, alg.dim, "is_averaging");
  CheckReport<F> report;
  report.law = "averaging";
  report.witness_cap = opts.witness_cap;
  OpScratch<F> sc;
  auto sink = detail::collecting_sink(report);
  report.triples_checked =
      detail::averaging_scan(alg.field, alg.product("mul"), K.mat, sc, sink);
  sort_and_cap_witnesses(report);
  return report;
}

/// Checks the embedding-tensor identity together with the algebra-morphism
/// identity for a map H : carrier -> algebra over an action. The report's
/// sub tags separate the two halves ("emten*" vs "morphism").
template <class F>
CheckReport<F> is_homomorphic_embedding_tensor(const LinearMap<F>& H,
                                               const RepBundle<F>& act,
                                               const CheckOptions& opts = {}) {
  act.validate();
  if (!rep_kind_is_action(act.kind))
    throw value_error("is_homomorphic_embedding_tensor requires an action");
  detail::check_map_dims(H, act.algebra.dim, act.carrier_dim,
                         "is_homomorphic_embedding_tensor");
  CheckReport<F> report;
  report.law = "homomorphic_embedding_tensor";
  report.witness_cap = opts.witness_cap;
  OpScratch<F> sc;
  const F& f = act.field;
  const StructureTensor<F>& mul = act.algebra.product("mul");
  const StructureTensor<F>& cp = *act.carrier_product;
  auto sink = detail::collecting_sink(report);
  if (act.kind == RepKind::mlie_action)
    report.triples_checked =
        detail::emten_mlie_scan(f, mul, act.map("pi"), H.mat, sc, sink);
  else
    report.triples_checked = detail::emten_aa_scan(
        f, mul, act.map("rho"), act.map("mu"), H.mat, sc, sink);
  report.triples_checked +=
      detail::morphism_scan(f, mul, cp, H.mat, sc, sink);
  sort_and_cap_witnesses(report);
  return report;
}

/// Checks the Nijenhuis identity for a square map on a single-product bundle.
template <class F>
CheckReport<F> is_nijenhuis(const LinearMap<F>& N, const AlgebraBundle<F>& alg,
                            const CheckOptions& opts = {}) {
  alg.validate();
  detail::check_map_dims(N, alg.dim, alg.dim, "is_nijenhuis");
  CheckReport<F> report;
  report.law = "nijenhuis";
  report.witness_cap = opts.witness_cap;
  OpScratch<F> sc;
  auto sink = detail::collecting_sink(report);
  report.triples_checked =
      detail::nijenhuis_scan(alg.field, alg.product("mul"), N.mat, sc, sink);
  sort_and_cap_witnesses(report);
  return report;
}

/// Early-exit form of the Nijenhuis identity.
template <class F>
bool nijenhuis_holds(const F& f, const StructureTensor<F>& mul,
                     const Matrix<F>& N, OpScratch<F>& sc) {
  bool failed = false;
  detail::nijenhuis_scan(f, mul, N, sc, detail::FalseSink{&failed});
  return !failed;
}

/// Canonical spanning vectors of the graph {K(u) + u} inside the
/// [algebra | carrier] block space.
template <class F>
Subspace<F> graph_space(const F& f, const Matrix<F>& K) {
  const size_t n = K.rows;
  const size_t m = K.cols;
  std::vector<Vec<F>> span;
  span.reserve(m);
  for (size_t a = 0; a < m; ++a) {
    Vec<F> v = zero_vec(f, n + m);
    for (size_t r = 0; r < n; ++r) v[r] = K.at(r, a);
    v[n + a] = f.one();
    span.push_back(std::move(v));
  }
  return Subspace<F>(f, n + m, span);
}

/// Product-closure check of the graph of K inside the hemisemidirect bundle.
/// Witness indices refer to the canonical (echelonized) basis of the graph.
template <class F>
CheckReport<F> graph_subalgebra_check(const LinearMap<F>& K,
                                      const RepBundle<F>& rep,
                                      const CheckOptions& opts = {}) {
  rep.validate();
  if (rep.kind != RepKind::mlie_rep)
    throw value_error("graph_subalgebra_check requires a plain mock-Lie "
                      "representation");
  detail::check_map_dims(K, rep.algebra.dim, rep.carrier_dim,
                         "graph_subalgebra_check");
  DeriveOptions force_opts;
  force_opts.force = true;
  auto hemi = hemisemidirect(rep, force_opts);
  auto gr = graph_space(rep.field, K.mat);
  auto report =
      span_closure_check(rep.field, hemi.product("mul"), gr, opts);
  report.law = "graph_subalgebra";
  return report;
}

/// Early-exit graph closure over a prebuilt hemisemidirect product tensor.
template <class F>
bool graph_closed(const F& f, const StructureTensor<F>& hemi,
                  const Matrix<F>& K, OpScratch<F>& sc) {
  auto gr = graph_space(f, K);
  const size_t d = gr.dim();
  for (size_t i = 0; i < d; ++i) {
    sc.ka = gr.basis().row(i);
    for (size_t j = 0; j < d; ++j) {
      sc.kb = gr.basis().row(j);
      hemi.eval_into(f, sc.ka, sc.kb, sc.r);
      gr.reduce_in_place(f, sc.r);
      if (!is_zero_vec(f, sc.r)) return false;
    }
  }
  return true;
}

template <class F>
struct LiftedNijenhuis {
  AlgebraBundle<F> hemi;
  LinearMap<F> lift;
};

/// Block lift of K : carrier -> algebra to the hemisemidirect space,
/// N(x + u) = K(u), returned together with the hemisemidirect bundle.
template <class F>
LiftedNijenhuis<F> lift_nijenhuis(const LinearMap<F>& K,
                                  const RepBundle<F>& rep,
                                  const DeriveOptions& opts = {}) {
  rep.validate();
  if (rep.kind != RepKind::mlie_rep)
    throw value_error("lift_nijenhuis requires a plain mock-Lie "
                      "representation");
  detail::check_map_dims(K, rep.algebra.dim, rep.carrier_dim,
                         "lift_nijenhuis");
  auto hemi = hemisemidirect(rep, opts);
  const F& f = rep.field;
  const size_t n = rep.algebra.dim;
  const size_t m = rep.carrier_dim;
  LinearMap<F> lift(f, Matrix<F>::zero(f, n + m, n + m));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < m; ++c) lift.mat.at(r, n + c) = K.mat.at(r, c);
  return LiftedNijenhuis<F>{std::move(hemi), std::move(lift)};
}

/// Assembles the lifted matrix alone; used by scans that prebuild the
/// hemisemidirect tensor once.
template <class F>
void lift_matrix_into(const F& f, const Matrix<F>& K, Matrix<F>& out) {
  const size_t n = K.rows;
  const size_t m = K.cols;
  if (out.rows != n + m || out.cols != n + m)
    out = Matrix<F>::zero(f, n + m, n + m);
  for (auto& e : out.a) e = f.zero();
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < m; ++c) out.at(r, n + c) = K.at(r, c);
}

/// Crossed-module check for a mock-Lie action and a boundary map
/// bdry : carrier -> algebra: equivariance bdry(pi(x) a) = x o bdry(a),
/// self-action pi(bdry(a)) b = a o b, and bdry a morphism of products.
/// A full pass is cross-checked against is_homomorphic_embedding_tensor,
/// which it must imply.
template <class F>
CheckReport<F> is_crossed_module(const RepBundle<F>& act,
                                 const LinearMap<F>& bdry,
                                 const CheckOptions& opts = {}) {
  act.validate();
  if (act.kind != RepKind::mlie_action)
    throw value_error("is_crossed_module requires a mock-Lie action");
  detail::check_map_dims(bdry, act.algebra.dim, act.carrier_dim,
                         "is_crossed_module");
  const F& f = act.field;
  const size_t n = act.algebra.dim;
  const size_t m = act.carrier_dim;
  const StructureTensor<F>& mul = act.algebra.product("mul");
  const StructureTensor<F>& cp = *act.carrier_product;
  const auto& P = act.map("pi");
  CheckReport<F> report;
  report.law = "crossed_module";
  report.witness_cap = opts.witness_cap;
  OpScratch<F> sc;
  // Equivariance over (x, a) = (e_i, v_a).
  for (size_t i = 0; i < n; ++i)
    for (size_t a = 0; a < m; ++a) {
      detail::col_into(P[i], a, sc.t1);
      matvec_into(f, bdry.mat, sc.t1, sc.r);     // bdry(pi(e_i) v_a)
      detail::col_into(bdry.mat, a, sc.t2);
      mul.lmul_basis_into(f, i, sc.t2, sc.t3);   // e_i o bdry(v_a)
      sub_into(f, sc.r, sc.t3);
      ++report.triples_checked;
      if (!is_zero_vec(f, sc.r))
        report.witnesses.push_back(
            Witness<F>{i, a, no_index, "equivariance", sc.r});
    }
  // Self-action and morphism over carrier pairs (a, b).
  for (size_t a = 0; a < m; ++a) {
    detail::col_into(bdry.mat, a, sc.ka);
    for (size_t b = 0; b < m; ++b) {
      detail::combined_map_col(f, P, sc.ka, b, sc.r);  // pi(bdry(v_a)) v_b
      cp.slice_into(a, b, sc.t1);
      sub_into(f, sc.r, sc.t1);
      ++report.triples_checked;
      if (!is_zero_vec(f, sc.r))
        report.witnesses.push_back(
            Witness<F>{a, b, no_index, "self_action", sc.r});
    }
  }
  auto sink = detail::collecting_sink(report);
  report.triples_checked +=
      detail::morphism_scan(f, mul, cp, bdry.mat, sc, sink);
  sort_and_cap_witnesses(report);
  if (report.pass) {
    auto homo = is_homomorphic_embedding_tensor(bdry, act, opts);
    if (!homo.pass)
      throw certification_error(
          "is_crossed_module: pass did not imply the homomorphic "
          "embedding-tensor identity");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Induced structures.
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
void require_operator(const CheckReport<F>& report, bool force,
                      const std::string& what) {
  if (force || report.pass) return;
  throw precondition_error(what + ": map fails " + report.law +
                           first_witness_note(report));
}

} // namespace detail

/// Bracket {u,v} = pi(K u) v on the carrier of a mock-Lie representation.
template <class F>
AlgebraBundle<F> induced_bracket(const LinearMap<F>& K, const RepBundle<F>& rep,
                                 const DeriveOptions& opts = {}) {
  rep.validate();
  if (rep.kind != RepKind::mlie_rep && rep.kind != RepKind::mlie_action)
    throw value_error("induced_bracket requires a mock-Lie representation");
  detail::require_operator(is_embedding_tensor(K, rep), opts.force,
                           "induced_bracket");
  const F& f = rep.field;
  const size_t m = rep.carrier_dim;
  const auto& P = rep.map("pi");
  StructureTensor<F> t(f, m);
  Vec<F> ka, col;
  for (size_t a = 0; a < m; ++a) {
    detail::col_into(K.mat, a, ka);
    for (size_t b = 0; b < m; ++b) {
      detail::combined_map_col(f, P, ka, b, col);
      for (size_t k = 0; k < m; ++k) t.at(a, b, k) = col[k];
    }
  }
  auto bundle = make_algebra(f, rep.carrier_labels, std::move(t),
                             AlgebraClass::anti_leibniz_left);
  detail::certify_law(bundle, LawId::anti_leibniz_left, opts.force,
                      "induced_bracket");
  return bundle;
}

/// Representation of the induced bracket algebra back on the original
/// algebra space: l(u) y = K(u) o y and r(v) x = x o K(v) - K(pi(x) v).
template <class F>
RepBundle<F> induced_rep_piLR(const LinearMap<F>& K, const RepBundle<F>& rep,
                              const DeriveOptions& opts = {}) {
  rep.validate();
  if (rep.kind != RepKind::mlie_rep && rep.kind != RepKind::mlie_action)
    throw value_error("induced_rep_piLR requires a mock-Lie representation");
  detail::require_operator(is_embedding_tensor(K, rep), opts.force,
                           "induced_rep_piLR");
  const F& f = rep.field;
  const size_t n = rep.algebra.dim;
  const size_t m = rep.carrier_dim;
  const StructureTensor<F>& mul = rep.algebra.product("mul");
  const auto& P = rep.map("pi");
  RepBundle<F> out(f, induced_bracket(K, rep, opts));
  out.kind = RepKind::anti_leib_rep;
  out.carrier_dim = n;
  out.carrier_labels = rep.algebra.labels;
  std::vector<Matrix<F>> ls, rs;
  Vec<F> ka, col, pcol, kp;
  for (size_t a = 0; a < m; ++a) {
    detail::col_into(K.mat, a, ka);
    Matrix<F> lm = Matrix<F>::zero(f, n, n);
    Matrix<F> rm = Matrix<F>::zero(f, n, n);
    for (size_t x = 0; x < n; ++x) {
      mul.rmul_basis_into(f, ka, x, col);        // K(v_a) o e_x
      for (size_t r = 0; r < n; ++r) lm.at(r, x) = col[r];
      mul.lmul_basis_into(f, x, ka, col);        // e_x o K(v_a)
      detail::col_into(P[x], a, pcol);           // pi(e_x) v_a
      matvec_into(f, K.mat, pcol, kp);
      for (size_t r = 0; r < n; ++r)
        rm.at(r, x) = f.sub(col[r], kp[r]);
    }
    ls.push_back(std::move(lm));
    rs.push_back(std::move(rm));
  }
  out.maps.emplace("l", std::move(ls));
  out.maps.emplace("r", std::move(rs));
  out.validate();
  detail::certify_rep(out, opts.force, "induced_rep_piLR");
  return out;
}

/// Dialgebra on the carrier of an anti-associative representation:
/// u |> v = rho(K u) v (product "right"), u <| v = mu(K v) u ("left").
template <class F>
AlgebraBundle<F> induced_dialgebra(const LinearMap<F>& K,
                                   const RepBundle<F>& rep,
                                   const DeriveOptions& opts = {}) {
  rep.validate();
  if (rep.kind != RepKind::anti_assoc_rep &&
      rep.kind != RepKind::anti_assoc_action)
    throw value_error(
        "induced_dialgebra requires an anti-associative representation");
  detail::require_operator(is_embedding_tensor(K, rep), opts.force,
                           "induced_dialgebra");
  const F& f = rep.field;
  const size_t m = rep.carrier_dim;
  const auto& Rho = rep.map("rho");
  const auto& Mu = rep.map("mu");
  StructureTensor<F> right(f, m), left(f, m);
  Vec<F> ka, col;
  for (size_t a = 0; a < m; ++a) {
    detail::col_into(K.mat, a, ka);
    for (size_t b = 0; b < m; ++b) {
      detail::combined_map_col(f, Rho, ka, b, col);
      for (size_t k = 0; k < m; ++k) right.at(a, b, k) = col[k];
      detail::combined_map_col(f, Mu, ka, b, col);  // mu(K v_a) v_b
      for (size_t k = 0; k < m; ++k) left.at(b, a, k) = col[k];
    }
  }
  AlgebraBundle<F> bundle(f);
  bundle.dim = m;
  bundle.labels = rep.carrier_labels;
  bundle.products.emplace("left", std::move(left));
  bundle.products.emplace("right", std::move(right));
  bundle.claimed = AlgebraClass::anti_assoc_dialgebra;
  bundle.validate();
  detail::certify_law(bundle, LawId::dialg_all, opts.force,
                      "induced_dialgebra");
  return bundle;
}

/// Trialgebra on the carrier of a mock-Lie action: bracket {a,b} = pi(H a) b,
/// circle = the carrier product.
template <class F>
AlgebraBundle<F> induced_trialgebra(const LinearMap<F>& H,
                                    const RepBundle<F>& act,
                                    const DeriveOptions& opts = {}) {
  act.validate();
  if (act.kind != RepKind::mlie_action)
    throw value_error("induced_trialgebra requires a mock-Lie action");
  detail::require_operator(is_homomorphic_embedding_tensor(H, act), opts.force,
                           "induced_trialgebra");
  const F& f = act.field;
  const size_t m = act.carrier_dim;
  const auto& P = act.map("pi");
  StructureTensor<F> bracket(f, m);
  Vec<F> ha, col;
  for (size_t a = 0; a < m; ++a) {
    detail::col_into(H.mat, a, ha);
    for (size_t b = 0; b < m; ++b) {
      detail::combined_map_col(f, P, ha, b, col);
      for (size_t k = 0; k < m; ++k) bracket.at(a, b, k) = col[k];
    }
  }
  AlgebraBundle<F> bundle(f);
  bundle.dim = m;
  bundle.labels = act.carrier_labels;
  bundle.products.emplace("bracket", std::move(bracket));
  bundle.products.emplace("circ", *act.carrier_product);
  bundle.claimed = AlgebraClass::anti_leibniz_trialgebra;
  bundle.validate();
  detail::certify_law(bundle, LawId::anti_leib_trialg_full, opts.force,
                      "induced_trialgebra");
  return bundle;
}

/// Trialgebra on the carrier of an anti-associative action:
/// a |> b = rho(H a) b ("right"), a <| b = mu(H b) a ("left"), middle = the
/// carrier product.
template <class F>
AlgebraBundle<F> induced_antiassoc_trialgebra(const LinearMap<F>& H,
                                              const RepBundle<F>& act,
                                              const DeriveOptions& opts = {}) {
  act.validate();
  if (act.kind != RepKind::anti_assoc_action)
    throw value_error(
        "induced_antiassoc_trialgebra requires an anti-associative action");
  detail::require_operator(is_homomorphic_embedding_tensor(H, act), opts.force,
                           "induced_antiassoc_trialgebra");
  const F& f = act.field;
  const size_t m = act.carrier_dim;
  const auto& Rho = act.map("rho");
  const auto& Mu = act.map("mu");
  StructureTensor<F> right(f, m), left(f, m);
  Vec<F> ha, col;
  for (size_t a = 0; a < m; ++a) {
    detail::col_into(H.mat, a, ha);
    for (size_t b = 0; b < m; ++b) {
      detail::combined_map_col(f, Rho, ha, b, col);
      for (size_t k = 0; k < m; ++k) right.at(a, b, k) = col[k];
      detail::combined_map_col(f, Mu, ha, b, col);  // mu(H v_a) v_b
      for (size_t k = 0; k < m; ++k) left.at(b, a, k) = col[k];
    }
  }
  AlgebraBundle<F> bundle(f);
  bundle.dim = m;
  bundle.labels = act.carrier_labels;
  bundle.products.emplace("left", std::move(left));
  bundle.products.emplace("middle", *act.carrier_product);
  bundle.products.emplace("right", std::move(right));
  bundle.claimed = AlgebraClass::anti_assoc_trialgebra;
  bundle.validate();
  detail::certify_law(bundle, LawId::trialg_axioms, opts.force,
                      "induced_antiassoc_trialgebra");
  return bundle;
}

/// Sum map pi = rho + mu over the anticommutator algebra; turns
/// anti-associative representations into mock-Lie ones (actions keep an
/// anticommutator carrier product).
template <class F>
RepBundle<F> rep_sum(const RepBundle<F>& rep, const DeriveOptions& opts = {}) {
  rep.validate();
  if (rep.kind != RepKind::anti_assoc_rep &&
      rep.kind != RepKind::anti_assoc_action)
    throw value_error("rep_sum requires an anti-associative representation");
  const F& f = rep.field;
  detail::require_rep(rep, opts.force, "rep_sum");
  DeriveOptions inner = opts;
  inner.force = true;  // anti-associativity was checked by require_rep
  RepBundle<F> out(f, anticommutator(rep.algebra, inner));
  out.kind = rep_kind_is_action(rep.kind) ? RepKind::mlie_action
                                          : RepKind::mlie_rep;
  out.carrier_dim = rep.carrier_dim;
  out.carrier_labels = rep.carrier_labels;
  const auto& Rho = rep.map("rho");
  const auto& Mu = rep.map("mu");
  std::vector<Matrix<F>> pi;
  for (size_t i = 0; i < rep.algebra.dim; ++i)
    pi.push_back(mat_add(f, Rho[i], Mu[i]));
  out.maps.emplace("pi", std::move(pi));
  if (rep_kind_is_action(rep.kind)) {
    const StructureTensor<F>& cp = *rep.carrier_product;
    StructureTensor<F> sym(f, rep.carrier_dim);
    for (size_t i = 0; i < rep.carrier_dim; ++i)
      for (size_t j = 0; j < rep.carrier_dim; ++j)
        for (size_t k = 0; k < rep.carrier_dim; ++k)
          sym.at(i, j, k) = f.add(cp.at(i, j, k), cp.at(j, i, k));
    out.carrier_product = std::move(sym);
  }
  out.validate();
  detail::certify_rep(out, opts.force, "rep_sum");
  return out;
}

} // namespace antileib
