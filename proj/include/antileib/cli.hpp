#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "antileib/functors.hpp"
#include "antileib/operators.hpp"
#include "antileib/workspace.hpp"

namespace antileib {

inline constexpr const char* tool_version = "1.0.0";

/// Flattened command-line request; the binary fills this from argv, tests
/// fill it directly.
struct CliRequest {
  std::string command;              // check | derive | operator | classify
  std::string algebra_id;           // check, operator --algebra
  std::string law;                  // check (kebab or underscore form)
  bool strict_dialgebra = false;
  std::string functor;              // derive
  std::vector<std::string> inputs;  // derive --in
  bool swap_dicommutator = false;
  bool force = false;
  std::string kind;                 // operator
  std::string map_id;
  std::string rep_id;
  std::string induce;               // operator, optional
  int dim = 0;                      // classify
  std::optional<std::uint64_t> prime;
  bool allow_small_characteristic = false;
};

/// Outcome: the report document (stdout), an optional derived document for
/// --out, and the process exit code (0 pass, 1 failed check, 2 bad input).
struct CliResult {
  json report;
  std::optional<json> out_doc;
  int exit_code = 0;
};

namespace detail {

template <class F>
std::vector<std::string> block_labels(const RepBundle<F>& rep) {
  std::vector<std::string> out = rep.algebra.labels;
  for (const auto& l : rep.carrier_labels) out.push_back(l + "_v");
  return out;
}

/// Law report for a derived bundle's claimed class, if it has one.
template <class F>
void append_claimed_law_report(const AlgebraBundle<F>& alg, json& reports) {
  auto law = class_law(alg.claimed);
  if (!law) return;
  auto rep = check_law(alg, *law);
  reports.push_back(report_to_json_multi(alg.field, rep, {alg.labels}));
}

template <class F>
void append_rep_report(const RepBundle<F>& rep, json& reports) {
  auto r = check_representation(rep);
  reports.push_back(
      report_to_json_multi(rep.field, r,
                        {rep.carrier_labels, rep.algebra.labels}));
}

template <class F>
json wrap_algebra_doc(const F& f, const FieldSpec& spec,
                      const AlgebraBundle<F>& alg, const std::string& id) {
  json algebras = json::object();
  algebras[id] = algebra_to_json(alg);
  return make_workspace_doc(field_spec_to_json(spec), std::move(algebras),
                            json::object(), json::object());
}

template <class F>
json wrap_rep_doc(const F& f, const FieldSpec& spec, const RepBundle<F>& rep,
                  const std::string& rep_id, const std::string& alg_id) {
  json algebras = json::object();
  algebras[alg_id] = algebra_to_json(rep.algebra);
  json reps = json::object();
  reps[rep_id] = representation_to_json(rep, alg_id);
  return make_workspace_doc(field_spec_to_json(spec), std::move(algebras),
                            std::move(reps), json::object());
}

inline bool all_reports_pass(const json& reports) {
  for (const auto& r : reports)
    if (r.at("status") != "pass") return false;
  return true;
}

template <class F>
CliResult run_check(const F& f, const FieldSpec&, const Workspace<F>& ws,
                    const CliRequest& req) {
  CliResult res;
  auto law = parse_law(from_kebab(req.law));
  if (!law) throw value_error("unknown law '" + req.law + "'");
  const auto& alg = ws.algebra(req.algebra_id);
  CheckOptions opts;
  opts.strict_dialgebra = req.strict_dialgebra;
  auto report = check_law(alg, *law, opts);
  res.report["reports"] = json::array({
      report_to_json_multi(f, report, {alg.labels})});
  res.exit_code = report.pass ? 0 : 1;
  return res;
}

template <class F>
CliResult run_derive(const F& f, const FieldSpec& spec,
                     const Workspace<F>& ws, const CliRequest& req) {
  CliResult res;
  if (req.inputs.size() != 1)
    throw value_error("derive expects exactly one --in id");
  const std::string& in = req.inputs.front();
  DeriveOptions opts;
  opts.force = req.force;
  opts.swap_convention = req.swap_dicommutator;
  json reports = json::array();
  if (req.functor == "anticommutator") {
    auto out = anticommutator(ws.algebra(in), opts);
    append_claimed_law_report(out, reports);
    res.out_doc = wrap_algebra_doc(f, spec, out, "derived");
  } else if (req.functor == "dicommutator") {
    auto out = anti_dicommutator(ws.algebra(in), opts);
    append_claimed_law_report(out, reports);
    res.out_doc = wrap_algebra_doc(f, spec, out, "derived");
  } else if (req.functor == "collapse") {
    auto out = trialgebra_collapse(ws.algebra(in), opts);
    append_claimed_law_report(out, reports);
    res.out_doc = wrap_algebra_doc(f, spec, out, "derived");
  } else if (req.functor == "semidirect") {
    auto out = semidirect(ws.rep(in), opts);
    append_claimed_law_report(out, reports);
    res.out_doc = wrap_algebra_doc(f, spec, out, "derived");
  } else if (req.functor == "hemisemidirect") {
    auto out = hemisemidirect(ws.rep(in), opts);
    append_claimed_law_report(out, reports);
    res.out_doc = wrap_algebra_doc(f, spec, out, "derived");
  } else if (req.functor == "hemisemidirect-trialgebra") {
    auto out = hemisemidirect_trialgebra(ws.rep(in), opts);
    append_claimed_law_report(out, reports);
    res.out_doc = wrap_algebra_doc(f, spec, out, "derived");
  } else if (req.functor == "dual-rep") {
    auto out = dual_representation(ws.rep(in), opts);
    append_rep_report(out, reports);
    res.out_doc = wrap_rep_doc(f, spec, out, "derived", "base");
  } else if (req.functor == "coadjoint") {
    auto out = coadjoint(ws.algebra(in), opts);
    append_rep_report(out, reports);
    res.out_doc = wrap_rep_doc(f, spec, out, "derived", "base");
  } else if (req.functor == "kernel-quotient") {
    auto out = kernel_and_quotient(ws.algebra(in), opts);
    append_claimed_law_report(out.quotient, reports);
    res.out_doc = wrap_algebra_doc(f, spec, out.quotient, "quotient");
    res.report["kernel_basis"] =
        detail::matrix_to_json(f, out.kernel.basis());
  } else {
    throw value_error("unknown functor '" + req.functor + "'");
  }
  res.report["reports"] = reports;
  res.report["derived"] = *res.out_doc;
  res.exit_code = all_reports_pass(reports) ? 0 : 1;
  return res;
}

template <class F>
CliResult run_operator(const F& f, const FieldSpec& spec,
                       const Workspace<F>& ws, const CliRequest& req) {
  CliResult res;
  const auto& K = ws.map(req.map_id);
  json reports = json::array();
  CheckReport<F> predicate;
  std::vector<std::vector<std::string>> label_sets;
  const RepBundle<F>* rep = nullptr;
  if (!req.rep_id.empty()) rep = &ws.rep(req.rep_id);
  auto need_rep = [&]() -> const RepBundle<F>& {
    if (!rep)
      throw value_error("operator kind '" + req.kind + "' requires --rep");
    return *rep;
  };
  auto need_alg = [&]() -> const AlgebraBundle<F>& {
    if (req.algebra_id.empty())
      throw value_error("operator kind '" + req.kind +
                        "' requires --algebra");
    return ws.algebra(req.algebra_id);
  };
  if (req.kind == "embedding") {
    const auto& r = need_rep();
    predicate = is_embedding_tensor(K, r);
    label_sets = {r.algebra.labels, r.carrier_labels};
  } else if (req.kind == "averaging") {
    const auto& a = need_alg();
    predicate = is_averaging(K, a);
    label_sets = {a.labels};
  } else if (req.kind == "homomorphic") {
    const auto& r = need_rep();
    predicate = is_homomorphic_embedding_tensor(K, r);
    label_sets = {r.algebra.labels, r.carrier_labels};
  } else if (req.kind == "nijenhuis") {
    const auto& a = need_alg();
    predicate = is_nijenhuis(K, a);
    label_sets = {a.labels};
  } else if (req.kind == "graph") {
    const auto& r = need_rep();
    predicate = graph_subalgebra_check(K, r);
    label_sets = {block_labels(r)};
  } else if (req.kind == "crossed-module") {
    const auto& r = need_rep();
    predicate = is_crossed_module(r, K);
    label_sets = {r.algebra.labels, r.carrier_labels};
  } else {
    throw value_error("unknown operator kind '" + req.kind + "'");
  }
  reports.push_back(report_to_json_multi(f, predicate, label_sets));
  if (!req.induce.empty() && predicate.pass) {
    DeriveOptions opts;
    opts.force = req.force;
    if (req.induce == "bracket") {
      auto out = induced_bracket(K, need_rep(), opts);
      append_claimed_law_report(out, reports);
      res.out_doc = wrap_algebra_doc(f, spec, out, "induced");
    } else if (req.induce == "rep") {
      auto out = induced_rep_piLR(K, need_rep(), opts);
      append_rep_report(out, reports);
      res.out_doc = wrap_rep_doc(f, spec, out, "induced", "induced_algebra");
    } else if (req.induce == "dialgebra") {
      auto out = induced_dialgebra(K, need_rep(), opts);
      append_claimed_law_report(out, reports);
      res.out_doc = wrap_algebra_doc(f, spec, out, "induced");
    } else if (req.induce == "trialgebra") {
      auto out = induced_trialgebra(K, need_rep(), opts);
      append_claimed_law_report(out, reports);
      res.out_doc = wrap_algebra_doc(f, spec, out, "induced");
    } else if (req.induce == "antiassoc-trialgebra") {
      auto out = induced_antiassoc_trialgebra(K, need_rep(), opts);
      append_claimed_law_report(out, reports);
      res.out_doc = wrap_algebra_doc(f, spec, out, "induced");
    } else {
      throw value_error("unknown induce target '" + req.induce + "'");
    }
    res.report["derived"] = *res.out_doc;
  }
  res.report["reports"] = reports;
  res.exit_code = all_reports_pass(reports) ? 0 : 1;
  return res;
}

inline CliResult run_classify(const CliRequest& req) {
  CliResult res;
  res.report["reports"] = json::array();
  if (req.dim == 1) {
    if (req.prime) {
      PrimeField f(*req.prime, req.allow_small_characteristic);
      res.report["classification"] =
          dim1_result_to_json(f, classify_dim1(f));
    } else {
      RationalField f;
      res.report["classification"] =
          dim1_result_to_json(f, classify_dim1(f));
    }
  } else if (req.dim == 2) {
    PrimeField f(req.prime.value_or(5), req.allow_small_characteristic);
    res.report["classification"] = dim2_result_to_json(classify_dim2(f));
  } else {
    throw value_error("classify supports --dim 1 or --dim 2");
  }
  res.exit_code = 0;
  return res;
}

} // namespace detail

/// Executes one command against a parsed workspace document. Never throws
/// for anticipated failures; the exit code and report carry the outcome.
inline CliResult run_command(const json& workspace_doc,
                             const CliRequest& req) {
  const auto start = std::chrono::steady_clock::now();
  CliResult res;
  try {
    if (req.command == "classify") {
      res = detail::run_classify(req);
    } else {
      FieldSpec spec = parse_field_spec(
          detail::require_key(workspace_doc, "field", "workspace"));
      res = with_field(spec, [&](const auto& f) {
        auto ws = parse_workspace(f, workspace_doc);
        if (req.command == "check") return detail::run_check(f, spec, ws, req);
        if (req.command == "derive")
          return detail::run_derive(f, spec, ws, req);
        if (req.command == "operator")
          return detail::run_operator(f, spec, ws, req);
        throw value_error("unknown command '" + req.command + "'");
      });
    }
    res.report["status"] = res.exit_code == 0 ? "pass" : "fail";
  } catch (const precondition_error& e) {
    res.report["status"] = "fail";
    res.report["error"] = e.what();
    res.exit_code = 1;
  } catch (const certification_error& e) {
    res.report["status"] = "fail";
    res.report["error"] = e.what();
    res.exit_code = 1;
  } catch (const error& e) {
    res.report["status"] = "error";
    res.report["error"] = e.what();
    res.exit_code = 2;
  } catch (const json::exception& e) {
    res.report["status"] = "error";
    res.report["error"] = e.what();
    res.exit_code = 2;
  }
  res.report["command"] = req.command;
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  res.report["metadata"] = json{{"tool_version", tool_version},
                                {"elapsed_ms", elapsed.count()}};
  return res;
}

/// Comparable body of a report: everything except the metadata block.
inline json strip_metadata(json report) {
  report.erase("metadata");
  return report;
}

} // namespace antileib
