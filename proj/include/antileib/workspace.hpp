#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "antileib/bundle.hpp"
#include "antileib/classify.hpp"
#include "antileib/errors.hpp"
#include "antileib/field.hpp"
#include "antileib/laws.hpp"

namespace antileib {

using json = nlohmann::json;

/// CLI-facing law ids use '-' where the library tags use '_'.
inline std::string to_kebab(std::string s) {
  for (auto& c : s)
    if (c == '_') c = '-';
  return s;
}

inline std::string from_kebab(std::string s) {
  for (auto& c : s)
    if (c == '-') c = '_';
  return s;
}

/// Parsed form of one input document: every bundle keyed by its identifier.
/// Map sources and targets may name either an algebra or a representation
/// (meaning its carrier space).
template <class F>
struct Workspace {
  F field;
  std::map<std::string, AlgebraBundle<F>> algebras;
  std::map<std::string, RepBundle<F>> reps;
  std::map<std::string, LinearMap<F>> maps;

  explicit Workspace(F f) : field(std::move(f)) {}

  const AlgebraBundle<F>& algebra(const std::string& id) const {
    auto it = algebras.find(id);
    if (it == algebras.end())
      throw value_error("no algebra with id '" + id + "'");
    return it->second;
  }

  const RepBundle<F>& rep(const std::string& id) const {
    auto it = reps.find(id);
    if (it == reps.end())
      throw value_error("no representation with id '" + id + "'");
    return it->second;
  }

  const LinearMap<F>& map(const std::string& id) const {
    auto it = maps.find(id);
    if (it == maps.end()) throw value_error("no map with id '" + id + "'");
    return it->second;
  }
};

/// Field block: "rational" or {"prime": p}. Any prime is accepted here; the
/// small-characteristic gate belongs to classification, not to checking.
inline FieldSpec parse_field_spec(const json& j) {
  if (j.is_string() && j.get<std::string>() == "rational")
    return FieldSpec::rationals();
  if (j.is_object() && j.contains("prime")) {
    const json& p = j["prime"];
    if (p.is_number_unsigned())
      return FieldSpec::primes(p.get<std::uint64_t>(), true);
    if (p.is_number_integer() && p.get<long long>() > 0)
      return FieldSpec::primes(static_cast<std::uint64_t>(p.get<long long>()),
                               true);
  }
  throw value_error("field must be \"rational\" or {\"prime\": p}");
}

inline json field_spec_to_json(const FieldSpec& spec) {
  if (spec.kind == FieldSpec::Kind::rational) return json("rational");
  return json{{"prime", spec.p}};
}

namespace detail {

template <class F>
typename F::Elem parse_scalar(const F& f, const json& j,
                              const std::string& ctx) {
  if (!j.is_string())
    throw value_error(ctx + ": scalars must be strings, got " + j.dump());
  auto v = f.parse(j.get<std::string>());
  if (!v)
    throw value_error(ctx + ": malformed scalar '" + j.get<std::string>() +
                      "'");
  return *v;
}

inline const json& require_key(const json& j, const char* key,
                               const std::string& ctx) {
  if (!j.is_object() || !j.contains(key))
    throw value_error(ctx + ": missing required field '" + key + "'");
  return j[key];
}

inline size_t parse_dim(const json& j, const std::string& ctx) {
  // accept any nonnegative integer; in-memory documents built from C++
  // literals carry signed values where parsed text carries unsigned ones
  if (j.is_number_unsigned()) return j.get<size_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0)
    return static_cast<size_t>(j.get<long long>());
  throw value_error(ctx + ": dimension must be a nonnegative integer");
}

inline std::vector<std::string> parse_basis(const json& j, size_t dim,
                                            const std::string& ctx) {
  if (!j.is_array() || j.size() != dim)
    throw value_error(ctx + ": basis must list exactly dim labels");
  std::vector<std::string> labels;
  for (const auto& l : j) {
    if (!l.is_string())
      throw value_error(ctx + ": basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return labels;
}

inline size_t label_index(const std::vector<std::string>& labels,
                          const json& j, const std::string& ctx) {
  if (!j.is_string())
    throw value_error(ctx + ": basis references must be label strings");
  const std::string l = j.get<std::string>();
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return i;
  throw value_error(ctx + ": unknown basis label '" + l + "'");
}

/// Sparse product list [{"i": label, "j": label, "out": {label: scalar}}].
/// Omitted pairs are zero; duplicate pairs are rejected.
template <class F>
StructureTensor<F> parse_product_entries(
    const F& f, const json& j, const std::vector<std::string>& labels,
    const std::string& ctx) {
  if (!j.is_array())
    throw value_error(ctx + ": product must be a list of entries");
  const size_t n = labels.size();
  StructureTensor<F> t(f, n);
  std::set<std::pair<size_t, size_t>> seen;
  for (const auto& entry : j) {
    size_t i = label_index(labels, require_key(entry, "i", ctx), ctx);
    size_t jj = label_index(labels, require_key(entry, "j", ctx), ctx);
    if (!seen.insert({i, jj}).second)
      throw value_error(ctx + ": duplicate product entry for (" + labels[i] +
                        ", " + labels[jj] + ")");
    const json& out = require_key(entry, "out", ctx);
    if (!out.is_object())
      throw value_error(ctx + ": 'out' must map labels to scalars");
    for (const auto& [label, scalar] : out.items()) {
      size_t k = label_index(labels, json(label), ctx);
      t.at(i, jj, k) = parse_scalar(f, scalar, ctx);
    }
  }
  return t;
}

template <class F>
json product_entries_to_json(const F& f, const StructureTensor<F>& t,
                             const std::vector<std::string>& labels) {
  json entries = json::array();
  const size_t n = t.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      json out = json::object();
      for (size_t k = 0; k < n; ++k)
        if (!f.is_zero(t.at(i, j, k))) out[labels[k]] = f.str(t.at(i, j, k));
      if (!out.empty())
        entries.push_back(json{{"i", labels[i]}, {"j", labels[j]},
                               {"out", out}});
    }
  return entries;
}

template <class F>
Matrix<F> parse_matrix(const F& f, const json& j, size_t rows, size_t cols,
                       const std::string& ctx) {
  if (!j.is_array() || j.size() != rows)
    throw value_error(ctx + ": matrix must have " + std::to_string(rows) +
                      " rows");
  Matrix<F> m = Matrix<F>::zero(f, rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw value_error(ctx + ": matrix rows must have " +
                        std::to_string(cols) + " entries");
    for (size_t c = 0; c < cols; ++c)
      m.at(r, c) = parse_scalar(f, row[c], ctx);
  }
  return m;
}

template <class F>
json matrix_to_json(const F& f, const Matrix<F>& m) {
  json rows = json::array();
  for (size_t r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (size_t c = 0; c < m.cols; ++c) row.push_back(f.str(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace detail

template <class F>
AlgebraBundle<F> parse_algebra(const F& f, const json& j,
                               const std::string& id) {
  const std::string ctx = "algebra '" + id + "'";
  AlgebraBundle<F> alg(f);
  alg.dim = detail::parse_dim(detail::require_key(j, "dim", ctx), ctx);
  alg.labels =
      detail::parse_basis(detail::require_key(j, "basis", ctx), alg.dim, ctx);
  const json& cls = detail::require_key(j, "class", ctx);
  if (!cls.is_string())
    throw value_error(ctx + ": class must be a string");
  auto parsed = parse_algebra_class(cls.get<std::string>());
  if (!parsed)
    throw value_error(ctx + ": unknown class '" + cls.get<std::string>() +
                      "'");
  alg.claimed = *parsed;
  const json& products = detail::require_key(j, "products", ctx);
  if (!products.is_object())
    throw value_error(ctx + ": products must be an object");
  for (const auto& [name, entries] : products.items())
    alg.products.emplace(name, detail::parse_product_entries(
                                   f, entries, alg.labels,
                                   ctx + " product '" + name + "'"));
  alg.validate();
  return alg;
}

template <class F>
json algebra_to_json(const AlgebraBundle<F>& alg) {
  json products = json::object();
  for (const auto& [name, t] : alg.products)
    products[name] =
        detail::product_entries_to_json(alg.field, t, alg.labels);
  return json{{"dim", alg.dim},
              {"basis", alg.labels},
              {"class", algebra_class_name(alg.claimed)},
              {"products", products}};
}

template <class F>
RepBundle<F> parse_representation(const F& f, const json& j,
                                  const std::string& id,
                                  const Workspace<F>& ws,
                                  std::string* algebra_id_out = nullptr) {
  const std::string ctx = "representation '" + id + "'";
  const json& alg_ref = detail::require_key(j, "algebra", ctx);
  if (!alg_ref.is_string())
    throw value_error(ctx + ": algebra must be an id string");
  const std::string alg_id = alg_ref.get<std::string>();
  if (algebra_id_out) *algebra_id_out = alg_id;
  RepBundle<F> rep(f, ws.algebra(alg_id));
  rep.carrier_dim =
      detail::parse_dim(detail::require_key(j, "carrier_dim", ctx), ctx);
  const json& kind = detail::require_key(j, "kind", ctx);
  if (!kind.is_string())
    throw value_error(ctx + ": kind must be a string");
  auto parsed_kind = parse_rep_kind(kind.get<std::string>());
  if (!parsed_kind)
    throw value_error(ctx + ": unknown kind '" + kind.get<std::string>() +
                      "'");
  rep.kind = *parsed_kind;
  if (j.contains("carrier_basis"))
    rep.carrier_labels = detail::parse_basis(j["carrier_basis"],
                                             rep.carrier_dim, ctx);
  else
    rep.carrier_labels = default_labels(rep.carrier_dim);
  const json& maps = detail::require_key(j, "maps", ctx);
  if (!maps.is_object())
    throw value_error(ctx + ": maps must be an object");
  for (const auto& [name, arr] : maps.items()) {
    if (!arr.is_array() || arr.size() != rep.algebra.dim)
      throw value_error(ctx + ": map '" + name +
                        "' needs one matrix per algebra basis element");
    std::vector<Matrix<F>> ms;
    for (const auto& mj : arr)
      ms.push_back(detail::parse_matrix(f, mj, rep.carrier_dim,
                                        rep.carrier_dim,
                                        ctx + " map '" + name + "'"));
    rep.maps.emplace(name, std::move(ms));
  }
  if (j.contains("carrier_product"))
    rep.carrier_product = detail::parse_product_entries(
        f, j["carrier_product"], rep.carrier_labels,
        ctx + " carrier_product");
  rep.validate();
  return rep;
}

template <class F>
json representation_to_json(const RepBundle<F>& rep,
                            const std::string& algebra_id) {
  json maps = json::object();
  for (const auto& [name, ms] : rep.maps) {
    json arr = json::array();
    for (const auto& m : ms)
      arr.push_back(detail::matrix_to_json(rep.field, m));
    maps[name] = std::move(arr);
  }
  json out{{"algebra", algebra_id},
           {"carrier_dim", rep.carrier_dim},
           {"carrier_basis", rep.carrier_labels},
           {"kind", rep_kind_name(rep.kind)},
           {"maps", maps}};
  if (rep.carrier_product)
    out["carrier_product"] = detail::product_entries_to_json(
        rep.field, *rep.carrier_product, rep.carrier_labels);
  return out;
}

/// Parses a full document against a concrete field; the field block must
/// already have been inspected to pick F.
template <class F>
Workspace<F> parse_workspace(const F& f, const json& doc) {
  if (!doc.is_object()) throw value_error("workspace must be a JSON object");
  Workspace<F> ws(f);
  if (doc.contains("algebras")) {
    if (!doc["algebras"].is_object())
      throw value_error("'algebras' must be an object");
    for (const auto& [id, body] : doc["algebras"].items())
      ws.algebras.emplace(id, parse_algebra(f, body, id));
  }
  if (doc.contains("representations")) {
    if (!doc["representations"].is_object())
      throw value_error("'representations' must be an object");
    for (const auto& [id, body] : doc["representations"].items()) {
      if (ws.algebras.count(id))
        throw value_error("duplicate identifier '" + id + "'");
      ws.reps.emplace(id, parse_representation(f, body, id, ws));
    }
  }
  if (doc.contains("maps")) {
    if (!doc["maps"].is_object())
      throw value_error("'maps' must be an object");
    for (const auto& [id, body] : doc["maps"].items()) {
      if (ws.algebras.count(id) || ws.reps.count(id))
        throw value_error("duplicate identifier '" + id + "'");
      const std::string ctx = "map '" + id + "'";
      auto space_dim = [&](const json& ref) -> size_t {
        if (!ref.is_string())
          throw value_error(ctx + ": source/target must be id strings");
        const std::string rid = ref.get<std::string>();
        if (ws.algebras.count(rid)) return ws.algebras.at(rid).dim;
        if (ws.reps.count(rid)) return ws.reps.at(rid).carrier_dim;
        throw value_error(ctx + ": dangling reference '" + rid + "'");
      };
      const json& src = detail::require_key(body, "source", ctx);
      const json& tgt = detail::require_key(body, "target", ctx);
      const size_t cols = space_dim(src);
      const size_t rows = space_dim(tgt);
      LinearMap<F> m(f, detail::parse_matrix(
                            f, detail::require_key(body, "matrix", ctx),
                            rows, cols, ctx));
      m.source = src.get<std::string>();
      m.target = tgt.get<std::string>();
      ws.maps.emplace(id, std::move(m));
    }
  }
  return ws;
}

/// Dispatches on the document's field block and runs fn(field, workspace).
template <class Fn>
decltype(auto) with_workspace(const json& doc, Fn&& fn) {
  FieldSpec spec =
      parse_field_spec(detail::require_key(doc, "field", "workspace"));
  return with_field(spec, [&](const auto& f) {
    return fn(f, parse_workspace(f, doc));
  });
}

template <class F>
json map_to_json(const LinearMap<F>& m) {
  return json{{"source", m.source},
              {"target", m.target},
              {"matrix", detail::matrix_to_json(m.field, m.mat)}};
}

/// Wraps serialized bundles into a self-contained parseable document.
inline json make_workspace_doc(const json& field, json algebras, json reps,
                               json maps) {
  return json{{"field", field},
              {"algebras", std::move(algebras)},
              {"representations", std::move(reps)},
              {"maps", std::move(maps)}};
}

/// Report serialization: witnesses carry 1-based indices; k is 0 for
/// identities scanned over pairs. Residuals are sparse, keyed by label.
/// Several label sets may be passed when one report mixes residual spaces
/// (crossed modules); the set whose size matches each residual is used.
template <class F>
json report_to_json_multi(const F& f, const CheckReport<F>& report,
                          const std::vector<std::vector<std::string>>& sets) {
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    const std::vector<std::string>* labels = nullptr;
    for (const auto& s : sets)
      if (s.size() == w.residual.size()) {
        labels = &s;
        break;
      }
    json residual = json::object();
    for (size_t r = 0; r < w.residual.size(); ++r)
      if (!f.is_zero(w.residual[r])) {
        std::string key = labels ? (*labels)[r] : "c" + std::to_string(r + 1);
        residual[key] = f.str(w.residual[r]);
      }
    witnesses.push_back(json{{"i", w.i + 1},
                             {"j", w.j + 1},
                             {"k", w.k == no_index ? 0 : w.k + 1},
                             {"sub", w.sub},
                             {"residual", residual}});
  }
  return json{{"law", report.law},
              {"status", report.pass ? "pass" : "fail"},
              {"triples_checked", report.triples_checked},
              {"witnesses_total", report.witnesses_total},
              {"witnesses", witnesses}};
}

template <class F>
json report_to_json(const F& f, const CheckReport<F>& report,
                    const std::vector<std::string>& residual_labels) {
  return report_to_json_multi(f, report, {residual_labels});
}

inline json dim1_result_to_json_strings(const std::string& constraint,
                                        const std::vector<std::string>& sols) {
  return json{{"constraint", constraint}, {"solutions", sols}};
}

template <class F>
json dim1_result_to_json(const F& f, const Dim1Result<F>& r) {
  std::vector<std::string> sols;
  for (const auto& s : r.solutions) sols.push_back(f.str(s));
  return dim1_result_to_json_strings(r.constraint, sols);
}

inline json dim2_result_to_json(const Dim2Result& r) {
  json classes = json::array();
  for (const auto& c : r.classes) {
    classes.push_back(json{{"coefficients", c.rep_coeffs},
                           {"orbit_size", c.orbit_size},
                           {"matched",
                            json{{"primary", c.match.primary},
                                 {"equivalent", c.match.equivalent}}}});
  }
  return json{{"total_solutions", r.total_solutions},
              {"classes", classes}};
}

} // namespace antileib
