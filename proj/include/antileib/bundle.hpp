#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "antileib/errors.hpp"
#include "antileib/linalg.hpp"
#include "antileib/tensor.hpp"

namespace antileib {

/// Structure classes an algebra bundle can claim. `raw` makes no claim.
enum class AlgebraClass {
  raw,
  mock_lie,
  anti_assoc,
  anti_leibniz_left,
  anti_leibniz_right,
  anti_assoc_dialgebra,
  anti_assoc_trialgebra,
  anti_leibniz_trialgebra,
};

inline const char* algebra_class_name(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::raw: return "raw";
    case AlgebraClass::mock_lie: return "mock_lie";
    case AlgebraClass::anti_assoc: return "anti_assoc";
    case AlgebraClass::anti_leibniz_left: return "anti_leibniz_left";
    case AlgebraClass::anti_leibniz_right: return "anti_leibniz_right";
    case AlgebraClass::anti_assoc_dialgebra: return "anti_assoc_dialgebra";
    case AlgebraClass::anti_assoc_trialgebra: return "anti_assoc_trialgebra";
    case AlgebraClass::anti_leibniz_trialgebra:
      return "anti_leibniz_trialgebra";
  }
  return "raw";
}

inline std::optional<AlgebraClass> parse_algebra_class(const std::string& s) {
  for (AlgebraClass c :
       {AlgebraClass::raw, AlgebraClass::mock_lie, AlgebraClass::anti_assoc,
        AlgebraClass::anti_leibniz_left, AlgebraClass::anti_leibniz_right,
        AlgebraClass::anti_assoc_dialgebra, AlgebraClass::anti_assoc_trialgebra,
        AlgebraClass::anti_leibniz_trialgebra})
    if (s == algebra_class_name(c)) return c;
  return std::nullopt;
}

/// Product slot names each class carries. `raw` accepts any nonempty set.
inline std::vector<std::string> expected_products(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::raw: return {};
    case AlgebraClass::mock_lie:
    case AlgebraClass::anti_assoc:
    case AlgebraClass::anti_leibniz_left:
    case AlgebraClass::anti_leibniz_right: return {"mul"};
    case AlgebraClass::anti_assoc_dialgebra: return {"left", "right"};
    case AlgebraClass::anti_assoc_trialgebra:
      return {"left", "middle", "right"};
    case AlgebraClass::anti_leibniz_trialgebra: return {"bracket", "circ"};
  }
  return {};
}

/// A finite-dimensional algebra presented by labelled basis vectors and one
/// structure tensor per named product. Immutable by convention: constructions
/// return fresh bundles.
template <class F>
struct AlgebraBundle {
  F field;
  size_t dim = 0;
  std::vector<std::string> labels;
  std::map<std::string, StructureTensor<F>> products;
  AlgebraClass claimed = AlgebraClass::raw;

  // Fields without default constructors (prime fields carry their modulus)
  // force explicit field injection here and in the sibling bundles.
  explicit AlgebraBundle(F f) : field(std::move(f)) {}

  const StructureTensor<F>& product(const std::string& name) const {
    auto it = products.find(name);
    if (it == products.end())
      throw value_error("algebra has no product named '" + name + "'");
    return it->second;
  }

  bool has_product(const std::string& name) const {
    return products.count(name) != 0;
  }

  size_t label_index(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return i;
    throw value_error("unknown basis label '" + label + "'");
  }

  /// Structural checks: labels distinct and matching dim, tensors matching
  /// dim, product names matching the claimed class. Throws value_error.
  void validate() const {
    if (labels.size() != dim) throw value_error("label count != dim");
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty()) throw value_error("empty basis label");
      if (!seen.insert(l).second)
        throw value_error("duplicate basis label '" + l + "'");
    }
    if (products.empty()) throw value_error("algebra has no products");
    for (const auto& [name, t] : products) {
      if (name.empty()) throw value_error("empty product name");
      if (t.dim() != dim)
        throw value_error("product '" + name + "' has wrong dimension");
    }
    auto expected = expected_products(claimed);
    if (!expected.empty()) {
      if (products.size() != expected.size())
        throw value_error("product set does not match claimed class");
      for (const auto& name : expected)
        if (!products.count(name))
          throw value_error("claimed class requires product '" + name + "'");
    }
  }
};

/// Convenience constructor for single-product bundles.
template <class F>
AlgebraBundle<F> make_algebra(const F& f, std::vector<std::string> labels,
                              StructureTensor<F> mul,
                              AlgebraClass claimed = AlgebraClass::raw) {
  AlgebraBundle<F> b(f);
  b.dim = labels.size();
  b.labels = std::move(labels);
  b.products.emplace("mul", std::move(mul));
  b.claimed = claimed;
  b.validate();
  return b;
}

inline std::vector<std::string> default_labels(size_t n,
                                               const std::string& stem = "e") {
  std::vector<std::string> out;
  out.reserve(n);
  for (size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

/// Linear map between labelled spaces, matrix acting on coordinate columns:
/// rows = target dim, cols = source dim.
template <class F>
struct LinearMap {
  F field;
  Matrix<F> mat;
  std::string source;
  std::string target;

  explicit LinearMap(F f) : field(std::move(f)) {}
  LinearMap(F f, Matrix<F> m) : field(std::move(f)), mat(std::move(m)) {}
};

/// Representation kinds. The `_action` kinds additionally carry a product on
/// the representation space and must satisfy the matching compatibility law.
enum class RepKind {
  mlie_rep,
  anti_leib_rep,
  anti_assoc_rep,
  mlie_action,
  anti_assoc_action,
};

inline const char* rep_kind_name(RepKind k) {
  switch (k) {
    case RepKind::mlie_rep: return "mlie_rep";
    case RepKind::anti_leib_rep: return "anti_leib_rep";
    case RepKind::anti_assoc_rep: return "anti_assoc_rep";
    case RepKind::mlie_action: return "mlie_action";
    case RepKind::anti_assoc_action: return "anti_assoc_action";
  }
  return "mlie_rep";
}

inline std::optional<RepKind> parse_rep_kind(const std::string& s) {
  for (RepKind k : {RepKind::mlie_rep, RepKind::anti_leib_rep,
                    RepKind::anti_assoc_rep, RepKind::mlie_action,
                    RepKind::anti_assoc_action})
    if (s == rep_kind_name(k)) return k;
  return std::nullopt;
}

inline bool rep_kind_is_action(RepKind k) {
  return k == RepKind::mlie_action || k == RepKind::anti_assoc_action;
}

/// Map slot names per representation kind.
inline std::vector<std::string> expected_rep_maps(RepKind k) {
  switch (k) {
    case RepKind::mlie_rep:
    case RepKind::mlie_action: return {"pi"};
    case RepKind::anti_leib_rep: return {"l", "r"};
    case RepKind::anti_assoc_rep:
    case RepKind::anti_assoc_action: return {"rho", "mu"};
  }
  return {};
}

/// Which single-product law the representation's algebra must satisfy for the
/// derived constructions on top of it to certify.
inline AlgebraClass rep_algebra_class(RepKind k) {
  switch (k) {
    case RepKind::mlie_rep:
    case RepKind::mlie_action: return AlgebraClass::mock_lie;
    case RepKind::anti_leib_rep: return AlgebraClass::anti_leibniz_left;
    case RepKind::anti_assoc_rep:
    case RepKind::anti_assoc_action: return AlgebraClass::anti_assoc;
  }
  return AlgebraClass::mock_lie;
}

/// A representation bundle: base algebra, carrier space, one matrix per map
/// slot and algebra basis vector, and for action kinds a carrier product.
template <class F>
struct RepBundle {
  F field;
  AlgebraBundle<F> algebra;
  RepKind kind = RepKind::mlie_rep;
  size_t carrier_dim = 0;
  std::vector<std::string> carrier_labels;
  std::map<std::string, std::vector<Matrix<F>>> maps;
  std::optional<StructureTensor<F>> carrier_product;

  explicit RepBundle(F f) : field(f), algebra(std::move(f)) {}
  RepBundle(F f, AlgebraBundle<F> alg)
      : field(std::move(f)), algebra(std::move(alg)) {}

  const std::vector<Matrix<F>>& map(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end())
      throw value_error("representation has no map named '" + name + "'");
    return it->second;
  }

  /// Matrix of map(x) for a coordinate vector x on the algebra.
  Matrix<F> map_at(const std::string& name, const Vec<F>& x) const {
    const auto& ms = map(name);
    const F& f = field;
    Matrix<F> out = Matrix<F>::zero(f, carrier_dim, carrier_dim);
    for (size_t i = 0; i < algebra.dim; ++i) {
      if (f.is_zero(x[i])) continue;
      for (size_t t = 0; t < out.a.size(); ++t)
        out.a[t] = f.add(out.a[t], f.mul(x[i], ms[i].a[t]));
    }
    return out;
  }

  void validate() const {
    algebra.validate();
    if (carrier_labels.size() != carrier_dim)
      throw value_error("carrier label count != carrier dim");
    std::set<std::string> seen;
    for (const auto& l : carrier_labels) {
      if (l.empty()) throw value_error("empty carrier label");
      if (!seen.insert(l).second)
        throw value_error("duplicate carrier label '" + l + "'");
    }
    auto expected = expected_rep_maps(kind);
    if (maps.size() != expected.size())
      throw value_error("map set does not match representation kind");
    for (const auto& name : expected) {
      auto it = maps.find(name);
      if (it == maps.end())
        throw value_error("representation kind requires map '" + name + "'");
      if (it->second.size() != algebra.dim)
        throw value_error("map '" + name +
                          "' needs one matrix per algebra basis vector");
      for (const auto& m : it->second)
        if (m.rows != carrier_dim || m.cols != carrier_dim)
          throw value_error("map '" + name + "' matrix has wrong shape");
    }
    if (rep_kind_is_action(kind)) {
      if (!carrier_product)
        throw value_error("action kind requires a carrier product");
      if (carrier_product->dim() != carrier_dim)
        throw value_error("carrier product has wrong dimension");
    } else if (carrier_product) {
      throw value_error("plain representation kind carries no product");
    }
  }
};

} // namespace antileib
