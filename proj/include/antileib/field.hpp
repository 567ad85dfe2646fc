#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "antileib/errors.hpp"
#include "antileib/rational.hpp"

namespace antileib {

/// Exact arithmetic over the rationals. Stateless; all elements are kept in
/// canonical form by the Rational type itself.
struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Rational(); }
  Elem one() const { return Rational(1); }
  Elem from_int(long v) const { return Rational(v); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inverse(); }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }

  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  /// Deterministic total order, used for canonical choices only.
  bool less(const Elem& a, const Elem& b) const { return a < b; }

  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "rational"; }

  std::string str(const Elem& a) const { return a.str(); }
  std::optional<Elem> parse(std::string_view s) const {
    return Rational::parse(s);
  }
};

/// Exact arithmetic modulo a prime p < 2^32, elements stored as canonical
/// residues in [0, p). Characteristics 2 and 3 are refused unless explicitly
/// allowed, since several constructions divide by 2 or rely on 3 != 0.
class PrimeField {
public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p, bool allow_small_characteristic = false)
      : p_(p) {
    if (p >= (std::uint64_t{1} << 32))
      throw field_error("prime modulus too large: " + std::to_string(p));
    if (!is_prime(p))
      throw field_error("modulus is not prime: " + std::to_string(p));
    if ((p == 2 || p == 3) && !allow_small_characteristic)
      throw field_error("characteristic " + std::to_string(p) +
                        " refused; pass the small-characteristic override to "
                        "use it anyway");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long v) const {
    long m = static_cast<long>(p_);
    long r = v % m;
    if (r < 0) r += m;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

  Elem inv(Elem a) const {
    if (a == 0) throw value_error("inverse of zero residue");
    // Extended Euclid on (a, p); p prime guarantees gcd 1.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_);
    std::int64_t new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool less(Elem a, Elem b) const { return a < b; }

  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return "F" + std::to_string(p_); }

  std::string str(Elem a) const { return std::to_string(a); }

  /// Accepts an optional sign ('-', '+', or U+2212) followed by digits of any
  /// length; the value is reduced to its canonical residue.
  std::optional<Elem> parse(std::string_view s) const {
    bool negate = false;
    size_t i = 0;
    if (!s.empty()) {
      if (s[0] == '+' || s[0] == '-') {
        negate = s[0] == '-';
        i = 1;
      } else if (s.substr(0, 3) == "\xe2\x88\x92") {
        negate = true;
        i = 3;
      }
    }
    if (i >= s.size()) return std::nullopt;
    Elem v = 0;
    for (; i < s.size(); ++i) {
      char ch = s[i];
      if (ch < '0' || ch > '9') return std::nullopt;
      v = (v * 10 + static_cast<Elem>(ch - '0')) % p_;
    }
    return negate ? neg(v) : v;
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

private:
  std::uint64_t p_;
};

/// Runtime description of a field, used to dispatch to the templated core.
struct FieldSpec {
  enum class Kind { rational, prime };

  Kind kind = Kind::rational;
  std::uint64_t p = 0;
  bool allow_small_characteristic = false;

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec primes(std::uint64_t p, bool allow_small = false) {
    return FieldSpec{Kind::prime, p, allow_small};
  }

  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && p == o.p;
  }
};

/// Calls fn with the concrete field instance described by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::rational) return fn(RationalField{});
  return fn(PrimeField(spec.p, spec.allow_small_characteristic));
}

} // namespace antileib
