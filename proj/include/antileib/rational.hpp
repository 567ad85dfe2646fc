#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "antileib/errors.hpp"

namespace antileib {

/// Arbitrary-precision rational number kept in canonical form: numerator and
/// denominator coprime, denominator positive, zero stored as 0/1.
class Rational {
public:
  Rational() : v_(0) {}
  explicit Rational(long n) : v_(n) {}

  /// Builds num/den in canonical form. Throws value_error when den == 0.
  Rational(long num, long den) {
    if (den == 0) throw value_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  static Rational from_mpq(mpq_class q) {
    Rational r;
    q.canonicalize();
    r.v_ = std::move(q);
    return r;
  }

  Rational operator+(const Rational& o) const { return from_raw(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return from_raw(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return from_raw(v_ * o.v_); }
  Rational operator-() const { return from_raw(-v_); }

  /// Throws value_error on division by zero.
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw value_error("rational division by zero");
    return from_raw(v_ / o.v_);
  }

  Rational inverse() const {
    if (is_zero()) throw value_error("inverse of zero rational");
    return from_raw(1 / v_);
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  bool is_zero() const { return sgn(v_) == 0; }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  /// Serializes as "p" or "p/q" with an ASCII minus sign.
  std::string str() const { return v_.get_str(); }

  /// Strict parser: optional sign, digits, optional "/digits". The sign may be
  /// ASCII '-', '+', or U+2212; output always uses ASCII. Anything else
  /// (floats, exponents, spaces, signed denominators) is rejected.
  static std::optional<Rational> parse(std::string_view s) {
    std::string t = normalize_minus(s);
    // gmp does not take an explicit plus sign
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    std::string_view v = t;
    if (!v.empty() && v[0] == '-') v.remove_prefix(1);
    auto digits = [](std::string_view d) {
      if (d.empty()) return false;
      for (char ch : d)
        if (ch < '0' || ch > '9') return false;
      return true;
    };
    auto slash = v.find('/');
    if (slash == std::string_view::npos) {
      if (!digits(v)) return std::nullopt;
    } else {
      if (!digits(v.substr(0, slash)) || !digits(v.substr(slash + 1)))
        return std::nullopt;
      mpz_class den(std::string(v.substr(slash + 1)), 10);
      if (den == 0) return std::nullopt;
    }
    mpq_class q;
    if (q.set_str(t, 10) != 0) return std::nullopt;
    q.canonicalize();
    return from_raw(std::move(q));
  }

private:
  // gmp's rational arithmetic preserves canonical form on canonical operands,
  // so results of +,-,*,/ need no extra canonicalize pass.
  static Rational from_raw(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  static std::string normalize_minus(std::string_view s) {
    static constexpr std::string_view kUnicodeMinus = "\xe2\x88\x92";
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
      if (s.substr(i, 3) == kUnicodeMinus) {
        out.push_back('-');
        i += 3;
      } else {
        out.push_back(s[i]);
        ++i;
      }
    }
    return out;
  }

  mpq_class v_;
};

} // namespace antileib
