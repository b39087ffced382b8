#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "projcalc/rational.hpp"

namespace projcalc {

/// Dense univariate polynomial in the weight parameter delta; coeffs[i] multiplies delta^i.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  DeltaPoly(Rational c);  // NOLINT(google-explicit-constructor)
  explicit DeltaPoly(std::vector<Rational> coeffs);

  static DeltaPoly delta() { return DeltaPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational constant() const { return c_.empty() ? Rational(0) : c_.front(); }

  DeltaPoly& operator+=(const DeltaPoly& o);
  DeltaPoly& operator-=(const DeltaPoly& o);
  friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
  friend DeltaPoly operator-(DeltaPoly a, const DeltaPoly& b) { return a -= b; }
  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b);
  DeltaPoly operator-() const;
  friend bool operator==(const DeltaPoly& a, const DeltaPoly& b) { return a.c_ == b.c_; }

  Rational evaluate(const Rational& delta) const;
  /// Quotient and remainder of Euclidean division; divisor must be nonzero.
  static std::pair<DeltaPoly, DeltaPoly> divmod(const DeltaPoly& a, const DeltaPoly& b);
  static DeltaPoly gcd(DeltaPoly a, DeltaPoly b);
  DeltaPoly monic() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Exact element of Q(delta), kept as a reduced fraction with monic denominator.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Rational c) : num_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : num_(Rational(c)) {}      // NOLINT(google-explicit-constructor)
  RationalFunction(DeltaPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(DeltaPoly num, DeltaPoly den);

  static RationalFunction delta() { return RationalFunction(DeltaPoly::delta()); }

  const DeltaPoly& numerator() const { return num_; }
  const DeltaPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value if free of delta.
  std::optional<Rational> as_constant() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Value at a rational delta, or nullopt where the denominator vanishes.
  std::optional<Rational> evaluate(const Rational& delta) const;

  std::string to_string() const;

 private:
  void normalize();
  DeltaPoly num_;
  DeltaPoly den_{Rational(1)};
};

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace projcalc
