#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "projcalc/rational.hpp"

namespace projcalc {

/// Ordered list of variable names shared by a family of polynomials.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

/// Coordinates x1..xm followed by the formal weight parameter "delta".
RingPtr chart_ring(int m);

/// Name of the formal density-weight parameter.
inline constexpr std::string_view kDeltaName = "delta";

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are stored in graded-lexicographic order of their exponent vectors and
/// zero coefficients are never kept, so structural equality is canonical equality.
class Poly {
 public:
  using Exponents = std::vector<std::uint16_t>;

  struct GrLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rational, GrLexLess>;

  explicit Poly(RingPtr ring);
  Poly(RingPtr ring, const Rational& constant);

  static Poly variable(RingPtr ring, std::string_view name);
  static Poly monomial(RingPtr ring, Exponents exponents, const Rational& coefficient);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value if the polynomial has no variable dependence.
  std::optional<Rational> as_constant() const;
  int total_degree() const;
  unsigned degree_in(std::size_t variable) const;
  bool depends_on(std::size_t variable) const { return degree_in(variable) > 0; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  /// Adds c * a * b in place without materialising the product.
  void add_product(const Poly& a, const Poly& b, const Rational& c = Rational(1));

  friend bool operator==(const Poly& a, const Poly& b);

  Poly partial(std::size_t variable) const;
  Poly partial(std::string_view name) const;

  /// Replaces every variable i by images[i]; the result lives in the images' ring.
  Poly substitute(std::span<const Poly> images) const;

  /// Reinterprets the polynomial in a ring containing all variables it uses.
  Poly embed(const RingPtr& target) const;

  /// Canonical text: terms by decreasing graded-lex order, reduced fractions.
  std::string to_string() const;

 private:
  void require_same_ring(const Poly& o) const;
  void add_term(const Exponents& e, const Rational& c);

  RingPtr ring_;
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

/// Syntax or name-resolution failure while reading a polynomial.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownIdentifier };
  ParseError(Kind kind, std::size_t position, const std::string& what);
  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Parses integers, a/b literals, variable names, + - * ^ and parentheses.
Poly parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace projcalc
