#include <cctype>

#include "projcalc/poly.hpp"

namespace projcalc {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& what)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      kind_(kind),
      position_(position) {}

namespace {

// expr  := [+|-] term { (+|-) term }
// term  := power { * power }
// power := primary [ ^ INT ]
// primary := INT [ / INT ] | IDENT | ( expr )
class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    Poly result = expr();
    skip_ws();
    if (pos_ != text_.size()) syntax("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void syntax(const std::string& what) const {
    throw ParseError(ParseError::Kind::Syntax, pos_, what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      skip_ws();
      const std::string digits = integer_literal("exponent");
      unsigned long e = std::stoul(digits);
      if (e > 64) syntax("exponent too large");
      Poly out(ring_, Rational(1));
      for (unsigned long i = 0; i < e; ++i) out = out * base;
      return out;
    }
    return base;
  }

  std::string integer_literal(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) syntax(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size()) syntax("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) syntax("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = integer_literal("integer");
      const std::size_t save = pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        const std::size_t den_pos = pos_;
        std::string den = integer_literal("denominator");
        if (mpz_class(den) == 0) throw ParseError(ParseError::Kind::Syntax, den_pos, "zero denominator");
        literal += "/" + den;
      } else {
        pos_ = save;
      }
      return Poly(ring_, Rational::parse(literal));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (!ring_->index_of(name))
        throw ParseError(ParseError::Kind::UnknownIdentifier, start, "unknown identifier '" + name + "'");
      return Poly::variable(ring_, name);
    }
    syntax("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace projcalc
