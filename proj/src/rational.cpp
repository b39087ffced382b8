#include "projcalc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace projcalc {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t pos = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  const std::size_t slash = s.find('/');
  auto all_digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!all_digits(pos, num_end) || (slash != std::string::npos && !all_digits(slash + 1, s.size())))
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  mpz_class num(s.substr(pos, num_end - pos), 10);
  if (s[0] == '-') num = -num;
  mpz_class den = 1;
  if (slash != std::string::npos) {
    den = mpz_class(s.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(mpq_class(num, den));
}

std::size_t Rational::hash() const {
  const std::size_t h1 = mpz_get_ui(v_.get_num_mpz_t()) ^ (static_cast<std::size_t>(sgn(v_)) << 1);
  const std::size_t h2 = mpz_get_ui(v_.get_den_mpz_t());
  return h1 * 0x9e3779b97f4a7c15ULL ^ (h2 + 0x7f4a7c159e3779b9ULL);
}

Rational factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(b));
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace projcalc
