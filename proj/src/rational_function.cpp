#include "projcalc/rational_function.hpp"

#include <sstream>
#include <stdexcept>

namespace projcalc {

DeltaPoly::DeltaPoly(Rational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

DeltaPoly::DeltaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void DeltaPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DeltaPoly& DeltaPoly::operator+=(const DeltaPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

DeltaPoly& DeltaPoly::operator-=(const DeltaPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return DeltaPoly(std::move(out));
}

DeltaPoly DeltaPoly::operator-() const {
  DeltaPoly out(*this);
  for (auto& c : out.c_) c = -c;
  return out;
}

Rational DeltaPoly::evaluate(const Rational& delta) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * delta + *it;
  return acc;
}

std::pair<DeltaPoly, DeltaPoly> DeltaPoly::divmod(const DeltaPoly& a, const DeltaPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  DeltaPoly rem = a;
  std::vector<Rational> quot(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational factor = rem.leading() / b.leading();
    quot[static_cast<std::size_t>(shift)] += factor;
    for (std::size_t i = 0; i < b.c_.size(); ++i) rem.c_[i + static_cast<std::size_t>(shift)] -= factor * b.c_[i];
    rem.trim();
  }
  return {DeltaPoly(std::move(quot)), rem};
}

DeltaPoly DeltaPoly::gcd(DeltaPoly a, DeltaPoly b) {
  while (!b.is_zero()) {
    DeltaPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

DeltaPoly DeltaPoly::monic() const {
  if (is_zero()) return *this;
  DeltaPoly out(*this);
  const Rational lead = leading();
  for (auto& c : out.c_) c /= lead;
  return out;
}

std::string DeltaPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || !mag.is_one()) {
      os << mag;
      if (k > 0) os << '*';
    }
    if (k > 0) os << "delta";
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

RationalFunction::RationalFunction(DeltaPoly num, DeltaPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = DeltaPoly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const DeltaPoly g = DeltaPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = DeltaPoly::divmod(num_, g).first;
      den_ = DeltaPoly::divmod(den_, g).first;
    }
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    num_ = num_ * DeltaPoly(Rational(1) / lead);
    den_ = den_.monic();
  }
}

std::optional<Rational> RationalFunction::as_constant() const {
  if (!num_.is_constant() || !den_.is_constant()) return std::nullopt;
  return num_.constant() / den_.constant();
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = DeltaPoly(Rational(1));
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  if (!o.den_.is_constant() || !den_.is_constant()) {
    den_ = den_ * o.den_;
    normalize();
  } else if (num_.is_zero()) {
    den_ = DeltaPoly(Rational(1));
  }
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out(*this);
  out.num_ = -out.num_;
  return out;
}

std::optional<Rational> RationalFunction::evaluate(const Rational& delta) const {
  const Rational d = den_.evaluate(delta);
  if (d.is_zero()) return std::nullopt;
  return num_.evaluate(delta) / d;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  auto wrap = [](const DeltaPoly& p) {
    const std::string s = p.to_string();
    return p.coeffs().size() > 1 && s.find(' ') != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace projcalc
