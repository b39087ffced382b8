#include "projcalc/poly.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace projcalc {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

RingPtr chart_ring(int m) {
  if (m < 1) throw std::invalid_argument("chart dimension must be positive");
  static std::mutex mutex;
  static std::unordered_map<int, RingPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) {
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
    names.emplace_back(kDeltaName);
    slot = make_ring(std::move(names));
  }
  return slot;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

bool Poly::GrLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  // Among equal degrees, x1^2 sorts above x1*x2 (lexicographically larger is greater).
  return a < b;
}

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial needs a ring");
}

Poly::Poly(RingPtr ring, const Rational& constant) : Poly(std::move(ring)) {
  if (!constant.is_zero()) terms_.emplace(Exponents(ring_->size(), 0), constant);
}

Poly Poly::variable(RingPtr ring, std::string_view name) {
  const auto idx = ring->index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  Exponents e(ring->size(), 0);
  e[*idx] = 1;
  return monomial(std::move(ring), std::move(e), Rational(1));
}

Poly Poly::monomial(RingPtr ring, Exponents exponents, const Rational& coefficient) {
  Poly p(std::move(ring));
  if (exponents.size() != p.ring_->size()) throw std::invalid_argument("exponent arity mismatch");
  if (!coefficient.is_zero()) p.terms_.emplace(std::move(exponents), coefficient);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

std::optional<Rational> Poly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

unsigned Poly::degree_in(std::size_t variable) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e.at(variable));
  return d;
}

void Poly::require_same_ring(const Poly& o) const {
  if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("polynomials over different variable lists");
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.ring_);
  out.add_product(a, b);
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

void Poly::add_product(const Poly& a, const Poly& b, const Rational& c) {
  require_same_ring(a);
  require_same_ring(b);
  if (c.is_zero()) return;
  Exponents e(ring_->size());
  mpq_class scratch;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      scratch = ca.value() * cb.value();
      if (!c.is_one()) scratch *= c.value();
      add_term(e, Rational(scratch));
    }
  }
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Poly Poly::partial(std::size_t variable) const {
  if (variable >= ring_->size()) throw std::invalid_argument("variable index out of range");
  Poly out(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[variable] == 0) continue;
    Exponents d = e;
    --d[variable];
    out.terms_.emplace(std::move(d), c * Rational(static_cast<long>(e[variable])));
  }
  return out;
}

Poly Poly::partial(std::string_view name) const {
  const auto idx = ring_->index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return partial(*idx);
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != ring_->size()) throw std::invalid_argument("substitution arity mismatch");
  const RingPtr& target = images.front().ring();
  // Power cache per variable, grown on demand.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t var, unsigned k) -> const Poly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.emplace_back(target, Rational(1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[var]);
    return cache[k];
  };
  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Poly term(target, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) term = term * power(v, e[v]);
    out += term;
  }
  return out;
}

Poly Poly::embed(const RingPtr& target) const {
  if (same_ring(ring_, target)) return *this;
  std::vector<std::size_t> map(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    const auto idx = target->index_of(ring_->names()[i]);
    if (!idx) {
      if (degree_in(i) > 0)
        throw std::invalid_argument("variable '" + ring_->names()[i] + "' missing from target ring");
      map[i] = target->size();
    } else {
      map[i] = *idx;
    }
  }
  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Exponents d(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) d[map[i]] = e[i];
    out.add_term(d, c);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (constant || !mag.is_one()) {
      os << mag.to_string();
      need_star = true;
    }
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (need_star) os << '*';
      os << ring_->names()[v];
      if (e[v] > 1) os << '^' << e[v];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace projcalc
