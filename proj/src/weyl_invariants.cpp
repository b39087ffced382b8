#include "projcalc/weyl_invariants.hpp"

#include <numeric>
#include <sstream>

namespace projcalc {

Derangement::Derangement(std::vector<int> images) : sigma_(std::move(images)) {
  const int j = static_cast<int>(sigma_.size());
  if (j < 2) throw std::invalid_argument("derangement needs j >= 2");
  std::vector<bool> seen(static_cast<std::size_t>(j), false);
  for (int t = 0; t < j; ++t) {
    const int s = sigma_[static_cast<std::size_t>(t)];
    if (s < 0 || s >= j || seen[static_cast<std::size_t>(s)]) throw std::invalid_argument("sigma is not a permutation");
    if (s == t) throw std::invalid_argument("sigma has a fixed point at " + std::to_string(t + 1));
    seen[static_cast<std::size_t>(s)] = true;
  }
}

Derangement Derangement::cycle(int j) {
  std::vector<int> images(static_cast<std::size_t>(std::max(j, 0)));
  for (int t = 0; t < j; ++t) images[static_cast<std::size_t>(t)] = (t + 1) % j;
  return Derangement(std::move(images));
}

Derangement Derangement::parse(const std::string& text) {
  std::vector<int> images;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used == 0) throw std::invalid_argument("malformed sigma '" + text + "'");
    images.push_back(v - 1);
  }
  return Derangement(std::move(images));
}

std::string Derangement::to_string() const {
  std::string s;
  for (int v : sigma_) s += (s.empty() ? "" : ",") + std::to_string(v + 1);
  return s;
}

CriticalDelta::CriticalDelta(int gamma_index, const Rational& delta)
    : std::domain_error("critical delta " + delta.to_string() + ": gamma_" + std::to_string(gamma_index) +
                        " vanishes"),
      gamma_index_(gamma_index) {}

TensorField build_w(const TensorField& kappa0, const Derangement& sigma) {
  if (kappa0.up() != 1 || kappa0.down() != 3) throw std::invalid_argument("build_w needs a (1,3) tensor");
  const int m = kappa0.dim();
  const int j = sigma.j();
  const RingPtr& ring = kappa0.ring();
  TensorField q(ring, m, 0, 2 * j);
  if (kappa0.is_zero()) return q;
  auto factor = [&](int upper, int a, int b, int c) -> const Poly& { return kappa0.at({upper, a, b, c}); };
  MultiIndex r(static_cast<std::size_t>(j));
  for (std::size_t f = 0; f < q.size(); ++f) {
    const MultiIndex idx = q.unflatten(f);
    Poly acc(ring);
    std::fill(r.begin(), r.end(), 0);
    for (;;) {
      Poly prod(ring, Rational(1));
      for (int t = 0; t < j && !prod.is_zero(); ++t) {
        const Poly& k = factor(r[static_cast<std::size_t>(t)], idx[static_cast<std::size_t>(2 * t)],
                               idx[static_cast<std::size_t>(2 * t + 1)], r[static_cast<std::size_t>(sigma(t))]);
        if (k.is_zero())
          prod = Poly(ring);
        else
          prod = prod * k;
      }
      acc += prod;
      int s = j - 1;
      while (s >= 0 && ++r[static_cast<std::size_t>(s)] == m) r[static_cast<std::size_t>(s--)] = 0;
      if (s < 0) break;
    }
    q.flat(f) = std::move(acc);
  }
  // Σ_ν over all (2j)! orderings = (2j)! × the normalised symmetrisation.
  return symmetrize(q, Block::Down) * factorial(2 * j);
}

RationalFunction gamma_value(int n, int m) {
  return RationalFunction(Rational(m + n, m + 1)) - RationalFunction::delta();
}

Rational gamma_value(int n, int m, const Rational& delta) { return Rational(m + n, m + 1) - delta; }

namespace {

void require_coefficient_range(int l, int r, int j) {
  if (j < 2) throw std::invalid_argument("coefficient needs j >= 2");
  if (l < 2 * j) throw std::invalid_argument("coefficient needs l >= 2j");
  if (r < 0 || r > l - 2 * j) throw std::invalid_argument("coefficient needs 0 <= r <= l-2j");
}

Rational coefficient_prefactor(int l, int r, int j, int m) {
  return factorial(l + 2 * j - 1) * binomial(l - 2 * j, r) /
         (pow(Rational(m + 1), static_cast<unsigned>(r)) * factorial(l + 2 * j - 1 - r));
}

}  // namespace

RationalFunction coefficient(int k, int l, int r, int j, int m) {
  require_coefficient_range(l, r, j);
  if (r == 0) return RationalFunction(1);
  RationalFunction denom(1);
  for (int i = 1; i <= r; ++i) denom *= gamma_value(2 * k - i, m);
  return RationalFunction(coefficient_prefactor(l, r, j, m)) / denom;
}

Rational coefficient(int k, int l, int r, int j, int m, const Rational& delta) {
  require_coefficient_range(l, r, j);
  if (r == 0) return Rational(1);
  Rational denom(1);
  for (int i = 1; i <= r; ++i) {
    const Rational g = gamma_value(2 * k - i, m, delta);
    if (g.is_zero()) throw CriticalDelta(2 * k - i, delta);
    denom *= g;
  }
  return coefficient_prefactor(l, r, j, m) / denom;
}

namespace {

nlohmann::json recursion_parameters(int k, int l, int j, int m) {
  return {{"k", k}, {"l", l}, {"j", j}, {"m", m}};
}

constexpr const char* kRecursionIdentity =
    "C_{k,l,r} r (m+2k-r-(m+1)delta) = C_{k,l,r-1} (l-r-2j+1)(l-r+2j)";

}  // namespace

Report check_recursion(int k, int l, int j, int m) {
  Report rep{kRecursionIdentity, recursion_parameters(k, l, j, m)};
  rep.parameters["delta"] = "formal";
  for (int r = 1; r <= l - 2 * j; ++r) {
    const RationalFunction factor = RationalFunction(Rational(m + 2 * k - r)) -
                                    RationalFunction(Rational(m + 1)) * RationalFunction::delta();
    const RationalFunction lhs = coefficient(k, l, r, j, m) * RationalFunction(Rational(r)) * factor;
    const RationalFunction rhs =
        coefficient(k, l, r - 1, j, m) * RationalFunction(Rational((l - r - 2 * j + 1) * (l - r + 2 * j)));
    if (!(lhs == rhs)) rep.fail("r=" + std::to_string(r) + ": " + lhs.to_string() + " != " + rhs.to_string());
  }
  return rep;
}

Report check_recursion(int k, int l, int j, int m, const Rational& delta) {
  Report rep{kRecursionIdentity, recursion_parameters(k, l, j, m)};
  rep.parameters["delta"] = delta.to_string();
  for (int r = 1; r <= l - 2 * j; ++r) {
    const Rational lhs = coefficient(k, l, r, j, m, delta) * Rational(r) *
                         (Rational(m + 2 * k - r) - Rational(m + 1) * delta);
    const Rational rhs = coefficient(k, l, r - 1, j, m, delta) * Rational((l - r - 2 * j + 1) * (l - r + 2 * j));
    if (lhs != rhs) rep.fail("r=" + std::to_string(r) + ": " + lhs.to_string() + " != " + rhs.to_string());
  }
  return rep;
}

TensorField weyl_invariant(const NormalGauge& g, const Derangement& sigma) {
  return build_w(weyl_tensor(g), sigma);
}

namespace {

void require_symbol(const TensorField& s, int min_order, const char* op) {
  if (s.down() != 0) throw std::invalid_argument(std::string(op) + ": symbol must be contravariant");
  if (s.up() < min_order)
    throw std::invalid_argument(std::string(op) + " requires k >= " + std::to_string(min_order) + " (got k = " +
                                std::to_string(s.up()) + ")");
}

}  // namespace

TensorField map4(const TensorField& symbol, const NormalGauge& g, const Derangement& sigma) {
  require_symbol(symbol, 4, "map4");
  if (sigma.j() != 2) throw std::invalid_argument("map4 uses the j = 2 invariant");
  return pair(symbol, weyl_invariant(g, sigma));
}

Rational map5_coefficient(int k, int m, const Rational& delta) {
  const Rational g = gamma_value(2 * k - 1, m, delta);
  if (g.is_zero()) throw CriticalDelta(2 * k - 1, delta);
  return Rational(8) / (Rational(m + 1) * g);
}

TensorField map5_with_coefficient(const TensorField& symbol, const NormalGauge& g, const Derangement& sigma,
                                  const Rational& c) {
  require_symbol(symbol, 5, "map5");
  if (sigma.j() != 2) throw std::invalid_argument("map5 uses the j = 2 invariant");
  const TensorField t = weyl_invariant(g, sigma);
  TensorField out = pair(symbol, covariant_derivative(g.connection, t));
  out += pair(divergence(g.connection, symbol), t) * c;
  return out;
}

TensorField map5(const TensorField& symbol, const NormalGauge& g, const Derangement& sigma, int k,
                 const Rational& delta) {
  require_symbol(symbol, 5, "map5");
  if (symbol.up() != k) throw std::invalid_argument("map5: symbol order differs from k");
  if (!(symbol.weight() == Poly(symbol.ring(), delta)))
    throw std::invalid_argument("map5: symbol weight must equal delta");
  return map5_with_coefficient(symbol, g, sigma, map5_coefficient(k, g.connection.dim(), delta));
}

}  // namespace projcalc
