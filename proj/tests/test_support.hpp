#pragma once

#include <random>

#include "projcalc/connection.hpp"

namespace projcalc::testing {

inline Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  return Rational(num(rng), den(rng));
}

/// Sum of monomials of total degree <= degree in x1..xm, each present with probability p.
inline Poly random_poly(std::mt19937& rng, const RingPtr& ring, int m, int degree, double p) {
  std::bernoulli_distribution keep(p);
  Poly out(ring);
  Poly::Exponents e(ring->size(), 0);
  auto visit = [&](auto&& self, int var, int left) -> void {
    if (var == m) {
      if (keep(rng)) out += Poly::monomial(ring, e, small_rational(rng));
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(d);
      self(self, var + 1, left - d);
    }
    e[static_cast<std::size_t>(var)] = 0;
  };
  visit(visit, 0, degree);
  return out;
}

inline Connection random_connection(std::mt19937& rng, int m, int degree = 2, double p = 0.25) {
  const RingPtr ring = chart_ring(m);
  Connection c(ring, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = j; k < m; ++k) c.set_gamma(i, j, k, random_poly(rng, ring, m, degree, p));
  return c;
}

inline OneForm random_one_form(std::mt19937& rng, int m, int degree = 1) {
  const RingPtr ring = chart_ring(m);
  OneForm a;
  for (int k = 0; k < m; ++k) a.components.push_back(random_poly(rng, ring, m, degree, 0.6));
  return a;
}

inline AffineMap random_affine(std::mt19937& rng, int m) {
  for (;;) {
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m));
    std::vector<Rational> b;
    for (auto& row : a)
      for (int j = 0; j < m; ++j) row.push_back(small_rational(rng));
    for (int j = 0; j < m; ++j) b.push_back(small_rational(rng));
    try {
      return AffineMap(std::move(a), std::move(b));
    } catch (const std::domain_error&) {
    }
  }
}

/// Symmetric contravariant tensor with random constant-or-linear components and the given weight.
inline TensorField random_symbol(std::mt19937& rng, int m, int k, const Poly& weight) {
  const RingPtr ring = chart_ring(m);
  TensorField s(ring, m, k, 0, weight);
  for (const auto& idx : sorted_indices(m, k)) {
    const Poly v = random_poly(rng, ring, m, 1, 0.5);
    MultiIndex perm = idx;
    do {
      s[perm] = v;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return s;
}

}  // namespace projcalc::testing
