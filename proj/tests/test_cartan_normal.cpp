#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "projcalc/cartan.hpp"
#include "projcalc/linear_algebra.hpp"
#include "test_support.hpp"

using namespace projcalc;

namespace {

const RingPtr R3 = chart_ring(3);

GradedElement basis(int n, int m) {
  // 0..m-1 vectors, then m² matrix units, then m covectors.
  if (n < m) return GradedElement::basis_vector(R3, m, n);
  n -= m;
  if (n < m * m) return GradedElement::matrix_unit(R3, m, n / m, n % m);
  return GradedElement::basis_covector(R3, m, n - m * m);
}

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  PolyMatrix out(n, std::vector<Poly>(n, Poly(R3)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
  return out;
}

/// P from the trace condition by an independent linear solve: the normality trace is affine in P,
/// so probe it with P = 0 and each unit matrix, then invert the resulting m²×m² system.
TensorField p_by_linear_solve(const Connection& c) {
  const int m = c.dim();
  const int n = m * m;
  auto trace_of = [&](const TensorField& p) {
    const KappaField kappa = curvature_kappa(make_gauge(c, p));
    std::vector<Poly> t(static_cast<std::size_t>(n), Poly(c.ring()));
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i) t[static_cast<std::size_t>(j * m + k)] += kappa.zero.at({i, j, k, i});
    return t;
  };
  const std::vector<Poly> base = trace_of(TensorField(c.ring(), m, 0, 2));
  RationalMatrix a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  const Connection flat(c.ring(), m);
  for (int u = 0; u < n; ++u) {
    TensorField unit(c.ring(), m, 0, 2);
    unit.at({u / m, u % m}) = Poly(c.ring(), Rational(1));
    // The P-dependence does not involve Γ, so the coefficients can be read off on the flat connection.
    const KappaField kappa = curvature_kappa(make_gauge(flat, unit));
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        Poly t(c.ring());
        for (int i = 0; i < m; ++i) t += kappa.zero.at({i, j, k, i});
        a[static_cast<std::size_t>(j * m + k)][static_cast<std::size_t>(u)] = *t.as_constant();
      }
  }
  const RationalMatrix inv = invert(a);
  TensorField p(c.ring(), m, 0, 2);
  for (int u = 0; u < n; ++u) {
    Poly v(c.ring());
    for (int r = 0; r < n; ++r) v -= base[static_cast<std::size_t>(r)] * inv[static_cast<std::size_t>(u)][static_cast<std::size_t>(r)];
    p.at({u / m, u % m}) = v;
  }
  return p;
}

}  // namespace

TEST_CASE("graded bracket") {
  const int m = 3;
  CHECK(bracket(basis(0, m), basis(1, m)).is_zero());
  // [ε¹, e₁] = e₁⊗ε¹ + Id.
  const GradedElement h1x1 = bracket(GradedElement::basis_covector(R3, m, 0), GradedElement::basis_vector(R3, m, 0));
  GradedElement expected = GradedElement::matrix_unit(R3, m, 0, 0);
  for (int i = 0; i < m; ++i) expected += GradedElement::matrix_unit(R3, m, i, i);
  CHECK(h1x1 == expected);
  // [ε¹, e₂] = e₂⊗ε¹, i.e. the unit (2,1).
  CHECK(bracket(GradedElement::basis_covector(R3, m, 0), GradedElement::basis_vector(R3, m, 1)) ==
        GradedElement::matrix_unit(R3, m, 1, 0));
}

TEST_CASE("bracket agrees with the matrix commutator and satisfies Jacobi") {
  for (int m : {2, 3}) {
    const int n = m + m * m + m;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const GradedElement x = basis(a, m), y = basis(b, m);
        CHECK(to_matrix(bracket(x, y)) == commutator(to_matrix(x), to_matrix(y)));
        CHECK(from_matrix(to_matrix(x), R3) == x);
      }
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        for (int c = b; c < n; ++c) {
          const GradedElement x = basis(a, m), y = basis(b, m), z = basis(c, m);
          GradedElement j = bracket(x, bracket(y, z));
          j += bracket(y, bracket(z, x));
          j += bracket(z, bracket(x, y));
          CHECK(j.is_zero());
        }
  }
}

TEST_CASE("flat model") {
  const NormalGauge g = solve_normality(Connection(R3, 3));
  CHECK(g.p.is_zero());
  const KappaField k = curvature_kappa(g);
  CHECK(k.minus.is_zero());
  CHECK(k.zero.is_zero());
  CHECK(k.plus.is_zero());
}

TEST_CASE("normal gauge of random connections") {
  std::mt19937 rng(21);
  for (int t = 0; t < 3; ++t) {
    const Connection c = testing::random_connection(rng, 3);
    const NormalGauge g = solve_normality(c);
    CHECK(g.p == p_by_linear_solve(c));
    const KappaField k = curvature_kappa(g);
    CHECK(k.minus.is_zero());
    CHECK(normality_check(k).passed);
    CHECK(trace_free_check(k.zero).passed);
    for_each_index(3, 4, [&](const MultiIndex& x) {
      CHECK(k.zero.at({x[0], x[1], x[2], x[3]}) == -k.zero.at({x[0], x[1], x[3], x[2]}));
    });
  }
  CHECK_THROWS(solve_normality(Connection(chart_ring(1), 1)));
}

TEST_CASE("a non-normal P fails the trace check") {
  std::mt19937 rng(22);
  const Connection c = testing::random_connection(rng, 3);
  NormalGauge g = solve_normality(c);
  TensorField p = g.p;
  p.at({0, 1}) += Poly(R3, Rational(1));
  const Report r = normality_check(curvature_kappa(make_gauge(c, p)));
  CHECK(!r.passed);
  CHECK(r.witness.has_value());
}

TEST_CASE("weyl tensor: projective invariance, flatness, dimension two") {
  std::mt19937 rng(23);
  for (int t = 0; t < 2; ++t) {
    const Connection c = testing::random_connection(rng, 3);
    const OneForm a = testing::random_one_form(rng, 3);
    CHECK(weyl_tensor(solve_normality(c)) == weyl_tensor(solve_normality(projective_shift(c, a))));
  }
  const OneForm a = testing::random_one_form(rng, 3, 2);
  const NormalGauge shifted = solve_normality(projective_shift(Connection(R3, 3), a));
  CHECK(!shifted.p.is_zero());
  const KappaField k = curvature_kappa(shifted);
  CHECK(k.zero.is_zero());
  CHECK(k.plus.is_zero());
  for (int t = 0; t < 4; ++t) CHECK(weyl_tensor(solve_normality(testing::random_connection(rng, 2))).is_zero());
}

TEST_CASE("weyl tensor commutes with affine pullback") {
  std::mt19937 rng(24);
  const Connection c = testing::random_connection(rng, 3);
  const AffineMap phi = testing::random_affine(rng, 3);
  CHECK(weyl_tensor(solve_normality(pullback_affine(c, phi))) == pullback_affine(weyl_tensor(solve_normality(c)), phi));
}

TEST_CASE("gauge equivariance") {
  std::mt19937 rng(25);
  const KappaField k = curvature_kappa(solve_normality(testing::random_connection(rng, 3)));
  const GroupElement id{identity_matrix(3), {Rational(0), Rational(0), Rational(0)}};
  const KappaField same = transform_kappa(k, id);
  CHECK(same.zero == k.zero);
  CHECK(same.plus == k.plus);

  const GroupElement pure{identity_matrix(3), {Rational(2), Rational(-1, 3), Rational(5)}};
  CHECK(transform_kappa(k, pure).zero == k.zero);
  CHECK(gauge_equivariance(k, pure).passed);

  // Diagonal g₀: κ₀^i_{jkl} ↦ d_i⁻¹ d_j d_k d_l κ₀^i_{jkl}.
  const std::vector<Rational> d{Rational(2), Rational(-3), Rational(1, 2)};
  RationalMatrix diag = identity_matrix(3);
  for (std::size_t i = 0; i < 3; ++i) diag[i][i] = d[i];
  const KappaField scaled = transform_kappa(k, {diag, {Rational(0), Rational(0), Rational(0)}});
  for_each_index(3, 4, [&](const MultiIndex& x) {
    const Rational f = d[static_cast<std::size_t>(x[1])] * d[static_cast<std::size_t>(x[2])] *
                       d[static_cast<std::size_t>(x[3])] / d[static_cast<std::size_t>(x[0])];
    CHECK(scaled.zero.at({x[0], x[1], x[2], x[3]}) == k.zero.at({x[0], x[1], x[2], x[3]}) * f);
  });

  const GroupElement general{{{Rational(1), Rational(2), Rational(0)},
                              {Rational(0), Rational(1), Rational(-1)},
                              {Rational(1, 3), Rational(0), Rational(1)}},
                             {Rational(1), Rational(0), Rational(-2)}};
  CHECK(gauge_equivariance(k, general).passed);
  RationalMatrix singular(3, std::vector<Rational>(3));
  CHECK_THROWS_AS(transform_kappa(k, {singular, {Rational(0), Rational(0), Rational(0)}}), std::domain_error);
}
