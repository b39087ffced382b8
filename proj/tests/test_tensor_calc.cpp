#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "projcalc/tensor_field.hpp"
#include "test_support.hpp"

using namespace projcalc;

namespace {

const RingPtr R3 = chart_ring(3);

TensorField basis_vector(int i) {
  TensorField t(R3, 3, 1, 0);
  t.at({i}) = Poly(R3, Rational(1));
  return t;
}

TensorField basis_covector(int i) {
  TensorField t(R3, 3, 0, 1);
  t.at({i}) = Poly(R3, Rational(1));
  return t;
}

Rational constant(const Poly& p) { return *p.as_constant(); }

}  // namespace

TEST_CASE("contraction") {
  CHECK(constant(contract(TensorField::identity(R3, 3), 0, 0).flat(0)) == Rational(3));
  TensorField x(R3, 3, 1, 0), xi(R3, 3, 0, 1);
  x.at({0}) = parse_poly("x2", R3);
  x.at({2}) = parse_poly("1", R3);
  xi.at({0}) = parse_poly("3", R3);
  xi.at({2}) = parse_poly("x1", R3);
  const TensorField c = contract(tensor_product(x, xi), 0, 0);
  CHECK(c.rank() == 0);
  CHECK(c.flat(0) == parse_poly("3*x2 + x1", R3));
  CHECK(contract(TensorField(R3, 3, 2, 1), 1, 0).is_zero());
  CHECK_THROWS(contract(TensorField(R3, 3, 1, 1), 1, 0));
}

TEST_CASE("symmetrization") {
  const TensorField e12 = tensor_product(basis_covector(0), basis_covector(1));
  const TensorField e21 = tensor_product(basis_covector(1), basis_covector(0));
  const TensorField s = symmetrize(e12, Block::Down);
  CHECK(s == (e12 + e21) * Rational(1, 2));
  CHECK(symmetrize(s, Block::Down) == s);
  CHECK(symmetrize(e12 - e21, Block::Down).is_zero());
  CHECK(s.is_symmetric(Block::Down));
  CHECK(!e12.is_symmetric(Block::Down));
}

TEST_CASE("contract and symmetrize commute on disjoint slots") {
  std::mt19937 rng(3);
  TensorField t(R3, 3, 1, 3);
  for (std::size_t f = 0; f < t.size(); ++f) t.flat(f) = testing::random_poly(rng, R3, 3, 1, 0.5);
  // Contracting the up slot with down slot 0 leaves down slots 1,2 to be symmetrized.
  TensorField sym_tail(R3, 3, 1, 3);
  for (std::size_t f = 0; f < t.size(); ++f) {
    MultiIndex idx = t.unflatten(f);
    MultiIndex swapped = idx;
    std::swap(swapped[2], swapped[3]);
    sym_tail.flat(f) = (t.flat(f) + t[swapped]) * Rational(1, 2);
  }
  CHECK(contract(sym_tail, 0, 0) == symmetrize(contract(t, 0, 0), Block::Down));
}

TEST_CASE("symmetric product") {
  const TensorField e1 = basis_covector(0), e2 = basis_covector(1);
  CHECK(sym_product(e1, e1) == tensor_product(e1, e1));
  CHECK(sym_product(e1, e2) == sym_product(e2, e1));
  // (ε¹∨ε²)(e₁,e₂) = ½(ε¹(e₁)ε²(e₂) + ε²(e₁)ε¹(e₂)) = ½.
  CHECK(constant(sym_product(e1, e2).at({0, 1})) == Rational(1, 2));
  CHECK(sym_product(e1, e2).at({0, 0}).is_zero());
  TensorField w(R3, 3, 0, 0, parse_poly("delta", R3));
  w.flat(0) = Poly(R3, Rational(1));
  CHECK(sym_product(w, w).weight() == parse_poly("2*delta", R3));
  CHECK_THROWS(sym_product(e1, basis_vector(0)));
}

TEST_CASE("pairing") {
  std::mt19937 rng(5);
  const TensorField s = testing::random_symbol(rng, 3, 3, parse_poly("delta", R3));
  TensorField one(R3, 3, 0, 0);
  one.flat(0) = Poly(R3, Rational(1));
  CHECK(pair(s, one) == s);

  // ⟨e₁∨e₁, ε¹∨ε¹⟩: brute-force full contraction over index tuples.
  const TensorField a = sym_product(basis_vector(0), basis_vector(0));
  const TensorField b = sym_product(basis_covector(0), basis_covector(0));
  Poly brute(R3);
  for_each_index(3, 2, [&](const MultiIndex& i) { brute += a[i] * b[i]; });
  CHECK(pair(a, b).flat(0) == brute);
  CHECK(constant(brute) == Rational(1));

  const TensorField c = sym_product(basis_vector(0), basis_vector(1));
  CHECK(constant(pair(c, sym_product(basis_covector(0), basis_covector(1))).flat(0)) == Rational(1, 2));
  CHECK(pair(sym_product(basis_vector(2), basis_vector(2)), b).is_zero());

  TensorField u(R3, 3, 0, 2, parse_poly("1/2", R3));
  for (std::size_t f = 0; f < u.size(); ++f) u.flat(f) = testing::random_poly(rng, R3, 3, 1, 0.5);
  const TensorField p = pair(s, u);
  CHECK(p.up() == 1);
  CHECK(p.weight() == parse_poly("delta + 1/2", R3));
  CHECK(pair(s, u + u) == pair(s, u) + pair(s, u));
  CHECK(pair(s, u.scaled(parse_poly("x1", R3))) == pair(s, u).scaled(parse_poly("x1", R3)));
  CHECK_THROWS(pair(TensorField(R3, 3, 1, 0), u));
  CHECK_THROWS(pair(tensor_product(basis_vector(0), basis_vector(1)), b));
}

TEST_CASE("tensor validation") {
  CHECK_THROWS(TensorField(R3, 3, 1, 0, parse_poly("x1", R3)));
  CHECK_THROWS(TensorField(R3, 0, 1, 0));
  CHECK_THROWS(TensorField(R3, 3, 1, 0) + TensorField(R3, 3, 0, 1));
  CHECK(sorted_indices(3, 2).size() == 6);
}
