#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "projcalc/formal.hpp"
#include "projcalc/linear_algebra.hpp"

using namespace projcalc;
using namespace projcalc::formal;

namespace {

struct Fixture {
  Context ctx{3};
  int w = ctx.add_generator({"W", 4, 0, RationalFunction(), true});
  int s = ctx.add_generator({"S", 0, 3, RationalFunction::delta(), true});

  Factor factor(int gen, std::vector<std::int8_t> letters, std::vector<std::int8_t> values) const {
    Factor f{static_cast<std::uint8_t>(gen), std::move(letters), std::move(values)};
    ctx.canonicalize(f);
    return f;
  }
};

std::size_t flat(const MultiIndex& idx, int m) {
  std::size_t f = 0;
  for (int v : idx) f = f * static_cast<std::size_t>(m) + static_cast<std::size_t>(v);
  return f;
}

/// (ε^c ∨ T) for a symmetric covariant T of rank n: (1/(n+1)) Σ_p δ^c_{x_p} T[x without p].
FormalTensor covector_product(int c, const FormalTensor& t, int m) {
  const int n = t.rank();
  FormalTensor out{std::vector<Block>(static_cast<std::size_t>(n + 1), Block::Down), {}};
  std::size_t total = 1;
  for (int i = 0; i <= n; ++i) total *= static_cast<std::size_t>(m);
  out.comps.resize(total);
  for (std::size_t f = 0; f < total; ++f) {
    MultiIndex x(static_cast<std::size_t>(n + 1));
    std::size_t g = f;
    for (int s = n; s >= 0; --s) {
      x[static_cast<std::size_t>(s)] = static_cast<int>(g % static_cast<std::size_t>(m));
      g /= static_cast<std::size_t>(m);
    }
    FormalExpr acc;
    for (int p = 0; p <= n; ++p) {
      if (x[static_cast<std::size_t>(p)] != c) continue;
      MultiIndex rest = x;
      rest.erase(rest.begin() + p);
      acc += t.comps[flat(rest, m)];
    }
    out.comps[f] = acc * RationalFunction(Rational(1, n + 1));
  }
  return out;
}

/// L_{h*} L_a W[I] for a weight-0 covariant W of rank n, from [ε^c, e_a] = e_a⊗ε^c + δ^c_a Id:
/// −n δ^c_a W[I] − Σ_p δ^c_{i_p} W[I with i_p replaced by a].
FormalTensor first_derivative_oracle(int c, const FormalTensor& w, int m) {
  const int n = w.rank();
  FormalTensor out{std::vector<Block>(static_cast<std::size_t>(n + 1), Block::Down), {}};
  out.comps.resize(w.comps.size() * static_cast<std::size_t>(m));
  for (std::size_t f = 0; f < out.comps.size(); ++f) {
    const int a = static_cast<int>(f / w.comps.size());
    const std::size_t rest = f % w.comps.size();
    MultiIndex idx(static_cast<std::size_t>(n));
    std::size_t g = rest;
    for (int s = n - 1; s >= 0; --s) {
      idx[static_cast<std::size_t>(s)] = static_cast<int>(g % static_cast<std::size_t>(m));
      g /= static_cast<std::size_t>(m);
    }
    FormalExpr acc;
    if (a == c) acc -= w.comps[rest] * RationalFunction(n);
    for (int p = 0; p < n; ++p) {
      if (idx[static_cast<std::size_t>(p)] != c) continue;
      MultiIndex moved = idx;
      moved[static_cast<std::size_t>(p)] = a;
      acc -= w.comps[flat(moved, m)];
    }
    out.comps[f] = acc;
  }
  return out;
}

DiagonalForm scale_diagonal(DiagonalForm d, int c) {
  for (auto& [k, v] : d) v *= RationalFunction(c);
  return d;
}

bool tensors_equal(const FormalTensor& a, const FormalTensor& b) {
  if (a.slots != b.slots || a.comps.size() != b.comps.size()) return false;
  for (std::size_t i = 0; i < a.comps.size(); ++i)
    if (!(a.comps[i] == b.comps[i])) return false;
  return true;
}

FormalExpr random_expr(std::mt19937& rng, const Fixture& fx, int terms) {
  std::uniform_int_distribution<int> idx(0, 2), len(0, 3), coin(0, 1);
  FormalExpr out;
  for (int t = 0; t < terms; ++t) {
    std::vector<std::int8_t> letters, wv, sv;
    for (int i = len(rng); i > 0; --i) letters.push_back(static_cast<std::int8_t>(idx(rng)));
    for (int i = 0; i < 4; ++i) wv.push_back(static_cast<std::int8_t>(idx(rng)));
    for (int i = 0; i < 3; ++i) sv.push_back(static_cast<std::int8_t>(idx(rng)));
    FormalExpr e = FormalExpr::factor(fx.factor(fx.w, letters, wv), RationalFunction(Rational(idx(rng) + 1)));
    if (coin(rng)) e = e * FormalExpr::factor(fx.factor(fx.s, {static_cast<std::int8_t>(idx(rng))}, sv));
    out += e;
  }
  return out;
}

RationalMatrix random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> v(-3, 3);
  RationalMatrix a(3, std::vector<Rational>(3));
  for (auto& row : a)
    for (auto& x : row) x = Rational(v(rng), 2);
  return a;
}

}  // namespace

TEST_CASE("deriv") {
  Fixture fx;
  CHECK(deriv(fx.ctx, 1, FormalExpr()).is_zero());
  const FormalExpr w = FormalExpr::factor(fx.factor(fx.w, {}, {0, 1, 1, 2}));
  CHECK(deriv(fx.ctx, 1, w) == FormalExpr::factor(fx.factor(fx.w, {1}, {0, 1, 1, 2})));
  const FormalExpr v = FormalExpr::factor(fx.factor(fx.w, {2}, {0, 0, 0, 0}));
  const RationalFunction a = RationalFunction::delta(), b(Rational(-5, 2));
  CHECK(deriv(fx.ctx, 0, w * a + v * b) == deriv(fx.ctx, 0, w) * a + deriv(fx.ctx, 0, v) * b);
  // Letters are never reordered.
  CHECK(!(deriv(fx.ctx, 0, deriv(fx.ctx, 1, w)) == deriv(fx.ctx, 1, deriv(fx.ctx, 0, w))));
  // Leibniz on products.
  CHECK(deriv(fx.ctx, 2, w * v) == deriv(fx.ctx, 2, w) * v + w * deriv(fx.ctx, 2, v));
  CHECK_THROWS(deriv(fx.ctx, 3, w));
}

TEST_CASE("symmetrized derivatives") {
  Fixture fx;
  const FormalTensor wt = generator_tensor(fx.ctx, fx.w);
  CHECK(tensors_equal(sym_deriv(fx.ctx, 0, wt), wt));
  CHECK(tensors_equal(sym_deriv(fx.ctx, 1, wt), nabla(fx.ctx, wt)));
  for (int k = 0; k <= 3; ++k) CHECK(diagonal(sym_deriv(fx.ctx, k, wt)) == diagonal_sym_deriv(fx.ctx, fx.w, k));
  // Evaluated on (X, X): the X^1 X^1 coefficient of ∇_s² W at W-slots (1,1,1,1) is the single word L1 L1 W.
  const DiagonalForm d2 = diagonal_sym_deriv(fx.ctx, fx.w, 2);
  CHECK(d2.at({0, 0, 0, 0, 0, 0}) == FormalExpr::factor(fx.factor(fx.w, {0, 0}, {0, 0, 0, 0})));
}

TEST_CASE("g1 action on generators and first derivatives") {
  Fixture fx;
  const FormalTensor wt = generator_tensor(fx.ctx, fx.w);
  const FormalTensor st = generator_tensor(fx.ctx, fx.s);
  for (int c = 0; c < 3; ++c) {
    G1Action act(fx.ctx, c);
    CHECK(act(wt).is_zero());
    CHECK(act(st).is_zero());
    const FormalTensor got = act(nabla(fx.ctx, wt));
    CHECK(tensors_equal(got, first_derivative_oracle(c, wt, 3)));
    // Symmetrized, this is L_{h*} ∇_s W = −8 h∨W for j = 2.
    const DiagonalForm hw = diagonal(covector_product(c, wt, 3));
    CHECK(diagonal(got) == scale_diagonal(hw, -8));
    CHECK(!(diagonal(got) == scale_diagonal(hw, -7)));
  }
  Context c6(3);
  const int w6 = c6.add_generator({"W", 6, 0, RationalFunction(), true});
  const FormalTensor w6t = generator_tensor(c6, w6);
  G1Action act(c6, 1);
  const FormalTensor got = act(nabla(c6, w6t));
  CHECK(tensors_equal(got, first_derivative_oracle(1, w6t, 3)));
  CHECK(diagonal(got) == scale_diagonal(diagonal(covector_product(1, w6t, 3)), -12));
}

TEST_CASE("diagonal of a covector product") {
  Fixture fx;
  const FormalTensor d1 = sym_deriv(fx.ctx, 1, generator_tensor(fx.ctx, fx.w));
  for (int c = 0; c < 3; ++c)
    CHECK(diagonal(covector_product(c, d1, 3)) == diagonal_covector_product(c, diagonal(d1)));
}

TEST_CASE("g0 action") {
  Fixture fx;
  const RationalMatrix id = identity_matrix(3);
  const FormalTensor wt = generator_tensor(fx.ctx, fx.w);
  const FormalTensor st = generator_tensor(fx.ctx, fx.s);
  for (const auto& e : wt.comps) CHECK(g0_action(fx.ctx, id, e) == e * RationalFunction(4));
  const RationalFunction expected = RationalFunction(-3) + RationalFunction(3) * RationalFunction::delta();
  for (const auto& e : st.comps) CHECK(g0_action(fx.ctx, id, e) == e * expected);
  CHECK(g0_action(fx.ctx, id, FormalExpr()).is_zero());
  // Each derivative letter is one more covariant slot.
  const FormalExpr word = FormalExpr::factor(fx.factor(fx.w, {0, 2}, {0, 1, 1, 2}));
  CHECK(g0_action(fx.ctx, id, word) == word * RationalFunction(6));

  std::mt19937 rng(41);
  for (int t = 0; t < 25; ++t) {
    const RationalMatrix a = random_matrix(rng);
    const FormalExpr e = random_expr(rng, fx, 4);
    CHECK(g0_action(fx.ctx, a, e) == g0_action_recursive(fx.ctx, a, e));
    CHECK(g0_action(fx.ctx, a, deriv(fx.ctx, 1, e)) ==
          deriv(fx.ctx, 1, g0_action(fx.ctx, a, e)) +
              [&] {
                FormalExpr acc;
                for (int r = 0; r < 3; ++r)
                  if (!a[static_cast<std::size_t>(r)][1].is_zero())
                    acc += deriv(fx.ctx, r, e) * RationalFunction(a[static_cast<std::size_t>(r)][1]);
                return acc;
              }());
  }
}

TEST_CASE("g1 action is a derivation") {
  Fixture fx;
  std::mt19937 rng(42);
  for (int t = 0; t < 10; ++t) {
    const FormalExpr a = random_expr(rng, fx, 3), b = random_expr(rng, fx, 2);
    G1Action act(fx.ctx, t % 3);
    CHECK(act(a * b) == act(a) * b + a * act(b));
    CHECK(act(a + b) == act(a) + act(b));
  }
}

TEST_CASE("divergence") {
  Fixture fx;
  CHECK_THROWS(formal_div(fx.ctx, generator_tensor(fx.ctx, fx.w)));
  Context c0(3);
  const int s0 = c0.add_generator({"S", 0, 0, RationalFunction::delta(), true});
  CHECK_THROWS(formal_div(c0, generator_tensor(c0, s0)));

  // L_{h*} Div S = (m + 2k − 1 − (m+1)δ) ι_h S with m = 3, k = 3.
  const FormalTensor st = generator_tensor(fx.ctx, fx.s);
  const FormalTensor div = formal_div(fx.ctx, st);
  CHECK(div.rank() == 2);
  const RationalFunction factor = RationalFunction(8) - RationalFunction(4) * RationalFunction::delta();
  for (int c = 0; c < 3; ++c) {
    G1Action act(fx.ctx, c);
    const FormalTensor got = act(div);
    for (std::size_t f = 0; f < got.comps.size(); ++f)
      CHECK(got.comps[f] == st.comps[static_cast<std::size_t>(c) * 9 + f] * factor);
  }
}

TEST_CASE("lemma") {
  const Report k0 = verify_lemma(0, 2, 3);
  CHECK(k0.passed);
  const Report k1 = verify_lemma(1, 2, 3);
  CHECK(k1.passed);
  CHECK(k1.parameters["coefficient"] == -8);
  const Report k2 = verify_lemma(2, 2, 3);
  CHECK(k2.passed);
  CHECK(k2.parameters["coefficient"] == -18);
  CHECK(verify_lemma(2, 3, 3).passed);
  CHECK(verify_lemma(3, 2, 4).passed);
  CHECK_THROWS(verify_lemma(1, 1, 3));
}

TEST_CASE("theorem") {
  for (int l : {4, 5, 6}) CHECK(verify_theorem(l, l, 2, 3).passed);
  CHECK(verify_theorem(6, 5, 2, 3).passed);
  CHECK(verify_theorem(5, 4, 2, 3).passed);
  CHECK_THROWS(verify_theorem(4, 5, 2, 3));
  CHECK_THROWS(verify_theorem(3, 3, 2, 3));
  for (int r = 0; r <= 1; ++r) CHECK(!verify_theorem(5, 5, 2, 3, r).passed);
  // l = 2j: the single coefficient only fixes an overall scale.
  CHECK(verify_theorem(4, 4, 2, 3, 0).passed);
}

TEST_CASE("sharpness") {
  CHECK(theorem_sharpness(5, 5, 2, 3).passed);
  CHECK(theorem_sharpness(6, 6, 2, 3).passed);
  CHECK(!theorem_sharpness(4, 4, 2, 3).passed);
}
