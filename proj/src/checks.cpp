#include "projcalc/checks.hpp"

namespace projcalc {

namespace {

std::string component_name(const TensorField& t, std::size_t f) {
  const MultiIndex idx = t.unflatten(f);
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) s += static_cast<int>(i) == t.up() ? ";" : ",";
    s += std::to_string(idx[i] + 1);
  }
  if (t.up() == static_cast<int>(idx.size()) && !idx.empty()) s += ";";
  return s + ")";
}

TensorField weyl_of(const Connection& c) { return weyl_tensor(solve_normality(c)); }

}  // namespace

void compare_tensors(const TensorField& lhs, const TensorField& rhs, Report& rep, const std::string& what) {
  if (lhs.up() != rhs.up() || lhs.down() != rhs.down()) {
    rep.fail(what + ": tensor types differ");
    return;
  }
  for (std::size_t f = 0; f < lhs.size(); ++f)
    if (!(lhs.flat(f) == rhs.flat(f))) {
      rep.fail(what + ": component " + component_name(lhs, f) + " is " + lhs.flat(f).to_string() + " vs " +
               rhs.flat(f).to_string());
      return;
    }
}

Report weyl_projective_invariance(const Connection& c, const OneForm& alpha) {
  Report rep{"kappa0(Gamma) = kappa0(Gamma + projective shift by alpha)", {{"m", c.dim()}}};
  compare_tensors(weyl_of(c), weyl_of(projective_shift(c, alpha)), rep, "kappa0");
  return rep;
}

Report weyl_affine_naturality(const Connection& c, const AffineMap& map) {
  Report rep{"kappa0(phi* Gamma) = phi* kappa0(Gamma)", {{"m", c.dim()}}};
  compare_tensors(weyl_of(pullback_affine(c, map)), pullback_affine(weyl_of(c), map), rep, "kappa0");
  return rep;
}

Report map4_projective_invariance(const TensorField& symbol, const Connection& c, const OneForm& alpha,
                                  const Derangement& sigma) {
  Report rep{"map4(S, Gamma) = map4(S, Gamma + projective shift by alpha)",
             {{"m", c.dim()}, {"k", symbol.up()}, {"sigma", sigma.to_string()}}};
  compare_tensors(map4(symbol, solve_normality(c), sigma),
                  map4(symbol, solve_normality(projective_shift(c, alpha)), sigma), rep, "map4");
  return rep;
}

Report map4_affine_naturality(const TensorField& symbol, const Connection& c, const AffineMap& map,
                              const Derangement& sigma) {
  Report rep{"phi* map4(S, Gamma) = map4(phi* S, phi* Gamma)",
             {{"m", c.dim()}, {"k", symbol.up()}, {"sigma", sigma.to_string()}}};
  compare_tensors(pullback_affine(map4(symbol, solve_normality(c), sigma), map),
                  map4(pullback_affine(symbol, map), solve_normality(pullback_affine(c, map)), sigma), rep, "map4");
  return rep;
}

Report map5_projective_invariance(const TensorField& symbol, const Connection& c, const OneForm& alpha,
                                  const Derangement& sigma, const Rational& c5) {
  Report rep{"map5(S, Gamma) = map5(S, Gamma + projective shift by alpha)",
             {{"m", c.dim()}, {"k", symbol.up()}, {"sigma", sigma.to_string()}, {"coefficient", c5.to_string()}}};
  compare_tensors(map5_with_coefficient(symbol, solve_normality(c), sigma, c5),
                  map5_with_coefficient(symbol, solve_normality(projective_shift(c, alpha)), sigma, c5), rep,
                  "map5");
  return rep;
}

Report map5_affine_naturality(const TensorField& symbol, const Connection& c, const AffineMap& map,
                              const Derangement& sigma, const Rational& c5) {
  Report rep{"phi* map5(S, Gamma) = map5(phi* S, phi* Gamma)",
             {{"m", c.dim()}, {"k", symbol.up()}, {"sigma", sigma.to_string()}, {"coefficient", c5.to_string()}}};
  compare_tensors(
      pullback_affine(map5_with_coefficient(symbol, solve_normality(c), sigma, c5), map),
      map5_with_coefficient(pullback_affine(symbol, map), solve_normality(pullback_affine(c, map)), sigma, c5), rep,
      "map5");
  return rep;
}

TensorField position_power_symbol(int dim, int k, const Rational& delta) {
  const RingPtr ring = chart_ring(dim);
  TensorField s(ring, dim, k, 0, Poly(ring, delta));
  for (std::size_t f = 0; f < s.size(); ++f) {
    Poly v(ring, Rational(1));
    for (int i : s.unflatten(f)) v = v * Poly::variable(ring, ring->names()[static_cast<std::size_t>(i)]);
    s.flat(f) = std::move(v);
  }
  return s;
}

}  // namespace projcalc
