#pragma once

#include <stdexcept>
#include <vector>

#include "projcalc/cartan.hpp"
#include "projcalc/rational_function.hpp"
#include "projcalc/report.hpp"

namespace projcalc {

/// Fixed-point-free permutation of {0..j-1}, j ≥ 2.
class Derangement {
 public:
  explicit Derangement(std::vector<int> images);
  /// The cyclic shift t ↦ t+1 mod j.
  static Derangement cycle(int j);
  /// Parses 1-based images such as "2,1" or "2,3,1".
  static Derangement parse(const std::string& text);

  int j() const { return static_cast<int>(sigma_.size()); }
  int operator()(int t) const { return sigma_[static_cast<std::size_t>(t)]; }
  const std::vector<int>& images() const { return sigma_; }
  std::string to_string() const;

 private:
  std::vector<int> sigma_;
};

/// A γ-factor vanished: delta is critical for the requested coefficient.
class CriticalDelta : public std::domain_error {
 public:
  CriticalDelta(int gamma_index, const Rational& delta);
  int gamma_index() const { return gamma_index_; }

 private:
  int gamma_index_;
};

/// W_{i1..i2j} = Σ_ν Σ_r Π_t κ₀^{r_t}_{i_ν(2t−1) i_ν(2t) r_σ(t)}, with κ₀ read in its (1,3) slot order
/// (upper, g₀ lower, two form slots). Fully symmetric covariant of order 2j, weight 0.
TensorField build_w(const TensorField& kappa0, const Derangement& sigma);

/// γ_n = (m+n)/(m+1) − δ with δ formal.
RationalFunction gamma_value(int n, int m);
Rational gamma_value(int n, int m, const Rational& delta);

/// C_{k,l,r} = (l+2j−1)! binom(l−2j, r) / ((m+1)^r (l+2j−1−r)! γ_{2k−1}⋯γ_{2k−r}), C_{k,l,0} = 1.
RationalFunction coefficient(int k, int l, int r, int j, int m);
/// Same at a rational delta; throws CriticalDelta naming the vanishing γ.
Rational coefficient(int k, int l, int r, int j, int m, const Rational& delta);

/// C_{k,l,r} r (m+2k−r−(m+1)δ) = C_{k,l,r−1} (l−r−2j+1)(l−r+2j) for r = 1..l−2j, δ formal.
Report check_recursion(int k, int l, int j, int m);
/// Same identity at a rational delta.
Report check_recursion(int k, int l, int j, int m, const Rational& delta);

/// T = build_w(weyl_tensor(g), σ).
TensorField weyl_invariant(const NormalGauge& g, const Derangement& sigma);

/// ⟨S, T⟩ for j = 2; S symmetric contravariant of order k ≥ 4.
TensorField map4(const TensorField& symbol, const NormalGauge& g, const Derangement& sigma);

/// ⟨S, ∇_s T⟩ + 8/((m+1)γ_{2k−1}) ⟨Div S, T⟩ for j = 2; S of order k ≥ 5 and weight delta.
TensorField map5(const TensorField& symbol, const NormalGauge& g, const Derangement& sigma, int k,
                 const Rational& delta);

/// ⟨S, ∇_s T⟩ + c ⟨Div S, T⟩ with an arbitrary coefficient c.
TensorField map5_with_coefficient(const TensorField& symbol, const NormalGauge& g, const Derangement& sigma,
                                  const Rational& c);

/// 8/((m+1)γ_{2k−1}).
Rational map5_coefficient(int k, int m, const Rational& delta);

}  // namespace projcalc
