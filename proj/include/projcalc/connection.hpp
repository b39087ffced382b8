#pragma once

#include <vector>

#include "projcalc/poly.hpp"
#include "projcalc/tensor_field.hpp"

namespace projcalc {

/// Invertible affine map x = A y + b with rational entries.
class AffineMap {
 public:
  AffineMap(std::vector<std::vector<Rational>> matrix, std::vector<Rational> shift);
  static AffineMap identity(int dim);

  int dim() const { return static_cast<int>(b_.size()); }
  const std::vector<std::vector<Rational>>& matrix() const { return a_; }
  const std::vector<Rational>& shift() const { return b_; }
  const std::vector<std::vector<Rational>>& inverse_matrix() const { return a_inv_; }
  Rational determinant() const { return det_; }

  /// (this ∘ inner)(y) = A (A' y + b') + b.
  AffineMap compose(const AffineMap& inner) const;

  /// Images of the chart variables under y ↦ A y + b, in the chart ring.
  std::vector<Poly> coordinate_images(const RingPtr& ring) const;

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::vector<Rational>> a_inv_;
  Rational det_;
};

/// Torsion-free linear connection on a chart: Christoffel symbols Γ^i_{jk} = Γ^i_{kj}.
class Connection {
 public:
  /// The flat connection Γ = 0.
  Connection(RingPtr ring, int dim);

  const RingPtr& ring() const { return ring_; }
  int dim() const { return dim_; }

  const Poly& gamma(int i, int j, int k) const { return gamma_[index(i, j, k)]; }
  /// Sets Γ^i_{jk} and Γ^i_{kj}.
  void set_gamma(int i, int j, int k, const Poly& value);

  /// Γ^r_{rk}.
  Poly trace(int k) const;

  friend bool operator==(const Connection& a, const Connection& b) { return a.gamma_ == b.gamma_; }

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }
  RingPtr ring_;
  int dim_;
  std::vector<Poly> gamma_;
};

/// Polynomial one-form α = α_k dx^k.
struct OneForm {
  std::vector<Poly> components;
};

/// R^i_{jkl} = ∂_k Γ^i_{lj} − ∂_l Γ^i_{kj} + Γ^i_{kr}Γ^r_{lj} − Γ^i_{lr}Γ^r_{kj}.
TensorField curvature(const Connection& c);

/// R_{jl} = R^i_{jil}.
TensorField ricci(const Connection& c);

/// ∇t with the derivative index appended as the last covariant slot. A density of
/// weight w picks up −w Γ^r_{rk} t.
TensorField covariant_derivative(const Connection& c, const TensorField& t);

/// (Div S)^{I} = ∇_j S^{jI} for a symmetric contravariant density S of order ≥ 1.
TensorField divergence(const Connection& c, const TensorField& s);

/// Γ'^i_{jk} = Γ^i_{jk} + δ^i_j α_k + δ^i_k α_j.
Connection projective_shift(const Connection& c, const OneForm& alpha);

/// Pullback of the connection along x = A y + b.
Connection pullback_affine(const Connection& c, const AffineMap& map);

/// Pullback of a tensor field along x = A y + b. The constant factor |det A|^w of a
/// weight-w density is not applied.
TensorField pullback_affine(const TensorField& t, const AffineMap& map);

}  // namespace projcalc
