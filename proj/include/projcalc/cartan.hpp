#pragma once

#include <vector>

#include "projcalc/connection.hpp"
#include "projcalc/linear_algebra.hpp"
#include "projcalc/report.hpp"
#include "projcalc/tensor_field.hpp"

namespace projcalc {

/// Element of g₋₁ ⊕ g₀ ⊕ g₁ ≅ sl(m+1): a vector X, a matrix A (A^i_j at i*m+j) and a covector h.
struct GradedElement {
  int dim = 0;
  std::vector<Poly> vec;
  std::vector<Poly> mat;
  std::vector<Poly> covec;

  static GradedElement zero(const RingPtr& ring, int dim);
  static GradedElement basis_vector(const RingPtr& ring, int dim, int i);
  static GradedElement basis_covector(const RingPtr& ring, int dim, int j);
  static GradedElement matrix_unit(const RingPtr& ring, int dim, int i, int j);

  const Poly& a(int i, int j) const { return mat[static_cast<std::size_t>(i * dim + j)]; }
  Poly& a(int i, int j) { return mat[static_cast<std::size_t>(i * dim + j)]; }

  bool is_zero() const;
  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  GradedElement scaled(const Poly& c) const;
  friend bool operator==(const GradedElement& a, const GradedElement& b) {
    return a.dim == b.dim && a.vec == b.vec && a.mat == b.mat && a.covec == b.covec;
  }
};

/// Graded bracket: [X,Y]=0, [A,X]=AX, [A,h]=−h∘A, [A,B]=AB−BA, [h,h']=0,
/// [h,X] = X⊗h + ⟨h,X⟩Id (the endomorphism v ↦ h(v)X + h(X)v).
GradedElement bracket(const GradedElement& a, const GradedElement& b);

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Trace-free (m+1)×(m+1) matrix realising the grading with the bracket above as commutator.
PolyMatrix to_matrix(const GradedElement& e);
GradedElement from_matrix(const PolyMatrix& m, const RingPtr& ring);

/// Normal Cartan connection in the canonical gauge ω = (dx, Γ·dx, P·dx).
struct NormalGauge {
  Connection connection;
  TensorField p;  // P_{jk}: ω₁(∂_k)_j
};

/// Curvature function κ(e_k,e_l) split by degree.
struct KappaField {
  TensorField minus;  // κ₋₁(e_k,e_l)^i, stored [i][k][l]
  TensorField zero;   // κ₀(e_k,e_l)^i_j, stored [i][j][k][l]
  TensorField plus;   // κ₁(e_k,e_l)_j, stored [j][k][l]

  GradedElement at(int k, int l) const;
};

/// Unique P making κ₀ trace-free: P_{jl} = (m R_{jl} + R_{lj}) / (m² − 1).
NormalGauge solve_normality(const Connection& c);

/// Gauge with an explicit P (used to study the trace condition away from normality).
NormalGauge make_gauge(const Connection& c, const TensorField& p);

/// κ(e_k,e_l) = ∂_k ω(∂_l) − ∂_l ω(∂_k) + [ω(∂_k), ω(∂_l)].
KappaField curvature_kappa(const NormalGauge& g);

/// κ₀ as a (1,3) tensor W^i_{jkl}; trace-free for a normal gauge.
TensorField weyl_tensor(const NormalGauge& g);

/// Σ_i κ₀(e_k, e_i)^i_j = 0 for all j, k.
Report normality_check(const KappaField& kappa);

/// All three single traces of a (1,3) tensor vanish.
Report trace_free_check(const TensorField& w);

/// Element of H = G₀ ⋊ G₁: a GL(m) part and a g₁ covector, acting as exp(ξ)·g₀.
struct GroupElement {
  RationalMatrix g0;
  std::vector<Rational> g1;
};

/// κ at u·h from κ at u: (X,Y) ↦ Ad(h⁻¹)κ(Ad(h)X, Ad(h)Y), arguments projected to g₋₁.
KappaField transform_kappa(const KappaField& kappa, const GroupElement& h);

/// Checks κ(X,Y)(uh) = Ad(h⁻¹)κ(Ad(h)X, Ad(h)Y)(u) restricted to g₀: the g₀ part must equal
/// the tensorial transform of κ₀ by g₀ alone, and no g₋₁ part may appear.
Report gauge_equivariance(const KappaField& kappa, const GroupElement& h);

}  // namespace projcalc
