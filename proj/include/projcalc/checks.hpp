#pragma once

#include "projcalc/connection.hpp"
#include "projcalc/report.hpp"
#include "projcalc/weyl_invariants.hpp"

/// Concrete symmetry checks shared by the CLI and the test suites.
namespace projcalc {

/// Records the first differing component of two same-type tensors as the witness.
void compare_tensors(const TensorField& lhs, const TensorField& rhs, Report& rep, const std::string& what);

/// κ₀(Γ) = κ₀(Γ + δ⊗α + α⊗δ).
Report weyl_projective_invariance(const Connection& c, const OneForm& alpha);
/// κ₀(φ*Γ) = φ*κ₀(Γ).
Report weyl_affine_naturality(const Connection& c, const AffineMap& map);

/// The order-4 map is unchanged by a projective shift.
Report map4_projective_invariance(const TensorField& symbol, const Connection& c, const OneForm& alpha,
                                  const Derangement& sigma);
/// φ* map4(S, Γ) = map4(φ*S, φ*Γ).
Report map4_affine_naturality(const TensorField& symbol, const Connection& c, const AffineMap& map,
                              const Derangement& sigma);

/// The order-5 map with coefficient c5 is unchanged by a projective shift.
Report map5_projective_invariance(const TensorField& symbol, const Connection& c, const OneForm& alpha,
                                  const Derangement& sigma, const Rational& c5);
Report map5_affine_naturality(const TensorField& symbol, const Connection& c, const AffineMap& map,
                              const Derangement& sigma, const Rational& c5);

/// S^{i1..ik} = x_{i1}⋯x_{ik}: the symmetric power of the position field, weight delta.
/// ⟨S, T⟩ is then T(x,…,x), which vanishes only when T does.
TensorField position_power_symbol(int dim, int k, const Rational& delta);

}  // namespace projcalc
