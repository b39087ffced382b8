#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "projcalc/linear_algebra.hpp"
#include "projcalc/rational_function.hpp"
#include "projcalc/report.hpp"
#include "projcalc/tensor_field.hpp"

/// Exact term algebra for functions on the Cartan bundle built from equivariant generators.
///
/// A factor L_{e_{a_n}}⋯L_{e_{a_1}} G [v] is the component v of the n-fold invariant derivative of a
/// generator G; letters are kept in application order and are never reordered, so two words that
/// differ only in letter order are distinct basis elements. Expressions are finite sums of products
/// of factors with coefficients in Q(δ).
namespace projcalc::formal {

/// Value space of a generator: `covariant` ⊗ R^{m*}, `contravariant` ⊗ R^m, density weight.
struct Generator {
  std::string name;
  int covariant = 0;
  int contravariant = 0;
  RationalFunction weight;
  bool symmetric = true;  // each variance block is symmetric
};

struct Factor {
  std::uint8_t generator = 0;
  std::vector<std::int8_t> letters;  // application order: letters[0] is applied first
  std::vector<std::int8_t> values;   // covariant block, then contravariant block

  auto operator<=>(const Factor&) const = default;
};

/// Sorted product of factors; the empty monomial is the constant 1.
using Monomial = std::vector<Factor>;

class Context;

class FormalExpr {
 public:
  using TermMap = std::map<Monomial, RationalFunction>;

  FormalExpr() = default;
  static FormalExpr constant(const RationalFunction& c);
  static FormalExpr factor(Factor f, const RationalFunction& c = RationalFunction(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const RationalFunction& c);
  FormalExpr& operator+=(const FormalExpr& o);
  FormalExpr& operator-=(const FormalExpr& o);
  FormalExpr& operator*=(const RationalFunction& c);
  friend FormalExpr operator+(FormalExpr a, const FormalExpr& b) { return a += b; }
  friend FormalExpr operator-(FormalExpr a, const FormalExpr& b) { return a -= b; }
  friend FormalExpr operator*(FormalExpr a, const RationalFunction& c) { return a *= c; }
  friend FormalExpr operator*(const FormalExpr& a, const FormalExpr& b);
  friend bool operator==(const FormalExpr& a, const FormalExpr& b) { return a.terms_ == b.terms_; }

  std::string to_string(const Context& ctx, std::size_t max_terms = 6) const;

 private:
  TermMap terms_;
};

/// Fixed dimension m and the registered generators.
class Context {
 public:
  explicit Context(int dim);

  int dim() const { return dim_; }
  int add_generator(Generator g);
  const Generator& generator(int id) const { return generators_.at(static_cast<std::size_t>(id)); }

  /// Puts each symmetric value block of the factor in sorted order.
  void canonicalize(Factor& f) const;
  std::string factor_to_string(const Factor& f) const;

 private:
  int dim_;
  std::vector<Generator> generators_;
};

/// Dense array of expressions with one variance per slot.
struct FormalTensor {
  std::vector<Block> slots;
  std::vector<FormalExpr> comps;

  int rank() const { return static_cast<int>(slots.size()); }
  bool is_zero() const;
};

FormalTensor generator_tensor(const Context& ctx, int generator);

/// L_{e_letter} e, distributed over products by the Leibniz rule.
FormalExpr deriv(const Context& ctx, int letter, const FormalExpr& e);

/// One invariant derivative; the new covariant slot is slot 0.
FormalTensor nabla(const Context& ctx, const FormalTensor& t);

/// ∇_s^k: k derivatives, symmetrized over the k derivative slots with 1/k!.
FormalTensor sym_deriv(const Context& ctx, int k, const FormalTensor& t);

/// Div: derivative letter contracted with the first contravariant slot, summed over the basis.
FormalTensor formal_div(const Context& ctx, const FormalTensor& t);

/// ⟨a, b⟩: all slots of the covariant b contracted into the leading slots of the contravariant a.
FormalTensor pair(const Context& ctx, const FormalTensor& a, const FormalTensor& b);

FormalTensor scale(FormalTensor t, const RationalFunction& c);
FormalTensor add(FormalTensor a, const FormalTensor& b);

/// Fundamental field of g₀ element A, evaluated through the value-space representation:
/// −ρ_*(A) on every letter slot (covariant), every value slot and the density weight.
FormalExpr g0_action(const Context& ctx, const RationalMatrix& a, const FormalExpr& e);

/// Same action computed by commuting A past each derivative letter ([A, X] = AX) down to the
/// generator, where only the value representation acts.
FormalExpr g0_action_recursive(const Context& ctx, const RationalMatrix& a, const FormalExpr& e);

/// L_{h*} for h = ε^c: zero on generators, and
/// L_{h*} L_X F = L_X L_{h*} F − g0_action([h,X], F).
class G1Action {
 public:
  G1Action(const Context& ctx, int c);
  FormalExpr operator()(const FormalExpr& e);
  FormalTensor operator()(const FormalTensor& t);

 private:
  const FormalExpr& on_factor(const Factor& f);

  const Context& ctx_;
  int c_;
  std::vector<RationalMatrix> brackets_;  // [ε^c, e_a] for each a
  std::map<Factor, FormalExpr> cache_;
};

FormalExpr g1_action(const Context& ctx, int c, const FormalExpr& e);

/// Evaluation of a covariant tensor on the diagonal (X,…,X): sorted multi-index α ↦ Σ_{sort(I)=α} T[I].
using DiagonalForm = std::map<MultiIndex, FormalExpr>;

DiagonalForm diagonal(const FormalTensor& t);

/// Diagonal of ∇_s^k G for a symmetric covariant generator, built word by word.
DiagonalForm diagonal_sym_deriv(const Context& ctx, int generator, int k);

/// Diagonal of ε^c ∨ T from the diagonal of T: (ε^c ∨ T)(X,…,X) = X^c T(X,…,X).
DiagonalForm diagonal_covector_product(int c, const DiagonalForm& t);

/// L_{h*} ∇_s^k W = −k(k+4j−1) h ∨ ∇_s^{k−1} W for every basis covector h.
Report verify_lemma(int k, int j, int m);

/// g₁-variation of Σ_r C_{k,l,r} ⟨Div^r p*S, ∇_s^{l−r−2j} W⟩ vanishes identically in δ.
/// `perturb` adds 1 to C_{k,l,perturb} when non-negative.
Report verify_theorem(int k, int l, int j, int m, int perturb = -1);

/// Every single-coefficient perturbation C_{k,l,r} → C_{k,l,r}+1 leaves a nonzero g₁-variation.
Report theorem_sharpness(int k, int l, int j, int m);

}  // namespace projcalc::formal
