#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "projcalc/poly.hpp"

namespace projcalc {

enum class Block { Up, Down };

using MultiIndex = std::vector<int>;

/// Dense tensor density on a coordinate chart.
///
/// Components are indexed by (i1..ip; j1..jq) with every index in 0..dim-1 and
/// stored row-major with the contravariant indices first. The density weight is a
/// polynomial in the formal parameter only (a rational or an affine expression in delta).
class TensorField {
 public:
  TensorField(RingPtr ring, int dim, int up, int down);
  TensorField(RingPtr ring, int dim, int up, int down, Poly weight);

  static TensorField scalar(int dim, const Poly& value, Poly weight);
  /// Kronecker delta, type (1,1).
  static TensorField identity(RingPtr ring, int dim);

  const RingPtr& ring() const { return ring_; }
  int dim() const { return dim_; }
  int up() const { return up_; }
  int down() const { return down_; }
  int rank() const { return up_ + down_; }
  const Poly& weight() const { return weight_; }
  void set_weight(Poly w);

  std::size_t size() const { return comps_.size(); }
  std::size_t flat_index(std::span<const int> index) const;
  MultiIndex unflatten(std::size_t flat) const;

  const Poly& operator[](std::span<const int> index) const { return comps_[flat_index(index)]; }
  Poly& operator[](std::span<const int> index) { return comps_[flat_index(index)]; }
  const Poly& at(std::initializer_list<int> index) const;
  Poly& at(std::initializer_list<int> index);
  const Poly& flat(std::size_t i) const { return comps_[i]; }
  Poly& flat(std::size_t i) { return comps_[i]; }
  const std::vector<Poly>& components() const { return comps_; }

  bool is_zero() const;
  /// True when the block's components are invariant under every slot permutation.
  bool is_symmetric(Block block) const;

  TensorField& operator+=(const TensorField& o);
  TensorField& operator-=(const TensorField& o);
  TensorField& operator*=(const Rational& c);
  friend TensorField operator+(TensorField a, const TensorField& b) { return a += b; }
  friend TensorField operator-(TensorField a, const TensorField& b) { return a -= b; }
  friend TensorField operator*(TensorField a, const Rational& c) { return a *= c; }
  friend TensorField operator*(const Rational& c, TensorField a) { return a *= c; }
  /// Multiplies every component by a scalar polynomial; weight is unchanged.
  TensorField scaled(const Poly& factor) const;

  /// Exact equality of type, weight and all components.
  friend bool operator==(const TensorField& a, const TensorField& b);

  /// Applies f to each component.
  TensorField map(const std::function<Poly(const Poly&)>& f) const;

 private:
  void require_compatible(const TensorField& o) const;

  RingPtr ring_;
  int dim_;
  int up_;
  int down_;
  Poly weight_;
  std::vector<Poly> comps_;
};

/// Outer product; slot order is (a.up, b.up; a.down, b.down), weights add.
TensorField tensor_product(const TensorField& a, const TensorField& b);

/// Contracts contravariant slot `up_slot` against covariant slot `down_slot` (0-based).
TensorField contract(const TensorField& t, int up_slot, int down_slot);

/// Full symmetrization of one block with the 1/k! normalization.
TensorField symmetrize(const TensorField& t, Block block);

/// Symmetric product a ∨ b of two purely covariant (or purely contravariant) tensors:
/// the symmetrization with 1/(p+q)! of the outer product.
TensorField sym_product(const TensorField& a, const TensorField& b);

/// Pairing ⟨s,u⟩: contracts all b slots of the covariant u into the first b slots of the
/// symmetric contravariant s. Result has order a-b and weight w(s)+w(u).
TensorField pair(const TensorField& s, const TensorField& u);

/// Calls f for every multi-index in {0..dim-1}^rank in row-major order.
void for_each_index(int dim, int rank, const std::function<void(const MultiIndex&)>& f);

/// Sorted multi-indices (multisets) of the given length.
std::vector<MultiIndex> sorted_indices(int dim, int rank);

}  // namespace projcalc
