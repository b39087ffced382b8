#include "projcalc/tensor_field.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace projcalc {

namespace {

std::size_t ipow(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

void require_weight_is_parameter_only(const Poly& w) {
  const auto& names = w.ring()->names();
  for (std::size_t v = 0; v < names.size(); ++v)
    if (names[v] != kDeltaName && w.depends_on(v))
      throw std::invalid_argument("density weight may only depend on delta");
}

}  // namespace

TensorField::TensorField(RingPtr ring, int dim, int up, int down)
    : TensorField(ring, dim, up, down, Poly(ring)) {}

TensorField::TensorField(RingPtr ring, int dim, int up, int down, Poly weight)
    : ring_(std::move(ring)), dim_(dim), up_(up), down_(down), weight_(std::move(weight)) {
  if (dim_ < 1) throw std::invalid_argument("tensor dimension must be positive");
  if (up_ < 0 || down_ < 0) throw std::invalid_argument("tensor orders must be non-negative");
  if (!same_ring(weight_.ring(), ring_)) weight_ = weight_.embed(ring_);
  require_weight_is_parameter_only(weight_);
  comps_.assign(ipow(dim_, up_ + down_), Poly(ring_));
}

TensorField TensorField::scalar(int dim, const Poly& value, Poly weight) {
  TensorField t(value.ring(), dim, 0, 0, std::move(weight));
  t.comps_[0] = value;
  return t;
}

TensorField TensorField::identity(RingPtr ring, int dim) {
  TensorField t(ring, dim, 1, 1);
  for (int i = 0; i < dim; ++i) t.at({i, i}) = Poly(ring, Rational(1));
  return t;
}

void TensorField::set_weight(Poly w) {
  if (!same_ring(w.ring(), ring_)) w = w.embed(ring_);
  require_weight_is_parameter_only(w);
  weight_ = std::move(w);
}

std::size_t TensorField::flat_index(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != rank()) throw std::out_of_range("multi-index has wrong length");
  std::size_t f = 0;
  for (int i : index) {
    if (i < 0 || i >= dim_) throw std::out_of_range("index out of range");
    f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return f;
}

MultiIndex TensorField::unflatten(std::size_t flat) const {
  MultiIndex idx(static_cast<std::size_t>(rank()));
  for (int s = rank() - 1; s >= 0; --s) {
    idx[static_cast<std::size_t>(s)] = static_cast<int>(flat % static_cast<std::size_t>(dim_));
    flat /= static_cast<std::size_t>(dim_);
  }
  return idx;
}

const Poly& TensorField::at(std::initializer_list<int> index) const {
  return comps_[flat_index(std::span<const int>(index.begin(), index.size()))];
}

Poly& TensorField::at(std::initializer_list<int> index) {
  return comps_[flat_index(std::span<const int>(index.begin(), index.size()))];
}

bool TensorField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool TensorField::is_symmetric(Block block) const {
  const int first = block == Block::Up ? 0 : up_;
  const int count = block == Block::Up ? up_ : down_;
  if (count < 2) return true;
  for (std::size_t f = 0; f < comps_.size(); ++f) {
    MultiIndex idx = unflatten(f);
    // Adjacent transpositions generate the symmetric group.
    for (int s = first; s + 1 < first + count; ++s) {
      std::swap(idx[static_cast<std::size_t>(s)], idx[static_cast<std::size_t>(s) + 1]);
      if (!(comps_[flat_index(idx)] == comps_[f])) return false;
      std::swap(idx[static_cast<std::size_t>(s)], idx[static_cast<std::size_t>(s) + 1]);
    }
  }
  return true;
}

void TensorField::require_compatible(const TensorField& o) const {
  if (dim_ != o.dim_ || up_ != o.up_ || down_ != o.down_)
    throw std::invalid_argument("tensor types differ");
  if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("tensors over different variable lists");
  if (!(weight_ == o.weight_)) throw std::invalid_argument("tensor density weights differ");
}

TensorField& TensorField::operator+=(const TensorField& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

TensorField& TensorField::operator-=(const TensorField& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

TensorField& TensorField::operator*=(const Rational& c) {
  for (auto& p : comps_) p *= c;
  return *this;
}

TensorField TensorField::scaled(const Poly& factor) const {
  TensorField out(*this);
  for (auto& p : out.comps_) p = p * factor;
  return out;
}

bool operator==(const TensorField& a, const TensorField& b) {
  return a.dim_ == b.dim_ && a.up_ == b.up_ && a.down_ == b.down_ && a.weight_ == b.weight_ &&
         a.comps_ == b.comps_;
}

TensorField TensorField::map(const std::function<Poly(const Poly&)>& f) const {
  TensorField out(*this);
  for (auto& p : out.comps_) p = f(p);
  return out;
}

void for_each_index(int dim, int rank, const std::function<void(const MultiIndex&)>& f) {
  MultiIndex idx(static_cast<std::size_t>(rank), 0);
  for (;;) {
    f(idx);
    int s = rank - 1;
    while (s >= 0 && ++idx[static_cast<std::size_t>(s)] == dim) idx[static_cast<std::size_t>(s--)] = 0;
    if (s < 0) return;
  }
}

std::vector<MultiIndex> sorted_indices(int dim, int rank) {
  std::vector<MultiIndex> out;
  MultiIndex idx(static_cast<std::size_t>(rank), 0);
  for (;;) {
    out.push_back(idx);
    int s = rank - 1;
    while (s >= 0 && idx[static_cast<std::size_t>(s)] == dim - 1) --s;
    if (s < 0) return out;
    const int v = ++idx[static_cast<std::size_t>(s)];
    for (int t = s + 1; t < rank; ++t) idx[static_cast<std::size_t>(t)] = v;
  }
}

TensorField tensor_product(const TensorField& a, const TensorField& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tensor dimensions differ");
  TensorField out(a.ring(), a.dim(), a.up() + b.up(), a.down() + b.down(), a.weight() + b.weight());
  MultiIndex joined(static_cast<std::size_t>(out.rank()));
  for (std::size_t fa = 0; fa < a.size(); ++fa) {
    if (a.flat(fa).is_zero()) continue;
    const MultiIndex ia = a.unflatten(fa);
    for (std::size_t fb = 0; fb < b.size(); ++fb) {
      if (b.flat(fb).is_zero()) continue;
      const MultiIndex ib = b.unflatten(fb);
      auto it = joined.begin();
      it = std::copy_n(ia.begin(), a.up(), it);
      it = std::copy_n(ib.begin(), b.up(), it);
      it = std::copy_n(ia.begin() + a.up(), a.down(), it);
      std::copy_n(ib.begin() + b.up(), b.down(), it);
      out[joined] = a.flat(fa) * b.flat(fb);
    }
  }
  return out;
}

TensorField contract(const TensorField& t, int up_slot, int down_slot) {
  if (up_slot < 0 || up_slot >= t.up() || down_slot < 0 || down_slot >= t.down())
    throw std::out_of_range("contraction slot out of range");
  TensorField out(t.ring(), t.dim(), t.up() - 1, t.down() - 1, t.weight());
  const int ds = t.up() + down_slot;
  MultiIndex full(static_cast<std::size_t>(t.rank()));
  for (std::size_t f = 0; f < out.size(); ++f) {
    const MultiIndex o = out.unflatten(f);
    // Re-insert the two contracted positions.
    std::size_t src = 0;
    for (int s = 0; s < t.rank(); ++s)
      if (s != up_slot && s != ds) full[static_cast<std::size_t>(s)] = o[src++];
    Poly acc(t.ring());
    for (int r = 0; r < t.dim(); ++r) {
      full[static_cast<std::size_t>(up_slot)] = r;
      full[static_cast<std::size_t>(ds)] = r;
      acc += t[full];
    }
    out.flat(f) = std::move(acc);
  }
  return out;
}

TensorField symmetrize(const TensorField& t, Block block) {
  const int first = block == Block::Up ? 0 : t.up();
  const int count = block == Block::Up ? t.up() : t.down();
  if (count < 2) return t;
  // Components related by a permutation of the block form one orbit; each gets the orbit mean,
  // which equals (1/k!) times the sum over all permutations.
  std::map<MultiIndex, std::vector<std::size_t>> orbits;
  for (std::size_t f = 0; f < t.size(); ++f) {
    MultiIndex key = t.unflatten(f);
    std::sort(key.begin() + first, key.begin() + first + count);
    orbits[key].push_back(f);
  }
  TensorField out(t.ring(), t.dim(), t.up(), t.down(), t.weight());
  for (const auto& [key, members] : orbits) {
    Poly sum(t.ring());
    for (std::size_t f : members) sum += t.flat(f);
    sum *= Rational(1) / Rational(static_cast<long>(members.size()));
    for (std::size_t f : members) out.flat(f) = sum;
  }
  return out;
}

TensorField sym_product(const TensorField& a, const TensorField& b) {
  const bool covariant = a.up() == 0 && b.up() == 0;
  const bool contravariant = a.down() == 0 && b.down() == 0;
  if (!covariant && !contravariant)
    throw std::invalid_argument("symmetric product needs two purely covariant or purely contravariant tensors");
  return symmetrize(tensor_product(a, b), covariant ? Block::Down : Block::Up);
}

TensorField pair(const TensorField& s, const TensorField& u) {
  if (s.down() != 0 || u.up() != 0)
    throw std::invalid_argument("pairing needs a contravariant symbol and a covariant tensor");
  if (u.down() > s.up()) throw std::invalid_argument("pairing: covariant order exceeds symbol order");
  if (s.dim() != u.dim()) throw std::invalid_argument("tensor dimensions differ");
  if (!s.is_symmetric(Block::Up)) throw std::invalid_argument("pairing: symbol is not symmetric");
  const int b = u.down();
  TensorField out(s.ring(), s.dim(), s.up() - b, 0, s.weight() + u.weight());
  MultiIndex full(static_cast<std::size_t>(s.up()));
  for (std::size_t f = 0; f < out.size(); ++f) {
    const MultiIndex rest = out.unflatten(f);
    std::copy(rest.begin(), rest.end(), full.begin() + b);
    Poly acc(s.ring());
    for (std::size_t g = 0; g < u.size(); ++g) {
      const Poly& uc = u.flat(g);
      if (uc.is_zero()) continue;
      const MultiIndex j = u.unflatten(g);
      std::copy(j.begin(), j.end(), full.begin());
      const Poly& sc = s[full];
      if (!sc.is_zero()) acc.add_product(sc, uc);
    }
    out.flat(f) = std::move(acc);
  }
  return out;
}

}  // namespace projcalc
