#include "projcalc/connection.hpp"

#include <stdexcept>

#include "projcalc/linear_algebra.hpp"

namespace projcalc {

AffineMap::AffineMap(std::vector<std::vector<Rational>> matrix, std::vector<Rational> shift)
    : a_(std::move(matrix)), b_(std::move(shift)) {
  if (a_.size() != b_.size()) throw std::invalid_argument("affine map: matrix and shift sizes differ");
  det_ = projcalc::determinant(a_);
  if (det_.is_zero()) throw std::domain_error("affine map: singular matrix");
  a_inv_ = invert(a_);
}

AffineMap AffineMap::identity(int dim) {
  return AffineMap(identity_matrix(dim), std::vector<Rational>(static_cast<std::size_t>(dim)));
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  if (inner.dim() != dim()) throw std::invalid_argument("affine maps of different dimension");
  auto a = multiply(a_, inner.a_);
  std::vector<Rational> b = b_;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) b[i] += a_[i][j] * inner.b_[j];
  return AffineMap(std::move(a), std::move(b));
}

std::vector<Poly> AffineMap::coordinate_images(const RingPtr& ring) const {
  if (ring->size() < b_.size()) throw std::invalid_argument("ring has fewer variables than the chart");
  std::vector<Poly> images;
  for (std::size_t v = 0; v < ring->size(); ++v) {
    if (v >= b_.size()) {
      images.push_back(Poly::variable(ring, ring->names()[v]));
      continue;
    }
    Poly img(ring, b_[v]);
    for (std::size_t j = 0; j < b_.size(); ++j)
      if (!a_[v][j].is_zero()) img += Poly::variable(ring, ring->names()[j]) * a_[v][j];
    images.push_back(std::move(img));
  }
  return images;
}

Connection::Connection(RingPtr ring, int dim) : ring_(std::move(ring)), dim_(dim) {
  if (dim_ < 1) throw std::invalid_argument("connection dimension must be positive");
  if (static_cast<int>(ring_->size()) < dim_) throw std::invalid_argument("ring has fewer variables than the chart");
  gamma_.assign(static_cast<std::size_t>(dim_) * dim_ * dim_, Poly(ring_));
}

void Connection::set_gamma(int i, int j, int k, const Poly& value) {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throw std::out_of_range("Christoffel index out of range");
  const Poly v = same_ring(value.ring(), ring_) ? value : value.embed(ring_);
  gamma_[index(i, j, k)] = v;
  gamma_[index(i, k, j)] = v;
}

Poly Connection::trace(int k) const {
  Poly acc(ring_);
  for (int r = 0; r < dim_; ++r) acc += gamma(r, r, k);
  return acc;
}

TensorField curvature(const Connection& c) {
  const int m = c.dim();
  TensorField r(c.ring(), m, 1, 3);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
          Poly v = c.gamma(i, l, j).partial(static_cast<std::size_t>(k)) -
                   c.gamma(i, k, j).partial(static_cast<std::size_t>(l));
          for (int s = 0; s < m; ++s) {
            v.add_product(c.gamma(i, k, s), c.gamma(s, l, j));
            v.add_product(c.gamma(i, l, s), c.gamma(s, k, j), Rational(-1));
          }
          r.at({i, j, l, k}) = -v;
          r.at({i, j, k, l}) = std::move(v);
        }
  return r;
}

TensorField ricci(const Connection& c) { return contract(curvature(c), 0, 1); }

TensorField covariant_derivative(const Connection& c, const TensorField& t) {
  if (t.dim() != c.dim()) throw std::invalid_argument("tensor and connection dimensions differ");
  const int m = c.dim();
  const int p = t.up();
  const int q = t.down();
  TensorField out(t.ring(), m, p, q + 1, t.weight());
  std::vector<Poly> density(static_cast<std::size_t>(m), Poly(t.ring()));
  const bool weighted = !t.weight().is_zero();
  if (weighted)
    for (int k = 0; k < m; ++k) density[static_cast<std::size_t>(k)] = t.weight() * c.trace(k);
  MultiIndex src(static_cast<std::size_t>(p + q));
  for (std::size_t f = 0; f < out.size(); ++f) {
    const MultiIndex idx = out.unflatten(f);
    const int k = idx.back();
    std::copy(idx.begin(), idx.end() - 1, src.begin());
    const Poly& base = t[src];
    Poly v = base.partial(static_cast<std::size_t>(k));
    for (int s = 0; s < p + q; ++s) {
      const int orig = src[static_cast<std::size_t>(s)];
      for (int r = 0; r < m; ++r) {
        src[static_cast<std::size_t>(s)] = r;
        const Poly& tc = t[src];
        if (tc.is_zero()) continue;
        if (s < p) {
          const Poly& g = c.gamma(orig, k, r);
          if (!g.is_zero()) v.add_product(g, tc);
        } else {
          const Poly& g = c.gamma(r, k, orig);
          if (!g.is_zero()) v.add_product(g, tc, Rational(-1));
        }
      }
      src[static_cast<std::size_t>(s)] = orig;
    }
    if (weighted && !base.is_zero()) v.add_product(density[static_cast<std::size_t>(k)], base, Rational(-1));
    out.flat(f) = std::move(v);
  }
  return out;
}

TensorField divergence(const Connection& c, const TensorField& s) {
  if (s.down() != 0 || s.up() < 1)
    throw std::invalid_argument("divergence needs a contravariant symbol of order at least 1");
  if (!s.is_symmetric(Block::Up)) throw std::invalid_argument("divergence: symbol is not symmetric");
  return contract(covariant_derivative(c, s), 0, 0);
}

Connection projective_shift(const Connection& c, const OneForm& alpha) {
  const int m = c.dim();
  if (static_cast<int>(alpha.components.size()) != m)
    throw std::invalid_argument("one-form arity differs from connection dimension");
  Connection out = c;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = j; k < m; ++k) {
        Poly v = c.gamma(i, j, k);
        if (i == j) v += alpha.components[static_cast<std::size_t>(k)].embed(c.ring());
        if (i == k) v += alpha.components[static_cast<std::size_t>(j)].embed(c.ring());
        out.set_gamma(i, j, k, v);
      }
  return out;
}

Connection pullback_affine(const Connection& c, const AffineMap& map) {
  const int m = c.dim();
  if (map.dim() != m) throw std::invalid_argument("affine map dimension differs from connection");
  const auto images = map.coordinate_images(c.ring());
  std::vector<Poly> composed;
  composed.reserve(static_cast<std::size_t>(m) * m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int cc = 0; cc < m; ++cc) composed.push_back(c.gamma(a, b, cc).substitute(images));
  auto at = [&](int a, int b, int cc) -> const Poly& {
    return composed[(static_cast<std::size_t>(a) * m + b) * m + cc];
  };
  const auto& A = map.matrix();
  const auto& Ainv = map.inverse_matrix();
  Connection out(c.ring(), m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = j; k < m; ++k) {
        Poly v(c.ring());
        for (int a = 0; a < m; ++a) {
          if (Ainv[i][a].is_zero()) continue;
          for (int b = 0; b < m; ++b) {
            if (A[b][j].is_zero()) continue;
            for (int cc = 0; cc < m; ++cc) {
              if (A[cc][k].is_zero()) continue;
              v += at(a, b, cc) * (Ainv[i][a] * A[b][j] * A[cc][k]);
            }
          }
        }
        out.set_gamma(i, j, k, v);
      }
  return out;
}

TensorField pullback_affine(const TensorField& t, const AffineMap& map) {
  const int m = t.dim();
  if (map.dim() != m) throw std::invalid_argument("affine map dimension differs from tensor");
  const auto images = map.coordinate_images(t.ring());
  TensorField composed = t.map([&](const Poly& p) { return p.substitute(images); });
  const auto& A = map.matrix();
  const auto& Ainv = map.inverse_matrix();
  // Transform one slot at a time: contravariant slots by A^{-1}, covariant slots by A.
  for (int s = 0; s < t.rank(); ++s) {
    TensorField next(t.ring(), m, t.up(), t.down(), t.weight());
    for (std::size_t f = 0; f < next.size(); ++f) {
      MultiIndex idx = next.unflatten(f);
      const int target = idx[static_cast<std::size_t>(s)];
      Poly v(t.ring());
      for (int r = 0; r < m; ++r) {
        const Rational& factor = s < t.up() ? Ainv[target][r] : A[r][target];
        if (factor.is_zero()) continue;
        idx[static_cast<std::size_t>(s)] = r;
        const Poly& src = composed[idx];
        if (!src.is_zero()) v += src * factor;
      }
      next.flat(f) = std::move(v);
    }
    composed = std::move(next);
  }
  return composed;
}

}  // namespace projcalc
