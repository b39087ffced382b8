#include "projcalc/cartan.hpp"

#include <stdexcept>

namespace projcalc {

namespace {

std::string index_label(std::initializer_list<int> idx) {
  std::string s;
  for (int i : idx) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
  return s;
}

PolyMatrix left_multiply(const RationalMatrix& a, const PolyMatrix& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  PolyMatrix out(n, std::vector<Poly>(n, Poly(ring)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!m[k][j].is_zero()) out[i][j] += m[k][j] * a[i][k];
    }
  return out;
}

PolyMatrix right_multiply(const PolyMatrix& m, const RationalMatrix& a, const RingPtr& ring) {
  const std::size_t n = m.size();
  PolyMatrix out(n, std::vector<Poly>(n, Poly(ring)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (m[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!a[k][j].is_zero()) out[i][j] += m[i][k] * a[k][j];
    }
  return out;
}

RationalMatrix group_matrix(const GroupElement& h) {
  const std::size_t m = h.g0.size();
  if (h.g1.size() != m) throw std::invalid_argument("group element: g1 part has wrong arity");
  if (determinant(h.g0).is_zero()) throw std::domain_error("group element: singular g0 part");
  // exp(ξ) · diag(1, g0) with ξ embedded as the row −ξ.
  RationalMatrix out = identity_matrix(static_cast<int>(m + 1));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out[i + 1][j + 1] = h.g0[i][j];
  for (std::size_t j = 0; j < m; ++j) {
    Rational v(0);
    for (std::size_t r = 0; r < m; ++r) v -= h.g1[r] * h.g0[r][j];
    out[0][j + 1] = v;
  }
  return out;
}

}  // namespace

GradedElement GradedElement::zero(const RingPtr& ring, int dim) {
  GradedElement e;
  e.dim = dim;
  e.vec.assign(static_cast<std::size_t>(dim), Poly(ring));
  e.mat.assign(static_cast<std::size_t>(dim * dim), Poly(ring));
  e.covec.assign(static_cast<std::size_t>(dim), Poly(ring));
  return e;
}

GradedElement GradedElement::basis_vector(const RingPtr& ring, int dim, int i) {
  auto e = zero(ring, dim);
  e.vec.at(static_cast<std::size_t>(i)) = Poly(ring, Rational(1));
  return e;
}

GradedElement GradedElement::basis_covector(const RingPtr& ring, int dim, int j) {
  auto e = zero(ring, dim);
  e.covec.at(static_cast<std::size_t>(j)) = Poly(ring, Rational(1));
  return e;
}

GradedElement GradedElement::matrix_unit(const RingPtr& ring, int dim, int i, int j) {
  auto e = zero(ring, dim);
  e.a(i, j) = Poly(ring, Rational(1));
  return e;
}

bool GradedElement::is_zero() const {
  auto zero = [](const std::vector<Poly>& v) {
    for (const auto& p : v)
      if (!p.is_zero()) return false;
    return true;
  };
  return zero(vec) && zero(mat) && zero(covec);
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  for (std::size_t i = 0; i < vec.size(); ++i) vec[i] += o.vec[i];
  for (std::size_t i = 0; i < mat.size(); ++i) mat[i] += o.mat[i];
  for (std::size_t i = 0; i < covec.size(); ++i) covec[i] += o.covec[i];
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  for (std::size_t i = 0; i < vec.size(); ++i) vec[i] -= o.vec[i];
  for (std::size_t i = 0; i < mat.size(); ++i) mat[i] -= o.mat[i];
  for (std::size_t i = 0; i < covec.size(); ++i) covec[i] -= o.covec[i];
  return *this;
}

GradedElement GradedElement::scaled(const Poly& c) const {
  GradedElement out(*this);
  for (auto& p : out.vec) p = p * c;
  for (auto& p : out.mat) p = p * c;
  for (auto& p : out.covec) p = p * c;
  return out;
}

GradedElement bracket(const GradedElement& x, const GradedElement& y) {
  if (x.dim != y.dim) throw std::invalid_argument("bracket of elements of different dimension");
  const int m = x.dim;
  const RingPtr& ring = x.vec.front().ring();
  GradedElement out = GradedElement::zero(ring, m);
  for (int i = 0; i < m; ++i) {
    // g₋₁: A_x X_y − A_y X_x
    Poly& v = out.vec[static_cast<std::size_t>(i)];
    for (int r = 0; r < m; ++r) {
      v.add_product(x.a(i, r), y.vec[static_cast<std::size_t>(r)]);
      v.add_product(y.a(i, r), x.vec[static_cast<std::size_t>(r)], Rational(-1));
    }
    // g₁: h_x A_y − h_y A_x
    Poly& h = out.covec[static_cast<std::size_t>(i)];
    for (int r = 0; r < m; ++r) {
      h.add_product(x.covec[static_cast<std::size_t>(r)], y.a(r, i));
      h.add_product(y.covec[static_cast<std::size_t>(r)], x.a(r, i), Rational(-1));
    }
  }
  // ⟨h_x, X_y⟩ and ⟨h_y, X_x⟩
  Poly hx_Xy(ring);
  Poly hy_Xx(ring);
  for (int r = 0; r < m; ++r) {
    hx_Xy.add_product(x.covec[static_cast<std::size_t>(r)], y.vec[static_cast<std::size_t>(r)]);
    hy_Xx.add_product(y.covec[static_cast<std::size_t>(r)], x.vec[static_cast<std::size_t>(r)]);
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Poly& a = out.a(i, j);
      for (int r = 0; r < m; ++r) {
        a.add_product(x.a(i, r), y.a(r, j));
        a.add_product(y.a(i, r), x.a(r, j), Rational(-1));
      }
      // [h_x, X_y] − [h_y, X_x]
      a.add_product(y.vec[static_cast<std::size_t>(i)], x.covec[static_cast<std::size_t>(j)]);
      a.add_product(x.vec[static_cast<std::size_t>(i)], y.covec[static_cast<std::size_t>(j)], Rational(-1));
      if (i == j) {
        a += hx_Xy;
        a -= hy_Xx;
      }
    }
  return out;
}

PolyMatrix to_matrix(const GradedElement& e) {
  const int m = e.dim;
  const RingPtr& ring = e.vec.front().ring();
  Poly trace(ring);
  for (int i = 0; i < m; ++i) trace += e.a(i, i);
  const Poly corner = trace * Rational(-1, m + 1);
  PolyMatrix out(static_cast<std::size_t>(m + 1), std::vector<Poly>(static_cast<std::size_t>(m + 1), Poly(ring)));
  out[0][0] = corner;
  for (int i = 0; i < m; ++i) {
    out[static_cast<std::size_t>(i + 1)][0] = e.vec[static_cast<std::size_t>(i)];
    out[0][static_cast<std::size_t>(i + 1)] = -e.covec[static_cast<std::size_t>(i)];
    for (int j = 0; j < m; ++j)
      out[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] = i == j ? e.a(i, j) + corner : e.a(i, j);
  }
  return out;
}

GradedElement from_matrix(const PolyMatrix& mtx, const RingPtr& ring) {
  const int m = static_cast<int>(mtx.size()) - 1;
  GradedElement e = GradedElement::zero(ring, m);
  const Poly& corner = mtx[0][0];
  for (int i = 0; i < m; ++i) {
    e.vec[static_cast<std::size_t>(i)] = mtx[static_cast<std::size_t>(i + 1)][0];
    e.covec[static_cast<std::size_t>(i)] = -mtx[0][static_cast<std::size_t>(i + 1)];
    for (int j = 0; j < m; ++j) {
      e.a(i, j) = mtx[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)];
      if (i == j) e.a(i, j) -= corner;
    }
  }
  return e;
}

GradedElement KappaField::at(int k, int l) const {
  const int m = zero.dim();
  GradedElement e = GradedElement::zero(zero.ring(), m);
  for (int i = 0; i < m; ++i) {
    e.vec[static_cast<std::size_t>(i)] = minus.at({i, k, l});
    e.covec[static_cast<std::size_t>(i)] = plus.at({i, k, l});
    for (int j = 0; j < m; ++j) e.a(i, j) = zero.at({i, j, k, l});
  }
  return e;
}

NormalGauge make_gauge(const Connection& c, const TensorField& p) {
  if (p.up() != 0 || p.down() != 2 || p.dim() != c.dim()) throw std::invalid_argument("P must be a (0,2) tensor");
  return NormalGauge{c, p};
}

NormalGauge solve_normality(const Connection& c) {
  const int m = c.dim();
  if (m < 2) throw std::invalid_argument("normal projective connection needs dimension at least 2");
  const TensorField ric = ricci(c);
  TensorField p(c.ring(), m, 0, 2);
  const Rational denom = Rational(1) / Rational(m * m - 1);
  for (int j = 0; j < m; ++j)
    for (int l = 0; l < m; ++l)
      p.at({j, l}) = (ric.at({j, l}) * Rational(m) + ric.at({l, j})) * denom;
  return NormalGauge{c, std::move(p)};
}

KappaField curvature_kappa(const NormalGauge& g) {
  const Connection& c = g.connection;
  const int m = c.dim();
  const RingPtr& ring = c.ring();
  std::vector<GradedElement> omega;
  for (int k = 0; k < m; ++k) {
    GradedElement w = GradedElement::basis_vector(ring, m, k);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) w.a(i, j) = c.gamma(i, j, k);
      w.covec[static_cast<std::size_t>(i)] = g.p.at({i, k});
    }
    omega.push_back(std::move(w));
  }
  auto derivative = [&](const GradedElement& e, int k) {
    GradedElement d = e;
    for (auto& p : d.vec) p = p.partial(static_cast<std::size_t>(k));
    for (auto& p : d.mat) p = p.partial(static_cast<std::size_t>(k));
    for (auto& p : d.covec) p = p.partial(static_cast<std::size_t>(k));
    return d;
  };
  KappaField kappa{TensorField(ring, m, 1, 2), TensorField(ring, m, 1, 3), TensorField(ring, m, 0, 3)};
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l) {
      GradedElement v = derivative(omega[static_cast<std::size_t>(l)], k);
      v -= derivative(omega[static_cast<std::size_t>(k)], l);
      v += bracket(omega[static_cast<std::size_t>(k)], omega[static_cast<std::size_t>(l)]);
      for (int i = 0; i < m; ++i) {
        kappa.minus.at({i, k, l}) = v.vec[static_cast<std::size_t>(i)];
        kappa.minus.at({i, l, k}) = -v.vec[static_cast<std::size_t>(i)];
        kappa.plus.at({i, k, l}) = v.covec[static_cast<std::size_t>(i)];
        kappa.plus.at({i, l, k}) = -v.covec[static_cast<std::size_t>(i)];
        for (int j = 0; j < m; ++j) {
          kappa.zero.at({i, j, k, l}) = v.a(i, j);
          kappa.zero.at({i, j, l, k}) = -v.a(i, j);
        }
      }
    }
  return kappa;
}

TensorField weyl_tensor(const NormalGauge& g) { return curvature_kappa(g).zero; }

Report normality_check(const KappaField& kappa) {
  Report r{"sum_i kappa0(e_k,e_i)^i_j = 0"};
  const TensorField& w = kappa.zero;
  const int m = w.dim();
  r.parameters["m"] = m;
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      Poly t(w.ring());
      for (int i = 0; i < m; ++i) t += w.at({i, j, k, i});
      if (!t.is_zero()) r.fail("j,k=" + index_label({j, k}) + ": " + t.to_string());
    }
  return r;
}

Report trace_free_check(const TensorField& w) {
  Report r{"all single traces of kappa0 vanish"};
  if (w.up() != 1 || w.down() != 3) throw std::invalid_argument("trace check needs a (1,3) tensor");
  r.parameters["m"] = w.dim();
  for (int slot = 0; slot < 3; ++slot) {
    const TensorField t = contract(w, 0, slot);
    for (std::size_t f = 0; f < t.size(); ++f)
      if (!t.flat(f).is_zero()) {
        const MultiIndex idx = t.unflatten(f);
        r.fail("trace over lower slot " + std::to_string(slot + 1) + " at " +
               index_label({idx[0], idx[1]}) + ": " + t.flat(f).to_string());
        return r;
      }
  }
  return r;
}

KappaField transform_kappa(const KappaField& kappa, const GroupElement& h) {
  const int m = kappa.zero.dim();
  const RingPtr& ring = kappa.zero.ring();
  const RationalMatrix H = group_matrix(h);
  const RationalMatrix Hinv = invert(H);
  // g₋₁ components of Ad(h) e_k.
  std::vector<std::vector<Poly>> moved;
  for (int k = 0; k < m; ++k) {
    const PolyMatrix adj =
        right_multiply(left_multiply(H, to_matrix(GradedElement::basis_vector(ring, m, k)), ring), Hinv, ring);
    moved.push_back(from_matrix(adj, ring).vec);
  }
  KappaField out{TensorField(ring, m, 1, 2), TensorField(ring, m, 1, 3), TensorField(ring, m, 0, 3)};
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) {
      GradedElement value = GradedElement::zero(ring, m);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          const Poly coeff = moved[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)] *
                             moved[static_cast<std::size_t>(l)][static_cast<std::size_t>(b)];
          if (!coeff.is_zero()) value += kappa.at(a, b).scaled(coeff);
        }
      const GradedElement t =
          from_matrix(right_multiply(left_multiply(Hinv, to_matrix(value), ring), H, ring), ring);
      for (int i = 0; i < m; ++i) {
        out.minus.at({i, k, l}) = t.vec[static_cast<std::size_t>(i)];
        out.plus.at({i, k, l}) = t.covec[static_cast<std::size_t>(i)];
        for (int j = 0; j < m; ++j) out.zero.at({i, j, k, l}) = t.a(i, j);
      }
    }
  return out;
}

Report gauge_equivariance(const KappaField& kappa, const GroupElement& h) {
  Report r{"kappa(X,Y)(uh) = Ad(h^-1) kappa(Ad(h)X, Ad(h)Y)(u), g0 part tensorial"};
  const int m = kappa.zero.dim();
  r.parameters["m"] = m;
  const KappaField moved = transform_kappa(kappa, h);
  const RationalMatrix& a = h.g0;
  const RationalMatrix ainv = invert(a);
  const TensorField& w = kappa.zero;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          Poly expected(w.ring());
          for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q)
              for (int s = 0; s < m; ++s)
                for (int t = 0; t < m; ++t) {
                  const Rational f = ainv[i][p] * a[q][j] * a[s][k] * a[t][l];
                  if (!f.is_zero() && !w.at({p, q, s, t}).is_zero()) expected += w.at({p, q, s, t}) * f;
                }
          if (!(expected == moved.zero.at({i, j, k, l}))) {
            r.fail("kappa0 component " + index_label({i, j, k, l}));
            return r;
          }
        }
  if (!moved.minus.is_zero()) r.fail("transformed kappa has a g-1 part");
  return r;
}

}  // namespace projcalc
