#include "projcalc/formal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "projcalc/cartan.hpp"
#include "projcalc/parallel.hpp"
#include "projcalc/weyl_invariants.hpp"

namespace projcalc::formal {

namespace {

std::size_t ipow(int m, int r) {
  std::size_t n = 1;
  for (int i = 0; i < r; ++i) n *= static_cast<std::size_t>(m);
  return n;
}

MultiIndex unflat(std::size_t f, int rank, int m) {
  MultiIndex idx(static_cast<std::size_t>(rank));
  for (int s = rank - 1; s >= 0; --s) {
    idx[static_cast<std::size_t>(s)] = static_cast<int>(f % static_cast<std::size_t>(m));
    f /= static_cast<std::size_t>(m);
  }
  return idx;
}

std::size_t flat(const MultiIndex& idx, int m) {
  std::size_t f = 0;
  for (int v : idx) f = f * static_cast<std::size_t>(m) + static_cast<std::size_t>(v);
  return f;
}

Monomial replace_factor(const Monomial& mono, std::size_t pos, const Monomial& with) {
  Monomial out;
  out.reserve(mono.size() + with.size());
  for (std::size_t p = 0; p < mono.size(); ++p)
    if (p != pos) out.push_back(mono[p]);
  out.insert(out.end(), with.begin(), with.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Extends a map on single factors to a derivation of the product algebra.
template <class FactorMap>
FormalExpr apply_derivation(const FormalExpr& e, FactorMap&& on_factor) {
  FormalExpr out;
  for (const auto& [mono, coef] : e.terms())
    for (std::size_t p = 0; p < mono.size(); ++p) {
      const FormalExpr& image = on_factor(mono[p]);
      for (const auto& [m2, c2] : image.terms()) out.add_term(replace_factor(mono, p, m2), coef * c2);
    }
  return out;
}

Rational trace(const RationalMatrix& a) {
  Rational t(0);
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

/// −ρ_*(A) on the value slots and the density of one factor; letters untouched.
void value_action(const Context& ctx, const RationalMatrix& a, const Factor& f, FormalExpr& out) {
  const Generator& g = ctx.generator(f.generator);
  const int m = ctx.dim();
  for (std::size_t s = 0; s < f.values.size(); ++s) {
    const bool covariant = static_cast<int>(s) < g.covariant;
    const int orig = f.values[s];
    for (int r = 0; r < m; ++r) {
      const Rational& c = covariant ? a[static_cast<std::size_t>(r)][static_cast<std::size_t>(orig)]
                                    : a[static_cast<std::size_t>(orig)][static_cast<std::size_t>(r)];
      if (c.is_zero()) continue;
      Factor h = f;
      h.values[s] = static_cast<std::int8_t>(r);
      ctx.canonicalize(h);
      out.add_term({h}, covariant ? RationalFunction(c) : RationalFunction(-c));
    }
  }
  const Rational tr = trace(a);
  if (!tr.is_zero() && !g.weight.is_zero()) out.add_term({f}, g.weight * RationalFunction(tr));
}

FormalExpr g0_direct_factor(const Context& ctx, const RationalMatrix& a, const Factor& f) {
  FormalExpr out;
  const int m = ctx.dim();
  for (std::size_t s = 0; s < f.letters.size(); ++s) {
    const int orig = f.letters[s];
    for (int r = 0; r < m; ++r) {
      const Rational& c = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(orig)];
      if (c.is_zero()) continue;
      Factor h = f;
      h.letters[s] = static_cast<std::int8_t>(r);
      out.add_term({h}, RationalFunction(c));
    }
  }
  value_action(ctx, a, f, out);
  return out;
}

FormalExpr g0_recursive_factor(const Context& ctx, const RationalMatrix& a, const Factor& f) {
  if (f.letters.empty()) {
    FormalExpr out;
    value_action(ctx, a, f, out);
    return out;
  }
  Factor inner = f;
  const int b = inner.letters.back();
  inner.letters.pop_back();
  // A·L_b F = L_b (A·F) + L_{[A, e_b]} F with [A, e_b] = A e_b.
  FormalExpr out = deriv(ctx, b, g0_recursive_factor(ctx, a, inner));
  for (int r = 0; r < ctx.dim(); ++r) {
    const Rational& c = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)];
    if (c.is_zero()) continue;
    Factor h = inner;
    h.letters.push_back(static_cast<std::int8_t>(r));
    out.add_term({h}, RationalFunction(c));
  }
  return out;
}

}  // namespace

FormalExpr FormalExpr::constant(const RationalFunction& c) {
  FormalExpr e;
  e.add_term({}, c);
  return e;
}

FormalExpr FormalExpr::factor(Factor f, const RationalFunction& c) {
  FormalExpr e;
  e.add_term({std::move(f)}, c);
  return e;
}

void FormalExpr::add_term(const Monomial& m, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FormalExpr& FormalExpr::operator+=(const FormalExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FormalExpr& FormalExpr::operator-=(const FormalExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FormalExpr& FormalExpr::operator*=(const RationalFunction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

FormalExpr operator*(const FormalExpr& a, const FormalExpr& b) {
  FormalExpr out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      out.add_term(m, ca * cb);
    }
  return out;
}

std::string FormalExpr::to_string(const Context& ctx, std::size_t max_terms) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& [m, c] : terms_) {
    if (shown == max_terms) {
      os << " + ... (" << terms_.size() << " terms)";
      break;
    }
    if (shown++ > 0) os << " + ";
    const std::string cs = c.to_string();
    os << (cs.find_first_of(" /") != std::string::npos ? "(" + cs + ")" : cs);
    for (const auto& f : m) os << '*' << ctx.factor_to_string(f);
  }
  return os.str();
}

Context::Context(int dim) : dim_(dim) {
  if (dim < 1 || dim > 100) throw std::invalid_argument("formal context dimension out of range");
}

int Context::add_generator(Generator g) {
  if (g.covariant < 0 || g.contravariant < 0) throw std::invalid_argument("negative generator rank");
  if (generators_.size() >= 255) throw std::length_error("too many generators");
  generators_.push_back(std::move(g));
  return static_cast<int>(generators_.size()) - 1;
}

void Context::canonicalize(Factor& f) const {
  const Generator& g = generator(f.generator);
  if (!g.symmetric) return;
  auto mid = f.values.begin() + g.covariant;
  std::sort(f.values.begin(), mid);
  std::sort(mid, f.values.end());
}

std::string Context::factor_to_string(const Factor& f) const {
  const Generator& g = generator(f.generator);
  std::string s;
  for (auto it = f.letters.rbegin(); it != f.letters.rend(); ++it) s += "L" + std::to_string(*it + 1) + ".";
  s += g.name + "[";
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (i > 0) s += static_cast<int>(i) == g.covariant ? ";" : ",";
    s += std::to_string(f.values[i] + 1);
  }
  return s + "]";
}

bool FormalTensor::is_zero() const {
  return std::all_of(comps.begin(), comps.end(), [](const FormalExpr& e) { return e.is_zero(); });
}

FormalTensor generator_tensor(const Context& ctx, int generator) {
  const Generator& g = ctx.generator(generator);
  FormalTensor t;
  t.slots.assign(static_cast<std::size_t>(g.covariant), Block::Down);
  t.slots.insert(t.slots.end(), static_cast<std::size_t>(g.contravariant), Block::Up);
  const int rank = t.rank();
  t.comps.resize(ipow(ctx.dim(), rank));
  for (std::size_t f = 0; f < t.comps.size(); ++f) {
    Factor fac;
    fac.generator = static_cast<std::uint8_t>(generator);
    for (int v : unflat(f, rank, ctx.dim())) fac.values.push_back(static_cast<std::int8_t>(v));
    ctx.canonicalize(fac);
    t.comps[f] = FormalExpr::factor(std::move(fac));
  }
  return t;
}

FormalExpr deriv(const Context& ctx, int letter, const FormalExpr& e) {
  if (letter < 0 || letter >= ctx.dim()) throw std::out_of_range("derivative letter out of range");
  FormalExpr out;
  for (const auto& [mono, coef] : e.terms())
    for (std::size_t p = 0; p < mono.size(); ++p) {
      Monomial m = mono;
      m[p].letters.push_back(static_cast<std::int8_t>(letter));
      std::sort(m.begin(), m.end());
      out.add_term(m, coef);
    }
  return out;
}

FormalTensor nabla(const Context& ctx, const FormalTensor& t) {
  FormalTensor out;
  out.slots.push_back(Block::Down);
  out.slots.insert(out.slots.end(), t.slots.begin(), t.slots.end());
  out.comps.reserve(t.comps.size() * static_cast<std::size_t>(ctx.dim()));
  for (int a = 0; a < ctx.dim(); ++a)
    for (const auto& c : t.comps) out.comps.push_back(deriv(ctx, a, c));
  return out;
}

FormalTensor sym_deriv(const Context& ctx, int k, const FormalTensor& t) {
  if (k < 0) throw std::invalid_argument("sym_deriv needs k >= 0");
  FormalTensor d = t;
  for (int i = 0; i < k; ++i) d = nabla(ctx, d);
  if (k < 2) return d;
  const int m = ctx.dim();
  const int rank = d.rank();
  const RationalFunction norm(Rational(1) / factorial(k));
  FormalTensor out{d.slots, std::vector<FormalExpr>(d.comps.size())};
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (std::size_t f = 0; f < d.comps.size(); ++f) {
    const MultiIndex idx = unflat(f, rank, m);
    MultiIndex src = idx;
    std::iota(perm.begin(), perm.end(), 0);
    FormalExpr acc;
    do {
      for (int s = 0; s < k; ++s) src[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])];
      acc += d.comps[flat(src, m)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.comps[f] = acc * norm;
  }
  return out;
}

FormalTensor formal_div(const Context& ctx, const FormalTensor& t) {
  const auto it = std::find(t.slots.begin(), t.slots.end(), Block::Up);
  if (it == t.slots.end()) throw std::invalid_argument("formal_div: no contravariant slot");
  const std::size_t slot = static_cast<std::size_t>(it - t.slots.begin());
  const int m = ctx.dim();
  FormalTensor out;
  out.slots = t.slots;
  out.slots.erase(out.slots.begin() + static_cast<std::ptrdiff_t>(slot));
  const int rank = out.rank();
  out.comps.resize(ipow(m, rank));
  for (std::size_t f = 0; f < out.comps.size(); ++f) {
    const MultiIndex idx = unflat(f, rank, m);
    MultiIndex src = idx;
    src.insert(src.begin() + static_cast<std::ptrdiff_t>(slot), 0);
    FormalExpr acc;
    for (int a = 0; a < m; ++a) {
      src[slot] = a;
      acc += deriv(ctx, a, t.comps[flat(src, m)]);
    }
    out.comps[f] = std::move(acc);
  }
  return out;
}

FormalTensor pair(const Context& ctx, const FormalTensor& a, const FormalTensor& b) {
  if (std::any_of(a.slots.begin(), a.slots.end(), [](Block s) { return s != Block::Up; }))
    throw std::invalid_argument("pair: first argument must be contravariant");
  if (std::any_of(b.slots.begin(), b.slots.end(), [](Block s) { return s != Block::Down; }))
    throw std::invalid_argument("pair: second argument must be covariant");
  if (b.rank() > a.rank()) throw std::invalid_argument("pair: covariant order exceeds contravariant order");
  const int m = ctx.dim();
  const int rest = a.rank() - b.rank();
  const std::size_t rest_size = ipow(m, rest);
  FormalTensor out{std::vector<Block>(static_cast<std::size_t>(rest), Block::Up), std::vector<FormalExpr>(rest_size)};
  for (std::size_t i = 0; i < rest_size; ++i) {
    FormalExpr acc;
    for (std::size_t jf = 0; jf < b.comps.size(); ++jf) {
      const FormalExpr& bj = b.comps[jf];
      const FormalExpr& aj = a.comps[jf * rest_size + i];
      if (bj.is_zero() || aj.is_zero()) continue;
      acc += aj * bj;
    }
    out.comps[i] = std::move(acc);
  }
  return out;
}

FormalTensor scale(FormalTensor t, const RationalFunction& c) {
  for (auto& e : t.comps) e *= c;
  return t;
}

FormalTensor add(FormalTensor a, const FormalTensor& b) {
  if (a.slots != b.slots) throw std::invalid_argument("formal tensors of different type");
  for (std::size_t i = 0; i < a.comps.size(); ++i) a.comps[i] += b.comps[i];
  return a;
}

FormalExpr g0_action(const Context& ctx, const RationalMatrix& a, const FormalExpr& e) {
  return apply_derivation(e, [&](const Factor& f) { return g0_direct_factor(ctx, a, f); });
}

FormalExpr g0_action_recursive(const Context& ctx, const RationalMatrix& a, const FormalExpr& e) {
  return apply_derivation(e, [&](const Factor& f) { return g0_recursive_factor(ctx, a, f); });
}

G1Action::G1Action(const Context& ctx, int c) : ctx_(ctx), c_(c) {
  const int m = ctx.dim();
  if (c < 0 || c >= m) throw std::out_of_range("covector index out of range");
  const RingPtr ring = chart_ring(m);
  const GradedElement h = GradedElement::basis_covector(ring, m, c);
  for (int a = 0; a < m; ++a) {
    const GradedElement br = bracket(h, GradedElement::basis_vector(ring, m, a));
    RationalMatrix mat(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const auto v = br.a(i, j).as_constant();
        if (!v) throw std::logic_error("non-constant bracket of basis elements");
        mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *v;
      }
    brackets_.push_back(std::move(mat));
  }
}

const FormalExpr& G1Action::on_factor(const Factor& f) {
  if (auto it = cache_.find(f); it != cache_.end()) return it->second;
  FormalExpr out;
  if (!f.letters.empty()) {
    Factor inner = f;
    const int a = inner.letters.back();
    inner.letters.pop_back();
    // Commute past the last letter; the g₀ term carries the calibrated sign (see header).
    out = deriv(ctx_, a, on_factor(inner));
    out -= g0_direct_factor(ctx_, brackets_[static_cast<std::size_t>(a)], inner);
  }
  return cache_.emplace(f, std::move(out)).first->second;
}

FormalExpr G1Action::operator()(const FormalExpr& e) {
  return apply_derivation(e, [&](const Factor& f) -> const FormalExpr& { return on_factor(f); });
}

FormalTensor G1Action::operator()(const FormalTensor& t) {
  FormalTensor out{t.slots, {}};
  out.comps.reserve(t.comps.size());
  for (const auto& e : t.comps) out.comps.push_back((*this)(e));
  return out;
}

FormalExpr g1_action(const Context& ctx, int c, const FormalExpr& e) {
  G1Action act(ctx, c);
  return act(e);
}

DiagonalForm diagonal(const FormalTensor& t) {
  if (std::any_of(t.slots.begin(), t.slots.end(), [](Block s) { return s != Block::Down; }))
    throw std::invalid_argument("diagonal needs a covariant tensor");
  DiagonalForm out;
  const int rank = t.rank();
  int m = 1;
  while (ipow(m, rank) < t.comps.size()) ++m;
  for (std::size_t f = 0; f < t.comps.size(); ++f) {
    if (t.comps[f].is_zero()) continue;
    MultiIndex idx = unflat(f, rank, m);
    std::sort(idx.begin(), idx.end());
    out[idx] += t.comps[f];
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

DiagonalForm diagonal_sym_deriv(const Context& ctx, int generator, int k) {
  const Generator& g = ctx.generator(generator);
  if (g.contravariant != 0 || !g.symmetric)
    throw std::invalid_argument("diagonal_sym_deriv needs a symmetric covariant generator");
  if (k < 0) throw std::invalid_argument("diagonal_sym_deriv needs k >= 0");
  const int m = ctx.dim();
  const int n = g.covariant;
  std::vector<std::pair<MultiIndex, Rational>> values;
  for (const auto& idx : sorted_indices(m, n)) {
    Rational arrangements = factorial(n);
    for (std::size_t s = 0, run = 1; s < idx.size(); ++s, ++run)
      if (s + 1 == idx.size() || idx[s + 1] != idx[s]) {
        arrangements /= factorial(static_cast<int>(run));
        run = 0;
      }
    values.emplace_back(idx, arrangements);
  }
  DiagonalForm out;
  const std::size_t words = ipow(m, k);
  for (std::size_t w = 0; w < words; ++w) {
    const MultiIndex word = unflat(w, k, m);
    for (const auto& [idx, count] : values) {
      MultiIndex alpha = word;
      alpha.insert(alpha.end(), idx.begin(), idx.end());
      std::sort(alpha.begin(), alpha.end());
      Factor f;
      f.generator = static_cast<std::uint8_t>(generator);
      for (int a : word) f.letters.push_back(static_cast<std::int8_t>(a));
      for (int v : idx) f.values.push_back(static_cast<std::int8_t>(v));
      out[alpha].add_term({f}, RationalFunction(count));
    }
  }
  return out;
}

DiagonalForm diagonal_covector_product(int c, const DiagonalForm& t) {
  DiagonalForm out;
  for (const auto& [idx, e] : t) {
    MultiIndex alpha = idx;
    alpha.insert(std::upper_bound(alpha.begin(), alpha.end(), c), c);
    out[alpha] += e;
  }
  return out;
}

namespace {

std::string index_string(const MultiIndex& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i] + 1);
  return s + ")";
}

}  // namespace

Report verify_lemma(int k, int j, int m) {
  if (j < 2) throw std::invalid_argument("verify_lemma needs j >= 2");
  if (k < 0) throw std::invalid_argument("verify_lemma needs k >= 0");
  if (m < 1) throw std::invalid_argument("verify_lemma needs m >= 1");
  const long coefficient = -static_cast<long>(k) * (k + 4 * j - 1);
  Report rep{"L_{h*} sym_deriv^k W = -k(k+4j-1) h v sym_deriv^{k-1} W",
             {{"k", k}, {"j", j}, {"m", m}, {"coefficient", coefficient}}};
  Context ctx(m);
  const int w = ctx.add_generator({"W", 2 * j, 0, RationalFunction(), true});
  const DiagonalForm lhs_in = diagonal_sym_deriv(ctx, w, k);
  const DiagonalForm lower = k > 0 ? diagonal_sym_deriv(ctx, w, k - 1) : DiagonalForm{};
  std::vector<std::optional<std::string>> witness(static_cast<std::size_t>(m));
  parallel_for(static_cast<std::size_t>(m), [&](std::size_t ci) {
    const int c = static_cast<int>(ci);
    G1Action act(ctx, c);
    DiagonalForm rhs = diagonal_covector_product(c, lower);
    for (const auto& [alpha, e] : lhs_in) {
      FormalExpr got = act(e);
      FormalExpr want;
      if (auto it = rhs.find(alpha); it != rhs.end()) want = it->second * RationalFunction(coefficient);
      if (!(got == want)) {
        witness[ci] = "h=eps^" + std::to_string(c + 1) + ", X^" + index_string(alpha) +
                      ": difference " + (got - want).to_string(ctx);
        return;
      }
    }
  });
  for (const auto& wtn : witness)
    if (wtn) rep.fail(*wtn);
  return rep;
}

namespace {

struct TheoremData {
  Context ctx;
  std::vector<RationalFunction> coefficients;  // C_{k,l,r}
  std::vector<std::vector<FormalTensor>> variation;  // [c][r]: L_{h*} of the r-th summand
};

TheoremData theorem_data(int k, int l, int j, int m) {
  if (j < 2) throw std::invalid_argument("verify_theorem needs j >= 2");
  if (l < 2 * j) throw std::invalid_argument("verify_theorem needs l >= 2j");
  if (k < l) throw std::invalid_argument("verify_theorem needs k >= l");
  TheoremData d{Context(m), {}, {}};
  const int w = d.ctx.add_generator({"W", 2 * j, 0, RationalFunction(), true});
  const int s = d.ctx.add_generator({"S", 0, k, RationalFunction::delta(), true});
  const int top = l - 2 * j;
  std::vector<FormalTensor> summands;
  FormalTensor div = generator_tensor(d.ctx, s);
  const FormalTensor wt = generator_tensor(d.ctx, w);
  for (int r = 0; r <= top; ++r) {
    if (r > 0) div = formal_div(d.ctx, div);
    summands.push_back(pair(d.ctx, div, sym_deriv(d.ctx, top - r, wt)));
    d.coefficients.push_back(coefficient(k, l, r, j, m));
  }
  d.variation.resize(static_cast<std::size_t>(m));
  parallel_for(static_cast<std::size_t>(m), [&](std::size_t c) {
    G1Action act(d.ctx, static_cast<int>(c));
    for (const auto& t : summands) d.variation[c].push_back(act(t));
  });
  return d;
}

/// First nonzero component of Σ_r coeff_r · variation[c][r] over all c, or nullopt.
std::optional<std::string> nonzero_variation(const TheoremData& d, const std::vector<RationalFunction>& coeff) {
  for (std::size_t c = 0; c < d.variation.size(); ++c) {
    const auto& parts = d.variation[c];
    FormalTensor total = scale(parts[0], coeff[0]);
    for (std::size_t r = 1; r < parts.size(); ++r) total = add(std::move(total), scale(parts[r], coeff[r]));
    for (std::size_t f = 0; f < total.comps.size(); ++f)
      if (!total.comps[f].is_zero()) {
        const MultiIndex idx = unflat(f, total.rank(), d.ctx.dim());
        return "h=eps^" + std::to_string(c + 1) + ", component " + index_string(idx) + ": " +
               total.comps[f].to_string(d.ctx);
      }
  }
  return std::nullopt;
}

const char* kTheoremIdentity = "L_{h*} sum_r C_{k,l,r} <Div^r S, sym_deriv^{l-r-2j} W> = 0";

}  // namespace

Report verify_theorem(int k, int l, int j, int m, int perturb) {
  TheoremData d = theorem_data(k, l, j, m);
  Report rep{kTheoremIdentity, {{"k", k}, {"l", l}, {"j", j}, {"m", m}, {"delta", "formal"}}};
  std::vector<RationalFunction> coeff = d.coefficients;
  if (perturb >= 0) {
    if (perturb >= static_cast<int>(coeff.size())) throw std::invalid_argument("perturbed index out of range");
    coeff[static_cast<std::size_t>(perturb)] += RationalFunction(1);
    rep.parameters["perturbed_r"] = perturb;
  }
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : coeff) cs.push_back(c.to_string());
  rep.parameters["coefficients"] = cs;
  if (auto wtn = nonzero_variation(d, coeff)) rep.fail(*wtn);
  return rep;
}

Report theorem_sharpness(int k, int l, int j, int m) {
  TheoremData d = theorem_data(k, l, j, m);
  Report rep{"each C_{k,l,r} -> C_{k,l,r}+1 gives a nonzero g1-variation",
             {{"k", k}, {"l", l}, {"j", j}, {"m", m}, {"delta", "formal"}}};
  if (auto wtn = nonzero_variation(d, d.coefficients)) {
    rep.fail("unperturbed sum is not invariant: " + *wtn);
    return rep;
  }
  for (std::size_t r = 0; r < d.coefficients.size(); ++r) {
    std::vector<RationalFunction> coeff = d.coefficients;
    coeff[r] += RationalFunction(1);
    if (!nonzero_variation(d, coeff)) rep.fail("perturbing r=" + std::to_string(r) + " keeps the sum invariant");
  }
  return rep;
}

}  // namespace projcalc::formal
