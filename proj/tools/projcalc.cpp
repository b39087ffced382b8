// projcalc: command-line front end for the projective calculus library.
//
// Exit codes: 0 success, 1 a check failed, 2 invalid input or parameters.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "projcalc/checks.hpp"
#include "projcalc/formal.hpp"
#include "projcalc/json_io.hpp"
#include "projcalc/weyl_invariants.hpp"

using namespace projcalc;
using nlohmann::json;

namespace {

struct Options {
  std::string connection;
  std::string symbol;
  std::optional<int> m, k, l, j, perturb;
  std::string delta = "0";
  std::string sigma;
  std::string alpha_file;
  std::string affine_file;
  std::string out;
  bool sharpness = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Options& o, const json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write '" + o.out + "'");
  f << text;
}

Rational rational_delta(const Options& o, const char* command) {
  if (o.delta == "formal") throw UsageError(std::string(command) + " needs a rational --delta, not formal");
  try {
    return Rational::parse(o.delta);
  } catch (const std::exception& e) {
    throw UsageError("malformed --delta '" + o.delta + "': " + e.what());
  }
}

Derangement sigma_of(const Options& o, int j) {
  if (o.sigma.empty()) return Derangement::cycle(j);
  Derangement s = Derangement::parse(o.sigma);
  if (s.j() != j) throw UsageError("--sigma has " + std::to_string(s.j()) + " entries but j = " + std::to_string(j));
  return s;
}

Connection load_connection(const Options& o) {
  Connection c = io::connection_from_json(io::read_file(o.connection));
  if (o.m && *o.m != c.dim()) throw UsageError("--m differs from the connection dimension");
  return c;
}

/// The symbol file if given, else the position power of order k (default `fallback_k`).
TensorField load_symbol(const Options& o, int dim, int fallback_k, const Rational& delta) {
  if (o.symbol.empty()) return position_power_symbol(dim, o.k.value_or(fallback_k), delta);
  TensorField s = io::tensor_from_json(io::read_file(o.symbol));
  if (s.dim() != dim) throw UsageError("symbol dimension differs from the connection");
  if (s.down() != 0) throw UsageError("symbol must be contravariant");
  if (o.k && *o.k != s.up()) throw UsageError("--k differs from the symbol order");
  return s;
}

OneForm load_alpha(const Options& o, int dim) {
  if (!o.alpha_file.empty()) return io::one_form_from_json(io::read_file(o.alpha_file), dim);
  const RingPtr ring = chart_ring(dim);
  OneForm a;
  for (int k = 0; k < dim; ++k)
    a.components.push_back(Poly::variable(ring, ring->names()[static_cast<std::size_t>(k)]) + Poly(ring, Rational(k + 1)));
  return a;
}

AffineMap load_affine(const Options& o, int dim) {
  if (!o.affine_file.empty()) return io::affine_from_json(io::read_file(o.affine_file), dim);
  RationalMatrix a = identity_matrix(dim);
  for (int i = 0; i + 1 < dim; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = Rational(1);
  std::vector<Rational> b(static_cast<std::size_t>(dim));
  b[0] = Rational(1);
  return AffineMap(std::move(a), std::move(b));
}

int status_code(bool passed) { return passed ? 0 : 1; }

int run_weyl(const Options& o) {
  const Connection c = load_connection(o);
  const NormalGauge g = solve_normality(c);
  const KappaField kappa = curvature_kappa(g);
  const Report normal = normality_check(kappa);
  const Report trace_free = trace_free_check(kappa.zero);
  emit(o, {{"P", io::to_json(g.p)},
           {"kappa_minus1", io::to_json(kappa.minus)},
           {"kappa0", io::to_json(kappa.zero)},
           {"kappa1", io::to_json(kappa.plus)},
           {"reports", json::array({normal.to_json(), trace_free.to_json()})}});
  return status_code(normal.passed && trace_free.passed);
}

int run_build_w(const Options& o) {
  const Connection c = load_connection(o);
  const int j = o.j.value_or(2);
  const Derangement sigma = sigma_of(o, j);
  emit(o, {{"sigma", sigma.to_string()}, {"W", io::to_json(weyl_invariant(solve_normality(c), sigma))}});
  return 0;
}

int run_map4(const Options& o) {
  const Connection c = load_connection(o);
  const Derangement sigma = sigma_of(o, o.j.value_or(2));
  const TensorField s = load_symbol(o, c.dim(), 4, rational_delta(o, "map4"));
  emit(o, {{"map4", io::to_json(map4(s, solve_normality(c), sigma))}});
  return 0;
}

int run_map5(const Options& o) {
  const Connection c = load_connection(o);
  const Derangement sigma = sigma_of(o, o.j.value_or(2));
  const Rational delta = rational_delta(o, "map5");
  const TensorField s = load_symbol(o, c.dim(), 5, delta);
  const Rational coeff = map5_coefficient(s.up(), c.dim(), delta);
  emit(o, {{"coefficient", coeff.to_string()}, {"map5", io::to_json(map5(s, solve_normality(c), sigma, s.up(), delta))}});
  return 0;
}

int run_check_invariance(const Options& o) {
  const Connection c = load_connection(o);
  const Derangement sigma = sigma_of(o, o.j.value_or(2));
  const Rational delta = rational_delta(o, "check-invariance");
  const TensorField s = load_symbol(o, c.dim(), 4, delta);
  const OneForm alpha = load_alpha(o, c.dim());
  const AffineMap phi = load_affine(o, c.dim());
  std::vector<Report> reports{weyl_projective_invariance(c, alpha), weyl_affine_naturality(c, phi)};
  if (s.up() >= 4) {
    reports.push_back(map4_projective_invariance(s, c, alpha, sigma));
    reports.push_back(map4_affine_naturality(s, c, phi, sigma));
  }
  if (s.up() >= 5) {
    const Rational c5 = map5_coefficient(s.up(), c.dim(), delta);
    reports.push_back(map5_projective_invariance(s, c, alpha, sigma, c5));
    reports.push_back(map5_affine_naturality(s, c, phi, sigma, c5));
  }
  json out = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    out.push_back(r.to_json());
    ok = ok && r.passed;
  }
  emit(o, {{"status", ok ? "pass" : "fail"}, {"reports", out}});
  return status_code(ok);
}

int run_check_lemma(const Options& o) {
  const Report r = formal::verify_lemma(o.k.value_or(1), o.j.value_or(2), o.m.value_or(3));
  emit(o, r.to_json());
  return status_code(r.passed);
}

int run_check_theorem(const Options& o) {
  const int j = o.j.value_or(2);
  const int l = o.l.value_or(2 * j);
  const int k = o.k.value_or(l);
  const int m = o.m.value_or(3);
  const Report r = formal::verify_theorem(k, l, j, m, o.perturb.value_or(-1));
  json doc{{"theorem", r.to_json()}};
  bool ok = r.passed;
  if (o.sharpness) {
    const Report s = formal::theorem_sharpness(k, l, j, m);
    doc["sharpness"] = s.to_json();
    ok = ok && s.passed;
  }
  emit(o, doc);
  return status_code(ok);
}

int run_check_recursion(const Options& o) {
  const int k = o.k.value_or(3), l = o.l.value_or(5), j = o.j.value_or(2), m = o.m.value_or(3);
  const Report r = o.delta == "formal" ? check_recursion(k, l, j, m)
                                       : check_recursion(k, l, j, m, rational_delta(o, "check-recursion"));
  emit(o, r.to_json());
  return status_code(r.passed);
}

int run_demo(const Options& o) {
  const Connection c = load_connection(o);
  const Derangement sigma = sigma_of(o, 2);
  const Rational delta = rational_delta(o, "demo-nonuniqueness");
  const TensorField s = load_symbol(o, c.dim(), 4, delta);
  const OneForm alpha = load_alpha(o, c.dim());
  const NormalGauge g = solve_normality(c);
  const TensorField w = weyl_invariant(g, sigma);
  const TensorField out4 = map4(s, g, sigma);
  std::vector<Report> reports{map4_projective_invariance(s, c, alpha, sigma)};
  json doc{{"sigma", sigma.to_string()}, {"W", io::to_json(w)}, {"map4", io::to_json(out4)},
           {"map4_nonzero", !out4.is_zero()}};
  if (s.up() >= 5) {
    const Rational c5 = map5_coefficient(s.up(), c.dim(), delta);
    doc["map5"] = io::to_json(map5(s, g, sigma, s.up(), delta));
    reports.push_back(map5_projective_invariance(s, c, alpha, sigma, c5));
  }
  bool ok = !out4.is_zero();
  json rs = json::array();
  for (const auto& r : reports) {
    rs.push_back(r.to_json());
    ok = ok && r.passed;
  }
  doc["reports"] = rs;
  doc["status"] = ok ? "pass" : "fail";
  emit(o, doc);
  return status_code(ok);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact projective differential geometry calculator"};
  app.require_subcommand(1);
  Options o;

  auto connection_cmd = [&](const std::string& name, const std::string& help, bool symbol) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("connection", o.connection, "connection JSON file")->required()->check(CLI::ExistingFile);
    if (symbol) cmd->add_option("symbol", o.symbol, "symbol JSON file (default: position power of order k)")
                    ->check(CLI::ExistingFile);
    return cmd;
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--m", o.m, "dimension");
    cmd->add_option("--k", o.k, "symbol order");
    cmd->add_option("--j", o.j, "W order parameter");
    cmd->add_option("--delta", o.delta, "weight shift: rational, or 'formal' where allowed");
    cmd->add_option("--sigma", o.sigma, "derangement as 1-based images, e.g. 2,1");
    cmd->add_option("--out", o.out, "write JSON here instead of stdout");
  };

  CLI::App* weyl = connection_cmd("weyl", "P, kappa and normality reports of a connection", false);
  CLI::App* build_w = connection_cmd("build-w", "W invariant of a connection", false);
  CLI::App* m4 = connection_cmd("map4", "order-4 projectively equivariant map", true);
  CLI::App* m5 = connection_cmd("map5", "order-5 projectively equivariant map", true);
  CLI::App* inv = connection_cmd("check-invariance", "projective shift and affine naturality checks", true);
  CLI::App* demo = connection_cmd("demo-nonuniqueness", "nonzero equivariant map on a sample input", true);
  CLI::App* lemma = app.add_subcommand("check-lemma", "g1-action on symmetrized derivatives of W");
  CLI::App* theorem = app.add_subcommand("check-theorem", "g1-invariance of the order-l combination");
  CLI::App* recursion = app.add_subcommand("check-recursion", "recursion identity of the coefficients");
  for (CLI::App* cmd : {weyl, build_w, m4, m5, inv, demo, lemma, theorem, recursion}) add_common(cmd);
  for (CLI::App* cmd : {inv, demo}) {
    cmd->add_option("--alpha-file", o.alpha_file, "one-form JSON for the projective shift")->check(CLI::ExistingFile);
    cmd->add_option("--affine-file", o.affine_file, "affine map JSON")->check(CLI::ExistingFile);
  }
  for (CLI::App* cmd : {theorem, recursion}) cmd->add_option("--l", o.l, "order l");
  theorem->add_option("--perturb", o.perturb, "add 1 to C_{k,l,r} for this r");
  theorem->add_flag("--sharpness", o.sharpness, "also check that every single perturbation breaks invariance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*weyl) return run_weyl(o);
    if (*build_w) return run_build_w(o);
    if (*m4) return run_map4(o);
    if (*m5) return run_map5(o);
    if (*inv) return run_check_invariance(o);
    if (*demo) return run_demo(o);
    if (*lemma) return run_check_lemma(o);
    if (*theorem) return run_check_theorem(o);
    if (*recursion) return run_check_recursion(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
