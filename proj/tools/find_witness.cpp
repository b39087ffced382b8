// Searches for a sparse connection on R^m whose j = 2 invariant W is nonzero and prints it as JSON.
//
//   find_witness [--m 3] [--seed 1] [--entries 2] [--tries 500]
//
// Entries are random Γ^i_{jk} (j <= k) equal to a single coordinate times a small integer.

#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "projcalc/json_io.hpp"
#include "projcalc/weyl_invariants.hpp"

using namespace projcalc;

int main(int argc, char** argv) {
  CLI::App app{"Search for a sparse connection with nonvanishing W"};
  int m = 3, entries = 2, tries = 500;
  unsigned seed = 1;
  app.add_option("--m", m)->check(CLI::Range(2, 6));
  app.add_option("--seed", seed);
  app.add_option("--entries", entries)->check(CLI::Range(1, 20));
  app.add_option("--tries", tries)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  const RingPtr ring = chart_ring(m);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> index(0, m - 1), coeff(-2, 2), var(0, m - 1);
  for (int t = 0; t < tries; ++t) {
    Connection c(ring, m);
    for (int e = 0; e < entries; ++e) {
      int i = index(rng), a = index(rng), b = index(rng);
      if (a > b) std::swap(a, b);
      const int n = coeff(rng);
      if (n == 0) continue;
      c.set_gamma(i, a, b, c.gamma(i, a, b) + Poly::variable(ring, ring->names()[static_cast<std::size_t>(var(rng))]) * Rational(n));
    }
    if (weyl_invariant(solve_normality(c), Derangement::cycle(2)).is_zero()) continue;
    std::cout << io::to_json(c).dump(2) << "\n";
    std::cerr << "found after " << t + 1 << " tries\n";
    return 0;
  }
  std::cerr << "no witness in " << tries << " tries\n";
  return 1;
}
