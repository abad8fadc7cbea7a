// The five-cycle meets the sigma bound with equality, and its blowups drift
// from that: the sigma at which the degree sum reaches alpha climbs toward 3/4.

#include <cstdio>

#include "tlab.hpp"

using namespace tlab;

int main() {
  const Graph c5 = gen::cycle(5);
  std::printf("C5: alpha %d, caro_wei %s, sigma_bound(1/2) %s, lp %s\n", alpha_exact(c5).alpha,
              to_string(caro_wei(c5)).c_str(), to_string(sigma_bound(c5, Rational(1, 2))).c_str(),
              to_string(lp_max_weight(c5).value).c_str());

  std::printf("%4s %4s %6s %12s %14s\n", "t", "n", "alpha", "sigma_star", "bracket_mid");
  for (int t : {1, 2, 5, 10, 20, 30}) {
    const Graph g = gen::c5_blowup(t);
    const int n = g.order();
    const Rational avg(2 * static_cast<long long>(g.edge_count()), n);
    const Rational sigma_star = avg + 1 - Rational(n, 2);
    const SigmaBracket b = critical_sigma(g, 2, 0, 1);
    std::printf("%4d %4d %6d %12s %14.6f\n", t, n, alpha_exact(g).alpha, to_string(sigma_star).c_str(),
                static_cast<double>((b.lo + b.hi) / 2));
  }
  return 0;
}
