#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ogp {

// Closed-form first-moment quantities for the two analytic models. All
// entropies and exponents are in nats (natural log); rates written "alpha"
// are the usual scalings: threshold rate for partitioning, clique size in
// units of log2(n) for G(n, 1/2).

// H(q) = -q ln q - (1-q) ln(1-q); exactly 0 at the endpoints. q in [0, 1].
double binary_entropy(double q);

// Expected-count exponent (per n, in nats) of ordered pairs of partitioning
// solutions at threshold rate alpha and overlap rho:
//   ln 2 + H((1 - rho) / 2) - 2 * alpha * ln 2.
// The leading ln 2 is the ordered-pair count term; with it the exponent is
// ln 2 at (alpha = 1/2, rho = 0) and 0 at (alpha = 1, rho = 0).
double npp_pair_exponent(double alpha, double rho);

// Unique rho0 in (0, 1) with npp_pair_exponent(alpha, rho0) = 0, for
// alpha in (1/2, 1); bisection to 1e-12. Decreasing in alpha:
// rho0 -> 1- as alpha -> 1/2+ and rho0 -> 0+ as alpha -> 1-.
double npp_rho0(double alpha);

// Expected-count exponent (per log^2 n factor) of pairs of alpha*log2(n)
// cliques in G(n, 1/2) whose intersection is x*log2(n):
//   (1 - rho) x^2 / 2 - x + 2 alpha - alpha^2,  rho = overlap parameter.
double clique_pair_exponent(double alpha, double x, double rho);

// Zeros of the pair exponent in x:
//   x = (1 -+ sqrt(1 - 2 (1 - rho) (2 alpha - alpha^2))) / (1 - rho).
// Both roots when the discriminant is >= 0 and x1 <= alpha; for
// rho > rho_star(alpha) = 2/alpha - 1 only x2 lies in (0, alpha); no real
// roots when the discriminant is negative. At rho = 1 the equation is linear
// with the single root 2 alpha - alpha^2 (reported as x2).
// Requires alpha in (1, 2), rho in [0, 1].
struct CliqueRoots {
  std::optional<double> x1;  // larger root, present only while x1 <= alpha
  std::optional<double> x2;  // smaller root (the branch that persists)
};
CliqueRoots clique_overlap_roots(double alpha, double rho);

// rho_star(alpha) = 2/alpha - 1: the overlap where the x1 branch exits at
// x1 = alpha. Requires alpha in (1, 2).
double rho_star(double alpha);

// Root curves sampled on an explicit rho grid.
struct CliqueCurveSample {
  double rho = 0.0;
  std::optional<double> x1;
  std::optional<double> x2;
};

struct CliqueOverlapCurve {
  double alpha = 0.0;
  double rho_star = 0.0;
  std::vector<CliqueCurveSample> samples;
};

CliqueOverlapCurve sample_clique_curve(double alpha, const std::vector<double>& rho_grid);

// CSV rows "rho,x1,x2,rho_star,alpha" (header included; absent branches are
// empty fields; shortest round-trip decimal formatting).
std::string clique_curve_csv(const CliqueOverlapCurve& curve);

}  // namespace ogp
