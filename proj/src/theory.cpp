#include "ogp/theory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ogp/format.hpp"

namespace ogp {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

double binary_entropy(double q) {
  require(q >= 0.0 && q <= 1.0, "binary_entropy: q must be in [0, 1]");
  if (q == 0.0 || q == 1.0) return 0.0;
  return -q * std::log(q) - (1.0 - q) * std::log(1.0 - q);
}

double npp_pair_exponent(double alpha, double rho) {
  require(alpha > 0.0, "npp_pair_exponent: alpha must be > 0");
  require(rho >= -1.0 && rho <= 1.0, "npp_pair_exponent: rho must be in [-1, 1]");
  return kLn2 + binary_entropy((1.0 - rho) / 2.0) - 2.0 * alpha * kLn2;
}

double npp_rho0(double alpha) {
  require(alpha > 0.5 && alpha < 1.0, "npp_rho0: alpha must be in (1/2, 1)");
  // The exponent is strictly decreasing in rho on (0, 1): positive at 0
  // (2(1-alpha) ln 2), negative at 1 ((1-2 alpha) ln 2). Plain bisection.
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (npp_pair_exponent(alpha, mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double clique_pair_exponent(double alpha, double x, double rho) {
  require(alpha > 1.0 && alpha < 2.0, "clique_pair_exponent: alpha must be in (1, 2)");
  require(rho >= 0.0 && rho <= 1.0, "clique_pair_exponent: rho must be in [0, 1]");
  return (1.0 - rho) * x * x / 2.0 - x + 2.0 * alpha - alpha * alpha;
}

double rho_star(double alpha) {
  require(alpha > 1.0 && alpha < 2.0, "rho_star: alpha must be in (1, 2)");
  return 2.0 / alpha - 1.0;
}

CliqueRoots clique_overlap_roots(double alpha, double rho) {
  require(alpha > 1.0 && alpha < 2.0, "clique_overlap_roots: alpha must be in (1, 2)");
  require(rho >= 0.0 && rho <= 1.0, "clique_overlap_roots: rho must be in [0, 1]");
  const double c = 2.0 * alpha - alpha * alpha;
  CliqueRoots roots;
  if (rho == 1.0) {
    // Linear equation -x + c = 0; c = alpha(2 - alpha) lies in (0, alpha).
    roots.x2 = c;
    return roots;
  }
  const double disc = 1.0 - 2.0 * (1.0 - rho) * c;
  if (disc < 0.0) return roots;  // no real roots at this overlap
  const double sq = std::sqrt(disc);
  roots.x2 = (1.0 - sq) / (1.0 - rho);
  const double x1 = (1.0 + sq) / (1.0 - rho);
  // The large root stays meaningful only while it does not exceed the clique
  // size; it exits exactly at rho_star (where x1 = alpha).
  if (x1 <= alpha + 1e-12) roots.x1 = x1;
  return roots;
}

CliqueOverlapCurve sample_clique_curve(double alpha, const std::vector<double>& rho_grid) {
  CliqueOverlapCurve curve;
  curve.alpha = alpha;
  curve.rho_star = rho_star(alpha);
  curve.samples.reserve(rho_grid.size());
  for (double rho : rho_grid) {
    const CliqueRoots r = clique_overlap_roots(alpha, rho);
    curve.samples.push_back(CliqueCurveSample{rho, r.x1, r.x2});
  }
  return curve;
}

std::string clique_curve_csv(const CliqueOverlapCurve& curve) {
  std::string out = "rho,x1,x2,rho_star,alpha\n";
  for (const auto& s : curve.samples) {
    out += format_double(s.rho);
    out += ',';
    if (s.x1) out += format_double(*s.x1);
    out += ',';
    if (s.x2) out += format_double(*s.x2);
    out += ',';
    out += format_double(curve.rho_star);
    out += ',';
    out += format_double(curve.alpha);
    out += '\n';
  }
  return out;
}

}  // namespace ogp
