#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "ogp/theory.hpp"

using namespace ogp;

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

TEST_CASE("binary_entropy endpoints, peak, symmetry, frozen value") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(kLn2).epsilon(1e-15));
  // Frozen from an independent evaluation of -q ln q - (1-q) ln(1-q).
  CHECK(binary_entropy(0.25) == doctest::Approx(0.56233514461880829).epsilon(1e-14));
  for (double q : {0.1, 0.3, 0.42}) CHECK(binary_entropy(q) == doctest::Approx(binary_entropy(1.0 - q)).epsilon(1e-14));
  CHECK_THROWS_AS(binary_entropy(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(binary_entropy(1.01), std::invalid_argument);
}

TEST_CASE("npp_pair_exponent closed form and frozen values") {
  // At rho = 0 the exponent collapses to 2 ln2 (1 - alpha).
  CHECK(npp_pair_exponent(0.75, 0.0) == doctest::Approx(2.0 * kLn2 * 0.25).epsilon(1e-14));
  CHECK(npp_pair_exponent(0.75, 0.0) == doctest::Approx(0.3465735902799727).epsilon(1e-14));
  CHECK(npp_pair_exponent(0.75, 0.5) == doctest::Approx(0.21576155433883559).epsilon(1e-14));
  CHECK(npp_pair_exponent(0.6, -0.5) == doctest::Approx(0.4237057085068191).epsilon(1e-14));
  // Even in rho: H((1-rho)/2) = H((1+rho)/2).
  for (double rho : {0.1, 0.4, 0.8})
    CHECK(npp_pair_exponent(0.8, rho) == doctest::Approx(npp_pair_exponent(0.8, -rho)).epsilon(1e-14));
  // At alpha = 1, rho = 0 the exponent vanishes (the census edge).
  CHECK(npp_pair_exponent(1.0, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK_THROWS_AS(npp_pair_exponent(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(npp_pair_exponent(0.75, 1.5), std::invalid_argument);
}

TEST_CASE("npp_rho0 frozen anchors and root property") {
  // Frozen from an independent bisection of the same closed form.
  CHECK(npp_rho0(0.55) == doctest::Approx(0.974026275888964).epsilon(1e-9));
  CHECK(npp_rho0(0.75) == doctest::Approx(0.779944271123281).epsilon(1e-9));
  CHECK(npp_rho0(0.9) == doctest::Approx(0.513992292382092).epsilon(1e-9));
  for (double alpha : {0.55, 0.6, 0.75, 0.9, 0.99}) {
    const double r = npp_rho0(alpha);
    CHECK(r > 0.0);
    CHECK(r < 1.0);
    CHECK(std::abs(npp_pair_exponent(alpha, r)) < 1e-10);
    // Just inside / outside the root the exponent changes sign.
    CHECK(npp_pair_exponent(alpha, r - 1e-6) > 0.0);
    CHECK(npp_pair_exponent(alpha, r + 1e-6) < 0.0);
  }
  // Strictly decreasing in alpha.
  double prev = 1.0;
  for (double alpha = 0.55; alpha < 0.995; alpha += 0.05) {
    const double r = npp_rho0(alpha);
    CHECK(r < prev);
    prev = r;
  }
  CHECK_THROWS_AS(npp_rho0(0.5), std::invalid_argument);
  CHECK_THROWS_AS(npp_rho0(1.0), std::invalid_argument);
}

TEST_CASE("clique_pair_exponent frozen values and domain") {
  CHECK(clique_pair_exponent(1.72, 1.0, 0.0) == doctest::Approx(-0.0184).epsilon(1e-10));
  CHECK(clique_pair_exponent(1.9, 0.5, 0.3) == doctest::Approx(-0.2225).epsilon(1e-10));
  // x = 0 reduces to 2 alpha - alpha^2 > 0 on (1, 2).
  CHECK(clique_pair_exponent(1.5, 0.0, 0.7) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK_THROWS_AS(clique_pair_exponent(1.0, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(clique_pair_exponent(2.0, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(clique_pair_exponent(1.5, 0.5, -0.1), std::invalid_argument);
}

TEST_CASE("clique_overlap_roots frozen pair at alpha 1.72, rho 0") {
  const auto roots = clique_overlap_roots(1.72, 0.0);
  REQUIRE(roots.x1.has_value());
  REQUIRE(roots.x2.has_value());
  CHECK(*roots.x1 == doctest::Approx(1.1918332609325075).epsilon(1e-12));
  CHECK(*roots.x2 == doctest::Approx(0.8081667390674925).epsilon(1e-12));
  // Both roots annihilate the exponent.
  CHECK(std::abs(clique_pair_exponent(1.72, *roots.x1, 0.0)) < 1e-12);
  CHECK(std::abs(clique_pair_exponent(1.72, *roots.x2, 0.0)) < 1e-12);
  // The roots straddle x = 1 and sum to 2/(1 - rho).
  CHECK(*roots.x1 + *roots.x2 == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("clique_overlap_roots exact rational case alpha 1.8, rho 0.5") {
  // Discriminant 1 - 2*0.5*(3.6 - 3.24) = 0.64: x2 = (1 - 0.8)/0.5 = 0.4 and
  // x1 = (1 + 0.8)/0.5 = 3.6 exceeds alpha, so only the small branch remains.
  const auto roots = clique_overlap_roots(1.8, 0.5);
  CHECK_FALSE(roots.x1.has_value());
  REQUIRE(roots.x2.has_value());
  CHECK(*roots.x2 == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("the x1 branch exits exactly at rho_star") {
  CHECK(rho_star(1.6) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(rho_star(1.72) == doctest::Approx(0.16279069767441867).epsilon(1e-13));
  // For alpha >= 1.5 the x1 branch is real just below rho_star and exits
  // through x1 = alpha there (below 1.5 the discriminant dies first).
  for (double alpha : {1.6, 1.72, 1.9}) {
    const double rs = rho_star(alpha);
    const auto at_star = clique_overlap_roots(alpha, rs);
    REQUIRE(at_star.x1.has_value());
    CHECK(*at_star.x1 == doctest::Approx(alpha).epsilon(1e-9));
    CHECK(clique_overlap_roots(alpha, rs - 0.01).x1.has_value());
    CHECK_FALSE(clique_overlap_roots(alpha, rs + 0.01).x1.has_value());
  }
  CHECK_THROWS_AS(rho_star(1.0), std::invalid_argument);
  CHECK_THROWS_AS(rho_star(2.0), std::invalid_argument);
}

TEST_CASE("root existence at rho 0 flips at 1 + 1/sqrt(2)") {
  // Discriminant 1 - 2(2 alpha - alpha^2) is negative below, positive above.
  CHECK_FALSE(clique_overlap_roots(1.70, 0.0).x2.has_value());
  CHECK_FALSE(clique_overlap_roots(1.705, 0.0).x2.has_value());
  CHECK(clique_overlap_roots(1.7072, 0.0).x2.has_value());  // just above the boundary
  CHECK(clique_overlap_roots(1.71, 0.0).x2.has_value());
  const double boundary = 1.0 + 1.0 / std::sqrt(2.0);
  CHECK(clique_overlap_roots(boundary + 1e-6, 0.0).x2.has_value());
  CHECK_FALSE(clique_overlap_roots(boundary - 1e-6, 0.0).x2.has_value());
}

TEST_CASE("rho = 1 degenerates to the single linear root") {
  const auto roots = clique_overlap_roots(1.72, 1.0);
  CHECK_FALSE(roots.x1.has_value());
  REQUIRE(roots.x2.has_value());
  CHECK(*roots.x2 == doctest::Approx(2.0 * 1.72 - 1.72 * 1.72).epsilon(1e-12));
}

TEST_CASE("sample_clique_curve and CSV formatting") {
  const auto curve = sample_clique_curve(1.8, {0.0, 0.5, 1.0});
  CHECK(curve.alpha == 1.8);
  CHECK(curve.rho_star == doctest::Approx(2.0 / 1.8 - 1.0).epsilon(1e-14));
  REQUIRE(curve.samples.size() == 3);
  CHECK(curve.samples[0].x1.has_value());        // rho 0 is below rho_star(1.8) ~ 0.111
  CHECK_FALSE(curve.samples[1].x1.has_value());  // rho 0.5 is past it
  REQUIRE(curve.samples[1].x2.has_value());
  CHECK(*curve.samples[1].x2 == doctest::Approx(0.4).epsilon(1e-12));

  const std::string csv = clique_curve_csv(curve);
  CHECK(csv.rfind("rho,x1,x2,rho_star,alpha\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows
  // Absent branches serialize as empty fields.
  CHECK(csv.find("\n0.5,,0.3") != std::string::npos);
}
