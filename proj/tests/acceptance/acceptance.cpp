// Acceptance suite: one [PASS]/[FAIL] line per shipped criterion. Heavier
// statistical checks live here rather than in the unit suite; every bound was
// calibrated against the enumeration oracles before being frozen. Run as
//   acceptance <path-to-ogplab>
// (the CLI binary is exercised for the determinism and exit-code criteria).

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ogp/algorithms.hpp"
#include "ogp/ensembles.hpp"
#include "ogp/models.hpp"
#include "ogp/oracles.hpp"
#include "ogp/rng.hpp"
#include "ogp/spectrum.hpp"
#include "ogp/theory.hpp"

namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::string g_cli;
fs::path g_tmp;
fs::path g_sat_w1;        // sweep-sat output at one worker, shared by 6 and 11
bool g_sat_w1_ok = false;

void report(bool ok, const std::string& label, const std::string& detail = std::string()) {
  if (ok) {
    std::cout << "[PASS] " << label << "\n";
  } else {
    ++g_failures;
    std::cout << "[FAIL] " << label;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// Runs the CLI through the shell with OGP_WORKERS pinned; stdout/stderr are
// captured to files so the acceptance log stays one line per criterion.
int run_cli(const std::string& args, const fs::path& out, int workers) {
  std::ostringstream cmd;
  cmd << "OGP_WORKERS=" << workers << " \"" << g_cli << "\" " << args << " > \"" << out.string()
      << "\" 2> \"" << out.string() << ".err\"";
  const int rc = std::system(cmd.str().c_str());
  if (rc == -1 || !WIFEXITED(rc)) return -1;
  return WEXITSTATUS(rc);
}

void moments(const std::vector<double>& v, double& mean, double& var) {
  mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  var = 0.0;
  for (double x : v) var += (x - mean) * (x - mean);
  var /= static_cast<double>(v.size());
}

double correlation(const std::vector<double>& x, const std::vector<double>& y) {
  double mx, vx, my, vy;
  moments(x, mx, vx);
  moments(y, my, vy);
  double cov = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) cov += (x[i] - mx) * (y[i] - my);
  cov /= static_cast<double>(x.size());
  return cov / std::sqrt(vx * vy);
}

// --------------------------------------------------------------------------
// 1. Exactness of the clique first-moment curve machinery.

void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  std::string why;
  bool ok = true;

  const auto r = ogp::clique_overlap_roots(1.72, 0.0);
  if (!r.x1 || !r.x2 || std::abs(*r.x1 - 1.19183) > 1e-5 || std::abs(*r.x2 - 0.80817) > 1e-5) {
    ok = false;
    why = "roots at (1.72, 0) off";
  }

  int evaluated = 0;
  for (int a = 0; a < 10 && ok; ++a) {
    for (int b = 0; b < 10 && ok; ++b) {
      const double alpha = 1.05 + 0.1 * a;
      const double rho = 0.1 * b;
      const auto roots = ogp::clique_overlap_roots(alpha, rho);
      for (const auto& root : {roots.x1, roots.x2}) {
        if (!root.has_value()) continue;
        ++evaluated;
        if (std::abs(ogp::clique_pair_exponent(alpha, *root, rho)) > 1e-12) {
          ok = false;
          why = "exponent nonzero at a root (alpha=" + std::to_string(alpha) +
                ", rho=" + std::to_string(rho) + ")";
        }
      }
    }
  }
  if (ok && evaluated < 60) {
    ok = false;
    why = "too few roots on the grid: " + std::to_string(evaluated);
  }

  if (ok && std::abs(ogp::rho_star(1.72) - 0.163) > 5e-4) {
    ok = false;
    why = "rho_star(1.72) off 0.163";
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && secs >= 1.0) {
    ok = false;
    why = "took " + std::to_string(secs) + "s";
  }
  report(ok, "criterion 1: clique curve exactness (roots, exponent zeros, rho*) in under 1s", why);
}

// --------------------------------------------------------------------------
// 2. Root existence at rho = 0 flips exactly at alpha = 1 + 1/sqrt(2).

void criterion2() {
  struct Probe {
    double alpha;
    int expect;  // 0 = none, 1 = exists, 2 = follow the discriminant's sign
  };
  const Probe probes[] = {{1.70, 0}, {1.705, 0}, {1.7072, 2}, {1.71, 1}};
  bool ok = true;
  std::string why;
  for (const auto& p : probes) {
    const auto r = ogp::clique_overlap_roots(p.alpha, 0.0);
    const bool has = r.x1.has_value() && r.x2.has_value();
    // Discriminant of x^2/2 - x + (2a - a^2): positive iff 2a^2 - 4a + 1 > 0,
    // i.e. iff a > 1 + 1/sqrt(2). The 1.7072 probe sits close enough to the
    // boundary that it defers to an independent evaluation of that sign.
    const bool want = p.expect == 2 ? (2.0 * p.alpha * p.alpha - 4.0 * p.alpha + 1.0 > 0.0)
                                    : (p.expect == 1);
    if (has != want) {
      ok = false;
      why = "alpha=" + std::to_string(p.alpha) + (has ? " has roots" : " lacks roots");
      break;
    }
  }
  report(ok, "criterion 2: rho=0 root existence flips at alpha = 1 + 1/sqrt(2)", why);
}

// --------------------------------------------------------------------------
// 3. The NPP optimum sits at the sqrt(n) 2^-n scale.

void criterion3() {
  bool ok = true;
  std::string why;
  for (int n : {16, 20, 24}) {
    int good = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto inst = ogp::gen_npp(n, seed);
      const double c = ogp::npp_optimum(inst).first;
      const double v = std::log2(c) + n - 0.5 * std::log2(static_cast<double>(n));
      if (v >= -4.0 && v <= 4.0) ++good;
    }
    if (good < 45) {
      ok = false;
      why = "n=" + std::to_string(n) + ": only " + std::to_string(good) + "/50 in [-4, 4]";
      break;
    }
  }
  report(ok, "criterion 3: NPP optimum concentrates at the sqrt(n) 2^-n scale", why);
}

// --------------------------------------------------------------------------
// 4. Karmarkar-Karp vs the best of 1000 uniform random partitions.

void criterion4() {
  bool ok = true;
  std::string why;
  int good = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = ogp::gen_npp(100, seed);
    const double kk = ogp::karmarkar_karp(inst).discrepancy;
    auto rng = ogp::substream(seed, 0x62617365ull, 0);  // baseline stream, off-instance
    double best = std::numeric_limits<double>::infinity();
    for (int t = 0; t < 1000; ++t) {
      ogp::SignVector s(100);
      for (int i = 0; i < 100; ++i) s.set(i, rng.next_bool());
      best = std::min(best, ogp::npp_value(inst, s));
    }
    if (kk <= 1e-3 * best) ++good;
  }
  if (good < 45) {
    ok = false;
    why = "only " + std::to_string(good) + "/50 seeds beat the baseline by 1e3";
  }

  const ogp::NppInstance small{5, 0, {8.0, 7.0, 6.0, 5.0, 4.0}};
  if (ok && ogp::karmarkar_karp(small).discrepancy != 2.0) {
    ok = false;
    why = "KK on (8,7,6,5,4) != 2";
  }
  if (ok && ogp::npp_optimum(small).first != 0.0) {
    ok = false;
    why = "optimum on (8,7,6,5,4) != 0";
  }
  report(ok, "criterion 4: KK beats best-of-1000 random partitions 1000x; differencing gap on (8,7,6,5,4)", why);
}

// --------------------------------------------------------------------------
// 5. Greedy clique lands near log2(n); the exact solver matches brute force.

void criterion5() {
  bool ok = true;
  std::string why;

  std::vector<int> order(2048);
  std::iota(order.begin(), order.end(), 0);
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = ogp::gen_gnp(2048, 0.5, seed);
    const int size = ogp::greedy_clique(g, order).count();
    if (size >= 8 && size <= 14) ++good;
  }
  if (good < 90) {
    ok = false;
    why = "greedy size in [8,14] for only " + std::to_string(good) + "/100 seeds";
  }

  for (std::uint64_t seed = 0; ok && seed < 50; ++seed) {
    const auto g = ogp::gen_gnp(16, 0.5, seed);
    const int exact = ogp::exact_max_clique(g).count();
    int brute = 0;
    for (std::uint32_t mask = 1; mask < (1u << 16); ++mask) {
      const int pop = std::popcount(mask);
      if (pop <= brute) continue;
      ogp::NodeSubset s(16);
      for (int i = 0; i < 16; ++i)
        if (mask & (1u << i)) s.set(i, true);
      if (ogp::is_clique(g, s)) brute = pop;
    }
    if (exact != brute) {
      ok = false;
      why = "exact_max_clique mismatch at seed " + std::to_string(seed);
    }
  }
  report(ok, "criterion 5: greedy clique near log2(n) at n=2048; exact solver equals brute force", why);
}

// --------------------------------------------------------------------------
// 6. The 3-SAT satisfiable fraction crosses 1/2 inside [3.9, 4.8] at n = 50.
// Runs the CLI sweep (one worker); criterion 11 reuses the captured bytes.

void criterion6() {
  bool ok = true;
  std::string why;

  g_sat_w1 = g_tmp / "sweep_sat_w1.csv";
  const int rc = run_cli("sweep sat --k 3 --n 50 --alpha 3.0:5.5:0.5 --seeds 0..99", g_sat_w1, 1);
  g_sat_w1_ok = (rc == 0);
  if (!g_sat_w1_ok) {
    report(false, "criterion 6: 3-SAT satisfiable fraction crosses 1/2 inside [3.9, 4.8]",
           "sweep exited with code " + std::to_string(rc));
    return;
  }

  std::map<double, std::pair<int, int>> counts;  // alpha -> (sat, total)
  std::istringstream in(slurp(g_sat_w1));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("alpha,", 0) == 0) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) {
      ok = false;
      why = "unexpected row: " + line;
      break;
    }
    auto& c = counts[std::stod(f[0])];
    c.first += (f[5] == "1");
    c.second += 1;
  }

  std::vector<std::pair<double, double>> fr;
  for (const auto& [alpha, c] : counts) {
    if (c.second != 100) {
      ok = false;
      why = "expected 100 seeds per alpha";
    }
    fr.emplace_back(alpha, static_cast<double>(c.first) / static_cast<double>(c.second));
  }
  if (ok && fr.size() != 6) {
    ok = false;
    why = "expected 6 alpha cells, got " + std::to_string(fr.size());
  }

  auto frac_at = [&](double a) {
    for (const auto& [alpha, f] : fr)
      if (std::abs(alpha - a) < 1e-9) return f;
    return -1.0;
  };
  if (ok && frac_at(3.5) < 0.9) {
    ok = false;
    why = "f(3.5) = " + std::to_string(frac_at(3.5));
  }
  if (ok && frac_at(5.5) > 0.1) {
    ok = false;
    why = "f(5.5) = " + std::to_string(frac_at(5.5));
  }

  if (ok) {
    double cross = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i + 1 < fr.size(); ++i) {
      const auto [a0, f0] = fr[i];
      const auto [a1, f1] = fr[i + 1];
      if (f0 >= 0.5 && f1 < 0.5) {
        cross = a0 + (f0 - 0.5) / (f0 - f1) * (a1 - a0);
        break;
      }
    }
    if (!(cross >= 3.9 && cross <= 4.8)) {
      ok = false;
      why = "half-satisfiable crossing at " + std::to_string(cross);
    }
  }
  report(ok, "criterion 6: 3-SAT satisfiable fraction crosses 1/2 inside [3.9, 4.8]", why);
}

// --------------------------------------------------------------------------
// 7. Near-optimal NPP spectra: the band just below 1.0 is empty and the gap
// detector pins the hole against 1.0 (attained by mirror pairs).

void criterion7() {
  int good = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = ogp::gen_npp(24, seed);
    const auto set = ogp::enumerate_npp(inst, 0.75, 20000);
    const auto expanded = ogp::expand_sign_orbit(set);
    if (expanded.size() < 2) continue;
    const auto spec = ogp::build_spectrum(expanded, ogp::SpectrumMode::overlap, true);
    bool window_clear = true;
    for (const auto& e : spec.entries)
      if (e.value > 0.83 && e.value < 0.99) window_clear = false;
    const auto gap = ogp::detect_gap(spec, 0.15, 0.5);
    if (window_clear && gap.present && gap.nu2 == 1.0) ++good;
  }
  report(good >= 18, "criterion 7: NPP near-1.0 overlap band empty and gapped at n=24, alpha=0.75",
         good >= 18 ? "" : "only " + std::to_string(good) + "/20 seeds");
}

// --------------------------------------------------------------------------
// 8. Perceptron solution sets decompose into (almost only) singleton clusters.

void criterion8() {
  std::vector<double> fracs;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = ogp::gen_perceptron(22, 8, 0.3 * std::sqrt(22.0), seed);
    const auto set = ogp::enumerate_perceptron(inst, 2000000);
    fracs.push_back(ogp::cluster_decompose(set, 1).singleton_fraction);
  }
  std::sort(fracs.begin(), fracs.end());
  const double median = 0.5 * (fracs[9] + fracs[10]);
  report(median >= 0.8, "criterion 8: perceptron r=1 clusters are singletons (median fraction >= 0.8)",
         median >= 0.8 ? "" : "median " + std::to_string(median));
}

// --------------------------------------------------------------------------
// 9. Interpolation-path contracts at 200 seeds per path type: at(0) is the
// base draw, steps change at most one coordinate, endpoint marginals match
// the model law (4 sigma), endpoints decorrelate (3 sigma), and re-
// materialization is bit-identical.

bool check9_npp(std::string& why) {
  std::vector<double> base_vals, final_vals;
  for (std::uint64_t s = 0; s < 200; ++s) {
    ogp::NppPath path(32, s, 10000 + s);
    ogp::NppInstance prev = path.at(0);
    if (!(prev == ogp::gen_npp(32, s))) {
      why = "npp: at(0) differs from the base draw";
      return false;
    }
    for (int t = 1; t <= 32; ++t) {
      const ogp::NppInstance cur = path.at(t);
      int diff = 0;
      for (int i = 0; i < 32; ++i)
        if (cur.weights[static_cast<std::size_t>(i)] != prev.weights[static_cast<std::size_t>(i)])
          ++diff;
      if (diff > 1) {
        why = "npp: step changed " + std::to_string(diff) + " coordinates";
        return false;
      }
      prev = cur;
    }
    ogp::NppPath again(32, s, 10000 + s);
    if (!(path.at(16) == again.at(16))) {
      why = "npp: re-materialization differs";
      return false;
    }
    const auto base = path.at(0);
    const auto last = path.at(32);
    for (int i = 0; i < 32; ++i) {
      base_vals.push_back(base.weights[static_cast<std::size_t>(i)]);
      final_vals.push_back(last.weights[static_cast<std::size_t>(i)]);
    }
  }
  double mean, var;
  moments(final_vals, mean, var);
  const double k = static_cast<double>(final_vals.size());
  if (std::abs(mean) > 4.0 / std::sqrt(k) || std::abs(var - 1.0) > 4.0 * std::sqrt(2.0 / k)) {
    why = "npp: endpoint marginal off (mean " + std::to_string(mean) + ", var " +
          std::to_string(var) + ")";
    return false;
  }
  const double r = correlation(base_vals, final_vals);
  if (std::abs(r) > 3.0 / std::sqrt(k)) {
    why = "npp: endpoint correlation " + std::to_string(r);
    return false;
  }
  return true;
}

bool check9_graph(std::string& why) {
  std::vector<double> base_vals, final_vals;
  for (std::uint64_t s = 0; s < 200; ++s) {
    ogp::GraphPath path(12, 0.5, s, 20000 + s);
    ogp::GraphInstance prev = path.at(0);
    if (!(prev == ogp::gen_gnp(12, 0.5, s))) {
      why = "graph: at(0) differs from the base draw";
      return false;
    }
    const long long T = path.length();
    for (long long t = 1; t <= T; ++t) {
      const ogp::GraphInstance cur = path.at(t);
      int diff = 0;
      for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j)
          if (cur.has_edge(i, j) != prev.has_edge(i, j)) ++diff;
      if (diff > 1) {
        why = "graph: step changed " + std::to_string(diff) + " edges";
        return false;
      }
      prev = cur;
    }
    ogp::GraphPath again(12, 0.5, s, 20000 + s);
    if (!(path.at(T / 2) == again.at(T / 2))) {
      why = "graph: re-materialization differs";
      return false;
    }
    const auto base = path.at(0);
    const auto last = path.at(T);
    for (int i = 0; i < 12; ++i)
      for (int j = i + 1; j < 12; ++j) {
        base_vals.push_back(base.has_edge(i, j) ? 1.0 : 0.0);
        final_vals.push_back(last.has_edge(i, j) ? 1.0 : 0.0);
      }
  }
  double mean, var;
  moments(final_vals, mean, var);
  const double k = static_cast<double>(final_vals.size());
  if (std::abs(mean - 0.5) > 4.0 * 0.5 / std::sqrt(k)) {
    why = "graph: endpoint edge fraction " + std::to_string(mean);
    return false;
  }
  const double r = correlation(base_vals, final_vals);
  if (std::abs(r) > 3.0 / std::sqrt(k)) {
    why = "graph: endpoint correlation " + std::to_string(r);
    return false;
  }
  return true;
}

bool check9_ksat(std::string& why) {
  long long pos_lits = 0, total_lits = 0, equal_clauses = 0, total_clauses = 0;
  std::vector<long long> var_count(10, 0);
  for (std::uint64_t s = 0; s < 200; ++s) {
    ogp::KsatPath path(10, 30, 3, s, 30000 + s);
    ogp::KsatInstance prev = path.at(0);
    if (!(prev == ogp::gen_ksat(10, 30, 3, s))) {
      why = "ksat: at(0) differs from the base draw";
      return false;
    }
    for (int t = 1; t <= 30; ++t) {
      const ogp::KsatInstance cur = path.at(t);
      int diff = 0;
      for (int c = 0; c < 30; ++c)
        if (cur.clauses[static_cast<std::size_t>(c)] != prev.clauses[static_cast<std::size_t>(c)])
          ++diff;
      if (diff > 1) {
        why = "ksat: step changed " + std::to_string(diff) + " clauses";
        return false;
      }
      prev = cur;
    }
    ogp::KsatPath again(10, 30, 3, s, 30000 + s);
    if (!(path.at(15) == again.at(15))) {
      why = "ksat: re-materialization differs";
      return false;
    }
    const auto base = path.at(0);
    const auto last = path.at(30);
    for (int c = 0; c < 30; ++c) {
      ++total_clauses;
      if (base.clauses[static_cast<std::size_t>(c)] == last.clauses[static_cast<std::size_t>(c)])
        ++equal_clauses;
      for (int lit : last.clauses[static_cast<std::size_t>(c)]) {
        ++total_lits;
        if (lit > 0) ++pos_lits;
        ++var_count[static_cast<std::size_t>(std::abs(lit) - 1)];
      }
    }
  }
  const double frac = static_cast<double>(pos_lits) / static_cast<double>(total_lits);
  if (std::abs(frac - 0.5) > 4.0 * 0.5 / std::sqrt(static_cast<double>(total_lits))) {
    why = "ksat: endpoint positive-literal fraction " + std::to_string(frac);
    return false;
  }
  // Each variable lands in a clause w.p. 3/10: Binomial(6000, 0.3) per slot.
  const double vmean = static_cast<double>(total_clauses) * 0.3;
  const double vsd = std::sqrt(static_cast<double>(total_clauses) * 0.3 * 0.7);
  for (int v = 0; v < 10; ++v) {
    if (std::abs(static_cast<double>(var_count[static_cast<std::size_t>(v)]) - vmean) > 4.0 * vsd) {
      why = "ksat: variable " + std::to_string(v) + " occurs " +
            std::to_string(var_count[static_cast<std::size_t>(v)]) + " times";
      return false;
    }
  }
  // Clause-at-c equality across endpoints: ordered k-tuples with signs give a
  // match probability of 1/5760, about one expected hit in 6000 slots.
  if (equal_clauses > 6) {
    why = "ksat: " + std::to_string(equal_clauses) + " endpoint clauses identical";
    return false;
  }
  return true;
}

bool check9_pspin(std::string& why) {
  std::vector<double> base_vals, final_vals;
  for (std::uint64_t s = 0; s < 200; ++s) {
    ogp::PSpinPath path(6, 2, s, 40000 + s);
    ogp::PSpinInstance prev = path.at(0);
    if (!(prev == ogp::gen_pspin(6, 2, s))) {
      why = "pspin: at(0) differs from the base draw";
      return false;
    }
    const long long T = path.length();
    for (long long t = 1; t <= T; ++t) {
      const ogp::PSpinInstance cur = path.at(t);
      int diff = 0;
      for (std::size_t i = 0; i < cur.couplings.size(); ++i)
        if (cur.couplings[i] != prev.couplings[i]) ++diff;
      if (diff > 1) {
        why = "pspin: step changed " + std::to_string(diff) + " couplings";
        return false;
      }
      prev = cur;
    }
    ogp::PSpinPath again(6, 2, s, 40000 + s);
    if (!(path.at(T / 2) == again.at(T / 2))) {
      why = "pspin: re-materialization differs";
      return false;
    }
    const auto base = path.at(0);
    const auto last = path.at(T);
    for (std::size_t i = 0; i < base.couplings.size(); ++i) {
      base_vals.push_back(base.couplings[i]);
      final_vals.push_back(last.couplings[i]);
    }
  }
  double mean, var;
  moments(final_vals, mean, var);
  const double k = static_cast<double>(final_vals.size());
  if (std::abs(mean) > 4.0 / std::sqrt(k) || std::abs(var - 1.0) > 4.0 * std::sqrt(2.0 / k)) {
    why = "pspin: endpoint marginal off (mean " + std::to_string(mean) + ", var " +
          std::to_string(var) + ")";
    return false;
  }
  const double r = correlation(base_vals, final_vals);
  if (std::abs(r) > 3.0 / std::sqrt(k)) {
    why = "pspin: endpoint correlation " + std::to_string(r);
    return false;
  }
  return true;
}

void criterion9() {
  std::string why;
  const bool ok = check9_npp(why) && check9_graph(why) && check9_ksat(why) && check9_pspin(why);
  report(ok, "criterion 9: path contracts (base, single-coordinate steps, marginals, decorrelation, determinism)", why);
}

// --------------------------------------------------------------------------
// 10. Jump inequality: when the union spectrum of an always-optimal
// algorithm's trace has an empty overlap interval (nu1, nu2) and the endpoint
// lands below it, the largest single step must span the interval's width in
// Hamming units, kappa >= n (nu2 - nu1) / 2.

void criterion10() {
  int o0_bad = 0, jump_bad = 0, fired = 0;
  double ot_sum = 0.0;
  const int n = 14;
  for (std::uint64_t s = 0; s < 60; ++s) {
    ogp::NppPath path(n, 100 + s, 7000 + s);
    auto algo = [](const ogp::NppInstance& inst) {
      return std::optional<ogp::SignVector>(ogp::npp_optimum(inst).second);
    };
    auto obj = [](const ogp::NppInstance& inst, const ogp::SignVector& sol) {
      return ogp::npp_value(inst, sol);
    };
    const auto trace = ogp::stability_run(path, algo, obj, 1);

    if (!trace.overlap_to_start.front().has_value() || *trace.overlap_to_start.front() != 1.0)
      ++o0_bad;
    const double ot = std::abs(*trace.overlap_to_start.back());
    ot_sum += ot;

    ogp::SignSolutionSet uni;
    uni.model = "npp";
    uni.dimension = n;
    uni.threshold = std::numeric_limits<double>::infinity();
    std::set<ogp::SignVector> seen;
    for (std::size_t i = 0; i < trace.outputs.size(); ++i)
      if (trace.outputs[i].has_value() && seen.insert(*trace.outputs[i]).second)
        uni.add(*trace.outputs[i], trace.objectives[i]);
    if (uni.size() < 2) continue;

    const auto spec = ogp::build_spectrum(uni, ogp::SpectrumMode::overlap, true);
    const auto gap = ogp::detect_gap(spec, 0.15, 0.0);
    if (gap.present && ot <= gap.nu1 + 1e-12) {
      ++fired;
      if (static_cast<double>(trace.kappa_hat) + 1e-9 < n * (gap.nu2 - gap.nu1) / 2.0) ++jump_bad;
    }
  }
  const double ot_mean = ot_sum / 60.0;
  bool ok = true;
  std::string why;
  if (o0_bad > 0) {
    ok = false;
    why = "o_0 != 1 on " + std::to_string(o0_bad) + " seeds";
  } else if (jump_bad > 0) {
    ok = false;
    why = std::to_string(jump_bad) + " jump-inequality violations";
  } else if (fired < 1) {
    ok = false;
    why = "gap-plus-crossing never fired (vacuous)";
  } else if (ot_mean > 0.5) {
    ok = false;
    why = "mean |o_T| = " + std::to_string(ot_mean);
  }
  report(ok, "criterion 10: stability jump inequality along weight paths (fired " +
                 std::to_string(fired) + "/60)",
         why);
}

// --------------------------------------------------------------------------
// 11. CLI determinism: the documented example invocations, run at one and at
// eight workers, emit byte-identical output; spot-check their content and the
// validation/guard exit codes.

void criterion11() {
  bool ok = true;
  std::string why;

  auto fail = [&](const std::string& m) {
    if (ok) {
      ok = false;
      why = m;
    }
  };

  // theory example: rho* column constant near 0.163.
  const fs::path th1 = g_tmp / "theory_w1.csv", th8 = g_tmp / "theory_w8.csv";
  const std::string theory_args = "theory --clique-curve --alpha 1.72 --grid 0.01";
  if (run_cli(theory_args, th1, 1) != 0 || run_cli(theory_args, th8, 8) != 0)
    fail("theory example exited nonzero");
  const std::string th = slurp(th1);
  if (ok && (th.empty() || th != slurp(th8))) fail("theory output differs across worker counts");
  if (ok) {
    std::istringstream in(th);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line.rfind("rho,", 0) == 0) continue;
      const auto f = split(line, ',');
      if (f.size() != 5 || std::abs(std::stod(f[3]) - 0.163) > 5e-4) {
        fail("bad rho_star row: " + line);
        break;
      }
      ++rows;
    }
    if (ok && rows != 101) fail("expected 101 curve rows, got " + std::to_string(rows));
  }

  // solve kk example: discrepancy exactly 2.
  const fs::path kk1 = g_tmp / "kk_w1.json", kk8 = g_tmp / "kk_w8.json";
  const std::string kk_args = "solve kk --n 5 --weights 8,7,6,5,4";
  if (run_cli(kk_args, kk1, 1) != 0 || run_cli(kk_args, kk8, 8) != 0)
    fail("solve kk example exited nonzero");
  const std::string kk = slurp(kk1);
  if (ok && (kk.empty() || kk != slurp(kk8))) fail("solve kk output differs across worker counts");
  if (ok) {
    const auto doc = nlohmann::json::parse(kk, nullptr, false);
    if (doc.is_discarded() || doc["discrepancy"].get<double>() != 2.0)
      fail("solve kk discrepancy != 2");
  }

  // sweep example: compare against the one-worker bytes captured by criterion 6.
  if (!g_sat_w1_ok) fail("sweep example unavailable (criterion 6 run failed)");
  if (ok) {
    const fs::path sat8 = g_tmp / "sweep_sat_w8.csv";
    if (run_cli("sweep sat --k 3 --n 50 --alpha 3.0:5.5:0.5 --seeds 0..99", sat8, 8) != 0)
      fail("sweep example exited nonzero at 8 workers");
    const std::string a = slurp(g_sat_w1);
    if (ok && (a.empty() || a != slurp(sat8))) fail("sweep output differs across worker counts");
  }

  // Exit-code contract: validation errors return 2, size-guard refusals 3.
  if (ok && run_cli("gen npp --n 0", g_tmp / "bad1.out", 1) != 2)
    fail("validation error did not exit 2");
  if (ok && run_cli("gen graph --n 8193", g_tmp / "bad2.out", 1) != 3)
    fail("guard refusal did not exit 3");

  report(ok, "criterion 11: CLI examples byte-identical at 1 vs 8 workers; exit codes honored", why);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cout << "[FAIL] usage: acceptance <path-to-ogplab>\n";
    return 1;
  }
  g_cli = argv[1];
  g_tmp = fs::absolute("acceptance_tmp");
  std::error_code ec;
  fs::remove_all(g_tmp, ec);
  fs::create_directories(g_tmp);

  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();

  if (g_failures == 0) {
    std::cout << "acceptance: all 11 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria failed\n";
  return 1;
}
