#include "ogp/models.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ogp/errors.hpp"

namespace ogp {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void guard(bool ok, const std::string& msg) {
  if (!ok) throw guard_error(msg);
}

}  // namespace

long long GraphInstance::edge_count() const {
  long long e = 0;
  for (const auto& row : adj) e += row.count();
  return e / 2;
}

NppInstance gen_npp(int n, std::uint64_t seed) {
  require(n >= 1, "gen_npp: n must be >= 1");
  guard(n <= kNppMaxN, "gen_npp: n = " + std::to_string(n) + " exceeds cap " +
                           std::to_string(kNppMaxN));
  NppInstance inst{n, seed, {}};
  inst.weights.reserve(static_cast<std::size_t>(n));
  RngStream rng(seed);
  for (int i = 0; i < n; ++i) inst.weights.push_back(rng.next_gaussian());
  return inst;
}

GraphInstance gen_gnp(int n, double p, std::uint64_t seed) {
  require(n >= 1, "gen_gnp: n must be >= 1");
  require(p >= 0.0 && p <= 1.0, "gen_gnp: p must be in [0, 1]");
  guard(n <= kGraphMaxN, "gen_gnp: n = " + std::to_string(n) + " exceeds cap " +
                             std::to_string(kGraphMaxN));
  GraphInstance g;
  g.n = n;
  g.p = p;
  g.seed = seed;
  g.adj.assign(static_cast<std::size_t>(n), NodeSubset(n));
  RngStream rng(seed);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.next_double() < p) {
        g.adj[static_cast<std::size_t>(i)].set(j, true);
        g.adj[static_cast<std::size_t>(j)].set(i, true);
      }
    }
  }
  return g;
}

Clause draw_clause(RngStream& rng, int n, int k) {
  Clause clause;
  clause.reserve(static_cast<std::size_t>(k));
  std::vector<int> vars;
  vars.reserve(static_cast<std::size_t>(k));
  while (static_cast<int>(vars.size()) < k) {
    const int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    bool dup = false;
    for (int u : vars) dup = dup || (u == v);
    if (!dup) vars.push_back(v);
  }
  for (int v : vars) {
    const bool positive = rng.next_bool();
    clause.push_back(positive ? v + 1 : -(v + 1));
  }
  return clause;
}

KsatInstance gen_ksat(int n, int m, int k, std::uint64_t seed) {
  require(n >= 1, "gen_ksat: n must be >= 1");
  require(m >= 0, "gen_ksat: m must be >= 0");
  require(k >= 1 && k <= n, "gen_ksat: k must be in [1, n]");
  guard(n <= kKsatMaxVars, "gen_ksat: n exceeds cap " + std::to_string(kKsatMaxVars));
  guard(m <= kKsatMaxClauses, "gen_ksat: m exceeds cap " + std::to_string(kKsatMaxClauses));
  KsatInstance f;
  f.n = n;
  f.m = m;
  f.k = k;
  f.seed = seed;
  f.clauses.reserve(static_cast<std::size_t>(m));
  RngStream rng(seed);
  for (int c = 0; c < m; ++c) f.clauses.push_back(draw_clause(rng, n, k));
  return f;
}

long long pspin_entry_count(int n, int p) {
  require(n >= 1, "pspin: n must be >= 1");
  require(p >= 1, "pspin: p must be >= 1");
  long long total = 1;
  for (int i = 0; i < p; ++i) {
    guard(total <= kPspinMaxEntries / n,
          "pspin: n^p exceeds entry cap " + std::to_string(kPspinMaxEntries));
    total *= n;
  }
  return total;
}

PSpinInstance gen_pspin(int n, int p, std::uint64_t seed) {
  const long long total = pspin_entry_count(n, p);
  PSpinInstance inst;
  inst.n = n;
  inst.p = p;
  inst.seed = seed;
  inst.couplings.reserve(static_cast<std::size_t>(total));
  RngStream rng(seed);
  for (long long e = 0; e < total; ++e) inst.couplings.push_back(rng.next_gaussian());
  return inst;
}

PerceptronInstance gen_perceptron(int n, int m, double kappa, std::uint64_t seed) {
  require(n >= 1, "gen_perceptron: n must be >= 1");
  require(m >= 1, "gen_perceptron: m must be >= 1");
  require(kappa >= 0.0, "gen_perceptron: kappa must be >= 0");
  guard(static_cast<long long>(n) * m <= kPerceptronMaxEntries,
        "gen_perceptron: m*n exceeds entry cap " + std::to_string(kPerceptronMaxEntries));
  PerceptronInstance inst;
  inst.n = n;
  inst.m = m;
  inst.kappa = kappa;
  inst.seed = seed;
  inst.rows.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  RngStream rng(seed);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) inst.rows.push_back(rng.next_gaussian());
  return inst;
}

long long pair_rank(int n, int i, int j) {
  require(0 <= i && i < j && j < n, "pair_rank: need 0 <= i < j < n");
  const long long li = i;
  return li * (2 * n - li - 1) / 2 + (j - i - 1);
}

std::pair<int, int> pair_unrank(int n, long long rank) {
  require(rank >= 0 && rank < static_cast<long long>(n) * (n - 1) / 2,
          "pair_unrank: rank out of range");
  long long row_start = 0;
  for (int i = 0; i < n - 1; ++i) {
    const long long row_len = n - 1 - i;
    if (rank < row_start + row_len)
      return {i, i + 1 + static_cast<int>(rank - row_start)};
    row_start += row_len;
  }
  throw std::logic_error("pair_unrank: unreachable");
}

double npp_value(const NppInstance& inst, const SignVector& s) {
  require(s.size() == inst.n, "npp_value: dimension mismatch");
  double sum = 0.0;
  for (int i = 0; i < inst.n; ++i)
    sum += (s.test(i) ? inst.weights[static_cast<std::size_t>(i)]
                      : -inst.weights[static_cast<std::size_t>(i)]);
  return std::abs(sum);
}

bool is_clique(const GraphInstance& g, const NodeSubset& c) {
  require(c.size() == g.n, "is_clique: dimension mismatch");
  for (int i = 0; i < g.n; ++i) {
    if (!c.test(i)) continue;
    // Every other member must be a neighbor of i.
    for (std::size_t w = 0; w < c.words().size(); ++w) {
      std::uint64_t members = c.words()[w] & ~g.adj[static_cast<std::size_t>(i)].words()[w];
      if (w == (static_cast<std::size_t>(i) >> 6)) members &= ~(1ull << (i & 63));
      if (members != 0) return false;
    }
  }
  return true;
}

int ksat_violations(const KsatInstance& f, const SignVector& s) {
  require(s.size() == f.n, "ksat_violations: dimension mismatch");
  int violated = 0;
  for (const Clause& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      const int var = std::abs(lit) - 1;
      if (s.test(var) == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) ++violated;
  }
  return violated;
}

namespace {

// Accumulates sum over all ordered tuples depth-first in row-major order,
// carrying the partial spin product; one multiply per tree node.
double pspin_rec(const PSpinInstance& inst, const SignVector& s, int depth, double prod,
                 std::size_t& entry) {
  if (depth == inst.p) {
    return prod * inst.couplings[entry++];
  }
  double sum = 0.0;
  for (int i = 0; i < inst.n; ++i)
    sum += pspin_rec(inst, s, depth + 1, prod * spin(s, i), entry);
  return sum;
}

}  // namespace

double pspin_energy(const PSpinInstance& inst, const SignVector& s) {
  require(s.size() == inst.n, "pspin_energy: dimension mismatch");
  if (inst.p == 2) {
    // Quadratic fast path: sum_i s_i * <row_i, s>.
    double total = 0.0;
    const std::size_t n = static_cast<std::size_t>(inst.n);
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double v = inst.couplings[i * n + j];
        row += s.test(static_cast<int>(j)) ? v : -v;
      }
      total += s.test(static_cast<int>(i)) ? row : -row;
    }
    return total;
  }
  std::size_t entry = 0;
  return pspin_rec(inst, s, 0, 1.0, entry);
}

double perceptron_margin(const PerceptronInstance& inst, const SignVector& s) {
  require(s.size() == inst.n, "perceptron_margin: dimension mismatch");
  double worst = 0.0;
  for (int r = 0; r < inst.m; ++r) {
    double dot = 0.0;
    for (int c = 0; c < inst.n; ++c)
      dot += s.test(c) ? inst.entry(r, c) : -inst.entry(r, c);
    worst = std::max(worst, std::abs(dot));
  }
  return worst;
}

bool perceptron_feasible(const PerceptronInstance& inst, const SignVector& s) {
  return perceptron_margin(inst, s) <= inst.kappa;
}

}  // namespace ogp
