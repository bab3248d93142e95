#pragma once

#include <cstdint>
#include <vector>

#include "ogp/bits.hpp"
#include "ogp/rng.hpp"

namespace ogp {

// Random model instances. Every generator consumes a single RngStream(seed)
// in a documented coordinate order, so an instance is fully determined by
// (model, parameters, seed) and any single coordinate's base draw can be
// located by stream position. Guards on sizes throw guard_error.

// ---------------------------------------------------------------------------
// Number partitioning: n i.i.d. standard Gaussian weights.
// Draw order: weight i for i = 0..n-1 (two stream words per weight).
struct NppInstance {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<double> weights;

  friend bool operator==(const NppInstance&, const NppInstance&) = default;
};

// G(n, p): symmetric adjacency, no self-loops.
// Draw order: pairs (i, j), i < j, lexicographic; one uniform word per pair,
// edge present iff next_double() < p.
struct GraphInstance {
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::vector<NodeSubset> adj;  // adj[i].test(j) == edge {i, j}

  bool has_edge(int i, int j) const { return adj[static_cast<std::size_t>(i)].test(j); }
  long long edge_count() const;

  friend bool operator==(const GraphInstance&, const GraphInstance&) = default;
};

// Random k-SAT over n variables, m clauses. Literals are DIMACS-style ints:
// +v / -v (v >= 1) is variable v-1 positive / negated.
// Draw order per clause: k distinct variables by rejection sampling
// (next_below(n), redrawing collisions), then one sign bool per variable in
// the order the variables were drawn. Clauses are drawn independently, so
// repeated clauses can occur; variables within a clause are distinct.
using Clause = std::vector<int>;

struct KsatInstance {
  int n = 0;
  int m = 0;
  int k = 3;
  std::uint64_t seed = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const KsatInstance&, const KsatInstance&) = default;
};

// p-spin couplings: a dense order-p tensor of i.i.d. standard Gaussians,
// stored row-major over all n^p ordered index tuples.
// Draw order: entry e for e = 0..n^p-1 (two stream words per entry).
struct PSpinInstance {
  int n = 0;
  int p = 2;
  std::uint64_t seed = 0;
  std::vector<double> couplings;  // size n^p

  friend bool operator==(const PSpinInstance&, const PSpinInstance&) = default;
};

// Symmetric binary perceptron: m Gaussian constraint rows, feasibility is
// |<row_r, sigma>| <= kappa for every row.
// Draw order: rows outer, columns inner (row-major; two words per entry).
struct PerceptronInstance {
  int n = 0;
  int m = 0;
  double kappa = 0.0;
  std::uint64_t seed = 0;
  std::vector<double> rows;  // m x n row-major

  double entry(int r, int c) const {
    return rows[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(c)];
  }

  friend bool operator==(const PerceptronInstance&, const PerceptronInstance&) = default;
};

// --------------------------------------------------------------------------
// Generators.

NppInstance gen_npp(int n, std::uint64_t seed);
GraphInstance gen_gnp(int n, double p, std::uint64_t seed);
KsatInstance gen_ksat(int n, int m, int k, std::uint64_t seed);
PSpinInstance gen_pspin(int n, int p, std::uint64_t seed);
PerceptronInstance gen_perceptron(int n, int m, double kappa, std::uint64_t seed);

// One clause in the documented per-clause draw order; shared by gen_ksat and
// the clause-resampling interpolation path.
Clause draw_clause(RngStream& rng, int n, int k);

// Size guards (exceeding any is a guard_error, a refusal, not a truncation).
inline constexpr int kNppMaxN = 1 << 22;
inline constexpr int kGraphMaxN = 1 << 13;
inline constexpr int kKsatMaxVars = 1 << 20;
inline constexpr int kKsatMaxClauses = 1 << 22;
inline constexpr long long kPspinMaxEntries = 1ll << 24;
inline constexpr long long kPerceptronMaxEntries = 1ll << 24;

// Lexicographic rank of the unordered pair (i, j), i < j, among all pairs of
// [0, n); the stream word index of that pair's edge draw in gen_gnp.
long long pair_rank(int n, int i, int j);
std::pair<int, int> pair_unrank(int n, long long rank);

// n^p with overflow/guard checking.
long long pspin_entry_count(int n, int p);

// --------------------------------------------------------------------------
// Evaluators.

// |sum_i s_i X_i|, summed in index order.
double npp_value(const NppInstance& inst, const SignVector& s);

// True iff every two members are adjacent (empty and singleton sets qualify).
bool is_clique(const GraphInstance& g, const NodeSubset& c);

// Number of clauses with every literal false; +1 spins are "true".
int ksat_violations(const KsatInstance& f, const SignVector& s);

// H(sigma) = sum over all n^p ordered tuples of J[tuple] * prod sigma_i.
double pspin_energy(const PSpinInstance& inst, const SignVector& s);

// max_r |<row_r, sigma>| (each row summed in column order).
double perceptron_margin(const PerceptronInstance& inst, const SignVector& s);
bool perceptron_feasible(const PerceptronInstance& inst, const SignVector& s);

}  // namespace ogp
