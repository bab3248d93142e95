#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ogp/bits.hpp"
#include "ogp/errors.hpp"
#include "ogp/models.hpp"
#include "ogp/rng.hpp"
#include "ogp/spectrum.hpp"

namespace ogp {

// Exhaustive ground-truth oracles. Every oracle is deterministic, guarded by
// a hard size cap (guard_error on refusal), and caps output size explicitly
// (`truncated` flag on the returned set; truncation keeps the first `cap`
// solutions in the documented visit order, and the surviving entries are then
// sorted canonically by bit pattern).

inline constexpr int kNppEnumMaxN = 32;
inline constexpr int kCliqueEnumMaxN = 64;
inline constexpr int kSatEnumMaxN = 28;

// --------------------------------------------------------------------------
// Number partitioning.
//
// mu-optimal solutions at rate alpha: |<s, X>| <= sqrt(n) * 2^(-alpha * n).
// The scan covers the canonical half-space s_0 = +1 (one representative per
// global-sign orbit) in Gray-code order with an incrementally maintained sum;
// candidates near the threshold are re-summed exactly before admission.
double npp_threshold(int n, double alpha);
SignSolutionSet enumerate_npp(const NppInstance& inst, double alpha, std::size_t cap,
                              int max_n = kNppEnumMaxN);

// True optimum c* and its canonical argmin (s_0 = +1; ties by bit pattern).
std::pair<double, SignVector> npp_optimum(const NppInstance& inst, int max_n = kNppEnumMaxN);

// Doubles a canonical set (every s_0 = +1) with the global-sign mirror of
// each solution. NPP objectives are sign-symmetric, so values carry over; the
// quotiented spectrum of the expanded set attains 1.0 on (sigma, -sigma)
// pairs, which is what the near-1.0 gap reports are measured against.
SignSolutionSet expand_sign_orbit(const SignSolutionSet& set);

// --------------------------------------------------------------------------
// Cliques (n <= 64: single-word candidate sets).
//
// exact_max_clique: branch and bound with a greedy-coloring upper bound.
// enumerate_cliques: every clique of size >= kmin exactly once, extending in
// increasing node order. Sets store value = -size with threshold = -kmin so
// the SolutionSet admission invariant reads "at least kmin nodes".
NodeSubset exact_max_clique(const GraphInstance& g, int max_n = kCliqueEnumMaxN);
NodeSolutionSet enumerate_cliques(const GraphInstance& g, int kmin, std::size_t cap,
                                  int max_n = kCliqueEnumMaxN);

// --------------------------------------------------------------------------
// k-SAT.
//
// dpll_sat: complete solver; unit propagation plus branching on the variable
// occurring most often in currently unsatisfied clauses (ties: lowest index),
// true branch first. Variables still free when all clauses are satisfied are
// set to +1 in the witness.
struct DpllResult {
  bool satisfiable = false;
  std::optional<SignVector> witness;
  long long decisions = 0;
};
DpllResult dpll_sat(const KsatInstance& f);

// Exhaustive satisfying-assignment scan with clause-violation pruning.
// DFS assigns variable 0, 1, ... with the +1 branch first.
SignSolutionSet enumerate_sat(const KsatInstance& f, std::size_t cap, int max_n = kSatEnumMaxN);

// Exhaustive scan for |<row_r, sigma>| <= kappa for all r, pruning a prefix
// when some row can no longer return inside [-kappa, kappa]. Stored value is
// the margin max_r |<row_r, sigma>| with threshold kappa.
SignSolutionSet enumerate_perceptron(const PerceptronInstance& inst, std::size_t cap,
                                     int max_n = kSatEnumMaxN);

// --------------------------------------------------------------------------
// Cluster decomposition: connected components of the graph on solutions with
// edges between pairs at Hamming distance <= r. Output is canonical (members
// sorted by bit pattern, clusters sorted by their smallest member), so it is
// invariant under permutations of the input set.
template <class Sol>
struct ClusterDecomposition {
  int radius = 0;
  std::vector<std::vector<std::uint32_t>> clusters;  // indices into the input set
  std::vector<std::size_t> sizes;                    // aligned with clusters
  double singleton_fraction = 0.0;                   // |size-1 clusters| / |clusters|
};

template <class Sol>
ClusterDecomposition<Sol> cluster_decompose(const SolutionSet<Sol>& set, int radius) {
  if (radius < 0) throw std::invalid_argument("cluster_decompose: radius must be >= 0");
  const std::size_t k = set.size();
  ClusterDecomposition<Sol> out;
  out.radius = radius;
  if (k == 0) return out;

  std::vector<std::uint32_t> parent(k);
  for (std::size_t i = 0; i < k; ++i) parent[i] = static_cast<std::uint32_t>(i);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (hamming(set.entries[i].config, set.entries[j].config) <= radius) {
        const auto ri = find(static_cast<std::uint32_t>(i));
        const auto rj = find(static_cast<std::uint32_t>(j));
        if (ri != rj) parent[rj] = ri;
      }

  // Group members by root, order members by bit pattern, order clusters by
  // their smallest member's bit pattern.
  std::vector<std::vector<std::uint32_t>> by_root(k);
  for (std::size_t i = 0; i < k; ++i)
    by_root[find(static_cast<std::uint32_t>(i))].push_back(static_cast<std::uint32_t>(i));
  for (auto& members : by_root) {
    if (members.empty()) continue;
    std::sort(members.begin(), members.end(), [&](std::uint32_t a, std::uint32_t b) {
      return set.entries[a].config < set.entries[b].config;
    });
    out.clusters.push_back(std::move(members));
  }
  std::sort(out.clusters.begin(), out.clusters.end(),
            [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
              return set.entries[a.front()].config < set.entries[b.front()].config;
            });

  std::size_t singletons = 0;
  for (const auto& c : out.clusters) {
    out.sizes.push_back(c.size());
    if (c.size() == 1) ++singletons;
  }
  out.singleton_fraction =
      static_cast<double>(singletons) / static_cast<double>(out.clusters.size());
  return out;
}

// --------------------------------------------------------------------------
// m-tuple search: is there one solution from each of the m sets such that all
// m(m-1)/2 pairwise overlaps lie strictly inside (nu1, nu2)? Finding one
// refutes the forbidden region for this ensemble; an exhaustive "not found"
// certifies it; running out of budget is reported as inconclusive, never
// as a certificate.
enum class TupleSearchMode { exhaustive, randomized };

struct TupleSearchReport {
  int m = 0;
  double nu1 = 0.0;
  double nu2 = 0.0;
  bool found = false;
  bool exhaustive = false;     // full product scanned: "not found" is a certificate
  bool inconclusive = false;   // budget / sample limit hit without certificate
  std::vector<std::uint32_t> witness;      // one index per set when found
  std::vector<double> witness_overlaps;    // pairwise values of the witness tuple
  unsigned long long pair_evaluations = 0;
};

namespace detail {

template <class Sol>
double tuple_pair_value(const SolutionSet<Sol>& sa, std::uint32_t ia, const SolutionSet<Sol>& sb,
                        std::uint32_t ib, bool quotient_sign) {
  if constexpr (std::is_same_v<Sol, SignVector>) {
    const double rho = overlap(sa.entries[ia].config, sb.entries[ib].config).value;
    return quotient_sign ? std::abs(rho) : rho;
  } else {
    (void)quotient_sign;
    return normalized_intersection(sa.entries[ia].config, sb.entries[ib].config);
  }
}

}  // namespace detail

template <class Sol>
TupleSearchReport tuple_gap_search(const std::vector<SolutionSet<Sol>>& sets, int m, double nu1,
                                   double nu2, TupleSearchMode mode = TupleSearchMode::exhaustive,
                                   unsigned long long budget = 100'000'000ull,
                                   unsigned long long samples = 0, RngStream* rng = nullptr,
                                   bool quotient_sign = false) {
  if (m < 2) throw std::invalid_argument("tuple_gap_search: m must be >= 2");
  if (static_cast<int>(sets.size()) != m)
    throw std::invalid_argument("tuple_gap_search: expected m solution sets");
  if (!(nu1 < nu2)) throw std::invalid_argument("tuple_gap_search: need nu1 < nu2");

  TupleSearchReport rep;
  rep.m = m;
  rep.nu1 = nu1;
  rep.nu2 = nu2;

  auto inside = [&](double v) { return v > nu1 && v < nu2; };

  if (mode == TupleSearchMode::randomized) {
    if (rng == nullptr)
      throw std::invalid_argument("tuple_gap_search: randomized mode needs an RngStream");
    for (const auto& s : sets)
      if (s.size() == 0) {
        rep.exhaustive = true;  // empty product: vacuously certified
        return rep;
      }
    std::vector<std::uint32_t> pick(static_cast<std::size_t>(m));
    for (unsigned long long trial = 0; trial < samples; ++trial) {
      for (int a = 0; a < m; ++a)
        pick[static_cast<std::size_t>(a)] =
            static_cast<std::uint32_t>(rng->next_below(sets[static_cast<std::size_t>(a)].size()));
      bool ok = true;
      for (int a = 0; a < m && ok; ++a)
        for (int b = a + 1; b < m && ok; ++b) {
          ++rep.pair_evaluations;
          ok = inside(detail::tuple_pair_value(sets[static_cast<std::size_t>(a)],
                                               pick[static_cast<std::size_t>(a)],
                                               sets[static_cast<std::size_t>(b)],
                                               pick[static_cast<std::size_t>(b)], quotient_sign));
        }
      if (ok) {
        rep.found = true;
        rep.witness = pick;
        break;
      }
    }
    if (!rep.found) rep.inconclusive = true;  // sampling never certifies absence
  } else {
    // DFS over the product, pruning a partial tuple at its first bad pair.
    std::vector<std::uint32_t> pick(static_cast<std::size_t>(m), 0);
    bool budget_hit = false;
    auto rec = [&](auto&& self, int depth) -> bool {
      if (depth == m) {
        rep.found = true;
        rep.witness = pick;
        return true;
      }
      const auto& set = sets[static_cast<std::size_t>(depth)];
      for (std::uint32_t i = 0; i < set.size(); ++i) {
        pick[static_cast<std::size_t>(depth)] = i;
        bool ok = true;
        for (int a = 0; a < depth && ok; ++a) {
          if (rep.pair_evaluations >= budget) {
            budget_hit = true;
            return true;  // abort the scan; outcome below is inconclusive
          }
          ++rep.pair_evaluations;
          ok = inside(detail::tuple_pair_value(sets[static_cast<std::size_t>(a)],
                                               pick[static_cast<std::size_t>(a)], set, i,
                                               quotient_sign));
        }
        if (ok && self(self, depth + 1)) return true;
      }
      return false;
    };
    rec(rec, 0);
    if (budget_hit && !rep.found)
      rep.inconclusive = true;
    else
      rep.exhaustive = !budget_hit;
  }

  if (rep.found) {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        rep.witness_overlaps.push_back(detail::tuple_pair_value(
            sets[static_cast<std::size_t>(a)], rep.witness[static_cast<std::size_t>(a)],
            sets[static_cast<std::size_t>(b)], rep.witness[static_cast<std::size_t>(b)],
            quotient_sign));
  }
  return rep;
}

}  // namespace ogp
