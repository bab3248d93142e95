#pragma once

#include <vector>

#include "ogp/bits.hpp"
#include "ogp/models.hpp"
#include "ogp/rng.hpp"

namespace ogp {

// --------------------------------------------------------------------------
// Karmarkar-Karp differencing.
//
// Runs on the magnitudes |X_i|; the reconstructed signs are mapped back
// through sign(X_i), so the reported discrepancy always equals
// npp_value(inst, partition). Nodes 0..n-1 are the leaves; merge t pops the
// two largest values (ties: lower node id first) and appends node n+t with
// their difference. Two-coloring the merge tree (root +, larger child keeps
// the parent sign, smaller child opposes) yields the partition.

struct KkMerge {
  int larger = 0;   // node id that keeps the merged node's sign
  int smaller = 0;  // node id that gets the opposite sign
  double difference = 0.0;
};

struct KkTrace {
  std::vector<KkMerge> merges;  // n-1 merges; merge t created node n+t
  double discrepancy = 0.0;
  SignVector partition;  // one representative of the optimal-by-KK sign orbit
};

KkTrace karmarkar_karp(const NppInstance& inst);

// --------------------------------------------------------------------------
// Greedy clique: scan nodes in the given order, keep each node adjacent to
// everything kept so far. The result is maximal: any skipped node conflicted
// with a subset of the final clique. `order` must be a permutation of 0..n-1.

NodeSubset greedy_clique(const GraphInstance& g, const std::vector<int>& order);

std::vector<int> identity_order(int n);
// Fisher-Yates shuffle of 0..n-1 (i from n-1 down to 1, j = next_below(i+1)).
std::vector<int> random_order(int n, RngStream& rng);

// --------------------------------------------------------------------------
// WalkSAT with a noise parameter. Draw order is part of the contract so a
// seed-paired run reproduces the flip trace exactly:
//   1. n next_bool() draws for the initial assignment (bit i = coordinate i),
//   2. per iteration: one next_below(#violated) to pick a violated clause,
//      one next_double() noise coin, and -- on the noise branch only -- one
//      next_below(k) to pick the flipped position. The greedy branch flips a
//      minimum-break variable, ties to the lowest variable index, no draws.
// Failure to satisfy within max_flips is a normal outcome, not an error.

struct WalksatResult {
  bool satisfied = false;
  SignVector assignment;       // satisfying iff satisfied, else final state
  long long flips = 0;
  std::vector<int> flip_trace;  // flipped variable indices, in order
};

WalksatResult walksat(const KsatInstance& f, long long max_flips, double noise, RngStream& rng);

}  // namespace ogp
