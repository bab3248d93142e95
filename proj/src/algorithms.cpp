#include "ogp/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

namespace ogp {

namespace {

struct KkNode {
  double value = 0.0;
  int id = 0;
};

// Max-heap order: larger value first; on ties the lower id is popped first so
// integer-weight runs are reproducible.
struct KkNodeLess {
  bool operator()(const KkNode& a, const KkNode& b) const {
    if (a.value != b.value) return a.value < b.value;
    return a.id > b.id;
  }
};

}  // namespace

KkTrace karmarkar_karp(const NppInstance& inst) {
  const int n = inst.n;
  if (n < 1) throw std::invalid_argument("karmarkar_karp: empty instance");

  std::priority_queue<KkNode, std::vector<KkNode>, KkNodeLess> heap;
  for (int i = 0; i < n; ++i)
    heap.push(KkNode{std::abs(inst.weights[static_cast<std::size_t>(i)]), i});

  KkTrace trace;
  trace.merges.reserve(static_cast<std::size_t>(n - 1));
  for (int t = 0; t < n - 1; ++t) {
    const KkNode u = heap.top();
    heap.pop();
    const KkNode v = heap.top();
    heap.pop();
    trace.merges.push_back(KkMerge{u.id, v.id, u.value - v.value});
    heap.push(KkNode{u.value - v.value, n + t});
  }
  trace.discrepancy = heap.top().value;

  // Two-color the merge tree: the surviving node is +, each merge's larger
  // element inherits its merged node's sign, the smaller opposes it.
  std::vector<int> color(static_cast<std::size_t>(2 * n - 1), 0);
  color[static_cast<std::size_t>(heap.top().id)] = +1;
  for (std::size_t t = trace.merges.size(); t-- > 0;) {
    const int merged = n + static_cast<int>(t);
    const int c = color[static_cast<std::size_t>(merged)];
    color[static_cast<std::size_t>(trace.merges[t].larger)] = c;
    color[static_cast<std::size_t>(trace.merges[t].smaller)] = -c;
  }

  // Map magnitudes back to signed weights: s_i = color_i * sign(X_i).
  trace.partition = SignVector(n);
  for (int i = 0; i < n; ++i) {
    const bool negative_weight = inst.weights[static_cast<std::size_t>(i)] < 0.0;
    const int s = negative_weight ? -color[static_cast<std::size_t>(i)]
                                  : color[static_cast<std::size_t>(i)];
    trace.partition.set(i, s > 0);
  }
  return trace;
}

NodeSubset greedy_clique(const GraphInstance& g, const std::vector<int>& order) {
  const int n = g.n;
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("greedy_clique: order must be a permutation of 0.." +
                                std::to_string(n - 1));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("greedy_clique: order is not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }

  NodeSubset clique(n);
  // Nodes adjacent to every member so far; shrinks as members are added.
  NodeSubset common = NodeSubset::ones(n);
  for (int v : order) {
    if (!common.test(v)) continue;
    clique.set(v, true);
    common &= g.adj[static_cast<std::size_t>(v)];
  }
  return clique;
}

std::vector<int> identity_order(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  return order;
}

std::vector<int> random_order(int n, RngStream& rng) {
  std::vector<int> order = identity_order(n);
  for (int i = n - 1; i >= 1; --i) {
    const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  return order;
}

namespace {

bool clause_satisfied(const Clause& clause, const SignVector& s) {
  for (int lit : clause)
    if (s.test(std::abs(lit) - 1) == (lit > 0)) return true;
  return false;
}

// Number of currently satisfied clauses that flipping `var` would break:
// clauses whose only true literal is on `var`.
int break_count(const KsatInstance& f, const SignVector& s, int var) {
  int breaks = 0;
  for (const Clause& clause : f.clauses) {
    bool on_var = false;
    int true_lits = 0;
    bool var_lit_true = false;
    for (int lit : clause) {
      const int v = std::abs(lit) - 1;
      const bool lit_true = s.test(v) == (lit > 0);
      if (lit_true) ++true_lits;
      if (v == var) {
        on_var = true;
        var_lit_true = lit_true;
      }
    }
    if (on_var && var_lit_true && true_lits == 1) ++breaks;
  }
  return breaks;
}

}  // namespace

WalksatResult walksat(const KsatInstance& f, long long max_flips, double noise, RngStream& rng) {
  if (max_flips < 0) throw std::invalid_argument("walksat: max_flips must be >= 0");
  if (noise < 0.0 || noise > 1.0) throw std::invalid_argument("walksat: noise must be in [0, 1]");

  WalksatResult result;
  result.assignment = SignVector(f.n);
  for (int i = 0; i < f.n; ++i) result.assignment.set(i, rng.next_bool());

  std::vector<int> violated;
  while (true) {
    violated.clear();
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
      if (!clause_satisfied(f.clauses[c], result.assignment))
        violated.push_back(static_cast<int>(c));
    if (violated.empty()) {
      result.satisfied = true;
      return result;
    }
    if (result.flips >= max_flips) return result;  // budget exhausted: normal failure

    const Clause& clause =
        f.clauses[static_cast<std::size_t>(violated[rng.next_below(violated.size())])];
    int var;
    if (rng.next_double() < noise) {
      var = std::abs(clause[rng.next_below(clause.size())]) - 1;
    } else {
      var = -1;
      int best = -1;
      for (int lit : clause) {
        const int v = std::abs(lit) - 1;
        const int b = break_count(f, result.assignment, v);
        if (var == -1 || b < best || (b == best && v < var)) {
          var = v;
          best = b;
        }
      }
    }
    result.assignment.flip(var);
    result.flip_trace.push_back(var);
    ++result.flips;
  }
}

}  // namespace ogp
