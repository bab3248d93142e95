#include "ogp/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ogp {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void guard(bool ok, const std::string& msg) {
  if (!ok) throw guard_error(msg);
}

double exact_npp_sum(const NppInstance& inst, const SignVector& s) {
  double sum = 0.0;
  for (int i = 0; i < inst.n; ++i)
    sum += s.test(i) ? inst.weights[static_cast<std::size_t>(i)]
                     : -inst.weights[static_cast<std::size_t>(i)];
  return sum;
}

// Walks the canonical half-space s_0 = +1 in Gray-code order (candidate t
// flips coordinate ctz(t)+1 of its predecessor), maintaining the signed sum
// incrementally and calling visit(s, sum) for each of the 2^(n-1) candidates.
// The incremental sum drifts by at most ~1e-12 over the longest scans here;
// callers re-sum exactly before acting on near-threshold values, and the sum
// is refreshed periodically to keep the drift bound local.
template <class Visit>
void gray_scan_canonical(const NppInstance& inst, Visit&& visit) {
  const int n = inst.n;
  SignVector s = SignVector::ones(n);
  double sum = exact_npp_sum(inst, s);
  const std::uint64_t total = 1ull << (n - 1);
  for (std::uint64_t t = 0;; ++t) {
    visit(s, sum);
    if (t + 1 == total) break;
    const int c = std::countr_zero(t + 1) + 1;  // coordinate 0 stays pinned
    const double w = inst.weights[static_cast<std::size_t>(c)];
    sum += s.test(c) ? -2.0 * w : 2.0 * w;
    s.flip(c);
    if (((t + 1) & 0xFFFFFull) == 0) sum = exact_npp_sum(inst, s);  // drift refresh
  }
}

}  // namespace

double npp_threshold(int n, double alpha) {
  require(n >= 1, "npp_threshold: n must be >= 1");
  require(alpha >= 0.0, "npp_threshold: alpha must be >= 0");
  return std::sqrt(static_cast<double>(n)) * std::exp2(-alpha * n);
}

SignSolutionSet enumerate_npp(const NppInstance& inst, double alpha, std::size_t cap,
                              int max_n) {
  require(cap >= 1, "enumerate_npp: cap must be >= 1");
  guard(inst.n <= max_n && inst.n <= kNppEnumMaxN,
        "enumerate_npp: n = " + std::to_string(inst.n) + " exceeds enumeration guard " +
            std::to_string(std::min(max_n, kNppEnumMaxN)));
  const double threshold = npp_threshold(inst.n, alpha);

  SignSolutionSet set;
  set.model = "npp";
  set.dimension = inst.n;
  set.threshold = threshold;

  // Admit on the exactly re-summed value; the incremental sum only screens.
  const double screen = threshold + 1e-9;
  gray_scan_canonical(inst, [&](const SignVector& s, double sum) {
    if (set.truncated || std::abs(sum) > screen) return;
    const double exact = std::abs(exact_npp_sum(inst, s));
    if (exact > threshold) return;
    if (set.size() == cap) {
      set.truncated = true;
      return;
    }
    set.add(s, exact);
  });
  set.sort_canonical();
  return set;
}

std::pair<double, SignVector> npp_optimum(const NppInstance& inst, int max_n) {
  guard(inst.n <= max_n && inst.n <= kNppEnumMaxN,
        "npp_optimum: n = " + std::to_string(inst.n) + " exceeds enumeration guard " +
            std::to_string(std::min(max_n, kNppEnumMaxN)));
  double best = std::numeric_limits<double>::infinity();
  SignVector arg(inst.n);
  gray_scan_canonical(inst, [&](const SignVector& s, double sum) {
    if (std::abs(sum) > best + 1e-9) return;
    const double exact = std::abs(exact_npp_sum(inst, s));
    if (exact < best || (exact == best && s < arg)) {
      best = exact;
      arg = s;
    }
  });
  return {best, arg};
}

SignSolutionSet expand_sign_orbit(const SignSolutionSet& set) {
  SignSolutionSet out = set;
  out.entries.reserve(set.entries.size() * 2);
  for (const auto& e : set.entries) {
    require(e.config.size() > 0 && e.config.test(0),
            "expand_sign_orbit: input must be canonical (s_0 = +1)");
    SignVector mirrored = e.config;
    mirrored.flip_all();
    out.entries.push_back({std::move(mirrored), e.value});
  }
  out.sort_canonical();
  return out;
}

// --------------------------------------------------------------------------
// Cliques. Everything below works on single-word adjacency masks (n <= 64).

namespace {

struct CliqueSearch {
  int n = 0;
  std::vector<std::uint64_t> adj;
  std::uint64_t best = 0;
  int best_size = 0;

  // Greedy coloring bound: partition P into independent classes; a clique
  // uses at most one node per class. Nodes are emitted class by class in
  // ascending index order, so iterating the list backwards visits the
  // highest bounds first.
  void color_sort(std::uint64_t p, std::vector<std::pair<int, int>>& order) const {
    order.clear();
    int color = 0;
    while (p != 0) {
      ++color;
      std::uint64_t candidates = p;
      while (candidates != 0) {
        const int v = std::countr_zero(candidates);
        order.emplace_back(v, color);
        p &= ~(1ull << v);
        candidates &= ~(1ull << v);
        candidates &= ~adj[static_cast<std::size_t>(v)];
      }
    }
  }

  void expand(std::uint64_t p, std::uint64_t r, int rsize) {
    std::vector<std::pair<int, int>> order;
    color_sort(p, order);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      const auto [v, bound] = order[idx];
      if (rsize + bound <= best_size) return;  // colors only shrink below here
      const std::uint64_t bit = 1ull << v;
      const std::uint64_t next = p & adj[static_cast<std::size_t>(v)];
      if (rsize + 1 > best_size) {
        best = r | bit;
        best_size = rsize + 1;
      }
      if (next != 0) expand(next, r | bit, rsize + 1);
      p &= ~bit;
    }
  }
};

}  // namespace

NodeSubset exact_max_clique(const GraphInstance& g, int max_n) {
  require(g.n >= 1, "exact_max_clique: empty graph instance");
  guard(g.n <= max_n && g.n <= kCliqueEnumMaxN,
        "exact_max_clique: n = " + std::to_string(g.n) + " exceeds guard " +
            std::to_string(std::min(max_n, kCliqueEnumMaxN)));
  CliqueSearch search;
  search.n = g.n;
  search.adj.reserve(static_cast<std::size_t>(g.n));
  for (const auto& row : g.adj) search.adj.push_back(row.word(0));
  const std::uint64_t all = (g.n == 64) ? ~0ull : ((1ull << g.n) - 1);
  search.expand(all, 0, 0);

  NodeSubset clique(g.n);
  for (int v = 0; v < g.n; ++v)
    if ((search.best >> v) & 1u) clique.set(v, true);
  return clique;
}

NodeSolutionSet enumerate_cliques(const GraphInstance& g, int kmin, std::size_t cap, int max_n) {
  require(kmin >= 1, "enumerate_cliques: kmin must be >= 1");
  require(cap >= 1, "enumerate_cliques: cap must be >= 1");
  guard(g.n <= max_n && g.n <= kCliqueEnumMaxN,
        "enumerate_cliques: n = " + std::to_string(g.n) + " exceeds guard " +
            std::to_string(std::min(max_n, kCliqueEnumMaxN)));

  NodeSolutionSet set;
  set.model = "clique";
  set.dimension = g.n;
  set.threshold = -static_cast<double>(kmin);

  std::vector<std::uint64_t> adj;
  adj.reserve(static_cast<std::size_t>(g.n));
  for (const auto& row : g.adj) adj.push_back(row.word(0));

  auto emit = [&](std::uint64_t members, int size) {
    if (set.size() == cap) {
      set.truncated = true;
      return false;
    }
    NodeSubset c(g.n);
    for (int v = 0; v < g.n; ++v)
      if ((members >> v) & 1u) c.set(v, true);
    set.add(std::move(c), -static_cast<double>(size));
    return true;
  };

  // Extend strictly upward in node order: each clique is emitted exactly once
  // as its sorted member sequence. `ext` holds common neighbors above the
  // last member.
  auto rec = [&](auto&& self, std::uint64_t members, int size, std::uint64_t ext) -> bool {
    if (size >= kmin && !emit(members, size)) return false;
    while (ext != 0) {
      const int v = std::countr_zero(ext);
      const std::uint64_t bit = 1ull << v;
      ext &= ~bit;
      const std::uint64_t above = (v + 1 >= 64) ? 0ull : (~0ull << (v + 1));
      if (!self(self, members | bit, size + 1, ext & adj[static_cast<std::size_t>(v)] & above))
        return false;
    }
    return true;
  };
  const std::uint64_t all = (g.n == 64) ? ~0ull : ((1ull << g.n) - 1);
  rec(rec, 0ull, 0, all);
  set.sort_canonical();
  return set;
}

// --------------------------------------------------------------------------
// k-SAT machinery shared by DPLL and the exhaustive scan: per-clause counters
// (true literals, unassigned literals) kept consistent through assign/undo
// via occurrence lists.

namespace {

struct SatState {
  const KsatInstance* f = nullptr;
  std::vector<int> assign;                // 0 unassigned, +1 true, -1 false
  std::vector<int> true_lits;             // per clause
  std::vector<int> free_lits;             // per clause
  std::vector<std::vector<int>> occ;      // var -> clause indices
  int satisfied_clauses = 0;

  explicit SatState(const KsatInstance& inst)
      : f(&inst),
        assign(static_cast<std::size_t>(inst.n), 0),
        true_lits(static_cast<std::size_t>(inst.m), 0),
        free_lits(static_cast<std::size_t>(inst.m), 0),
        occ(static_cast<std::size_t>(inst.n)) {
    for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
      free_lits[c] = static_cast<int>(inst.clauses[c].size());
      for (int lit : inst.clauses[c]) occ[static_cast<std::size_t>(std::abs(lit) - 1)].push_back(static_cast<int>(c));
    }
  }

  // Applies var := value; returns false on an emptied clause (conflict).
  bool set_var(int var, int value) {
    assign[static_cast<std::size_t>(var)] = value;
    bool ok = true;
    for (int c : occ[static_cast<std::size_t>(var)]) {
      const auto cz = static_cast<std::size_t>(c);
      --free_lits[cz];
      if (literal_true(c, var)) {
        if (++true_lits[cz] == 1) ++satisfied_clauses;
      } else if (true_lits[cz] == 0 && free_lits[cz] == 0) {
        ok = false;  // keep counters consistent; caller will undo
      }
    }
    return ok;
  }

  void unset_var(int var) {
    for (int c : occ[static_cast<std::size_t>(var)]) {
      const auto cz = static_cast<std::size_t>(c);
      ++free_lits[cz];
      if (literal_true(c, var)) {
        if (--true_lits[cz] == 0) --satisfied_clauses;
      }
    }
    assign[static_cast<std::size_t>(var)] = 0;
  }

  bool literal_true(int clause, int var) const {
    for (int lit : f->clauses[static_cast<std::size_t>(clause)])
      if (std::abs(lit) - 1 == var) return assign[static_cast<std::size_t>(var)] == (lit > 0 ? +1 : -1);
    return false;
  }

  bool all_satisfied() const { return satisfied_clauses == f->m; }

  SignVector witness() const {
    SignVector s(f->n);
    for (int v = 0; v < f->n; ++v) s.set(v, assign[static_cast<std::size_t>(v)] >= 0);
    return s;  // unassigned variables default to +1
  }
};

struct DpllSearch {
  SatState state;
  long long decisions = 0;

  explicit DpllSearch(const KsatInstance& f) : state(f) {}

  // Propagate all unit clauses; records assignments on the trail. Returns
  // false on conflict.
  bool propagate(std::vector<int>& trail) {
    bool progressed = true;
    while (progressed) {
      progressed = false;
      for (std::size_t c = 0; c < state.f->clauses.size(); ++c) {
        if (state.true_lits[c] > 0) continue;
        if (state.free_lits[c] == 0) return false;
        if (state.free_lits[c] != 1) continue;
        for (int lit : state.f->clauses[c]) {
          const int var = std::abs(lit) - 1;
          if (state.assign[static_cast<std::size_t>(var)] != 0) continue;
          trail.push_back(var);
          if (!state.set_var(var, lit > 0 ? +1 : -1)) return false;
          progressed = true;
          break;
        }
      }
    }
    return true;
  }

  int pick_branch_var() const {
    std::vector<int> freq(static_cast<std::size_t>(state.f->n), 0);
    for (std::size_t c = 0; c < state.f->clauses.size(); ++c) {
      if (state.true_lits[c] > 0) continue;
      for (int lit : state.f->clauses[c]) {
        const int var = std::abs(lit) - 1;
        if (state.assign[static_cast<std::size_t>(var)] == 0) ++freq[static_cast<std::size_t>(var)];
      }
    }
    int best = -1;
    for (int v = 0; v < state.f->n; ++v)
      if (freq[static_cast<std::size_t>(v)] > 0 && (best == -1 || freq[static_cast<std::size_t>(v)] > freq[static_cast<std::size_t>(best)]))
        best = v;
    return best;
  }

  bool solve(std::optional<SignVector>& witness) {
    std::vector<int> trail;
    if (!propagate(trail)) {
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) state.unset_var(*it);
      return false;
    }
    if (state.all_satisfied()) {
      witness = state.witness();
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) state.unset_var(*it);
      return true;
    }
    const int var = pick_branch_var();
    if (var == -1) {
      // No free variable touches an unsatisfied clause and not everything is
      // satisfied: some clause is empty; propagate would have caught it.
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) state.unset_var(*it);
      return false;
    }
    ++decisions;
    for (int value : {+1, -1}) {  // true branch first
      const bool consistent = state.set_var(var, value);
      if (consistent && solve(witness)) {
        state.unset_var(var);
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) state.unset_var(*it);
        return true;
      }
      state.unset_var(var);
    }
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) state.unset_var(*it);
    return false;
  }
};

}  // namespace

DpllResult dpll_sat(const KsatInstance& f) {
  DpllResult result;
  if (f.m == 0) {
    result.satisfiable = true;
    result.witness = SignVector::ones(f.n);
    return result;
  }
  DpllSearch search(f);
  result.satisfiable = search.solve(result.witness);
  result.decisions = search.decisions;
  return result;
}

SignSolutionSet enumerate_sat(const KsatInstance& f, std::size_t cap, int max_n) {
  require(cap >= 1, "enumerate_sat: cap must be >= 1");
  guard(f.n <= max_n && f.n <= kSatEnumMaxN,
        "enumerate_sat: n = " + std::to_string(f.n) + " exceeds enumeration guard " +
            std::to_string(std::min(max_n, kSatEnumMaxN)));

  SignSolutionSet set;
  set.model = "ksat";
  set.dimension = f.n;
  set.threshold = 0.0;  // value = violation count, admitted only at zero

  SatState state(f);
  // DFS in variable order, +1 branch first, pruning emptied clauses.
  auto rec = [&](auto&& self, int var) -> bool {
    if (var == f.n) {
      if (set.size() == cap) {
        set.truncated = true;
        return false;
      }
      set.add(state.witness(), 0.0);
      return true;
    }
    for (int value : {+1, -1}) {
      const bool consistent = state.set_var(var, value);
      if (consistent) {
        if (!self(self, var + 1)) {
          state.unset_var(var);
          return false;
        }
      }
      state.unset_var(var);
    }
    return true;
  };
  rec(rec, 0);
  set.sort_canonical();
  return set;
}

SignSolutionSet enumerate_perceptron(const PerceptronInstance& inst, std::size_t cap, int max_n) {
  require(cap >= 1, "enumerate_perceptron: cap must be >= 1");
  guard(inst.n <= max_n && inst.n <= kSatEnumMaxN,
        "enumerate_perceptron: n = " + std::to_string(inst.n) + " exceeds enumeration guard " +
            std::to_string(std::min(max_n, kSatEnumMaxN)));

  SignSolutionSet set;
  set.model = "perceptron";
  set.dimension = inst.n;
  set.threshold = inst.kappa;

  // suffix_abs[r][d] = sum_{j >= d} |X_rj|: the most a partial row sum can
  // still move. A prefix dies when some |partial_r| cannot return to the
  // feasible band.
  const std::size_t m = static_cast<std::size_t>(inst.m);
  const std::size_t n = static_cast<std::size_t>(inst.n);
  std::vector<std::vector<double>> suffix_abs(m, std::vector<double>(n + 1, 0.0));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t d = n; d-- > 0;)
      suffix_abs[r][d] = suffix_abs[r][d + 1] + std::abs(inst.entry(static_cast<int>(r), static_cast<int>(d)));

  std::vector<double> partial(m, 0.0);
  SignVector s(inst.n);

  auto rec = [&](auto&& self, int var) -> bool {
    for (std::size_t r = 0; r < m; ++r)
      if (std::abs(partial[r]) - suffix_abs[r][static_cast<std::size_t>(var)] > inst.kappa)
        return true;  // prune this prefix, keep scanning siblings
    if (var == inst.n) {
      double margin = 0.0;
      for (std::size_t r = 0; r < m; ++r) margin = std::max(margin, std::abs(partial[r]));
      if (margin <= inst.kappa) {
        if (set.size() == cap) {
          set.truncated = true;
          return false;
        }
        set.add(s, margin);
      }
      return true;
    }
    for (int value : {+1, -1}) {  // +1 branch first
      s.set(var, value > 0);
      for (std::size_t r = 0; r < m; ++r)
        partial[r] += value * inst.entry(static_cast<int>(r), var);
      const bool keep_going = self(self, var + 1);
      for (std::size_t r = 0; r < m; ++r)
        partial[r] -= value * inst.entry(static_cast<int>(r), var);
      if (!keep_going) return false;
    }
    s.set(var, true);
    return true;
  };
  rec(rec, 0);
  set.sort_canonical();
  return set;
}

}  // namespace ogp
