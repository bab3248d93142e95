#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <type_traits>
#include <vector>

#include "ogp/bits.hpp"
#include "ogp/models.hpp"
#include "ogp/rng.hpp"
#include "ogp/spectrum.hpp"

namespace ogp {

// Correlated-instance interpolation paths. A path of length T visits each of
// the instance's T coordinates exactly once, in a uniformly random order
// driven by order_seed; step t redraws coordinate pi(t) from its marginal
// law using substream(seed, coordinate, epoch). Consequences, by
// construction:
//   * xi_0 is exactly the base instance gen_*(params, seed);
//   * xi_t and xi_{t+1} differ in at most one coordinate;
//   * xi_T is independent of xi_0 (every coordinate redrawn once);
//   * any xi_t materializes in O(#coordinates) work with no chain replay,
//     and two materializations of the same t are bit-identical.
// The epoch parameter keys the resample values: branches of an m-fork use
// epochs 1..m (and their own order seeds) so branch endpoints are mutually
// independent while sharing xi_0.
//
// For the Gaussian models an alternative step rule is available: "rotate"
// moves every coordinate along cos(theta_t) * base + sin(theta_t) * alt with
// theta_t = (pi/2) * t / T, where alt is the same per-coordinate substream
// draw the resample rule would use. It preserves the N(0,1) marginal and
// shares endpoints with the resample rule, but trades the one-coordinate-
// per-step contract for continuity.

enum class StepRule { resample, rotate };

class NppPath {
 public:
  NppPath(int n, std::uint64_t seed, std::uint64_t order_seed,
          StepRule rule = StepRule::resample, std::uint64_t epoch = 1);

  int length() const { return n_; }  // T = n
  int coordinate_at(int step) const;  // pi(step), resample rule
  NppInstance at(int t) const;

 private:
  int n_;
  std::uint64_t seed_, order_seed_, epoch_;
  StepRule rule_;
  std::vector<int> order_;
};

class GraphPath {
 public:
  GraphPath(int n, double p, std::uint64_t seed, std::uint64_t order_seed,
            std::uint64_t epoch = 1);

  long long length() const { return static_cast<long long>(n_) * (n_ - 1) / 2; }
  long long coordinate_at(long long step) const;  // pair rank
  GraphInstance at(long long t) const;

 private:
  int n_;
  double p_;
  std::uint64_t seed_, order_seed_, epoch_;
  std::vector<long long> order_;
};

class KsatPath {
 public:
  KsatPath(int n, int m, int k, std::uint64_t seed, std::uint64_t order_seed,
           std::uint64_t epoch = 1);

  int length() const { return m_; }  // T = m: one clause replaced per step
  int coordinate_at(int step) const;
  KsatInstance at(int t) const;

 private:
  int n_, m_, k_;
  std::uint64_t seed_, order_seed_, epoch_;
  std::vector<int> order_;
};

class PSpinPath {
 public:
  PSpinPath(int n, int p, std::uint64_t seed, std::uint64_t order_seed,
            StepRule rule = StepRule::resample, std::uint64_t epoch = 1);

  long long length() const { return total_; }  // T = n^p
  long long coordinate_at(long long step) const;
  PSpinInstance at(long long t) const;

 private:
  int n_, p_;
  long long total_;
  std::uint64_t seed_, order_seed_, epoch_;
  StepRule rule_;
  std::vector<long long> order_;
};

// --------------------------------------------------------------------------
// Stability harness. Evaluates algo on xi_t for t = 0, stride, 2*stride, ...
// plus T itself, recording outputs, objectives, Hamming step distances
// between consecutive evaluated outputs, and the overlap of each output with
// the t = 0 output (sign overlap for sign vectors, normalized intersection
// for node subsets). A failed algorithm run (nullopt) is recorded in-trace;
// distances and overlaps touching it are absent, never fatal.

template <class Sol>
struct StabilityTrace {
  std::vector<long long> ts;
  std::vector<std::optional<Sol>> outputs;
  std::vector<double> objectives;  // NaN where the run failed
  std::vector<std::optional<int>> step_dists;        // size ts.size()-1
  std::vector<std::optional<double>> overlap_to_start;  // aligned with ts
  int kappa_hat = 0;  // max defined step distance (the empirical stability)
  bool all_ok = true;
};

namespace detail {

inline double start_overlap(const SignVector& a, const SignVector& b) {
  return overlap(a, b).value;
}
inline double start_overlap(const NodeSubset& a, const NodeSubset& b) {
  return normalized_intersection(a, b);
}

}  // namespace detail

// Algo: (const Instance&) -> std::optional<Sol>; Obj: (const Instance&, const
// Sol&) -> double. The algorithm must make its own determinism arrangements
// (fixed internal seed / node order): the harness calls it once per evaluated
// t with no hidden state.
template <class Path, class Algo, class Obj>
auto stability_run(const Path& path, Algo&& algo, Obj&& objective, long long stride) {
  using Instance = decltype(path.at(0));
  using SolOpt = std::invoke_result_t<Algo&, const Instance&>;
  using Sol = typename SolOpt::value_type;

  if (stride < 1) throw std::invalid_argument("stability_run: stride must be >= 1");
  const long long T = static_cast<long long>(path.length());

  StabilityTrace<Sol> trace;
  for (long long t = 0; t < T; t += stride) trace.ts.push_back(t);
  trace.ts.push_back(T);  // always evaluate the endpoint; T = 0 gives just {0}

  for (long long t : trace.ts) {
    const Instance inst = path.at(t);
    std::optional<Sol> out = algo(inst);
    if (out.has_value()) {
      trace.objectives.push_back(objective(inst, *out));
    } else {
      trace.objectives.push_back(std::numeric_limits<double>::quiet_NaN());
      trace.all_ok = false;
    }
    trace.outputs.push_back(std::move(out));
  }

  for (std::size_t i = 0; i + 1 < trace.outputs.size(); ++i) {
    if (trace.outputs[i].has_value() && trace.outputs[i + 1].has_value()) {
      const int d = hamming(*trace.outputs[i], *trace.outputs[i + 1]);
      trace.step_dists.push_back(d);
      trace.kappa_hat = std::max(trace.kappa_hat, d);
    } else {
      trace.step_dists.push_back(std::nullopt);
    }
  }
  for (std::size_t i = 0; i < trace.outputs.size(); ++i) {
    if (trace.outputs.front().has_value() && trace.outputs[i].has_value())
      trace.overlap_to_start.push_back(
          detail::start_overlap(*trace.outputs.front(), *trace.outputs[i]));
    else
      trace.overlap_to_start.push_back(std::nullopt);
  }
  return trace;
}

// Does the trace's largest step jump at least the given forbidden width
// (in Hamming-distance units)?
template <class Sol>
bool trace_crosses_gap(const StabilityTrace<Sol>& trace, double forbidden_width) {
  return static_cast<double>(trace.kappa_hat) >= forbidden_width;
}

// --------------------------------------------------------------------------
// Chaos probe: enumerate mu-near ground states of a p-spin instance and of a
// partner whose couplings agree except for a resampled fraction, then report
// the cross-instance overlap spectrum (global-sign quotiented for even p,
// where +-sigma are energy-equivalent). resample_fraction 0 reproduces the
// identical set (the cross spectrum attains 1.0); fraction 1 gives an
// independent partner.

struct ChaosReport {
  int n = 0;
  int p = 0;
  double resample_fraction = 0.0;
  double mu = 0.0;
  double ground_a = 0.0;
  double ground_b = 0.0;
  std::size_t set_a = 0;
  std::size_t set_b = 0;
  bool truncated = false;
  double mean_cross = 0.0;  // mean of the (quotiented) cross-overlap values
  OverlapSpectrum cross;    // entry (i, j) = pair (A_i, B_j); sorted by value
};

inline constexpr int kChaosMaxN = 22;

ChaosReport chaos_probe(int n, int p, std::uint64_t seed, double resample_fraction, double mu,
                        std::size_t cap = 4096, int max_n = kChaosMaxN);

// The mu-near-ground-state set {sigma : H(sigma) <= min H + mu} by full scan
// (Gray-code incremental for p = 2). Exposed for tests and the CLI.
SignSolutionSet enumerate_pspin_near_ground(const PSpinInstance& inst, double mu, std::size_t cap,
                                            int max_n = kChaosMaxN);

// The correlated partner: `fraction` of the n^p entries (rounded count,
// chosen by a seed-keyed partial shuffle) redrawn from their per-coordinate
// substreams (epoch 1, shared with PSpinPath).
PSpinInstance resample_pspin_fraction(const PSpinInstance& base, double fraction);

}  // namespace ogp
