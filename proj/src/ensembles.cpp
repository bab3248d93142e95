#include "ogp/ensembles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ogp/errors.hpp"

namespace ogp {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Uniform random permutation of 0..count-1 via Fisher-Yates on the order
// seed's own stream; order_[step] is the coordinate redrawn at step `step`.
template <class Int>
std::vector<Int> coordinate_order(long long count, std::uint64_t order_seed) {
  std::vector<Int> order(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) order[static_cast<std::size_t>(i)] = static_cast<Int>(i);
  RngStream rng(order_seed);
  for (long long i = count - 1; i >= 1; --i) {
    const long long j =
        static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  return order;
}

double resample_gaussian(std::uint64_t seed, std::uint64_t coordinate, std::uint64_t epoch) {
  RngStream s = substream(seed, coordinate, epoch);
  return s.next_gaussian();
}

bool resample_bernoulli(std::uint64_t seed, std::uint64_t coordinate, std::uint64_t epoch,
                        double p) {
  RngStream s = substream(seed, coordinate, epoch);
  return s.next_double() < p;
}

void check_t(long long t, long long T) {
  if (t < 0 || t > T)
    throw std::invalid_argument("interpolation path: t = " + std::to_string(t) +
                                " outside [0, " + std::to_string(T) + "]");
}

}  // namespace

// --------------------------------------------------------------------------
// NppPath

NppPath::NppPath(int n, std::uint64_t seed, std::uint64_t order_seed, StepRule rule,
                 std::uint64_t epoch)
    : n_(n), seed_(seed), order_seed_(order_seed), epoch_(epoch), rule_(rule) {
  require(n >= 1, "NppPath: n must be >= 1");
  order_ = coordinate_order<int>(n, order_seed);
}

int NppPath::coordinate_at(int step) const {
  check_t(step, n_ - 1);
  return order_[static_cast<std::size_t>(step)];
}

NppInstance NppPath::at(int t) const {
  check_t(t, n_);
  NppInstance inst = gen_npp(n_, seed_);
  if (rule_ == StepRule::resample) {
    for (int s = 0; s < t; ++s) {
      const int c = order_[static_cast<std::size_t>(s)];
      inst.weights[static_cast<std::size_t>(c)] =
          resample_gaussian(seed_, static_cast<std::uint64_t>(c), epoch_);
    }
  } else {
    const double theta = (n_ > 0) ? (kPi / 2.0) * static_cast<double>(t) / n_ : 0.0;
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    for (int c = 0; c < n_; ++c) {
      const double alt = resample_gaussian(seed_, static_cast<std::uint64_t>(c), epoch_);
      inst.weights[static_cast<std::size_t>(c)] =
          ct * inst.weights[static_cast<std::size_t>(c)] + st * alt;
    }
    // Endpoints are shared with the resample rule: theta = pi/2 lands exactly
    // on the substream draws (cos = 6.1e-17 leaves a negligible residue, so
    // pin it).
    if (t == n_) {
      for (int c = 0; c < n_; ++c)
        inst.weights[static_cast<std::size_t>(c)] =
            resample_gaussian(seed_, static_cast<std::uint64_t>(c), epoch_);
    }
  }
  return inst;
}

// --------------------------------------------------------------------------
// GraphPath

GraphPath::GraphPath(int n, double p, std::uint64_t seed, std::uint64_t order_seed,
                     std::uint64_t epoch)
    : n_(n), p_(p), seed_(seed), order_seed_(order_seed), epoch_(epoch) {
  require(n >= 1, "GraphPath: n must be >= 1");
  require(p >= 0.0 && p <= 1.0, "GraphPath: p must be in [0, 1]");
  order_ = coordinate_order<long long>(length(), order_seed);
}

long long GraphPath::coordinate_at(long long step) const {
  check_t(step, length() - 1);
  return order_[static_cast<std::size_t>(step)];
}

GraphInstance GraphPath::at(long long t) const {
  check_t(t, length());
  GraphInstance g = gen_gnp(n_, p_, seed_);
  for (long long s = 0; s < t; ++s) {
    const long long rank = order_[static_cast<std::size_t>(s)];
    const auto [i, j] = pair_unrank(n_, rank);
    const bool edge =
        resample_bernoulli(seed_, static_cast<std::uint64_t>(rank), epoch_, p_);
    g.adj[static_cast<std::size_t>(i)].set(j, edge);
    g.adj[static_cast<std::size_t>(j)].set(i, edge);
  }
  return g;
}

// --------------------------------------------------------------------------
// KsatPath

KsatPath::KsatPath(int n, int m, int k, std::uint64_t seed, std::uint64_t order_seed,
                   std::uint64_t epoch)
    : n_(n), m_(m), k_(k), seed_(seed), order_seed_(order_seed), epoch_(epoch) {
  require(n >= 1 && m >= 0 && k >= 1 && k <= n, "KsatPath: invalid dimensions");
  order_ = coordinate_order<int>(m, order_seed);
}

int KsatPath::coordinate_at(int step) const {
  check_t(step, m_ - 1);
  return order_[static_cast<std::size_t>(step)];
}

KsatInstance KsatPath::at(int t) const {
  check_t(t, m_);
  KsatInstance f = gen_ksat(n_, m_, k_, seed_);
  for (int s = 0; s < t; ++s) {
    const int c = order_[static_cast<std::size_t>(s)];
    RngStream stream = substream(seed_, static_cast<std::uint64_t>(c), epoch_);
    f.clauses[static_cast<std::size_t>(c)] = draw_clause(stream, n_, k_);
  }
  return f;
}

// --------------------------------------------------------------------------
// PSpinPath

PSpinPath::PSpinPath(int n, int p, std::uint64_t seed, std::uint64_t order_seed, StepRule rule,
                     std::uint64_t epoch)
    : n_(n), p_(p), seed_(seed), order_seed_(order_seed), epoch_(epoch), rule_(rule) {
  total_ = pspin_entry_count(n, p);
  order_ = coordinate_order<long long>(total_, order_seed);
}

long long PSpinPath::coordinate_at(long long step) const {
  check_t(step, total_ - 1);
  return order_[static_cast<std::size_t>(step)];
}

PSpinInstance PSpinPath::at(long long t) const {
  check_t(t, total_);
  PSpinInstance inst = gen_pspin(n_, p_, seed_);
  if (rule_ == StepRule::resample) {
    for (long long s = 0; s < t; ++s) {
      const long long c = order_[static_cast<std::size_t>(s)];
      inst.couplings[static_cast<std::size_t>(c)] =
          resample_gaussian(seed_, static_cast<std::uint64_t>(c), epoch_);
    }
  } else {
    const double theta = (kPi / 2.0) * static_cast<double>(t) / static_cast<double>(total_);
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    for (long long c = 0; c < total_; ++c) {
      const double alt = resample_gaussian(seed_, static_cast<std::uint64_t>(c), epoch_);
      inst.couplings[static_cast<std::size_t>(c)] =
          ct * inst.couplings[static_cast<std::size_t>(c)] + st * alt;
    }
    if (t == total_) {
      for (long long c = 0; c < total_; ++c)
        inst.couplings[static_cast<std::size_t>(c)] =
            resample_gaussian(seed_, static_cast<std::uint64_t>(c), epoch_);
    }
  }
  return inst;
}

// --------------------------------------------------------------------------
// Chaos probe

SignSolutionSet enumerate_pspin_near_ground(const PSpinInstance& inst, double mu, std::size_t cap,
                                            int max_n) {
  require(mu >= 0.0, "enumerate_pspin_near_ground: mu must be >= 0");
  require(cap >= 1, "enumerate_pspin_near_ground: cap must be >= 1");
  if (inst.n > max_n || inst.n > kChaosMaxN)
    throw guard_error("enumerate_pspin_near_ground: n = " + std::to_string(inst.n) +
                      " exceeds guard " + std::to_string(std::min(max_n, kChaosMaxN)));
  if (inst.p != 2 && inst.n > 14)
    throw guard_error("enumerate_pspin_near_ground: full scan for p != 2 is capped at n = 14");

  const int n = inst.n;
  const std::uint64_t total = 1ull << n;

  std::vector<float> energy_store;  // two-pass scan; float keeps 2^22 x 4 bytes
  const bool p2 = (inst.p == 2);

  // Pass 1: exact minimum. For p = 2 walk Gray code keeping the local fields
  // g_k = sum_j (J_kj + J_jk) sigma_j so each flip is O(n); re-evaluate
  // exactly whenever a value lands near the running minimum.
  double ground = std::numeric_limits<double>::infinity();
  SignVector cur = SignVector::ones(n);
  if (p2) {
    const std::size_t nz = static_cast<std::size_t>(n);
    std::vector<double> sym(nz * nz);
    for (std::size_t i = 0; i < nz; ++i)
      for (std::size_t j = 0; j < nz; ++j)
        sym[i * nz + j] = inst.couplings[i * nz + j] + inst.couplings[j * nz + i];
    std::vector<double> field(nz, 0.0);
    for (std::size_t k = 0; k < nz; ++k) {
      double f = 0.0;
      for (std::size_t j = 0; j < nz; ++j) f += sym[k * nz + j];  // all spins +1
      field[k] = f;
    }
    double e = pspin_energy(inst, cur);
    energy_store.resize(static_cast<std::size_t>(total));
    for (std::uint64_t t = 0;; ++t) {
      energy_store[static_cast<std::size_t>(t)] = static_cast<float>(e);
      // The running e accumulates rounding drift; re-evaluate exactly near
      // the running minimum so `ground` is the true optimum.
      if (e < ground + 1e-6) ground = std::min(ground, pspin_energy(inst, cur));
      if (t + 1 == total) break;
      const int k = std::countr_zero(t + 1);
      const double sk = spin(cur, k);
      // Delta H for flipping spin k: -2 sk (g_k - S_kk sk), with g via `field`.
      e += -2.0 * sk * (field[static_cast<std::size_t>(k)] -
                        sym[static_cast<std::size_t>(k) * nz + static_cast<std::size_t>(k)] * sk);
      cur.flip(k);
      const double newsk = spin(cur, k);
      for (std::size_t j = 0; j < nz; ++j)
        field[j] += sym[j * nz + static_cast<std::size_t>(k)] * (newsk - sk);
    }
  } else {
    energy_store.resize(static_cast<std::size_t>(total));
    for (std::uint64_t t = 0;; ++t) {
      const double e = pspin_energy(inst, cur);
      energy_store[static_cast<std::size_t>(t)] = static_cast<float>(e);
      ground = std::min(ground, e);
      if (t + 1 == total) break;
      cur.flip(std::countr_zero(t + 1));
    }
  }

  // Pass 2: collect sigma with H <= ground + mu, re-evaluating exactly near
  // the admission boundary (the stored float is only a screen).
  SignSolutionSet set;
  set.model = "pspin";
  set.dimension = n;
  set.threshold = ground + mu;
  const double screen = set.threshold + 1e-3;
  cur = SignVector::ones(n);
  for (std::uint64_t t = 0;; ++t) {
    if (!set.truncated && energy_store[static_cast<std::size_t>(t)] <= screen) {
      const double exact = pspin_energy(inst, cur);
      if (exact <= set.threshold) {
        if (set.size() == cap)
          set.truncated = true;
        else
          set.add(cur, exact);
      }
    }
    if (t + 1 == total) break;
    cur.flip(std::countr_zero(t + 1));
  }
  set.sort_canonical();
  return set;
}

PSpinInstance resample_pspin_fraction(const PSpinInstance& base, double fraction) {
  require(fraction >= 0.0 && fraction <= 1.0,
          "resample_pspin_fraction: fraction must be in [0, 1]");
  PSpinInstance out = base;
  const long long total = static_cast<long long>(base.couplings.size());
  const long long count = std::llround(fraction * static_cast<double>(total));
  if (count == 0) return out;
  // First `count` entries of a seed-keyed shuffle of the coordinate index
  // set; resample values share the path epoch-1 substreams.
  std::vector<long long> coords(static_cast<std::size_t>(total));
  for (long long i = 0; i < total; ++i) coords[static_cast<std::size_t>(i)] = i;
  RngStream perm = substream(base.seed, 0x43484153ull /* coordinate-choice stream */, 0);
  for (long long i = total - 1; i >= 1; --i) {
    const long long j = static_cast<long long>(perm.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(coords[static_cast<std::size_t>(i)], coords[static_cast<std::size_t>(j)]);
  }
  for (long long s = 0; s < count; ++s) {
    const long long c = coords[static_cast<std::size_t>(s)];
    out.couplings[static_cast<std::size_t>(c)] =
        resample_gaussian(base.seed, static_cast<std::uint64_t>(c), 1);
  }
  return out;
}

ChaosReport chaos_probe(int n, int p, std::uint64_t seed, double resample_fraction, double mu,
                        std::size_t cap, int max_n) {
  const PSpinInstance base = gen_pspin(n, p, seed);
  const PSpinInstance partner = resample_pspin_fraction(base, resample_fraction);

  const SignSolutionSet set_a = enumerate_pspin_near_ground(base, mu, cap, max_n);
  const SignSolutionSet set_b = enumerate_pspin_near_ground(partner, mu, cap, max_n);

  ChaosReport rep;
  rep.n = n;
  rep.p = p;
  rep.resample_fraction = resample_fraction;
  rep.mu = mu;
  rep.ground_a = set_a.threshold - mu;
  rep.ground_b = set_b.threshold - mu;
  rep.set_a = set_a.size();
  rep.set_b = set_b.size();
  rep.truncated = set_a.truncated || set_b.truncated;

  // Even p has the global sign symmetry H(sigma) = H(-sigma); quotient the
  // cross overlaps there, keep the sign for odd p.
  const bool quotient = (p % 2 == 0);
  rep.cross.mode = SpectrumMode::overlap;
  rep.cross.quotiented = quotient;
  rep.cross.dimension = n;
  rep.cross.threshold = std::max(set_a.threshold, set_b.threshold);
  rep.cross.model = "pspin-cross";
  rep.cross.singleton = set_a.size() == 0 || set_b.size() == 0;

  double sum = 0.0;
  for (std::uint32_t i = 0; i < set_a.size(); ++i)
    for (std::uint32_t j = 0; j < set_b.size(); ++j) {
      double rho = overlap(set_a.entries[i].config, set_b.entries[j].config).value;
      if (quotient) rho = std::abs(rho);
      rep.cross.entries.push_back(SpectrumEntry{rho, i, j});
      sum += rho;
    }
  std::sort(rep.cross.entries.begin(), rep.cross.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              if (a.value != b.value) return a.value < b.value;
              if (a.i != b.i) return a.i < b.i;
              return a.j < b.j;
            });
  rep.mean_cross = rep.cross.entries.empty()
                       ? std::numeric_limits<double>::quiet_NaN()
                       : sum / static_cast<double>(rep.cross.entries.size());
  return rep;
}

}  // namespace ogp
