#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "ogp/bits.hpp"

namespace ogp {

// A set of near-optimal solutions of one instance: every stored objective
// value is <= threshold, and no configuration appears twice. The enumeration
// oracles construct sets that satisfy both by construction; add() enforces the
// threshold and callers that merge sets can use has_duplicates() to audit.
template <class Sol>
struct SolutionSet {
  struct Entry {
    Sol config;
    double value = 0.0;
  };

  std::string model;        // "npp", "clique", "ksat", "pspin", "perceptron"
  int dimension = 0;        // n
  double threshold = 0.0;   // mu: admission bound on the objective
  bool truncated = false;   // an enumeration cap was hit
  std::vector<Entry> entries;

  std::size_t size() const noexcept { return entries.size(); }

  void add(Sol config, double value) {
    if (!(value <= threshold))
      throw std::invalid_argument("SolutionSet::add: value " + std::to_string(value) +
                                  " exceeds threshold " + std::to_string(threshold));
    if (config.size() != dimension)
      throw std::invalid_argument("SolutionSet::add: dimension mismatch");
    entries.push_back(Entry{std::move(config), value});
  }

  bool has_duplicates() const {
    std::unordered_set<Sol> seen;
    for (const auto& e : entries)
      if (!seen.insert(e.config).second) return true;
    return false;
  }

  // Canonical order: ascending bit pattern. Enumerators call this after the
  // scan so serialized sets do not depend on visit order.
  void sort_canonical() {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.config < b.config; });
  }
};

using SignSolutionSet = SolutionSet<SignVector>;
using NodeSolutionSet = SolutionSet<NodeSubset>;

enum class SpectrumMode { overlap, intersection };

struct SpectrumEntry {
  double value = 0.0;
  std::uint32_t i = 0;  // indices of the contributing pair in the source set
  std::uint32_t j = 0;
};

// All pairwise overlaps (or normalized intersections) of a solution set,
// sorted by (value, i, j). Sorting makes the multiset independent of pair
// visit order and of the worker count used to build it.
struct OverlapSpectrum {
  SpectrumMode mode = SpectrumMode::overlap;
  bool quotiented = false;  // values are |rho| (global-sign quotient)
  bool singleton = false;   // built from < 2 solutions: empty by construction
  int dimension = 0;
  double threshold = 0.0;   // mu of the originating set
  std::string model;
  std::vector<SpectrumEntry> entries;

  std::vector<double> values() const {
    std::vector<double> v;
    v.reserve(entries.size());
    for (const auto& e : entries) v.push_back(e.value);
    return v;
  }
};

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

// Equal-width bins over the mode's natural range: [-1, 1] for raw overlaps,
// [0, 1] for quotiented overlaps and intersections. The last bin is closed.
std::vector<HistogramBin> histogram(const OverlapSpectrum& spec, int bins);

namespace detail {

template <class Sol>
double pair_value(const SolutionSet<Sol>& set, std::size_t i, std::size_t j, SpectrumMode mode,
                  bool quotient_sign) {
  if constexpr (std::is_same_v<Sol, SignVector>) {
    if (mode != SpectrumMode::overlap)
      throw std::invalid_argument("build_spectrum: intersection mode needs node subsets");
    const double rho = overlap(set.entries[i].config, set.entries[j].config).value;
    // The four global sign combinations yield {rho, -rho}; the quotient is |rho|.
    return quotient_sign ? std::abs(rho) : rho;
  } else {
    if (quotient_sign)
      throw std::invalid_argument("build_spectrum: sign quotient undefined for node subsets");
    if (mode == SpectrumMode::intersection)
      return normalized_intersection(set.entries[i].config, set.entries[j].config);
    // Raw overlap of the membership indicators read as +-1 vectors.
    if (set.dimension == 0) throw std::invalid_argument("build_spectrum: dimension must be >= 1");
    const int h = hamming(set.entries[i].config, set.entries[j].config);
    return static_cast<double>(set.dimension - 2 * h) / static_cast<double>(set.dimension);
  }
}

}  // namespace detail

// Pairwise spectrum over all (size choose 2) unordered pairs. Workers > 1
// partitions the linearized pair range into contiguous blocks; each value
// lands in its preassigned slot, so the result is identical for any worker
// count, and the final sort fixes the canonical order.
template <class Sol>
OverlapSpectrum build_spectrum(const SolutionSet<Sol>& set, SpectrumMode mode,
                               bool quotient_sign = false, int workers = 1) {
  if (workers < 1) throw std::invalid_argument("build_spectrum: workers must be >= 1");
  OverlapSpectrum spec;
  spec.mode = mode;
  spec.quotiented = quotient_sign;
  spec.dimension = set.dimension;
  spec.threshold = set.threshold;
  spec.model = set.model;

  const std::size_t k = set.size();
  if (k < 2) {
    spec.singleton = true;  // no pairs: empty spectrum, flagged
    return spec;
  }
  const std::size_t total = k * (k - 1) / 2;
  spec.entries.resize(total);

  // Pair rank -> (i, j), i < j, lexicographic.
  auto fill_range = [&](std::size_t lo, std::size_t hi) {
    std::size_t i = 0;
    // Skip to the row containing pair index lo.
    std::size_t row_start = 0;
    while (row_start + (k - 1 - i) <= lo) {
      row_start += k - 1 - i;
      ++i;
    }
    std::size_t j = i + 1 + (lo - row_start);
    for (std::size_t r = lo; r < hi; ++r) {
      spec.entries[r] = SpectrumEntry{detail::pair_value(set, i, j, mode, quotient_sign),
                                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
      if (++j == k) {
        ++i;
        j = i + 1;
      }
    }
  };

  if (workers == 1 || total < 1024) {
    fill_range(0, total);
  } else {
    const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(workers), total);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w) {
      const std::size_t lo = total * w / nw;
      const std::size_t hi = total * (w + 1) / nw;
      pool.emplace_back(fill_range, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  std::sort(spec.entries.begin(), spec.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              if (a.value != b.value) return a.value < b.value;
              if (a.i != b.i) return a.i < b.i;
              return a.j < b.j;
            });
  return spec;
}

struct PairRef {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  double value = 0.0;
};

// Result of the widest-empty-interval sweep. nu1/nu2 are in the spectrum's
// units (overlap or normalized intersection). For sign-overlap spectra the
// same interval is also reported in Hamming-distance units:
// d in (n(1-nu2)/2, n(1-nu1)/2).
struct GapReport {
  bool present = false;
  double mu = 0.0;
  double nu1 = 0.0;
  double nu2 = 0.0;
  double min_width = 0.0;
  double search_floor = -1.0;
  SpectrumMode units = SpectrumMode::overlap;
  bool quotiented = false;
  int dimension = 0;
  std::optional<PairRef> witness_below;  // pair attaining <= nu1 (if any)
  std::optional<PairRef> witness_above;  // pair attaining nu2
  std::optional<double> dist_lo;         // distance-units view (overlap mode only)
  std::optional<double> dist_hi;
};

// Every maximal empty open interval (a, b) with b attained, b > floor and
// b - a >= min_width, in increasing order. a is the predecessor value or the
// floor. O(k log k) in the number of spectrum values.
std::vector<std::pair<double, double>> empty_intervals(const OverlapSpectrum& spec,
                                                       double min_width, double search_floor);

// Widest qualifying interval from empty_intervals (ties: largest nu2).
GapReport detect_gap(const OverlapSpectrum& spec, double min_width, double search_floor = -1.0);

}  // namespace ogp
