#include "ogp/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace ogp {

std::vector<HistogramBin> histogram(const OverlapSpectrum& spec, int bins) {
  if (bins < 1) throw std::invalid_argument("histogram: bins must be >= 1");
  const double lo = (spec.mode == SpectrumMode::overlap && !spec.quotiented) ? -1.0 : 0.0;
  const double hi = 1.0;
  std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
  const double width = (hi - lo) / bins;
  for (int b = 0; b < bins; ++b) {
    out[static_cast<std::size_t>(b)].lo = lo + b * width;
    out[static_cast<std::size_t>(b)].hi = lo + (b + 1) * width;
  }
  for (const auto& e : spec.entries) {
    int b = static_cast<int>(std::floor((e.value - lo) / width));
    b = std::clamp(b, 0, bins - 1);  // closes the last bin; clamps fp edge cases
    ++out[static_cast<std::size_t>(b)].count;
  }
  return out;
}

std::vector<std::pair<double, double>> empty_intervals(const OverlapSpectrum& spec,
                                                       double min_width, double search_floor) {
  std::vector<std::pair<double, double>> gaps;
  if (spec.entries.empty()) return gaps;
  // Entries are sorted by value; walk the distinct values once.
  double prev = search_floor;
  bool have_prev_value = false;
  for (std::size_t idx = 0; idx < spec.entries.size(); ++idx) {
    const double v = spec.entries[idx].value;
    if (idx > 0 && v == spec.entries[idx - 1].value) continue;
    if (v > search_floor) {
      const double a = have_prev_value ? std::max(prev, search_floor) : search_floor;
      if (v - a >= min_width) gaps.emplace_back(a, v);
    }
    prev = v;
    have_prev_value = true;
  }
  return gaps;
}

GapReport detect_gap(const OverlapSpectrum& spec, double min_width, double search_floor) {
  if (min_width <= 0) throw std::invalid_argument("detect_gap: min_width must be > 0");
  GapReport rep;
  rep.mu = spec.threshold;
  rep.min_width = min_width;
  rep.search_floor = search_floor;
  rep.units = spec.mode;
  rep.quotiented = spec.quotiented;
  rep.dimension = spec.dimension;

  const auto gaps = empty_intervals(spec, min_width, search_floor);
  if (gaps.empty()) return rep;

  // Widest interval; ties resolved toward the largest nu2 so a gap touching
  // the top of the spectrum wins (the interval adjacent to 1.0 in the
  // near-optimal-pair experiments).
  auto best = gaps.front();
  for (const auto& g : gaps) {
    const double w = g.second - g.first;
    const double bw = best.second - best.first;
    if (w > bw || (w == bw && g.second > best.second)) best = g;
  }
  rep.present = true;
  rep.nu1 = best.first;
  rep.nu2 = best.second;

  // Witnesses: first entry attaining nu2; last entry at or below nu1.
  for (const auto& e : spec.entries) {
    if (e.value == rep.nu2) {
      rep.witness_above = PairRef{e.i, e.j, e.value};
      break;
    }
  }
  for (std::size_t idx = spec.entries.size(); idx-- > 0;) {
    if (spec.entries[idx].value <= rep.nu1) {
      rep.witness_below = PairRef{spec.entries[idx].i, spec.entries[idx].j,
                                  spec.entries[idx].value};
      break;
    }
  }

  if (spec.mode == SpectrumMode::overlap && !spec.quotiented && spec.dimension > 0) {
    rep.dist_lo = spec.dimension * (1.0 - rep.nu2) / 2.0;
    rep.dist_hi = spec.dimension * (1.0 - rep.nu1) / 2.0;
  } else if (spec.mode == SpectrumMode::overlap && spec.quotiented && spec.dimension > 0) {
    // Quotiented overlaps still convert monotonically for the near-1 region.
    rep.dist_lo = spec.dimension * (1.0 - rep.nu2) / 2.0;
    rep.dist_hi = spec.dimension * (1.0 - rep.nu1) / 2.0;
  }
  return rep;
}

}  // namespace ogp
