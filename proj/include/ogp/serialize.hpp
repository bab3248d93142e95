#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "ogp/ensembles.hpp"
#include "ogp/format.hpp"
#include "ogp/models.hpp"
#include "ogp/oracles.hpp"
#include "ogp/spectrum.hpp"

namespace ogp {

// Insertion-ordered JSON keeps emitted files readable and byte-stable.
using Json = nlohmann::ordered_json;

// FNV-1a 64 over a canonical little-endian byte stream of the payload
// (weights / adjacency words / literals / couplings / rows). Lets a manifest
// carry a checkable fingerprint without embedding the payload itself.
std::uint64_t payload_digest(const NppInstance& inst);
std::uint64_t payload_digest(const GraphInstance& inst);
std::uint64_t payload_digest(const KsatInstance& inst);
std::uint64_t payload_digest(const PSpinInstance& inst);
std::uint64_t payload_digest(const PerceptronInstance& inst);

std::string hex_u64(std::uint64_t v);  // 16 lowercase hex digits

// Instance manifests: model tag, parameters, seed, payload digest. The
// payload regenerates from (params, seed), so embedding it is optional.
Json instance_json(const NppInstance& inst, bool include_payload = false);
Json instance_json(const GraphInstance& inst, bool include_payload = false);
Json instance_json(const KsatInstance& inst, bool include_payload = false);
Json instance_json(const PSpinInstance& inst, bool include_payload = false);
Json instance_json(const PerceptronInstance& inst, bool include_payload = false);

Json to_json(const SignSolutionSet& set, bool include_entries = true);
Json to_json(const NodeSolutionSet& set, bool include_entries = true);

// Spectrum summary: counts and extremes always; histogram when bins > 0;
// raw (value, i, j) entries only on request (they are O(k^2)).
Json to_json(const OverlapSpectrum& spec, std::size_t histogram_bins = 0,
             bool include_entries = false);
Json to_json(const GapReport& report);
Json to_json(const TupleSearchReport& report);
Json to_json(const ChaosReport& report);

// ClusterDecomposition is templated on the solution type but serializes
// identically for all of them; this shim erases the parameter.
struct ClusterFields {
  int radius = 0;
  std::size_t total = 0;
  std::vector<std::vector<std::uint32_t>> clusters;
  std::vector<std::size_t> sizes;
  double singleton_fraction = 0.0;
};

template <class Sol>
ClusterFields erase_cluster(const ClusterDecomposition<Sol>& dec, std::size_t total) {
  return ClusterFields{dec.radius, total, dec.clusters, dec.sizes, dec.singleton_fraction};
}

Json cluster_json(const ClusterFields& dec, bool include_members = false);

// Stability trace as CSV (one row per evaluated t) and as a JSON summary.
// Columns: t, d_t (Hamming distance from the previous evaluated output,
// empty on the first row or across a failed run), o_t (overlap with the
// t = 0 output), objective, status (ok | fail).
template <class Sol>
std::string stability_csv(const StabilityTrace<Sol>& trace) {
  std::string out = "t,d_t,o_t,objective,status\n";
  for (std::size_t i = 0; i < trace.ts.size(); ++i) {
    out += std::to_string(trace.ts[i]);
    out += ',';
    if (i > 0 && trace.step_dists[i - 1].has_value())
      out += std::to_string(*trace.step_dists[i - 1]);
    out += ',';
    if (trace.overlap_to_start[i].has_value()) out += format_double(*trace.overlap_to_start[i]);
    out += ',';
    out += format_double(trace.objectives[i]);
    out += ',';
    out += trace.outputs[i].has_value() ? "ok" : "fail";
    out += '\n';
  }
  return out;
}

template <class Sol>
Json stability_summary_json(const StabilityTrace<Sol>& trace) {
  Json j;
  j["evaluations"] = trace.ts.size();
  j["t_final"] = trace.ts.empty() ? 0 : trace.ts.back();
  j["kappa_hat"] = trace.kappa_hat;
  j["all_ok"] = trace.all_ok;
  if (!trace.overlap_to_start.empty() && trace.overlap_to_start.back().has_value())
    j["final_overlap_to_start"] = *trace.overlap_to_start.back();
  else
    j["final_overlap_to_start"] = nullptr;
  return j;
}

}  // namespace ogp
