#include "ogp/serialize.hpp"

#include <bit>
#include <cstring>

namespace ogp {

namespace {

struct Fnv1a {
  std::uint64_t h = 14695981039346656037ull;

  void byte(unsigned char b) {
    h ^= b;
    h *= 1099511628211ull;
  }
  void u64(std::uint64_t v) {
    for (int k = 0; k < 8; ++k) byte(static_cast<unsigned char>((v >> (8 * k)) & 0xFF));
  }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void i32(int v) { u64(static_cast<std::uint64_t>(static_cast<std::uint32_t>(v))); }
};

const char* mode_name(SpectrumMode m) {
  return m == SpectrumMode::overlap ? "overlap" : "intersection";
}

template <class Sol>
Json solution_set_json(const SolutionSet<Sol>& set, const char* kind, bool include_entries) {
  Json j;
  j["kind"] = "solution_set";
  j["solution_type"] = kind;
  j["model"] = set.model;
  j["dimension"] = set.dimension;
  j["threshold"] = set.threshold;
  j["size"] = set.size();
  j["truncated"] = set.truncated;
  if (include_entries) {
    Json entries = Json::array();
    for (const auto& e : set.entries) {
      Json row;
      row["config"] = e.config.to_hex();
      row["value"] = e.value;
      entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
  }
  return j;
}

}  // namespace

std::string hex_u64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

std::uint64_t payload_digest(const NppInstance& inst) {
  Fnv1a d;
  for (double w : inst.weights) d.f64(w);
  return d.h;
}

std::uint64_t payload_digest(const GraphInstance& inst) {
  Fnv1a d;
  for (const auto& row : inst.adj)
    for (std::uint64_t w : row.words()) d.u64(w);
  return d.h;
}

std::uint64_t payload_digest(const KsatInstance& inst) {
  Fnv1a d;
  for (const auto& clause : inst.clauses)
    for (int lit : clause) d.i32(lit);
  return d.h;
}

std::uint64_t payload_digest(const PSpinInstance& inst) {
  Fnv1a d;
  for (double c : inst.couplings) d.f64(c);
  return d.h;
}

std::uint64_t payload_digest(const PerceptronInstance& inst) {
  Fnv1a d;
  for (double v : inst.rows) d.f64(v);
  return d.h;
}

Json instance_json(const NppInstance& inst, bool include_payload) {
  Json j;
  j["kind"] = "instance";
  j["model"] = "npp";
  j["n"] = inst.n;
  j["seed"] = inst.seed;
  j["digest"] = hex_u64(payload_digest(inst));
  if (include_payload) j["weights"] = inst.weights;
  return j;
}

Json instance_json(const GraphInstance& inst, bool include_payload) {
  Json j;
  j["kind"] = "instance";
  j["model"] = "graph";
  j["n"] = inst.n;
  j["p"] = inst.p;
  j["seed"] = inst.seed;
  j["edges"] = inst.edge_count();
  j["digest"] = hex_u64(payload_digest(inst));
  if (include_payload) {
    Json rows = Json::array();
    for (const auto& row : inst.adj) rows.push_back(row.to_hex());
    j["adjacency_rows"] = std::move(rows);
  }
  return j;
}

Json instance_json(const KsatInstance& inst, bool include_payload) {
  Json j;
  j["kind"] = "instance";
  j["model"] = "ksat";
  j["n"] = inst.n;
  j["m"] = inst.m;
  j["k"] = inst.k;
  j["seed"] = inst.seed;
  j["digest"] = hex_u64(payload_digest(inst));
  if (include_payload) j["clauses"] = inst.clauses;
  return j;
}

Json instance_json(const PSpinInstance& inst, bool include_payload) {
  Json j;
  j["kind"] = "instance";
  j["model"] = "pspin";
  j["n"] = inst.n;
  j["p"] = inst.p;
  j["seed"] = inst.seed;
  j["digest"] = hex_u64(payload_digest(inst));
  if (include_payload) j["couplings"] = inst.couplings;
  return j;
}

Json instance_json(const PerceptronInstance& inst, bool include_payload) {
  Json j;
  j["kind"] = "instance";
  j["model"] = "perceptron";
  j["n"] = inst.n;
  j["m"] = inst.m;
  j["kappa"] = inst.kappa;
  j["seed"] = inst.seed;
  j["digest"] = hex_u64(payload_digest(inst));
  if (include_payload) j["rows"] = inst.rows;
  return j;
}

Json to_json(const SignSolutionSet& set, bool include_entries) {
  return solution_set_json(set, "sign", include_entries);
}

Json to_json(const NodeSolutionSet& set, bool include_entries) {
  return solution_set_json(set, "subset", include_entries);
}

Json to_json(const OverlapSpectrum& spec, std::size_t histogram_bins, bool include_entries) {
  Json j;
  j["kind"] = "spectrum";
  j["mode"] = mode_name(spec.mode);
  j["quotiented"] = spec.quotiented;
  j["singleton"] = spec.singleton;
  j["model"] = spec.model;
  j["dimension"] = spec.dimension;
  j["threshold"] = spec.threshold;
  j["pairs"] = spec.entries.size();
  if (!spec.entries.empty()) {
    double sum = 0.0;
    for (const auto& e : spec.entries) sum += e.value;
    j["min"] = spec.entries.front().value;
    j["max"] = spec.entries.back().value;
    j["mean"] = sum / static_cast<double>(spec.entries.size());
  } else {
    j["min"] = nullptr;
    j["max"] = nullptr;
    j["mean"] = nullptr;
  }
  if (histogram_bins > 0) {
    Json bins = Json::array();
    for (const auto& b : histogram(spec, static_cast<int>(histogram_bins))) {
      Json row;
      row["lo"] = b.lo;
      row["hi"] = b.hi;
      row["count"] = b.count;
      bins.push_back(std::move(row));
    }
    j["histogram"] = std::move(bins);
  }
  if (include_entries) {
    Json entries = Json::array();
    for (const auto& e : spec.entries) entries.push_back(Json::array({e.value, e.i, e.j}));
    j["entries"] = std::move(entries);
  }
  return j;
}

Json to_json(const GapReport& report) {
  Json j;
  j["kind"] = "gap_report";
  j["present"] = report.present;
  j["units"] = mode_name(report.units);
  j["quotiented"] = report.quotiented;
  j["dimension"] = report.dimension;
  j["min_width"] = report.min_width;
  j["search_floor"] = report.search_floor;
  if (report.present) {
    j["nu1"] = report.nu1;
    j["nu2"] = report.nu2;
    j["width"] = report.nu2 - report.nu1;
    if (report.dist_lo.has_value()) {
      // Same interval in Hamming-distance units (sign overlaps only):
      // forbidden d in (n(1 - nu2)/2, n(1 - nu1)/2).
      j["dist_lo"] = *report.dist_lo;
      j["dist_hi"] = *report.dist_hi;
    }
    auto witness = [](const std::optional<PairRef>& w) -> Json {
      if (!w.has_value()) return nullptr;
      Json row;
      row["i"] = w->i;
      row["j"] = w->j;
      row["value"] = w->value;
      return row;
    };
    j["witness_below"] = witness(report.witness_below);
    j["witness_above"] = witness(report.witness_above);
  }
  return j;
}

Json to_json(const TupleSearchReport& report) {
  Json j;
  j["kind"] = "tuple_search";
  j["m"] = report.m;
  j["nu1"] = report.nu1;
  j["nu2"] = report.nu2;
  j["found"] = report.found;
  j["exhaustive"] = report.exhaustive;
  j["inconclusive"] = report.inconclusive;
  j["pair_evaluations"] = report.pair_evaluations;
  if (report.found) {
    j["witness"] = report.witness;
    j["witness_overlaps"] = report.witness_overlaps;
  }
  return j;
}

Json to_json(const ChaosReport& report) {
  Json j;
  j["kind"] = "chaos_probe";
  j["n"] = report.n;
  j["p"] = report.p;
  j["resample_fraction"] = report.resample_fraction;
  j["mu"] = report.mu;
  j["ground_a"] = report.ground_a;
  j["ground_b"] = report.ground_b;
  j["set_a"] = report.set_a;
  j["set_b"] = report.set_b;
  j["truncated"] = report.truncated;
  j["cross_pairs"] = report.cross.entries.size();
  if (std::isnan(report.mean_cross))
    j["mean_cross"] = nullptr;
  else
    j["mean_cross"] = report.mean_cross;
  if (!report.cross.entries.empty()) {
    j["cross_min"] = report.cross.entries.front().value;
    j["cross_max"] = report.cross.entries.back().value;
  }
  j["cross_quotiented"] = report.cross.quotiented;
  return j;
}

Json cluster_json(const ClusterFields& dec, bool include_members) {
  Json j;
  j["kind"] = "cluster_decomposition";
  j["radius"] = dec.radius;
  j["solutions"] = dec.total;
  j["clusters"] = dec.clusters.size();
  j["sizes"] = dec.sizes;
  j["singleton_fraction"] = dec.singleton_fraction;
  if (include_members) j["members"] = dec.clusters;
  return j;
}

}  // namespace ogp
