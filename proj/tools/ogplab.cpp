// ogplab: reproducible experiment runner for the overlap-gap laboratory.
//
// Subcommands: gen, solve, enumerate, spectrum, cluster, theory, path,
// stability, tuple-search, chaos, sweep, verify. Outputs are JSON (reports)
// or CSV (tables); every output embeds the manifest that regenerates it.
// Exit codes: 0 ok, 1 verification mismatch, 2 validation error, 3 guard
// refusal, 4 output I/O error.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ogp/algorithms.hpp"
#include "ogp/ensembles.hpp"
#include "ogp/errors.hpp"
#include "ogp/format.hpp"
#include "ogp/models.hpp"
#include "ogp/oracles.hpp"
#include "ogp/serialize.hpp"
#include "ogp/spectrum.hpp"
#include "ogp/theory.hpp"

namespace {

using ogp::Json;

constexpr const char* kToolName = "ogplab";
constexpr const char* kToolVersion = "0.1.0";

// Output-path failures get their own exit code (4), distinct from
// validation (2) and guard refusals (3).
struct io_error : std::runtime_error {
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---------------------------------------------------------------------------
// Small parsers: seed lists ("7", "1,4,9", "0..99") and real grids
// ("2.5", "1,2,3", "lo:hi:step", inclusive endpoints).

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": expected an unsigned integer, got '" + text + "'");
  }
}

double parse_real(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": expected a number, got '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const std::uint64_t a = parse_u64(text.substr(0, dots), "seed range start");
    const std::uint64_t b = parse_u64(text.substr(dots + 2), "seed range end");
    if (b < a) throw std::invalid_argument("seed range: end " + std::to_string(b) +
                                           " is below start " + std::to_string(a));
    if (b - a >= 10'000'000)
      throw std::invalid_argument("seed range: more than 10^7 seeds requested");
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = a;; ++s) {
      seeds.push_back(s);
      if (s == b) break;
    }
    return seeds;
  }
  std::vector<std::uint64_t> seeds;
  for (const auto& part : split(text, ',')) seeds.push_back(parse_u64(part, "seed"));
  return seeds;
}

std::vector<double> parse_grid(const std::string& text, const std::string& what) {
  const auto c1 = text.find(':');
  if (c1 != std::string::npos) {
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos)
      throw std::invalid_argument(what + ": grid syntax is lo:hi:step, got '" + text + "'");
    const double lo = parse_real(text.substr(0, c1), what);
    const double hi = parse_real(text.substr(c1 + 1, c2 - c1 - 1), what);
    const double step = parse_real(text.substr(c2 + 1), what);
    if (step <= 0.0) throw std::invalid_argument(what + ": grid step must be > 0");
    if (hi < lo) throw std::invalid_argument(what + ": grid end is below start");
    std::vector<double> grid;
    for (long long i = 0;; ++i) {
      const double v = lo + static_cast<double>(i) * step;
      if (v > hi + step * 1e-9) break;
      grid.push_back(v);
      if (grid.size() > 10'000'000) throw std::invalid_argument(what + ": grid too large");
    }
    return grid;
  }
  std::vector<double> grid;
  for (const auto& part : split(text, ',')) grid.push_back(parse_real(part, what));
  return grid;
}

std::vector<int> parse_int_grid(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (double v : parse_grid(text, what)) {
    const double r = std::llround(v);
    if (std::abs(v - r) > 1e-9 || r < 1 || r > std::numeric_limits<int>::max())
      throw std::invalid_argument(what + ": grid values must be positive integers");
    out.push_back(static_cast<int>(r));
  }
  return out;
}

int env_workers() {
  const char* e = std::getenv("OGP_WORKERS");
  if (e == nullptr || *e == '\0') return 1;
  const std::uint64_t v = parse_u64(e, "OGP_WORKERS");
  if (v < 1 || v > 4096) throw std::invalid_argument("OGP_WORKERS: must be in [1, 4096]");
  return static_cast<int>(v);
}

// ---------------------------------------------------------------------------
// Config-file merge and manifest assembly. A JSON config supplies long
// options by name; flags given on the command line take precedence (config
// keys already present in argv are ignored). The manifest stores the merged
// token list minus execution-only knobs (--workers, --out, --summary-out),
// so a stored manifest replays the run regardless of worker count.

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

std::vector<std::string> merge_config(std::vector<std::string> tokens) {
  std::string path;
  for (std::size_t i = 0; i < tokens.size();) {
    if (tokens[i] == "--config") {
      if (i + 1 >= tokens.size())
        throw std::invalid_argument("--config: expected a file path argument");
      path = tokens[i + 1];
      tokens.erase(tokens.begin() + static_cast<long>(i), tokens.begin() + static_cast<long>(i) + 2);
    } else if (starts_with(tokens[i], "--config=")) {
      path = tokens[i].substr(9);
      tokens.erase(tokens.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  if (path.empty()) return tokens;

  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read config file: " + path);
  Json cfg = Json::parse(f, nullptr, false);
  if (cfg.is_discarded() || !cfg.is_object())
    throw std::invalid_argument("config file is not a JSON object: " + path);

  for (const auto& [key, value] : cfg.items()) {
    const std::string flag = "--" + key;
    bool present = false;
    for (const auto& t : tokens)
      if (t == flag || starts_with(t, flag + "=")) {
        present = true;
        break;
      }
    if (present) continue;
    if (value.is_boolean()) {
      tokens.push_back(flag + (value.get<bool>() ? "=true" : "=false"));
    } else if (value.is_string()) {
      tokens.push_back(flag);
      tokens.push_back(value.get<std::string>());
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ',';
        joined += item.is_string() ? item.get<std::string>() : item.dump();
      }
      tokens.push_back(flag);
      tokens.push_back(joined);
    } else {
      tokens.push_back(flag);
      tokens.push_back(value.dump());
    }
  }
  return tokens;
}

std::vector<std::string> manifest_args(const std::vector<std::string>& tokens) {
  static const std::vector<std::string> kExec = {"--workers", "--out", "--summary-out"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    bool skip = false;
    for (const auto& e : kExec) {
      if (tokens[i] == e) {
        ++i;  // skip the value too
        skip = true;
        break;
      }
      if (starts_with(tokens[i], e + "=")) {
        skip = true;
        break;
      }
    }
    if (!skip) out.push_back(tokens[i]);
  }
  return out;
}

Json make_manifest(const std::vector<std::string>& merged_tokens) {
  Json m;
  m["tool"] = kToolName;
  m["version"] = kToolVersion;
  m["argv"] = manifest_args(merged_tokens);
  return m;
}

std::string manifest_line(const Json& manifest) { return "# " + manifest.dump() + "\n"; }

std::string dump_doc(const Json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Run plumbing: runners fill a RunResult; only main() touches the filesystem.

struct RunResult {
  std::string primary;
  std::string out_path;  // "" = stdout
  std::optional<std::pair<std::string, std::string>> summary;  // (path, content)
  int exit_code = 0;
};

void write_file_or_stdout(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot write output path: " + path);
  f << content;
  if (!f) throw io_error("write failed on output path: " + path);
}

struct Opt {
  int n = 0;
  int m = 0;  // 0 = derive from --alpha where applicable
  int k = 3;
  int pbody = 2;
  double pedge = 0.5;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double kappa = 0.0;
  std::uint64_t seed = 0;

  double mu = 0.0;
  std::size_t cap = 1'000'000;
  int kmin = 0;
  int radius = 1;
  int max_n = 0;  // 0 = library default guard
  bool payload = false;
  bool no_entries = false;
  bool members = false;
  bool orbit = false;
  bool no_orbit = false;

  std::string mode_text = "overlap";
  int bins = 0;
  double min_width = 0.05;
  double search_floor = std::numeric_limits<double>::quiet_NaN();  // NaN = auto
  bool quotient_flag = false;
  bool raw_flag = false;
  bool entries = false;
  int workers = 1;

  std::string weights_text;
  std::string order_text = "identity";
  std::uint64_t node_order_seed = 0;
  std::uint64_t walksat_seed = 0;
  double noise = 0.5;
  long long max_flips = 200'000;

  double rho = std::numeric_limits<double>::quiet_NaN();
  double x = std::numeric_limits<double>::quiet_NaN();
  double grid = 0.01;
  double q = std::numeric_limits<double>::quiet_NaN();
  bool op_curve = false, op_rho_star = false, op_roots = false, op_cexp = false,
       op_nexp = false, op_rho0 = false, op_entropy = false;

  std::uint64_t order_seed = 1;
  std::uint64_t epoch = 1;
  long long t = -1;
  std::string rule_text = "resample";
  long long stride = 0;  // 0 = auto (about 100 evaluations)

  int tuple_m = 2;
  double nu1 = 0.0, nu2 = 0.0;
  double fraction = 0.0;
  std::string search_mode = "exhaustive";
  unsigned long long samples = 100'000;
  unsigned long long budget = 100'000'000ull;
  std::uint64_t sample_seed = 0;

  std::string seeds_text;
  std::string alpha_text;
  std::string n_text;

  std::string out;
  std::string summary_out;
  std::string verify_file;
};

struct Ctx {
  Opt opt;
  Json manifest;
};

// Cells are preassigned to slots; each worker fills a contiguous block, so
// output bytes never depend on the worker count.
void parallel_cells(std::size_t cells, int workers,
                    const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || cells < 2) {
    for (std::size_t i = 0; i < cells; ++i) fn(i);
    return;
  }
  const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(workers), cells);
  std::vector<std::exception_ptr> errors(nw);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (std::size_t w = 0; w < nw; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::size_t lo = cells * w / nw;
        const std::size_t hi = cells * (w + 1) / nw;
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// ---------------------------------------------------------------------------
// Shared model helpers.

int derive_m(const Opt& o, const std::string& cmd) {
  if (o.m > 0) return o.m;
  if (std::isnan(o.alpha) || o.alpha <= 0.0)
    throw std::invalid_argument(cmd + ": supply --m, or --alpha > 0 to set m = round(alpha * n)");
  const long long m = std::llround(o.alpha * o.n);
  if (m < 1) throw std::invalid_argument(cmd + ": alpha * n rounds to zero clauses");
  return static_cast<int>(m);
}

double require_alpha(const Opt& o, const std::string& cmd) {
  if (std::isnan(o.alpha)) throw std::invalid_argument(cmd + ": --alpha is required");
  return o.alpha;
}

std::vector<int> greedy_order(const Opt& o, int n, std::uint64_t cell_seed) {
  if (o.order_text == "identity") return ogp::identity_order(n);
  if (o.order_text == "random") {
    ogp::RngStream rng = ogp::substream(o.node_order_seed, cell_seed, static_cast<std::uint64_t>(n));
    return ogp::random_order(n, rng);
  }
  throw std::invalid_argument("--order: expected identity or random, got '" + o.order_text + "'");
}

// ---------------------------------------------------------------------------
// gen

template <class Inst>
void finish_instance_doc(const Ctx& ctx, RunResult& res, const Inst& inst) {
  Json doc = ogp::instance_json(inst, ctx.opt.payload);
  doc["manifest"] = ctx.manifest;
  res.primary = dump_doc(doc);
  res.out_path = ctx.opt.out;
}

void run_gen_npp(const Ctx& ctx, RunResult& res) {
  finish_instance_doc(ctx, res, ogp::gen_npp(ctx.opt.n, ctx.opt.seed));
}
void run_gen_graph(const Ctx& ctx, RunResult& res) {
  finish_instance_doc(ctx, res, ogp::gen_gnp(ctx.opt.n, ctx.opt.pedge, ctx.opt.seed));
}
void run_gen_ksat(const Ctx& ctx, RunResult& res) {
  const int m = derive_m(ctx.opt, "gen ksat");
  finish_instance_doc(ctx, res, ogp::gen_ksat(ctx.opt.n, m, ctx.opt.k, ctx.opt.seed));
}
void run_gen_pspin(const Ctx& ctx, RunResult& res) {
  finish_instance_doc(ctx, res, ogp::gen_pspin(ctx.opt.n, ctx.opt.pbody, ctx.opt.seed));
}
void run_gen_perceptron(const Ctx& ctx, RunResult& res) {
  const int m = derive_m(ctx.opt, "gen perceptron");
  finish_instance_doc(ctx, res, ogp::gen_perceptron(ctx.opt.n, m, ctx.opt.kappa, ctx.opt.seed));
}

// ---------------------------------------------------------------------------
// solve

ogp::NppInstance npp_from_opt(const Opt& o, const std::string& cmd) {
  if (o.weights_text.empty()) {
    if (o.n < 1) throw std::invalid_argument(cmd + ": supply --weights or --n with --seed");
    return ogp::gen_npp(o.n, o.seed);
  }
  ogp::NppInstance inst;
  for (const auto& part : split(o.weights_text, ','))
    inst.weights.push_back(parse_real(part, "--weights"));
  inst.n = static_cast<int>(inst.weights.size());
  inst.seed = 0;
  if (o.n > 0 && o.n != inst.n)
    throw std::invalid_argument(cmd + ": --n disagrees with the number of --weights entries");
  return inst;
}

void run_solve_kk(const Ctx& ctx, RunResult& res) {
  const ogp::NppInstance inst = npp_from_opt(ctx.opt, "solve kk");
  const ogp::KkTrace trace = ogp::karmarkar_karp(inst);
  Json doc;
  doc["kind"] = "solve";
  doc["algorithm"] = "kk";
  doc["n"] = inst.n;
  doc["discrepancy"] = trace.discrepancy;
  doc["partition"] = trace.partition.to_hex();
  doc["merges"] = trace.merges.size();
  doc["instance"] = ogp::instance_json(inst, ctx.opt.payload);
  if (!ctx.opt.weights_text.empty()) doc["instance"]["explicit_weights"] = true;
  doc["manifest"] = ctx.manifest;
  res.primary = dump_doc(doc);
  res.out_path = ctx.opt.out;
}

void run_solve_greedy(const Ctx& ctx, RunResult& res) {
  const ogp::GraphInstance g = ogp::gen_gnp(ctx.opt.n, ctx.opt.pedge, ctx.opt.seed);
  const std::vector<int> order = greedy_order(ctx.opt, g.n, ctx.opt.seed);
  const ogp::NodeSubset clique = ogp::greedy_clique(g, order);
  Json doc;
  doc["kind"] = "solve";
  doc["algorithm"] = "greedy_clique";
  doc["n"] = g.n;
  doc["order"] = ctx.opt.order_text;
  doc["size"] = clique.count();
  Json nodes = Json::array();
  for (int v = 0; v < g.n; ++v)
    if (clique.test(v)) nodes.push_back(v);
  doc["members"] = std::move(nodes);
  doc["config"] = clique.to_hex();
  doc["instance"] = ogp::instance_json(g, ctx.opt.payload);
  doc["manifest"] = ctx.manifest;
  res.primary = dump_doc(doc);
  res.out_path = ctx.opt.out;
}

void run_solve_walksat(const Ctx& ctx, RunResult& res) {
  const int m = derive_m(ctx.opt, "solve walksat");
  const ogp::KsatInstance f = ogp::gen_ksat(ctx.opt.n, m, ctx.opt.k, ctx.opt.seed);
  ogp::RngStream rng(ctx.opt.walksat_seed);
  const ogp::WalksatResult r = ogp::walksat(f, ctx.opt.max_flips, ctx.opt.noise, rng);
  Json doc;
  doc["kind"] = "solve";
  doc["algorithm"] = "walksat";
  doc["n"] = f.n;
  doc["m"] = f.m;
  doc["k"] = f.k;
  doc["walksat_seed"] = ctx.opt.walksat_seed;
  doc["noise"] = ctx.opt.noise;
  doc["max_flips"] = ctx.opt.max_flips;
  doc["satisfied"] = r.satisfied;
  doc["flips"] = r.flips;
  doc["violations"] = ogp::ksat_violations(f, r.assignment);
  doc["assignment"] = r.assignment.to_hex();
  doc["instance"] = ogp::instance_json(f, ctx.opt.payload);
  doc["manifest"] = ctx.manifest;
  res.primary = dump_doc(doc);
  res.out_path = ctx.opt.out;
}

// ---------------------------------------------------------------------------
// enumerate / spectrum / cluster share the per-model enumeration step.

struct EnumPack {
  Json instance;
  std::optional<ogp::SignSolutionSet> signs;
  std::optional<ogp::NodeSolutionSet> subsets;
  bool default_quotient = false;
};

EnumPack enumerate_model(const std::string& model, const Opt& o, bool orbit_expand) {
  EnumPack pack;
  if (model == "npp") {
    const auto inst = ogp::gen_npp(o.n, o.seed);
    pack.instance = ogp::instance_json(inst, false);
    auto set = ogp::enumerate_npp(inst, require_alpha(o, "npp enumeration"), o.cap,
                                  o.max_n > 0 ? o.max_n : ogp::kNppEnumMaxN);
    if (orbit_expand) set = ogp::expand_sign_orbit(set);
    pack.signs = std::move(set);
    pack.default_quotient = true;
  } else if (model == "clique") {
    if (o.kmin < 1) throw std::invalid_argument("clique enumeration: --kmin >= 1 is required");
    const auto g = ogp::gen_gnp(o.n, o.pedge, o.seed);
    pack.instance = ogp::instance_json(g, false);
    pack.subsets = ogp::enumerate_cliques(g, o.kmin, o.cap,
                                          o.max_n > 0 ? o.max_n : ogp::kCliqueEnumMaxN);
  } else if (model == "sat") {
    const int m = o.m > 0 ? o.m
                          : static_cast<int>(std::llround(require_alpha(o, "sat enumeration") *
                                                          o.n));
    if (m < 1) throw std::invalid_argument("sat enumeration: m must be >= 1");
    const auto f = ogp::gen_ksat(o.n, m, o.k, o.seed);
    pack.instance = ogp::instance_json(f, false);
    pack.signs = ogp::enumerate_sat(f, o.cap, o.max_n > 0 ? o.max_n : ogp::kSatEnumMaxN);
  } else if (model == "perceptron") {
    const int m = o.m > 0 ? o.m
                          : static_cast<int>(std::llround(
                                require_alpha(o, "perceptron enumeration") * o.n));
    if (m < 1) throw std::invalid_argument("perceptron enumeration: m must be >= 1");
    const auto inst = ogp::gen_perceptron(o.n, m, o.kappa, o.seed);
    pack.instance = ogp::instance_json(inst, false);
    pack.signs = ogp::enumerate_perceptron(inst, o.cap,
                                           o.max_n > 0 ? o.max_n : ogp::kSatEnumMaxN);
  } else if (model == "pspin") {
    const auto inst = ogp::gen_pspin(o.n, o.pbody, o.seed);
    pack.instance = ogp::instance_json(inst, false);
    pack.signs = ogp::enumerate_pspin_near_ground(inst, o.mu, o.cap,
                                                  o.max_n > 0 ? o.max_n : ogp::kChaosMaxN);
    pack.default_quotient = (o.pbody % 2 == 0);
  } else {
    throw std::invalid_argument("unknown model: " + model);
  }
  return pack;
}

void run_enumerate(const Ctx& ctx, RunResult& res, const std::string& model) {
  // `enumerate npp --orbit` adds the mirrored representatives; the canonical
  // half-space set is the default.
  const EnumPack pack = enumerate_model(model, ctx.opt, ctx.opt.orbit);
  Json doc = pack.signs.has_value() ? ogp::to_json(*pack.signs, !ctx.opt.no_entries)
                                    : ogp::to_json(*pack.subsets, !ctx.opt.no_entries);
  if (model == "clique") doc["value_convention"] = "negative clique size";
  doc["instance"] = pack.instance;
  doc["manifest"] = ctx.manifest;
  res.primary = dump_doc(doc);
  res.out_path = ctx.opt.out;
}

void run_spectrum(const Ctx& ctx, RunResult& res, const std::string& model) {
  const Opt& o = ctx.opt;
  // Spectrum on NPP defaults to the full sign orbit (so the self-mirrored
  // pair contributes |rho| = 1); --no-orbit keeps the canonical set.
  const bool orbit_expand = (model == "npp") && !o.no_orbit;
  const EnumPack pack = enumerate_model(model, o, orbit_expand);

  ogp::SpectrumMode mode;
  if (o.mode_text == "overlap")
    mode = ogp::SpectrumMode::overlap;
  else if (o.mode_text == "intersection")
    mode = ogp::SpectrumMode::intersection;
  else
    throw std::invalid_argument("--mode: expected overlap or intersection");

  bool quotient = pack.default_quotient;
  if (o.quotient_flag) quotient = true;
  if (o.raw_flag) quotient = false;

  ogp::OverlapSpectrum spec =
      pack.signs.has_value() ? ogp::build_spectrum(*pack.signs, mode, quotient, o.workers)
                             : ogp::build_spectrum(*pack.subsets, mode, quotient, o.workers);
  spec.model = model;

  double floor = o.search_floor;
  if (std::isnan(floor)) floor = (quotient || mode == ogp::SpectrumMode::intersection) ? 0.0 : -1.0;
  const ogp::GapReport gap = ogp::detect_gap(spec, o.min_width, floor);

  Json doc;
  doc["kind"] = "spectrum_report";
  doc["model"] = model;
  doc["solutions"] = pack.signs.has_value() ? pack.signs->size() : pack.subsets->size();
  doc["truncated"] = pack.signs.has_value() ? pack.signs->truncated : pack.subsets->truncated;
  doc["spectrum"] = ogp::to_json(spec, static_cast<std::size_t>(o.bins), o.entries);
  doc["gap"] = ogp::to_json(gap);
  doc["instance"] = pack.instance;
  doc["manifest"] = ctx.manifest;
  res.primary = dump_doc(doc);
  res.out_path = o.out;
}

void run_cluster(const Ctx& ctx, RunResult& res, const std::string& model) {
  // Clustering uses the canonical enumeration; pass --orbit to decompose the
  // full sign orbit instead.
  const EnumPack pack = enumerate_model(model, ctx.opt, ctx.opt.orbit);
  ogp::ClusterFields fields;
  if (pack.signs.has_value())
    fields = ogp::erase_cluster(ogp::cluster_decompose(*pack.signs, ctx.opt.radius),
                                pack.signs->size());
  else
    fields = ogp::erase_cluster(ogp::cluster_decompose(*pack.subsets, ctx.opt.radius),
                                pack.subsets->size());
  Json doc = ogp::cluster_json(fields, ctx.opt.members);
  doc["model"] = model;
  doc["truncated"] = pack.signs.has_value() ? pack.signs->truncated : pack.subsets->truncated;
  doc["instance"] = pack.instance;
  doc["manifest"] = ctx.manifest;
  res.primary = dump_doc(doc);
  res.out_path = ctx.opt.out;
}

// ---------------------------------------------------------------------------
// theory

void run_theory(const Ctx& ctx, RunResult& res) {
  const Opt& o = ctx.opt;
  const int ops = static_cast<int>(o.op_curve) + static_cast<int>(o.op_rho_star) +
                  static_cast<int>(o.op_roots) + static_cast<int>(o.op_cexp) +
                  static_cast<int>(o.op_nexp) + static_cast<int>(o.op_rho0) +
                  static_cast<int>(o.op_entropy);
  if (ops != 1)
    throw std::invalid_argument(
        "theory: choose exactly one of --clique-curve, --rho-star, --clique-roots, "
        "--clique-exponent, --npp-exponent, --npp-rho0, --entropy");

  if (o.op_curve) {
    const double alpha = require_alpha(o, "theory --clique-curve");
    if (o.grid <= 0.0 || o.grid > 1.0)
      throw std::invalid_argument("theory --clique-curve: --grid must be in (0, 1]");
    std::vector<double> rho_grid;
    for (long long i = 0;; ++i) {
      const double r = static_cast<double>(i) * o.grid;
      if (r > 1.0 + o.grid * 1e-9) break;
      rho_grid.push_back(std::min(r, 1.0));
    }
    const auto curve = ogp::sample_clique_curve(alpha, rho_grid);
    res.primary = manifest_line(ctx.manifest) + ogp::clique_curve_csv(curve);
    res.out_path = o.out;
    return;
  }

  Json doc;
  doc["kind"] = "theory";
  if (o.op_rho_star) {
    doc["op"] = "rho_star";
    doc["alpha"] = require_alpha(o, "theory --rho-star");
    doc["value"] = ogp::rho_star(o.alpha);
  } else if (o.op_roots) {
    doc["op"] = "clique_overlap_roots";
    doc["alpha"] = require_alpha(o, "theory --clique-roots");
    if (std::isnan(o.rho)) throw std::invalid_argument("theory --clique-roots: --rho is required");
    doc["rho"] = o.rho;
    const auto roots = ogp::clique_overlap_roots(o.alpha, o.rho);
    doc["x1"] = roots.x1.has_value() ? Json(*roots.x1) : Json(nullptr);
    doc["x2"] = roots.x2.has_value() ? Json(*roots.x2) : Json(nullptr);
  } else if (o.op_cexp) {
    doc["op"] = "clique_pair_exponent";
    doc["alpha"] = require_alpha(o, "theory --clique-exponent");
    if (std::isnan(o.x) || std::isnan(o.rho))
      throw std::invalid_argument("theory --clique-exponent: --x and --rho are required");
    doc["x"] = o.x;
    doc["rho"] = o.rho;
    doc["value"] = ogp::clique_pair_exponent(o.alpha, o.x, o.rho);
  } else if (o.op_nexp) {
    doc["op"] = "npp_pair_exponent";
    doc["alpha"] = require_alpha(o, "theory --npp-exponent");
    if (std::isnan(o.rho)) throw std::invalid_argument("theory --npp-exponent: --rho is required");
    doc["rho"] = o.rho;
    doc["value"] = ogp::npp_pair_exponent(o.alpha, o.rho);
  } else if (o.op_rho0) {
    doc["op"] = "npp_rho0";
    doc["alpha"] = require_alpha(o, "theory --npp-rho0");
    doc["value"] = ogp::npp_rho0(o.alpha);
  } else {
    doc["op"] = "binary_entropy";
    if (std::isnan(o.q)) throw std::invalid_argument("theory --entropy: --q is required");
    doc["q"] = o.q;
    doc["value"] = ogp::binary_entropy(o.q);
  }
  doc["manifest"] = ctx.manifest;
  res.primary = dump_doc(doc);
  res.out_path = o.out;
}

// ---------------------------------------------------------------------------
// path

ogp::StepRule parse_rule(const std::string& text) {
  if (text == "resample") return ogp::StepRule::resample;
  if (text == "rotate") return ogp::StepRule::rotate;
  throw std::invalid_argument("--rule: expected resample or rotate, got '" + text + "'");
}

void run_path(const Ctx& ctx, RunResult& res, const std::string& model) {
  const Opt& o = ctx.opt;
  if (o.t < 0) throw std::invalid_argument("path: --t is required (0 <= t <= T)");
  const ogp::StepRule rule = parse_rule(o.rule_text);

  Json doc;
  doc["kind"] = "path_point";
  doc["model"] = model;
  doc["t"] = o.t;
  doc["rule"] = o.rule_text;
  doc["order_seed"] = o.order_seed;
  doc["epoch"] = o.epoch;

  if (model == "npp") {
    ogp::NppPath path(o.n, o.seed, o.order_seed, rule, o.epoch);
    doc["length"] = path.length();
    doc["coordinate_prev"] = (o.t >= 1 && rule == ogp::StepRule::resample)
                                 ? Json(path.coordinate_at(static_cast<int>(o.t) - 1))
                                 : Json(nullptr);
    doc["instance"] = ogp::instance_json(path.at(static_cast<int>(o.t)), o.payload);
  } else if (model == "graph") {
    ogp::GraphPath path(o.n, o.pedge, o.seed, o.order_seed, o.epoch);
    doc["length"] = path.length();
    if (o.t >= 1) {
      const long long rank = path.coordinate_at(o.t - 1);
      const auto [i, j] = ogp::pair_unrank(o.n, rank);
      doc["coordinate_prev"] = rank;
      doc["edge_prev"] = Json::array({i, j});
    } else {
      doc["coordinate_prev"] = nullptr;
    }
    doc["instance"] = ogp::instance_json(path.at(o.t), o.payload);
  } else if (model == "ksat") {
    const int m = derive_m(o, "path ksat");
    ogp::KsatPath path(o.n, m, o.k, o.seed, o.order_seed, o.epoch);
    doc["length"] = path.length();
    doc["coordinate_prev"] =
        o.t >= 1 ? Json(path.coordinate_at(static_cast<int>(o.t) - 1)) : Json(nullptr);
    doc["instance"] = ogp::instance_json(path.at(static_cast<int>(o.t)), o.payload);
  } else if (model == "pspin") {
    ogp::PSpinPath path(o.n, o.pbody, o.seed, o.order_seed, rule, o.epoch);
    doc["length"] = path.length();
    doc["coordinate_prev"] = (o.t >= 1 && rule == ogp::StepRule::resample)
                                 ? Json(path.coordinate_at(o.t - 1))
                                 : Json(nullptr);
    doc["instance"] = ogp::instance_json(path.at(o.t), o.payload);
  } else {
    throw std::invalid_argument("unknown path model: " + model);
  }
  doc["manifest"] = ctx.manifest;
  res.primary = dump_doc(doc);
  res.out_path = o.out;
}

// ---------------------------------------------------------------------------
// stability

long long effective_stride(long long requested, long long T) {
  if (requested >= 1) return requested;
  return std::max<long long>(1, T / 100);  // about 100 evaluations by default
}

template <class Sol>
void finish_stability(const Ctx& ctx, RunResult& res, const ogp::StabilityTrace<Sol>& trace) {
  std::string out = manifest_line(ctx.manifest);
  out += ogp::stability_csv(trace);
  out += "# summary " + ogp::stability_summary_json(trace).dump() + "\n";
  res.primary = out;
  res.out_path = ctx.opt.out;
}

void run_stability_kk(const Ctx& ctx, RunResult& res) {
  const Opt& o = ctx.opt;
  ogp::NppPath path(o.n, o.seed, o.order_seed, parse_rule(o.rule_text), o.epoch);
  const auto algo = [](const ogp::NppInstance& inst) {
    return std::optional<ogp::SignVector>(ogp::karmarkar_karp(inst).partition);
  };
  const auto objective = [](const ogp::NppInstance& inst, const ogp::SignVector& s) {
    return ogp::npp_value(inst, s);
  };
  finish_stability(ctx, res,
                   ogp::stability_run(path, algo, objective,
                                      effective_stride(o.stride, path.length())));
}

void run_stability_greedy(const Ctx& ctx, RunResult& res) {
  const Opt& o = ctx.opt;
  ogp::GraphPath path(o.n, o.pedge, o.seed, o.order_seed, o.epoch);
  const std::vector<int> order = greedy_order(o, o.n, o.seed);
  const auto algo = [&order](const ogp::GraphInstance& g) {
    return std::optional<ogp::NodeSubset>(ogp::greedy_clique(g, order));
  };
  const auto objective = [](const ogp::GraphInstance&, const ogp::NodeSubset& c) {
    return static_cast<double>(c.count());
  };
  finish_stability(ctx, res,
                   ogp::stability_run(path, algo, objective,
                                      effective_stride(o.stride, path.length())));
}

void run_stability_walksat(const Ctx& ctx, RunResult& res) {
  const Opt& o = ctx.opt;
  const int m = derive_m(o, "stability walksat");
  ogp::KsatPath path(o.n, m, o.k, o.seed, o.order_seed, o.epoch);
  const auto algo = [&o](const ogp::KsatInstance& f) {
    ogp::RngStream rng(o.walksat_seed);
    return std::optional<ogp::SignVector>(ogp::walksat(f, o.max_flips, o.noise, rng).assignment);
  };
  const auto objective = [](const ogp::KsatInstance& f, const ogp::SignVector& s) {
    return static_cast<double>(ogp::ksat_violations(f, s));
  };
  finish_stability(ctx, res,
                   ogp::stability_run(path, algo, objective,
                                      effective_stride(o.stride, path.length())));
}

// ---------------------------------------------------------------------------
// tuple-search: m branch instances (product schedule: branch b uses epoch b
// and its own order seed) at interpolation fraction f, one near-optimal set
// per branch, then the m-tuple scan.

void run_tuple_search(const Ctx& ctx, RunResult& res, const std::string& model) {
  const Opt& o = ctx.opt;
  if (o.tuple_m < 2) throw std::invalid_argument("tuple-search: --m must be >= 2");
  if (o.fraction < 0.0 || o.fraction > 1.0)
    throw std::invalid_argument("tuple-search: --fraction must be in [0, 1]");

  ogp::TupleSearchMode mode;
  if (o.search_mode == "exhaustive")
    mode = ogp::TupleSearchMode::exhaustive;
  else if (o.search_mode == "randomized")
    mode = ogp::TupleSearchMode::randomized;
  else
    throw std::invalid_argument("--mode: expected exhaustive or randomized");

  Json doc;
  doc["kind"] = "tuple_search_report";
  doc["model"] = model;
  doc["branches"] = o.tuple_m;
  doc["fraction"] = o.fraction;

  ogp::RngStream sample_rng(o.sample_seed);
  ogp::RngStream* rng = mode == ogp::TupleSearchMode::randomized ? &sample_rng : nullptr;

  if (model == "npp") {
    const double alpha = require_alpha(o, "tuple-search npp");
    const long long T = o.n;
    const int t = static_cast<int>(std::llround(o.fraction * static_cast<double>(T)));
    doc["t"] = t;
    doc["length"] = T;
    std::vector<ogp::SignSolutionSet> sets;
    Json sizes = Json::array();
    bool truncated = false;
    for (int b = 1; b <= o.tuple_m; ++b) {
      ogp::NppPath path(o.n, o.seed, o.order_seed + static_cast<std::uint64_t>(b),
                        ogp::StepRule::resample, static_cast<std::uint64_t>(b));
      auto set = ogp::enumerate_npp(path.at(t), alpha, o.cap,
                                    o.max_n > 0 ? o.max_n : ogp::kNppEnumMaxN);
      truncated = truncated || set.truncated;
      sizes.push_back(set.size());
      sets.push_back(std::move(set));
    }
    doc["set_sizes"] = std::move(sizes);
    doc["truncated"] = truncated;
    // Sign symmetry: tuples are compared in the quotient, |rho| in (nu1, nu2).
    const auto report = ogp::tuple_gap_search(sets, o.tuple_m, o.nu1, o.nu2, mode, o.budget,
                                              o.samples, rng, /*quotient_sign=*/true);
    doc["report"] = ogp::to_json(report);
  } else if (model == "clique") {
    if (o.kmin < 1) throw std::invalid_argument("tuple-search clique: --kmin >= 1 is required");
    const long long T = static_cast<long long>(o.n) * (o.n - 1) / 2;
    const long long t = std::llround(o.fraction * static_cast<double>(T));
    doc["t"] = t;
    doc["length"] = T;
    std::vector<ogp::NodeSolutionSet> sets;
    Json sizes = Json::array();
    bool truncated = false;
    for (int b = 1; b <= o.tuple_m; ++b) {
      ogp::GraphPath path(o.n, o.pedge, o.seed, o.order_seed + static_cast<std::uint64_t>(b),
                          static_cast<std::uint64_t>(b));
      auto set = ogp::enumerate_cliques(path.at(t), o.kmin, o.cap,
                                        o.max_n > 0 ? o.max_n : ogp::kCliqueEnumMaxN);
      truncated = truncated || set.truncated;
      sizes.push_back(set.size());
      sets.push_back(std::move(set));
    }
    doc["set_sizes"] = std::move(sizes);
    doc["truncated"] = truncated;
    const auto report = ogp::tuple_gap_search(sets, o.tuple_m, o.nu1, o.nu2, mode, o.budget,
                                              o.samples, rng, /*quotient_sign=*/false);
    doc["report"] = ogp::to_json(report);
  } else {
    throw std::invalid_argument("tuple-search supports models npp and clique");
  }
  doc["manifest"] = ctx.manifest;
  res.primary = dump_doc(doc);
  res.out_path = o.out;
}

// ---------------------------------------------------------------------------
// chaos

void run_chaos(const Ctx& ctx, RunResult& res) {
  const Opt& o = ctx.opt;
  const auto report = ogp::chaos_probe(o.n, o.pbody, o.seed, o.fraction, o.mu, o.cap,
                                       o.max_n > 0 ? o.max_n : ogp::kChaosMaxN);
  Json doc = ogp::to_json(report);
  doc["manifest"] = ctx.manifest;
  res.primary = dump_doc(doc);
  res.out_path = o.out;
}

// ---------------------------------------------------------------------------
// sweep: cartesian product of a parameter grid and a seed list; one raw CSV
// row per cell, plus a per-grid-point summary CSV.

struct SweepOut {
  std::string header;
  std::vector<std::string> rows;
  std::string summary_header;
  std::vector<std::string> summary_rows;
};

void finish_sweep(const Ctx& ctx, RunResult& res, const SweepOut& sw) {
  std::string raw = manifest_line(ctx.manifest) + sw.header + "\n";
  for (const auto& r : sw.rows) raw += r + "\n";
  res.primary = std::move(raw);
  res.out_path = ctx.opt.out;

  Json summary_manifest = ctx.manifest;
  summary_manifest["section"] = "summary";
  std::string summary = manifest_line(summary_manifest) + sw.summary_header + "\n";
  for (const auto& r : sw.summary_rows) summary += r + "\n";
  std::string spath = ctx.opt.summary_out;
  if (spath.empty() && !ctx.opt.out.empty()) spath = ctx.opt.out + ".summary.csv";
  if (!spath.empty()) res.summary = std::make_pair(spath, std::move(summary));
}

void run_sweep_sat(const Ctx& ctx, RunResult& res) {
  const Opt& o = ctx.opt;
  if (o.n < 1) throw std::invalid_argument("sweep sat: --n is required");
  const std::vector<double> alphas = parse_grid(o.alpha_text, "--alpha");
  const std::vector<std::uint64_t> seeds = parse_seeds(o.seeds_text);
  const std::size_t cells = alphas.size() * seeds.size();

  SweepOut sw;
  sw.header = "alpha,n,m,k,seed,sat,decisions";
  sw.rows.assign(cells, std::string());
  std::vector<int> sat_count(alphas.size(), 0);

  std::vector<int> ms(alphas.size());
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    const long long m = std::llround(alphas[a] * o.n);
    if (m < 1) throw std::invalid_argument("sweep sat: alpha * n rounds to zero clauses");
    ms[a] = static_cast<int>(m);
  }

  std::vector<long long> decisions(cells, 0);
  std::vector<char> sat(cells, 0);
  parallel_cells(cells, o.workers, [&](std::size_t cell) {
    const std::size_t a = cell / seeds.size();
    const std::size_t s = cell % seeds.size();
    const auto f = ogp::gen_ksat(o.n, ms[a], o.k, seeds[s]);
    const auto r = ogp::dpll_sat(f);
    sat[cell] = r.satisfiable ? 1 : 0;
    decisions[cell] = r.decisions;
    sw.rows[cell] = ogp::format_double(alphas[a]) + "," + std::to_string(o.n) + "," +
                    std::to_string(ms[a]) + "," + std::to_string(o.k) + "," +
                    std::to_string(seeds[s]) + "," + std::to_string(r.satisfiable ? 1 : 0) +
                    "," + std::to_string(r.decisions);
  });
  for (std::size_t cell = 0; cell < cells; ++cell)
    sat_count[cell / seeds.size()] += sat[cell];

  sw.summary_header = "alpha,n,m,k,seeds,sat_fraction";
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    const double frac = static_cast<double>(sat_count[a]) / static_cast<double>(seeds.size());
    sw.summary_rows.push_back(ogp::format_double(alphas[a]) + "," + std::to_string(o.n) + "," +
                              std::to_string(ms[a]) + "," + std::to_string(o.k) + "," +
                              std::to_string(seeds.size()) + "," + ogp::format_double(frac));
  }
  finish_sweep(ctx, res, sw);
}

void run_sweep_kk(const Ctx& ctx, RunResult& res) {
  const Opt& o = ctx.opt;
  const std::vector<int> ns = parse_int_grid(o.n_text, "--n");
  const std::vector<std::uint64_t> seeds = parse_seeds(o.seeds_text);
  const std::size_t cells = ns.size() * seeds.size();

  SweepOut sw;
  // log2_scaled = log2(discrepancy * 2^n / sqrt(n)), the paper-scale view of
  // how far the heuristic sits above the optimum's magnitude.
  sw.header = "n,seed,discrepancy,log2_scaled";
  sw.rows.assign(cells, std::string());
  std::vector<double> disc(cells, 0.0);

  parallel_cells(cells, o.workers, [&](std::size_t cell) {
    const std::size_t ni = cell / seeds.size();
    const std::size_t s = cell % seeds.size();
    const int n = ns[ni];
    const auto inst = ogp::gen_npp(n, seeds[s]);
    const double d = ogp::karmarkar_karp(inst).discrepancy;
    disc[cell] = d;
    const double scaled = std::log2(d) + n - 0.5 * std::log2(static_cast<double>(n));
    sw.rows[cell] = std::to_string(n) + "," + std::to_string(seeds[s]) + "," +
                    ogp::format_double(d) + "," + ogp::format_double(scaled);
  });

  sw.summary_header = "n,seeds,mean_discrepancy,min_discrepancy,max_discrepancy";
  for (std::size_t ni = 0; ni < ns.size(); ++ni) {
    double sum = 0.0, lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      const double d = disc[ni * seeds.size() + s];
      sum += d;
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    sw.summary_rows.push_back(std::to_string(ns[ni]) + "," + std::to_string(seeds.size()) + "," +
                              ogp::format_double(sum / static_cast<double>(seeds.size())) + "," +
                              ogp::format_double(lo) + "," + ogp::format_double(hi));
  }
  finish_sweep(ctx, res, sw);
}

void run_sweep_greedy(const Ctx& ctx, RunResult& res) {
  const Opt& o = ctx.opt;
  const std::vector<int> ns = parse_int_grid(o.n_text, "--n");
  const std::vector<std::uint64_t> seeds = parse_seeds(o.seeds_text);
  const std::size_t cells = ns.size() * seeds.size();

  SweepOut sw;
  sw.header = "n,p,seed,size";
  sw.rows.assign(cells, std::string());
  std::vector<int> size(cells, 0);

  parallel_cells(cells, o.workers, [&](std::size_t cell) {
    const std::size_t ni = cell / seeds.size();
    const std::size_t s = cell % seeds.size();
    const int n = ns[ni];
    const auto g = ogp::gen_gnp(n, o.pedge, seeds[s]);
    const auto clique = ogp::greedy_clique(g, greedy_order(o, n, seeds[s]));
    size[cell] = clique.count();
    sw.rows[cell] = std::to_string(n) + "," + ogp::format_double(o.pedge) + "," +
                    std::to_string(seeds[s]) + "," + std::to_string(size[cell]);
  });

  sw.summary_header = "n,p,seeds,mean_size,min_size,max_size";
  for (std::size_t ni = 0; ni < ns.size(); ++ni) {
    double sum = 0.0;
    int lo = std::numeric_limits<int>::max(), hi = 0;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      const int d = size[ni * seeds.size() + s];
      sum += d;
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    sw.summary_rows.push_back(std::to_string(ns[ni]) + "," + ogp::format_double(o.pedge) + "," +
                              std::to_string(seeds.size()) + "," +
                              ogp::format_double(sum / static_cast<double>(seeds.size())) + "," +
                              std::to_string(lo) + "," + std::to_string(hi));
  }
  finish_sweep(ctx, res, sw);
}

// ---------------------------------------------------------------------------
// verify: read a primary output, extract its manifest, re-run (sweeps: first
// seed only) and check the regenerated content against the file.

int run_tokens(const std::vector<std::string>& raw_tokens, RunResult& result);

void run_verify(const Ctx& ctx, RunResult& res) {
  const std::string& path = ctx.opt.verify_file;
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("verify: cannot read file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  const std::string original = buf.str();

  Json manifest;
  if (starts_with(original, "# ")) {
    const auto eol = original.find('\n');
    manifest = Json::parse(original.substr(2, eol - 2), nullptr, false);
  } else {
    const Json doc = Json::parse(original, nullptr, false);
    if (!doc.is_discarded() && doc.contains("manifest")) manifest = doc["manifest"];
  }
  if (manifest.is_discarded() || !manifest.is_object() || !manifest.contains("argv"))
    throw std::invalid_argument("verify: no manifest found in " + path);
  if (manifest.contains("section") && manifest["section"] == "summary")
    throw std::invalid_argument(
        "verify: expected a primary output; summary tables aggregate over all seeds and "
        "cannot be spot-checked from one");

  std::vector<std::string> tokens;
  for (const auto& t : manifest["argv"]) tokens.push_back(t.get<std::string>());
  if (tokens.empty() || tokens.front() == "verify")
    throw std::invalid_argument("verify: manifest does not describe a runnable command");

  const bool sweep = tokens.front() == "sweep";
  if (sweep) {
    bool rewrote = false;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i] == "--seeds" && i + 1 < tokens.size()) {
        tokens[i + 1] = std::to_string(parse_seeds(tokens[i + 1]).front());
        rewrote = true;
      } else if (starts_with(tokens[i], "--seeds=")) {
        tokens[i] = "--seeds=" + std::to_string(parse_seeds(tokens[i].substr(8)).front());
        rewrote = true;
      }
    }
    if (!rewrote) throw std::invalid_argument("verify: sweep manifest has no --seeds");
  }

  RunResult rerun;
  const int code = run_tokens(tokens, rerun);
  if (code != 0) throw std::invalid_argument("verify: stored manifest failed to re-run");

  bool ok = false;
  std::string mode;
  if (!sweep) {
    mode = "byte-identical";
    ok = rerun.primary == original;
  } else {
    // Every regenerated first-seed row (and the header) must appear verbatim
    // in the original; the manifest lines differ by the seed rewrite.
    mode = "first-seed-rows";
    std::set<std::string> original_lines;
    for (const auto& line : split(original, '\n')) original_lines.insert(line);
    const auto regen_lines = split(rerun.primary, '\n');
    ok = regen_lines.size() > 2;
    for (std::size_t i = 1; i < regen_lines.size(); ++i) {
      if (regen_lines[i].empty() && i + 1 == regen_lines.size()) break;
      if (original_lines.find(regen_lines[i]) == original_lines.end()) {
        ok = false;
        break;
      }
    }
  }

  Json doc;
  doc["kind"] = "verify";
  doc["file"] = path;
  doc["command"] = tokens.front();
  doc["mode"] = mode;
  doc["verified"] = ok;
  doc["manifest"] = ctx.manifest;
  res.primary = dump_doc(doc);
  res.out_path = ctx.opt.out;
  res.exit_code = ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Option wiring.

void add_out_opts(CLI::App* cmd, Opt& o) {
  cmd->add_option("--out", o.out, "Write the primary output to this path (default: stdout)");
}

void add_seed_opt(CLI::App* cmd, Opt& o) {
  cmd->add_option("--seed", o.seed, "Instance seed")->capture_default_str();
}

void add_cap_opts(CLI::App* cmd, Opt& o) {
  cmd->add_option("--cap", o.cap, "Solution-set size cap (sets truncated flag)")
      ->capture_default_str();
  cmd->add_option("--max-n", o.max_n,
                  "Explicit enumeration guard override (default: per-oracle guard)");
}

void add_ksat_size_opts(CLI::App* cmd, Opt& o) {
  cmd->add_option("--m", o.m, "Clause count (alternative to --alpha)");
  cmd->add_option("--alpha", o.alpha, "Clause ratio; m = round(alpha * n)");
  cmd->add_option("--k", o.k, "Literals per clause")->capture_default_str();
}

int run_tokens(const std::vector<std::string>& raw_tokens, RunResult& result) {
  const std::vector<std::string> tokens = merge_config(raw_tokens);

  Ctx ctx;
  Opt& o = ctx.opt;
  o.workers = env_workers();
  ctx.manifest = make_manifest(tokens);

  CLI::App app{"Overlap-gap laboratory: generate random instances, run heuristics,\n"
               "enumerate near-optimal sets, measure overlap spectra and gaps, and\n"
               "drive correlated-instance interpolation experiments."};
  app.name(kToolName);
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.footer(
      "Ranges: real grids as lo:hi:step (inclusive) or v1,v2,...; seeds as a..b or s1,s2,....\n"
      "A JSON --config file supplies long options by key; command-line flags win.\n"
      "OGP_WORKERS sets the default --workers.\n"
      "Exit codes: 0 ok, 1 verification mismatch, 2 validation error, 3 guard refusal,\n"
      "4 output I/O error.");

  // Every subcommand accepts --config (handled before parsing); declare it
  // so it shows in help.
  std::string config_doc;
  app.add_option("--config", config_doc, "JSON config file; keys are long option names")
      ->group("Global");

  // gen ------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Emit an instance manifest");
  gen->require_subcommand(1);
  {
    auto* c = gen->add_subcommand("npp", "Gaussian number-partitioning weights");
    c->add_option("--n", o.n, "Number of weights")->required();
    add_seed_opt(c, o);
    c->add_flag("--payload", o.payload, "Embed the full payload, not just the digest");
    add_out_opts(c, o);
    c->callback([&] { run_gen_npp(ctx, result); });
  }
  {
    auto* c = gen->add_subcommand("graph", "G(n, p) adjacency");
    c->add_option("--n", o.n, "Nodes")->required();
    c->add_option("--p", o.pedge, "Edge probability")->capture_default_str();
    add_seed_opt(c, o);
    c->add_flag("--payload", o.payload, "Embed the full payload, not just the digest");
    add_out_opts(c, o);
    c->callback([&] { run_gen_graph(ctx, result); });
  }
  {
    auto* c = gen->add_subcommand("ksat", "Random K-SAT formula");
    c->add_option("--n", o.n, "Variables")->required();
    add_ksat_size_opts(c, o);
    add_seed_opt(c, o);
    c->add_flag("--payload", o.payload, "Embed the full payload, not just the digest");
    add_out_opts(c, o);
    c->callback([&] { run_gen_ksat(ctx, result); });
  }
  {
    auto* c = gen->add_subcommand("pspin", "p-spin coupling tensor");
    c->add_option("--n", o.n, "Spins")->required();
    c->add_option("--p", o.pbody, "Interaction order (tensor rank)")->capture_default_str();
    add_seed_opt(c, o);
    c->add_flag("--payload", o.payload, "Embed the full payload, not just the digest");
    add_out_opts(c, o);
    c->callback([&] { run_gen_pspin(ctx, result); });
  }
  {
    auto* c = gen->add_subcommand("perceptron", "Gaussian disorder rows + margin");
    c->add_option("--n", o.n, "Dimension")->required();
    c->add_option("--m", o.m, "Constraint rows (alternative to --alpha)");
    c->add_option("--alpha", o.alpha, "Row ratio; m = round(alpha * n)");
    c->add_option("--kappa", o.kappa, "Margin threshold")->required();
    add_seed_opt(c, o);
    c->add_flag("--payload", o.payload, "Embed the full payload, not just the digest");
    add_out_opts(c, o);
    c->callback([&] { run_gen_perceptron(ctx, result); });
  }

  // solve ------------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "Run a named heuristic");
  solve->require_subcommand(1);
  {
    auto* c = solve->add_subcommand("kk", "Karmarkar-Karp differencing");
    c->add_option("--n", o.n, "Number of weights (with --seed)");
    add_seed_opt(c, o);
    c->add_option("--weights", o.weights_text, "Explicit comma-separated weights");
    c->add_flag("--payload", o.payload, "Embed the instance payload");
    add_out_opts(c, o);
    c->callback([&] { run_solve_kk(ctx, result); });
  }
  {
    auto* c = solve->add_subcommand("greedy", "Greedy clique scan");
    c->add_option("--n", o.n, "Nodes")->required();
    c->add_option("--p", o.pedge, "Edge probability")->capture_default_str();
    add_seed_opt(c, o);
    c->add_option("--order", o.order_text, "Node scan order: identity | random")
        ->capture_default_str();
    c->add_option("--order-seed", o.node_order_seed, "Seed for --order random")
        ->capture_default_str();
    c->add_flag("--payload", o.payload, "Embed the instance payload");
    add_out_opts(c, o);
    c->callback([&] { run_solve_greedy(ctx, result); });
  }
  {
    auto* c = solve->add_subcommand("walksat", "WalkSAT with fixed draw order");
    c->add_option("--n", o.n, "Variables")->required();
    add_ksat_size_opts(c, o);
    add_seed_opt(c, o);
    c->add_option("--walksat-seed", o.walksat_seed, "Seed of the solver's own stream")
        ->capture_default_str();
    c->add_option("--noise", o.noise, "Noise probability")->capture_default_str();
    c->add_option("--max-flips", o.max_flips, "Flip budget")->capture_default_str();
    c->add_flag("--payload", o.payload, "Embed the instance payload");
    add_out_opts(c, o);
    c->callback([&] { run_solve_walksat(ctx, result); });
  }

  // enumerate ----------------------------------------------------------------
  auto* enumerate = app.add_subcommand("enumerate", "Oracle enumeration of near-optimal sets");
  enumerate->require_subcommand(1);
  {
    auto* c = enumerate->add_subcommand("npp", "|<s, X>| <= sqrt(n) 2^(-alpha n)");
    c->add_option("--n", o.n, "Weights")->required();
    add_seed_opt(c, o);
    c->add_option("--alpha", o.alpha, "Threshold rate")->required();
    c->add_flag("--orbit", o.orbit, "Include mirrored (global sign flip) representatives");
    add_cap_opts(c, o);
    c->add_flag("--no-entries", o.no_entries, "Summary only, omit solutions");
    add_out_opts(c, o);
    c->callback([&] { run_enumerate(ctx, result, "npp"); });
  }
  {
    auto* c = enumerate->add_subcommand("clique", "All cliques of size >= kmin");
    c->add_option("--n", o.n, "Nodes")->required();
    c->add_option("--p", o.pedge, "Edge probability")->capture_default_str();
    add_seed_opt(c, o);
    c->add_option("--kmin", o.kmin, "Minimum clique size")->required();
    add_cap_opts(c, o);
    c->add_flag("--no-entries", o.no_entries, "Summary only, omit solutions");
    add_out_opts(c, o);
    c->callback([&] { run_enumerate(ctx, result, "clique"); });
  }
  {
    auto* c = enumerate->add_subcommand("sat", "All satisfying assignments");
    c->add_option("--n", o.n, "Variables")->required();
    add_ksat_size_opts(c, o);
    add_seed_opt(c, o);
    add_cap_opts(c, o);
    c->add_flag("--no-entries", o.no_entries, "Summary only, omit solutions");
    add_out_opts(c, o);
    c->callback([&] { run_enumerate(ctx, result, "sat"); });
  }
  {
    auto* c = enumerate->add_subcommand("perceptron", "All margin-feasible sign vectors");
    c->add_option("--n", o.n, "Dimension")->required();
    c->add_option("--m", o.m, "Constraint rows (alternative to --alpha)");
    c->add_option("--alpha", o.alpha, "Row ratio; m = round(alpha * n)");
    c->add_option("--kappa", o.kappa, "Margin threshold")->required();
    add_seed_opt(c, o);
    add_cap_opts(c, o);
    c->add_flag("--no-entries", o.no_entries, "Summary only, omit solutions");
    add_out_opts(c, o);
    c->callback([&] { run_enumerate(ctx, result, "perceptron"); });
  }
  {
    auto* c = enumerate->add_subcommand("pspin", "States within mu of the ground energy");
    c->add_option("--n", o.n, "Spins")->required();
    c->add_option("--p", o.pbody, "Interaction order")->capture_default_str();
    add_seed_opt(c, o);
    c->add_option("--mu", o.mu, "Energy window above the ground state")->required();
    add_cap_opts(c, o);
    c->add_flag("--no-entries", o.no_entries, "Summary only, omit solutions");
    add_out_opts(c, o);
    c->callback([&] { run_enumerate(ctx, result, "pspin"); });
  }

  // spectrum -----------------------------------------------------------------
  auto* spectrum = app.add_subcommand("spectrum", "Pairwise overlap spectrum + gap detection");
  spectrum->require_subcommand(1);
  auto add_spectrum_opts = [&](CLI::App* c) {
    c->add_option("--mode", o.mode_text, "overlap | intersection")->capture_default_str();
    c->add_flag("--quotient", o.quotient_flag, "Force the sign quotient |rho|");
    c->add_flag("--raw", o.raw_flag, "Force raw (signed) values");
    c->add_option("--min-width", o.min_width, "Minimum reportable gap width")
        ->capture_default_str();
    c->add_option("--floor", o.search_floor,
                  "Gap search floor (default: 0 when quotiented, else -1)");
    c->add_option("--bins", o.bins, "Histogram bins in the report (0 = none)")
        ->capture_default_str();
    c->add_flag("--entries", o.entries, "Embed the raw pair values");
    c->add_option("--workers", o.workers, "Worker threads for the pair scan")
        ->capture_default_str();
    add_out_opts(c, o);
  };
  {
    auto* c = spectrum->add_subcommand("npp", "Sign-overlap spectrum of near-optimal partitions");
    c->add_option("--n", o.n, "Weights")->required();
    add_seed_opt(c, o);
    c->add_option("--alpha", o.alpha, "Threshold rate")->required();
    c->add_flag("--no-orbit", o.no_orbit, "Keep canonical representatives only");
    add_cap_opts(c, o);
    add_spectrum_opts(c);
    c->callback([&] { run_spectrum(ctx, result, "npp"); });
  }
  {
    auto* c = spectrum->add_subcommand("clique", "Normalized-intersection spectrum of cliques");
    c->add_option("--n", o.n, "Nodes")->required();
    c->add_option("--p", o.pedge, "Edge probability")->capture_default_str();
    add_seed_opt(c, o);
    c->add_option("--kmin", o.kmin, "Minimum clique size")->required();
    add_cap_opts(c, o);
    add_spectrum_opts(c);
    c->callback([&, c] {
      // Cliques default to normalized intersection; --mode overlap opts out.
      if (c->count("--mode") == 0) o.mode_text = "intersection";
      run_spectrum(ctx, result, "clique");
    });
  }
  {
    auto* c = spectrum->add_subcommand("sat", "Sign-overlap spectrum of satisfying assignments");
    c->add_option("--n", o.n, "Variables")->required();
    add_ksat_size_opts(c, o);
    add_seed_opt(c, o);
    add_cap_opts(c, o);
    add_spectrum_opts(c);
    c->callback([&] { run_spectrum(ctx, result, "sat"); });
  }
  {
    auto* c = spectrum->add_subcommand("perceptron", "Spectrum of margin-feasible vectors");
    c->add_option("--n", o.n, "Dimension")->required();
    c->add_option("--m", o.m, "Constraint rows (alternative to --alpha)");
    c->add_option("--alpha", o.alpha, "Row ratio; m = round(alpha * n)");
    c->add_option("--kappa", o.kappa, "Margin threshold")->required();
    add_seed_opt(c, o);
    add_cap_opts(c, o);
    add_spectrum_opts(c);
    c->callback([&] { run_spectrum(ctx, result, "perceptron"); });
  }
  {
    auto* c = spectrum->add_subcommand("pspin", "Spectrum of mu-near-ground states");
    c->add_option("--n", o.n, "Spins")->required();
    c->add_option("--p", o.pbody, "Interaction order")->capture_default_str();
    add_seed_opt(c, o);
    c->add_option("--mu", o.mu, "Energy window above the ground state")->required();
    add_cap_opts(c, o);
    add_spectrum_opts(c);
    c->callback([&] { run_spectrum(ctx, result, "pspin"); });
  }

  // cluster ------------------------------------------------------------------
  auto* cluster = app.add_subcommand("cluster", "Radius-r cluster decomposition");
  cluster->require_subcommand(1);
  auto add_cluster_opts = [&](CLI::App* c) {
    c->add_option("--radius", o.radius, "Union-find radius (Hamming)")->required();
    c->add_flag("--members", o.members, "Embed per-cluster member index lists");
    add_out_opts(c, o);
  };
  {
    auto* c = cluster->add_subcommand("npp", "Clusters of near-optimal partitions");
    c->add_option("--n", o.n, "Weights")->required();
    add_seed_opt(c, o);
    c->add_option("--alpha", o.alpha, "Threshold rate")->required();
    c->add_flag("--orbit", o.orbit, "Decompose the full sign orbit");
    add_cap_opts(c, o);
    add_cluster_opts(c);
    c->callback([&] { run_cluster(ctx, result, "npp"); });
  }
  {
    auto* c = cluster->add_subcommand("clique", "Clusters of cliques");
    c->add_option("--n", o.n, "Nodes")->required();
    c->add_option("--p", o.pedge, "Edge probability")->capture_default_str();
    add_seed_opt(c, o);
    c->add_option("--kmin", o.kmin, "Minimum clique size")->required();
    add_cap_opts(c, o);
    add_cluster_opts(c);
    c->callback([&] { run_cluster(ctx, result, "clique"); });
  }
  {
    auto* c = cluster->add_subcommand("sat", "Clusters of satisfying assignments");
    c->add_option("--n", o.n, "Variables")->required();
    add_ksat_size_opts(c, o);
    add_seed_opt(c, o);
    add_cap_opts(c, o);
    add_cluster_opts(c);
    c->callback([&] { run_cluster(ctx, result, "sat"); });
  }
  {
    auto* c = cluster->add_subcommand("perceptron", "Clusters of margin-feasible vectors");
    c->add_option("--n", o.n, "Dimension")->required();
    c->add_option("--m", o.m, "Constraint rows (alternative to --alpha)");
    c->add_option("--alpha", o.alpha, "Row ratio; m = round(alpha * n)");
    c->add_option("--kappa", o.kappa, "Margin threshold")->required();
    add_seed_opt(c, o);
    add_cap_opts(c, o);
    add_cluster_opts(c);
    c->callback([&] { run_cluster(ctx, result, "perceptron"); });
  }
  {
    auto* c = cluster->add_subcommand("pspin", "Clusters of mu-near-ground states");
    c->add_option("--n", o.n, "Spins")->required();
    c->add_option("--p", o.pbody, "Interaction order")->capture_default_str();
    add_seed_opt(c, o);
    c->add_option("--mu", o.mu, "Energy window above the ground state")->required();
    add_cap_opts(c, o);
    add_cluster_opts(c);
    c->callback([&] { run_cluster(ctx, result, "pspin"); });
  }

  // theory ---------------------------------------------------------------
  {
    auto* c = app.add_subcommand("theory", "First-moment exponents and overlap curves");
    c->add_flag("--clique-curve", o.op_curve, "CSV of x1/x2 roots over a rho grid");
    c->add_flag("--rho-star", o.op_rho_star, "Vanishing point of the high-overlap branch");
    c->add_flag("--clique-roots", o.op_roots, "Roots of the clique pair exponent");
    c->add_flag("--clique-exponent", o.op_cexp, "Evaluate the clique pair exponent");
    c->add_flag("--npp-exponent", o.op_nexp, "Evaluate the partition pair exponent");
    c->add_flag("--npp-rho0", o.op_rho0, "Positive zero of the partition pair exponent");
    c->add_flag("--entropy", o.op_entropy, "Binary entropy (nats)");
    c->add_option("--alpha", o.alpha, "Rate parameter");
    c->add_option("--rho", o.rho, "Overlap parameter");
    c->add_option("--x", o.x, "Clique size ratio parameter");
    c->add_option("--q", o.q, "Entropy argument");
    c->add_option("--grid", o.grid, "Rho step for --clique-curve")->capture_default_str();
    add_out_opts(c, o);
    c->callback([&] { run_theory(ctx, result); });
  }

  // path -----------------------------------------------------------------
  auto* path = app.add_subcommand("path", "Materialize one step of an interpolation path");
  path->require_subcommand(1);
  auto add_path_opts = [&](CLI::App* c, bool with_rule) {
    c->add_option("--order-seed", o.order_seed, "Seed of the coordinate order")
        ->capture_default_str();
    c->add_option("--epoch", o.epoch, "Resample epoch (branch key)")->capture_default_str();
    c->add_option("--t", o.t, "Step index in [0, T]")->required();
    if (with_rule)
      c->add_option("--rule", o.rule_text, "resample | rotate")->capture_default_str();
    c->add_flag("--payload", o.payload, "Embed the instance payload");
    add_out_opts(c, o);
  };
  {
    auto* c = path->add_subcommand("npp", "Weight-resampling path (T = n)");
    c->add_option("--n", o.n, "Weights")->required();
    add_seed_opt(c, o);
    add_path_opts(c, true);
    c->callback([&] { run_path(ctx, result, "npp"); });
  }
  {
    auto* c = path->add_subcommand("graph", "Edge-resampling path (T = n(n-1)/2)");
    c->add_option("--n", o.n, "Nodes")->required();
    c->add_option("--p", o.pedge, "Edge probability")->capture_default_str();
    add_seed_opt(c, o);
    add_path_opts(c, false);
    c->callback([&] { run_path(ctx, result, "graph"); });
  }
  {
    auto* c = path->add_subcommand("ksat", "Clause-resampling path (T = m)");
    c->add_option("--n", o.n, "Variables")->required();
    add_ksat_size_opts(c, o);
    add_seed_opt(c, o);
    add_path_opts(c, false);
    c->callback([&] { run_path(ctx, result, "ksat"); });
  }
  {
    auto* c = path->add_subcommand("pspin", "Coupling-resampling path (T = n^p)");
    c->add_option("--n", o.n, "Spins")->required();
    c->add_option("--p", o.pbody, "Interaction order")->capture_default_str();
    add_seed_opt(c, o);
    add_path_opts(c, true);
    c->callback([&] { run_path(ctx, result, "pspin"); });
  }

  // stability --------------------------------------------------------------
  auto* stability = app.add_subcommand("stability", "Algorithm trace along a path (CSV)");
  stability->require_subcommand(1);
  auto add_stability_opts = [&](CLI::App* c) {
    c->add_option("--order-seed", o.order_seed, "Seed of the coordinate order")
        ->capture_default_str();
    c->add_option("--epoch", o.epoch, "Resample epoch (branch key)")->capture_default_str();
    c->add_option("--stride", o.stride, "Evaluate every stride-th step (0 = auto)")
        ->capture_default_str();
    add_out_opts(c, o);
  };
  {
    auto* c = stability->add_subcommand("kk", "Karmarkar-Karp along a weight path");
    c->add_option("--n", o.n, "Weights")->required();
    add_seed_opt(c, o);
    c->add_option("--rule", o.rule_text, "resample | rotate")->capture_default_str();
    add_stability_opts(c);
    c->callback([&] { run_stability_kk(ctx, result); });
  }
  {
    auto* c = stability->add_subcommand("greedy", "Greedy clique along an edge path");
    c->add_option("--n", o.n, "Nodes")->required();
    c->add_option("--p", o.pedge, "Edge probability")->capture_default_str();
    add_seed_opt(c, o);
    c->add_option("--order", o.order_text, "Node scan order: identity | random")
        ->capture_default_str();
    c->add_option("--node-order-seed", o.node_order_seed, "Seed for --order random")
        ->capture_default_str();
    add_stability_opts(c);
    c->callback([&] { run_stability_greedy(ctx, result); });
  }
  {
    auto* c = stability->add_subcommand("walksat", "WalkSAT along a clause path");
    c->add_option("--n", o.n, "Variables")->required();
    add_ksat_size_opts(c, o);
    add_seed_opt(c, o);
    c->add_option("--walksat-seed", o.walksat_seed, "Seed of the solver's own stream")
        ->capture_default_str();
    c->add_option("--noise", o.noise, "Noise probability")->capture_default_str();
    c->add_option("--max-flips", o.max_flips, "Flip budget")->capture_default_str();
    add_stability_opts(c);
    c->callback([&] { run_stability_walksat(ctx, result); });
  }

  // tuple-search -------------------------------------------------------------
  auto* ts = app.add_subcommand("tuple-search", "m-tuple forbidden-overlap search");
  ts->require_subcommand(1);
  auto add_tuple_opts = [&](CLI::App* c) {
    c->add_option("--m", o.tuple_m, "Tuple size (branches)")->required();
    c->add_option("--nu1", o.nu1, "Forbidden interval lower edge")->required();
    c->add_option("--nu2", o.nu2, "Forbidden interval upper edge")->required();
    c->add_option("--fraction", o.fraction, "Interpolation fraction t/T of each branch")
        ->capture_default_str();
    c->add_option("--order-seed", o.order_seed, "Base order seed (branch b adds b)")
        ->capture_default_str();
    c->add_option("--mode", o.search_mode, "exhaustive | randomized")->capture_default_str();
    c->add_option("--samples", o.samples, "Randomized-mode trial count")->capture_default_str();
    c->add_option("--sample-seed", o.sample_seed, "Randomized-mode stream seed")
        ->capture_default_str();
    c->add_option("--budget", o.budget, "Exhaustive-mode pair-evaluation budget")
        ->capture_default_str();
    add_out_opts(c, o);
  };
  {
    auto* c = ts->add_subcommand("npp", "Tuples of near-optimal partitions");
    c->add_option("--n", o.n, "Weights")->required();
    add_seed_opt(c, o);
    c->add_option("--alpha", o.alpha, "Threshold rate")->required();
    add_cap_opts(c, o);
    add_tuple_opts(c);
    c->callback([&] { run_tuple_search(ctx, result, "npp"); });
  }
  {
    auto* c = ts->add_subcommand("clique", "Tuples of cliques");
    c->add_option("--n", o.n, "Nodes")->required();
    c->add_option("--p", o.pedge, "Edge probability")->capture_default_str();
    add_seed_opt(c, o);
    c->add_option("--kmin", o.kmin, "Minimum clique size")->required();
    add_cap_opts(c, o);
    add_tuple_opts(c);
    c->callback([&] { run_tuple_search(ctx, result, "clique"); });
  }

  // chaos ----------------------------------------------------------------
  {
    auto* c = app.add_subcommand("chaos", "Cross-overlap of near-ground sets under resampling");
    c->add_option("--n", o.n, "Spins")->required();
    c->add_option("--p", o.pbody, "Interaction order")->capture_default_str();
    add_seed_opt(c, o);
    c->add_option("--fraction", o.fraction, "Fraction of couplings resampled")->required();
    c->add_option("--mu", o.mu, "Energy window above each ground state")->required();
    add_cap_opts(c, o);
    add_out_opts(c, o);
    c->callback([&] { run_chaos(ctx, result); });
  }

  // sweep ----------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "Grid x seeds experiment; raw + summary CSV");
  sweep->require_subcommand(1);
  auto add_sweep_opts = [&](CLI::App* c) {
    c->add_option("--seeds", o.seeds_text, "Seeds: a..b or s1,s2,...")->required();
    c->add_option("--workers", o.workers, "Worker threads over cells")->capture_default_str();
    c->add_option("--summary-out", o.summary_out,
                  "Summary CSV path (default: <out>.summary.csv)");
    add_out_opts(c, o);
  };
  {
    auto* c = sweep->add_subcommand("sat", "DPLL satisfiability vs clause ratio");
    c->add_option("--n", o.n, "Variables")->required();
    c->add_option("--k", o.k, "Literals per clause")->capture_default_str();
    c->add_option("--alpha", o.alpha_text, "Clause-ratio grid: lo:hi:step or list")->required();
    add_sweep_opts(c);
    c->callback([&] { run_sweep_sat(ctx, result); });
  }
  {
    auto* c = sweep->add_subcommand("kk", "Karmarkar-Karp discrepancy vs n");
    c->add_option("--n", o.n_text, "Size grid: lo:hi:step or list")->required();
    add_sweep_opts(c);
    c->callback([&] { run_sweep_kk(ctx, result); });
  }
  {
    auto* c = sweep->add_subcommand("greedy", "Greedy clique size vs n");
    c->add_option("--n", o.n_text, "Size grid: lo:hi:step or list")->required();
    c->add_option("--p", o.pedge, "Edge probability")->capture_default_str();
    c->add_option("--order", o.order_text, "Node scan order: identity | random")
        ->capture_default_str();
    c->add_option("--node-order-seed", o.node_order_seed, "Seed for --order random")
        ->capture_default_str();
    add_sweep_opts(c);
    c->callback([&] { run_sweep_greedy(ctx, result); });
  }

  // verify ---------------------------------------------------------------
  {
    auto* c = app.add_subcommand("verify", "Re-run an output file's manifest and compare");
    c->add_option("file", o.verify_file, "Primary output file (CSV or JSON)")->required();
    add_out_opts(c, o);
    c->callback([&] { run_verify(ctx, result); });
  }

  try {
    std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> tokens(argv + 1, argv + argc);
  RunResult res;
  int code = 0;
  try {
    code = run_tokens(tokens, res);
    if (code == 0 || code == 1) {
      write_file_or_stdout(res.out_path, res.primary);
      if (res.summary.has_value())
        write_file_or_stdout(res.summary->first, res.summary->second);
    }
  } catch (const ogp::guard_error& e) {
    std::cerr << kToolName << ": guard refusal: " << e.what() << "\n";
    return 3;
  } catch (const io_error& e) {
    std::cerr << kToolName << ": " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << kToolName << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << kToolName << ": internal error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
