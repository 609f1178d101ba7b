#include "qgc/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>

#include "qgc/errors.hpp"
#include "qgc/logenc.hpp"
#include "qgc/onehot.hpp"
#include "qgc/quadratize.hpp"

namespace qgc {

TimingModel BenchTiming::for_qubits(std::size_t qubits) const {
  TimingModel t;
  t.t_programming = t_programming;
  t.t_anneal = t_anneal;
  t.t_thermalize = t_thermalize;
  t.t_readout = readout_base + readout_per_qubit * static_cast<double>(qubits);
  return t;
}

std::string group_by_name(GroupBy g) { return g == GroupBy::VertexCount ? "n" : "density"; }

GroupBy parse_group_by(const std::string& name) {
  if (name == "n") return GroupBy::VertexCount;
  if (name == "density") return GroupBy::Density;
  fail(ErrorKind::InvalidArgument, "unknown grouping '" + name + "' (expected n or density)");
}

SurvivalObservation BenchRecord::observation() const {
  if (tts.censored || !error.empty()) return {censor_time, true};
  return {tts.value, false};
}

namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::size_t instance, std::size_t encoding) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(instance), static_cast<std::uint32_t>(encoding)};
  std::mt19937_64 rng(seq);
  return rng();
}

double measured_density(const Graph& g) {
  const double n = static_cast<double>(g.vertex_count());
  return n < 2 ? 0.0 : static_cast<double>(g.edge_count()) / (n * (n - 1) / 2.0);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

void finish(BenchRecord& r, const BenchTiming& timing, std::size_t runs) {
  const TimingModel t = timing.for_qubits(r.qubits_post);
  r.censor_time = censor_horizon(runs, t);
  r.tts = tts(r.p_s.value(), t);
}

std::pair<BenchRecord, BenchRecord> run_instance(const BenchInstance& inst, std::size_t index,
                                                 const BenchConfig& config) {
  const Graph& g = inst.graph;
  BenchRecord oh;
  oh.instance_id = inst.id;
  oh.encoding = EncodingKind::OneHot;
  oh.n = g.vertex_count();
  oh.m = g.edge_count();
  oh.density = inst.density.value_or(measured_density(g));
  BenchRecord lg = oh;
  lg.encoding = EncodingKind::Logarithmic;

  try {
    const std::size_t colors = inst.colors.value_or(brooks_upper_bound(g));
    oh.c = lg.c = colors;
    oh.bits = lg.bits = bits_for_colors(colors);

    const EncodedProblem onehot = encode_mgc_onehot(g, colors);
    oh.qubits_pre = oh.qubits_post = onehot.num_vars();

    const EncodedProblem hubo = encode_mgc_log(g, colors);
    const QuadratizedProblem qubo = quadratize(hubo);
    lg.qubits_pre = hubo.num_vars();
    lg.qubits_post = qubo.problem.num_vars();

    AnnealParams params = config.anneal;
    params.seed = derive_seed(config.anneal.seed, index, 0);
    const SampleSet oh_samples = anneal_serial(onehot.polynomial, onehot.num_vars(), params);
    params.seed = derive_seed(config.anneal.seed, index, 1);
    const SampleSet lg_samples = anneal_serial(qubo.problem.polynomial, qubo.problem.num_vars(), params);

    std::optional<std::size_t> best;
    auto consider = [&](std::size_t k) {
      if (!best || k < *best) best = k;
    };
    for (const auto& s : oh_samples.samples) {
      const auto dec = decode_onehot(onehot, s.bits);
      if (dec.coloring && dec.coloring->proper(g)) consider(dec.coloring->distinct_labels());
    }
    // Log samples only count when the auxiliaries sit at their optimum, so
    // that the QUBO energy is the HUBO energy of the projection.
    std::vector<std::optional<std::size_t>> lg_colors(lg_samples.samples.size());
    for (std::size_t i = 0; i < lg_samples.samples.size(); ++i) {
      const auto& s = lg_samples.samples[i];
      const std::span<const std::uint8_t> original(s.bits.data(), hubo.num_vars());
      if (evaluate(hubo.polynomial, original) != s.energy) continue;
      const Coloring col = decode_log(hubo, original);
      if (!col.proper(g)) continue;
      lg_colors[i] = col.distinct_labels();
      consider(*lg_colors[i]);
    }
    oh.best_colors = lg.best_colors = best;

    if (best) {
      oh.p_s = success_probability(oh_samples, static_cast<Int>(*best));
      std::optional<Int> target;
      for (std::size_t i = 0; i < lg_samples.samples.size(); ++i) {
        if (lg_colors[i] != best) continue;
        const Int e = lg_samples.samples[i].energy;
        if (!target || e < *target) target = e;
      }
      if (target) {
        lg.p_s = success_probability(lg_samples, *target);
      } else {
        lg.p_s = {0, lg_samples.samples.size()};
      }
    } else {
      oh.p_s = {0, oh_samples.samples.size()};
      lg.p_s = {0, lg_samples.samples.size()};
    }
  } catch (const std::exception& e) {
    oh.error = lg.error = e.what();
    oh.p_s = lg.p_s = {0, config.anneal.runs};
  }
  finish(oh, config.timing, config.anneal.runs);
  finish(lg, config.timing, config.anneal.runs);
  return {oh, lg};
}

std::string group_key(const BenchRecord& r, GroupBy by) {
  if (by == GroupBy::VertexCount) return "n=" + std::to_string(r.n);
  char buf[32];
  std::snprintf(buf, sizeof buf, "density=%.2f", r.density);
  return buf;
}

}  // namespace

BenchReport run_suite(std::span<const BenchInstance> instances, const BenchConfig& config) {
  std::vector<std::pair<BenchRecord, BenchRecord>> slots(instances.size());
  const auto count = static_cast<std::int64_t>(instances.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    slots[idx] = run_instance(instances[idx], idx, config);
  }

  BenchReport report;
  report.group_by = config.group_by;
  for (auto& [oh, lg] : slots) {
    report.records.push_back(std::move(oh));
    report.records.push_back(std::move(lg));
  }

  // Groups sorted by numeric key, then encoding.
  std::map<std::pair<double, int>, std::vector<const BenchRecord*>> buckets;
  for (const auto& r : report.records) {
    const double key = config.group_by == GroupBy::VertexCount ? static_cast<double>(r.n)
                                                               : std::round(r.density * 100.0) / 100.0;
    buckets[{key, static_cast<int>(r.encoding)}].push_back(&r);
  }
  for (const auto& [key, members] : buckets) {
    std::vector<SurvivalObservation> obs;
    for (const auto* r : members) obs.push_back(r->observation());
    GroupSummary s;
    s.key = group_key(*members.front(), config.group_by);
    s.encoding = members.front()->encoding;
    s.records = members.size();
    s.estimate = km_median(obs);
    report.groups.push_back(std::move(s));
  }
  return report;
}

std::vector<BenchInstance> generate_suite(std::size_t count, std::size_t n_min, std::size_t n_max,
                                          std::span<const double> densities, std::uint64_t seed) {
  if (n_min < 2 || n_max < n_min) fail(ErrorKind::InvalidArgument, "need 2 <= n_min <= n_max");
  if (densities.empty()) fail(ErrorKind::InvalidArgument, "need at least one density");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_n(n_min, n_max);
  std::vector<BenchInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = pick_n(rng);
    const double d = densities[i % densities.size()];
    const std::uint64_t graph_seed = rng();
    char id[64];
    std::snprintf(id, sizeof id, "g%03zu-n%zu-d%.2f", i, n, d);
    out.push_back({id, generate_random_connected(n, d, graph_seed), d, std::nullopt});
  }
  return out;
}

std::string report_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "instance_id,encoding,n,m,c,L,qubits_pre,qubits_post,p_s,tts,censored\n";
  for (const auto& r : report.records) {
    const auto obs = r.observation();
    out << r.instance_id << ',' << encoding_name(r.encoding) << ',' << r.n << ',' << r.m << ',' << r.c << ','
        << r.bits << ',' << r.qubits_pre << ',' << r.qubits_post << ',' << format_double(r.p_s.value()) << ','
        << format_double(obs.time) << ',' << (obs.censored ? 1 : 0) << '\n';
  }
  return out.str();
}

nlohmann::ordered_json report_json(const BenchReport& report) {
  nlohmann::ordered_json doc;
  doc["note"] =
      "logical qubits only: no minor embedding, readout time scales with logical qubits, "
      "embedding time excluded";
  doc["group_by"] = group_by_name(report.group_by);
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    const auto obs = r.observation();
    nlohmann::ordered_json rec;
    rec["instance_id"] = r.instance_id;
    rec["encoding"] = encoding_name(r.encoding);
    rec["n"] = r.n;
    rec["m"] = r.m;
    rec["c"] = r.c;
    rec["L"] = r.bits;
    rec["density"] = r.density;
    rec["qubits_pre"] = r.qubits_pre;
    rec["qubits_post"] = r.qubits_post;
    rec["hits"] = r.p_s.hits;
    rec["runs"] = r.p_s.runs;
    rec["p_s"] = r.p_s.value();
    rec["tts"] = obs.time;
    rec["censored"] = obs.censored;
    if (r.best_colors) rec["best_colors"] = *r.best_colors;
    if (!r.error.empty()) rec["error"] = r.error;
    doc["records"].push_back(std::move(rec));
  }
  doc["groups"] = nlohmann::ordered_json::array();
  for (const auto& g : report.groups) {
    nlohmann::ordered_json grp;
    grp["group"] = g.key;
    grp["encoding"] = encoding_name(g.encoding);
    grp["records"] = g.records;
    grp["survival"] = survival_json(g.estimate);
    doc["groups"].push_back(std::move(grp));
  }
  return doc;
}

}  // namespace qgc
