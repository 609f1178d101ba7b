// qgc: graph coloring encodings, quadratization, gate counts and benchmarks.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qgc/anneal.hpp"
#include "qgc/bench.hpp"
#include "qgc/errors.hpp"
#include "qgc/gates.hpp"
#include "qgc/graph.hpp"
#include "qgc/logenc.hpp"
#include "qgc/model.hpp"
#include "qgc/onehot.hpp"
#include "qgc/quadratize.hpp"

using namespace qgc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitInvariant = 4;

struct Options {
  std::string input;
  std::vector<std::string> inputs;
  std::string out;
  std::string format = "json";
  std::string encoding = "onehot";
  std::optional<std::size_t> colors;
  std::string partition;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  double density = 0.5;
  bool exact = false;
  bool anneal = false;
  std::size_t runs = 1000;
  std::size_t sweeps = 1000;
  std::optional<double> beta_start;
  std::optional<double> beta_end;
  std::size_t count = 20;
  std::size_t n_min = 4;
  std::size_t n_max = 10;
  std::vector<double> densities{0.2, 0.5, 0.8};
  std::string group_by = "n";
  double t_programming = 0.0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty() || opt.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + opt.out);
  out << text;
  if (!out) fail(ErrorKind::InvalidArgument, "write failed: " + opt.out);
}

template <class Json>
void emit_json(const Options& opt, const Json& doc) {
  emit(opt, doc.dump(2) + "\n");
}

Graph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  return parse_graph(text, sniff_graph_format(text));
}

EncodedProblem load_model(const std::string& path) {
  const std::string text = read_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
  return from_model_json(doc);
}

GraphFormat graph_format(const std::string& name) {
  if (name == "json") return GraphFormat::Json;
  if (name == "dimacs") return GraphFormat::Dimacs;
  fail(ErrorKind::InvalidArgument, "graph format must be json or dimacs");
}

void cmd_gen(const Options& opt) {
  emit(opt, serialize_graph(generate_random_connected(opt.n, opt.density, opt.seed), graph_format(opt.format)));
}

void cmd_encode(const Options& opt) {
  const Graph g = load_graph(opt.input);
  const EncodingKind kind = parse_encoding_name(opt.encoding);
  EncodedProblem prob;
  switch (kind) {
    case EncodingKind::OneHot:
      prob = opt.colors ? encode_mgc_onehot(g, *opt.colors) : encode_mgc_onehot(g);
      break;
    case EncodingKind::Logarithmic:
      prob = opt.colors ? encode_mgc_log(g, *opt.colors) : encode_mgc_log(g);
      break;
    case EncodingKind::GeneralPartition: {
      if (opt.partition.empty()) fail(ErrorKind::InvalidArgument, "--encoding partition needs --partition");
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(read_file(opt.partition));
      } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Parse, opt.partition + ": " + e.what());
      }
      const std::size_t colors = opt.colors.value_or(brooks_upper_bound(g));
      prob = encode_general(g, partition_spec_from_json(doc), bits_for_colors(colors));
      break;
    }
  }
  emit_json(opt, to_model_json(prob));
}

void cmd_quadratize(const Options& opt) {
  const EncodedProblem prob = load_model(opt.input);
  emit_json(opt, to_model_json(quadratize(prob).problem));
}

nlohmann::json decode_json(const EncodedProblem& prob, const Assignment& a) {
  nlohmann::json doc;
  std::optional<Coloring> col;
  if (prob.kind == EncodingKind::OneHot) {
    col = decode_onehot(prob, a).coloring;
  } else {
    col = decode_log(prob, a);
  }
  if (!col) {
    doc["valid"] = false;
    return doc;
  }
  doc["valid"] = true;
  doc["labels"] = col->labels;
  doc["proper"] = col->proper(prob.graph);
  doc["colors_used"] = col->distinct_labels();
  return doc;
}

void cmd_solve(const Options& opt) {
  if (opt.exact == opt.anneal) fail(ErrorKind::InvalidArgument, "choose exactly one of --exact or --anneal");
  const EncodedProblem prob = load_model(opt.input);
  if (opt.exact) {
    const SolveResult r = solve_exact(prob.polynomial, prob.num_vars());
    nlohmann::json doc = solve_result_json(r);
    if (!r.argmin.empty()) doc["decoded"] = decode_json(prob, r.argmin.front());
    emit_json(opt, doc);
    return;
  }
  AnnealParams params;
  params.runs = opt.runs;
  params.sweeps = opt.sweeps;
  params.seed = opt.seed;
  params.beta_start = opt.beta_start;
  params.beta_end = opt.beta_end;
  const SampleSet samples = anneal(prob.polynomial, prob.num_vars(), params);
  nlohmann::json doc = sample_set_json(samples);
  doc["method"] = "anneal";
  doc["seed"] = opt.seed;
  doc["sweeps"] = opt.sweeps;
  const Sample* best = nullptr;
  for (const auto& s : samples.samples)
    if (!best || s.energy < best->energy) best = &s;
  doc["min_energy"] = to_string(best->energy);
  doc["decoded"] = decode_json(prob, best->bits);
  emit_json(opt, doc);
}

void cmd_gates(const Options& opt) {
  const EncodedProblem prob = load_model(opt.input);
  const std::size_t n = prob.graph.vertex_count();
  const std::size_t m = prob.graph.edge_count();
  nlohmann::json doc;
  doc["encoding"] = encoding_name(prob.kind);
  doc["total"] = gate_report_json(cnot_count_oracle(prob.polynomial));
  if (prob.kind == EncodingKind::OneHot) {
    doc["closed_form"] = cnot_count_onehot_closed(n, m, prob.colors);
  } else if (!prob.quadratized && prob.penalties.lex) {
    doc["adjacency"] = gate_report_json(cnot_count_oracle(adjacency_part(prob)));
    if (prob.kind == EncodingKind::Logarithmic) doc["closed_form"] = cnot_count_log_closed(m, prob.bits);
  }
  emit_json(opt, doc);
}

nlohmann::json finite_or_null(double x) {
  if (std::isinf(x)) return nullptr;
  return x;
}

void cmd_qubits(const Options& opt) {
  const QubitComparison q = qubit_advantage_predicate(opt.n, opt.m, *opt.colors);
  nlohmann::ordered_json doc;
  doc["n"] = opt.n;
  doc["m"] = opt.m;
  doc["c"] = *opt.colors;
  doc["L"] = q.bits;
  doc["onehot_qubits"] = q.onehot_qubits;
  doc["log_qubits"] = q.log_qubits;
  doc["threshold"] = finite_or_null(q.threshold);
  doc["advantage"] = q.advantage;
  doc["published_threshold"] = finite_or_null(q.published_threshold);
  doc["published_advantage"] = q.published_advantage;
  emit_json(opt, doc);
}

void cmd_bench(const Options& opt) {
  std::vector<BenchInstance> instances;
  if (opt.inputs.empty()) {
    instances = generate_suite(opt.count, opt.n_min, opt.n_max, opt.densities, opt.seed);
  } else {
    for (const auto& path : opt.inputs) instances.push_back({path, load_graph(path), std::nullopt, opt.colors});
  }
  BenchConfig config;
  config.anneal.runs = opt.runs;
  config.anneal.sweeps = opt.sweeps;
  config.anneal.seed = opt.seed;
  config.anneal.beta_start = opt.beta_start;
  config.anneal.beta_end = opt.beta_end;
  config.timing.t_programming = opt.t_programming;
  config.group_by = parse_group_by(opt.group_by);
  const BenchReport report = run_suite(instances, config);
  for (const auto& r : report.records)
    if (!r.error.empty()) std::cerr << "qgc: " << r.instance_id << ": " << r.error << "\n";
  if (opt.format == "csv") {
    emit(opt, report_csv(report));
  } else if (opt.format == "json") {
    emit_json(opt, report_json(report));
  } else {
    fail(ErrorKind::InvalidArgument, "bench format must be csv or json");
  }
}

void add_anneal_flags(CLI::App* sub, Options& opt) {
  sub->add_option("--runs", opt.runs, "Annealing runs")->check(CLI::PositiveNumber);
  sub->add_option("--sweeps", opt.sweeps, "Sweeps per run")->check(CLI::PositiveNumber);
  sub->add_option("--seed", opt.seed, "Random seed");
  sub->add_option("--beta-start", opt.beta_start, "Initial inverse temperature (default: from coefficients)");
  sub->add_option("--beta-end", opt.beta_end, "Final inverse temperature (default: from coefficients)");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Graph coloring QUBO/HUBO encoder, quadratizer and benchmark harness", "qgc"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a random connected graph");
  gen->add_option("--n", opt.n, "Vertex count (>= 2)")->required();
  gen->add_option("--density", opt.density, "Edge density in [0, 1]")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", opt.seed, "Random seed");
  gen->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "dimacs"}));
  gen->add_option("--out", opt.out, "Output file (default: stdout)");

  auto* enc = app.add_subcommand("encode", "Encode a graph as a coloring model");
  enc->add_option("graph", opt.input, "Graph file (JSON or DIMACS)")->required()->check(CLI::ExistingFile);
  enc->add_option("--encoding", opt.encoding, "Encoding")->check(CLI::IsMember({"onehot", "log", "partition"}));
  enc->add_option("--colors", opt.colors, "Color count (default: Brooks bound)")->check(CLI::PositiveNumber);
  enc->add_option("--partition", opt.partition, "Partition cost file for --encoding partition")
      ->check(CLI::ExistingFile);
  enc->add_option("--out", opt.out, "Output file (default: stdout)");

  auto* quad = app.add_subcommand("quadratize", "Reduce a logarithmic model to degree 2");
  quad->add_option("model", opt.input, "Model file")->required()->check(CLI::ExistingFile);
  quad->add_option("--out", opt.out, "Output file (default: stdout)");

  auto* solve = app.add_subcommand("solve", "Minimize a model exactly or by simulated annealing");
  solve->add_option("model", opt.input, "Model file")->required()->check(CLI::ExistingFile);
  solve->add_flag("--exact", opt.exact, "Exhaustive search (<= 24 variables)");
  solve->add_flag("--anneal", opt.anneal, "Simulated annealing");
  add_anneal_flags(solve, opt);
  solve->add_option("--out", opt.out, "Output file (default: stdout)");

  auto* gates = app.add_subcommand("gates", "Count CNOTs of one cost layer");
  gates->add_option("model", opt.input, "Model file")->required()->check(CLI::ExistingFile);
  gates->add_option("--out", opt.out, "Output file (default: stdout)");

  auto* qubits = app.add_subcommand("qubits", "Compare one-hot and quadratized logarithmic qubit counts");
  qubits->add_option("--n", opt.n, "Vertex count")->required();
  qubits->add_option("--m", opt.m, "Edge count")->required();
  qubits->add_option("--colors", opt.colors, "Color count (>= 2)")->required();
  qubits->add_option("--out", opt.out, "Output file (default: stdout)");

  auto* bench = app.add_subcommand("bench", "Benchmark both encodings under simulated annealing");
  bench->add_option("graphs", opt.inputs, "Graph files (default: generate a suite)")->check(CLI::ExistingFile);
  bench->add_option("--count", opt.count, "Generated instances");
  bench->add_option("--n-min", opt.n_min, "Smallest generated vertex count");
  bench->add_option("--n-max", opt.n_max, "Largest generated vertex count");
  bench->add_option("--density", opt.densities, "Generated densities, used round-robin")
      ->check(CLI::Range(0.0, 1.0));
  bench->add_option("--colors", opt.colors, "Color count for graph files (default: Brooks bound)")
      ->check(CLI::PositiveNumber);
  add_anneal_flags(bench, opt);
  bench->add_option("--t-programming", opt.t_programming, "Programming time per instance (us)");
  bench->add_option("--group-by", opt.group_by, "Survival grouping")->check(CLI::IsMember({"n", "density"}));
  bench->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  bench->add_option("--out", opt.out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) cmd_gen(opt);
    if (*enc) cmd_encode(opt);
    if (*quad) cmd_quadratize(opt);
    if (*solve) cmd_solve(opt);
    if (*gates) cmd_gates(opt);
    if (*qubits) cmd_qubits(opt);
    if (*bench) cmd_bench(opt);
  } catch (const Error& e) {
    std::cerr << "qgc: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ResourceLimit: return kExitResource;
      case ErrorKind::Invariant: return kExitInvariant;
      default: return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "qgc: internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}
