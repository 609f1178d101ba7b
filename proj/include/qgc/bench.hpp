#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgc/anneal.hpp"
#include "qgc/graph.hpp"
#include "qgc/model.hpp"
#include "qgc/survival.hpp"

namespace qgc {

struct BenchInstance {
  std::string id;
  Graph graph;
  std::optional<double> density;     // generator density; measured when unset
  std::optional<std::size_t> colors;  // Brooks bound when unset
};

// Timing per record: readout grows with the logical qubit count since there
// is no embedding step.
struct BenchTiming {
  double t_programming = 0.0;
  double t_anneal = 20.0;
  double t_thermalize = 1000.0;
  double readout_base = 40.0;
  double readout_per_qubit = 1.0;

  TimingModel for_qubits(std::size_t qubits) const;
};

enum class GroupBy { VertexCount, Density };

std::string group_by_name(GroupBy g);
GroupBy parse_group_by(const std::string& name);

struct BenchConfig {
  BenchTiming timing;
  AnnealParams anneal;
  GroupBy group_by = GroupBy::VertexCount;
};

struct BenchRecord {
  std::string instance_id;
  EncodingKind encoding = EncodingKind::OneHot;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t c = 0;
  std::size_t bits = 0;  // ceil(log2 c) on both rows
  std::size_t qubits_pre = 0;
  std::size_t qubits_post = 0;
  double density = 0.0;
  SuccessFraction p_s;
  Tts tts;
  double censor_time = 0.0;
  std::optional<std::size_t> best_colors;  // shared across both encodings
  std::string error;

  SurvivalObservation observation() const;
};

struct GroupSummary {
  std::string key;
  EncodingKind encoding = EncodingKind::OneHot;
  std::size_t records = 0;
  SurvivalEstimate estimate;
};

struct BenchReport {
  std::vector<BenchRecord> records;  // instance order, one-hot before log
  std::vector<GroupSummary> groups;
  GroupBy group_by = GroupBy::VertexCount;
};

// Each instance is encoded one-hot and logarithmically (then quadratized),
// annealed under both, and scored against the fewest colors any feasible
// sample of either encoding reached. Instances run in parallel; a failing
// instance produces censored records carrying the error message.
BenchReport run_suite(std::span<const BenchInstance> instances, const BenchConfig& config);

// `count` connected graphs with n drawn uniformly from [n_min, n_max] and
// densities taken round-robin.
std::vector<BenchInstance> generate_suite(std::size_t count, std::size_t n_min, std::size_t n_max,
                                          std::span<const double> densities, std::uint64_t seed);

std::string report_csv(const BenchReport& report);
nlohmann::ordered_json report_json(const BenchReport& report);

}  // namespace qgc
