#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgc/int128.hpp"
#include "qgc/polynomial.hpp"

namespace qgc {

struct AnnealParams {
  std::size_t runs = 1000;
  std::size_t sweeps = 1000;
  // Inverse temperatures; derived from the coefficients when unset.
  std::optional<double> beta_start;
  std::optional<double> beta_end;
  std::uint64_t seed = 0;
};

struct Sample {
  Assignment bits;
  Int energy = 0;
};

struct SampleSet {
  std::vector<Sample> samples;
};

struct SolveResult {
  Int min_energy = 0;
  std::vector<Assignment> argmin;
  std::string method;
};

SolveResult solve_exact(const Polynomial& p, std::size_t num_vars);

// ln 2 over the largest single-flip energy change (hot) to ln 100 over the
// smallest nonzero coefficient (cold).
std::pair<double, double> default_beta_range(const Polynomial& p, std::size_t num_vars);

// Single-bit-flip Metropolis, one sequential sweep over all variables per
// step, geometric beta schedule. Run r draws its initial state and moves
// from its own stream seeded by (seed, r), so runs are distributed across
// OpenMP threads without changing the output.
SampleSet anneal(const Polynomial& p, std::size_t num_vars, const AnnealParams& params);

// Single-threaded reference for anneal.
SampleSet anneal_serial(const Polynomial& p, std::size_t num_vars, const AnnealParams& params);

struct SuccessFraction {
  std::size_t hits = 0;
  std::size_t runs = 0;
  double value() const { return runs == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(runs); }
};

// Fraction of samples with energy <= target.
SuccessFraction success_probability(const SampleSet& samples, Int target);

nlohmann::json sample_set_json(const SampleSet& s);
nlohmann::json solve_result_json(const SolveResult& r);

}  // namespace qgc
