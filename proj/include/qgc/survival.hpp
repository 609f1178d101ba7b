#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

namespace qgc {

// Per-run timing in microseconds.
struct TimingModel {
  double t_programming = 0.0;
  double t_anneal = 20.0;
  double t_readout = 40.0;
  double t_thermalize = 1000.0;

  double t_run() const { return t_anneal + t_readout + t_thermalize; }
};

struct Tts {
  bool censored = false;
  double value = 0.0;  // meaningful only when not censored
};

// T_prog + T_run * ln(0.5) / ln(1 - p_s). p_s = 0 is censored; p_s = 1
// charges exactly one run.
Tts tts(double p_s, const TimingModel& timing);

// R * T_run
double censor_horizon(std::size_t runs, const TimingModel& timing);

struct SurvivalObservation {
  double time = 0.0;
  bool censored = false;
};

// A time, or a lower bound on it when the survival curve never got there.
struct TimeBound {
  double value = 0.0;
  bool lower_bound = false;
  bool operator==(const TimeBound&) const = default;
};

struct CurvePoint {
  double time = 0.0;
  double survival = 1.0;
  double variance = 0.0;  // Greenwood
  std::size_t at_risk = 0;
  std::size_t events = 0;
};

struct SurvivalEstimate {
  TimeBound median;
  TimeBound ci_low;
  TimeBound ci_high;
  std::vector<CurvePoint> curve;  // one point per distinct event time
};

// Kaplan-Meier product-limit estimate with the median read at S(t) = 0.5.
// Survival fractions are tracked as exact rationals; where the curve sits
// exactly on 0.5 the median is the midpoint to the next event time. The
// 95% interval is where S -/+ 1.96 sqrt(Greenwood variance) first reaches
// 0.5.
SurvivalEstimate km_median(std::span<const SurvivalObservation> observations);

nlohmann::json survival_json(const SurvivalEstimate& s);

}  // namespace qgc
