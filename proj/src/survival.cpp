#include "qgc/survival.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "qgc/errors.hpp"

namespace qgc {

using boost::multiprecision::cpp_rational;

Tts tts(double p_s, const TimingModel& timing) {
  if (!(p_s >= 0.0 && p_s <= 1.0)) fail(ErrorKind::InvalidArgument, "success probability must lie in [0, 1]");
  if (p_s == 0.0) return {true, 0.0};
  if (p_s == 1.0) return {false, timing.t_programming};  // limit of the formula
  const double runs = std::log(0.5) / std::log1p(-p_s);
  return {false, timing.t_programming + timing.t_run() * runs};
}

double censor_horizon(std::size_t runs, const TimingModel& timing) {
  return static_cast<double>(runs) * timing.t_run();
}

SurvivalEstimate km_median(std::span<const SurvivalObservation> observations) {
  if (observations.empty()) fail(ErrorKind::InvalidArgument, "Kaplan-Meier needs at least one observation");
  std::vector<SurvivalObservation> obs(observations.begin(), observations.end());
  std::sort(obs.begin(), obs.end(), [](const auto& a, const auto& b) { return a.time < b.time; });
  const double last_time = obs.back().time;

  SurvivalEstimate est;
  std::vector<cpp_rational> exact;  // exact S at each curve point
  cpp_rational survival = 1;
  double greenwood_sum = 0.0;
  std::size_t at_risk = obs.size();
  for (std::size_t i = 0; i < obs.size();) {
    std::size_t j = i;
    std::size_t events = 0;
    while (j < obs.size() && obs[j].time == obs[i].time) {
      events += !obs[j].censored;
      ++j;
    }
    if (events > 0) {
      survival *= cpp_rational(static_cast<long long>(at_risk - events), static_cast<long long>(at_risk));
      if (events < at_risk) {
        greenwood_sum += static_cast<double>(events) /
                         (static_cast<double>(at_risk) * static_cast<double>(at_risk - events));
      }
      const double s = survival.convert_to<double>();
      est.curve.push_back({obs[i].time, s, survival == 0 ? 0.0 : s * s * greenwood_sum, at_risk, events});
      exact.push_back(survival);
    }
    at_risk -= j - i;
    i = j;
  }

  const cpp_rational half(1, 2);
  est.median = {last_time, true};
  for (std::size_t k = 0; k < est.curve.size(); ++k) {
    if (exact[k] < half) {
      est.median = {est.curve[k].time, false};
      break;
    }
    if (exact[k] == half) {
      const double next = k + 1 < est.curve.size() ? est.curve[k + 1].time : est.curve[k].time;
      est.median = {0.5 * (est.curve[k].time + next), false};
      break;
    }
  }

  auto first_below = [&](double sign) -> TimeBound {
    for (const auto& p : est.curve) {
      if (p.survival + sign * 1.96 * std::sqrt(p.variance) <= 0.5) return {p.time, false};
    }
    return {last_time, true};
  };
  est.ci_low = first_below(-1.0);
  est.ci_high = first_below(+1.0);
  return est;
}

namespace {

nlohmann::json bound_json(const TimeBound& b) {
  return {{"value", b.value}, {"lower_bound", b.lower_bound}};
}

}  // namespace

nlohmann::json survival_json(const SurvivalEstimate& s) {
  nlohmann::json doc;
  doc["median"] = bound_json(s.median);
  doc["ci_low"] = bound_json(s.ci_low);
  doc["ci_high"] = bound_json(s.ci_high);
  doc["curve"] = nlohmann::json::array();
  for (const auto& p : s.curve) {
    doc["curve"].push_back({{"time", p.time},
                            {"survival", p.survival},
                            {"variance", p.variance},
                            {"at_risk", p.at_risk},
                            {"events", p.events}});
  }
  return doc;
}

}  // namespace qgc
