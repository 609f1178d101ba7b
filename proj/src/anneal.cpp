#include "qgc/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <omp.h>

#include "qgc/enumerate.hpp"
#include "qgc/errors.hpp"
#include "qgc/model.hpp"

namespace qgc {

SolveResult solve_exact(const Polynomial& p, std::size_t num_vars) {
  const auto gs = ground_states(p, num_vars);
  SolveResult out;
  out.method = "exact";
  out.min_energy = gs.energy;
  for (std::size_t i = 0; i < gs.argmin.size(); ++i) out.argmin.push_back(gs.assignment(i));
  return out;
}

namespace {

// Per-variable view of the polynomial. Quadratic couplings are stored
// directly; higher-order terms go through the generic term list.
class FlipModel {
 public:
  FlipModel(const Polynomial& p, std::size_t num_vars)
      : linear_(num_vars, 0), pairs_(num_vars), higher_(num_vars) {
    if (p.variable_span() > num_vars) fail(ErrorKind::Dimension, "polynomial wider than num_vars");
    for (const auto& [m, c] : p.terms()) {
      switch (m.size()) {
        case 0: constant_ = c; break;
        case 1: linear_[m[0]] += c; break;
        case 2:
          pairs_[m[0]].push_back({m[1], c});
          pairs_[m[1]].push_back({m[0], c});
          break;
        default: {
          const auto idx = static_cast<std::uint32_t>(terms_.size());
          terms_.push_back({m, c});
          for (VarId v : m) higher_[v].push_back(idx);
        }
      }
    }
  }

  std::size_t size() const { return linear_.size(); }

  Int energy(const Assignment& x) const {
    Int e = constant_;
    for (std::size_t j = 0; j < linear_.size(); ++j) {
      if (!x[j]) continue;
      e += linear_[j];
      for (const auto& [k, c] : pairs_[j])
        if (k > j && x[k]) e += c;
    }
    for (const auto& t : terms_) {
      bool on = true;
      for (VarId v : t.vars) on = on && x[v];
      if (on) e += t.coeff;
    }
    return e;
  }

  Int flip_delta(const Assignment& x, std::size_t j) const {
    Int field = linear_[j];
    for (const auto& [k, c] : pairs_[j])
      if (x[k]) field += c;
    for (std::uint32_t idx : higher_[j]) {
      const auto& t = terms_[idx];
      bool on = true;
      for (VarId v : t.vars)
        if (v != j && !x[v]) {
          on = false;
          break;
        }
      if (on) field += t.coeff;
    }
    return x[j] ? -field : field;
  }

  // Largest possible |delta| per variable, and smallest nonzero |coeff|.
  std::pair<Int, Int> delta_range() const {
    Int widest = 0;
    // energy gaps are multiples of the coefficient gcd
    Int narrowest = 0;
    auto consider = [&](Int c) {
      Int a = abs(c), b = narrowest;
      while (b != 0) {
        const Int r = a % b;
        a = b;
        b = r;
      }
      narrowest = a;
    };
    for (std::size_t j = 0; j < linear_.size(); ++j) {
      Int total = abs(linear_[j]);
      consider(linear_[j]);
      for (const auto& [k, c] : pairs_[j]) {
        total += abs(c);
        consider(c);
      }
      for (std::uint32_t idx : higher_[j]) {
        total += abs(terms_[idx].coeff);
        consider(terms_[idx].coeff);
      }
      widest = std::max(widest, total);
    }
    return {widest, narrowest};
  }

 private:
  struct Term {
    Monomial vars;
    Int coeff;
  };
  Int constant_ = 0;
  std::vector<Int> linear_;
  std::vector<std::vector<std::pair<VarId, Int>>> pairs_;
  std::vector<std::vector<std::uint32_t>> higher_;
  std::vector<Term> terms_;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Schedule {
  std::vector<double> betas;
};

Schedule make_schedule(const FlipModel& model, const AnnealParams& params) {
  if (params.runs < 1) fail(ErrorKind::InvalidArgument, "anneal needs at least one run");
  if (params.sweeps < 1) fail(ErrorKind::InvalidArgument, "anneal needs at least one sweep");
  auto [widest, narrowest] = model.delta_range();
  double hot = params.beta_start.value_or(widest > 0 ? std::log(2.0) / to_double(widest) : 0.1);
  double cold = params.beta_end.value_or(narrowest > 0 ? std::log(100.0) / to_double(narrowest) : 1.0);
  if (!params.beta_start && !params.beta_end && hot >= cold) hot = cold / 10.0;
  if (!(hot > 0.0) || !(cold > 0.0) || !(hot < cold)) {
    fail(ErrorKind::InvalidArgument, "beta schedule needs 0 < beta_start < beta_end");
  }
  Schedule s;
  s.betas.resize(params.sweeps);
  for (std::size_t i = 0; i < params.sweeps; ++i) {
    const double t = params.sweeps == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(params.sweeps - 1);
    s.betas[i] = hot * std::pow(cold / hot, t);
  }
  return s;
}

Sample anneal_run(const FlipModel& model, const Schedule& schedule, std::uint64_t seed, std::size_t run) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(run + 1)));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Sample out;
  out.bits.resize(model.size());
  for (auto& b : out.bits) b = static_cast<std::uint8_t>(rng() & 1U);
  Int energy = model.energy(out.bits);
  for (double beta : schedule.betas) {
    for (std::size_t j = 0; j < model.size(); ++j) {
      const Int delta = model.flip_delta(out.bits, j);
      if (delta <= 0 || unit(rng) < std::exp(-beta * to_double(delta))) {
        out.bits[j] ^= 1U;
        energy += delta;
      }
    }
  }
  out.energy = energy;
  return out;
}

}  // namespace

std::pair<double, double> default_beta_range(const Polynomial& p, std::size_t num_vars) {
  const FlipModel model(p, num_vars);
  AnnealParams probe;
  probe.runs = 1;
  probe.sweeps = 2;
  const Schedule s = make_schedule(model, probe);
  return {s.betas.front(), s.betas.back()};
}

SampleSet anneal(const Polynomial& p, std::size_t num_vars, const AnnealParams& params) {
  if (num_vars < 1) fail(ErrorKind::InvalidArgument, "anneal needs at least one variable");
  const FlipModel model(p, num_vars);
  const Schedule schedule = make_schedule(model, params);
  SampleSet out;
  out.samples.resize(params.runs);
  const auto runs = static_cast<std::int64_t>(params.runs);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t r = 0; r < runs; ++r) {
    out.samples[static_cast<std::size_t>(r)] =
        anneal_run(model, schedule, params.seed, static_cast<std::size_t>(r));
  }
  return out;
}

SampleSet anneal_serial(const Polynomial& p, std::size_t num_vars, const AnnealParams& params) {
  if (num_vars < 1) fail(ErrorKind::InvalidArgument, "anneal needs at least one variable");
  const FlipModel model(p, num_vars);
  const Schedule schedule = make_schedule(model, params);
  SampleSet out;
  for (std::size_t r = 0; r < params.runs; ++r) out.samples.push_back(anneal_run(model, schedule, params.seed, r));
  return out;
}

SuccessFraction success_probability(const SampleSet& samples, Int target) {
  if (samples.samples.empty()) fail(ErrorKind::InvalidArgument, "success probability of an empty sample set");
  SuccessFraction f;
  f.runs = samples.samples.size();
  for (const auto& s : samples.samples) f.hits += s.energy <= target;
  return f;
}

nlohmann::json sample_set_json(const SampleSet& s) {
  nlohmann::json doc;
  doc["runs"] = s.samples.size();
  doc["samples"] = nlohmann::json::array();
  for (const auto& sample : s.samples) {
    doc["samples"].push_back({{"bits", bits_to_string(sample.bits)}, {"energy", to_string(sample.energy)}});
  }
  return doc;
}

nlohmann::json solve_result_json(const SolveResult& r) {
  nlohmann::json doc;
  doc["method"] = r.method;
  doc["min_energy"] = to_string(r.min_energy);
  doc["argmin"] = nlohmann::json::array();
  for (const auto& a : r.argmin) doc["argmin"].push_back(bits_to_string(a));
  return doc;
}

}  // namespace qgc
