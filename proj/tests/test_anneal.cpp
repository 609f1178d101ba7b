#include <doctest.h>

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qgc/anneal.hpp"
#include "qgc/errors.hpp"
#include "qgc/logenc.hpp"
#include "qgc/onehot.hpp"
#include "qgc/quadratize.hpp"

using namespace qgc;

namespace {

bool same(const SampleSet& a, const SampleSet& b) {
  if (a.samples.size() != b.samples.size()) return false;
  for (std::size_t i = 0; i < a.samples.size(); ++i)
    if (a.samples[i].bits != b.samples[i].bits || a.samples[i].energy != b.samples[i].energy) return false;
  return true;
}

AnnealParams params(std::size_t runs, std::size_t sweeps, std::uint64_t seed) {
  AnnealParams p;
  p.runs = runs;
  p.sweeps = sweeps;
  p.seed = seed;
  return p;
}

}  // namespace

TEST_CASE("exact solve") {
  const auto r = solve_exact(Polynomial::variable(0), 1);
  CHECK(r.min_energy == 0);
  CHECK(r.argmin.size() == 1);
  const auto k3 = encode_mgc_log(Graph::complete(3), 4);
  CHECK(solve_exact(k3.polynomial, k3.num_vars()).min_energy == 5);
  CHECK(solve_exact(Polynomial{}, 3).argmin.size() == 8);
}

TEST_CASE("annealer basics") {
  SUBCASE("trivial landscape") {
    const auto s = anneal(Polynomial::variable(0), 1, params(10, 100, 1));
    CHECK(s.samples.size() == 10);
    for (const auto& x : s.samples) CHECK(x.energy == 0);
  }
  SUBCASE("P3 log finds the optimum") {
    const auto prob = encode_mgc_log(Graph::path(3), 2);
    const auto s = anneal(prob.polynomial, prob.num_vars(), params(100, 1000, 2));
    CHECK(success_probability(s, 1).hits >= 1);
  }
  SUBCASE("bad parameters") {
    CHECK_THROWS_AS(anneal(Polynomial::variable(0), 1, params(0, 10, 0)), Error);
    CHECK_THROWS_AS(anneal(Polynomial::variable(0), 1, params(1, 0, 0)), Error);
    CHECK_THROWS_AS(anneal(Polynomial::variable(0), 0, params(1, 1, 0)), Error);
    AnnealParams p = params(1, 10, 0);
    p.beta_start = 2.0;
    p.beta_end = 1.0;
    CHECK_THROWS_AS(anneal(Polynomial::variable(0), 1, p), Error);
  }
}

TEST_CASE("annealer is deterministic and thread-count independent") {
  const auto prob = quadratize(encode_mgc_log(Graph::cycle(5), 3)).problem;
  const auto p = params(64, 200, 42);
  const auto a = anneal(prob.polynomial, prob.num_vars(), p);
  const auto b = anneal(prob.polynomial, prob.num_vars(), p);
  CHECK(same(a, b));
  CHECK(same(a, anneal_serial(prob.polynomial, prob.num_vars(), p)));
  const int saved = omp_get_max_threads();
  omp_set_num_threads(3);
  CHECK(same(a, anneal(prob.polynomial, prob.num_vars(), p)));
  omp_set_num_threads(saved);
  CHECK_FALSE(same(a, anneal(prob.polynomial, prob.num_vars(), params(64, 200, 43))));
}

TEST_CASE("sample energies re-verify and never undercut the exact minimum") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const Graph g = generate_random_connected(n, 0.5, rng());
    const EncodedProblem prob = trial % 2 ? encode_mgc_log(g, 2 + rng() % 3) : encode_mgc_onehot(g, 2 + rng() % (n - 1));
    if (prob.num_vars() > 20) continue;
    const Int best = solve_exact(prob.polynomial, prob.num_vars()).min_energy;
    const auto s = anneal(prob.polynomial, prob.num_vars(), params(50, 100, rng()));
    for (const auto& x : s.samples) {
      REQUIRE(x.energy == evaluate(prob.polynomial, x.bits));
      REQUIRE(x.energy >= best);
    }
  }
}

TEST_CASE("success probability") {
  SampleSet s;
  for (Int e : {1, 1, 1, 5}) s.samples.push_back({{}, e});
  CHECK(success_probability(s, 1).value() == doctest::Approx(0.75));
  CHECK(success_probability(s, 5).value() == 1.0);
  CHECK(success_probability(s, 0).value() == 0.0);
  CHECK_THROWS_AS(success_probability(SampleSet{}, 0), Error);
}

TEST_CASE("success probability does not drop with more sweeps (20-seed average)") {
  struct Ref {
    EncodedProblem prob;
    Int target;
  };
  const std::vector<Ref> refs{{encode_mgc_log(Graph::path(3), 2), 1}, {encode_mgc_log(Graph::complete(3), 4), 5}};
  for (const auto& ref : refs) {
    double last = -1.0;
    for (std::size_t sweeps : {1, 10, 100, 1000}) {
      double total = 0.0;
      for (std::uint64_t seed = 0; seed < 20; ++seed)
        total += success_probability(anneal(ref.prob.polynomial, ref.prob.num_vars(), params(50, sweeps, seed)),
                                     ref.target)
                     .value();
      const double mean = total / 20.0;
      // 1000 samples per point: allow three binomial standard errors
      const double se = std::sqrt(std::max(last, 0.0) * (1.0 - std::max(last, 0.0)) / 1000.0);
      CHECK(mean >= last - 3.0 * se);
      last = mean;
    }
  }
}

TEST_CASE("default beta range") {
  const auto prob = encode_mgc_log(Graph::complete(3), 4);
  const auto [hot, cold] = default_beta_range(prob.polynomial, prob.num_vars());
  CHECK(hot > 0.0);
  CHECK(hot < cold);
  CHECK(cold == doctest::Approx(std::log(100.0)));  // coefficients 16, 28, 31, ... have gcd 1
  const auto [h2, c2] = default_beta_range(Polynomial::variable(0) * Int{6} + Polynomial::variable(1) * Int{4}, 2);
  CHECK(c2 == doctest::Approx(std::log(100.0) / 2.0));
  CHECK(h2 == doctest::Approx(std::log(2.0) / 6.0));
}
