#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qgc/enumerate.hpp"
#include "qgc/gates.hpp"
#include "qgc/logenc.hpp"
#include "qgc/onehot.hpp"

using namespace qgc;

namespace {

std::vector<long long> table_of(const Polynomial& p, std::size_t n) {
  std::vector<long long> out;
  for (Int e : energy_table(p, n)) out.push_back(static_cast<long long>(e));
  return out;
}

}  // namespace

TEST_CASE("Ising substitution") {
  SUBCASE("x0") {
    const auto sp = ising_expand(Polynomial::variable(0));
    CHECK(sp.terms.at({}) == Dyadic{1, 1});
    CHECK(sp.terms.at({0}) == Dyadic{-1, 1});
    CHECK(sp.terms.size() == 2);
  }
  SUBCASE("x0 x1") {
    Polynomial p;
    p.add_term({0, 1}, 1);
    const auto sp = ising_expand(p);
    CHECK(sp.terms.at({}) == Dyadic{1, 2});
    CHECK(sp.terms.at({0}) == Dyadic{-1, 2});
    CHECK(sp.terms.at({1}) == Dyadic{-1, 2});
    CHECK(sp.terms.at({0, 1}) == Dyadic{1, 2});
  }
  SUBCASE("xnor") {
    const auto sp = ising_expand(Polynomial::xnor(0, 1));
    CHECK(sp.terms.size() == 2);
    CHECK(sp.terms.at({}) == Dyadic{1, 1});
    CHECK(sp.terms.at({0, 1}) == Dyadic{1, 1});
  }
}

TEST_CASE("Ising expansion reproduces the polynomial (1000 checks)") {
  std::mt19937_64 rng(31);
  int checks = 0;
  while (checks < 1000) {
    const std::size_t n = 2 + rng() % 8;
    const Graph g = generate_random_connected(n, 0.5, rng());
    const auto prob = encode_mgc_log(g, 2 + rng() % 6);
    const auto sp = ising_expand(prob.polynomial);
    for (int k = 0; k < 50; ++k, ++checks) {
      Assignment a(prob.num_vars());
      std::vector<std::int8_t> z(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = static_cast<std::uint8_t>(rng() & 1U);
        z[i] = static_cast<std::int8_t>(1 - 2 * a[i]);
      }
      const Dyadic v = evaluate_spins(sp, z);
      REQUIRE(v.shift == 0);
      REQUIRE(v.num == evaluate(prob.polynomial, a));
    }
  }
}

TEST_CASE("CNOT counts") {
  CHECK(cnot_count_oracle(Polynomial::variable(0) + Polynomial::variable(1, 3)).cnot == 0);
  CHECK(cnot_count_oracle(Polynomial::xnor(0, 1)).cnot == 2);
  const auto eq = cnot_count_oracle(label_equality(0, 1, 2));
  CHECK(eq.cnot == 10);
  CHECK(eq.histogram.at(2) == 2);
  CHECK(eq.histogram.at(4) == 1);

  CHECK(cnot_count_onehot_closed(3, 2, 2) == 26);
  CHECK(cnot_count_onehot_closed(4, 3, 3) == 66);
  CHECK(cnot_count_onehot_closed(3, 3, 3) == 54);
  CHECK(cnot_count_oracle(encode_mgc_onehot(Graph::complete(3), 3).polynomial).cnot == 54);
  CHECK(cnot_count_log_closed(2, 1) == 4);
  CHECK(cnot_count_log_closed(1, 2) == 10);
  CHECK(cnot_count_log_closed(3, 3) == 102);
  CHECK(cnot_count_oracle(adjacency_part(encode_mgc_log(Graph::complete(3), 8))).cnot == 102);
}

TEST_CASE("CNOT oracle agrees with a Walsh-Hadamard transform") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const Graph g = generate_random_connected(n, 0.6, rng());
    const std::size_t c = 2 + rng() % (n - 1);
    const auto oh = encode_mgc_onehot(g, c);
    if (oh.num_vars() <= 18) {
      CHECK(cnot_count_oracle(oh.polynomial).cnot == oracle::cnot_from_walsh(oracle::walsh(table_of(oh.polynomial, oh.num_vars()))));
    }
    const auto lg = encode_mgc_log(g, 2 + rng() % 7);
    CHECK(cnot_count_oracle(lg.polynomial).cnot == oracle::cnot_from_walsh(oracle::walsh(table_of(lg.polynomial, lg.num_vars()))));
  }
}

TEST_CASE("closed forms match the oracle on random graphs") {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const Graph g = generate_random_connected(n, static_cast<double>(rng() % 101) / 100.0, rng());
    for (std::size_t c : {2, 3, 4}) {
      if (c <= n) CHECK(cnot_count_oracle(encode_mgc_onehot(g, c).polynomial).cnot == cnot_count_onehot_closed(n, g.edge_count(), c));
      const auto lg = encode_mgc_log(g, c);
      CHECK(cnot_count_oracle(adjacency_part(lg)).cnot == cnot_count_log_closed(g.edge_count(), lg.bits));
    }
  }
}

TEST_CASE("one-hot to log CNOT ratio on sparse graphs") {
  // With m = n the ratio is c(c+3) / (2(L-1)2^L + 2), independent of n. It
  // dips from c=4 to c=8 before growing like c / log c.
  const std::vector<std::pair<std::size_t, double>> expect{{4, 28.0 / 10}, {8, 88.0 / 34}, {16, 304.0 / 98}, {32, 1120.0 / 258}};
  for (std::size_t n : {16, 64, 256}) {
    std::vector<double> ratios;
    for (auto [c, r] : expect) {
      ratios.push_back(static_cast<double>(cnot_count_onehot_closed(n, n, c)) /
                       static_cast<double>(cnot_count_log_closed(n, bits_for_colors(c))));
      CHECK(ratios.back() == doctest::Approx(r));
    }
    CHECK(ratios[1] < ratios[0]);
    CHECK(ratios[2] > ratios[1]);
    CHECK(ratios[3] > ratios[2]);
  }
}
