#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qgc/enumerate.hpp"
#include "qgc/errors.hpp"
#include "qgc/polynomial.hpp"

using namespace qgc;

namespace {

Polynomial random_poly(std::mt19937_64& rng, std::size_t vars, std::size_t terms, int max_degree) {
  Polynomial p;
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<VarId> m;
    const int deg = static_cast<int>(rng() % (max_degree + 1));
    for (int i = 0; i < deg; ++i) m.push_back(static_cast<VarId>(rng() % vars));
    p.add_term(m, static_cast<Int>(static_cast<long long>(rng() % 41) - 20));
  }
  return p;
}

Assignment random_bits(std::mt19937_64& rng, std::size_t n) {
  Assignment a(n);
  for (auto& b : a) b = static_cast<std::uint8_t>(rng() & 1U);
  return a;
}

}  // namespace

TEST_CASE("evaluate") {
  const Assignment a0{0}, a1{1};
  CHECK(evaluate(Polynomial::constant(7), a0) == 7);
  CHECK(evaluate(Polynomial::constant(7), {}) == 7);
  CHECK(evaluate(Polynomial::variable(0), a1) == 1);
  CHECK(evaluate(Polynomial::variable(0), a0) == 0);
  const Polynomial x = Polynomial::xnor(0, 1);
  const Assignment b11{1, 1}, b10{1, 0};
  CHECK(evaluate(x, b11) == 1);
  CHECK(evaluate(x, b10) == 0);
  CHECK_THROWS_AS(evaluate(x, a1), Error);
}

TEST_CASE("add_scaled") {
  Polynomial p;
  p.add_term({0, 2}, 3);
  p.add_term({}, -1);
  CHECK(add_scaled(p, Polynomial::variable(1), 0) == p);
  CHECK(add_scaled(Polynomial::variable(0), Polynomial::variable(0), -1).is_zero());
  Polynomial expect;
  expect.add_term({}, 1);
  expect.add_term({0}, 6);
  CHECK(add_scaled(Polynomial::constant(1), Polynomial::variable(0, 2), 3) == expect);
}

TEST_CASE("add_scaled is linear under evaluation (1000 trials)") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const Polynomial p = random_poly(rng, n, rng() % 12, 4);
    const Polynomial q = random_poly(rng, n, rng() % 12, 4);
    const Int c = static_cast<Int>(static_cast<long long>(rng() % 201) - 100);
    const Assignment a = random_bits(rng, n);
    REQUIRE(evaluate(add_scaled(p, q, c), a) == evaluate(p, a) + c * evaluate(q, a));
  }
}

TEST_CASE("canonical form") {
  Polynomial a;
  a.add_term({1, 0, 1}, 2);  // x1*x0*x1 = x0 x1
  Polynomial b;
  b.add_term({0, 1}, 1);
  b.add_term({1, 0}, 1);
  CHECK(a == b);
  CHECK(a.term_count() == 1);
  CHECK(a.coefficient({0, 1}) == 2);

  Polynomial z;
  z.add_term({3}, 5);
  z.add_term({3}, -5);
  CHECK(z.is_zero());
  CHECK(z.degree() == 0);

  CHECK(Polynomial::xnor(0, 1).degree() == 2);
  Polynomial prod = Polynomial::constant(1);
  for (VarId k = 0; k < 3; ++k) prod = prod * Polynomial::xnor(k, k + 3);
  CHECK(prod.degree() == 6);
  CHECK(Polynomial::negated_variable(2) == Polynomial::constant(1) - Polynomial::variable(2));
}

TEST_CASE("functionally equal polynomials have identical term maps (N <= 12)") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Polynomial p = random_poly(rng, n, 2 + rng() % 10, 4);
    // Rebuild the same function a different way: interpolate the energy
    // table by Moebius inversion.
    auto table = energy_table(p, n);
    std::vector<Int> coef(table.begin(), table.end());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t s = 0; s < coef.size(); ++s)
        if (s >> i & 1U) coef[s] -= coef[s ^ (std::size_t{1} << i)];
    Polynomial q;
    for (std::size_t s = 0; s < coef.size(); ++s) {
      std::vector<VarId> m;
      for (std::size_t i = 0; i < n; ++i)
        if (s >> i & 1U) m.push_back(static_cast<VarId>(i));
      q.add_term(m, coef[s]);
    }
    REQUIRE(p == q);
    REQUIRE(p.terms() == q.terms());
  }
}

TEST_CASE("large coefficients stay exact") {
  // (n+1)^L * n * 3 with n=100, L=7
  const Int big = checked_mul(checked_mul(checked_pow(101, 7), 100), 3);
  CHECK(to_string(big) == "32164060563210300");
  Polynomial p = Polynomial::variable(0, big) + Polynomial::variable(1, big);
  p *= 1000;
  const Assignment a{1, 1};
  CHECK(to_string(evaluate(p, a)) == "64328121126420600000");
  CHECK(parse_int("-170141183460469231731687303715884105727") == -kIntMax);
  CHECK_THROWS_AS(checked_mul(kIntMax, 2), Error);
  CHECK_THROWS_AS(checked_add(kIntMax, 1), Error);
  CHECK_THROWS_AS(parse_int("12x"), Error);
  CHECK_THROWS_AS(parse_int("999999999999999999999999999999999999999999"), Error);
}

TEST_CASE("ground states") {
  SUBCASE("single variable") {
    const auto gs = ground_states(Polynomial::variable(0));
    CHECK(gs.energy == 0);
    CHECK(gs.argmin == std::vector<std::uint64_t>{0});
  }
  SUBCASE("zero polynomial over 3 vars") {
    const auto gs = ground_states(Polynomial{}, 3);
    CHECK(gs.energy == 0);
    CHECK(gs.argmin.size() == 8);
  }
  SUBCASE("xnor") {
    const auto gs = ground_states(Polynomial::xnor(0, 1));
    CHECK(gs.energy == 0);
    CHECK(gs.argmin == std::vector<std::uint64_t>{1, 2});
  }
  SUBCASE("too wide") {
    CHECK_THROWS_AS(ground_states(Polynomial{}, kEnumerationLimit + 1), Error);
  }
}

TEST_CASE("ground states agree with brute force and the serial reference") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 14;
    const Polynomial p = random_poly(rng, n, 3 + rng() % 20, 4);
    const auto gs = ground_states(p, n);
    const auto [best, arg] = oracle::brute_min(static_cast<int>(n), [&](const oracle::Bits& b) {
      Assignment a(b.begin(), b.end());
      return static_cast<long long>(evaluate(p, a));
    });
    REQUIRE(static_cast<long long>(gs.energy) == best);
    REQUIRE(gs.argmin == arg);
    const auto ser = ground_states_serial(p, n);
    CHECK(ser.energy == gs.energy);
    CHECK(ser.argmin == gs.argmin);
  }
}

TEST_CASE("projected minima") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const std::size_t kept = 1 + rng() % (n - 1);
    const Polynomial p = random_poly(rng, n, 4 + rng() % 15, 3);
    const auto table = energy_table(p, n);
    std::vector<Int> expect(std::size_t{1} << kept);
    std::vector<bool> seen(expect.size(), false);
    for (std::size_t mask = 0; mask < table.size(); ++mask) {
      const std::size_t low = mask & (expect.size() - 1);
      if (!seen[low] || table[mask] < expect[low]) expect[low] = table[mask];
      seen[low] = true;
    }
    CHECK(projected_minima(p, n, kept) == expect);
    CHECK(projected_minima_serial(p, n, kept) == expect);
  }
}
