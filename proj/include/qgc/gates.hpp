#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>

#include <nlohmann/json.hpp>

#include "qgc/model.hpp"
#include "qgc/polynomial.hpp"

namespace qgc {

// num / 2^shift, kept with num odd whenever shift > 0.
struct Dyadic {
  Int num = 0;
  unsigned shift = 0;

  static Dyadic normalized(Int num, unsigned shift);
  bool operator==(const Dyadic&) const = default;
};

// Multilinear polynomial in Pauli-Z spins, keyed by sorted qubit sets.
struct SpinPolynomial {
  std::map<Monomial, Dyadic> terms;
};

// Substitutes x_j = (1 - Z_j)/2 exactly; cancelled terms are dropped.
SpinPolynomial ising_expand(const Polynomial& p);

// Value at spins z_j in {+1, -1}.
Dyadic evaluate_spins(const SpinPolynomial& sp, std::span<const std::int8_t> spins);

struct GateReport {
  std::size_t cnot = 0;
  std::map<std::size_t, std::size_t> histogram;  // locality k >= 2 -> term count
};

// Phase-gadget CNOT count of one exp(-i gamma H) layer: 2(k-1) per
// nonzero k-local Z term, k >= 2.
GateReport cnot_count_oracle(const Polynomial& p);

// c (n (c+1) + 2m)
std::size_t cnot_count_onehot_closed(std::size_t n, std::size_t m, std::size_t colors);
// m (2 (L-1) 2^L + 2)
std::size_t cnot_count_log_closed(std::size_t m, std::size_t bits);

// The logarithmic Hamiltonian minus its 1-local lexicographic part.
Polynomial adjacency_part(const EncodedProblem& prob);

nlohmann::json gate_report_json(const GateReport& r);

}  // namespace qgc
