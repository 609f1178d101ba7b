#pragma once

#include <cstddef>
#include <optional>

#include "qgc/model.hpp"

namespace qgc {

struct AuxCounts {
  std::size_t bit_product = 0;  // w
  std::size_t xnor = 0;         // y
  std::size_t chain = 0;        // b
  std::size_t total() const { return bit_product + xnor + chain; }
};

struct QuadratizedProblem {
  EncodedProblem problem;       // degree <= 2
  std::vector<VarId> backmap;   // original id -> id in `problem` (identity)
  AuxCounts aux;
};

// Penalties for the reduction: stage1 = stage2 = max_e |c_e| + n * sum P + 1,
// where c_e is the coefficient of edge e's equality product (A for
// coloring), and product = 3 * stage1.
QuadratizationPenalties default_quadratization_penalties(const EncodedProblem& prob);

// Reduces a logarithmic (coloring or general partition) encoding to a QUBO.
// L = 1 is returned unchanged. For L >= 2, every edge with a nonzero
// equality coefficient c_e gets, per bit k,
//   w = x_u x_v  via  product * (x_u x_v - 2w(x_u + x_v) + 3w)
//   y = XNOR     via  stage1 * (1 - y - x_u - x_v + 2w + 2y x_u + 2y x_v - 4yw)
// then a Rosenberg chain b_1 = y_1 y_2, b_i = b_{i-1} y_{i+1} (L-2 links)
// and c_e * b_{L-2} y_L (c_e * y_1 y_2 when L = 2) replaces the product.
// Auxiliary ids follow the originals in edge order; within an edge
// w_1, y_1, ..., w_L, y_L, b_1, ..., b_{L-2}.
QuadratizedProblem quadratize(const EncodedProblem& prob,
                              const std::optional<QuadratizationPenalties>& override = std::nullopt);

// |E| * (2L - 2), the published count.
std::size_t aux_count_published(std::size_t edges, std::size_t bits);
// |E| * (3L - 2) for L >= 2, 0 for L = 1: what quadratize() allocates.
std::size_t aux_count_actual(std::size_t edges, std::size_t bits);

struct QubitComparison {
  std::size_t bits = 0;
  std::size_t onehot_qubits = 0;  // (n+1) c
  std::size_t log_qubits = 0;     // n L + m (2L - 2)
  // Edge threshold solving log_qubits < onehot_qubits for m:
  //   m < ((n+1)c - nL) / (2(L-1)); infinite when L = 1.
  double threshold = 0.0;
  bool advantage = false;
  // The published closed form, ((n+1)c - L) / (2(L-1)), which omits the
  // factor n on L; kept for comparison.
  double published_threshold = 0.0;
  bool published_advantage = false;
};

QubitComparison qubit_advantage_predicate(std::size_t n, std::size_t m, std::size_t colors);

struct QuadratizationReport {
  std::size_t original_assignments = 0;
  std::size_t energy_mismatches = 0;  // min over aux != HUBO energy
  bool energies_match = false;
  bool ground_states_match = false;
  Int hubo_ground_energy = 0;
  Int qubo_ground_energy = 0;
};

// Exhaustive check on <= 24 QUBO variables.
QuadratizationReport verify_quadratization(const EncodedProblem& hubo, const QuadratizedProblem& qubo);

}  // namespace qgc
