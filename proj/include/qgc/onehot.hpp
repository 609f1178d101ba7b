#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qgc/graph.hpp"
#include "qgc/model.hpp"

namespace qgc {

// Explicit penalties satisfying
//   link > 1,  adjacency > link*c,  onehot > adjacency*m + link*c:
//   link = n+1, adjacency = (n+1)c + 1, onehot = adjacency*(m+1) + link*c.
OneHotPenalties onehot_penalties(std::size_t n, std::size_t m, std::size_t c);

bool satisfies_onehot_bounds(const OneHotPenalties& p, std::size_t m, std::size_t c);

inline VarId onehot_color_var(std::size_t colors, Vertex v, Label c) {
  return static_cast<VarId>(v * colors + c);
}
inline VarId onehot_indicator_var(std::size_t n, std::size_t colors, Label c) {
  return static_cast<VarId>(n * colors + c);
}

// Minimum graph coloring QUBO over (n+1)*c variables:
//   A_oh * sum_v (1 - sum_c x[v][c])^2 + A_adj * sum_{uv in E} sum_c x[u][c] x[v][c]
//   + sum_c y[c] + A_link * sum_v sum_c x[v][c] (1 - y[c])
// With with_count = false the count and link terms (and the y register)
// are dropped, giving the decision-version QUBO on n*c variables.
EncodedProblem encode_mgc_onehot(const Graph& g, std::size_t colors, bool with_count = true);
EncodedProblem encode_mgc_onehot(const Graph& g);

struct OneHotDecoding {
  std::optional<Coloring> coloring;
  std::vector<Vertex> violations;  // vertices without exactly one color bit
};

OneHotDecoding decode_onehot(const EncodedProblem& prob, std::span<const std::uint8_t> a);

struct PropertyReport {
  bool indicator_faithful = false;
  bool proper_coloring = false;
  bool one_hot_satisfied = false;
  std::size_t colors_used = 0;  // |{c : y[c] = 1}|
};

PropertyReport check_properties_onehot(const EncodedProblem& prob, std::span<const std::uint8_t> a);

}  // namespace qgc
