#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qgc/graph.hpp"
#include "qgc/model.hpp"

namespace qgc {

// L = max(1, ceil(log2 c)).
std::size_t bits_for_colors(std::size_t colors);

// P_k = (n+1)^(k-1), A = n * sum_k P_k + 1.
LexPenalties lex_penalties(std::size_t n, std::size_t bits);

// P_{k+1} > n * sum_{j<=k} P_j for all k, and A > n * sum_k P_k.
bool satisfies_lex_bounds(const LexPenalties& p, std::size_t n);

// Bit k (1-based) of vertex v.
inline VarId log_bit_var(std::size_t bits, Vertex v, std::size_t k) {
  return static_cast<VarId>(v * bits + (k - 1));
}

// prod_k (2 x[u][k] x[v][k] - x[u][k] - x[v][k] + 1), expanded: 1 iff the
// two bit strings are equal.
Polynomial label_equality(Vertex u, Vertex v, std::size_t bits);

// sum_k P_k sum_v x[v][k]
Polynomial lex_polynomial(std::size_t n, const LexPenalties& p);

// A * sum_{uv in E} label_equality(u, v) + lex_polynomial, over n*L
// variables, degree 2L.
EncodedProblem encode_mgc_log(const Graph& g, std::size_t colors);
EncodedProblem encode_mgc_log(const Graph& g);

// s[k-1] = number of vertices with bit k set.
struct IndexPopulation {
  std::vector<std::size_t> s;
  bool operator==(const IndexPopulation&) const = default;
};

IndexPopulation index_population(const EncodedProblem& prob, std::span<const std::uint8_t> a);

// Compares most significant entry first; throws Error(Dimension) on a
// length mismatch.
std::strong_ordering lex_compare(const IndexPopulation& s, const IndexPopulation& t);

// sum_k P_k s_k
Int lex_energy(const LexPenalties& p, const IndexPopulation& s);

// label(v) = sum_k 2^(k-1) x[v][k]; every bit string is a label.
Coloring decode_log(const EncodedProblem& prob, std::span<const std::uint8_t> a);

// Number of edges whose endpoints decode to the same label.
std::size_t equal_label_edges(const EncodedProblem& prob, std::span<const std::uint8_t> a);

// floor(n * sum P / gap) + 1 for a finite gap, 1 when unconstrained.
Int partition_penalty(std::size_t n, const LexPenalties& p, const std::optional<Int>& gap);

// sum_{uv} [alpha * eq(u,v) + beta * (1 - eq(u,v))] without the A factor.
Polynomial partition_polynomial(const Graph& g, const PartitionSpec& spec, std::size_t bits);

// A_partition * partition_polynomial + lex_polynomial.
EncodedProblem encode_general(const Graph& g, const PartitionSpec& spec, std::size_t bits);

using FeasibilityPredicate = std::function<bool(std::span<const std::uint8_t>)>;

// Proper coloring of g in the n*bits logarithmic register.
FeasibilityPredicate proper_coloring_predicate(const Graph& g, std::size_t bits);

// min over infeasible of the partition term minus min over feasible,
// std::nullopt when every assignment is feasible. Throws
// Error(InvalidInstance) when nothing is feasible and Error(ResourceLimit)
// when n*bits exceeds the enumeration limit.
std::optional<Int> feasibility_gap_bruteforce(const Graph& g, const PartitionSpec& spec,
                                              std::size_t bits, const FeasibilityPredicate& feasible);

}  // namespace qgc
