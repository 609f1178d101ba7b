#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qgc {

using Vertex = std::uint32_t;
using Label = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Undirected simple graph on vertices 0..n-1. Edges are stored with u < v
// in sorted order; the constructor rejects self-loops, duplicates and
// out-of-range endpoints with Error(InvalidInstance).
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  static Graph edgeless(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;
  bool connected() const;
  bool is_complete() const;
  bool is_cycle() const;

  // Index of an edge in edges(), or edge_count() when absent.
  std::size_t edge_index(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

struct Coloring {
  std::vector<Label> labels;

  std::size_t distinct_labels() const;
  bool proper(const Graph& g) const;
};

// Uniform random labelled spanning tree (Pruefer decoding) topped up with
// distinct random non-tree edges until
//   max(n-1, round_half_up(density * n(n-1)/2))
// edges are present. Deterministic in (n, density, seed).
Graph generate_random_connected(std::size_t n, double density, std::uint64_t seed);

std::size_t target_edge_count(std::size_t n, double density);

// Brooks' theorem bound: Delta+1 for complete graphs and odd cycles,
// Delta otherwise (and at least 1). Rejects disconnected graphs.
std::size_t brooks_upper_bound(const Graph& g);

inline constexpr std::size_t kExactChromaticLimit = 12;

// Exhaustive backtracking; refuses graphs above kExactChromaticLimit vertices.
std::size_t chromatic_number_exact(const Graph& g);

// Optimal coloring found by the same search as chromatic_number_exact.
Coloring optimal_coloring(const Graph& g);

Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order);

enum class GraphFormat { Json, Dimacs };

Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

// Picks DIMACS when the first non-blank character is not '{'.
GraphFormat sniff_graph_format(std::string_view text);

// FNV-1a over the JSON serialization, as 16 hex digits.
std::string graph_digest(const Graph& g);

}  // namespace qgc
