#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgc/graph.hpp"
#include "qgc/int128.hpp"
#include "qgc/polynomial.hpp"

namespace qgc {

// x[v][c]: vertex v takes color c (one-hot, c is 0-based).
struct VertexColorRole {
  Vertex vertex;
  Label color;
  bool operator==(const VertexColorRole&) const = default;
};

// y[c]: color c is in use (one-hot).
struct IndicatorRole {
  Label color;
  bool operator==(const IndicatorRole&) const = default;
};

// x[v][k]: bit k of vertex v's label (logarithmic, k is 1-based, 1 = LSB).
struct VertexBitRole {
  Vertex vertex;
  std::size_t bit;
  bool operator==(const VertexBitRole&) const = default;
};

enum class AuxKind { BitProduct, Xnor, Chain };

// w[e][k], y[e][k], b[e][i]: quadratization auxiliaries. Indices 1-based.
struct AuxRole {
  AuxKind kind;
  std::size_t edge;
  std::size_t index;
  bool operator==(const AuxRole&) const = default;
};

using VariableRole = std::variant<VertexColorRole, IndicatorRole, VertexBitRole, AuxRole>;

std::string role_name(const VariableRole& role);

enum class EncodingKind { OneHot, Logarithmic, GeneralPartition };

std::string encoding_name(EncodingKind kind);
EncodingKind parse_encoding_name(const std::string& name);

struct OneHotPenalties {
  Int link = 0;
  Int adjacency = 0;
  Int onehot = 0;
  bool operator==(const OneHotPenalties&) const = default;
};

// p[k-1] is P_k; `adjacency` doubles as A_partition for general encodings.
struct LexPenalties {
  std::vector<Int> p;
  Int adjacency = 0;
  bool operator==(const LexPenalties&) const = default;
};

struct QuadratizationPenalties {
  Int stage1 = 0;   // XNOR-value auxiliaries
  Int stage2 = 0;   // product chain
  Int product = 0;  // bit-product auxiliaries
  bool operator==(const QuadratizationPenalties&) const = default;
};

struct PenaltyRecord {
  std::optional<OneHotPenalties> onehot;
  std::optional<LexPenalties> lex;
  std::optional<QuadratizationPenalties> quadratization;
  bool operator==(const PenaltyRecord&) const = default;
};

// Pairwise costs of a label-symmetric partition problem: alpha when the
// endpoint labels agree, beta when they differ. An absent gap means the
// problem has no hard constraints.
struct PartitionSpec {
  std::map<Edge, Int> alpha;
  std::map<Edge, Int> beta;
  std::optional<Int> gap;

  // alpha = 1, beta = 0, gap = 1 on every edge.
  static PartitionSpec coloring(const Graph& g);

  bool operator==(const PartitionSpec&) const = default;
};

nlohmann::json partition_spec_to_json(const PartitionSpec& spec);
PartitionSpec partition_spec_from_json(const nlohmann::json& doc);

struct EncodedProblem {
  EncodingKind kind = EncodingKind::OneHot;
  Polynomial polynomial;
  std::vector<VariableRole> registry;
  PenaltyRecord penalties;
  Graph graph;
  std::size_t colors = 0;  // C_num; 0 for general partition encodings
  std::size_t bits = 0;    // L for logarithmic encodings, 0 for one-hot
  std::optional<PartitionSpec> partition;
  // Set by quadratization: ids < original_vars are the pre-quadratization
  // variables, unchanged.
  bool quadratized = false;
  std::size_t original_vars = 0;

  std::size_t num_vars() const { return registry.size(); }
  bool logarithmic() const { return kind != EncodingKind::OneHot; }
};

// Throws Error(Dimension) when the assignment width differs from the registry.
void check_assignment(const EncodedProblem& prob, std::span<const std::uint8_t> a);

// Model JSON interchange. Coefficients travel as decimal strings.
nlohmann::json to_model_json(const EncodedProblem& prob);
EncodedProblem from_model_json(const nlohmann::json& doc);

std::string bits_to_string(std::span<const std::uint8_t> bits);
Assignment bits_from_string(const std::string& text);

}  // namespace qgc
