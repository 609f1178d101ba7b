#include "qgc/logenc.hpp"

#include "qgc/enumerate.hpp"
#include "qgc/errors.hpp"

namespace qgc {

std::size_t bits_for_colors(std::size_t colors) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < colors) ++bits;
  return std::max<std::size_t>(bits, 1);
}

LexPenalties lex_penalties(std::size_t n, std::size_t bits) {
  if (n < 1 || bits < 1) fail(ErrorKind::InvalidArgument, "lex penalties need n >= 1 and L >= 1");
  LexPenalties out;
  Int sum = 0;
  for (std::size_t k = 1; k <= bits; ++k) {
    const Int pk = checked_pow(static_cast<Int>(n) + 1, static_cast<unsigned>(k - 1));
    out.p.push_back(pk);
    sum = checked_add(sum, pk);
  }
  out.adjacency = checked_add(checked_mul(static_cast<Int>(n), sum), 1);
  return out;
}

bool satisfies_lex_bounds(const LexPenalties& p, std::size_t n) {
  const Int nn = static_cast<Int>(n);
  Int prefix = 0;
  for (std::size_t k = 0; k < p.p.size(); ++k) {
    if (k > 0 && !(p.p[k] > nn * prefix)) return false;
    prefix += p.p[k];
  }
  return p.adjacency > nn * prefix;
}

Polynomial label_equality(Vertex u, Vertex v, std::size_t bits) {
  Polynomial product = Polynomial::constant(1);
  for (std::size_t k = 1; k <= bits; ++k)
    product = product * Polynomial::xnor(log_bit_var(bits, u, k), log_bit_var(bits, v, k));
  return product;
}

Polynomial lex_polynomial(std::size_t n, const LexPenalties& p) {
  const std::size_t bits = p.p.size();
  Polynomial out;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t k = 1; k <= bits; ++k) out.add_term({log_bit_var(bits, v, k)}, p.p[k - 1]);
  return out;
}

namespace {

EncodedProblem log_skeleton(const Graph& g, std::size_t bits, EncodingKind kind) {
  EncodedProblem prob;
  prob.kind = kind;
  prob.graph = g;
  prob.bits = bits;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (std::size_t k = 1; k <= bits; ++k) prob.registry.push_back(VertexBitRole{v, k});
  prob.original_vars = prob.registry.size();
  return prob;
}

void require_log(const EncodedProblem& prob, std::span<const std::uint8_t> a) {
  if (!prob.logarithmic()) fail(ErrorKind::InvalidArgument, "not a logarithmic encoding");
  if (prob.quadratized) {
    if (a.size() != prob.num_vars() && a.size() != prob.original_vars) check_assignment(prob, a);
  } else {
    check_assignment(prob, a);
  }
}

}  // namespace

EncodedProblem encode_mgc_log(const Graph& g, std::size_t colors) {
  const std::size_t n = g.vertex_count();
  // Every bit string is a label, so c may exceed n.
  if (colors < 1) fail(ErrorKind::InvalidArgument, "color count must be at least 1");
  const std::size_t bits = bits_for_colors(colors);
  EncodedProblem prob = log_skeleton(g, bits, EncodingKind::Logarithmic);
  prob.colors = colors;
  prob.penalties.lex = lex_penalties(n, bits);
  const auto& lex = *prob.penalties.lex;
  for (const auto& e : g.edges()) prob.polynomial += label_equality(e.u, e.v, bits) * lex.adjacency;
  prob.polynomial += lex_polynomial(n, lex);
  return prob;
}

EncodedProblem encode_mgc_log(const Graph& g) { return encode_mgc_log(g, brooks_upper_bound(g)); }

IndexPopulation index_population(const EncodedProblem& prob, std::span<const std::uint8_t> a) {
  require_log(prob, a);
  IndexPopulation pop;
  pop.s.assign(prob.bits, 0);
  for (Vertex v = 0; v < prob.graph.vertex_count(); ++v)
    for (std::size_t k = 1; k <= prob.bits; ++k) pop.s[k - 1] += a[log_bit_var(prob.bits, v, k)];
  return pop;
}

std::strong_ordering lex_compare(const IndexPopulation& s, const IndexPopulation& t) {
  if (s.s.size() != t.s.size()) fail(ErrorKind::Dimension, "index populations differ in length");
  for (std::size_t k = s.s.size(); k-- > 0;) {
    if (s.s[k] != t.s[k]) return s.s[k] <=> t.s[k];
  }
  return std::strong_ordering::equal;
}

Int lex_energy(const LexPenalties& p, const IndexPopulation& s) {
  if (p.p.size() != s.s.size()) fail(ErrorKind::Dimension, "index population length differs from L");
  Int e = 0;
  for (std::size_t k = 0; k < s.s.size(); ++k) e = checked_add(e, checked_mul(p.p[k], static_cast<Int>(s.s[k])));
  return e;
}

Coloring decode_log(const EncodedProblem& prob, std::span<const std::uint8_t> a) {
  require_log(prob, a);
  Coloring out;
  out.labels.assign(prob.graph.vertex_count(), 0);
  for (Vertex v = 0; v < prob.graph.vertex_count(); ++v)
    for (std::size_t k = 1; k <= prob.bits; ++k)
      if (a[log_bit_var(prob.bits, v, k)]) out.labels[v] |= Label{1} << (k - 1);
  return out;
}

std::size_t equal_label_edges(const EncodedProblem& prob, std::span<const std::uint8_t> a) {
  const Coloring c = decode_log(prob, a);
  std::size_t count = 0;
  for (const auto& e : prob.graph.edges()) count += c.labels[e.u] == c.labels[e.v];
  return count;
}

Int partition_penalty(std::size_t n, const LexPenalties& p, const std::optional<Int>& gap) {
  if (!gap) return 1;
  if (*gap <= 0) fail(ErrorKind::InvalidArgument, "feasibility gap must be positive");
  Int sum = 0;
  for (Int pk : p.p) sum = checked_add(sum, pk);
  return checked_mul(static_cast<Int>(n), sum) / *gap + 1;
}

Polynomial partition_polynomial(const Graph& g, const PartitionSpec& spec, std::size_t bits) {
  Polynomial out;
  for (const auto& e : g.edges()) {
    auto a = spec.alpha.find(e);
    auto b = spec.beta.find(e);
    if (a == spec.alpha.end() || b == spec.beta.end()) {
      fail(ErrorKind::InvalidArgument,
           "partition spec has no cost for edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    // alpha*eq + beta*(1 - eq) = beta + (alpha - beta)*eq
    out.add_term({}, b->second);
    const Int slope = a->second - b->second;
    if (slope != 0) out += label_equality(e.u, e.v, bits) * slope;
  }
  return out;
}

EncodedProblem encode_general(const Graph& g, const PartitionSpec& spec, std::size_t bits) {
  if (bits < 1) fail(ErrorKind::InvalidArgument, "bit count must be at least 1");
  const std::size_t n = g.vertex_count();
  EncodedProblem prob = log_skeleton(g, bits, EncodingKind::GeneralPartition);
  prob.partition = spec;
  LexPenalties lex = lex_penalties(n, bits);
  lex.adjacency = partition_penalty(n, lex, spec.gap);
  prob.polynomial = partition_polynomial(g, spec, bits) * lex.adjacency;
  prob.polynomial += lex_polynomial(n, lex);
  prob.penalties.lex = std::move(lex);
  return prob;
}

FeasibilityPredicate proper_coloring_predicate(const Graph& g, std::size_t bits) {
  return [g, bits](std::span<const std::uint8_t> a) {
    for (const auto& e : g.edges()) {
      bool equal = true;
      for (std::size_t k = 1; k <= bits && equal; ++k)
        equal = a[log_bit_var(bits, e.u, k)] == a[log_bit_var(bits, e.v, k)];
      if (equal) return false;
    }
    return true;
  };
}

std::optional<Int> feasibility_gap_bruteforce(const Graph& g, const PartitionSpec& spec,
                                              std::size_t bits, const FeasibilityPredicate& feasible) {
  const std::size_t num_vars = g.vertex_count() * bits;
  const auto table = energy_table(partition_polynomial(g, spec, bits), num_vars);
  std::optional<Int> best_feasible, best_infeasible;
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    const Assignment a = mask_to_assignment(mask, num_vars);
    auto& slot = feasible(a) ? best_feasible : best_infeasible;
    if (!slot || table[mask] < *slot) slot = table[mask];
  }
  if (!best_feasible) {
    fail(ErrorKind::InvalidInstance, "no assignment is feasible; the feasibility gap is undefined");
  }
  if (!best_infeasible) return std::nullopt;
  return *best_infeasible - *best_feasible;
}

}  // namespace qgc
