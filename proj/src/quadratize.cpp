#include "qgc/quadratize.hpp"

#include <algorithm>
#include <limits>

#include "qgc/enumerate.hpp"
#include "qgc/errors.hpp"
#include "qgc/logenc.hpp"

namespace qgc {

namespace {

struct EdgeProduct {
  std::size_t edge_index;
  Edge edge;
  Int constant;  // contributes regardless of labels
  Int slope;     // coefficient of the equality product
};

std::vector<EdgeProduct> edge_products(const EncodedProblem& prob) {
  if (!prob.logarithmic() || prob.quadratized || !prob.penalties.lex) {
    fail(ErrorKind::InvalidArgument, "quadratize expects an unquadratized logarithmic encoding");
  }
  const Int a = prob.penalties.lex->adjacency;
  std::vector<EdgeProduct> out;
  const auto edges = prob.graph.edges();
  const PartitionSpec spec =
      prob.partition ? *prob.partition : PartitionSpec::coloring(prob.graph);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge e = edges[i];
    auto alpha = spec.alpha.find(e);
    auto beta = spec.beta.find(e);
    if (alpha == spec.alpha.end() || beta == spec.beta.end()) {
      fail(ErrorKind::InvalidArgument, "partition spec misses an edge");
    }
    out.push_back({i, e, checked_mul(a, beta->second), checked_mul(a, alpha->second - beta->second)});
  }
  return out;
}

Int lex_span(const EncodedProblem& prob) {
  Int sum = 0;
  for (Int pk : prob.penalties.lex->p) sum = checked_add(sum, pk);
  return checked_mul(static_cast<Int>(prob.graph.vertex_count()), sum);
}

// x1 x2 - 2a(x1 + x2) + 3a: zero iff a = x1 x2, at least 1 otherwise.
void add_rosenberg(Polynomial& h, VarId a, VarId x1, VarId x2, Int weight) {
  h.add_term({x1, x2}, weight);
  h.add_term({a, x1}, checked_mul(-2, weight));
  h.add_term({a, x2}, checked_mul(-2, weight));
  h.add_term({a}, checked_mul(3, weight));
}

}  // namespace

QuadratizationPenalties default_quadratization_penalties(const EncodedProblem& prob) {
  Int widest = 0;
  for (const auto& ep : edge_products(prob)) widest = std::max(widest, abs(ep.slope));
  QuadratizationPenalties p;
  p.stage1 = checked_add(checked_add(widest, lex_span(prob)), 1);
  p.stage2 = p.stage1;
  p.product = checked_mul(3, p.stage1);
  return p;
}

QuadratizedProblem quadratize(const EncodedProblem& prob,
                              const std::optional<QuadratizationPenalties>& override) {
  const auto products = edge_products(prob);
  QuadratizedProblem out;
  out.backmap.resize(prob.num_vars());
  for (std::size_t i = 0; i < out.backmap.size(); ++i) out.backmap[i] = static_cast<VarId>(i);

  const std::size_t bits = prob.bits;
  out.problem = prob;
  out.problem.quadratized = true;
  out.problem.original_vars = prob.num_vars();
  if (bits < 2) return out;

  const QuadratizationPenalties pen = override ? *override : default_quadratization_penalties(prob);
  out.problem.penalties.quadratization = pen;

  Polynomial& h = out.problem.polynomial;
  h = lex_polynomial(prob.graph.vertex_count(), *prob.penalties.lex);
  auto& registry = out.problem.registry;
  auto fresh = [&](AuxKind kind, std::size_t edge, std::size_t index) {
    registry.push_back(AuxRole{kind, edge, index});
    return static_cast<VarId>(registry.size() - 1);
  };

  for (const auto& ep : products) {
    h.add_term({}, ep.constant);
    if (ep.slope == 0) continue;
    std::vector<VarId> ys;
    for (std::size_t k = 1; k <= bits; ++k) {
      const VarId xu = log_bit_var(bits, ep.edge.u, k);
      const VarId xv = log_bit_var(bits, ep.edge.v, k);
      const VarId w = fresh(AuxKind::BitProduct, ep.edge_index, k);
      const VarId y = fresh(AuxKind::Xnor, ep.edge_index, k);
      add_rosenberg(h, w, xu, xv, pen.product);
      // 1 - y - xu - xv + 2w + 2y xu + 2y xv - 4yw; equals |y - XNOR| when w = xu xv.
      const Int s = pen.stage1;
      h.add_term({}, s);
      h.add_term({y}, -s);
      h.add_term({xu}, -s);
      h.add_term({xv}, -s);
      h.add_term({w}, checked_mul(2, s));
      h.add_term({y, xu}, checked_mul(2, s));
      h.add_term({y, xv}, checked_mul(2, s));
      h.add_term({y, w}, checked_mul(-4, s));
      ys.push_back(y);
      ++out.aux.bit_product;
      ++out.aux.xnor;
    }
    VarId carry = ys[0];
    for (std::size_t i = 1; i + 1 < bits; ++i) {
      const VarId b = fresh(AuxKind::Chain, ep.edge_index, i);
      add_rosenberg(h, b, carry, ys[i], pen.stage2);
      carry = b;
      ++out.aux.chain;
    }
    h.add_term({carry, ys[bits - 1]}, ep.slope);
  }
  if (h.degree() > 2) fail(ErrorKind::Invariant, "quadratization left a term above degree 2");
  return out;
}

std::size_t aux_count_published(std::size_t edges, std::size_t bits) {
  if (bits < 1) fail(ErrorKind::InvalidArgument, "bit count must be at least 1");
  return edges * (2 * bits - 2);
}

std::size_t aux_count_actual(std::size_t edges, std::size_t bits) {
  if (bits < 1) fail(ErrorKind::InvalidArgument, "bit count must be at least 1");
  return bits == 1 ? 0 : edges * (3 * bits - 2);
}

QubitComparison qubit_advantage_predicate(std::size_t n, std::size_t m, std::size_t colors) {
  if (colors < 2) fail(ErrorKind::InvalidArgument, "qubit comparison needs at least 2 colors");
  QubitComparison out;
  const std::size_t bits = bits_for_colors(colors);
  out.bits = bits;
  out.onehot_qubits = (n + 1) * colors;
  out.log_qubits = n * bits + aux_count_published(m, bits);
  const auto onehot = static_cast<long long>(out.onehot_qubits);
  const auto nl = static_cast<long long>(n * bits);
  const auto l = static_cast<long long>(bits);
  if (bits == 1) {
    out.threshold = out.published_threshold = std::numeric_limits<double>::infinity();
    out.advantage = out.published_advantage = true;
    return out;
  }
  const long long lhs = 2 * static_cast<long long>(m) * (l - 1);
  out.threshold = 0.5 * static_cast<double>(onehot - nl) / static_cast<double>(l - 1);
  out.advantage = lhs < onehot - nl;
  out.published_threshold = 0.5 * static_cast<double>(onehot - l) / static_cast<double>(l - 1);
  out.published_advantage = lhs < onehot - l;
  return out;
}

QuadratizationReport verify_quadratization(const EncodedProblem& hubo, const QuadratizedProblem& qubo) {
  const std::size_t orig = hubo.num_vars();
  const std::size_t total = qubo.problem.num_vars();
  if (qubo.problem.original_vars != orig) {
    fail(ErrorKind::InvalidArgument, "quadratized problem does not extend this encoding");
  }
  if (total > kEnumerationLimit) {
    fail(ErrorKind::ResourceLimit, "verification enumerates " + std::to_string(total) +
                                       " variables; limit is " + std::to_string(kEnumerationLimit));
  }
  QuadratizationReport report;
  const auto hubo_energy = energy_table(hubo.polynomial, orig);
  const auto qubo_min = projected_minima(qubo.problem.polynomial, total, orig);
  report.original_assignments = hubo_energy.size();
  for (std::size_t i = 0; i < hubo_energy.size(); ++i)
    report.energy_mismatches += hubo_energy[i] != qubo_min[i];
  report.energies_match = report.energy_mismatches == 0;

  const auto hubo_gs = ground_states(hubo.polynomial, orig);
  const auto qubo_gs = ground_states(qubo.problem.polynomial, total);
  report.hubo_ground_energy = hubo_gs.energy;
  report.qubo_ground_energy = qubo_gs.energy;
  const std::uint64_t keep = (std::uint64_t{1} << orig) - 1;
  std::vector<std::uint64_t> projected;
  for (auto mask : qubo_gs.argmin) projected.push_back(mask & keep);
  std::sort(projected.begin(), projected.end());
  projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
  report.ground_states_match = hubo_gs.energy == qubo_gs.energy && projected == hubo_gs.argmin;
  return report;
}

}  // namespace qgc
