#include "qgc/gates.hpp"

#include <algorithm>

#include "qgc/errors.hpp"
#include "qgc/logenc.hpp"

namespace qgc {

Dyadic Dyadic::normalized(Int num, unsigned shift) {
  if (num == 0) return {0, 0};
  while (shift > 0 && (num & 1) == 0) {
    num /= 2;
    --shift;
  }
  return {num, shift};
}

SpinPolynomial ising_expand(const Polynomial& p) {
  // Accumulate everything over the common denominator 2^degree.
  const auto depth = static_cast<unsigned>(p.degree());
  std::map<Monomial, Int> acc;
  for (const auto& [m, c] : p.terms()) {
    const Int scaled = checked_mul(c, Int{1} << (depth - m.size()));
    const std::size_t subsets = std::size_t{1} << m.size();
    for (std::size_t t = 0; t < subsets; ++t) {
      Monomial spins;
      for (std::size_t i = 0; i < m.size(); ++i)
        if ((t >> i) & 1U) spins.push_back(m[i]);
      const Int signed_coeff = (spins.size() % 2 == 0) ? scaled : -scaled;
      auto& slot = acc[std::move(spins)];
      slot = checked_add(slot, signed_coeff);
    }
  }
  SpinPolynomial out;
  for (auto& [m, num] : acc)
    if (num != 0) out.terms.emplace(m, Dyadic::normalized(num, depth));
  return out;
}

Dyadic evaluate_spins(const SpinPolynomial& sp, std::span<const std::int8_t> spins) {
  unsigned depth = 0;
  for (const auto& [m, d] : sp.terms) depth = std::max(depth, d.shift);
  Int total = 0;
  for (const auto& [m, d] : sp.terms) {
    Int sign = 1;
    for (VarId j : m) {
      if (j >= spins.size()) fail(ErrorKind::Dimension, "spin assignment too short");
      sign *= spins[j];
    }
    total = checked_add(total, sign * checked_mul(d.num, Int{1} << (depth - d.shift)));
  }
  return Dyadic::normalized(total, depth);
}

GateReport cnot_count_oracle(const Polynomial& p) {
  GateReport report;
  for (const auto& [m, d] : ising_expand(p).terms) {
    if (m.size() < 2) continue;
    ++report.histogram[m.size()];
    report.cnot += 2 * (m.size() - 1);
  }
  return report;
}

std::size_t cnot_count_onehot_closed(std::size_t n, std::size_t m, std::size_t colors) {
  return colors * (n * (colors + 1) + 2 * m);
}

std::size_t cnot_count_log_closed(std::size_t m, std::size_t bits) {
  if (bits < 1) fail(ErrorKind::InvalidArgument, "bit count must be at least 1");
  return m * (2 * (bits - 1) * (std::size_t{1} << bits) + 2);
}

Polynomial adjacency_part(const EncodedProblem& prob) {
  if (!prob.logarithmic() || !prob.penalties.lex || prob.quadratized) {
    fail(ErrorKind::InvalidArgument, "adjacency part is defined for unquadratized logarithmic encodings");
  }
  return prob.polynomial - lex_polynomial(prob.graph.vertex_count(), *prob.penalties.lex);
}

nlohmann::json gate_report_json(const GateReport& r) {
  nlohmann::json doc;
  doc["cnot"] = r.cnot;
  doc["histogram"] = nlohmann::json::object();
  for (const auto& [k, count] : r.histogram) doc["histogram"][std::to_string(k)] = count;
  return doc;
}

}  // namespace qgc
