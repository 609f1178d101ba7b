#include "qgc/onehot.hpp"

#include "qgc/errors.hpp"

namespace qgc {

OneHotPenalties onehot_penalties(std::size_t n, std::size_t m, std::size_t c) {
  if (n < 1 || c < 1) fail(ErrorKind::InvalidArgument, "one-hot penalties need n >= 1 and c >= 1");
  OneHotPenalties p;
  p.link = static_cast<Int>(n) + 1;
  p.adjacency = checked_add(checked_mul(p.link, static_cast<Int>(c)), 1);
  p.onehot = checked_add(checked_mul(p.adjacency, static_cast<Int>(m) + 1),
                         checked_mul(p.link, static_cast<Int>(c)));
  return p;
}

bool satisfies_onehot_bounds(const OneHotPenalties& p, std::size_t m, std::size_t c) {
  const Int cc = static_cast<Int>(c);
  return p.link > 1 && p.adjacency > p.link * cc &&
         p.onehot > p.adjacency * static_cast<Int>(m) + p.link * cc;
}

EncodedProblem encode_mgc_onehot(const Graph& g, std::size_t colors, bool with_count) {
  const std::size_t n = g.vertex_count();
  if (colors < 1 || colors > n) {
    fail(ErrorKind::InvalidArgument, "color count must lie in 1.." + std::to_string(n) + ", got " +
                                         std::to_string(colors));
  }
  EncodedProblem prob;
  prob.kind = EncodingKind::OneHot;
  prob.graph = g;
  prob.colors = colors;
  prob.penalties.onehot = onehot_penalties(n, g.edge_count(), colors);
  const auto& pen = *prob.penalties.onehot;

  for (Vertex v = 0; v < n; ++v)
    for (Label c = 0; c < colors; ++c) prob.registry.push_back(VertexColorRole{v, c});
  if (with_count)
    for (Label c = 0; c < colors; ++c) prob.registry.push_back(IndicatorRole{c});

  Polynomial& h = prob.polynomial;
  for (Vertex v = 0; v < n; ++v) {
    Polynomial slack = Polynomial::constant(1);
    for (Label c = 0; c < colors; ++c) slack -= Polynomial::variable(onehot_color_var(colors, v, c));
    h += (slack * slack) * pen.onehot;
  }
  for (const auto& e : g.edges())
    for (Label c = 0; c < colors; ++c)
      h.add_term({onehot_color_var(colors, e.u, c), onehot_color_var(colors, e.v, c)}, pen.adjacency);
  if (with_count) {
    for (Label c = 0; c < colors; ++c) {
      const VarId y = onehot_indicator_var(n, colors, c);
      h.add_term({y}, 1);
      for (Vertex v = 0; v < n; ++v) {
        const VarId x = onehot_color_var(colors, v, c);
        h.add_term({x}, pen.link);
        h.add_term({x, y}, -pen.link);
      }
    }
  }
  prob.original_vars = prob.registry.size();
  return prob;
}

EncodedProblem encode_mgc_onehot(const Graph& g) {
  return encode_mgc_onehot(g, brooks_upper_bound(g));
}

namespace {

void require_onehot(const EncodedProblem& prob, std::span<const std::uint8_t> a) {
  if (prob.kind != EncodingKind::OneHot) fail(ErrorKind::InvalidArgument, "not a one-hot encoding");
  check_assignment(prob, a);
}

}  // namespace

OneHotDecoding decode_onehot(const EncodedProblem& prob, std::span<const std::uint8_t> a) {
  require_onehot(prob, a);
  const std::size_t n = prob.graph.vertex_count();
  OneHotDecoding out;
  Coloring coloring;
  coloring.labels.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t set = 0;
    for (Label c = 0; c < prob.colors; ++c) {
      if (a[onehot_color_var(prob.colors, v, c)]) {
        ++set;
        coloring.labels[v] = c;
      }
    }
    if (set != 1) out.violations.push_back(v);
  }
  if (out.violations.empty()) out.coloring = std::move(coloring);
  return out;
}

PropertyReport check_properties_onehot(const EncodedProblem& prob, std::span<const std::uint8_t> a) {
  require_onehot(prob, a);
  const std::size_t n = prob.graph.vertex_count();
  const std::size_t colors = prob.colors;
  const bool has_indicators = prob.num_vars() == (n + 1) * colors;
  PropertyReport report;

  report.one_hot_satisfied = true;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t set = 0;
    for (Label c = 0; c < colors; ++c) set += a[onehot_color_var(colors, v, c)];
    if (set != 1) report.one_hot_satisfied = false;
  }

  report.proper_coloring = true;
  for (const auto& e : prob.graph.edges())
    for (Label c = 0; c < colors; ++c)
      if (a[onehot_color_var(colors, e.u, c)] && a[onehot_color_var(colors, e.v, c)])
        report.proper_coloring = false;

  report.indicator_faithful = has_indicators;
  for (Label c = 0; c < colors && has_indicators; ++c) {
    bool used = false;
    for (Vertex v = 0; v < n; ++v) used = used || a[onehot_color_var(colors, v, c)];
    const bool flagged = a[onehot_indicator_var(n, colors, c)] != 0;
    if (flagged) ++report.colors_used;
    if (flagged != used) report.indicator_faithful = false;
  }
  return report;
}

}  // namespace qgc
