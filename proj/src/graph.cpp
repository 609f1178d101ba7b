#include "qgc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qgc/errors.hpp"

namespace qgc {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), adjacency_(vertex_count) {
  if (vertex_count == 0) fail(ErrorKind::InvalidInstance, "graph must have at least one vertex");
  for (auto& e : edges) {
    if (e.u >= n_ || e.v >= n_) {
      fail(ErrorKind::InvalidInstance,
           "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
               ") references a vertex >= " + std::to_string(n_));
    }
    if (e.u == e.v) {
      fail(ErrorKind::InvalidInstance, "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    fail(ErrorKind::InvalidInstance,
         "duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
  }
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.push_back({u, static_cast<Vertex>((u + 1) % n)});
  return Graph(n, std::move(edges));
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph(n, std::move(edges));
}

Graph Graph::edgeless(std::size_t n) { return Graph(n, {}); }

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::size_t Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::connected() const {
  if (n_ == 0) return false;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

bool Graph::is_complete() const { return edges_.size() == n_ * (n_ - 1) / 2; }

bool Graph::is_cycle() const {
  if (n_ < 3 || edges_.size() != n_) return false;
  for (const auto& nbrs : adjacency_)
    if (nbrs.size() != 2) return false;
  return connected();
}

std::size_t Coloring::distinct_labels() const {
  std::vector<Label> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

bool Coloring::proper(const Graph& g) const {
  if (labels.size() != g.vertex_count()) return false;
  for (const auto& e : g.edges())
    if (labels[e.u] == labels[e.v]) return false;
  return true;
}

std::size_t target_edge_count(std::size_t n, double density) {
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  const auto rounded = static_cast<std::size_t>(std::floor(density * pairs + 0.5));
  const std::size_t max_edges = n * (n - 1) / 2;
  return std::min(max_edges, std::max(n - 1, rounded));
}

Graph generate_random_connected(std::size_t n, double density, std::uint64_t seed) {
  if (n < 2) fail(ErrorKind::InvalidInstance, "random connected graph needs n >= 2");
  if (!(density > 0.0 && density <= 1.0)) {
    fail(ErrorKind::InvalidArgument, "density must lie in (0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;

  // Pruefer sequence of length n-2 decodes to a uniform labelled tree.
  std::vector<Vertex> pruefer(n - 2);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (auto& p : pruefer) p = pick(rng);
  std::vector<std::size_t> remaining(n, 1);
  for (Vertex p : pruefer) ++remaining[p];
  for (Vertex p : pruefer) {
    Vertex leaf = 0;
    while (remaining[leaf] != 1) ++leaf;
    edges.push_back({leaf, p});
    --remaining[leaf];
    --remaining[p];
  }
  {
    Vertex a = 0;
    while (remaining[a] != 1) ++a;
    Vertex b = a + 1;
    while (remaining[b] != 1) ++b;
    edges.push_back({a, b});
  }
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);

  const std::size_t target = target_edge_count(n, density);
  if (edges.size() < target) {
    std::vector<Edge> candidates;
    std::vector<Edge> tree = edges;
    std::sort(tree.begin(), tree.end());
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!std::binary_search(tree.begin(), tree.end(), Edge{u, v})) candidates.push_back({u, v});
    std::shuffle(candidates.begin(), candidates.end(), rng);
    candidates.resize(target - edges.size());
    edges.insert(edges.end(), candidates.begin(), candidates.end());
  }
  return Graph(n, std::move(edges));
}

std::size_t brooks_upper_bound(const Graph& g) {
  if (!g.connected()) fail(ErrorKind::InvalidInstance, "Brooks bound requires a connected graph");
  const std::size_t delta = g.max_degree();
  if (g.is_complete() || (g.is_cycle() && g.vertex_count() % 2 == 1)) return delta + 1;
  return std::max<std::size_t>(delta, 1);
}

namespace {

struct ColoringSearch {
  const Graph& g;
  std::vector<Vertex> order;
  std::vector<Label> labels;
  std::vector<char> assigned;

  explicit ColoringSearch(const Graph& graph)
      : g(graph), labels(graph.vertex_count(), 0), assigned(graph.vertex_count(), 0) {
    order.resize(g.vertex_count());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  // Labels beyond used+1 are symmetric to used+1 and are skipped.
  bool extend(std::size_t depth, std::size_t colors, std::size_t used) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    const std::size_t limit = std::min(colors, used + 1);
    for (Label c = 0; c < limit; ++c) {
      bool clash = false;
      for (Vertex w : g.neighbors(v)) {
        if (assigned[w] && labels[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      labels[v] = c;
      assigned[v] = 1;
      if (extend(depth + 1, colors, std::max<std::size_t>(used, c + 1))) return true;
      assigned[v] = 0;
    }
    return false;
  }
};

}  // namespace

Coloring optimal_coloring(const Graph& g) {
  if (g.vertex_count() > kExactChromaticLimit) {
    fail(ErrorKind::ResourceLimit, "exact chromatic number limited to " +
                                       std::to_string(kExactChromaticLimit) + " vertices");
  }
  for (std::size_t colors = 1; colors <= g.vertex_count(); ++colors) {
    ColoringSearch search(g);
    if (search.extend(0, colors, 0)) return Coloring{search.labels};
  }
  fail(ErrorKind::Invariant, "no coloring found with n colors");
}

std::size_t chromatic_number_exact(const Graph& g) { return optimal_coloring(g).distinct_labels(); }

Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) fail(ErrorKind::InvalidArgument, "order is not a permutation of the vertices");
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v >= n || seen[v]) fail(ErrorKind::InvalidArgument, "order is not a permutation of the vertices");
    seen[v] = 1;
  }
  std::vector<Label> labels(n, 0);
  std::vector<char> colored(n, 0);
  std::vector<char> taken;
  for (Vertex v : order) {
    taken.assign(g.degree(v) + 1, 0);
    for (Vertex w : g.neighbors(v))
      if (colored[w] && labels[w] < taken.size()) taken[labels[w]] = 1;
    Label c = 0;
    while (taken[c]) ++c;
    labels[v] = c;
    colored[v] = 1;
  }
  return Coloring{std::move(labels)};
}

namespace {

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  auto error = [&](const std::string& msg) {
    fail(ErrorKind::Parse, "dimacs line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (have_header) error("duplicate problem line");
      if (!(fields >> kind >> n >> m) || (kind != "edge" && kind != "col")) {
        error("expected 'p edge <n> <m>'");
      }
      if (n == 0) error("vertex count must be positive");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) error("edge before problem line");
      long long u = 0, v = 0;
      if (!(fields >> u >> v)) error("expected 'e <u> <v>'");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n) {
        error("vertex index out of range 1.." + std::to_string(n));
      }
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      error("unknown line type '" + tag + "'");
    }
  }
  if (!have_header) fail(ErrorKind::Parse, "dimacs: missing 'p edge' line");
  if (edges.size() != m) {
    fail(ErrorKind::Parse, "dimacs: header declares " + std::to_string(m) + " edges, found " +
                               std::to_string(edges.size()));
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const Error& e) {
    fail(ErrorKind::Parse, std::string("dimacs: ") + e.what());
  }
}

Graph parse_json_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, "graph json at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    fail(ErrorKind::Parse, "graph json must be an object with 'n' and 'edges'");
  }
  if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0) {
    fail(ErrorKind::Parse, "graph json: 'n' must be a positive integer");
  }
  const auto n = doc["n"].get<std::size_t>();
  std::vector<Edge> edges;
  const auto& list = doc["edges"];
  if (!list.is_array()) fail(ErrorKind::Parse, "graph json: 'edges' must be an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& e = list[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      fail(ErrorKind::Parse, "graph json: edges[" + std::to_string(i) + "] must be [u, v]");
    }
    const auto u = e[0].get<std::uint64_t>();
    const auto v = e[1].get<std::uint64_t>();
    if (u >= n || v >= n) {
      fail(ErrorKind::Parse, "graph json: edges[" + std::to_string(i) + "] out of range");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const Error& e) {
    fail(ErrorKind::Parse, std::string("graph json: ") + e.what());
  }
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Json ? parse_json_graph(text) : parse_dimacs(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Json) {
    nlohmann::ordered_json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) doc["edges"].push_back({e.u, e.v});
    return doc.dump();
  }
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  }
  return out;
}

GraphFormat sniff_graph_format(std::string_view text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\n' || ch == '\t' || ch == '\r') continue;
    return ch == '{' ? GraphFormat::Json : GraphFormat::Dimacs;
  }
  return GraphFormat::Dimacs;
}

std::string graph_digest(const Graph& g) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_graph(g, GraphFormat::Json)) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace qgc
