#include "qgc/model.hpp"

#include <cstdio>

#include "qgc/errors.hpp"

namespace qgc {

using nlohmann::json;

namespace {

char aux_letter(AuxKind kind) {
  switch (kind) {
    case AuxKind::BitProduct: return 'w';
    case AuxKind::Xnor: return 'y';
    case AuxKind::Chain: return 'b';
  }
  return '?';
}

std::string two_index(char letter, std::size_t a, std::size_t b) {
  return std::string(1, letter) + "[" + std::to_string(a) + "][" + std::to_string(b) + "]";
}

// "x[3][1]" -> ('x', {3, 1})
std::pair<char, std::vector<std::size_t>> split_role(const std::string& text) {
  if (text.size() < 4) fail(ErrorKind::Parse, "bad role '" + text + "'");
  std::vector<std::size_t> idx;
  std::size_t pos = 1;
  while (pos < text.size()) {
    if (text[pos] != '[') fail(ErrorKind::Parse, "bad role '" + text + "'");
    const auto close = text.find(']', pos);
    if (close == std::string::npos || close == pos + 1) fail(ErrorKind::Parse, "bad role '" + text + "'");
    std::size_t value = 0;
    for (std::size_t i = pos + 1; i < close; ++i) {
      if (text[i] < '0' || text[i] > '9') fail(ErrorKind::Parse, "bad role '" + text + "'");
      value = value * 10 + static_cast<std::size_t>(text[i] - '0');
    }
    idx.push_back(value);
    pos = close + 1;
  }
  return {text[0], idx};
}

VariableRole parse_role(const std::string& text, EncodingKind kind) {
  auto [letter, idx] = split_role(text);
  if (letter == 'x' && idx.size() == 2) {
    if (kind == EncodingKind::OneHot)
      return VertexColorRole{static_cast<Vertex>(idx[0]), static_cast<Label>(idx[1])};
    return VertexBitRole{static_cast<Vertex>(idx[0]), idx[1]};
  }
  if (letter == 'y' && idx.size() == 1) return IndicatorRole{static_cast<Label>(idx[0])};
  if (letter == 'y' && idx.size() == 2) return AuxRole{AuxKind::Xnor, idx[0], idx[1]};
  if (letter == 'w' && idx.size() == 2) return AuxRole{AuxKind::BitProduct, idx[0], idx[1]};
  if (letter == 'b' && idx.size() == 2) return AuxRole{AuxKind::Chain, idx[0], idx[1]};
  fail(ErrorKind::Parse, "unknown role '" + text + "'");
}

json int_json(Int v) { return to_string(v); }

Int int_from(const json& j, const char* what) {
  if (!j.is_string()) fail(ErrorKind::Parse, std::string(what) + " must be a decimal string");
  return parse_int(j.get<std::string>());
}

std::string edge_key(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Edge parse_edge_key(const std::string& key) {
  const auto dash = key.find('-');
  if (dash == std::string::npos) fail(ErrorKind::Parse, "edge key '" + key + "' is not 'u-v'");
  try {
    Edge e{static_cast<Vertex>(std::stoul(key.substr(0, dash))),
           static_cast<Vertex>(std::stoul(key.substr(dash + 1)))};
    if (e.u > e.v) std::swap(e.u, e.v);
    return e;
  } catch (const std::logic_error&) {
    fail(ErrorKind::Parse, "edge key '" + key + "' is not 'u-v'");
  }
}

}  // namespace

std::string role_name(const VariableRole& role) {
  return std::visit(
      [](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, VertexColorRole>) {
          return two_index('x', r.vertex, r.color);
        } else if constexpr (std::is_same_v<T, IndicatorRole>) {
          return "y[" + std::to_string(r.color) + "]";
        } else if constexpr (std::is_same_v<T, VertexBitRole>) {
          return two_index('x', r.vertex, r.bit);
        } else {
          return two_index(aux_letter(r.kind), r.edge, r.index);
        }
      },
      role);
}

std::string encoding_name(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::OneHot: return "onehot";
    case EncodingKind::Logarithmic: return "log";
    case EncodingKind::GeneralPartition: return "partition";
  }
  return "?";
}

EncodingKind parse_encoding_name(const std::string& name) {
  if (name == "onehot") return EncodingKind::OneHot;
  if (name == "log") return EncodingKind::Logarithmic;
  if (name == "partition") return EncodingKind::GeneralPartition;
  fail(ErrorKind::Parse, "unknown encoding '" + name + "'");
}

PartitionSpec PartitionSpec::coloring(const Graph& g) {
  PartitionSpec spec;
  for (const auto& e : g.edges()) {
    spec.alpha[e] = 1;
    spec.beta[e] = 0;
  }
  spec.gap = 1;
  return spec;
}

json partition_spec_to_json(const PartitionSpec& spec) {
  json doc;
  doc["alpha"] = json::object();
  doc["beta"] = json::object();
  for (const auto& [e, a] : spec.alpha) doc["alpha"][edge_key(e)] = static_cast<long long>(a);
  for (const auto& [e, b] : spec.beta) doc["beta"][edge_key(e)] = static_cast<long long>(b);
  if (spec.gap) {
    doc["gap"] = static_cast<long long>(*spec.gap);
  } else {
    doc["gap"] = "unconstrained";
  }
  return doc;
}

PartitionSpec partition_spec_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("alpha") || !doc.contains("beta") || !doc.contains("gap")) {
    fail(ErrorKind::Parse, "partition spec needs 'alpha', 'beta' and 'gap'");
  }
  PartitionSpec spec;
  auto read_costs = [](const json& obj, std::map<Edge, Int>& out, const char* name) {
    if (!obj.is_object()) fail(ErrorKind::Parse, std::string("'") + name + "' must be an object");
    for (const auto& [key, value] : obj.items()) {
      if (!value.is_number_integer()) {
        fail(ErrorKind::Parse, std::string(name) + "[" + key + "] must be an integer");
      }
      out[parse_edge_key(key)] = value.get<long long>();
    }
  };
  read_costs(doc["alpha"], spec.alpha, "alpha");
  read_costs(doc["beta"], spec.beta, "beta");
  const auto& gap = doc["gap"];
  if (gap.is_string() && gap.get<std::string>() == "unconstrained") {
    spec.gap.reset();
  } else if (gap.is_number_integer() && gap.get<long long>() > 0) {
    spec.gap = gap.get<long long>();
  } else {
    fail(ErrorKind::Parse, "'gap' must be a positive integer or \"unconstrained\"");
  }
  return spec;
}

void check_assignment(const EncodedProblem& prob, std::span<const std::uint8_t> a) {
  if (a.size() != prob.num_vars()) {
    fail(ErrorKind::Dimension, "assignment has " + std::to_string(a.size()) +
                                   " bits, problem has " + std::to_string(prob.num_vars()));
  }
}

json to_model_json(const EncodedProblem& prob) {
  json doc;
  doc["num_vars"] = prob.num_vars();
  doc["variables"] = json::array();
  for (std::size_t i = 0; i < prob.registry.size(); ++i) {
    doc["variables"].push_back({{"id", i}, {"role", role_name(prob.registry[i])}});
  }
  doc["terms"] = json::array();
  for (const auto& [m, c] : prob.polynomial.terms()) {
    doc["terms"].push_back({{"vars", m}, {"coeff", int_json(c)}});
  }
  json meta;
  meta["encoding"] = encoding_name(prob.kind);
  meta["colors"] = prob.colors;
  meta["bits"] = prob.bits;
  meta["degree"] = prob.polynomial.degree();
  meta["graph"] = json::parse(serialize_graph(prob.graph, GraphFormat::Json));
  meta["graph_digest"] = graph_digest(prob.graph);
  json pen = json::object();
  if (const auto& p = prob.penalties.onehot) {
    pen["onehot"] = {{"link", int_json(p->link)},
                     {"adjacency", int_json(p->adjacency)},
                     {"onehot", int_json(p->onehot)}};
  }
  if (const auto& p = prob.penalties.lex) {
    json ps = json::array();
    for (Int v : p->p) ps.push_back(int_json(v));
    pen["lex"] = {{"p", ps}, {"adjacency", int_json(p->adjacency)}};
  }
  if (const auto& p = prob.penalties.quadratization) {
    pen["quadratization"] = {{"stage1", int_json(p->stage1)},
                             {"stage2", int_json(p->stage2)},
                             {"product", int_json(p->product)}};
  }
  meta["penalties"] = pen;
  if (prob.partition) meta["partition"] = partition_spec_to_json(*prob.partition);
  meta["quadratized"] = prob.quadratized;
  meta["original_vars"] = prob.original_vars;
  if (prob.quadratized) {
    json backmap = json::array();
    for (std::size_t i = 0; i < prob.original_vars; ++i) backmap.push_back(i);
    meta["backmap"] = backmap;
  }
  doc["metadata"] = meta;
  return doc;
}

EncodedProblem from_model_json(const json& doc) {
  try {
    EncodedProblem prob;
    const auto& meta = doc.at("metadata");
    prob.kind = parse_encoding_name(meta.at("encoding").get<std::string>());
    prob.colors = meta.at("colors").get<std::size_t>();
    prob.bits = meta.at("bits").get<std::size_t>();
    prob.graph = parse_graph(meta.at("graph").dump(), GraphFormat::Json);
    if (meta.contains("graph_digest") && meta["graph_digest"].get<std::string>() != graph_digest(prob.graph)) {
      fail(ErrorKind::Parse, "graph digest does not match the embedded graph");
    }
    const auto num_vars = doc.at("num_vars").get<std::size_t>();
    const auto& vars = doc.at("variables");
    if (vars.size() != num_vars) fail(ErrorKind::Parse, "variables list does not match num_vars");
    prob.registry.resize(num_vars);
    std::vector<char> seen(num_vars, 0);
    for (const auto& v : vars) {
      const auto id = v.at("id").get<std::size_t>();
      if (id >= num_vars || seen[id]) fail(ErrorKind::Parse, "variable ids must be dense and unique");
      seen[id] = 1;
      prob.registry[id] = parse_role(v.at("role").get<std::string>(), prob.kind);
    }
    for (const auto& t : doc.at("terms")) {
      const auto ids = t.at("vars").get<std::vector<VarId>>();
      for (VarId id : ids)
        if (id >= num_vars) fail(ErrorKind::Parse, "term references unknown variable " + std::to_string(id));
      prob.polynomial.add_term(ids, int_from(t.at("coeff"), "coeff"));
    }
    const auto& pen = meta.at("penalties");
    if (pen.contains("onehot")) {
      const auto& p = pen["onehot"];
      prob.penalties.onehot = OneHotPenalties{int_from(p.at("link"), "link"),
                                              int_from(p.at("adjacency"), "adjacency"),
                                              int_from(p.at("onehot"), "onehot")};
    }
    if (pen.contains("lex")) {
      const auto& p = pen["lex"];
      LexPenalties lex;
      for (const auto& v : p.at("p")) lex.p.push_back(int_from(v, "p"));
      lex.adjacency = int_from(p.at("adjacency"), "adjacency");
      prob.penalties.lex = lex;
    }
    if (pen.contains("quadratization")) {
      const auto& p = pen["quadratization"];
      prob.penalties.quadratization = QuadratizationPenalties{
          int_from(p.at("stage1"), "stage1"), int_from(p.at("stage2"), "stage2"),
          int_from(p.at("product"), "product")};
    }
    if (meta.contains("partition")) prob.partition = partition_spec_from_json(meta["partition"]);
    prob.quadratized = meta.value("quadratized", false);
    prob.original_vars = meta.value("original_vars", num_vars);
    return prob;
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("model json: ") + e.what());
  }
}

std::string bits_to_string(std::span<const std::uint8_t> bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) s[i] = '1';
  return s;
}

Assignment bits_from_string(const std::string& text) {
  Assignment a(text.size(), 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') fail(ErrorKind::Parse, "bit string must be 0/1 only");
    a[i] = text[i] == '1';
  }
  return a;
}

}  // namespace qgc
