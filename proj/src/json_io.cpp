#include "troplin/json_io.hpp"

#include "troplin/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace troplin {
namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object()) throw SchemaError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t positive_size(const Json& v, const char* key) {
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw SchemaError(std::string("field '") + key + "' must be a positive integer");
  return v.get<std::size_t>();
}

int node_label(const Json& v) {
  if (!v.is_number_integer()) throw SchemaError("node labels must be integers");
  return v.get<int>();
}

Rational scalar_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number_float()) return parse_rational(format_double(v.get<double>()));
  throw SchemaError("numeric entries must be strings or numbers");
}

template <TropicalScalar T>
Json matrix_json(const TropMatrix<T>& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if constexpr (std::same_as<T, double>) row.push_back(format_double(m(r, c)));
      else row.push_back(format_rational(m(r, c)));
    }
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

template <TropicalScalar T>
TropMatrix<T> matrix_from(const Json& doc) {
  const std::size_t rows = positive_size(require(doc, "rows"), "rows");
  const std::size_t cols = positive_size(require(doc, "cols"), "cols");
  const Json& entries = require(doc, "entries");
  if (!entries.is_array() || entries.size() != rows) throw SchemaError("'entries' must have 'rows' rows");
  std::vector<T> values;
  values.reserve(rows * cols);
  for (const Json& row : entries) {
    if (!row.is_array() || row.size() != cols) throw SchemaError("each row must have 'cols' entries");
    for (const Json& v : row) {
      if constexpr (std::same_as<T, double>) {
        if (v.is_string()) values.push_back(parse_double(v.get<std::string>()));
        else if (v.is_number()) values.push_back(v.get<double>());
        else throw SchemaError("numeric entries must be strings or numbers");
      } else {
        values.push_back(scalar_from_json(v));
      }
    }
  }
  return TropMatrix<T>(rows, cols, std::move(values));
}

struct GraphDoc {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<Rational> weights;  // empty when absent
};

GraphDoc graph_doc(const Json& doc) {
  GraphDoc out;
  out.n = static_cast<int>(positive_size(require(doc, "n"), "n"));
  const Json& edges = require(doc, "edges");
  if (!edges.is_array()) throw SchemaError("'edges' must be an array");
  for (const Json& e : edges) out.edges.push_back({node_label(require(e, "from")), node_label(require(e, "to"))});
  if (auto it = doc.find("weights"); it != doc.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != out.edges.size())
      throw SchemaError("'weights' must parallel 'edges'");
    for (const Json& w : *it) out.weights.push_back(scalar_from_json(w));
  }
  return out;
}

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(Json{{"from", e.from}, {"to", e.to}});
  return out;
}

}  // namespace

Json to_json(const ExactMatrix& m) { return matrix_json(m); }
Json to_json(const ApproxMatrix& m) { return matrix_json(m); }
ExactMatrix exact_matrix_from_json(const Json& doc) { return matrix_from<Rational>(doc); }
ApproxMatrix approx_matrix_from_json(const Json& doc) { return matrix_from<double>(doc); }

Json to_json(const Dag& g) { return Json{{"n", g.size()}, {"edges", edges_json(g.edges())}}; }

Dag dag_from_json(const Json& doc) {
  const GraphDoc parsed = graph_doc(doc);
  return Dag(parsed.n, parsed.edges);
}

Json to_json(const MaxLinearModel& model) {
  Json out = to_json(model.graph());
  Json weights = Json::array();
  for (const WeightedEdge& e : model.weighted_edges()) weights.push_back(format_rational(e.weight));
  out["weights"] = std::move(weights);
  return out;
}

MaxLinearModel model_from_json(const Json& doc) {
  const GraphDoc parsed = graph_doc(doc);
  std::vector<WeightedEdge> edges;
  for (std::size_t e = 0; e < parsed.edges.size(); ++e)
    edges.push_back({parsed.edges[e], parsed.weights.empty() ? Rational(1) : parsed.weights[e]});
  return MaxLinearModel::from_weighted_edges(parsed.n, edges);
}

Json to_json(NodeSet s) { return Json(s.to_vector()); }

NodeSet node_set_from_json(const Json& doc) {
  if (!doc.is_array()) throw SchemaError("node sets must be arrays of integers");
  NodeSet out;
  for (const Json& v : doc) out.insert(node_label(v));
  return out;
}

Json to_json(const CiStatement& s) {
  return Json{{"I", to_json(s.I)}, {"J", to_json(s.J)}, {"K", to_json(s.K)},
              {"criterion", std::string(to_string(s.criterion))}};
}

CiStatement statement_from_json(const Json& doc) {
  return {node_set_from_json(require(doc, "I")), node_set_from_json(require(doc, "J")),
          node_set_from_json(require(doc, "K")),
          parse_criterion(require(doc, "criterion").get<std::string>())};
}

Json to_json(const Trek& trek) {
  return Json{{"top", trek.top}, {"left", trek.left_path}, {"right", trek.right_path}};
}

Json to_json(const RankRecord& r) {
  return Json{{"I", to_json(r.I)},
              {"J", to_json(r.J)},
              {"K", to_json(r.K)},
              {"expected", r.expected},
              {"observed", r.observed},
              {"d_separated", r.d_separated},
              {"satisfied", r.satisfied},
              {"minors_vanish", r.minors_vanish}};
}

Json to_json(const MecReport& report) {
  Json counterexamples = Json::array();
  for (const MecCounterexample& c : report.counterexamples)
    counterexamples.push_back(Json{{"first", c.first},
                                   {"second", c.second},
                                   {"d_equivalent", c.d_equivalent},
                                   {"star_equivalent", c.star_equivalent}});
  return Json{{"n", report.n},
              {"dags", report.dags},
              {"classes_d", report.classes_d},
              {"classes_star", report.classes_star},
              {"equal", report.equal},
              {"counterexamples", std::move(counterexamples)}};
}

NodeSet parse_node_list(std::string_view text) {
  NodeSet out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw SchemaError("malformed node list entry '" + std::string(item) + "'");
    out.insert(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("'" + path + "': " + e.what());
  }
}

}  // namespace troplin
