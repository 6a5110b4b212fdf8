#pragma once

// JSON documents exchanged by the CLI:
//   matrix  {"rows": r, "cols": c, "entries": [["6","3"], ...]}
//   graph   {"n": 5, "edges": [{"from": 1, "to": 4}, ...], "weights": [...]?}
//   model   graph with "weights" (decimal or "p/q" strings; default 1)
//   CI      {"I": [...], "J": [...], "K": [...], "criterion": "d" | "star"}

#include "troplin/equivalence.hpp"
#include "troplin/graph.hpp"
#include "troplin/model.hpp"
#include "troplin/separation.hpp"
#include "troplin/trop_core.hpp"

#include "json.hpp"

#include <string_view>

namespace troplin {

using Json = nlohmann::ordered_json;

Json to_json(const ExactMatrix& m);
Json to_json(const ApproxMatrix& m);
ExactMatrix exact_matrix_from_json(const Json& doc);
ApproxMatrix approx_matrix_from_json(const Json& doc);

Json to_json(const Dag& g);
Dag dag_from_json(const Json& doc);

Json to_json(const MaxLinearModel& model);
// A graph document without "weights" gets unit weights.
MaxLinearModel model_from_json(const Json& doc);

Json to_json(NodeSet s);
NodeSet node_set_from_json(const Json& doc);

Json to_json(const CiStatement& s);
CiStatement statement_from_json(const Json& doc);

Json to_json(const Trek& trek);
Json to_json(const RankRecord& record);
Json to_json(const MecReport& report);

// "4,5" -> {4,5}; empty text -> {}.
NodeSet parse_node_list(std::string_view text);

// Reads and parses a JSON file; SchemaError on I/O or syntax failure.
Json read_json_file(const std::string& path);

}  // namespace troplin
