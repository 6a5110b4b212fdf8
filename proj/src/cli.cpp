#include "troplin/cli.hpp"

#include "troplin/equivalence.hpp"
#include "troplin/error.hpp"
#include "troplin/json_io.hpp"
#include "troplin/model.hpp"
#include "troplin/separation.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace troplin::cli {
namespace {

struct Options {
  std::string graph, graph2, model, criterion = "d";
  std::string I, J, K;
  std::string out;
  int n = 0;
  int i = 0, j = 0;
  double alpha = 1.0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::optional<unsigned> jobs;
  bool exact = false, list = false, drops = false;
  bool pretty = false, compact = false;
};

class Emitter {
 public:
  Emitter(std::ostream& out, bool pretty) : out_(out), pretty_(pretty) {}

  void document(const Json& doc) { out_ << (pretty_ ? doc.dump(2) : doc.dump()) << '\n'; }
  void line(const Json& doc) { out_ << doc.dump() << '\n'; }
  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
  bool pretty_;
};

int cmd_ci(const Options& o, Emitter& emit) {
  const Dag g = dag_from_json(read_json_file(o.graph));
  const CiStatement s{parse_node_list(o.I), parse_node_list(o.J), parse_node_list(o.K),
                      parse_criterion(o.criterion)};
  const bool holds = separated(g, s.I, s.J, s.K, s.criterion);
  Json doc = to_json(s);
  doc["separated"] = holds;
  emit.document(doc);
  return kOk;
}

int cmd_reach(const Options& o, Emitter& emit) {
  const Dag g = dag_from_json(read_json_file(o.graph));
  emit.document(to_json(conditional_reachability(g, parse_node_list(o.K))));
  return kOk;
}

int cmd_equiv(const Options& o, Emitter& emit) {
  const Dag g = dag_from_json(read_json_file(o.graph));
  const Dag h = dag_from_json(read_json_file(o.graph2));
  const Criterion c = parse_criterion(o.criterion);
  emit.document(Json{{"criterion", std::string(to_string(c))}, {"equivalent", markov_equivalent(g, h, c)}});
  return kOk;
}

int cmd_mec_verify(const Options& o, Emitter& emit, unsigned jobs) {
  const MecReport report = verify_mec_equality(o.n, jobs);
  emit.document(to_json(report));
  return report.equal ? kOk : kVerificationFailed;
}

int cmd_tropcov(const Options& o, Emitter& emit) {
  const MaxLinearModel model = model_from_json(read_json_file(o.model));
  if (o.exact) emit.document(to_json(trop_covariance(model).sigma));
  else emit.document(to_json(trop_covariance_approx(model)));
  return kOk;
}

int cmd_trek(const Options& o, Emitter& emit) {
  const MaxLinearModel model = model_from_json(read_json_file(o.model));
  Json doc{{"i", o.i}, {"j", o.j}, {"value", format_rational(trek_rule_entry(model, o.i, o.j))}};
  if (o.list) {
    Json treks = Json::array();
    for (const Trek& t : all_treks(model.graph(), o.i, o.j)) {
      Json item = to_json(t);
      item["monomial"] = format_rational(trek_monomial(model, t));
      treks.push_back(std::move(item));
    }
    doc["treks"] = std::move(treks);
  }
  emit.document(doc);
  return kOk;
}

int cmd_rank_scan(const Options& o, Emitter& emit) {
  const MaxLinearModel model = model_from_json(read_json_file(o.model));
  bool all_satisfied = true;
  for (const RankRecord& r : scan_dsep_rank(model)) {
    emit.line(to_json(r));
    all_satisfied = all_satisfied && r.satisfied;
  }
  return all_satisfied ? kOk : kVerificationFailed;
}

int cmd_star_scan(const Options& o, Emitter& emit) {
  const MaxLinearModel model = model_from_json(read_json_file(o.model));
  const auto records = o.drops ? scan_rank_drops(model) : scan_starsep_rank(model);
  for (const RankRecord& r : records) {
    Json line{{"I", to_json(r.I)}, {"J", to_json(r.J)}, {"K", to_json(r.K)},
              {"expected", r.expected}, {"observed", r.observed}, {"d_separated", r.d_separated}};
    emit.line(line);
  }
  return kOk;
}

int cmd_chi(const Options& o, Emitter& emit) {
  const MaxLinearModel model = model_from_json(read_json_file(o.model));
  const TailDependenceMatrix chi = tail_dependence(model, o.alpha);
  Json doc = to_json(chi.chi);
  doc["alpha"] = chi.alpha;
  emit.document(doc);
  return kOk;
}

int cmd_sample(const Options& o, Emitter& emit) {
  const MaxLinearModel model = model_from_json(read_json_file(o.model));
  const SampleMatrix samples = sample(model, o.alpha, o.m, o.seed);
  std::ostream& out = emit.raw();
  for (std::size_t v = 0; v < samples.nodes; ++v) out << (v ? ",x" : "x") << v + 1;
  out << '\n';
  for (std::size_t s = 0; s < samples.count; ++s) {
    for (std::size_t v = 0; v < samples.nodes; ++v) out << (v ? "," : "") << format_double(samples.at(s, v));
    out << '\n';
  }
  return kOk;
}

int cmd_enumerate(const Options& o, Emitter& emit) {
  Json doc{{"n", o.n}};
  if (o.list) {
    Json dags = Json::array();
    std::size_t count = 0;
    for_each_dag(o.n, [&](const Dag& g) {
      dags.push_back(to_json(g));
      ++count;
    });
    doc["count"] = count;
    doc["dags"] = std::move(dags);
  } else {
    std::size_t count = 0;
    for_each_dag(o.n, [&](const Dag&) { ++count; });
    doc["count"] = count;
  }
  emit.document(doc);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Max-linear Bayesian networks over the max-times semiring", "troplin"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--out", o.out, "Write the result to this file instead of standard output");
  app.add_option("--jobs", o.jobs, "Worker threads for enumeration (default: TROPLIN_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--pretty", o.pretty, "Pretty-print JSON");
  app.add_flag("--compact", o.compact, "Compact JSON");

  std::function<int(Emitter&, unsigned)> action;
  auto sub = [&](const char* name, const char* help, auto handler) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&action, handler] { action = [handler](Emitter& e, unsigned jobs) { return handler(e, jobs); }; });
    return s;
  };
  auto graph_opt = [&](CLI::App* s) { s->add_option("--graph", o.graph, "Graph JSON")->required(); };
  auto model_opt = [&](CLI::App* s) { s->add_option("--model", o.model, "Model JSON")->required(); };

  {
    auto* s = sub("ci", "Test I _||_ J | K", [&](Emitter& e, unsigned) { return cmd_ci(o, e); });
    graph_opt(s);
    s->add_option("--criterion", o.criterion, "d or star")->check(CLI::IsMember({"d", "star"}));
    s->add_option("--I", o.I, "Comma-separated nodes")->required();
    s->add_option("--J", o.J, "Comma-separated nodes")->required();
    s->add_option("--K", o.K, "Comma-separated nodes");
  }
  {
    auto* s = sub("reach", "Conditional reachability DAG G*_K", [&](Emitter& e, unsigned) { return cmd_reach(o, e); });
    graph_opt(s);
    s->add_option("--K", o.K, "Comma-separated nodes");
  }
  {
    auto* s = sub("equiv", "Markov equivalence of two DAGs", [&](Emitter& e, unsigned) { return cmd_equiv(o, e); });
    graph_opt(s);
    s->add_option("--graph2", o.graph2, "Second graph JSON")->required();
    s->add_option("--criterion", o.criterion, "d or star")->check(CLI::IsMember({"d", "star"}));
  }
  {
    auto* s = sub("mec-verify", "Compare d- and *-Markov equivalence classes of all DAGs on n nodes",
                  [&](Emitter& e, unsigned jobs) { return cmd_mec_verify(o, e, jobs); });
    s->add_option("--n", o.n, "Node count (1..5)")->required();
  }
  {
    auto* s = sub("tropcov", "Tropical covariance matrix", [&](Emitter& e, unsigned) { return cmd_tropcov(o, e); });
    model_opt(s);
    s->add_flag("--exact", o.exact, "Exact rational entries");
  }
  {
    auto* s = sub("trek", "Tropical trek rule entry", [&](Emitter& e, unsigned) { return cmd_trek(o, e); });
    model_opt(s);
    s->add_option("--i", o.i, "Row node")->required();
    s->add_option("--j", o.j, "Column node")->required();
    s->add_flag("--list", o.list, "List every trek with its monomial");
  }
  {
    auto* s = sub("rank-scan", "Rank constraints of all pairwise d-separation statements",
                  [&](Emitter& e, unsigned) { return cmd_rank_scan(o, e); });
    model_opt(s);
  }
  {
    auto* s = sub("star-scan", "Ranks of *-separation statements not implied by d-separation",
                  [&](Emitter& e, unsigned) { return cmd_star_scan(o, e); });
    model_opt(s);
    s->add_flag("--drops", o.drops, "Instead list non-d-separated statements whose block has rank #K");
  }
  {
    auto* s = sub("chi", "Tail dependence matrix", [&](Emitter& e, unsigned) { return cmd_chi(o, e); });
    model_opt(s);
    s->add_option("--alpha", o.alpha, "Frechet shape")->required();
  }
  {
    auto* s = sub("sample", "Draw samples with Frechet innovations", [&](Emitter& e, unsigned) { return cmd_sample(o, e); });
    model_opt(s);
    s->add_option("--alpha", o.alpha, "Frechet shape")->required();
    s->add_option("--m", o.m, "Sample count")->required();
    s->add_option("--seed", o.seed, "PRNG seed");
  }
  {
    auto* s = sub("enumerate", "Count labeled DAGs on n nodes", [&](Emitter& e, unsigned) { return cmd_enumerate(o, e); });
    s->add_option("--n", o.n, "Node count (1..5)")->required();
    s->add_flag("--list", o.list, "Include every DAG");
  }

  std::vector<const char*> argv{"troplin"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const bool pretty = o.pretty || (env.pretty && !o.compact);
  const unsigned jobs = o.jobs.value_or(std::max(1U, env.default_jobs));
  try {
    if (o.out.empty()) {
      Emitter emit(out, pretty);
      return action(emit, jobs);
    }
    std::ostringstream buffer;
    Emitter emit(buffer, pretty);
    const int status = action(emit, jobs);
    std::ofstream file(o.out, std::ios::binary);
    if (!(file << buffer.str())) throw SchemaError("cannot write '" + o.out + "'");
    return status;
  } catch (const SchemaError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace troplin::cli
