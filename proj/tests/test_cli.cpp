#include "doctest.h"

#include "troplin/cli.hpp"
#include "troplin/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace troplin;

namespace {

const std::string kGolden = TROPLIN_GOLDEN_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, cli::Environment env = {}) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_args(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string word; in >> word;) {
    for (std::size_t at = word.find('@'); at != std::string::npos; at = word.find('@'))
      word.replace(at, 1, kGolden);
    out.push_back(word);
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden invocations") {
  std::ifstream cases(kGolden + "/cases.txt");
  REQUIRE(cases);
  int checked = 0;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line.front() == '#') continue;
    const auto bar1 = line.find('|'), bar2 = line.find('|', bar1 + 1);
    const std::string name = line.substr(0, bar1);
    const int code = std::stoi(line.substr(bar1 + 1, bar2 - bar1 - 1));
    CAPTURE(name);
    const Result r = invoke(split_args(line.substr(bar2 + 1)));
    CHECK(r.code == code);
    CHECK(r.out == slurp(kGolden + "/" + name + ".out"));
    if (code != 0) CHECK_FALSE(r.err.empty());
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("flagship output fields") {
  const Result r = invoke(split_args("ci --graph @/cassiopeia.json --criterion star --I 1 --J 3 --K 4,5"));
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["separated"] == true);
  const Result reach = invoke(split_args("reach --graph @/reach.json --K 3"));
  const Dag g = dag_from_json(Json::parse(reach.out));
  CHECK(g.has_edge(1, 5));
  CHECK_FALSE(g.has_edge(2, 5));
}

TEST_CASE("help, pretty printing and file output") {
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({}).code == cli::kInputError);

  const auto args = split_args("enumerate --n 2");
  cli::Environment tty;
  tty.pretty = true;
  const Result pretty = invoke(args, tty);
  CHECK(pretty.out.find("\n  ") != std::string::npos);
  auto compact_args = args;
  compact_args.insert(compact_args.begin(), "--compact");
  CHECK(invoke(compact_args, tty).out == "{\"n\":2,\"count\":3}\n");
  auto forced = args;
  forced.insert(forced.begin(), "--pretty");
  CHECK(invoke(forced).out == pretty.out);

  const auto path = (std::filesystem::temp_directory_path() / "troplin_cli_test.json").string();
  auto to_file = split_args("tropcov --model @/diamond_model.json --exact");
  to_file.insert(to_file.begin(), {"--out", path});
  const Result r = invoke(to_file);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path) == slurp(kGolden + "/diamond_tropcov.out"));
  std::remove(path.c_str());
}

TEST_CASE("output is deterministic and independent of the worker count") {
  const auto sample = split_args("sample --model @/diamond_model.json --alpha 2 --m 50 --seed 3");
  CHECK(invoke(sample).out == invoke(sample).out);
  const Result one = invoke(split_args("--jobs 1 mec-verify --n 4"));
  const Result three = invoke(split_args("--jobs 3 mec-verify --n 4"));
  CHECK(one.code == 0);
  CHECK(one.out == three.out);
  cli::Environment env;
  env.default_jobs = 2;
  CHECK(invoke(split_args("mec-verify --n 4"), env).out == one.out);
  CHECK(Json::parse(one.out)["dags"] == 543);
  CHECK(invoke(split_args("--jobs 0 mec-verify --n 2")).code == cli::kInputError);
}

TEST_CASE("emitted documents re-parse") {
  const Result cov = invoke(split_args("tropcov --model @/cassiopeia_model.json --exact"));
  const ExactMatrix m = exact_matrix_from_json(Json::parse(cov.out));
  CHECK(to_json(m).dump() + "\n" == cov.out);
  const Result reach = invoke(split_args("reach --graph @/seven_g.json --K 5"));
  CHECK(to_json(dag_from_json(Json::parse(reach.out))).dump() + "\n" == reach.out);
}

}  // TEST_SUITE
