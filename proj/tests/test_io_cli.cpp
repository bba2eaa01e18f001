#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "jacstrat/graph_io.hpp"
#include "jacstrat/errors.hpp"
#include "json.hpp"

using namespace jacstrat;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

// Run the installed CLI binary with the given arguments.
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(JACSTRAT_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data_file(const std::string& name) {
  return std::string(JACSTRAT_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Validates a document against the subset of JSON Schema the shipped
// schemas use: type, required, properties, items, minItems, maxItems.
// Returns the first violation as "path: message", or an empty string.
std::string schema_violation(const nlohmann::json& schema, const nlohmann::json& doc,
                             const std::string& path) {
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    const bool ok = (t == "object" && doc.is_object()) || (t == "array" && doc.is_array()) ||
                    (t == "string" && doc.is_string()) ||
                    (t == "integer" && doc.is_number_integer()) ||
                    (t == "boolean" && doc.is_boolean());
    if (!ok) return path + ": expected " + t;
  }
  if (schema.contains("required")) {
    for (const auto& key : schema["required"]) {
      if (!doc.contains(key.get<std::string>())) {
        return path + ": missing required key " + key.get<std::string>();
      }
    }
  }
  if (schema.contains("properties") && doc.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items()) {
      if (!doc.contains(key)) continue;
      const auto v = schema_violation(sub, doc.at(key), path + "." + key);
      if (!v.empty()) return v;
    }
  }
  if (doc.is_array()) {
    if (schema.contains("minItems") && doc.size() < schema["minItems"].get<std::size_t>()) {
      return path + ": fewer than minItems";
    }
    if (schema.contains("maxItems") && doc.size() > schema["maxItems"].get<std::size_t>()) {
      return path + ": more than maxItems";
    }
    if (schema.contains("items")) {
      for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto v =
            schema_violation(schema["items"], doc[i], path + "[" + std::to_string(i) + "]");
        if (!v.empty()) return v;
      }
    }
  }
  return "";
}

}  // namespace

TEST_CASE("graph json round trips") {
  const std::string text = R"({
    "vertices": [{"id": "a", "genus": 1}, {"id": "b"}],
    "edges": [["a", "b"], ["a", "a"], ["a", "b"]]
  })";
  const auto g = parse_graph_json(text);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.vertex(0).genus == 1);
  CHECK(g.vertex(1).genus == 0);  // genus defaults to zero
  CHECK(g.edge(1).is_loop());

  const auto again = parse_graph_json(graph_to_json(g));
  CHECK(graph_to_json(again) == graph_to_json(g));
}

TEST_CASE("graph json diagnostics name the offending element") {
  CHECK_THROWS_WITH_AS(parse_graph_json("{"), doctest::Contains("not valid JSON"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_graph_json(R"({"edges": []})"),
                       doctest::Contains("vertices"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_graph_json(R"({"vertices": [{"id": "a"}], "edges": [["a", "x"]]})"),
      doctest::Contains("'x'"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_graph_json(R"({"vertices": [{"id": "a"}], "edges": [["a"]]})"),
      doctest::Contains("edges[0]"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_graph_json(R"({"vertices": [{"id": "a", "genus": -2}], "edges": []})"),
      doctest::Contains("genus"), ValidationError);
  CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.json"), ValidationError);
}

TEST_CASE("info command reports the basic invariants") {
  const auto r = run_cli("info --format json --input " + data_file("dollar_sign.json"));
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("command") == "info");
  CHECK(j.at("vertex_count") == 2);
  CHECK(j.at("edge_count") == 3);
  CHECK(j.at("graph").at("vertices").size() == 2);
  CHECK(j.at("cyclomatic_number") == 2);
  CHECK(j.at("arithmetic_genus") == 2);
  CHECK(j.at("is_forest") == false);
}

TEST_CASE("strata and cells commands agree with the frozen dollar sign counts") {
  const auto s = run_cli("strata --format json --input " + data_file("dollar_sign.json"));
  REQUIRE(s.exit_code == 0);
  const auto js = nlohmann::json::parse(s.output);
  CHECK(js.at("total") == 6);
  CHECK(js.at("by_codim") == nlohmann::json::parse("[[0,2],[1,3],[2,1]]"));

  const auto c = run_cli("cells --format json --input " + data_file("dollar_sign.json"));
  REQUIRE(c.exit_code == 0);
  const auto jc = nlohmann::json::parse(c.output);
  CHECK(jc.at("total") == 6);
  CHECK(jc.at("by_dim") == nlohmann::json::parse("[[0,1],[1,3],[2,2]]"));
  CHECK(jc.at("lattice").at("gram_determinant") == "3");
  CHECK(jc.at("lattice").at("saturated") == true);

  const auto cmp = run_cli("compare --format json --input " + data_file("dollar_sign.json"));
  REQUIRE(cmp.exit_code == 0);
  CHECK(nlohmann::json::parse(cmp.output).at("match") == true);
}

TEST_CASE("check command classifies multidegrees") {
  const auto base = "check --format json --input " + data_file("dollar_sign.json");
  const auto stable = run_cli(base + " -e 1,2");
  REQUIRE(stable.exit_code == 0);
  const auto js = nlohmann::json::parse(stable.output);
  CHECK(js.at("verdict") == "stable");
  CHECK(js.at("agree") == true);
  CHECK(js.at("routes").at("abs") == "stable");
  CHECK(js.at("routes").at("orientation_exists") == true);
  CHECK(js.at("orientation").is_array());

  const auto boundary = run_cli(base + " -e 0,3");
  CHECK(nlohmann::json::parse(boundary.output).at("verdict") == "strictly_semistable");

  const auto mismatch = run_cli(base + " -e 1,1");
  CHECK(mismatch.exit_code == 2);
  CHECK(mismatch.output.find("error[sum-mismatch]") != std::string::npos);
}

TEST_CASE("exit codes separate validation, caps, and invariant failures") {
  const auto usage = run_cli("strata");
  CHECK(usage.exit_code == 2);

  const auto missing = run_cli("info --input /nonexistent/graph.json");
  CHECK(missing.exit_code == 2);
  CHECK(missing.output.find("error[validation]") != std::string::npos);

  const auto capped = run_cli("cells --input " + data_file("dollar_sign.json") +
                              " --max-edges 2");
  CHECK(capped.exit_code == 3);
  CHECK(capped.output.find("error[cap]") != std::string::npos);

  const auto help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("strata") != std::string::npos);
}

TEST_CASE("json output is byte identical across reruns and job counts") {
  const auto base = "strata --format json --input " + data_file("triangle_pendant.json") + " --full";
  const auto a = run_cli(base + " --jobs 1");
  const auto b = run_cli(base + " --jobs 4");
  const auto c = run_cli(base + " --jobs 4");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(b.output == c.output);
}

TEST_CASE("table format stays in sync with the json content") {
  const auto t = run_cli("info --input " + data_file("two_components.json") +
                         " --format table");
  REQUIRE(t.exit_code == 0);
  CHECK(t.output.find("arithmetic genus") != std::string::npos);
  CHECK(t.output.find("3") != std::string::npos);
}

TEST_CASE("examples command exercises the bundled suite") {
  const auto r = run_cli("examples");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("all examples passed") != std::string::npos);

  const auto j = run_cli("examples --format json");
  REQUIRE(j.exit_code == 0);
  const auto parsed = nlohmann::json::parse(j.output);
  CHECK(parsed.at("all_pass") == true);
  CHECK(parsed.at("rows").size() == 9);
}

TEST_CASE("strata json validates against the shipped schema") {
  const auto schema =
      nlohmann::json::parse(slurp(std::string(JACSTRAT_DOCS_DIR) + "/strata_report.schema.json"));
  for (const char* input : {"dollar_sign.json", "triangle_pendant.json", "two_components.json"}) {
    const auto r = run_cli("strata --format json --full --input " + data_file(input));
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(schema_violation(schema, doc, "$") == "");
  }

  // The validator itself rejects shape violations.
  auto broken = nlohmann::json::parse(
      run_cli("strata --format json --input " + data_file("one_node.json")).output);
  broken.erase("total");
  CHECK(schema_violation(schema, broken, "$") == "$: missing required key total");
}

TEST_CASE("golden outputs stay stable") {
  const std::array<std::pair<const char*, const char*>, 3> cases = {{
      {"strata --format json --input {} --full", "dollar_strata_full.json"},
      {"cells --format json --input {} --full", "one_node_cells_full.json"},
      {"phi --format table --input {} --lambda 2,3 --degree 4", "two_components_phi.txt"},
  }};
  const std::array<const char*, 3> inputs = {
      "dollar_sign.json", "one_node.json", "two_components.json"};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    std::string cmd = cases[i].first;
    cmd.replace(cmd.find("{}"), 2, data_file(inputs[i]));
    const auto r = run_cli(cmd);
    REQUIRE(r.exit_code == 0);
    const auto expected = slurp(std::string(JACSTRAT_GOLDEN_DIR) + "/" + cases[i].second);
    CHECK(r.output == expected);
  }
}
