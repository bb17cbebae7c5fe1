#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "homfib/cli.hpp"
#include "homfib/document.hpp"
#include "homfib/error.hpp"

using namespace homfib;
using document::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(const std::string& command, const std::string& input) {
  const auto r = run({command, "--format", "json"}, input);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::string fixture(const std::string& name) {
  for (const auto& f : cli::embedded_fixtures())
    if (f.name == name) return f.text;
  FAIL("no fixture " << name);
  return {};
}

bool cites_registry(const Json& verdict) {
  if (!verdict.contains("justification") || verdict["justification"].empty()) return false;
  for (const auto& s : verdict["justification"]) {
    try {
      parse_rule(s["rule"].get<std::string>());
    } catch (const InputError&) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("poincare of SL_2") {
  const auto r = run({"poincare"}, R"({"kind": "group", "group": "SL_2"})");
  CHECK(r.code == 0);
  CHECK(r.out.find("polynomial: 1 + t^3") != std::string::npos);
  CHECK(run_json("poincare", R"({"kind": "group", "group": {"name": "SL_2"}})")["polynomial"]["text"] ==
        "1 + t^3");
}

TEST_CASE("analyze the GL_5/O_5 fixture") {
  const Json report = run_json("analyze", fixture("gl5_orthogonal"));
  CHECK(report["verdict"]["result"] == "trivial");
  CHECK(report["verdict"]["justification"].back()["rule"] == "COR_S0_CRITERION");
  CHECK(report["expectation"]["matched"] == true);
  CHECK(report["input"]["name"] == "gl5_orthogonal");

  const auto text = run({"analyze"}, fixture("gl5_orthogonal"));
  CHECK(text.code == 0);
  CHECK(text.out.find("result: trivial") != std::string::npos);
  CHECK(text.out.find("- COR_S0_CRITERION:") != std::string::npos);
}

TEST_CASE("every fixture report cites registered rules and is deterministic") {
  for (const auto& f : cli::embedded_fixtures()) {
    CAPTURE(f.name);
    const Json doc = Json::parse(f.text);
    const std::string kind = doc["kind"];
    std::string command = "poincare";
    if (kind == "fibration") command = "analyze";
    if (kind == "converse_spec") command = "converse-example";
    if (kind == "quasi_reductive") command = "decompose";
    const auto a = run({command, "--format", "json"}, f.text);
    const auto b = run({command, "--format", "json"}, f.text);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const Json report = Json::parse(a.out);
    if (report.contains("verdict")) CHECK(cites_registry(report["verdict"]));
    if (report.contains("semiabelianization")) CHECK(cites_registry(report["semiabelianization"]));
  }
}

TEST_CASE("selftest") {
  const auto r = run({"selftest"});
  CHECK(r.code == 0);
  const auto n = cli::embedded_fixtures().size();
  CHECK(r.out.find(std::to_string(n) + "/" + std::to_string(n) + " fixtures passed") !=
        std::string::npos);
  const Json j = Json::parse(run({"selftest", "--format", "json"}).out);
  CHECK(j["passed"] == n);
}

TEST_CASE("converse-example documents round-trip") {
  const Json report = run_json("converse-example", fixture("sl3_converse"));
  CHECK(report["verdict"]["failing_degree"] == 2);
  const Json again = run_json("analyze", report["document"].dump());
  CHECK(again["verdict"] == report["verdict"]);
}

TEST_CASE("emitted fibration documents re-parse to equal fibrations") {
  gen::Rng rng(0x5eed0701);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = gen::descriptor(rng, 1, 3);
    const auto chi = gen::character(rng, g.central_rank(), 5);
    const auto f = fibration::CharacterFibration::make(
        g.with_unipotent_dim(gen::uniform(rng, 0, 3)), groups::SubgroupDescriptor::trivial(), chi);
    const Json doc = document::fibration_document(f);
    const Json reparsed = document::parse_text(doc.dump(), "<test>");
    const auto back = document::parse_fibration(document::Node(reparsed, ""), 10000);
    CHECK(back == f);
    CHECK(fibration::analyze(back) == fibration::analyze(f));
  }
}

TEST_CASE("exit codes") {
  SUBCASE("expectation mismatch") {
    const auto r = run({"analyze"}, R"({"kind": "fibration", "group": "GL_4",
      "subgroup": {"family": "named_pair", "tag": "O_in_GL", "n": 4}, "chi": [1],
      "expect": {"verdict": {"result": "trivial"}}})");
    CHECK(r.code == 1);
    CHECK(r.out.find("/verdict/result") != std::string::npos);
  }
  SUBCASE("syntax error carries a location") {
    const auto r = run({"analyze"}, "{\"kind\": \"fibration\",\n  \"group\": }");
    CHECK(r.code == 2);
    CHECK(r.err.find("<stdin>") != std::string::npos);
    CHECK(r.err.find("line 2") != std::string::npos);
  }
  SUBCASE("schema errors carry a path") {
    const auto r = run({"analyze"}, R"({"kind": "fibration", "group": "GL_2",
      "subgroup": {"family": "named_pair", "tag": "O_in_GL", "n": 3}, "chi": [1]})");
    CHECK(r.code == 2);
    const auto bad_key = run({"analyze"}, R"({"kind": "fibration", "group": "GL_2", "chi": [1], "colour": 1})");
    CHECK(bad_key.code == 2);
    CHECK(bad_key.err.find("colour") != std::string::npos);
    const auto bad_chi = run({"analyze"}, R"({"kind": "fibration", "group": "GL_2", "chi": ["x"]})");
    CHECK(bad_chi.code == 2);
    CHECK(bad_chi.err.find("/chi/0") != std::string::npos);
  }
  SUBCASE("trivial character") {
    CHECK(run({"analyze"}, R"({"kind": "fibration", "group": "GL_2", "chi": [0]})").code == 2);
  }
  SUBCASE("unknown command and bad flags") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"analyze", "--format", "yaml"}).code == 2);
    CHECK(run({"analyze", "--max-order", "0"}).code == 2);
    CHECK(run({"analyze", "/nonexistent/file.json"}).code == 2);
  }
  SUBCASE("the order cap is enforced") {
    const std::string doc = R"({"kind": "group", "group": "SL_5",
      "subgroup": {"family": "weyl_sandwich", "generators": []}})";
    CHECK(run({"poincare"}, doc).code == 0);
    const auto r = run({"poincare", "--max-order", "100"}, doc);
    CHECK(r.code == 2);
  }
  SUBCASE("a table miss is a report, not an error") {
    const auto r = run({"analyze", "--format", "json"}, R"({"kind": "fibration", "group": "GL_13",
      "subgroup": {"family": "named_pair", "tag": "O_in_GL", "n": 13}, "chi": [1]})");
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["verdict"]["result"] == "undecidable_with_table");
  }
}

TEST_CASE("files, batches and table overrides") {
  const std::string dir = std::filesystem::temp_directory_path() / "homfib_cli_test";
  std::filesystem::create_directories(dir);
  const std::string doc_path = dir + "/gl13.json";
  const std::string table_path = dir + "/table.json";
  {
    std::ofstream(doc_path) << R"({"kind": "batch", "documents": [
      {"kind": "fibration", "group": "GL_13",
       "subgroup": {"family": "named_pair", "tag": "O_in_GL", "n": 13}, "chi": [1]},
      {"kind": "fibration", "group": "GL_3", "chi": [1]}]})";
    // GL_13/O_13 and GL_13/SO_13: exterior algebra on generators of degrees 1, 5, 9, ..., 25.
    std::vector<long> poly{1};
    for (int e : {1, 5, 9, 13, 17, 21, 25}) {
      std::vector<long> next(poly.size() + static_cast<std::size_t>(e), 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i];
        next[i + static_cast<std::size_t>(e)] += poly[i];
      }
      poly = next;
    }
    Json table = {{"kind", "symmetric_space_table"},
                  {"entries", Json::array({{{"tag", "O_in_GL"}, {"n", 13}, {"coefficients", poly}},
                                            {{"tag", "SO_in_GL"}, {"n", 13}, {"coefficients", poly}}})}};
    std::ofstream(table_path) << table.dump();
  }
  const auto plain = run({"analyze", doc_path, "--format", "json"});
  REQUIRE(plain.code == 0);
  const Json a = Json::parse(plain.out);
  CHECK(a["reports"][0]["verdict"]["result"] == "undecidable_with_table");
  CHECK(a["reports"][1]["verdict"]["result"] == "trivial");

  const auto extended = run({"analyze", doc_path, "--table", table_path, "--format", "json"});
  REQUIRE(extended.code == 0);
  const Json b = Json::parse(extended.out);
  CHECK(b["reports"][0]["verdict"]["result"] == "trivial");
  std::filesystem::remove_all(dir);
}
