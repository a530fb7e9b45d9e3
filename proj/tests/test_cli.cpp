#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ppair::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = run(args);
  CHECK(r.code == expected_code);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("check on F_4 falls through to the exhaustive search") {
  const json doc = run_json({"check", "--q", "2", "--m", "2"}, 1);
  CHECK(doc["result"]["method"] == "UNRESOLVED");
  const json four = run_json({"check", "--q", "4", "--m", "2"}, 0);
  CHECK(four["result"]["method"] == "EXHAUSTIVE");
  CHECK(four["inputs"]["c"] == json::array({0, 0}));
  CHECK(four["inputs"]["mode"] == "strict");
  CHECK(four["result"]["witness_replay"][0] == "ok");
  CHECK(four.contains("timings"));
}

TEST_CASE("JSON is identical across runs apart from timings") {
  json a = run_json({"check", "--q", "7", "--m", "3", "--workers", "1"}, 0);
  json b = run_json({"check", "--q", "7", "--m", "3", "--workers", "3"}, 0);
  a.erase("timings");
  b.erase("timings");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("check with a large base field proves by the base condition") {
  const json doc = run_json({"check", "--q", "10007", "--m", "4"}, 0);
  CHECK(doc["result"]["method"] == "BASE");
  CHECK(doc["result"]["base"]["holds"] == true);
}

TEST_CASE("search echoes every input") {
  const json doc = run_json({"search", "--q", "5", "--m", "2", "--f", "1,0,2", "--c", "1,3", "--mode", "proof"}, 0);
  CHECK(doc["inputs"]["c"] == json::array({1, 3}));
  CHECK(doc["inputs"]["mode"] == "proof");
  CHECK(doc["inputs"]["basis"].size() == 2);
  CHECK(doc["result"]["exhaustive"]["count"].get<std::uint64_t>() > 0);
  CHECK(doc["result"]["field"]["q"] == "5");
}

TEST_CASE("search with a custom basis") {
  const Run r = run({"search", "--q", "3", "--m", "2", "--basis", "1,1;0,1", "--format", "json"});
  const json doc = json::parse(r.out);
  CHECK(r.code == (doc["result"]["exhaustive"]["count"] > 0 ? 0 : 1));
  CHECK(doc["inputs"]["basis"] == json::parse("[[1,1],[0,1]]"));
  const Run dep = run({"search", "--q", "3", "--m", "2", "--basis", "1,0;2,0"});
  CHECK(dep.code == 2);
  CHECK(dep.err.find("rank") != std::string::npos);
}

TEST_CASE("input and budget errors exit with 2") {
  CHECK(run({"check", "--q", "6", "--m", "2"}).code == 2);
  CHECK(run({"check", "--q", "5"}).code == 2);
  CHECK(run({"search", "--q", "5", "--m", "2", "--f", "0,1,1"}).code == 2);
  CHECK(run({"search", "--q", "5", "--m", "2", "--f", "1,x,1"}).code == 2);
  CHECK(run({"search", "--q", "5", "--m", "2", "--c", "1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const json err = run_json({"check", "--q", "6", "--m", "2"}, 2);
  CHECK(err["error"]["type"] == "input");
  ::setenv("PPAIR_BUDGET", "50", 1);
  const Run budget = run({"search", "--q", "7", "--m", "3"});
  ::unsetenv("PPAIR_BUDGET");
  CHECK(budget.code == 2);
  CHECK(budget.err.find("budget") != std::string::npos);
}

TEST_CASE("text output is the default") {
  const Run r = run({"check", "--q", "4", "--m", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: EXHAUSTIVE") != std::string::npos);
}

TEST_CASE("help exits cleanly") { CHECK(run({"--help"}).code == 0); }

TEST_CASE("small audit through the CLI") {
  const json doc = run_json({"audit", "--qm-max", "30"}, 0);
  CHECK(doc["result"]["violations"] == 0);
  CHECK(doc["inputs"]["qm_max"] == 30);
}
