#include "commands.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = adnil::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return Json::parse(r.out);
}

Json without_timing(Json j) {
  j.erase("timing_ms");
  return j;
}

const std::string kExample = "10,10,9,6,5,4,4,3,1,1,1,1,0";

}  // namespace

TEST_CASE("classify") {
  const Json j = run_json({"classify", kExample, "--n", "13"});
  CHECK(j["command"] == "classify");
  CHECK(j["n"] == 13);
  CHECK(j["results"]["class"] == 3);
  CHECK(j["results"]["class_tableau"] == 3);
  CHECK(j["results"]["touch_sequence"] == Json::array({1, 5, 10}));
  CHECK(j["results"]["dimension"] == "55");
  CHECK(j["results"]["filling"].size() == 13);
  CHECK(run_json({"classify", "0", "--n", "1"})["results"]["class"] == 0);

  const Run bad = run({"classify", "4,1", "--n", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("staircase") != std::string::npos);
  CHECK(run({"classify", "1,2", "--n", "3"}).code == 2);
}

TEST_CASE("report schema keys are stable") {
  const Json j = run_json({"affine", "2,1", "--n", "2"});
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "n", "inputs", "results", "checks", "timing_ms"});
  CHECK(j["results"]["window"] == Json::array({-2, 2, 6}));
  for (const Json& c : j["checks"]) CHECK(c["pass"] == true);
  CHECK(run_json({"affine", "0,0", "--n", "2"})["results"]["window"] == Json::array({1, 2, 3}));
}

TEST_CASE("count") {
  CHECK(run_json({"count", "--n", "3", "--at-most", "2", "--method", "reflection"})["results"]["count"] == "13");
  CHECK(run_json({"count", "--n", "5", "--at-most", "1", "--method", "sum"})["results"]["count"] == "32");
  CHECK(run_json({"count", "--n", "3", "--class", "3", "--method", "sum"})["results"]["count"] == "1");
  for (const char* m : {"det44", "det45", "reflection", "genfun", "contfrac", "brute"})
    CHECK(run_json({"count", "--n", "4", "--class", "2", "--method", m})["results"]["count"] == "18");
  CHECK(run({"count", "--n", "3", "--method", "sum"}).code == 2);
  CHECK(run({"count", "--n", "3", "--at-most", "2", "--method", "guess"}).code == 2);
  CHECK(run({"count", "--n", "3", "--class", "1", "--at-most", "2"}).code == 2);
  CHECK(run({"count", "--n", "13", "--at-most", "2", "--method", "brute"}).code == 2);
  // Big values stay exact and are emitted as strings.
  CHECK(run_json({"count", "--n", "60", "--at-most", "60", "--method", "reflection"})["results"]["count"] ==
        "6182127958584855650487080847216336");
}

TEST_CASE("table") {
  Json j = run_json({"table", "--n", "1"});
  CHECK(j["results"]["entries"] == Json::parse(R"([{"dimension":0,"class":0,"count":"1"},{"dimension":1,"class":1,"count":"1"}])"));
  j = run_json({"table", "--n", "3"});
  CHECK(j["results"]["class_totals"] == Json::array({"1", "7", "5", "1"}));
  for (const Json& c : j["checks"]) CHECK(c["pass"] == true);
  const Run csv = run({"table", "--n", "2", "--format", "csv"});
  CHECK(csv.out.rfind("dimension,class,count\n0,0,1\n1,1,1\n2,1,2\n3,2,1\n", 0) == 0);
}

TEST_CASE("dyck") {
  Json j = run_json({"dyck", kExample, "--n", "13"});
  CHECK(j["results"]["path"] == "UDUUUDDDUUDUUDDUUUDDUDDDUUDD");
  CHECK(j["results"]["height"] == 4);
  j = run_json({"dyck", "--invert", "UDUD", "--n", "1"});
  CHECK(j["results"]["partition"] == "0");
  j = run_json({"dyck", "--invert", "3433344433433443334434443344", "--n", "13"});
  CHECK(j["results"]["partition"] == kExample);
  j = run_json({"dyck", "--invert", R"(["U","U","D","D"])", "--n", "1"});
  CHECK(j["results"]["partition"] == "1");
  for (const Json& c : j["checks"]) CHECK(c["pass"] == true);
  CHECK(run({"dyck", "--invert", "DU", "--n", "1"}).code == 2);
  CHECK(run({"dyck", "--invert", "UDUD", "--n", "2"}).code == 2);
  CHECK(run({"dyck", "--n", "2"}).code == 2);
}

TEST_CASE("qt") {
  CHECK(run_json({"qt", "--n", "2"})["results"]["polynomial"] == "1 + qt + 2qt^2 + q^2t^3");
  CHECK(run_json({"qt", "--n", "1"})["results"]["polynomial"] == "1 + qt");
  const Json j = run_json({"qt", "--n", "9", "--brute"});
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["results"]["terms"][0] == Json::parse(R"({"q":0,"t":0,"coeff":"1"})"));
}

TEST_CASE("extremal") {
  Json j = run_json({"extremal", "--n", "13", "--class", "3"});
  CHECK(j["results"]["theta_min"] == "26");
  CHECK(j["results"]["theta_max"] == "73");
  for (const Json& c : j["checks"]) CHECK(c["pass"] == true);
  j = run_json({"extremal", "--n", "3", "--dim", "3"});
  CHECK(j["results"]["Theta_min"] == 1);
  CHECK(j["results"]["Theta_max"] == 1);
  j = run_json({"extremal", "--n", "3", "--dim", "6"});
  CHECK(j["results"]["Theta_min"] == 3);
  CHECK(j["results"]["Theta_max"] == 3);
  CHECK(j["results"]["witness_max"] == "3,2,1");
  CHECK(run({"extremal", "--n", "3", "--class", "4"}).code == 2);
  CHECK(run({"extremal", "--n", "3", "--dim", "7"}).code == 2);
}

TEST_CASE("verify and the failure path") {
  Run r = run({"verify", "--n-max", "1"});
  CHECK(r.code == 0);
  r = run({"verify", "--n-max", "5", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["results"]["passed"] == j["results"]["checks_run"]);
  CHECK(j["results"]["counterexample"].is_null());

  r = run({"verify", "--n-max", "4", "--inject-fault", "reflection", "--format", "json"});
  CHECK(r.code == 1);
  const Json bad = Json::parse(r.out);
  CHECK(bad["results"]["counterexample"]["check"] == "count_agreement");
  CHECK(bad["results"]["counterexample"]["n"] == 3);
  CHECK(bad["results"]["counterexample"]["expected"] == "sum 13");
  CHECK(bad["results"]["counterexample"]["got"] == "reflection 14");
  CHECK(r.err.find("counterexample") != std::string::npos);

  CHECK(run({"verify", "--n-max", "13"}).code == 2);
  CHECK(run({"verify", "--n-max", "3", "--check", "nonsense"}).code == 2);
  r = run({"verify", "--n-max", "3", "--check", "affine", "--check", "bijection", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("check,pass,detail\nbijection,pass,", 0) == 0);
}

TEST_CASE("output is deterministic across worker counts") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"table", "--n", "7"}, {"qt", "--n", "8", "--brute"}, {"verify", "--n-max", "6"}, {"extremal", "--n", "8", "--dim", "12"}}) {
    auto one = args, many = args;
    one.insert(one.end(), {"--jobs", "1"});
    many.insert(many.end(), {"--jobs", "5"});
    CHECK(without_timing(run_json(one)) == without_timing(run_json(many)));
  }
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classify", "1"}).code == 2);
  CHECK(run({"classify", "1", "--n", "0"}).code == 2);
  CHECK(run({"qt", "--n", "2", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
