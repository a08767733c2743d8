#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "toda_rpp/cli/cli.hpp"

using namespace toda_rpp;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("enumerate") {
  Run q = run({"enumerate", "--shape", "1", "--n", "1", "--mode", "q"});
  REQUIRE(q.code == 0);
  json records = json::parse(q.out);
  REQUIRE(records.size() == 2);
  CHECK(records[0]["pi"] == json::parse("[[0]]"));
  CHECK(records[0]["w"] == "1");
  CHECK(records[1]["pi"] == json::parse("[[1]]"));
  CHECK(records[1]["w"] == "q");
  CHECK(json::parse(run({"enumerate", "--shape", "2,1", "--n", "1"}).out).size() == 5);
  CHECK(json::parse(run({"enumerate", "--shape", "", "--n", "3"}).out).size() == 1);
  json x = json::parse(run({"enumerate", "--shape", "1", "--n", "1", "--mode", "x"}).out);
  CHECK(x[1]["w"] == "(-x[0]+x[-1]*x[0])/(-1+x[0])");
  Run rational = run({"enumerate", "--shape", "2,1", "--n", "2", "--mode", "rational", "--seed", "4"});
  CHECK(rational.code == 0);
  CHECK(json::parse(rational.out).size() == 14);
  CHECK(rational.out == run({"enumerate", "--shape", "2,1", "--n", "2", "--mode", "rational", "--seed", "4"}).out);
}

TEST_CASE("genfun") {
  CHECK(json::parse(run({"genfun", "--identity", "macmahon", "--r", "1", "--c", "1", "--n", "1"}).out)["value"] == "1+q");
  CHECK(json::parse(run({"genfun", "--identity", "thm5.1", "--shape", "1", "--n", "2"}).out)["value"] ==
        "(-1+x[-2]*x[-1]*x[0])/(-1+x[0])");
  CHECK(json::parse(run({"genfun", "--identity", "gansner", "--shape", "2", "--degree", "2"}).out)["value"] ==
        "1+x[1]+x[1]^2+x[0]*x[1]+O(deg>2)");
  CHECK(run({"genfun", "--identity", "thm4.3"}).code == 2);
}

TEST_CASE("verify") {
  Run box = run({"verify", "--identity", "macmahon", "--r", "2", "--c", "2", "--n", "2"});
  CHECK(box.code == 0);
  json doc = json::parse(box.out);
  CHECK(doc["equal"] == true);
  CHECK(doc["results"].size() == 1);
  CHECK(doc["results"][0]["lhs"] == doc["results"][0]["rhs"]);

  json trials = json::parse(run({"verify", "--identity", "thm4.3", "--shape", "2,1", "--n", "2", "--seed", "7", "--trials", "10"}).out);
  REQUIRE(trials["results"].size() == 10);
  for (const auto& r : trials["results"]) CHECK(r["equal"] == true);

  json single = json::parse(run({"verify", "--identity", "thm5.1", "--shape", "1", "--n", "1"}).out);
  CHECK(single["results"][0]["lhs"] == "(-1+x[-1]*x[0])/(-1+x[0])");
  CHECK(single["results"][0]["rhs"] == "(-1+x[-1]*x[0])/(-1+x[0])");
}

TEST_CASE("verify every identity") {
  for (const auto& id : cli::identity_names()) {
    Run r = run({"verify", "--identity", id, "--seed", "3", "--trials", "2"});
    CHECK_MESSAGE(r.code == 0, id, r.err);
    CHECK(json::parse(r.out)["equal"] == true);
  }
}

TEST_CASE("determinism") {
  Run a = run({"verify", "--seed", "42"});
  Run b = run({"verify", "--seed", "42"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"toda-check", "--seed", "9"}).out == run({"toda-check", "--seed", "9"}).out);
}

TEST_CASE("bijection") {
  Run r = run({"bijection", "--shape", "2,1", "--n", "2"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["records"].size() == 14);
  CHECK(doc["records"][0]["paths"].size() == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--bogus"}).code == 2);
  CHECK(run({"verify", "--identity", "nope"}).code == 2);
  CHECK(run({"verify", "--shape", "1,2"}).code == 2);
  CHECK(run({"verify", "--n", "-1"}).code == 2);
  CHECK(run({"toda-check", "--identity", "macmahon"}).code == 2);
  CHECK(run({"verify", "--help"}).code == 0);
}

TEST_CASE("resample limit from the environment") {
  ::setenv("TODA_RPP_MAX_RESAMPLE", "many", 1);
  CHECK(run({"verify", "--identity", "macmahon"}).code == 2);
  ::unsetenv("TODA_RPP_MAX_RESAMPLE");
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "toda_rpp_cli_test.json";
  Run r = run({"genfun", "--identity", "macmahon", "--r", "1", "--c", "1", "--n", "1", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(json::parse(in)["value"] == "1+q");
  std::filesystem::remove(path);
}
