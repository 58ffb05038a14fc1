#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "splitperm/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = splitperm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("table") {
  const auto small = run({"table", "--n-max", "1"});
  CHECK(small.code == 0);
  CHECK(small.out == "r,n,k\n0,1,1\n1,1,1\n");

  const auto printed = run({"table", "--n-max", "9", "--r-max", "4", "--format", "csv"});
  CHECK(printed.code == 0);
  CHECK(line_count(printed.out) == 1 + 39);
  CHECK(printed.out.find("\n2,5,47\n") != std::string::npos);
  CHECK(printed.out.find("\n4,9,14359\n") != std::string::npos);

  const auto json = run({"table", "--n-max", "2", "--format", "json"});
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc.size() == 5);
  CHECK(doc[4]["k"] == "2");

  CHECK(run({"table", "--n-max", "0"}).code == 2);
  CHECK(run({"table", "--n-max", "101"}).code == 2);
  CHECK(run({"table"}).code == 2);
  CHECK(run({"table", "--n-max", "3", "--format", "xml"}).code == 2);
}

TEST_CASE("count") {
  CHECK(run({"count", "--r", "2", "--n", "5", "--method", "formula"}).out == "47\n");
  CHECK(run({"count", "--r", "2", "--n", "5", "--method", "brute"}).out == "47\n");
  CHECK(run({"count", "--r", "2", "--n", "5", "--method", "corollary"}).out == "47\n");
  CHECK(run({"count", "--r", "0", "--n", "6"}).out == "720\n");
  CHECK(run({"count", "--r", "0", "--n", "22"}).out == "1124000727777607680000\n");

  const auto guarded = run({"count", "--r", "1", "--n", "11", "--method", "brute"});
  CHECK(guarded.code == 3);
  CHECK(guarded.out.empty());
  CHECK_FALSE(guarded.err.empty());

  CHECK(run({"count", "--r", "3", "--n", "2"}).code == 2);
  CHECK(run({"count", "--r", "0", "--n", "3", "--method", "corollary"}).code == 2);
  CHECK(run({"count", "--r", "1", "--n", "3", "--method", "guess"}).code == 2);
}

TEST_CASE("check") {
  const auto example = run({"check", "--perm", "315642", "--r", "3"});
  CHECK(example.code == 1);
  CHECK(example.out ==
        "{\"avoids\":false,\"fiber_bundle\":false,\"witness_3_12\":null,\"witness_23_1\":[1,3,6]}\n");

  const auto identity = run({"check", "--perm", "123456", "--r", "3"});
  CHECK(identity.code == 0);
  CHECK(nlohmann::json::parse(identity.out)["avoids"] == true);

  const auto w312 = nlohmann::json::parse(run({"check", "--perm", "312", "--r", "1"}).out);
  CHECK(w312["avoids"] == false);
  CHECK(w312["witness_3_12"] == nlohmann::json::array({1, 2, 3}));
  CHECK(w312["witness_23_1"].is_null());

  const auto comma = run({"check", "--perm", "3,1,5,6,4,2", "--r", "3"});
  CHECK(comma.out == example.out);

  const auto edge = nlohmann::json::parse(run({"check", "--perm", "312", "--r", "0"}).out);
  CHECK(edge["avoids"] == true);
  CHECK(edge["fiber_bundle"].is_null());

  CHECK(run({"check", "--perm", "3152", "--r", "1"}).code == 2);
  CHECK(run({"check", "--perm", "abc", "--r", "1"}).code == 2);
  CHECK(run({"check", "--perm", "312", "--r", "4"}).code == 2);
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "--r", "1", "--n", "3"}).out == "123\n132\n213\n231\n321\n");
  CHECK(run({"enumerate", "--r", "0", "--n", "2"}).out == "12\n21\n");
  CHECK(line_count(run({"enumerate", "--r", "2", "--n", "4"}).out) == 14);
  CHECK(run({"enumerate", "--r", "1", "--n", "3", "--format", "json"}).out ==
        "[\"123\",\"132\",\"213\",\"231\",\"321\"]\n");
  CHECK(run({"enumerate", "--r", "1", "--n", "2", "--format", "csv"}).out == "perm\n12\n21\n");
  CHECK(run({"enumerate", "--r", "1", "--n", "11"}).code == 3);
  CHECK(run({"enumerate", "--r", "4", "--n", "3"}).code == 2);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--target", "recursion", "--order", "12"}).code == 0);
  CHECK(run({"verify", "--target", "bessel", "--order", "6"}).code == 0);
  CHECK(run({"verify", "--target", "symmetry", "--order", "6"}).code == 0);

  const auto main2 = run({"verify", "--target", "main2", "--order", "8"});
  CHECK(main2.code == 0);
  CHECK(main2.out.find("residual") != std::string::npos);

  const auto oracle = run({"verify", "--target", "oracle", "--n-max", "8", "--format", "json"});
  CHECK(oracle.code == 0);
  const auto doc = nlohmann::json::parse(oracle.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["notes"][0] == "oracle: largest n tested = 8");

  CHECK(run({"verify", "--target", "fibers", "--n-max", "11"}).code == 3);
  CHECK(run({"verify", "--target", "nonsense"}).code == 2);
  CHECK(run({"verify", "--order", "1"}).code == 2);
}

TEST_CASE("series dump and dispatch") {
  const auto dump = run({"series", "--name", "K", "--order", "2"});
  CHECK(dump.code == 0);
  const auto doc = nlohmann::json::parse(dump.out);
  CHECK(doc["coeffs"][2][2] == nlohmann::json::array({"7", "2"}));

  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "--target", "all", "--order", "4", "--n-max", "5"};
  CHECK(run(args).out == run(args).out);
}
