#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = svtab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> csv_lines(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& line : split_lines(text)) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("counts") {
  CHECK(run({"count", "--family", "two-row-union", "--n", "6"}).out == "42\n");
  CHECK(run({"count", "--formula", "ballot", "--n", "8", "--i", "2"}).out == "1002\n");
  CHECK(run({"count", "--formula", "ballot", "--n", "0", "--i", "0"}).out == "1\n");
  CHECK(run({"count", "--formula", "catalan", "--n", "10"}).out == "16796\n");
  CHECK(run({"count", "--family", "avoid321", "--m", "6"}).out == std::to_string(oracle::avoiders(6).size()) + "\n");
  CHECK(run({"count", "--family", "path", "--path-family", "motzET", "--n", "7"}).out ==
        std::to_string(oracle::paths(7, oracle::in_motzET).size()) + "\n");
  CHECK(run({"count", "--family", "svsyt", "--shape", "2,2", "--k", "2"}).out ==
        std::to_string(oracle::count_svsyt({2, 2}, 2)) + "\n");
}

TEST_CASE("formula against enumeration") {
  const Run r = run({"count", "--formula", "act", "--b", "2", "--k", "3", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.find("agree") != std::string::npos);
  CHECK(run({"count", "--formula", "ballot", "--n", "7", "--i", "2", "--oracle"}).code == 0);
  // two parts of sizes 2 and 3
  CHECK(run({"count", "--formula", "kreweras", "--n", "5", "--m", "2", "--mu", "0,1,1", "--oracle"}).code == 0);
  CHECK(run({"count", "--formula", "e", "--n", "7", "--i", "2", "--oracle"}).code == 0);
  CHECK(run({"count", "--formula", "narayana", "--n", "6", "--m", "3", "--oracle"}).out == "formula=50 oracle=50 agree\n");
  const Run none = run({"count", "--formula", "nope", "--n", "7"});
  CHECK(none.code == 2);
  CHECK(none.err == "error: InvalidArgument: unknown formula: nope\n");
}

TEST_CASE("q-tables reproduce the golden files") {
  CHECK(csv_lines(run({"qtable", "--stat", "catalan", "--max-n", "5", "--format", "csv"}).out) ==
        data_lines("golden/q_catalan.csv"));
  CHECK(csv_lines(run({"qtable", "--stat", "narayana", "--max-n", "4", "--format", "csv"}).out) ==
        data_lines("golden/q_narayana.csv"));
}

TEST_CASE("e/f tables reproduce the golden files") {
  CHECK(split_lines(run({"table", "--name", "ef", "--max-n", "8"}).out) == data_lines("golden/ef_table.csv"));
  CHECK(split_lines(run({"table", "--name", "ef-sums", "--max-n", "8"}).out) == data_lines("golden/ef_sums.csv"));
}

TEST_CASE("bijections") {
  const std::string t = R"({"outer":[2,2],"inner":[],"rows":[[[1,2],[3]],[[4],[5]]]})";
  // top row {1,2,3} are the right-to-left minima, one inner valley for two columns
  CHECK(run({"biject", "--map", "alpha", "--input", t}).out == "1 4 2 3\n");
  CHECK(run({"biject", "--map", "alpha-inv", "--input", "1 4 2 3"}).out == t + "\n");
  CHECK(run({"biject", "--map", "alpha-inv", "--input", "2 1"}).out ==
        "{\"outer\":[1,1],\"inner\":[],\"rows\":[[[1]],[[2,3]]]}\n");
  CHECK(run({"biject", "--map", "phi", "--input", "UUDD"}).out == "UdD\n");
  CHECK(run({"biject", "--map", "phi-inv", "--input", "UdD"}).out == "UUDD\n");
  const Run bad = run({"biject", "--map", "alpha-inv", "--input", "3 2 1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("Not321Avoiding") != std::string::npos);
}

TEST_CASE("series and expectations") {
  const auto lines = split_lines(run({"series", "--which", "E", "--order", "5", "--spec", "all-ones"}).out);
  REQUIRE(lines.size() >= 6);
  CHECK(lines[lines.size() - 6] == "0,1");
  CHECK(lines.back() == "5," + std::to_string(oracle::catalan(6)));
  const auto ex = split_lines(run({"expect", "--step", "U", "--n", "3..4"}).out);
  CHECK(ex.back() == "4,7/5");
}

TEST_CASE("verify quick budget passes and is deterministic without timings") {
  const Run a = run({"verify", "--budget", "quick", "--report", "json", "--no-timing"});
  const Run b = run({"verify", "--budget", "quick", "--report", "json", "--no-timing", "--parallel", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"failures\": 0,") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count", "--formula", "nope", "--n", "3"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"biject", "--map", "alpha"}).code == 2);
  CHECK(run({"enumerate", "--family", "svsyt", "--shape", "1,3"}).code == 2);
}

}  // TEST_SUITE
