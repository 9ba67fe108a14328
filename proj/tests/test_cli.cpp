#include <doctest.h>

#include <regex>
#include <sstream>

#include "cli.hpp"

using fricke::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples") {
  Run r = run({"compose", "--surface", "fricke", "2,1,1", "1,2,5"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"result\":[\"15/4\",\"-3/4\",\"-6\"]}\n");

  r = run({"compose", "--surface", "fricke", "1,1,2", "1,1,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"result\":\"undefined\",\"reason\":\"coincident-points\"}\n");

  r = run({"tree", "--surface", "fricke", "--max-component", "30", "--format", "json"});
  CHECK(r.code == 0);
  for (const char* t : {"[\"1\",\"1\",\"1\"]", "[\"1\",\"1\",\"2\"]", "[\"1\",\"2\",\"5\"]", "[\"1\",\"5\",\"13\"]",
                        "[\"2\",\"5\",\"29\"]"})
    CHECK(r.out.find(t) != std::string::npos);
  CHECK(r.out.find("[\"1\",\"5\",\"13\"]") < r.out.find("[\"2\",\"5\",\"29\"]"));
}

TEST_CASE("output formats") {
  Run r = run({"tree", "--depth", "2", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph tree {", 0) == 0);
  CHECK(r.out.find("n1 -> n2 [label=\"R\"]") != std::string::npos);

  r = run({"compose", "2,1,1", "1,2,5", "--format", "plain"});
  CHECK(r.out == "(15/4, -3/4, -6)\n");
  // plain output parses back as input
  Run back = run({"compose", "(15/4, -3/4, -6)", "2,1,1"});
  CHECK(back.code == 0);
  CHECK(back.out == "{\"result\":[\"1\",\"2\",\"5\"]}\n");

  r = run({"compose", "2,1,1", "1,2,5", "--format", "dot"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--format") != std::string::npos);
}

TEST_CASE("every subcommand") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"star", "2,1,1", "1,2,5"}, "{\"result\":[\"41/49\",\"85/77\",\"109/77\"]}"},
      {{"compose", "--surface", "double", "4,1,1", "1,4,25"}, "{\"result\":[\"361/72\",\"-1/72\",\"-64/9\"]}"},
      {{"compose", "1,1,2", "1,2,5"}, "{\"result\":\"[0:1:3:0]\"}"},
      {{"section-add", "--base", "1,1,1", "2,1", "1,2"}, "{\"result\":[\"1\",\"1\"]}"},
      {{"section-double", "--base", "1,1,1", "1,2"}, "{\"result\":[\"2\",\"5\"]}"},
      {{"section-inverse", "--base", "1,1,1", "2,1"}, "{\"result\":[\"1\",\"2\"]}"},
      {{"section-add", "--surface", "double", "--base", "1,1,1", "1,4", "4,1"}, "{\"result\":[\"1\",\"1\"]}"},
      {{"dihedral", "--base", "1,1,1", "TA", "2,1"}, "{\"result\":[\"5\",\"2\"]}"},
      {{"ta-power", "--base", "1,1,1", "1,1", "3"}, "{\"result\":[\"13\",\"5\"]}"},
      {{"ta-power", "--base", "1,1,1", "--family", "TC", "1,1", "2"}, "{\"result\":[\"2\",\"5\"]}"},
      {{"chebyshev", "--n0", "1", "4"}, "{\"result\":\"55\"}"},
      {{"convergent", "--n0", "1", "3"}, "{\"result\":\"21/8\"}"},
      {{"infinity", "--n0", "2"}, "{\"result\":[\"(3+2√2)/1\",\"(3-2√2)/1\"]}"},
      {{"infinity", "--surface", "double", "--n0", "1"}, "{\"result\":[\"(7+3√5)/2\",\"(7-3√5)/2\"]}"},
      {{"param", "1", "2"}, "{\"result\":[\"1\",\"2\",\"1\"]}"},
      {{"param", "--surface", "double", "1", "2"}, "{\"result\":[\"1\",\"4\",\"1\"]}"},
      {{"phi", "1,1,2"}, "{\"result\":\"[1:1:2:1]\"}"},
      {{"psi", "[15:-3:-24:4]"}, "{\"result\":\"[5:-1:-8]\"}"},
      {{"p2-viete", "L", "1,2,1"}, "{\"result\":\"[1:5:2]\"}"},
      {{"p2-viete", "--surface", "double", "L", "1,1,1"}, "{\"result\":\"[1:4:1]\"}"},
      {{"p2-involution", "3", "1,1,2"}, "{\"result\":\"[1:5:2]\"}"},
      {{"p2-compose", "2,1,1", "1,2,5"}, "{\"result\":\"[5:-1:-8]\"}"},
      {{"negative-tree", "--depth", "1", "--format", "plain"}, "0 (-1, 0, 1)\n1 (-9, -1, 1)"},
      {{"frobenius", "--max-component", "1", "--format", "plain"},
       "1 triples, 1 distinct largest components, no duplicates"},
      {{"fundamental", "29"}, "{\"result\":{\"triple\":[\"2\",\"5\",\"29\"],\"base\":[\"2\",\"29\",\"5\"],\"count\":1}}"},
  };
  for (const auto& [args, expected] : cases) {
    const Run r = run(args);
    INFO(args.front());
    CHECK(r.code == 0);
    CHECK(r.out == expected + "\n");
  }
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  Run r = run({"compose", "1,2", "1,1,1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("P") != std::string::npos);
  r = run({"compose", "--surface", "triple", "1,1,1", "1,1,2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--surface") != std::string::npos);
  r = run({"tree"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--depth") != std::string::npos);
  r = run({"compose", "1,1,3", "1,1,2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("off-surface") != std::string::npos);
  CHECK(run({"fundamental", "4"}).code == 1);
  CHECK(run({"star", "--sigma", "5", "2,1,6", "1,2,0"}).code == 1);
  CHECK(run({"compose", "--sigma", "5", "2,1,6", "1,2,0"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("determinism and exactness") {
  const std::vector<std::string> args = {"tree", "--depth", "6"};
  const Run a = run(args), b = run(args);
  CHECK(a.out == b.out);
  const Run check1 = run({"check", "--seed", "42", "--pairs", "50"});
  const Run check2 = run({"check", "--seed", "42", "--pairs", "50"});
  CHECK(check1.code == 0);
  CHECK(check1.out == check2.out);
  CHECK(check1.out.find("\"mismatch\":0") != std::string::npos);
  // no decimal point anywhere in numeric output
  const std::regex decimal("[0-9]\\.[0-9]");
  for (const auto& r : {a, check1, run({"star", "1,1,2", "2,5,29"}), run({"frobenius", "--max-component", "10000"})})
    CHECK_FALSE(std::regex_search(r.out, decimal));
}
