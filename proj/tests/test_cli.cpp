#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlhp/cli.hpp"
#include "qlhp/expression.hpp"
#include "qlhp/serialization.hpp"
#include "test_support.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

using namespace qlhp;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell and captures stdout.
Result run_binary(const std::string& args) {
  const std::string command = std::string(QLHP_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output, ""};
}

}  // namespace

TEST_CASE("ring-eval") {
  CHECK(run({"ring-eval", "--relations", "h^4,psi^2", "--expr", "(1/2*(h-psi))^3"}).out ==
        "1/8*h^3 - 3/8*h^2*psi\n");
  CHECK(run({"ring-eval", "--relations", "h^4,psi^2", "--expr", "h*(1/4*(h-psi)^2)"}).out ==
        "1/4*h^3 - 1/2*h^2*psi\n");
  CHECK(run({"ring-eval", "--relations", "h^4,psi^2", "--expr", "h - h"}).out == "0\n");
  CHECK(run({"ring-eval", "--relations", "h^5", "--expr", "(1+h)^5"}).out == "1 + 5*h + 10*h^2 + 10*h^3 + 5*h^4\n");

  const auto json_out = run({"ring-eval", "--relations", "h^4,psi^2", "--expr", "1/2*h", "--format", "json"});
  CHECK(json_out.code == 0);
  CHECK(nlohmann::json::parse(json_out.out) ==
        nlohmann::json::parse(R"([{"exponents":[1,0],"num":"1","den":"2"}])"));
}

TEST_CASE("ring-eval rejects malformed input") {
  CHECK(run({"ring-eval", "--relations", "h^4", "--expr", "h + q"}).code == 1);
  CHECK(run({"ring-eval", "--relations", "h^4", "--expr", "(h"}).code == 1);
  CHECK(run({"ring-eval", "--relations", "h^4", "--expr", "h/h"}).code == 1);
  CHECK(run({"ring-eval", "--relations", "h^4", "--expr", "h/0"}).code == 1);
  CHECK(run({"ring-eval", "--relations", "h", "--expr", "h"}).code == 1);
  CHECK(run({"ring-eval", "--relations", "h^4,h^2", "--expr", "h"}).code == 1);
  CHECK(run({"ring-eval", "--relations", "h^4"}).code == 1);
}

TEST_CASE("expression parser") {
  const auto ring = parse_relations("h^4, psi^2");
  CHECK(to_string(evaluate_expression("-h + 2*psi - -h", ring)) == "2*psi");
  CHECK(to_string(evaluate_expression("h^0", ring)) == "1");
  CHECK(to_string(evaluate_expression("(h+psi)^2 / 2", ring)) == "1/2*h^2 + h*psi");
  const auto graded = parse_relations("a^3, b^2@2");
  CHECK(graded->generators()[1].degree == 2);
  CHECK_THROWS_AS(evaluate_expression("h^", ring), ParseError);
  CHECK_THROWS_AS(evaluate_expression("", ring), ParseError);
  CHECK_THROWS_AS(evaluate_expression("h h", ring), ParseError);
  CHECK_THROWS_AS(parse_relations("1h^2"), ParseError);
}

TEST_CASE("vdim") {
  CHECK(run({"vdim", "--weights", "1,1,2,2", "--genus", "0", "--markings", "mu2:4"}).out == "0\n");
  CHECK(run({"vdim", "--weights", "1,1,1,2,2,2,2", "--genus", "0", "--markings", "mu2:4"}).out == "1\n");
  CHECK(run({"vdim", "--weights", "1,2,2", "--genus", "0", "--markings", "mu2:4"}).out == "1\n");
  CHECK(run({"vdim", "--weights", "1,1", "--genus", "0", "--markings", "mu2:0"}).out == "-2\n");
  // P(1,1) has no mu_2 sector.
  CHECK(run({"vdim", "--weights", "1,1", "--genus", "0", "--markings", "mu2:4"}).code == 1);
  // Half-integer result.
  CHECK(run({"vdim", "--weights", "1,1,1,2,2,2,2", "--genus", "0", "--markings", "mu2:3"}).code == 1);
  CHECK(run({"vdim", "--weights", "1,x", "--genus", "0", "--markings", "mu2:4"}).code == 1);
  CHECK(run({"vdim", "--weights", "1,1,2,2", "--genus", "0", "--markings", "nu2:4"}).code == 1);
  CHECK(run({"vdim", "--weights", "1,1,2,2", "--genus", "0", "--markings", "mu2:-1"}).code == 1);
  CHECK(run({"vdim", "--weights", "0,1", "--genus", "0", "--markings", "mu1:1"}).code == 1);
}

TEST_CASE("convexity") {
  CHECK(run({"convexity", "--weights", "1,1,2,2", "--degree", "1"}).out ==
        "star:true pullback:false convex:false\n");
  CHECK(run({"convexity", "--weights", "1,1,2,2", "--degree", "2"}).out == "star:true pullback:true convex:true\n");
  CHECK(run({"convexity", "--weights", "1,1,1,1,1", "--degree", "5"}).out ==
        "star:true pullback:true convex:true\n");
  CHECK(run({"convexity", "--weights", "1,1,1,1,1", "--degree", "-1"}).out ==
        "star:false pullback:true convex:n/a\n");
  const auto j = nlohmann::json::parse(
      run({"convexity", "--weights", "1,1,2,2", "--degree", "1", "--format", "json"}).out);
  CHECK(j["convex"] == false);
}

TEST_CASE("check and list") {
  const auto json_run = run({"check", "p1112222-nontrivial", "--format", "json"});
  CHECK(json_run.code == 0);
  const auto j = nlohmann::json::parse(json_run.out);
  CHECK(j["verdict"] == "FAILS_PROPORTIONALITY");
  CHECK(j["witness"].is_null());
  for (const char* field : {"example", "vdim_x", "vdim_y", "class_x_vir", "pushforward_y_vir", "star_satisfied",
                            "convex", "verdict", "witness", "obstruction_note"}) {
    CHECK(j.contains(field));
  }

  const auto text = run({"check", "convex-control"});
  CHECK(text.code == 0);
  CHECK(text.out.find("HOLDS, witness e = h") != std::string::npos);

  CHECK(run({"check", "no-such-example"}).code == 1);
  CHECK(run({"check"}).code == 1);
  CHECK(run({"check", "convex-control", "--format", "xml"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);

  const auto listing = run({"list"});
  CHECK(listing.code == 0);
  std::istringstream lines(listing.out);
  std::vector<std::string> names;
  for (std::string line; std::getline(lines, line);) names.push_back(line.substr(0, line.find(' ')));
  CHECK(names == named_model_ids());
}

TEST_CASE("report JSON round-trips") {
  for (const auto& id : named_model_ids()) {
    CAPTURE(id);
    const auto report = check(id);
    const auto j = report_to_json(report);
    CHECK(report_from_json(nlohmann::json::parse(j.dump())) == report);
  }
}

TEST_CASE("class JSON round-trips on random classes") {
  std::mt19937 rng(23);
  const auto ring = testing::h_psi_ring(5, 3, testing::q(5, 24));
  CHECK(*ring_from_json(ring_to_json(*ring)) == *ring);
  for (int i = 0; i < 100; ++i) {
    const auto a = testing::random_class(ring, rng);
    CHECK(class_from_json(class_to_json(a), ring) == a);
  }
}

TEST_CASE("binary output is deterministic") {
  const auto first = run_binary("check p1112222-nontrivial --format json");
  const auto second = run_binary("check p1112222-nontrivial --format json");
  CHECK(first.code == 0);
  CHECK(!first.out.empty());
  CHECK(first.out == second.out);
  CHECK(run_binary("check no-such-example").code == 1);
}
