#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "padic/cli.hpp"
#include "padic/io.hpp"
#include "support.hpp"

using namespace padic;
using namespace padic::cli;
using nlohmann::json;

namespace {

CommandRequest request(const std::string& sub, std::vector<std::string> series) {
  CommandRequest r;
  r.subcommand = sub;
  r.series = std::move(series);
  return r;
}

json parsed(const CommandResult& r) { return json::parse(r.output); }

int run_args(std::vector<std::string> args, std::string& out, std::string& err) {
  args.insert(args.begin(), "padic-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = run(static_cast<int>(argv.size()), argv.data(), o, e);
  out = o.str();
  err = e.str();
  return code;
}

}  // namespace

TEST_CASE("check-dwork passes for the (1/2,1/2) series") {
  auto req = request("check-dwork", {"hyp:1/2,1/2"});
  req.prime = 5;
  req.s = 2;
  req.order = 60;
  const auto r = execute(req);
  CHECK(r.exit_code == kExitOk);
  const json j = parsed(r);
  CHECK(j["result"]["pass"] == true);
  CHECK(j["request"]["s"] == 2);
  CHECK(j["request"]["ramification"] == "unramified");
}

TEST_CASE("antecedent on the Apery operator") {
  auto req = request("antecedent", {"apery"});
  req.levels = 1;
  req.order = 50;
  const auto r = execute(req);
  REQUIRE(r.exit_code == kExitOk);
  const json j = parsed(r);
  const auto& lv = j["result"]["levels"][0];
  CHECK(lv["level"] == 1);
  CHECK(lv["residual_min_valuation"] == "inf");
  CHECK(lv["passage_constant_diagonal"] == json::array({"1", "5", "25"}));
}

TEST_CASE("scan reports the square of the half-integer binomial series") {
  auto req = request("scan", {"hyp:1/2"});
  req.prime = 7;
  req.exp_bound = 2;
  req.level = 2;
  req.deg_bound = 8;
  const auto r = execute(req);
  REQUIRE(r.exit_code == kExitOk);
  const json j = parsed(r);
  REQUIRE(j["result"]["candidates"].size() == 1);
  CHECK(j["result"]["candidates"][0]["exponents"] == json::array({2}));
  const PadicField f(7, Ramification::Unramified);
  const auto cert = io::rational_from_json(f, j["result"]["candidates"][0]["product_certificate"]["rational"]);
  CHECK(cert == RationalFunction(testing_support::poly(f, {1}), testing_support::poly(f, {1, -1})));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(execute(request("frobnicate", {"apery"})).exit_code == kExitUsage);
  auto bad_prime = request("gen", {"apery"});
  bad_prime.prime = 6;
  CHECK(execute(bad_prime).exit_code == kExitUsage);
  CHECK(execute(request("check-lucas", {})).exit_code == kExitUsage);
  CHECK(execute(request("check-lucas", {"apery", "exp"})).exit_code == kExitUsage);
  auto bad_kind = request("certify-ratio", {"apery"});
  bad_kind.kind = "other";
  CHECK(execute(bad_kind).exit_code == kExitUsage);
  const auto r = execute(request("gen", {"zeta"}));
  CHECK(r.exit_code == kExitUsage);
  CHECK(r.error.find("usage error") == 0);
}

TEST_CASE("verification failures exit with code 1 and a structured error") {
  auto req = request("check-integrality", {"hyp:1/2"});
  req.prime = 2;
  req.level = 5;
  const auto r = execute(req);
  CHECK(r.exit_code == kExitFailed);
  const json j = parsed(r);
  CHECK(j["result"]["pass"] == false);
  CHECK(j["result"]["first_failure"] == 1);

  auto exhausted = request("check-dwork", {"hyp:1/2,1/2"});
  exhausted.s = 2;
  exhausted.order = 20;
  const auto e = execute(exhausted);
  CHECK(e.exit_code == kExitFailed);
  CHECK(parsed(e)["error"]["code"] == "OrderExhausted");
}

TEST_CASE("ramification is chosen from the series") {
  auto req = request("gen", {"bessel"});
  req.prime = 3;
  req.order = 10;
  const json j = parsed(execute(req));
  CHECK(j["request"]["ramification"] == "dwork");
  CHECK(j["result"]["entries"][0]["series"]["ramification"] == "dwork");
  auto forced = req;
  forced.ramification = "unramified";
  const auto r = execute(forced);
  CHECK(r.exit_code == kExitFailed);
  CHECK(parsed(r)["error"]["code"] == "BadContext");
}

TEST_CASE("gen output round-trips through the series reader") {
  auto req = request("gen", {"apery", "hyp:1/3,2/3"});
  req.order = 30;
  const json j = parsed(execute(req));
  REQUIRE(j["result"]["entries"].size() == 2);
  const TruncSeries a = io::series_from_json(j["result"]["entries"][0]["series"]);
  CHECK(a == testing_support::catalog_series("apery", 5, Ramification::Unramified, 30));
  CHECK(j["result"]["entries"][1]["period"] == 2);
}

TEST_CASE("repeated runs are byte-identical") {
  auto req = request("scan", {"apery", "hyp:1/2,1/2"});
  req.order = 40;
  req.level = 2;
  req.deg_bound = 6;
  CHECK(execute(req).output == execute(req).output);
  auto cert = request("certify-ratio", {"apery"});
  cert.order = 60;
  CHECK(execute(cert).output == execute(cert).output);
}

TEST_CASE("table format") {
  auto req = request("check-lucas", {"apery"});
  req.order = 30;
  req.format = OutputFormat::Table;
  const auto r = execute(req);
  CHECK(r.output.find("result.pass") != std::string::npos);
  CHECK(r.output.find('{') == std::string::npos);
}

TEST_CASE("operator file input") {
  const auto path = std::filesystem::temp_directory_path() / "padic_cli_test_operator.json";
  {
    // delta^2 - z (delta + 1/2)^2
    std::ofstream out(path);
    out << R"({"p": 5, "ramification": "unramified", "N": 30,
               "terms": [{"zdeg": 0, "deltapoly": [0, 0, 1]},
                         {"zdeg": 1, "deltapoly": ["-1/4", -1, -1]}]})";
  }
  CommandRequest req;
  req.subcommand = "antecedent";
  req.operator_file = path.string();
  req.order = 30;
  const auto r = execute(req);
  REQUIRE(r.exit_code == kExitOk);
  CHECK(parsed(r)["result"]["levels"][0]["passage_constant_diagonal"] == json::array({"1", "5"}));

  req.subcommand = "gen";
  const json g = parsed(execute(req));
  const TruncSeries s = io::series_from_json(g["result"]["entries"][0]["series"]);
  CHECK(s == testing_support::catalog_series("hyp:1/2,1/2", 5, Ramification::Unramified, 30));

  req.prime = 7;
  CHECK(execute(req).exit_code == kExitUsage);
  req.operator_file = (std::filesystem::temp_directory_path() / "padic_cli_missing.json").string();
  CHECK(execute(req).exit_code == kExitUsage);
  std::filesystem::remove(path);
}

TEST_CASE("argv parsing") {
  std::string out, err;
  CHECK(run_args({"check-lucas", "--series", "apery", "--prime", "5", "--order", "124"}, out, err) == kExitOk);
  CHECK(json::parse(out)["result"]["pass"] == true);
  CHECK(run_args({"scan", "--series", "hyp:1/2", "--series", "hyp:1/2", "--prime", "7", "--derivs", "0,1",
                  "--exp-bound", "3", "--level", "2", "--deg-bound", "8", "--order", "48"},
                 out, err) == kExitOk);
  CHECK(json::parse(out)["request"]["derivs"] == json::array({0, 1}));
  CHECK(run_args({"check-lucas", "--series", "apery", "--format", "table"}, out, err) == kExitOk);
  CHECK(out.find("result.pass") != std::string::npos);
  CHECK(run_args({"check-lucas", "--bogus"}, out, err) == kExitUsage);
  CHECK(run_args({}, out, err) == kExitUsage);
  CHECK(run_args({"check-lucas", "--series", "apery", "--format", "xml"}, out, err) == kExitUsage);
  CHECK(run_args({"check-lucas", "--series", "apery", "--order", "abc"}, out, err) == kExitUsage);
}

TEST_CASE("the installed binary matches the library") {
  const std::string cmd = std::string(PADIC_CLI_PATH) + " check-lucas --series apery --order 30";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  CHECK(status == 0);
  auto req = request("check-lucas", {"apery"});
  req.order = 30;
  CHECK(out == execute(req).output);
}
