#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

#include "tba/model.hpp"
#include "tba/search.hpp"

using namespace tba;
using nlohmann::json;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(TBA_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_sierpinski_model(const std::string& name) {
  json model;
  model["points"] = 2;
  model["primitive"] = "interior";
  model["operator"] = {{"points", 2}, {"table", {0, 1, 0, 3}}};
  model["valuation"] = {{"p", {0}}};
  std::string path = "/tmp/" + name;
  std::ofstream(path) << model.dump();
  return path;
}

std::string write_indiscrete_model(const std::string& name) {
  json model;
  model["points"] = 2;
  model["primitive"] = "closure";
  model["operator"] = {{"points", 2}, {"table", {0, 3, 3, 3}}};
  model["valuation"] = {{"p", {0}}, {"q", {1}}};
  std::string path = "/tmp/" + name;
  std::ofstream(path) << model.dump();
  return path;
}

}  // namespace

TEST_CASE("cli consequence and eval") {
  std::string m = write_indiscrete_model("tba_cli_ind.json");
  CHECK(run_cli("consequence -m " + m + " -s \"cons p, p, negC p |- F\"")
            .exit_code == 0);
  CHECK(run_cli("consequence -m " + m + " -s \"p, negC p |- F\"").exit_code ==
        1);

  auto eval_out = run_cli("eval -m " + m + " -f \"cons p\"");
  CHECK(eval_out.exit_code == 0);
  CHECK(eval_out.out == "{1}\n");

  auto val = run_cli("valid -m " + m + " -f \"p -> p\"");
  CHECK(val.exit_code == 0);
}

TEST_CASE("cli search finds and serializes countermodels") {
  auto res = run_cli(
      "search -f \"p | negI p\" --assume I:MULT,CNTR,DNRM,IDEM "
      "--max-points 2 --format json");
  CHECK(res.exit_code == 1);
  json out = json::parse(res.out);
  CHECK(out["status"] == "countermodel");

  // closed loop: the emitted model reproduces the failure
  Model m = model_from_json(out["model"]);
  CHECK_FALSE(goal_holds(Goal(parse_formula("p | negI p")), m));

  auto valid_res =
      run_cli("search -s \"cons p, p, negC p |- F\" --max-points 2");
  CHECK(valid_res.exit_code == 0);

  auto bounded = run_cli(
      "search -f \"p -> p\" --strategy random --samples 20 --max-points 2");
  CHECK(bounded.exit_code == 3);
}

TEST_CASE("cli cube reports exhaustive counts") {
  auto res = run_cli("cube --points 2 --exhaustive");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "256/256 operators pass\n");
}

TEST_CASE("cli topology roundtrip and monoid") {
  CHECK(run_cli("topology-roundtrip --max-points 3").exit_code == 0);

  std::string m = write_indiscrete_model("tba_cli_monoid.json");
  auto res = run_cli("monoid -m " + m + " -g C,- --format json");
  CHECK(res.exit_code == 0);
  json out = json::parse(res.out);
  CHECK(out["saturated"] == true);
  CHECK(out["size"].get<int>() <= 14);
}

TEST_CASE("cli barcan") {
  CHECK(run_cli("barcan --points 2 --sort-size 2").exit_code == 0);
  auto cm = run_cli(
      "barcan --points 2 --sort-size 1 --find-var-countermodel --format json");
  CHECK(cm.exit_code == 1);
  json out = json::parse(cm.out);
  CHECK(out.contains("interior"));
  CHECK(out.contains("delta"));
}

TEST_CASE("cli check-conditions") {
  std::string opfile = "/tmp/tba_cli_op.json";
  std::ofstream(opfile) << R"({"points":2,"table":[0,3,3,3]})";
  CHECK(run_cli("check-conditions --op " + opfile + " -c ADDI,EXPN,NORM,IDEM")
            .exit_code == 0);
  auto res = run_cli("check-conditions --op " + opfile +
                     " -c nNORM --format json");
  CHECK(res.exit_code == 1);
  json out = json::parse(res.out);
  CHECK(out[0]["condition"] == "nNORM");
  CHECK(out[0]["holds"] == false);
}

TEST_CASE("cli json output is byte-identical across runs") {
  std::string m = write_sierpinski_model("tba_cli_sier.json");
  std::string args = "search -f \"p | negI p\" --assume I:MULT --max-points 2 "
                     "--format json --seed 5";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.out == b.out);
}

TEST_CASE("cli usage errors exit with code 2") {
  CHECK(run_cli("nonsense-command").exit_code == 2);
  CHECK(run_cli("consequence -m /nonexistent.json -s \"p |- p\"").exit_code ==
        2);
  CHECK(run_cli("search").exit_code == 2);
  std::string m = write_indiscrete_model("tba_cli_err.json");
  CHECK(run_cli("consequence -m " + m + " -s \"p & |- q\"").exit_code == 2);
  CHECK(run_cli("search -f p -s \"p |- q\"").exit_code == 2);
}

TEST_CASE("cli negation-map report runs") {
  auto res = run_cli("report negation-map --max-points 1 --format json");
  CHECK(res.exit_code == 0);
  json out = json::parse(res.out);
  CHECK(out.is_array());
  CHECK(out.size() > 0);
}

TEST_CASE("cli recovery report") {
  std::string m = write_indiscrete_model("tba_cli_rec.json");
  auto res = run_cli("report recovery -m " + m + " --format json");
  CHECK(res.exit_code == 0);
  json out = json::parse(res.out);
  CHECK(out["gentle_explosion"] == true);
  CHECK(out["cons_is_border_compl"] == true);
  CHECK(out.contains("border_fp_guarded_properties"));
}
