#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <json.hpp>

#include "cli_runner.hpp"

using nlohmann::json;

TEST_CASE("families lists the built-in registry") {
  const auto res = cli::run("families");
  CHECK(res.code == 0);
  for (const char* name : {"yunus", "power", "logpow", "xlnx", "lnln", "combo", "exp"}) {
    CAPTURE(name);
    CHECK(res.out.find(name) != std::string::npos);
  }

  const auto js = cli::run("families --format json");
  CHECK(js.code == 0);
  const json arr = json::parse(js.out);
  CHECK(arr.size() == 7);
}

TEST_CASE("optimize emits the maximizer as JSON") {
  const auto res = cli::run("optimize --family yunus --p 1");
  REQUIRE(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(std::abs(j["x_star"].get<double>() - 4.62) <= 0.01);
  CHECK(j["k_star"] == 5);
  CHECK(j["branch"] == "concave");
}

TEST_CASE("verify reports counterexamples as data with exit 0") {
  const auto res = cli::run("verify --family power --r 2");
  REQUIRE(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(j["branch"] == "none");
  CHECK(j["a"].is_null());
}

TEST_CASE("narrow returns the sharpened interval") {
  const auto res = cli::run("narrow --family yunus --p-lo 0.5 --p-hi 1.0");
  REQUIRE(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(j["x_lo"].get<double>() == doctest::Approx(3.4).epsilon(1e-12));
  CHECK(j["x_hi"].get<double>() == doctest::Approx(5.2).epsilon(1e-12));
}

TEST_CASE("simulate output is byte-identical for a fixed seed") {
  const std::string cmd = "simulate --family yunus --p 0.5 --k 5 --trials 200000 --seed 7";
  const auto a = cli::run(cmd);
  const auto b = cli::run(cmd);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(j["k"] == 5);
  CHECK(j["seed"] == 7);
  CHECK(j["trials"] == 200000);
  CHECK(std::abs(j["z"].get<double>()) < 5.0);

  const auto c = cli::run("simulate --family yunus --p 0.5 --k 5 --trials 200000 --seed 8");
  CHECK(c.out != a.out);
}

TEST_CASE("sweep writes CSV with the documented header") {
  const auto res = cli::run("sweep --family yunus --param p --lo 0.5 --hi 0.51 --step 0.005 --format csv");
  REQUIRE(res.code == 0);
  CHECK(res.out.rfind("param,x_star,k_star,k_star_rounded,p_no_default,certified,a,b,method_agreement\n", 0) == 0);
  CHECK(std::count(res.out.begin(), res.out.end(), '\n') == 4);

  const auto to_file = cli::run(
      "sweep --family yunus --param p --lo 0.5 --hi 0.51 --step 0.005 --format csv "
      "--output sweep_test_output.csv");
  REQUIRE(to_file.code == 0);
  CHECK(cli::read_file("sweep_test_output.csv") == res.out);
  std::remove("sweep_test_output.csv");
}

TEST_CASE("exit code contract") {
  // 0: success
  CHECK(cli::run("families").code == 0);
  // 2: usage errors
  CHECK(cli::run("").code == 2);
  CHECK(cli::run("optimize --family yunus --p 0.5 --bogus 1").code == 2);
  CHECK(cli::run("nonsense-command").code == 2);
  CHECK(cli::run("optimize --p 0.5").code == 2);           // missing --family
  CHECK(cli::run("optimize --family yunus --p 0.5 --format csv").code == 2);
  // 3: config errors
  cli::write_file("bad_config.json", "{not json");
  CHECK(cli::run("optimize --config bad_config.json").code == 3);
  std::remove("bad_config.json");
  cli::write_file("missing_field.json", R"({"command": "optimize"})");
  CHECK(cli::run("--config missing_field.json").code == 3);
  std::remove("missing_field.json");
  CHECK(cli::run("optimize --family yunus --p 0.5 --config does_not_exist.json").code == 3);
  // 4: domain errors
  const auto range = cli::run("optimize --family yunus --p 2.0");
  CHECK(range.code == 4);
  CHECK(range.err.find("out of range") != std::string::npos);
  CHECK(cli::run("optimize --family unknown --p 0.5").code == 4);
  CHECK(cli::run("optimize --family power --r 2").code == 4);  // uncertifiable
  CHECK(cli::run("simulate --family yunus --p 0.5 --k 1").code == 4);
}

TEST_CASE("config file supplies defaults and flags override") {
  cli::write_file("opt_config.json",
                  R"({"command": "optimize", "family": "yunus", "params": {"p": 1.0}})");
  const auto from_config = cli::run("--config opt_config.json");
  REQUIRE(from_config.code == 0);
  CHECK(std::abs(json::parse(from_config.out)["x_star"].get<double>() - 4.62) <= 0.01);

  const auto overridden = cli::run("optimize --config opt_config.json --p 0.5");
  REQUIRE(overridden.code == 0);
  CHECK(std::abs(json::parse(overridden.out)["x_star"].get<double>() - 5.13) <= 0.01);
  std::remove("opt_config.json");
}

TEST_CASE("check-appendix prints a pass table") {
  const auto res = cli::run("check-appendix --points 101");
  CHECK(res.code == 0);
  CHECK(res.out.find("PASS") != std::string::npos);
  CHECK(res.out.find("FAIL") == std::string::npos);

  const auto js = cli::run("check-appendix --points 101 --format json");
  CHECK(js.code == 0);
  CHECK(json::parse(js.out)["all_ok"] == true);
}
