#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "qgames/verify.hpp"

using json = nlohmann::json;

namespace {

struct Capture {
  std::string out;
  int exit_code = -1;
};

Capture run_cli(const std::string& args) {
  Capture c;
  std::string cmd = std::string("'") + QGAMES_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) c.out.append(buf, n);
  int status = pclose(p);
  c.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

}  // namespace

TEST_CASE("run pd-entangled (I, X) reports the certain (3,3) outcome") {
  Capture c = run_cli("run pd-entangled --a I --b X --format json");
  REQUIRE(c.exit_code == 0);
  json j = json::parse(c.out);
  REQUIRE(j["payoff_distribution"].size() == 1);
  CHECK(j["payoff_distribution"][0]["payoff"] == json::array({3.0, 3.0}));
  CHECK(j["payoff_distribution"][0]["probability"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("run pd-quantum at gamma=pi/2 with identity strategies pays (3,3)") {
  Capture c = run_cli("run pd-quantum --gamma 1.5707963 --theta-a 0 --theta-b 0");
  REQUIRE(c.exit_code == 0);
  json j = json::parse(c.out);
  CHECK(j["expected_payoffs"][0].get<double>() == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(j["expected_payoffs"][1].get<double>() == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("run zerosum with identity strategies gives P_A = 1") {
  Capture c = run_cli("run zerosum --theta-a 0 --theta-b 0");
  REQUIRE(c.exit_code == 0);
  json j = json::parse(c.out);
  CHECK(j["p_a_quantum"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  // classical formula reported verbatim, including its opposite convention
  CHECK(j["p_a_classical"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("JSON report round-trips: payoffs recomputable from the distribution") {
  Capture c = run_cli("run pd-entangled --theta-a 0.9 --phi-a 0.4 --theta-b 2.1 --psi-b -0.3");
  REQUIRE(c.exit_code == 0);
  json j = json::parse(c.out);
  double ea = 0.0, eb = 0.0;
  for (const auto& row : j["payoff_distribution"]) {
    ea += row["payoff"][0].get<double>() * row["probability"].get<double>();
    eb += row["payoff"][1].get<double>() * row["probability"].get<double>();
  }
  CHECK(std::abs(ea - j["expected_payoffs"][0].get<double>()) < 1e-12);
  CHECK(std::abs(eb - j["expected_payoffs"][1].get<double>()) < 1e-12);
}

TEST_CASE("sweep endpoints: theta_a from 0 to pi at gamma=0 moves (3,3) -> (5,0)") {
  Capture c = run_cli(
      "sweep pd-quantum --gamma 0 --param theta_a --lo 0 --hi 3.141592653589793 "
      "--steps 3 --format json");
  REQUIRE(c.exit_code == 0);
  json j = json::parse(c.out);
  auto& rows = j["rows"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["payoff_a"].get<double>() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(rows[2]["payoff_a"].get<double>() == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(std::abs(rows[2]["payoff_b"].get<double>()) < 1e-12);
}

TEST_CASE("sweep gamma with X strategies keeps payoffs at (1,1)") {
  Capture c = run_cli(
      "sweep pd-quantum --a X --b X --param gamma --lo 0 --hi 1.5707963267948966 "
      "--steps 6 --format json");
  REQUIRE(c.exit_code == 0);
  json j = json::parse(c.out);
  for (const auto& row : j["rows"]) {
    CHECK(row["payoff_a"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(row["payoff_b"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("CSV sweeps are byte-identical across runs") {
  const char* args =
      "sweep zerosum --param theta_a --lo 0 --hi 3.141592653589793 --steps 11 --format csv";
  Capture a = run_cli(args), b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK_FALSE(a.out.empty());
  CHECK(a.out == b.out);
}

TEST_CASE("sample: seeded, concentrated, reproducible") {
  Capture a = run_cli("sample pd-entangled --a I --b I --shots 10000 --seed 11 --format json");
  REQUIRE(a.exit_code == 0);
  json j = json::parse(a.out);
  for (const auto& row : j["outcomes"]) {
    double exact = row["exact_probability"].get<double>();
    double freq = row["empirical_frequency"].get<double>();
    CHECK(exact == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(freq - exact) < 0.02);
  }
  Capture b = run_cli("sample pd-entangled --a I --b I --shots 10000 --seed 11 --format json");
  CHECK(a.out == b.out);

  Capture one = run_cli("sample pd-quantum --theta-a 1.1 --shots 1 --seed 3 --format json");
  REQUIRE(one.exit_code == 0);
  long long total = 0;
  json jo = json::parse(one.out);
  for (const auto& row : jo["outcomes"]) total += row["count"].get<long long>();
  CHECK(total == 1);
}

TEST_CASE("usage and domain error exit codes") {
  CHECK(run_cli("run pd-quantum --no-such-flag 1").exit_code == 2);
  CHECK(run_cli("sample pd-quantum --shots 10").exit_code == 2);  // seed is mandatory
  CHECK(run_cli("sweep pd-quantum --param theta_a --lo 0 --hi 1 --steps 1").exit_code == 2);
  CHECK(run_cli("run pd-quantum --theta-a 9").exit_code == 1);
  CHECK(run_cli("run no-such-game").exit_code == 1);
}

TEST_CASE("payoff table override file") {
  std::string path = "cli_test_table.json";
  {
    std::ofstream f(path);
    f << R"({"CC": [10, 10], "CD": [0, 12], "DC": [12, 0], "DD": [2, 2]})";
  }
  Capture c = run_cli("run pd-quantum --gamma 0 --theta-a 0 --theta-b 0 --table " + path);
  std::remove(path.c_str());
  REQUIRE(c.exit_code == 0);
  json j = json::parse(c.out);
  CHECK(j["expected_payoffs"][0].get<double>() == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("verify-paper passes on a fresh build") {
  Capture c = run_cli("verify-paper");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("FAIL") == std::string::npos);
  CHECK(c.out.find("0.75") != std::string::npos);
  CHECK(c.out.find("0.25") != std::string::npos);
}

TEST_CASE("corrupted payoff coding makes the mixing check fail (fault injection)") {
  qgames::PayoffCoding bad = qgames::PayoffCoding::entangled_pd();
  bad.table["11"] = {1, 1};  // (3,3) outcomes now decode as (1,1)
  auto checks = qgames::run_paper_checks(bad);
  bool mixing_failed = false;
  for (const auto& c : checks)
    if (c.name.find("uniform mix") != std::string::npos) mixing_failed = !c.pass;
  CHECK(mixing_failed);
}
