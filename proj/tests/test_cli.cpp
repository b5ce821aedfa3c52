// End-to-end tests against the built `qpg` binary (path injected via the
// QPG_CLI_PATH compile definition).

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QPG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_config(const std::string& name, const json& cfg) {
  const std::string path = std::string("/tmp/qpg_cli_") + name + ".json";
  std::ofstream out(path);
  out << cfg.dump();
  return path;
}

}  // namespace

TEST_CASE("payoff-table reproduces the classical n=3 rows") {
  const std::string cfg = write_config("table", {{"n", 3}, {"a", 2.0}});
  const RunResult r = run_cli("payoff-table --config " + cfg);
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["subcommand"] == "payoff-table");
  REQUIRE(report["rows"].size() == 8);
  CHECK(report["rows"][0]["bits"] == "000");
  for (double p : report["rows"][0]["payoffs"]) CHECK(p == doctest::Approx(2.0));
  CHECK(report["rows"][7]["bits"] == "111");
  for (double p : report["rows"][7]["payoffs"]) CHECK(p == doctest::Approx(1.0));
  // 011: player 0 cooperates alone, payoff a/3; the defectors keep their coin.
  const auto& row = report["rows"][3];
  CHECK(row["bits"] == "011");
  CHECK(row["payoffs"][0] == doctest::Approx(2.0 / 3));
  CHECK(row["payoffs"][1] == doctest::Approx(2.0 / 3 + 1));
  CHECK(row["payoffs"][2] == doctest::Approx(2.0 / 3 + 1));
}

TEST_CASE("simulate with the paper mixture matches the closed form") {
  const std::string cfg = write_config(
      "simulate", {{"n", 4},
                   {"a", 2.0},
                   {"scheme", "all_pairs"},
                   {"interpretation", "all_or_none"},
                   {"strategy", {{"type", "paper_mixture"}}}});
  const RunResult r = run_cli("simulate --config " + cfg);
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["method"] == "exact");
  for (double v : report["expected"]) CHECK(v == doctest::Approx((1 + 7 * 2.0) / 8));
}

TEST_CASE("simulate with bits strategy reproduces classical payoffs") {
  const std::string cfg = write_config(
      "bits", {{"n", 3},
               {"a", 2.0},
               {"strategy", {{"type", "bits"}, {"bits", {0, 1, 1}}}}});
  const RunResult r = run_cli("simulate --config " + cfg + " --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("player,expected") == 0);
  CHECK(r.out.find("0,0.66666666666666") != std::string::npos);
}

TEST_CASE("Monte Carlo runs are seed-deterministic and byte-identical") {
  const std::string cfg = write_config(
      "mc", {{"n", 3},
             {"a", 2.0},
             {"scheme", "neighbor_ring"},
             {"interpretation", "all_or_none"},
             {"strategy", {{"type", "paper_mixture"}}},
             {"method", {{"type", "mc"}, {"samples", 20000}}}});
  const RunResult r1 = run_cli("simulate --config " + cfg + " --seed 42");
  const RunResult r2 = run_cli("simulate --config " + cfg + " --seed 42");
  const RunResult r3 = run_cli("simulate --config " + cfg + " --seed 43");
  REQUIRE(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out != r3.out);
  const json report = json::parse(r1.out);
  CHECK(report["method"] == "mc");
  CHECK(report["samples"] == 20000);
  CHECK(report["seed"] == 42);
  for (double v : report["expected"])
    CHECK(v == doctest::Approx((1 + 3 * 2.0) / 4).epsilon(0.05));
}

TEST_CASE("equilibrium reports the closed form and a tiny deviation bound") {
  const std::string cfg = write_config(
      "eq", {{"n", 3},
             {"a", 2.0},
             {"scheme", "full"},
             {"interpretation", "direct"},
             {"grid", 5},
             {"random_samples", 20}});
  const RunResult r = run_cli("equilibrium --config " + cfg);
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["closed_form"] == doctest::Approx(1.5));
  CHECK(report["baseline"] == doctest::Approx(1.5));
  CHECK(report["max_abs_deviation"].get<double>() < 1e-9);
}

TEST_CASE("plan emits the heterogeneous contribution schedule") {
  const std::string cfg =
      write_config("plan", {{"n", 3}, {"a", 2.0}, {"endowments", {1.0, 1.0, 6.0}}});
  const RunResult r = run_cli("plan --config " + cfg);
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["cutoff"] == doctest::Approx(4.0));
  CHECK(report["voluntary"] == true);
  CHECK(report["contributions"][2] == doctest::Approx(4.0));
}

TEST_CASE("cost subcommand evaluates expected trial counts") {
  const std::string cfg =
      write_config("cost", {{"scheme", "full"}, {"n", 4}, {"beta", 0.5}});
  const RunResult r = run_cli("cost --config " + cfg + " --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("full,4,0.5,16") != std::string::npos);
}

TEST_CASE("validation failures exit with code 2") {
  const std::string bad_a = write_config("bad_a", {{"n", 3}, {"a", -1.0}});
  CHECK(run_cli("payoff-table --config " + bad_a).exit_code == 2);

  const std::string bad_combo = write_config(
      "bad_combo", {{"n", 3},
                    {"a", 2.0},
                    {"scheme", "all_pairs"},
                    {"interpretation", "direct"},
                    {"strategy", {{"type", "paper_mixture"}}}});
  CHECK(run_cli("simulate --config " + bad_combo).exit_code == 2);

  CHECK(run_cli("simulate --config /nonexistent.json").exit_code == 2);
  CHECK(run_cli("payoff-table").exit_code == 2);  // missing --config
}

TEST_CASE("capacity refusals exit with code 3") {
  const std::string cfg = write_config(
      "caps", {{"n", 3},
               {"a", 2.0},
               {"scheme", "all_pairs"},
               {"interpretation", "all_or_none"},
               {"strategy", {{"type", "paper_mixture"}}}});
  CHECK(run_cli("simulate --config " + cfg + " --caps 1024,4").exit_code == 3);
}
