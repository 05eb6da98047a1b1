#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uarnc/cli.hpp"
#include "uarnc/results_io.hpp"

using namespace uarnc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "uarnc_cli_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

const char* kSmall = R"({
  "scenario": {"k": 6, "seed": 3},
  "radio": {"sigma2_db": -145},
  "pso": {"sizepop": 6, "maxg": 4, "fitness_runs": 20},
  "monte_carlo": {"runs": 40},
  "grid_step": 250
})";

// scheme,L,T,K,runs,seed per row: the stable part of a preset table
std::string key_columns(const std::string& csv) {
  std::string out;
  for (const auto& r : parse_results_csv(csv))
    out += r.scheme + "," + std::to_string(r.layers) + "," + std::to_string(r.slots) + "," +
           std::to_string(r.users) + "," + std::to_string(r.runs) + "," + std::to_string(r.seed) + "\n";
  return out;
}

}  // namespace

TEST_CASE("simulate writes one row plus the resolved config") {
  const auto cfg = write_config("sim.json", kSmall);
  const auto out = scratch() / "sim.csv";
  const auto r = run({"simulate", "--config", cfg.string(), "--scheme", "uarnc", "--seed", "42",
                      "--out", out.string()});
  REQUIRE(r.code == 0);
  const auto table = parse_results_csv(slurp(out));
  REQUIRE(table.size() == 1);
  CHECK(table[0].scheme == "uarnc");
  CHECK(table[0].seed == 42);
  CHECK(table[0].runs == 40);
  const auto echo = nlohmann::json::parse(slurp(out.string() + ".config.json"));
  CHECK(echo["monte_carlo"]["master_seed"] == 42);
  CHECK(echo["radio"]["sigma2_db"] == -145);

  // global flags may precede the subcommand; stdout when --out is absent
  const auto j = run({"--config", cfg.string(), "--format", "json", "--runs", "5", "simulate", "--scheme", "rrs", "--qx", "100"});
  REQUIRE(j.code == 0);
  const auto rows = nlohmann::json::parse(j.out)["rows"];
  CHECK(rows[0]["scheme"] == "rrs");
  CHECK(rows[0]["qx"] == 100);
  CHECK(rows[0]["runs"] == 5);
}

TEST_CASE("place: pso reaches 98% of the grid optimum on the same streams") {
  const auto cfg = write_config("place.json", R"({
    "scenario": {"layout": "clusters", "clusters": [{"center": [250, 250], "sigma": 40, "count": 4},
                                                     {"center": [200, -150], "sigma": 40, "count": 3}]},
    "radio": {"sigma2_db": -140}, "coding": {"L": 3, "T": 6},
    "pso": {"sizepop": 15, "maxg": 20, "fitness_runs": 100}
  })");
  const auto grid_out = scratch() / "grid.csv";
  const auto pso_out = scratch() / "pso.csv";
  REQUIRE(run({"place", "--config", cfg.string(), "--method", "grid", "--grid-step", "50", "--seed", "5", "--out", grid_out.string()}).code == 0);
  REQUIRE(run({"place", "--config", cfg.string(), "--method", "pso", "--seed", "5", "--out", pso_out.string()}).code == 0);
  const auto grid = nlohmann::json::parse(slurp(grid_out.string() + ".placement.json"));
  const auto pso = nlohmann::json::parse(slurp(pso_out.string() + ".placement.json"));
  CHECK(pso["fitness"].get<double>() >= 0.98 * grid["fitness"].get<double>());
  CHECK(pso["iterations"] == 20);
  double previous = -1;
  for (const auto& t : pso["trace"]) {
    CHECK(t["gbest_fit"].get<double>() >= previous);
    previous = t["gbest_fit"].get<double>();
  }
}

TEST_CASE("sweep") {
  const auto cfg = write_config("sweep.json", kSmall);
  const auto r = run({"sweep", "--config", cfg.string(), "--param", "T", "--values", "4..6", "--schemes", "uarnc,rnc"});
  REQUIRE(r.code == 0);
  const auto table = parse_results_csv(r.out);
  REQUIRE(table.size() == 6);
  CHECK(table[2].slots == 5);
  CHECK(table[3].scheme == "rnc");

  const auto bad = run({"sweep", "--config", cfg.string(), "--param", "T", "--values", "2,3"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("T ≥ L") != std::string::npos);

  const auto out = scratch() / "swp.csv";
  REQUIRE(run({"sweep", "--config", cfg.string(), "--param", "L", "--values", "1,2", "--placement", "pso", "--out", out.string()}).code == 0);
  const auto placements = nlohmann::json::parse(slurp(out.string() + ".placements.json"));
  CHECK(placements.size() == 2);
  CHECK(placements[0]["method"] == "pso");
}

TEST_CASE("preset fig4 matches the golden schema") {
  const auto cfg = write_config("fig4.json", kSmall);
  const auto r = run({"preset", "fig4", "--config", cfg.string(), "--seed", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind(std::string(kResultsHeader) + "\n", 0) == 0);
  CHECK(key_columns(r.out) == slurp(fs::path(UARNC_SOURCE_DIR) / "tests/golden/fig4_keys.csv"));
}

TEST_CASE("presets are identical under 1, 4 and 8 workers") {
  const auto cfg = write_config("det.json", kSmall);
  for (const char* preset : {"fig2-uniform", "fig2-clustered", "fig3", "fig4"}) {
    const auto a = run({"preset", preset, "--config", cfg.string(), "--threads", "1"});
    const auto b = run({"preset", preset, "--config", cfg.string(), "--threads", "4"});
    const auto c = run({"preset", preset, "--config", cfg.string(), "--threads", "8"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"fly"}).code == 1);
  CHECK(run({"simulate", "--scheme", "tcp"}).code == 1);
  CHECK(run({"simulate", "--config", "/nonexistent.json"}).code == 1);
  CHECK(run({"preset", "fig9"}).code == 1);
  const auto strict = write_config("strict.json", R"({"radio": {"sigma2_db": -120},
    "fairness": {"l_min": 4, "p_th": 0.9999}, "pso": {"sizepop": 2, "maxg": 2}})");
  const auto r = run({"place", "--config", strict.string(), "--method", "pso"});
  CHECK(r.code == 2);
  CHECK(run({"place", "--config", strict.string(), "--method", "grid"}).code == 2);
  const auto bad_cfg = write_config("bad.json", R"({"coding": {"L": 6, "T": 5}})");
  const auto v = run({"simulate", "--config", bad_cfg.string()});
  CHECK(v.code == 1);
  CHECK(v.err.find("Deadline T (T ≥ L)") != std::string::npos);
  const auto io = run({"simulate", "--runs", "2", "--out", "/nonexistent/dir/x.csv"});
  CHECK(io.code == 1);
  CHECK(io.err.find("/nonexistent/dir/x.csv") != std::string::npos);
}
